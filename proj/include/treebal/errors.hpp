#ifndef TREEBAL_ERRORS_HPP_
#define TREEBAL_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treebal {

// Argument outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed Newick text. offset() is the byte offset of the offending
// character (or the input length when the text ended early).
class NewickError : public InvalidInput {
 public:
  NewickError(const std::string& what, std::size_t offset)
      : InvalidInput(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Requested enumeration exceeds the configured size guard.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace treebal

#endif  // TREEBAL_ERRORS_HPP_
