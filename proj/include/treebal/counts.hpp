// Numbers of minimal shapes, by recursion over root partitions.
//
//   c~(n)  Colless-minimal shapes: sum over (n_a, n_b) in QB(n), n_a > n_b, of
//          c~(n_a) c~(n_b), plus binom(c~(n/2) + 1, 2) for even n.
//   s~(n)  Sackin-minimal shapes: the same sum over partitions with
//          n_a - n_b <= min(n - 2^{k_n-1}, 2^{k_n} - n).
//   b~(n)  the s~ recursion with distinct odd/odd partitions left out; an
//          upper bound for c~(n).
//
// count_sackin_minimal_stated() evaluates s~ a second way, summing only over
// partitions whose sides both have ceil(log2) = k_n - 1 and adding the
// partition (n - 2^{k_n-2}, 2^{k_n-2}) separately when it is admissible
// (n <= 3 * 2^{k_n-2}).

#ifndef TREEBAL_COUNTS_HPP_
#define TREEBAL_COUNTS_HPP_

#include <cstdint>
#include <mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treebal/minima.hpp"

namespace treebal {

using BigCount = boost::multiprecision::cpp_int;

// Memoized counts; thread-safe. Tables grow on demand up to the largest n
// requested so far.
class CountTable {
 public:
  explicit CountTable(MinimaTable& minima = MinimaTable::shared())
      : minima_(minima) {}

  BigCount colless_minimal(std::uint64_t n);
  BigCount sackin_minimal(std::uint64_t n);
  BigCount sackin_minimal_stated(std::uint64_t n);
  BigCount bound_b(std::uint64_t n);

  static CountTable& shared();

 private:
  void grow(std::uint64_t n);

  MinimaTable& minima_;
  std::mutex mutex_;
  // Index 0 unused.
  std::vector<BigCount> colless_{0};
  std::vector<BigCount> sackin_{0};
  std::vector<BigCount> stated_{0};
  std::vector<BigCount> bound_{0};
};

BigCount count_colless_minimal(std::uint64_t n);
BigCount count_sackin_minimal(std::uint64_t n);
BigCount count_sackin_minimal_stated(std::uint64_t n);
BigCount count_bound_b(std::uint64_t n);

// binom(x + 1, 2): unordered pairs, with repetition, from x choices.
BigCount pairs_with_repetition(const BigCount& x);

}  // namespace treebal

#endif  // TREEBAL_COUNTS_HPP_
