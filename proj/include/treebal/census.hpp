// Exhaustive enumeration of shapes and minimality predicates.
//
// Enumeration is the brute-force oracle for everything else in the library:
// it does not consult any formula for c_n, the minimal Sackin value or the
// counting recursions when computing its minima and counts.

#ifndef TREEBAL_CENSUS_HPP_
#define TREEBAL_CENSUS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "treebal/counts.hpp"
#include "treebal/minima.hpp"
#include "treebal/tree_shape.hpp"

namespace treebal {

inline constexpr std::uint32_t kDefaultEnumerationLimit = 24;

// kDefaultEnumerationLimit unless TREEBAL_ENUM_LIMIT holds a positive integer.
std::uint32_t enumeration_limit();

// All canonical shapes with up to max_leaves leaves, stored compactly: a shape
// on m >= 2 leaves is a pair of indices into the lists for n_a and n_b.
// Each list is in ascending shape_order.
class ShapeCatalog {
 public:
  struct Entry {
    std::uint32_t first;   // index into the list for the larger side
    std::uint32_t second;  // index into the list for the smaller side
    std::uint32_t first_size;
  };

  explicit ShapeCatalog(std::uint32_t max_leaves);

  std::uint32_t max_leaves() const { return max_leaves_; }
  std::size_t count(std::uint32_t m) const;
  const Entry& entry(std::uint32_t m, std::size_t index) const {
    return lists_[m][index];
  }
  TreeShape materialize(std::uint32_t m, std::size_t index) const;

 private:
  std::uint32_t max_leaves_;
  std::vector<std::vector<Entry>> lists_;
};

// Calls visit once per canonical shape on n leaves, in ascending
// shape_order. Throws SizeLimitError when n exceeds limit.
void for_each_shape(std::uint32_t n,
                    const std::function<void(const TreeShape&)>& visit,
                    std::uint32_t limit = enumeration_limit());
std::vector<TreeShape> enumerate_shapes(std::uint32_t n,
                                        std::uint32_t limit = enumeration_limit());

// Number of shapes on n leaves (Wedderburn-Etherington numbers), from
// W(1) = 1 and the pairing recurrence over n_a > n_b plus binom(W(n/2)+1, 2).
BigCount wedderburn_etherington(std::uint64_t n);

// Recursive characterization: n <= 2, or both subtrees Sackin-minimal and
// n_a - n_b <= min(n - 2^{k_n-1}, 2^{k_n} - n).
bool is_sackin_minimal(const TreeShape& shape);

// colless(shape) == c_n.
bool is_colless_minimal(const TreeShape& shape);

struct CensusResult {
  std::uint32_t n = 0;
  BigCount total_shapes = 0;

  // Minima and counts taken directly from the enumerated values.
  std::uint64_t colless_min_value = 0;
  BigCount colless_min_count = 0;
  std::uint64_t sackin_min_value = 0;
  BigCount sackin_min_count = 0;
  // Largest Sackin value among shapes attaining colless_min_value.
  std::uint64_t max_sackin_of_colless_min = 0;

  // Tallies of the predicates is_colless_minimal / is_sackin_minimal.
  BigCount colless_predicate_count = 0;
  BigCount sackin_predicate_count = 0;
  // Largest Sackin value among shapes accepted by is_sackin_minimal.
  std::uint64_t max_sackin_of_sackin_predicate = 0;

  // Root partitions of predicate-minimal shapes.
  std::set<Partition> colless_min_partitions;
  std::set<Partition> sackin_min_partitions;

  // Shapes with is_colless_minimal but not is_sackin_minimal. Always zero if
  // Colless-minimal implies Sackin-minimal.
  BigCount colless_not_sackin = 0;
  // Colless-minimal shapes whose root splits into two distinct odd sizes.
  BigCount colless_min_odd_odd = 0;
  // Sackin-minimal shapes whose root splits into two distinct odd sizes.
  BigCount sackin_min_odd_odd = 0;
  // Colless-minimal shapes with root imbalance above max_root_imbalance(n).
  BigCount colless_min_beyond_gfb = 0;

  // Canonical shapes attaining each minimum, in ascending shape_order;
  // filled only when requested.
  std::vector<TreeShape> colless_min_shapes;
  std::vector<TreeShape> sackin_min_shapes;
};

// Throws SizeLimitError when n exceeds limit. Top-level partitions are
// processed concurrently when threads > 1; results do not depend on it.
CensusResult census(std::uint32_t n, bool keep_representatives,
                    std::uint32_t limit = enumeration_limit(),
                    unsigned threads = 0);

}  // namespace treebal

#endif  // TREEBAL_CENSUS_HPP_
