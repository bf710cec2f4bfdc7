// The minimal Colless value c_n over all n-leaf shapes, and related
// quantities.
//
// c_n is available through two independent routes:
//
//   * the recursion c_1 = c_2 = 0, c_{2m} = 2 c_m, c_{2m+1} = c_{m+1} + c_m + 1
//     (min_colless_recursive, memoized in a MinimaTable);
//   * the closed form c_n = sum_{i=0}^{k_n-2} s(2^{i-k_n+1} n) / 2^{i-k_n+1},
//     where s is the distance to the nearest integer and k_n = ceil(log2 n).
//     Writing m = k_n - 1 - i, each term equals
//     min(n mod 2^m, 2^m - n mod 2^m), which min_colless_explicit sums in
//     plain integers. fi_term() evaluates the same terms with exact dyadic
//     arithmetic.
//
// Nothing here uses floating point.

#ifndef TREEBAL_MINIMA_HPP_
#define TREEBAL_MINIMA_HPP_

#include <cstdint>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treebal/dyadic.hpp"

namespace treebal {

using Partition = std::pair<std::uint64_t, std::uint64_t>;

// ceil(log2 n) for n >= 1; k_1 = 0.
unsigned ceil_log2(std::uint64_t n);

// Memo tables for c_n and the minimal Sackin value. Safe to share between
// threads: lookups take a shared lock, inserts an exclusive one, and every
// caller observes the same values as a sequential evaluation.
class MinimaTable {
 public:
  std::uint64_t min_colless(std::uint64_t n);
  // Sackin index of the maximally balanced tree:
  // S(1) = 0, S(n) = n + S(ceil(n/2)) + S(floor(n/2)).
  std::uint64_t min_sackin(std::uint64_t n);
  // Root partitions (n_a, n_b), n_a >= n_b >= 1, of Colless-minimal shapes,
  // in decreasing n_a order.
  std::vector<Partition> qb(std::uint64_t n);

  // Process-wide table used by the free functions below.
  static MinimaTable& shared();

 private:
  template <typename Compute>
  std::uint64_t memoized(std::unordered_map<std::uint64_t, std::uint64_t>& memo,
                         std::uint64_t n, Compute compute);

  std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, std::uint64_t> colless_;
  std::unordered_map<std::uint64_t, std::uint64_t> sackin_;
};

std::uint64_t min_colless_recursive(std::uint64_t n);
std::uint64_t min_colless_explicit(std::uint64_t n);

// f_i(n) = s(2^{i-k+1} n) / 2^{i-k+1} with k = k_n unless given.
DyadicRational fi_term(std::uint64_t n, unsigned i, unsigned k);
DyadicRational fi_term(std::uint64_t n, unsigned i);

// Upper bound 2^{k_n - 1} on c_n; n >= 2 (the bound is not an integer at
// n = 1).
std::uint64_t max_min_bound(std::uint64_t n);

// c_{2^k+1} = k, c_{2^k-1} = k-1 and c_{2^{k-1}+j} = c_{2^k-j} for
// 1 <= j < 2^{k-1}. k >= 2.
bool cn_properties_check(unsigned k);

// f_i(n+1) + f_i(n-1) = 2 f_i(n) for 0 <= i <= k_n - 3. Requires n odd and
// 2^{k_n-1} + 1 < n < 2^{k_n}; throws InvalidInput otherwise.
bool fi_identity_check(std::uint64_t n);

std::vector<Partition> qb_set(std::uint64_t n);

// Necessary conditions for (n_a, n_b) to be the root partition of a
// Colless-minimal shape: n_b lies between the GFB and maximally balanced
// splits, and the two sides are not distinct odd numbers.
bool partition_necessary_ok(std::uint64_t n, std::uint64_t n_a,
                            std::uint64_t n_b);

std::uint64_t min_sackin_value(std::uint64_t n);

// Largest root imbalance n_a - n_b among Colless-minimal shapes, which is the
// imbalance of the GFB root partition.
std::uint64_t max_root_imbalance(std::uint64_t n);

// Largest root imbalance allowed for Sackin-minimal shapes:
// min(n - 2^{k_n-1}, 2^{k_n} - n).
std::uint64_t sackin_imbalance_bound(std::uint64_t n);

}  // namespace treebal

#endif  // TREEBAL_MINIMA_HPP_
