// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "treebal/builders.hpp"
#include "treebal/census.hpp"
#include "treebal/counts.hpp"
#include "treebal/indices.hpp"
#include "treebal/minima.hpp"

using namespace treebal;

namespace {

// Empty on success, otherwise the first problem found.
using Check = std::function<std::string()>;

template <typename... Parts>
std::string fail(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

bool same_shape(const TreeShape& a, const TreeShape& b) {
  return canonical_key(a) == canonical_key(b);
}

bool fully_balanced_shape(const TreeShape& t) {
  const std::uint64_t n = t.leaf_count();
  return (n & (n - 1)) == 0 && colless(t) == 0;
}

std::string formula_agreement() {
  for (std::uint64_t n = 1; n <= 65536; ++n) {
    if (min_colless_recursive(n) != min_colless_explicit(n)) {
      return fail("n=", n, ": ", min_colless_recursive(n), " vs ", min_colless_explicit(n));
    }
  }
  return "";
}

std::string point_values() {
  if (min_colless_recursive(6) != 2 || min_colless_explicit(6) != 2) return "c_6";
  if (min_colless_recursive(23) != 10 || min_colless_explicit(23) != 10) return "c_23";
  if (min_colless_recursive(24) != 8 || min_colless_explicit(24) != 8) return "c_24";
  if (colless(caterpillar(7)) != 15) return "caterpillar(7)";
  if (colless(maximally_balanced(7)) != 2) return "maximally_balanced(7)";
  if (colless(fully_balanced(3)) != 0) return "fully_balanced(3)";
  return "";
}

std::string sequences() {
  const int c[] = {1, 1, 1, 1, 1, 2, 1, 1, 1, 3, 3, 4, 3, 3, 1, 1,
                   1, 4, 6, 10, 16, 21, 13, 11, 13, 21, 16, 10, 6, 4, 1, 1};
  const int b[] = {1, 1, 1, 1, 1, 2, 1, 1, 1, 3, 3, 4, 3, 3, 1, 1,
                   1, 4, 6, 10, 16, 21, 25, 20, 25, 21, 16, 10, 6, 4, 1, 1};
  for (std::uint64_t n = 1; n <= 32; ++n) {
    if (count_colless_minimal(n) != c[n - 1]) {
      return fail("colless n=", n, ": ", count_colless_minimal(n));
    }
    if (count_bound_b(n) != b[n - 1]) return fail("bound n=", n, ": ", count_bound_b(n));
  }
  return "";
}

std::string oracle_equivalence() {
  for (std::uint32_t n = 1; n <= 16; ++n) {
    const CensusResult r = census(n, false, 16);
    if (r.total_shapes != wedderburn_etherington(n)) return fail("shape count n=", n);
    if (r.colless_min_value != min_colless_recursive(n)) return fail("(a) n=", n);
    if (r.colless_min_count != count_colless_minimal(n)) return fail("(b) n=", n);
    if (r.sackin_min_count != count_sackin_minimal(n)) return fail("(c) n=", n);
    if (r.colless_not_sackin != 0 || r.max_sackin_of_colless_min != r.sackin_min_value) {
      return fail("(d) n=", n);
    }
    if (r.colless_min_odd_odd != 0) return fail("(e) n=", n);
  }
  return "";
}

std::string construction_minimality() {
  for (std::uint32_t n = 1; n <= 4096; ++n) {
    const std::uint64_t c = min_colless_recursive(n);
    if (colless(gfb(n)) != c) return fail("gfb n=", n);
    if (colless(maximally_balanced(n)) != c) return fail("mb n=", n);
  }
  return "";
}

std::string gfb_structure() {
  for (std::uint32_t n = 2; n <= 512; ++n) {
    const auto [a, b] = decompose(gfb(n));
    const std::pair<std::uint64_t, std::uint64_t> got{a.leaf_count(), b.leaf_count()};
    if (got != gfb_root_partition(n)) return fail("root partition n=", n);

    const unsigned k = ceil_log2(n);
    const std::uint64_t four_n = 4ull * n, three_full = 3ull << k;
    const bool designated_ok = four_n < three_full    ? fully_balanced_shape(b)
                               : four_n == three_full ? fully_balanced_shape(a) &&
                                                            fully_balanced_shape(b)
                                                      : fully_balanced_shape(a);
    if (!designated_ok) return fail("designated subtree n=", n);
    if (!same_shape(a, gfb(a.leaf_count())) || !same_shape(b, gfb(b.leaf_count()))) {
      return fail("pending subtrees n=", n);
    }
    if (n >= 3 && four_n != three_full) {
      const TreeShape common = fully_balanced(four_n < three_full ? k - 2 : k - 1);
      for (std::uint32_t m : {n - 1, n, n + 1}) {
        const auto [x, y] = decompose(gfb(m));
        if (!same_shape(x, common) && !same_shape(y, common)) {
          return fail("common subtree n=", n, " m=", m);
        }
      }
    }
  }
  return "";
}

std::string bound_property() {
  for (std::uint64_t n = 3; n <= 65536; ++n) {
    if (min_colless_explicit(n) >= max_min_bound(n)) return fail("bound n=", n);
  }
  for (unsigned k = 2; k <= 12; ++k) {
    if (!cn_properties_check(k)) return fail("powers of two k=", k);
  }
  for (std::uint64_t n = 3; n <= 4096; n += 2) {
    if (n - 1 <= (std::uint64_t{1} << (ceil_log2(n) - 1))) continue;
    if (!fi_identity_check(n)) return fail("f_i identity n=", n);
  }
  return "";
}

std::string zero_colless_uniqueness() {
  for (unsigned k = 0; k <= 4; ++k) {
    const CensusResult r = census(1u << k, true, 16);
    if (r.colless_min_value != 0 || r.colless_min_count != 1 ||
        !same_shape(r.colless_min_shapes.front(), fully_balanced(k))) {
      return fail("enumeration k=", k);
    }
  }
  for (unsigned k = 0; k <= 10; ++k) {
    if (count_colless_minimal(std::uint64_t{1} << k) != 1) return fail("count k=", k);
  }
  return "";
}

std::string example_trees() {
  const TreeShape t1 = TreeShape::internal(gfb(6), maximally_balanced(6));
  const TreeShape t2 = TreeShape::internal(maximally_balanced(7), maximally_balanced(5));
  const TreeShape t23 = TreeShape::internal(t2, maximally_balanced(11));
  if (colless(t1) != 4 || min_colless_recursive(12) != 4 || !is_colless_minimal(t1)) {
    return "T1 Colless";
  }
  if (colless(t2) != 6 || is_colless_minimal(t2)) return "T2 Colless";
  if (sackin(t1) != 44 || sackin(t2) != 44) return "T1/T2 Sackin";
  if (!is_sackin_minimal(t1) || !is_sackin_minimal(t2) || min_sackin_value(12) != 44) {
    return "T1/T2 Sackin-minimal";
  }
  const auto [a, b] = decompose(t23);
  if (a.leaf_count() != 12 || b.leaf_count() != 11) return "23-leaf split";
  const auto [x, y] = decompose(a);
  if (x.leaf_count() != 7 || y.leaf_count() != 5) return "23-leaf inner split";
  if (colless(t23) != 12 || min_colless_recursive(23) != 10 || is_colless_minimal(t23)) {
    return "23-leaf Colless";
  }
  return "";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Check check;
    double budget_seconds;  // 0 means no runtime bound
  };
  const std::vector<Criterion> criteria = {
      {1, "recursive and explicit c_n agree for n <= 65536", formula_agreement, 1.0},
      {2, "point values", point_values, 0},
      {3, "counting sequences n = 1..32", sequences, 1.0},
      {4, "enumeration oracle for n <= 16", oracle_equivalence, 60.0},
      {5, "gfb and mb are Colless-minimal for n <= 4096", construction_minimality, 10.0},
      {6, "gfb structure for n <= 512", gfb_structure, 0},
      {7, "upper bound, power-of-two identities, f_i identity", bound_property, 0},
      {8, "zero Colless only for the fully balanced tree", zero_colless_uniqueness, 0},
      {9, "12- and 23-leaf example trees", example_trees, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      problem = fail("took ", seconds, " s, budget ", c.budget_seconds, " s");
    }
    const bool ok = problem.empty();
    failures += ok ? 0 : 1;
    std::printf("criterion %d: %s  %s (%.3f s)%s%s\n", c.id, ok ? "PASS" : "FAIL", c.name,
                seconds, ok ? "" : ": ", problem.c_str());
  }
  return failures == 0 ? 0 : 1;
}
