#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "treebal/builders.hpp"
#include "treebal/census.hpp"
#include "treebal/counts.hpp"
#include "treebal/indices.hpp"
#include "treebal/minima.hpp"

namespace treebal::cli {

namespace {

using Failure = std::optional<std::string>;

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

bool same_shape(const TreeShape& a, const TreeShape& b) {
  return canonical_key(a) == canonical_key(b);
}

bool is_fully_balanced(const TreeShape& t) {
  const std::uint64_t n = t.leaf_count();
  return (n & (n - 1)) == 0 && colless(t) == 0;
}

// 4n compared with 3 * 2^k_n: negative below the midpoint of (2^{k-1}, 2^k].
int midpoint_side(std::uint64_t n) {
  const std::uint64_t lhs = 4 * n, rhs = 3 * (std::uint64_t{1} << ceil_log2(n));
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

const std::vector<int> kCollessCounts = {1,  1,  1,  1,  1,  2,  1,  1,  1,  3,  3,
                                         4,  3,  3,  1,  1,  1,  4,  6,  10, 16, 21,
                                         13, 11, 13, 21, 16, 10, 6,  4,  1,  1};
const std::vector<int> kBoundCounts = {1,  1,  1,  1,  1,  2,  1,  1,  1,  3,  3,
                                       4,  3,  3,  1,  1,  1,  4,  6,  10, 16, 21,
                                       25, 20, 25, 21, 16, 10, 6,  4,  1,  1};

}  // namespace

std::vector<CheckOutcome> run_verification(const VerifyOptions& options) {
  const std::uint64_t F = options.max_n_formula;
  const std::uint32_t E = options.max_n_enum;
  const std::uint32_t limit =
      options.enum_limit ? options.enum_limit : enumeration_limit();
  const std::uint32_t structural = static_cast<std::uint32_t>(std::min<std::uint64_t>(F, 512));

  std::vector<CensusResult> censuses(E + 1);
  for (std::uint32_t n = 1; n <= E; ++n) {
    const bool power_of_two = (n & (n - 1)) == 0;
    censuses[n] = census(n, power_of_two, limit);
  }

  std::vector<std::pair<std::string, std::function<Failure()>>> checks;
  auto add = [&checks](std::string name, std::function<Failure()> fn) {
    checks.emplace_back(std::move(name), std::move(fn));
  };

  add("recursion and explicit formula agree", [&]() -> Failure {
    for (std::uint64_t n = 1; n <= F; ++n) {
      if (min_colless_recursive(n) != min_colless_explicit(n)) {
        return describe("n=", n, " recursive=", min_colless_recursive(n),
                        " explicit=", min_colless_explicit(n));
      }
    }
    return std::nullopt;
  });
  add("integer form equals exact dyadic sum", [&]() -> Failure {
    for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(F, 10000); ++n) {
      DyadicRational sum(0);
      for (unsigned i = 0; i + 2 <= ceil_log2(n); ++i) sum = sum + fi_term(n, i);
      if (sum != DyadicRational(static_cast<std::int64_t>(min_colless_explicit(n)))) {
        return describe("n=", n, " dyadic=", sum);
      }
    }
    return std::nullopt;
  });
  add("nearest-integer distance is subadditive", [&]() -> Failure {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::int64_t> num(-(1 << 24), 1 << 24);
    std::uniform_int_distribution<std::uint32_t> exp(0, 24);
    for (int t = 0; t < 10000; ++t) {
      const DyadicRational a(num(rng), exp(rng)), b(num(rng), exp(rng)), z(num(rng));
      if (nearest_int_distance(a + b) > nearest_int_distance(a) + nearest_int_distance(b)) {
        return describe("a=", a, " b=", b);
      }
      if (nearest_int_distance(a + z) != nearest_int_distance(a)) {
        return describe("a=", a, " shifted by ", z);
      }
    }
    return std::nullopt;
  });
  add("leading term closed forms", [&]() -> Failure {
    for (std::uint64_t n = 3; n <= std::max<std::uint64_t>(F, 1 << 14); ++n) {
      const std::uint64_t half = std::uint64_t{1} << (ceil_log2(n) - 1);
      const std::uint64_t expected = midpoint_side(n) <= 0 ? n - half : 2 * half - n;
      if (fi_term(n, 0) != DyadicRational(static_cast<std::int64_t>(expected))) {
        return describe("n=", n, " term=", fi_term(n, 0), " expected=", expected);
      }
    }
    return std::nullopt;
  });
  add("c_n < 2^(k_n-1)", [&]() -> Failure {
    for (std::uint64_t n = 3; n <= F; ++n) {
      if (min_colless_explicit(n) >= max_min_bound(n)) return describe("n=", n);
    }
    return std::nullopt;
  });
  add("c_n near powers of two and mirror symmetry", [&]() -> Failure {
    for (unsigned k = 2; k <= 12; ++k) {
      if (!cn_properties_check(k)) return describe("k=", k);
    }
    return std::nullopt;
  });
  add("f_i(n+1) + f_i(n-1) = 2 f_i(n)", [&]() -> Failure {
    for (std::uint64_t n = 7; n <= F; n += 2) {
      if (n - 1 <= (std::uint64_t{1} << (ceil_log2(n) - 1))) continue;
      if (!fi_identity_check(n)) return describe("n=", n);
    }
    return std::nullopt;
  });
  add("maximally balanced tree is Colless-minimal", [&]() -> Failure {
    for (std::uint64_t n = 1; n <= F; ++n) {
      const auto c = colless(maximally_balanced(static_cast<std::uint32_t>(n)));
      if (c != min_colless_recursive(n)) return describe("n=", n, " C=", c);
    }
    return std::nullopt;
  });
  add("GFB tree is Colless-minimal", [&]() -> Failure {
    for (std::uint64_t n = 1; n <= F; ++n) {
      const auto c = colless(gfb(static_cast<std::uint32_t>(n)));
      if (c != min_colless_recursive(n)) return describe("n=", n, " C=", c);
    }
    return std::nullopt;
  });
  add("GFB root partition closed form", [&]() -> Failure {
    for (std::uint32_t n = 2; n <= structural; ++n) {
      const auto [a, b] = decompose(gfb(n));
      const Partition got{a.leaf_count(), b.leaf_count()};
      if (got != gfb_root_partition(n)) {
        return describe("n=", n, " got (", got.first, ",", got.second, ")");
      }
      const int side = midpoint_side(n);
      const bool ok = side < 0   ? is_fully_balanced(b)
                      : side == 0 ? is_fully_balanced(a) && is_fully_balanced(b)
                                  : is_fully_balanced(a);
      if (!ok) return describe("n=", n, " designated subtree not fully balanced");
    }
    return std::nullopt;
  });
  add("GFB pending subtrees are GFB trees", [&]() -> Failure {
    for (std::uint32_t n = 2; n <= structural; ++n) {
      const auto [a, b] = decompose(gfb(n));
      if (!same_shape(a, gfb(a.leaf_count())) || !same_shape(b, gfb(b.leaf_count()))) {
        return describe("n=", n);
      }
    }
    return std::nullopt;
  });
  add("neighbouring GFB trees share a fully balanced subtree", [&]() -> Failure {
    for (std::uint32_t n = 3; n <= structural; ++n) {
      const int side = midpoint_side(n);
      if (side == 0) continue;
      const unsigned k = ceil_log2(n);
      const TreeShape common = fully_balanced(side < 0 ? k - 2 : k - 1);
      for (std::uint32_t m : {n - 1, n, n + 1}) {
        const auto [a, b] = decompose(gfb(m));
        if (!same_shape(a, common) && !same_shape(b, common)) {
          return describe("n=", n, " m=", m);
        }
      }
    }
    return std::nullopt;
  });
  add("zero Colless only for the fully balanced tree", [&]() -> Failure {
    for (std::uint32_t k = 0; (1u << k) <= E; ++k) {
      const CensusResult& r = censuses[1u << k];
      if (r.colless_min_value != 0 || r.colless_min_count != 1 ||
          !same_shape(r.colless_min_shapes.front(), fully_balanced(k))) {
        return describe("k=", k);
      }
    }
    for (unsigned k = 0; k <= 10; ++k) {
      if (count_colless_minimal(std::uint64_t{1} << k) != 1) return describe("count, k=", k);
    }
    return std::nullopt;
  });
  add("enumerated shape counts", [&]() -> Failure {
    for (std::uint32_t n = 1; n <= E; ++n) {
      if (censuses[n].total_shapes != wedderburn_etherington(n)) return describe("n=", n);
    }
    return std::nullopt;
  });
  add("enumerated Colless minimum equals c_n", [&]() -> Failure {
    for (std::uint32_t n = 1; n <= E; ++n) {
      if (censuses[n].colless_min_value != min_colless_explicit(n)) {
        return describe("n=", n, " enumerated=", censuses[n].colless_min_value);
      }
    }
    return std::nullopt;
  });
  add("enumerated Sackin minimum equals S(mb_n)", [&]() -> Failure {
    for (std::uint32_t n = 1; n <= E; ++n) {
      if (censuses[n].sackin_min_value != min_sackin_value(n)) return describe("n=", n);
      if (censuses[n].sackin_predicate_count != censuses[n].sackin_min_count ||
          censuses[n].max_sackin_of_sackin_predicate != censuses[n].sackin_min_value) {
        return describe("n=", n, " recursive Sackin characterization disagrees");
      }
    }
    return std::nullopt;
  });
  add("QB sets match enumerated root partitions", [&]() -> Failure {
    for (std::uint32_t n = 2; n <= E; ++n) {
      const auto qb = qb_set(n);
      if (std::set<Partition>(qb.begin(), qb.end()) != censuses[n].colless_min_partitions) {
        return describe("n=", n);
      }
      for (const auto& [a, b] : qb) {
        if (!partition_necessary_ok(n, a, b)) return describe("n=", n, " (", a, ",", b, ")");
      }
    }
    return std::nullopt;
  });
  add("Colless-minimal implies Sackin-minimal", [&]() -> Failure {
    for (std::uint32_t n = 1; n <= E; ++n) {
      const auto& r = censuses[n];
      if (r.colless_not_sackin != 0 || r.max_sackin_of_colless_min != r.sackin_min_value) {
        return describe("n=", n);
      }
    }
    return std::nullopt;
  });
  add("Colless-minimal count <= Sackin-minimal count", [&]() -> Failure {
    for (std::uint32_t n = 1; n <= E; ++n) {
      if (censuses[n].colless_min_count > censuses[n].sackin_min_count) return describe("n=", n);
    }
    return std::nullopt;
  });
  add("no distinct odd/odd root split is Colless-minimal", [&]() -> Failure {
    for (std::uint32_t n = 1; n <= E; ++n) {
      if (censuses[n].colless_min_odd_odd != 0) return describe("n=", n);
    }
    if (E >= 12 && censuses[12].sackin_min_odd_odd == 0) {
      return std::string("expected a Sackin-minimal odd/odd split at n=12");
    }
    return std::nullopt;
  });
  add("Colless-minimal root imbalance bounded by GFB", [&]() -> Failure {
    for (std::uint32_t n = 1; n <= E; ++n) {
      if (censuses[n].colless_min_beyond_gfb != 0) return describe("n=", n);
    }
    return std::nullopt;
  });
  add("counting recursions match enumeration", [&]() -> Failure {
    for (std::uint32_t n = 1; n <= E; ++n) {
      if (censuses[n].colless_min_count != count_colless_minimal(n)) {
        return describe("Colless n=", n, " enumerated=", censuses[n].colless_min_count,
                        " recursion=", count_colless_minimal(n));
      }
      if (censuses[n].sackin_min_count != count_sackin_minimal(n)) {
        return describe("Sackin n=", n, " enumerated=", censuses[n].sackin_min_count,
                        " recursion=", count_sackin_minimal(n));
      }
    }
    return std::nullopt;
  });
  add("Sackin counting evaluators agree", [&]() -> Failure {
    for (std::uint64_t n = 3; n <= 128; ++n) {
      if (count_sackin_minimal(n) != count_sackin_minimal_stated(n)) {
        return describe("n=", n, " ", count_sackin_minimal(n), " vs ",
                        count_sackin_minimal_stated(n));
      }
    }
    return std::nullopt;
  });
  add("Colless-minimal counts n=1..32", [&]() -> Failure {
    for (std::uint64_t n = 1; n <= 32; ++n) {
      if (count_colless_minimal(n) != kCollessCounts[n - 1]) return describe("n=", n);
    }
    return std::nullopt;
  });
  add("improved bound n=1..32", [&]() -> Failure {
    for (std::uint64_t n = 1; n <= 32; ++n) {
      if (count_bound_b(n) != kBoundCounts[n - 1]) return describe("n=", n);
    }
    return std::nullopt;
  });
  add("count ordering c~ <= b~ <= s~", [&]() -> Failure {
    for (std::uint64_t n = 1; n <= 64; ++n) {
      if (count_colless_minimal(n) > count_bound_b(n) ||
          count_bound_b(n) > count_sackin_minimal(n)) {
        return describe("n=", n);
      }
    }
    return std::nullopt;
  });
  add("caterpillar maximizes Colless", [&]() -> Failure {
    for (std::uint32_t n = 1; n <= std::min<std::uint32_t>(E, 12); ++n) {
      std::uint64_t best = 0;
      std::uint64_t hits = 0;
      for_each_shape(
          n,
          [&](const TreeShape& t) {
            const auto c = colless(t);
            if (c > best) {
              best = c;
              hits = 0;
            }
            if (c == best) ++hits;
          },
          limit);
      if (best != max_colless(n) || hits != 1 || colless(caterpillar(n)) != best) {
        return describe("n=", n);
      }
    }
    return std::nullopt;
  });
  add("twelve- and 23-leaf example trees", [&]() -> Failure {
    const TreeShape t1 = TreeShape::internal(gfb(6), maximally_balanced(6));
    const TreeShape t2 = TreeShape::internal(maximally_balanced(7), maximally_balanced(5));
    const TreeShape big = TreeShape::internal(t2, maximally_balanced(11));
    if (colless(t1) != 4 || !is_colless_minimal(t1)) return std::string("T1");
    if (colless(t2) != 6 || is_colless_minimal(t2)) return std::string("T2");
    if (sackin(t1) != 44 || sackin(t2) != 44 || !is_sackin_minimal(t1) ||
        !is_sackin_minimal(t2)) {
      return std::string("Sackin of T1/T2");
    }
    if (colless(big) != 12 || min_colless_recursive(23) != 10 || is_colless_minimal(big)) {
      return std::string("23-leaf tree");
    }
    return std::nullopt;
  });

  std::vector<CheckOutcome> outcomes;
  for (auto& [name, fn] : checks) {
    const Failure f = fn();
    outcomes.push_back({name, !f.has_value(), f.value_or("")});
  }
  return outcomes;
}

}  // namespace treebal::cli
