#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "treebal/tree_shape.hpp"

using namespace treebal;

namespace {
TreeShape L() { return TreeShape::leaf(); }
TreeShape I(TreeShape a, TreeShape b) { return TreeShape::internal(a, b); }
}  // namespace

TEST_CASE("leaf counts are cached consistently") {
  const TreeShape t = I(L(), I(I(L(), L()), L()));
  CHECK(t.leaf_count() == 4);
  CHECK(count_leaves(t) == 4);
  CHECK(count_internal_nodes(t) == 3);
  CHECK(L().leaf_count() == 1);
  CHECK(count_internal_nodes(L()) == 0);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + trial % 30;
    const TreeShape s = oracle::random_shape(n, rng);
    CHECK(s.leaf_count() == count_leaves(s));
    CHECK(count_internal_nodes(s) == n - 1);
  }
}

TEST_CASE("canonicalize orders children") {
  const TreeShape t = I(L(), I(L(), L()));
  const TreeShape c = canonicalize(t);
  REQUIRE(!c.is_leaf());
  CHECK(c.left().leaf_count() == 2);
  CHECK(c.right().is_leaf());
  CHECK(is_canonical(c));
  CHECK(!is_canonical(t));
  CHECK(canonicalize(L()).is_leaf());
}

TEST_CASE("canonicalize is idempotent on random shapes") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 20);
    const TreeShape s = oracle::random_shape(n, rng);
    const TreeShape once = canonicalize(s);
    const TreeShape twice = canonicalize(once);
    CHECK(shape_order(once, twice) == 0);
    CHECK(once.same_node(twice));
    CHECK(is_canonical(once));
    CHECK(canonical_key(s) == canonical_key(once));
  }
}

TEST_CASE("key equality coincides with naive isomorphism") {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto shapes = oracle::all_ordered(n);
    std::vector<CanonicalKey> keys;
    for (const auto& s : shapes) keys.push_back(canonical_key(s));
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      for (std::size_t j = i; j < shapes.size(); ++j) {
        const bool iso = oracle::isomorphic(shapes[i], shapes[j]);
        CHECK(iso == (keys[i] == keys[j]));
        CHECK(iso == treebal::isomorphic(shapes[i], shapes[j]));
      }
    }
  }
}

TEST_CASE("key order agrees with shape_order on canonical shapes") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 12);
    const TreeShape a = canonicalize(oracle::random_shape(n, rng));
    const TreeShape b = canonicalize(oracle::random_shape(n, rng));
    CHECK((canonical_key(a) <=> canonical_key(b)) == shape_order(a, b));
    CHECK((canonical_key(a) <=> canonical_key(b)) ==
          0 <=> (canonical_key(b) <=> canonical_key(a)));
  }
}

TEST_CASE("swapping children preserves the key") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const TreeShape a = oracle::random_shape(1 + trial % 9, rng);
    const TreeShape b = oracle::random_shape(1 + trial % 7, rng);
    CHECK(canonical_key(I(a, b)) == canonical_key(I(b, a)));
  }
}

TEST_CASE("decompose returns the larger side first") {
  const auto d = decompose(I(L(), I(L(), L())));
  CHECK(d.larger.leaf_count() == 2);
  CHECK(d.smaller.leaf_count() == 1);
  CHECK_THROWS_AS(decompose(L()), std::invalid_argument);
}

TEST_CASE("long chains are released without deep recursion") {
  TreeShape t;
  for (int i = 0; i < 1000000; ++i) t = I(std::move(t), L());
  CHECK(t.leaf_count() == 1000001);
  t = L();
  CHECK(t.is_leaf());
}
