#include "doctest.h"
#include "oracles.hpp"
#include "treebal/newick.hpp"

using namespace treebal;

TEST_CASE("parse basic shapes") {
  const TreeShape t = parse_newick("((,),);");
  CHECK(t.leaf_count() == 3);
  CHECK(is_canonical(t));
  CHECK(to_newick(t) == "((,),);");

  const TreeShape fb = parse_newick("((a:1.0,b:2.0),(c,d));");
  CHECK(to_newick(fb) == "((,),(,));");

  CHECK(parse_newick(";").is_leaf());
  CHECK(parse_newick("x:0.5;").is_leaf());
  CHECK(to_newick(TreeShape::leaf()) == ";");
}

TEST_CASE("whitespace, labels and lengths are ignored") {
  const TreeShape t = parse_newick("  ( ( A_1 : 1e-3 , b.2:+2 ) inner:0.1 ,\n c-3 ) root ; ");
  CHECK(to_newick(t) == "((,),);");
}

TEST_CASE("emission uses canonical child order") {
  CHECK(to_newick(parse_newick("(,(,));")) == "((,),);");
  CHECK(to_newick(parse_newick("((,),((,),));")) == "(((,),),(,));");
}

TEST_CASE("malformed input reports byte offsets") {
  auto offset_of = [](const char* text) -> long {
    try {
      parse_newick(text);
    } catch (const NewickError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("   ") == 3);
  CHECK(offset_of("((,,),);") == 3);  // second comma in one group
  CHECK(offset_of("((,),)") == 6);    // missing terminator
  CHECK(offset_of("((,),;") == 5);    // unbalanced
  CHECK(offset_of("(a);") == 2);      // one child
  CHECK(offset_of("(,));") == 3);     // stray ')'
  CHECK(offset_of("(,);x") == 4);     // trailing text
  CHECK(offset_of("(a:,b);") == 2);   // empty length
  CHECK(offset_of("(a,b)") == 5);
  CHECK_THROWS_AS(parse_newick("((,,),);"), InvalidInput);
}

TEST_CASE("round trip over every shape with up to 10 leaves") {
  for (unsigned n = 1; n <= 10; ++n) {
    for (const auto& s : oracle::all_ordered(n)) {
      CHECK(canonical_key(parse_newick(to_newick(s))) == canonical_key(s));
    }
  }
}

TEST_CASE("deeply nested input parses iteratively") {
  std::string text;
  const int depth = 200000;
  for (int i = 0; i < depth; ++i) text += '(';
  text += "a";
  for (int i = 0; i < depth; ++i) text += ",b)";
  text += ';';
  CHECK(parse_newick(text).leaf_count() == depth + 1);
}
