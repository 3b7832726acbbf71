#include <random>
#include <string>

#include <catch_amalgamated.hpp>

#include "test_support.hpp"
#include "zagreb/io.hpp"

using namespace zagreb;

TEST_CASE("graph6 encodes the published bit layout", "[io][graph6]") {
  // Path 0-1-2: upper-triangle bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000 = 40, 40+63 = 'g'.
  CHECK(emit_graph6(Tree::path(3)) == "Bg");
  // Reference strings produced by networkx.to_graph6_bytes.
  CHECK(emit_graph6(Tree::path(6)) == "EhCG");
  CHECK(emit_graph6(Tree::star(6)) == "Esa?");
  const std::string long_path =
      "~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C"
      "????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????"
      "G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????"
      "????@?????????G?????????_????????@?????????@??????????_?????????G";
  CHECK(emit_graph6(Tree::path(63)) == long_path);
  CHECK(parse_graph6(long_path) == Tree::path(63));
  CHECK(emit_graph6(Tree::from_edges(1, {})) == "@");
}

TEST_CASE("graph6 parse errors", "[io][graph6]") {
  // "Bw" is the triangle.
  CHECK_THROWS_AS(parse_graph6("Bw"), NotATreeError);
  CHECK_THROWS_AS(parse_graph6("Cl"), NotATreeError);  // 4-cycle
  CHECK_THROWS_AS(parse_graph6("C?"), NotATreeError);  // edgeless
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);      // missing data byte
  CHECK_THROWS_AS(parse_graph6("Bgg"), ParseError);    // extra data byte
  CHECK_THROWS_AS(parse_graph6("B\x7f"), ParseError);  // byte out of range
  CHECK_THROWS_AS(parse_graph6("Bh"), ParseError);     // padding bit set
  CHECK(parse_graph6(">>graph6<<Bg\n") == Tree::path(3));
}

TEST_CASE("graph6 round trip on random trees", "[io][graph6][property]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 62);
    const Tree t = random_tree(n, rng);
    CHECK(parse_graph6(emit_graph6(t)) == t);
  }
  const Tree big = random_tree(300, rng);
  CHECK(parse_graph6(emit_graph6(big)) == big);
}

TEST_CASE("edge list parsing", "[io][edgelist]") {
  CHECK(parse_edgelist("0 1\n1 2") == Tree::path(3));
  CHECK(parse_edgelist("# comment\n\n0 1\n  1\t2  \n") == Tree::path(3));
  CHECK(parse_edgelist("") == Tree::from_edges(1, {}));

  auto defect_of = [](const char* text) {
    try {
      parse_edgelist(text);
    } catch (const NotATreeError& e) {
      return e.defect();
    }
    FAIL("accepted " << text);
    return TreeDefect::vertex_out_of_range;
  };
  CHECK(defect_of("0 1\n0 1") == TreeDefect::duplicate_edge);
  CHECK(defect_of("0 1\n2 3") == TreeDefect::disconnected);
  CHECK(defect_of("0 0\n0 1") == TreeDefect::self_loop);
  CHECK(defect_of("0 1\n1 2\n2 0") == TreeDefect::wrong_edge_count);

  try {
    parse_edgelist("0 1\n1 2\n2 x\n");
    FAIL("bad token accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edgelist("0 1 2"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("0"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("-1 0"), ParseError);

  std::mt19937_64 rng(5);
  const Tree t = random_tree(25, rng);
  CHECK(parse_edgelist(emit_edgelist(t)) == t);
}
