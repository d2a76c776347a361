#include "doctest.h"

#include <random>

#include "partite/graph6.hpp"
#include "partite/verifier.hpp"
#include "oracles.hpp"

using namespace partite;

TEST_CASE("graph6 hand-encoded vectors") {
  CHECK(graph6_encode(Graph::empty(1)) == "@");
  CHECK(graph6_encode(build_graph(2, {{0, 1}})) == "A_");
  CHECK(graph6_encode(Graph::empty(2)) == "A?");

  CHECK(graph6_decode("@") == Graph::empty(1));
  CHECK(graph6_decode("A_") == build_graph(2, {{0, 1}}));
  CHECK(graph6_decode("A?") == Graph::empty(2));
  CHECK(graph6_decode(">>graph6<<A_\n") == build_graph(2, {{0, 1}}));

  // C5 in standard form (matches nauty's encoding of the 5-cycle).
  Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(graph6_decode(graph6_encode(c5)) == c5);
}

TEST_CASE("graph6 parse errors carry offsets") {
  CHECK_THROWS_AS(graph6_decode(""), ParseError);
  CHECK_THROWS_AS(graph6_decode("A"), ParseError);      // truncated edge bits
  CHECK_THROWS_AS(graph6_decode("A_X"), ParseError);    // trailing bytes
  CHECK_THROWS_AS(graph6_decode("C\x01"), ParseError);  // byte below 63
  CHECK_THROWS_AS(graph6_decode("?"), ParseError);      // n = 0 unsupported
  try {
    graph6_decode("B\x20");
  } catch (const ParseError& e) {
    CHECK(e.offset == 1);
  }
  // Nonzero padding bits.
  CHECK_THROWS_AS(graph6_decode("A@"), ParseError);
}

TEST_CASE("graph6 round trip, exhaustive small and sampled large") {
  for (int n = 1; n <= 5; ++n) {
    int slots = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << slots); ++mask) {
      Graph g = detail::graph_from_mask(n, mask);
      CHECK(graph6_decode(graph6_encode(g)) == g);
    }
  }
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 10 + static_cast<int>(rng() % 120);
    Graph g = oracle::random_graph(rng, n, 0.2);
    std::string enc = graph6_encode(g);
    if (n > 62) CHECK(enc[0] == '~');
    CHECK(graph6_decode(enc) == g);
  }
  // Extended size field boundary: n = 63 encodes as '~' 0 0 63.
  Graph g63 = Graph::empty(63);
  std::string e63 = graph6_encode(g63);
  CHECK(e63.substr(0, 4) == "~??~");
  CHECK(graph6_decode(e63) == g63);
}
