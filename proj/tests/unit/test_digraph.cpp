#include <doctest.h>

#include <algorithm>
#include <random>

#include "consec/errors.hpp"
#include "support.hpp"

using namespace consec;
using fixtures::graph;
using fixtures::ids;

namespace {

Digraph av_123_321() { return perm_factor_graph(fixtures::perm_class({"123", "321"}), 3).graph; }
Digraph av_bb_aab() { return word_factor_graph(fixtures::word_class({"bb", "aab"})).graph; }
Digraph av_aaa_baa_bba_bbb() { return word_factor_graph(fixtures::word_class({"aaa", "baa", "bba", "bbb"})).graph; }

Digraph random_graph(std::mt19937& rng, std::size_t n, double p) {
  Digraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  std::bernoulli_distribution edge(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

DiPath random_path(std::mt19937& rng, const Digraph& g, std::size_t max_len) {
  DiPath p{std::uniform_int_distribution<Vertex>(0, g.size() - 1)(rng)};
  std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  while (p.size() <= len && g.out_degree(p.back()) > 0) {
    const auto& next = g.successors(p.back());
    p.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
  }
  return p;
}

}  // namespace

TEST_CASE("digraph basics") {
  Digraph g = graph({"x", "y"}, {{"x", "y"}, {"x", "y"}, {"y", "y"}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(1, 0));
  CHECK_THROWS_AS(g.add_vertex("x"), InvalidInput);
  CHECK_THROWS_AS(g.add_edge("x", "z"), InvalidInput);
  CHECK(is_path(g, {0, 1, 1}));
  CHECK_FALSE(is_path(g, {1, 0}));
  CHECK(is_subpath({1, 1}, {0, 1, 1}));
  CHECK(format_path(g, {0, 1}) == "x->y");
}

TEST_CASE("scc") {
  SUBCASE("four 2-cycles form one component") {
    Digraph g = av_123_321();
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 8);
    auto d = scc(g);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].size() == 4);
  }
  SUBCASE("single vertex") {
    Digraph g = graph({"x"}, {});
    auto d = scc(g);
    REQUIRE(d.components.size() == 1);
    CHECK(d.trivial(g, 0));
  }
  SUBCASE("component order") {
    Digraph g = perm_factor_graph(fixtures::perm_class({"132", "213", "231", "321"}), 3).graph;
    auto d = scc(g);
    REQUIRE(d.components.size() == 2);
    std::size_t c312 = d.component_of[*g.find("312")], c123 = d.component_of[*g.find("123")];
    CHECK(d.precedes(c312, c123));
    CHECK_FALSE(d.precedes(c123, c312));
  }
  SUBCASE("condensation of an acyclic graph is itself") {
    Digraph g = graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    auto d = scc(g);
    auto dd = scc(d.condensation);
    CHECK(dd.components.size() == d.components.size());
    CHECK(dd.condensation.edges() == d.condensation.edges());
  }
}

TEST_CASE("is_strongly_connected") {
  CHECK(is_strongly_connected(av_123_321()));
  CHECK(is_strongly_connected(graph({"x"}, {})));
  CHECK_FALSE(is_strongly_connected(av_bb_aab()));
  CHECK_FALSE(is_strongly_connected(Digraph{}));
}

TEST_CASE("as_bicycle") {
  SUBCASE("Av(bb,aab)") {
    Digraph g = av_bb_aab();
    auto bi = as_bicycle(g);
    REQUIRE(bi);
    CHECK(ids(g, bi->initial_cycle) == std::vector<std::string>{"aba", "bab"});
    CHECK(ids(g, bi->connecting_path) == std::vector<std::string>{"aba", "baa", "aaa"});
    CHECK(ids(g, bi->terminal_cycle) == std::vector<std::string>{"aaa"});
  }
  SUBCASE("strongly connected but not a cycle") { CHECK_FALSE(as_bicycle(av_123_321())); }
  SUBCASE("single loop") {
    auto bi = as_bicycle(graph({"x"}, {{"x", "x"}}));
    REQUIRE(bi);
    CHECK_FALSE(bi->has_initial());
    CHECK(bi->terminal_cycle == std::vector<Vertex>{0});
  }
  SUBCASE("drawn bicycle") {
    Digraph g = fixtures::drawn_bicycle();
    auto bi = as_bicycle(g);
    REQUIRE(bi);
    CHECK(bi->initial_cycle.size() == 5);
    CHECK(ids(g, bi->connecting_path) == std::vector<std::string>{"a1", "p1", "p2", "c1"});
    CHECK(bi->terminal_cycle.size() == 6);
    CHECK(g.id(bi->terminal_cycle[0]) == "c1");
  }
  SUBCASE("lone path") {
    auto bi = as_bicycle(graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}));
    REQUIRE(bi);
    CHECK(bi->connecting_path == std::vector<Vertex>{0, 1, 2});
  }
  SUBCASE("two exits are not a bicycle") {
    CHECK_FALSE(as_bicycle(graph({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}})));
  }
}

TEST_CASE("path_poset_atomic") {
  CHECK(path_poset_atomic(fixtures::drawn_bicycle()).holds());
  CHECK(path_poset_atomic(graph({"x"}, {{"x", "x"}})).holds());

  Digraph g = av_aaa_baa_bba_bbb();
  auto d = path_poset_atomic(g);
  REQUIRE(d.fails());
  REQUIRE(d.witness);
  // No path of g contains both witness paths.
  const auto& [a, b] = *d.witness;
  CHECK(is_path(g, a));
  CHECK(is_path(g, b));
  for (const auto& p : enumerate_paths(g, a.size() + b.size() + g.size()))
    CHECK_FALSE((is_subpath(a, p) && is_subpath(b, p)));

  auto empty = path_poset_atomic(Digraph{});
  CHECK(empty.outcome == Outcome::degenerate);
  CHECK(empty.degenerate_tag == "degenerate: empty");
}

TEST_CASE("has_in_out_cycle") {
  Digraph g = av_aaa_baa_bba_bbb();
  auto c = has_in_out_cycle(g);
  REQUIRE(c);
  CHECK(ids(g, *c) == std::vector<std::string>{"aba", "bab", "aba"});

  CHECK_FALSE(has_in_out_cycle(fixtures::drawn_bicycle()));

  Digraph h = av_123_321();
  auto c2 = has_in_out_cycle(h);
  REQUIRE(c2);
  CHECK(ids(h, *c2) == std::vector<std::string>{"132", "213", "132"});
}

TEST_CASE("bicycle_decomposition") {
  Digraph g = av_bb_aab();
  auto d = bicycle_decomposition(g);
  REQUIRE(d);
  REQUIRE(d->size() == 1);
  CHECK(d->front() == *as_bicycle(g));

  auto loops = bicycle_decomposition(graph({"x", "y"}, {{"x", "x"}, {"y", "y"}}));
  REQUIRE(loops);
  CHECK(loops->size() == 2);

  CHECK_FALSE(bicycle_decomposition(av_aaa_baa_bba_bbb()));

  // Two sources into one sink give two routes.
  auto fork = bicycle_decomposition(graph({"s1", "s2", "t"}, {{"s1", "t"}, {"s2", "t"}, {"t", "t"}}));
  REQUIRE(fork);
  CHECK(fork->size() == 2);

  Digraph wide;
  const int layers = 18;
  for (int i = 0; i <= layers; ++i) {
    wide.add_vertex("u" + std::to_string(i));
    wide.add_vertex("d" + std::to_string(i));
  }
  for (int i = 0; i < layers; ++i)
    for (auto from : {"u", "d"})
      for (auto to : {"u", "d"}) wide.add_edge(from + std::to_string(i), to + std::to_string(i + 1));
  CHECK_THROWS_AS(bicycle_decomposition(wide, 1000), ResourceLimit);
}

TEST_CASE("path_poset_wqo") {
  CHECK(path_poset_wqo(fixtures::drawn_bicycle()).holds());
  CHECK(path_poset_wqo(graph({"x", "y"}, {{"x", "y"}})).holds());
  CHECK(path_poset_wqo(Digraph{}).holds());

  Digraph g = av_aaa_baa_bba_bbb();
  auto d = path_poset_wqo(g, 7);
  REQUIRE(d.fails());
  REQUIRE(d.witness->paths.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(is_path(g, d.witness->paths[i]));
    for (std::size_t j = 0; j < 7; ++j)
      if (i != j) CHECK_FALSE(is_subpath(d.witness->paths[i], d.witness->paths[j]));
  }
}

TEST_CASE("enumerate_paths") {
  auto loop = enumerate_paths(graph({"x"}, {{"x", "x"}}), 3);
  CHECK(loop == std::vector<DiPath>{{0}, {0, 0}, {0, 0, 0}});
  CHECK(enumerate_paths(graph({"x", "y"}, {}), 2) == std::vector<DiPath>{{0}, {1}});
  CHECK_THROWS_AS(enumerate_paths(graph({"x"}, {}), 0), InvalidInput);

  auto pg = perm_factor_graph(fixtures::perm_class({"231", "312", "321", "1243", "3142"}), 4);
  std::set<std::vector<std::string>> four;
  for (const auto& p : enumerate_paths(pg.graph, 4))
    if (p.size() == 4) four.insert(ids(pg.graph, p));
  std::set<std::vector<std::string>> table{{"2143", "1324", "2143", "1324"}, {"2143", "1324", "2134", "1234"},
                                           {"1324", "2143", "1324", "2143"}, {"1324", "2143", "1324", "2134"},
                                           {"1324", "2134", "1234", "1234"}, {"2134", "1234", "1234", "1234"},
                                           {"1234", "1234", "1234", "1234"}};
  CHECK(four == table);
}

TEST_CASE("random graph invariants") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    Digraph g = random_graph(rng, 1 + trial % 6, trial % 3 == 0 ? 0.15 : 0.3);
    auto d = scc(g);
    auto dd = scc(d.condensation);
    CHECK(dd.components.size() == d.components.size());

    if (as_bicycle(g)) {
      CHECK(path_poset_atomic(g).holds());
      CHECK_FALSE(has_in_out_cycle(g));
    }
    if (auto dec = bicycle_decomposition(g)) {
      for (int k = 0; k < 200; ++k) {
        DiPath p = random_path(rng, g, 11);
        bool covered = std::any_of(dec->begin(), dec->end(), [&](const Bicycle& b) { return b.contains_path(p); });
        CHECK(covered);
      }
    }
    auto w = path_poset_wqo(g, 5);
    CHECK(w.holds() == !has_in_out_cycle(g));
    if (w.fails())
      for (const auto& a : w.witness->paths)
        for (const auto& b : w.witness->paths)
          if (&a != &b) CHECK_FALSE(is_subpath(a, b));
  }
}

TEST_CASE("dot export") {
  Digraph g = fixtures::drawn_bicycle();
  std::string dot = to_dot(g);
  CHECK(dot.find("label=\"a1\"") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == static_cast<long>(g.edge_count()));
  std::string bdot = to_dot(g, *as_bicycle(g));
  CHECK(bdot.find("comment=\"initial cycle\"") != std::string::npos);
  CHECK(bdot.find("comment=\"terminal cycle\"") != std::string::npos);
  CHECK(bdot.find("comment=\"connecting path\"") != std::string::npos);
}
