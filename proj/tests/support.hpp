#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "consec/digraph.hpp"
#include "consec/perms.hpp"
#include "consec/words.hpp"

namespace fixtures {

inline std::vector<consec::Permutation> perms(const std::vector<std::string>& xs) {
  std::vector<consec::Permutation> out;
  for (const auto& x : xs) out.push_back(consec::Permutation::parse(x));
  return out;
}

inline consec::PermClassSpec perm_class(const std::vector<std::string>& basis) {
  return consec::PermClassSpec::make(perms(basis));
}

inline consec::WordClassSpec word_class(const std::vector<std::string>& basis, const std::string& letters = "ab") {
  std::vector<std::string> symbols;
  for (char c : letters) symbols.emplace_back(1, c);
  consec::Alphabet a(symbols);
  std::vector<consec::Word> ws;
  for (const auto& b : basis) ws.push_back(a.parse(b));
  return consec::WordClassSpec::make(a, ws);
}

inline consec::Digraph graph(const std::vector<std::string>& ids,
                             const std::vector<std::pair<std::string, std::string>>& edges) {
  consec::Digraph g(ids);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline std::set<std::pair<std::string, std::string>> edge_set(const consec::Digraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) out.emplace(g.id(u), g.id(v));
  return out;
}

inline std::set<std::string> vertex_set(const consec::Digraph& g) { return {g.ids().begin(), g.ids().end()}; }

inline std::vector<std::string> ids(const consec::Digraph& g, const consec::DiPath& p) {
  std::vector<std::string> out;
  for (auto v : p) out.push_back(g.id(v));
  return out;
}

// A 5-cycle joined by a two-vertex path to a 6-cycle.
inline consec::Digraph drawn_bicycle() {
  return graph({"a1", "a2", "a3", "a4", "a5", "p1", "p2", "c1", "c2", "c3", "c4", "c5", "c6"},
               {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a5"}, {"a5", "a1"}, {"a1", "p1"},
                {"p1", "p2"}, {"p2", "c1"}, {"c1", "c2"}, {"c2", "c3"}, {"c3", "c4"}, {"c4", "c5"},
                {"c5", "c6"}, {"c6", "c1"}});
}

// The bicycle with a loop at 1234, path 1234 -> 1243 -> 1324 -> 3142 -> 1423 and cycle 1423 <-> 4132.
inline consec::PermFactorGraph core_example_graph() {
  consec::PermFactorGraph g;
  g.dimension = 4;
  for (const auto& p : perms({"1234", "1243", "1324", "3142", "1423", "4132"})) {
    g.index.emplace(p, g.vertex_perms.size());
    g.graph.add_vertex(p.str());
    g.vertex_perms.push_back(p);
  }
  for (auto [u, v] : std::vector<std::pair<std::string, std::string>>{{"1234", "1234"},
                                                                      {"1234", "1243"},
                                                                      {"1243", "1324"},
                                                                      {"1324", "3142"},
                                                                      {"3142", "1423"},
                                                                      {"1423", "4132"},
                                                                      {"4132", "1423"}})
    g.graph.add_edge(u, v);
  return g;
}

}  // namespace fixtures
