#include <algorithm>

#include "consec/errors.hpp"
#include "consec/perms.hpp"

namespace consec {

namespace {

bool length_then_lex(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

PermClassSpec PermClassSpec::make(std::vector<Permutation> basis) {
  std::sort(basis.begin(), basis.end(), length_then_lex);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  PermClassSpec spec;
  for (const auto& p : basis)
    if (std::none_of(spec.basis.begin(), spec.basis.end(), [&](const Permutation& k) { return perm_factor_leq(k, p); }))
      spec.basis.push_back(p);
  spec.empty_basis = spec.basis.empty();
  spec.empty_class = !spec.basis.empty() && spec.basis.front().size() <= 1;
  spec.b = 2;
  for (const auto& p : spec.basis) spec.b = std::max(spec.b, p.size());
  return spec;
}

bool PermClassSpec::contains(const Permutation& p) const {
  return std::none_of(basis.begin(), basis.end(), [&](const Permutation& k) { return perm_factor_leq(k, p); });
}

bool perm_overlap(const Permutation& sigma, const Permutation& tau) {
  const std::size_t m = sigma.size();
  if (tau.size() != m || m == 0) return false;
  return pattern_at(sigma, 1, m - 1) == pattern_at(tau, 0, m - 1);
}

std::vector<Permutation> PermFactorGraph::perms_of(const DiPath& p) const {
  std::vector<Permutation> out;
  for (Vertex v : p) out.push_back(vertex_perms.at(v));
  return out;
}

std::optional<DiPath> PermFactorGraph::path_of(const Permutation& p) const {
  DiPath out;
  for (const auto& w : perm_to_path(p, dimension)) {
    auto it = index.find(w);
    if (it == index.end()) return std::nullopt;
    out.push_back(it->second);
  }
  return out;
}

PermFactorGraph perm_graph_on(std::vector<Permutation> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  PermFactorGraph g;
  g.dimension = vertices.empty() ? 0 : vertices.front().size();
  std::map<Permutation, std::vector<Vertex>> by_prefix;
  for (auto& p : vertices) {
    if (p.size() != g.dimension) throw InvalidInput("factor graph vertices differ in length");
    Vertex v = g.graph.add_vertex(p.str());
    g.index.emplace(p, v);
    by_prefix[pattern_at(p, 0, g.dimension - 1)].push_back(v);
    g.vertex_perms.push_back(std::move(p));
  }
  for (Vertex v = 0; v < g.vertex_perms.size(); ++v) {
    auto it = by_prefix.find(pattern_at(g.vertex_perms[v], 1, g.dimension - 1));
    if (it == by_prefix.end()) continue;
    for (Vertex w : it->second) g.graph.add_edge(v, w);
  }
  return g;
}

std::vector<Permutation> enumerate_class_perms(const PermClassSpec& spec, std::size_t max_len) {
  std::vector<Permutation> out;
  if (spec.empty_class || max_len == 0) return out;
  std::vector<Permutation> level{Permutation{1}};
  for (std::size_t len = 1;; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) break;
    std::vector<Permutation> next;
    for (const auto& p : level)
      for (int k = 0; k <= static_cast<int>(len); ++k) {
        std::vector<int> v(p.values());
        for (int& x : v)
          if (x > k) ++x;
        v.push_back(k + 1);
        Permutation q = Permutation::trusted(std::move(v));
        // Only windows ending at the new entry can be new occurrences.
        bool ok = std::none_of(spec.basis.begin(), spec.basis.end(), [&](const Permutation& beta) {
          return beta.size() <= q.size() && pattern_at(q, q.size() - beta.size(), beta.size()) == beta;
        });
        if (ok) next.push_back(std::move(q));
      }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

PermFactorGraph perm_factor_graph(const PermClassSpec& spec, std::size_t m) {
  if (m < spec.b) throw InvalidInput("factor graph dimension below the maximum basis length");
  std::vector<Permutation> vs;
  for (auto& p : enumerate_class_perms(spec, m))
    if (p.size() == m) vs.push_back(std::move(p));
  PermFactorGraph g = perm_graph_on(std::move(vs));
  g.dimension = m;
  return g;
}

}  // namespace consec
