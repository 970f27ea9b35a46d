#include <algorithm>
#include <deque>
#include <stdexcept>

#include "consec/kernels.hpp"
#include "consec/perms.hpp"

namespace consec {

namespace {

bool acyclic(const Digraph& g) {
  SccDecomposition d = scc(g);
  for (std::size_t c = 0; c < d.components.size(); ++c)
    if (!d.trivial(g, c)) return false;
  return true;
}

template <class W>
void set_empty_class(Decision<W>& r) {
  r.outcome = Outcome::degenerate;
  r.degenerate_tag = "degenerate: empty class";
  r.explanation = "basis contains the permutation 1";
}

// Extends p forward or backward until it leaves its strongly connected component.
DiPath leave_component(const Digraph& g, DiPath p) {
  SccDecomposition d = scc(g);
  const std::size_t c = d.component_of[p.front()];
  if (std::any_of(p.begin(), p.end(), [&](Vertex v) { return d.component_of[v] != c; }) || d.trivial(g, c))
    return p;
  for (bool forward : {true, false}) {
    std::vector<std::optional<Vertex>> parent(g.size());
    std::vector<bool> seen(g.size(), false);
    Vertex start = forward ? p.back() : p.front();
    std::deque<Vertex> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : forward ? g.successors(v) : g.predecessors(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        if (d.component_of[w] == c) {
          queue.push_back(w);
          continue;
        }
        DiPath ext{w};
        while (ext.back() != start) ext.push_back(*parent[ext.back()]);
        ext.pop_back();
        if (forward) {
          p.insert(p.end(), ext.rbegin(), ext.rend());
        } else {
          p.insert(p.begin(), ext.begin(), ext.end());
        }
        return p;
      }
    }
  }
  return p;
}

void check_antichain(const std::vector<Permutation>& xs) {
  auto bad = kernels::first_comparable_pair(xs.size(), [&](std::size_t i, std::size_t j) {
    return perm_factor_leq(xs[i], xs[j]);
  });
  if (bad) throw std::logic_error("constructed antichain has comparable elements " + xs[bad->first].str() +
                                  " and " + xs[bad->second].str());
}

}  // namespace

Decision<PermWitness> decide_perm_atomic(const PermClassSpec& spec) {
  Decision<PermWitness> r;
  if (spec.empty_class) {
    set_empty_class(r);
    return r;
  }
  if (spec.empty_basis) r.note = "degenerate: empty basis";
  const PermFactorGraph g = perm_factor_graph(spec, spec.b);

  if (acyclic(g.graph)) {
    auto all = enumerate_class_perms(spec, g.graph.size() + spec.b - 1);
    auto bad = kernels::first_unjoinable_pair(all.size(), all.size(), [&](std::size_t i, std::size_t u) {
      return perm_factor_leq(all[i], all[u]);
    });
    if (!bad) {
      r.explanation = "finite class; every pair joins (exhaustive check)";
      return r;
    }
    r.outcome = Outcome::no;
    r.witness = PermWitness{PermWitness::Kind::non_joinable_pair, {all[bad->first], all[bad->second]}, {}, {},
                            "finite class"};
    r.explanation = "finite class; exhaustive check found a pair with no common extension";
    return r;
  }

  auto graph_atomic = path_poset_atomic(g.graph);
  if (graph_atomic.fails()) {
    r.outcome = Outcome::no;
    const auto& pair = *graph_atomic.witness;
    auto lift = [&](const DiPath& p) { return path_to_perm_set(g.perms_of(p), 0).front(); };
    r.witness = PermWitness{PermWitness::Kind::non_joinable_pair, {lift(pair.first), lift(pair.second)}, {}, {},
                            "factor graph"};
    r.explanation = "factor graph is neither strongly connected nor a bicycle: " + graph_atomic.explanation;
    return r;
  }
  if (!is_strongly_connected(g.graph)) {
    if (auto amb = has_ambiguous_path(g)) {
      DiPath p = leave_component(g.graph, *amb);
      auto report = is_path_ambiguous(g.perms_of(p));
      r.outcome = Outcome::no;
      r.witness = PermWitness{PermWitness::Kind::non_joinable_pair, report.evidence, g.perms_of(*amb), {},
                              "ambiguous path"};
      r.explanation = "factor graph is a bicycle with ambiguous path " + format_path(g.graph, *amb);
      return r;
    }
  }

  for (const auto& sigma : enumerate_class_perms(spec, spec.b - 1)) {
    bool extends = std::any_of(g.vertex_perms.begin(), g.vertex_perms.end(),
                               [&](const Permutation& rho) { return perm_factor_leq(sigma, rho); });
    if (extends) continue;
    r.outcome = Outcome::no;
    r.witness = PermWitness{PermWitness::Kind::unextendable_perm, {sigma, g.vertex_perms.front()}, {}, {},
                            "short permutation"};
    r.explanation = "permutation " + sigma.str() + " is not a factor of any class member of length " +
                    std::to_string(spec.b);
    return r;
  }
  r.explanation = is_strongly_connected(g.graph)
                      ? "factor graph is strongly connected and every short permutation extends"
                      : "factor graph is a bicycle without ambiguous paths and every short permutation extends";
  return r;
}

Decision<PermWitness> decide_perm_wqo(const PermClassSpec& spec, std::size_t n) {
  Decision<PermWitness> r;
  if (spec.empty_class) {
    set_empty_class(r);
    return r;
  }
  if (spec.empty_basis) r.note = "degenerate: empty basis";
  const PermFactorGraph g = perm_factor_graph(spec, spec.b);

  if (auto cycle = has_in_out_cycle(g.graph)) {
    PermWitness w{PermWitness::Kind::antichain, {}, g.perms_of(*cycle), {}, "in-out cycle"};
    for (const auto& p : in_out_antichain(g.graph, *cycle, n))
      w.perms.push_back(path_to_perm_set(g.perms_of(p), 0).front());
    check_antichain(w.perms);
    r.outcome = Outcome::no;
    r.witness = std::move(w);
    r.explanation = "factor graph has an in-out cycle " + format_path(g.graph, *cycle);
    return r;
  }
  if (auto amb = has_ambiguous_cycle(g)) {
    PermWitness w{PermWitness::Kind::antichain, antichain_from_ambiguous_cycle(g, *amb, n), g.perms_of(*amb), {},
                  "ambiguous cycle"};
    check_antichain(w.perms);
    r.outcome = Outcome::no;
    r.witness = std::move(w);
    r.explanation = "factor graph has an ambiguous cycle through " + format_path(g.graph, *amb);
    return r;
  }
  auto bicycles = bicycle_decomposition(g.graph);
  if (!bicycles) throw std::logic_error("no bicycle decomposition without an in-out cycle");
  for (const auto& bi : *bicycles) {
    BicycleContext ctx(g, bi, spec.b);
    auto split = has_splittable_pair(ctx);
    if (!split) continue;
    PermWitness w{PermWitness::Kind::antichain, antichain_from_splittable(ctx, *split, n), {}, split,
                  "splittable pair"};
    check_antichain(w.perms);
    r.outcome = Outcome::no;
    r.witness = std::move(w);
    r.explanation = "bicycle has a splittable " + to_string(split->pair.kind) + " pair of its " +
                    to_string(split->side) + " iterator";
    return r;
  }
  r.explanation = "no in-out cycle, no ambiguous cycle, and no bicycle of the decomposition has a splittable pair";
  return r;
}

}  // namespace consec
