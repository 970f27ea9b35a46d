#include "consec/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "consec/errors.hpp"

namespace consec {

Digraph::Digraph(std::vector<std::string> ids) {
  for (auto& id : ids) add_vertex(std::move(id));
}

Vertex Digraph::add_vertex(std::string id) {
  if (index_.count(id)) throw InvalidInput("duplicate vertex id '" + id + "'");
  Vertex v = ids_.size();
  index_.emplace(id, v);
  ids_.push_back(std::move(id));
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

void Digraph::add_edge(Vertex u, Vertex v) {
  if (u >= size() || v >= size()) throw InvalidInput("edge endpoint is not a vertex");
  auto& succ = out_[u];
  auto it = std::lower_bound(succ.begin(), succ.end(), v);
  if (it != succ.end() && *it == v) return;
  succ.insert(it, v);
  auto& pred = in_[v];
  pred.insert(std::lower_bound(pred.begin(), pred.end(), u), u);
  ++edge_count_;
}

void Digraph::add_edge(std::string_view u, std::string_view v) {
  auto a = find(u), b = find(v);
  if (!a) throw InvalidInput("edge endpoint '" + std::string(u) + "' is not a vertex");
  if (!b) throw InvalidInput("edge endpoint '" + std::string(v) + "' is not a vertex");
  add_edge(*a, *b);
}

std::optional<Vertex> Digraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  const auto& succ = out_.at(u);
  return std::binary_search(succ.begin(), succ.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Digraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  return result;
}

Digraph Digraph::induced(std::span<const Vertex> keep) const {
  Digraph h;
  std::vector<std::optional<Vertex>> map(size());
  for (Vertex v : keep) map.at(v) = h.add_vertex(ids_.at(v));
  for (Vertex v : keep)
    for (Vertex w : out_[v])
      if (map[w]) h.add_edge(*map[v], *map[w]);
  return h;
}

bool Digraph::operator==(const Digraph& other) const {
  return ids_ == other.ids_ && out_ == other.out_;
}

bool is_path(const Digraph& g, const DiPath& p) {
  if (p.empty()) return false;
  for (Vertex v : p)
    if (v >= g.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return true;
}

bool is_subpath(const DiPath& a, const DiPath& b) {
  return std::search(b.begin(), b.end(), a.begin(), a.end()) != b.end();
}

std::string format_path(const Digraph& g, const DiPath& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += "->";
    out += g.id(p[i]);
  }
  return out;
}

// ---------------------------------------------------------------- SCC

namespace {

// Iterative Tarjan. Returns components in arbitrary order.
std::vector<std::vector<Vertex>> tarjan(const Digraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> number(n, unseen), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> comps;
  std::size_t counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (Vertex root = 0; root < n; ++root) {
    if (number[root] != unseen) continue;
    call.push_back({root, 0});
    number[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = g.successors(f.v);
      if (f.next < succ.size()) {
        Vertex w = succ[f.next++];
        if (number[w] == unseen) {
          number[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], number[w]);
        }
        continue;
      }
      Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == number[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        comps.push_back(std::move(comp));
      }
    }
  }
  return comps;
}

}  // namespace

bool SccDecomposition::trivial(const Digraph& g, std::size_t c) const {
  const auto& comp = components.at(c);
  return comp.size() == 1 && !g.has_edge(comp[0], comp[0]);
}

SccDecomposition scc(const Digraph& g) {
  SccDecomposition d;
  d.components = tarjan(g);
  for (auto& c : d.components) std::sort(c.begin(), c.end());
  std::sort(d.components.begin(), d.components.end());
  d.component_of.assign(g.size(), 0);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    std::string name;
    for (Vertex v : d.components[i]) {
      d.component_of[v] = i;
      name += name.empty() ? "{" : ",";
      name += g.id(v);
    }
    names.push_back(name + "}");
  }
  d.condensation = Digraph(std::move(names));
  for (auto [u, v] : g.edges())
    if (d.component_of[u] != d.component_of[v])
      d.condensation.add_edge(d.component_of[u], d.component_of[v]);

  const std::size_t k = d.components.size();
  d.reach.assign(k, std::vector<bool>(k, false));
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::size_t> todo{c};
    d.reach[c][c] = true;
    while (!todo.empty()) {
      std::size_t x = todo.back();
      todo.pop_back();
      for (Vertex y : d.condensation.successors(x))
        if (!d.reach[c][y]) {
          d.reach[c][y] = true;
          todo.push_back(y);
        }
    }
  }
  return d;
}

bool is_strongly_connected(const Digraph& g) {
  return !g.empty() && scc(g).components.size() == 1;
}

// ---------------------------------------------------------------- bicycles

std::vector<Vertex> Bicycle::vertices() const {
  std::vector<Vertex> vs(initial_cycle);
  vs.insert(vs.end(), connecting_path.begin(), connecting_path.end());
  vs.insert(vs.end(), terminal_cycle.begin(), terminal_cycle.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<std::pair<Vertex, Vertex>> Bicycle::edges() const {
  std::vector<std::pair<Vertex, Vertex>> es;
  auto cycle_edges = [&es](const std::vector<Vertex>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) es.emplace_back(c[i], c[(i + 1) % c.size()]);
  };
  cycle_edges(initial_cycle);
  for (std::size_t i = 0; i + 1 < connecting_path.size(); ++i)
    es.emplace_back(connecting_path[i], connecting_path[i + 1]);
  cycle_edges(terminal_cycle);
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

bool Bicycle::contains_path(const DiPath& p) const {
  auto vs = vertices();
  auto es = edges();
  for (Vertex v : p)
    if (!std::binary_search(vs.begin(), vs.end(), v)) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!std::binary_search(es.begin(), es.end(), std::make_pair(p[i], p[i + 1]))) return false;
  return true;
}

namespace {

// Component is a simple cycle: every member has exactly one in- and out-edge inside it.
bool is_cycle_component(const Digraph& g, const SccDecomposition& d, std::size_t c) {
  if (d.trivial(g, c)) return false;
  for (Vertex v : d.components[c]) {
    std::size_t out = 0, in = 0;
    for (Vertex w : g.successors(v)) out += d.component_of[w] == c;
    for (Vertex w : g.predecessors(v)) in += d.component_of[w] == c;
    if (out != 1 || in != 1) return false;
  }
  return true;
}

// The cycle of a cycle component, starting at `start`.
std::vector<Vertex> walk_cycle(const Digraph& g, const SccDecomposition& d, Vertex start) {
  std::size_t c = d.component_of[start];
  std::vector<Vertex> cycle{start};
  Vertex v = start;
  while (true) {
    Vertex next = start;
    for (Vertex w : g.successors(v))
      if (d.component_of[w] == c) next = w;
    if (next == start) break;
    cycle.push_back(next);
    v = next;
  }
  return cycle;
}

}  // namespace

std::optional<Bicycle> as_bicycle(const Digraph& g) {
  if (g.empty()) return std::nullopt;
  SccDecomposition d = scc(g);
  const std::size_t k = d.components.size();
  const Digraph& cond = d.condensation;

  if (k == 1) {
    Bicycle bi;
    Vertex v = d.components[0][0];
    bi.connecting_path = {v};
    if (d.trivial(g, 0)) return bi;
    if (!is_cycle_component(g, d, 0)) return std::nullopt;
    bi.terminal_cycle = walk_cycle(g, d, v);
    return bi;
  }

  // The condensation must be a chain with one edge between consecutive members.
  if (cond.edge_count() != k - 1) return std::nullopt;
  std::vector<std::size_t> chain;
  for (std::size_t c = 0; c < k; ++c)
    if (cond.in_degree(c) == 0) chain.push_back(c);
  if (chain.size() != 1) return std::nullopt;
  while (chain.size() < k) {
    const auto& succ = cond.successors(chain.back());
    if (succ.size() != 1) return std::nullopt;
    chain.push_back(succ[0]);
  }

  // The unique original edge between two consecutive components.
  auto cross_edge = [&](std::size_t a, std::size_t b) -> std::optional<std::pair<Vertex, Vertex>> {
    std::optional<std::pair<Vertex, Vertex>> found;
    for (Vertex u : d.components[a])
      for (Vertex v : g.successors(u))
        if (d.component_of[v] == b) {
          if (found) return std::nullopt;
          found = std::make_pair(u, v);
        }
    return found;
  };

  std::vector<std::pair<Vertex, Vertex>> crossings;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    auto e = cross_edge(chain[i], chain[i + 1]);
    if (!e) return std::nullopt;
    crossings.push_back(*e);
  }
  for (std::size_t i = 1; i + 1 < k; ++i)
    if (!d.trivial(g, chain[i])) return std::nullopt;

  Bicycle bi;
  std::size_t first = chain.front(), last = chain.back();
  if (!d.trivial(g, first)) {
    if (!is_cycle_component(g, d, first)) return std::nullopt;
    bi.initial_cycle = walk_cycle(g, d, crossings.front().first);
  }
  if (!d.trivial(g, last)) {
    if (!is_cycle_component(g, d, last)) return std::nullopt;
    bi.terminal_cycle = walk_cycle(g, d, crossings.back().second);
  }
  bi.connecting_path.push_back(crossings.front().first);
  for (auto [u, v] : crossings) bi.connecting_path.push_back(v);
  return bi;
}

// ---------------------------------------------------------------- atomicity

namespace {

// Shortest path from `from` (inclusive) to the first vertex outside its component,
// following edges forward; or into `from` from outside, following edges backward.
DiPath shortest_exit(const Digraph& g, const SccDecomposition& d, Vertex from, bool forward) {
  std::size_t c = d.component_of[from];
  std::vector<std::optional<Vertex>> parent(g.size());
  std::vector<bool> seen(g.size(), false);
  std::deque<Vertex> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    const auto& next = forward ? g.successors(v) : g.predecessors(v);
    for (Vertex w : next) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      if (d.component_of[w] != c) {
        DiPath p{w};
        while (parent[p.back()]) p.push_back(*parent[p.back()]);
        if (forward) std::reverse(p.begin(), p.end());
        return p;
      }
      queue.push_back(w);
    }
  }
  throw std::logic_error("component has no exit");
}

}  // namespace

Decision<PathPair> path_poset_atomic(const Digraph& g) {
  Decision<PathPair> r;
  if (g.empty()) {
    r.outcome = Outcome::degenerate;
    r.degenerate_tag = "degenerate: empty";
    r.explanation = "empty graph has no paths";
    return r;
  }
  if (is_strongly_connected(g)) {
    r.explanation = "graph is strongly connected";
    return r;
  }
  if (as_bicycle(g)) {
    r.explanation = "graph is a bicycle";
    return r;
  }
  r.outcome = Outcome::no;
  SccDecomposition d = scc(g);
  const std::size_t k = d.components.size();

  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v) {
      std::size_t cu = d.component_of[u], cv = d.component_of[v];
      if (!d.reach[cu][cv] && !d.reach[cv][cu]) {
        r.witness = PathPair{{u}, {v}};
        r.explanation = "vertices " + g.id(u) + " and " + g.id(v) + " are mutually unreachable";
        return r;
      }
    }

  // Components are now totally ordered by reachability.
  auto is_final = [&](std::size_t c) { return d.condensation.out_degree(c) == 0; };
  auto is_first = [&](std::size_t c) { return d.condensation.in_degree(c) == 0; };

  for (Vertex u = 0; u < g.size(); ++u) {
    if (g.in_degree(u) < 2 || is_final(d.component_of[u])) continue;
    DiPath tail = shortest_exit(g, d, u, true);
    Vertex v = g.predecessors(u)[0], w = g.predecessors(u)[1];
    DiPath a{v}, b{w};
    a.insert(a.end(), tail.begin(), tail.end());
    b.insert(b.end(), tail.begin(), tail.end());
    r.witness = PathPair{a, b};
    r.explanation = "vertex " + g.id(u) + " has two in-edges and lies in a non-final component";
    return r;
  }
  for (Vertex u = 0; u < g.size(); ++u) {
    if (g.out_degree(u) < 2 || is_first(d.component_of[u])) continue;
    DiPath head = shortest_exit(g, d, u, false);
    DiPath a(head), b(head);
    a.push_back(g.successors(u)[0]);
    b.push_back(g.successors(u)[1]);
    r.witness = PathPair{a, b};
    r.explanation = "vertex " + g.id(u) + " has two out-edges and lies in a non-initial component";
    return r;
  }
  std::size_t first = 0, last = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (is_first(c)) first = c;
    if (is_final(c)) last = c;
  }
  std::vector<DiPath> leaving, entering;
  for (auto [u, v] : g.edges()) {
    if (d.component_of[u] == first && d.component_of[v] != first) leaving.push_back({u, v});
    if (d.component_of[v] == last && d.component_of[u] != last) entering.push_back({u, v});
  }
  if (leaving.size() >= 2) {
    r.witness = PathPair{leaving[0], leaving[1]};
    r.explanation = "two edges leave the initial component";
    return r;
  }
  if (entering.size() >= 2) {
    r.witness = PathPair{entering[0], entering[1]};
    r.explanation = "two edges enter the final component";
    return r;
  }
  throw std::logic_error("non-atomic graph without a recognised obstruction");
}

// ---------------------------------------------------------------- wqo

namespace {

// Shortest closed walk x -> ... -> x; every vertex on it is distinct except the ends.
DiPath shortest_cycle_through(const Digraph& g, Vertex x) {
  std::vector<std::optional<Vertex>> parent(g.size());
  std::vector<bool> seen(g.size(), false);
  std::deque<Vertex> queue{x};
  seen[x] = true;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.successors(v)) {
      if (w == x) {
        DiPath p{v};
        while (parent[p.back()]) p.push_back(*parent[p.back()]);
        std::reverse(p.begin(), p.end());
        p.push_back(x);
        return p;
      }
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  throw std::logic_error("vertex lies on no cycle");
}

}  // namespace

std::optional<DiPath> has_in_out_cycle(const Digraph& g) {
  SccDecomposition d = scc(g);
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    if (d.trivial(g, c)) continue;
    const auto& comp = d.components[c];
    bool has_out = std::any_of(comp.begin(), comp.end(), [&](Vertex v) { return g.out_degree(v) > 1; });
    if (!has_out) continue;
    for (Vertex x : comp)
      if (g.in_degree(x) > 1) return shortest_cycle_through(g, x);
  }
  return std::nullopt;
}

std::vector<DiPath> in_out_antichain(const Digraph& g, const DiPath& cycle, std::size_t n) {
  if (cycle.size() < 2 || cycle.front() != cycle.back() || !is_path(g, cycle))
    throw InvalidInput("in-out antichain needs a closed walk");
  DiPath ring(cycle.begin(), cycle.end() - 1);
  const std::size_t len = ring.size();

  std::size_t xi = len;
  for (std::size_t i = 0; i < len && xi == len; ++i)
    if (g.in_degree(ring[i]) > 1) xi = i;
  if (xi == len) throw InvalidInput("cycle has no vertex of in-degree > 1");
  std::rotate(ring.begin(), ring.begin() + xi, ring.end());

  std::size_t yj = len;
  for (std::size_t j = 0; j < len && yj == len; ++j)
    if (g.out_degree(ring[j]) > 1) yj = j;
  if (yj == len) throw InvalidInput("cycle has no vertex of out-degree > 1");

  Vertex x = ring[0], y = ring[yj];
  Vertex pred_x = ring[len - 1], succ_y = ring[(yj + 1) % len];
  Vertex v = 0, w = 0;
  for (Vertex p : g.predecessors(x))
    if (p != pred_x) { v = p; break; }
  for (Vertex s : g.successors(y))
    if (s != succ_y) { w = s; break; }

  std::vector<DiPath> out;
  for (std::size_t k = 1; k <= n; ++k) {
    DiPath p{v, x};
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t i = 1; i <= len; ++i) p.push_back(ring[i % len]);
    for (std::size_t i = 1; i <= yj; ++i) p.push_back(ring[i]);
    p.push_back(w);
    out.push_back(std::move(p));
  }
  return out;
}

Decision<PathAntichain> path_poset_wqo(const Digraph& g, std::size_t n) {
  Decision<PathAntichain> r;
  auto cycle = has_in_out_cycle(g);
  if (!cycle) {
    r.explanation = g.empty() ? "empty graph has no paths" : "graph has no in-out cycle";
    return r;
  }
  r.outcome = Outcome::no;
  r.witness = PathAntichain{*cycle, in_out_antichain(g, *cycle, n)};
  r.explanation = "in-out cycle " + format_path(g, *cycle);
  return r;
}

std::optional<std::vector<Bicycle>> bicycle_decomposition(const Digraph& g, std::size_t route_cap) {
  if (has_in_out_cycle(g)) return std::nullopt;
  SccDecomposition d = scc(g);
  const Digraph& cond = d.condensation;
  std::vector<Bicycle> out;

  auto cycle_or_empty = [&](std::size_t c, Vertex at) {
    return d.trivial(g, c) ? std::vector<Vertex>{} : walk_cycle(g, d, at);
  };

  for (std::size_t s = 0; s < d.components.size(); ++s) {
    if (cond.in_degree(s) != 0) continue;
    if (cond.out_degree(s) == 0) {
      Bicycle bi;
      Vertex v = d.components[s][0];
      bi.connecting_path = {v};
      bi.terminal_cycle = cycle_or_empty(s, v);
      out.push_back(std::move(bi));
      continue;
    }
    for (Vertex x : d.components[s]) {
      for (Vertex y : g.successors(x)) {
        if (d.component_of[y] == s) continue;
        DiPath route{x, y};
        std::function<void()> extend = [&] {
          Vertex v = route.back();
          std::size_t c = d.component_of[v];
          if (cond.out_degree(c) == 0) {
            if (out.size() >= route_cap)
              throw ResourceLimit("bicycle decomposition exceeds " + std::to_string(route_cap) +
                                  " routes");
            Bicycle bi;
            bi.initial_cycle = cycle_or_empty(s, x);
            bi.connecting_path = route;
            bi.terminal_cycle = cycle_or_empty(c, v);
            out.push_back(std::move(bi));
            return;
          }
          for (Vertex w : g.successors(v)) {
            route.push_back(w);
            extend();
            route.pop_back();
          }
        };
        extend();
      }
    }
  }
  return out;
}

std::vector<DiPath> enumerate_paths(const Digraph& g, std::size_t max_vertices) {
  if (max_vertices == 0) throw InvalidInput("maxVertices must be at least 1");
  std::vector<DiPath> out;
  DiPath cur;
  std::function<void()> grow = [&] {
    out.push_back(cur);
    if (cur.size() == max_vertices) return;
    for (Vertex w : g.successors(cur.back())) {
      cur.push_back(w);
      grow();
      cur.pop_back();
    }
  };
  for (Vertex v = 0; v < g.size(); ++v) {
    cur = {v};
    grow();
  }
  return out;
}

// ---------------------------------------------------------------- DOT

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Digraph& g, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.size(); ++v) os << "  n" << v << " [label=" << quote(g.id(v)) << "];\n";
  for (auto [u, v] : g.edges()) os << "  n" << u << " -> n" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const Digraph& g, const Bicycle& bi, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  auto role = [&](Vertex v) -> std::string {
    auto in = [v](const std::vector<Vertex>& xs) { return std::find(xs.begin(), xs.end(), v) != xs.end(); };
    if (in(bi.initial_cycle)) return "initial cycle";
    if (in(bi.terminal_cycle)) return "terminal cycle";
    return "connecting path";
  };
  for (Vertex v : bi.vertices())
    os << "  n" << v << " [label=" << quote(g.id(v)) << ", comment=" << quote(role(v)) << "];\n";
  for (auto [u, v] : bi.edges()) os << "  n" << u << " -> n" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace consec
