#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "consec/decision.hpp"

namespace consec {

using Vertex = std::size_t;

// Vertex sequence of a directed path. A single vertex is the empty path.
using DiPath = std::vector<Vertex>;

// Finite digraph with loops and no parallel edges. Vertices are indexed in
// declaration order; that order is the tie-break used by every algorithm.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::vector<std::string> ids);

  Vertex add_vertex(std::string id);
  void add_edge(Vertex u, Vertex v);
  void add_edge(std::string_view u, std::string_view v);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::string& id(Vertex v) const { return ids_.at(v); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<Vertex> find(std::string_view id) const;

  // Sorted by vertex index.
  const std::vector<Vertex>& successors(Vertex v) const { return out_.at(v); }
  const std::vector<Vertex>& predecessors(Vertex v) const { return in_.at(v); }
  std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  // All edges, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Subgraph induced on `keep`; vertex order follows `keep`.
  Digraph induced(std::span<const Vertex> keep) const;

  bool operator==(const Digraph& other) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> out_, in_;
  std::size_t edge_count_ = 0;
};

bool is_path(const Digraph& g, const DiPath& p);
// Path a occurs as a contiguous block of path b.
bool is_subpath(const DiPath& a, const DiPath& b);
std::string format_path(const Digraph& g, const DiPath& p);

struct SccDecomposition {
  // Each component sorted; components sorted by their least vertex.
  std::vector<std::vector<Vertex>> components;
  std::vector<std::size_t> component_of;
  // Vertex i of the condensation is components[i].
  Digraph condensation;
  // reach[i][j]: component i reaches component j (reflexive).
  std::vector<std::vector<bool>> reach;

  bool precedes(std::size_t a, std::size_t b) const { return a != b && reach[a][b]; }
  bool trivial(const Digraph& g, std::size_t c) const;
};

SccDecomposition scc(const Digraph& g);
bool is_strongly_connected(const Digraph& g);

struct Bicycle {
  std::vector<Vertex> initial_cycle;    // empty if absent; [0] is the exit vertex
  std::vector<Vertex> connecting_path;  // nonempty
  std::vector<Vertex> terminal_cycle;   // empty if absent; [0] is the entry vertex

  bool has_initial() const { return !initial_cycle.empty(); }
  bool has_terminal() const { return !terminal_cycle.empty(); }
  std::vector<Vertex> vertices() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  // Every vertex and edge of p belongs to the bicycle.
  bool contains_path(const DiPath& p) const;
  bool operator==(const Bicycle&) const = default;
};

std::optional<Bicycle> as_bicycle(const Digraph& g);

struct PathPair {
  DiPath first, second;
};

struct PathAntichain {
  DiPath in_out_cycle;  // closed: front() == back()
  std::vector<DiPath> paths;
};

Decision<PathPair> path_poset_atomic(const Digraph& g);

// Closed walk x ... x through a vertex of in-degree > 1 and one of out-degree > 1.
std::optional<DiPath> has_in_out_cycle(const Digraph& g);

inline constexpr std::size_t kDefaultRouteCap = 100000;
inline constexpr std::size_t kDefaultAntichainLength = 10;

std::optional<std::vector<Bicycle>> bicycle_decomposition(
    const Digraph& g, std::size_t route_cap = kDefaultRouteCap);

// Antichain (v -> x) C^k (x -> ... -> w) for k = 1..n along an in-out cycle C.
std::vector<DiPath> in_out_antichain(const Digraph& g, const DiPath& cycle, std::size_t n);

Decision<PathAntichain> path_poset_wqo(const Digraph& g,
                                       std::size_t n = kDefaultAntichainLength);

std::vector<DiPath> enumerate_paths(const Digraph& g, std::size_t max_vertices);

// Graphviz, vertices labelled by id. Bicycle parts are marked with `comment`.
std::string to_dot(const Digraph& g, std::string_view name = "G");
std::string to_dot(const Digraph& g, const Bicycle& bi, std::string_view name = "B");

}  // namespace consec
