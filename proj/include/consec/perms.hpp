#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "consec/decision.hpp"
#include "consec/digraph.hpp"
#include "consec/permutation.hpp"

namespace consec {

struct PermClassSpec {
  std::vector<Permutation> basis;  // antichain, sorted by length then one-line
  std::size_t b = 2;
  bool empty_class = false;  // basis contained 1
  bool empty_basis = false;

  static PermClassSpec make(std::vector<Permutation> basis);
  bool contains(const Permutation& p) const;
};

struct PermFactorGraph {
  std::size_t dimension = 0;
  Digraph graph;
  std::vector<Permutation> vertex_perms;
  std::map<Permutation, Vertex> index;

  const Permutation& perm(Vertex v) const { return vertex_perms.at(v); }
  std::vector<Permutation> perms_of(const DiPath& p) const;
  std::optional<DiPath> path_of(const Permutation& p) const;
};

// sigma -> tau is an edge of the full factor graph of dimension |sigma|.
bool perm_overlap(const Permutation& sigma, const Permutation& tau);

PermFactorGraph perm_factor_graph(const PermClassSpec& spec, std::size_t m);
// Induced subgraph of the full factor graph on the given equal-length vertices.
PermFactorGraph perm_graph_on(std::vector<Permutation> vertices);

// Members of length <= max_len, by length then one-line order.
std::vector<Permutation> enumerate_class_perms(const PermClassSpec& spec, std::size_t max_len);

inline constexpr std::size_t kDefaultSigmaCap = 1000000;

// All permutations tracing `path`, sorted. With a limit, stops after limit+1 finds.
std::vector<Permutation> path_to_perm_set(std::span<const Permutation> path,
                                          std::optional<std::size_t> limit = std::nullopt,
                                          std::size_t cap = kDefaultSigmaCap);

struct PrependResult {
  std::size_t count = 0;
  std::vector<Permutation> extensions;  // the first two, by inserted value
  std::optional<Permutation> unique() const {
    return count == 1 ? std::optional<Permutation>(extensions.front()) : std::nullopt;
  }
};

// Extensions of `tail` by a new first entry whose first window is `front`.
PrependResult unambiguous_prepend(const Permutation& tail, const Permutation& front);

struct AmbiguityReport {
  bool ambiguous = false;
  // Two distinct members of the path's set when ambiguous, else the unique member.
  std::vector<Permutation> evidence;
};

AmbiguityReport is_path_ambiguous(std::span<const Permutation> path);

std::optional<DiPath> has_ambiguous_path(const PermFactorGraph& g);
std::optional<DiPath> has_ambiguous_cycle(const PermFactorGraph& g);

// -------------------------------------------------------------- bicycles

enum class Side { initial, terminal };
enum class Monotonicity { increasing, decreasing };
enum class PairKind { increasing, decreasing, expanding, shrinking };

std::string to_string(Side s);
std::string to_string(Monotonicity m);
std::string to_string(PairKind k);

struct IteratorSpec {
  Side side = Side::terminal;
  std::vector<Permutation> cycle;  // [0] is the exit vertex (initial) or entry vertex (terminal)
  std::size_t r = 0, s = 0;
  // Offset into `cycle` of the first window of the iterator.
  std::size_t start = 0;
  Permutation iterator;
  // Two consecutive copies in left-to-right order: gamma_1 gamma_2, or alpha_2 alpha_1.
  Permutation two_copies;
  std::vector<Monotonicity> entry_monotonicity;

  std::size_t length() const { return iterator.size(); }
};

struct IteratorPair {
  std::optional<IteratorSpec> alpha, gamma;
  std::size_t c() const;
};

// Error raised when an iterated cycle is ambiguous.
class AmbiguousCycleError : public std::runtime_error {
 public:
  AmbiguousCycleError(std::vector<Permutation> path, const std::string& what)
      : std::runtime_error(what), path_(std::move(path)) {}
  const std::vector<Permutation>& path() const { return path_; }

 private:
  std::vector<Permutation> path_;
};

IteratorPair compute_iterators(const PermFactorGraph& g, const Bicycle& bi, std::size_t b);

struct PairClass {
  // Consecutive values (value, value+1) of the iterator; 0 and |it|+1 are the phantoms.
  std::size_t value = 0;
  std::optional<std::size_t> lower_pos, upper_pos;  // 0-based; nullopt is a phantom
  PairKind kind = PairKind::increasing;
};

std::vector<PairClass> classify_pairs(const IteratorSpec& it);

struct Segment {
  std::size_t begin = 0, end = 0;
  std::size_t size() const { return end - begin; }
};

// A balanced permutation with its parts located.
struct BalancedLayout {
  std::size_t m = 0;  // cycle length
  std::size_t alpha_len = 0, beta_len = 0, gamma_len = 0;

  std::size_t total() const { return m * alpha_len + beta_len + m * gamma_len; }
  Segment beta() const { return {m * alpha_len, m * alpha_len + beta_len}; }
  // alpha_t for t = 1..m, alpha_1 adjacent to beta.
  Segment alpha(std::size_t t) const { return {(m - t) * alpha_len, (m - t + 1) * alpha_len}; }
  Segment gamma(std::size_t t) const {
    std::size_t base = beta().end;
    return {base + (t - 1) * gamma_len, base + t * gamma_len};
  }
};

struct Core {
  Permutation perm;
  BalancedLayout layout;
};

// Everything derived from one bicycle of a permutation factor graph.
struct BicycleContext {
  const PermFactorGraph* graph = nullptr;
  Bicycle bicycle;
  std::size_t b = 2;
  IteratorPair iterators;

  BicycleContext(const PermFactorGraph& g, Bicycle bi, std::size_t b);
  std::size_t c() const { return iterators.c(); }
  BalancedLayout layout(std::size_t m) const;
  // Vertex sequence of the balanced path with cycle length m.
  std::vector<Permutation> balanced_path(std::size_t m) const;
};

inline constexpr std::size_t kDefaultCoreCap = 100000;

std::vector<Core> enumerate_cores(const BicycleContext& ctx, std::size_t cap = kDefaultCoreCap);

struct SplittableWitness {
  std::size_t core_index = 0;
  Core core;
  Side side = Side::terminal;
  PairClass pair;
  std::size_t entry_position = 0;  // position of the splitting point in the core
};

std::optional<SplittableWitness> has_splittable_pair(const BicycleContext& ctx,
                                                     const std::vector<Core>& cores);
std::optional<SplittableWitness> has_splittable_pair(const BicycleContext& ctx);

// The balanced permutation with the given core and cycle length m >= c.
Permutation balanced_permutation(const BicycleContext& ctx, const Core& core, std::size_t m);

std::vector<Permutation> antichain_from_splittable(const BicycleContext& ctx, const SplittableWitness& w,
                                                   std::size_t n);

// Antichain from an ambiguous path whose end reaches its start.
std::vector<Permutation> antichain_from_ambiguous_cycle(const PermFactorGraph& g, const DiPath& path,
                                                        std::size_t n);

// -------------------------------------------------------------- decisions

struct PermWitness {
  enum class Kind { non_joinable_pair, unextendable_perm, antichain };
  Kind kind = Kind::non_joinable_pair;
  std::vector<Permutation> perms;        // pair or antichain prefix
  std::vector<Permutation> graph_path;   // ambiguous path or in-out cycle, when one is the cause
  std::optional<SplittableWitness> splittable;
  std::string source;  // which obstruction produced the witness
};

Decision<PermWitness> decide_perm_atomic(const PermClassSpec& spec);
Decision<PermWitness> decide_perm_wqo(const PermClassSpec& spec, std::size_t n = kDefaultAntichainLength);

}  // namespace consec
