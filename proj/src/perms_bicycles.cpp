#include <algorithm>
#include <numeric>

#include "consec/errors.hpp"
#include "consec/perms.hpp"

namespace consec {

std::string to_string(Side s) { return s == Side::initial ? "initial" : "terminal"; }

std::string to_string(Monotonicity m) { return m == Monotonicity::increasing ? "increasing" : "decreasing"; }

std::string to_string(PairKind k) {
  switch (k) {
    case PairKind::increasing: return "increasing";
    case PairKind::decreasing: return "decreasing";
    case PairKind::expanding: return "expanding";
    case PairKind::shrinking: return "shrinking";
  }
  return "?";
}

std::size_t IteratorPair::c() const {
  return std::max(alpha ? alpha->length() : 0, gamma ? gamma->length() : 0);
}

namespace {

IteratorSpec make_iterator(const PermFactorGraph& g, const std::vector<Vertex>& cycle, Side side, std::size_t b) {
  IteratorSpec it;
  it.side = side;
  for (Vertex v : cycle) it.cycle.push_back(g.perm(v));
  it.r = cycle.size();
  it.s = (b + it.r - 1) / it.r;
  const std::size_t len = it.r * it.s;
  // The terminal iterator's first window sits b steps past the entry vertex.
  it.start = side == Side::terminal ? b % it.r : 0;

  std::vector<Permutation> walk;
  for (std::size_t k = 0; k + b <= 2 * len; ++k) walk.push_back(it.cycle[(it.start + k) % it.r]);
  auto two = path_to_perm_set(walk, 1);
  if (two.size() != 1)
    throw AmbiguousCycleError(walk, "iterated " + to_string(side) + " cycle is ambiguous");
  it.two_copies = two.front();
  it.iterator = pattern_at(it.two_copies, 0, len);
  for (std::size_t i = 0; i < len; ++i) {
    int first = it.two_copies[i], second = it.two_copies[len + i];
    // Terminal copies read left to right; initial copies read right to left.
    bool up = side == Side::terminal ? first < second : second < first;
    it.entry_monotonicity.push_back(up ? Monotonicity::increasing : Monotonicity::decreasing);
  }
  return it;
}

}  // namespace

IteratorPair compute_iterators(const PermFactorGraph& g, const Bicycle& bi, std::size_t b) {
  IteratorPair out;
  if (bi.has_initial()) out.alpha = make_iterator(g, bi.initial_cycle, Side::initial, b);
  if (bi.has_terminal()) out.gamma = make_iterator(g, bi.terminal_cycle, Side::terminal, b);
  return out;
}

std::vector<PairClass> classify_pairs(const IteratorSpec& it) {
  const std::size_t n = it.length();
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t i = 0; i < n; ++i) pos[it.iterator[i]] = i;
  auto inc = [&](std::size_t p) { return it.entry_monotonicity[p] == Monotonicity::increasing; };

  std::vector<PairClass> out;
  for (std::size_t v = 0; v <= n; ++v) {
    PairClass pc;
    pc.value = v;
    if (v >= 1) pc.lower_pos = pos[v];
    if (v < n) pc.upper_pos = pos[v + 1];
    if (!pc.lower_pos) {
      pc.kind = inc(*pc.upper_pos) ? PairKind::expanding : PairKind::shrinking;
    } else if (!pc.upper_pos) {
      pc.kind = inc(*pc.lower_pos) ? PairKind::shrinking : PairKind::expanding;
    } else {
      bool li = inc(*pc.lower_pos), ui = inc(*pc.upper_pos);
      pc.kind = li && ui    ? PairKind::increasing
                : !li && !ui ? PairKind::decreasing
                : !li        ? PairKind::expanding
                             : PairKind::shrinking;
    }
    out.push_back(pc);
  }
  return out;
}

BicycleContext::BicycleContext(const PermFactorGraph& g, Bicycle bi, std::size_t b_)
    : graph(&g), bicycle(std::move(bi)), b(b_), iterators(compute_iterators(g, bicycle, b_)) {}

BalancedLayout BicycleContext::layout(std::size_t m) const {
  BalancedLayout l;
  l.m = m;
  l.alpha_len = iterators.alpha ? iterators.alpha->length() : 0;
  l.gamma_len = iterators.gamma ? iterators.gamma->length() : 0;
  l.beta_len = bicycle.connecting_path.size() - 1 + b;
  return l;
}

std::vector<Permutation> BicycleContext::balanced_path(std::size_t m) const {
  std::vector<Permutation> path;
  const auto& ini = bicycle.initial_cycle;
  const auto& ter = bicycle.terminal_cycle;
  if (iterators.alpha)
    for (std::size_t k = 0; k < m * iterators.alpha->length(); ++k) path.push_back(graph->perm(ini[k % ini.size()]));
  for (Vertex v : bicycle.connecting_path) path.push_back(graph->perm(v));
  if (iterators.gamma)
    for (std::size_t k = 1; k <= m * iterators.gamma->length(); ++k) path.push_back(graph->perm(ter[k % ter.size()]));
  return path;
}

std::vector<Core> enumerate_cores(const BicycleContext& ctx, std::size_t cap) {
  std::vector<Core> out;
  BalancedLayout l = ctx.layout(ctx.c());
  for (auto& p : path_to_perm_set(ctx.balanced_path(ctx.c()), std::nullopt, cap)) out.push_back({std::move(p), l});
  return out;
}

// ------------------------------------------------------------ balanced permutations

namespace {

enum class Part { alpha, beta, gamma };

struct Place {
  Part part;
  std::size_t copy;  // 1-based for alpha and gamma
  std::size_t index;
};

Place locate(const BalancedLayout& l, std::size_t pos) {
  Segment beta = l.beta();
  if (pos < beta.begin) {
    std::size_t from_beta = beta.begin - 1 - pos;
    return {Part::alpha, from_beta / l.alpha_len + 1, l.alpha_len - 1 - from_beta % l.alpha_len};
  }
  if (pos < beta.end) return {Part::beta, 0, pos - beta.begin};
  std::size_t off = pos - beta.end;
  return {Part::gamma, off / l.gamma_len + 1, off % l.gamma_len};
}

std::size_t core_position(const BalancedLayout& core, Part part, std::size_t copy, std::size_t index) {
  switch (part) {
    case Part::alpha: return core.alpha(copy).begin + index;
    case Part::beta: return core.beta().begin + index;
    case Part::gamma: return core.gamma(copy).begin + index;
  }
  return 0;
}

}  // namespace

Permutation balanced_permutation(const BicycleContext& ctx, const Core& core, std::size_t m) {
  const std::size_t c = ctx.c();
  if (m < c) throw InvalidInput("cycle length below the core length");
  if (m == c) return core.perm;
  BalancedLayout big = ctx.layout(m);
  const BalancedLayout& small = core.layout;
  const auto& v = core.perm;

  // Comparisons reduce to core comparisons: copies of one iterator by their
  // distance, everything else by pulling copy numbers back to at most c.
  auto less = [&](std::size_t x, std::size_t y) {
    Place a = locate(big, x), b = locate(big, y);
    if (a.part == b.part && a.part != Part::beta) {
      std::size_t ca = 1, cb = 1;
      if (a.copy <= b.copy)
        cb = std::min(b.copy - a.copy + 1, c);
      else
        ca = std::min(a.copy - b.copy + 1, c);
      return v[core_position(small, a.part, ca, a.index)] < v[core_position(small, b.part, cb, b.index)];
    }
    return v[core_position(small, a.part, std::min(a.copy, c), a.index)] <
           v[core_position(small, b.part, std::min(b.copy, c), b.index)];
  };
  std::vector<std::size_t> order(big.total());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), less);
  std::vector<int> values(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) values[order[r]] = static_cast<int>(r) + 1;
  Permutation out = Permutation::trusted(std::move(values));

  if (perm_to_path(out, ctx.b) != ctx.balanced_path(m) || pattern_at(out, big.alpha(c).begin, small.total()) != v)
    throw InvalidInput("balanced permutation is not determined by this core");
  return out;
}

namespace {

// Appends (or prepends) copies following only the two-copy pattern. Each new
// entry goes directly above its predecessor in that pattern. The result
// traces the balanced path but need not be the core-determined extension.
std::vector<int> extend_by_copies(const IteratorSpec& it, std::vector<int> seq, std::size_t copies) {
  const std::size_t len = it.length();
  const auto& two = it.two_copies;
  // Pattern positions of the new copy and of the existing neighbour copy.
  const std::size_t new_off = it.side == Side::terminal ? len : 0;
  const std::size_t old_off = len - new_off;
  std::vector<std::size_t> at_value(2 * len + 1);
  for (std::size_t i = 0; i < 2 * len; ++i) at_value[two[i]] = i;

  for (std::size_t step = 0; step < copies; ++step) {
    const std::size_t old_begin = it.side == Side::terminal ? seq.size() - len : 0;
    std::vector<int> fresh(len, 0);
    std::vector<std::size_t> order(len);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return two[new_off + a] < two[new_off + b]; });
    for (std::size_t i : order) {
      int q = two[new_off + i];
      int slot = 0;
      if (q > 1) {
        std::size_t below = at_value[q - 1];
        slot = below >= new_off && below < new_off + len ? fresh[below - new_off] : seq[old_begin + below - old_off];
      }
      for (int& x : seq)
        if (x > slot) ++x;
      for (int& x : fresh)
        if (x > slot) ++x;
      fresh[i] = slot + 1;
    }
    if (it.side == Side::terminal)
      seq.insert(seq.end(), fresh.begin(), fresh.end());
    else
      seq.insert(seq.begin(), fresh.begin(), fresh.end());
  }
  return seq;
}

}  // namespace

// ------------------------------------------------------------ splittable pairs

std::optional<SplittableWitness> has_splittable_pair(const BicycleContext& ctx, const std::vector<Core>& cores) {
  const Bicycle& bi = ctx.bicycle;
  // A lone cycle offers no entries outside its own copies.
  if (!bi.has_initial() && bi.connecting_path.size() == 1) return std::nullopt;

  std::vector<PairClass> gamma_pairs, alpha_pairs;
  if (ctx.iterators.gamma) gamma_pairs = classify_pairs(*ctx.iterators.gamma);
  if (ctx.iterators.alpha) alpha_pairs = classify_pairs(*ctx.iterators.alpha);

  for (std::size_t idx = 0; idx < cores.size(); ++idx) {
    const Core& core = cores[idx];
    const auto& v = core.perm;
    const int top = static_cast<int>(v.size()) + 1;
    const BalancedLayout& l = core.layout;
    auto bounds = [&](const PairClass& pc, Segment copy1) {
      int lo = pc.lower_pos ? v[copy1.begin + *pc.lower_pos] : 0;
      int hi = pc.upper_pos ? v[copy1.begin + *pc.upper_pos] : top;
      return std::make_pair(lo, hi);
    };
    for (const auto& pc : gamma_pairs) {
      if (pc.kind != PairKind::shrinking) continue;
      auto [lo, hi] = bounds(pc, l.gamma(1));
      for (std::size_t p = l.beta().end; p-- > 0;)
        if (v[p] > lo && v[p] < hi) return SplittableWitness{idx, core, Side::terminal, pc, p};
    }
    for (const auto& pc : alpha_pairs) {
      if (pc.kind != PairKind::shrinking) continue;
      auto [lo, hi] = bounds(pc, l.alpha(1));
      for (std::size_t p = l.beta().begin; p < v.size(); ++p)
        if (v[p] > lo && v[p] < hi) return SplittableWitness{idx, core, Side::initial, pc, p};
    }
  }
  return std::nullopt;
}

namespace {

// Strict order on positions generated by the windows of a path; Sigma of the
// path is the set of its linear extensions.
struct WindowPoset {
  std::size_t n = 0;
  std::vector<std::vector<char>> below;  // below[a][b]: a < b in every member

  WindowPoset(const std::vector<Permutation>& path, std::size_t b) {
    n = path.size() + b - 1;
    std::vector<std::vector<std::size_t>> up(n);
    for (std::size_t k = 0; k < path.size(); ++k) {
      std::vector<std::size_t> by_rank(b);
      for (std::size_t i = 0; i < b; ++i) by_rank[path[k][i] - 1] = k + i;
      for (std::size_t r = 0; r + 1 < b; ++r) up[by_rank[r]].push_back(by_rank[r + 1]);
    }
    below.assign(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<std::size_t> stack(up[a].begin(), up[a].end());
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        if (below[a][v]) continue;
        below[a][v] = 1;
        stack.insert(stack.end(), up[v].begin(), up[v].end());
      }
    }
  }

  bool leq(std::size_t a, std::size_t b) const { return a == b || below[a][b]; }

  // Room for z strictly between x and y (nullopt is unbounded).
  bool fits(std::optional<std::size_t> x, std::size_t z, std::optional<std::size_t> y) const {
    if (x && leq(z, *x)) return false;
    if (y && leq(*y, z)) return false;
    return !(x && y && leq(*y, *x));
  }

  // Linear extension with extra relations lo < z < hi; the largest free value
  // goes to the rightmost maximal position.
  Permutation extension(std::optional<std::size_t> lo, std::size_t z, std::optional<std::size_t> hi) const {
    auto less = [&](std::size_t a, std::size_t b) {
      if (below[a][b]) return true;
      if (lo && leq(a, *lo) && leq(z, b)) return true;
      return hi && leq(*hi, b) && (leq(a, z) || (lo && leq(a, *lo)));
    };
    std::vector<int> values(n, 0);
    std::vector<char> done(n, 0);
    for (int value = static_cast<int>(n); value >= 1; --value) {
      std::size_t pick = n;
      for (std::size_t a = n; a-- > 0;) {
        if (done[a]) continue;
        bool maximal = true;
        for (std::size_t b = 0; b < n && maximal; ++b)
          if (!done[b] && b != a && less(a, b)) maximal = false;
        if (maximal) {
          pick = a;
          break;
        }
      }
      if (pick == n) throw std::logic_error("window order has a cycle");
      done[pick] = 1;
      values[pick] = value;
    }
    return Permutation::trusted(std::move(values));
  }
};

}  // namespace

std::optional<SplittableWitness> has_splittable_pair(const BicycleContext& ctx) {
  const Bicycle& bi = ctx.bicycle;
  if (!bi.has_initial() && bi.connecting_path.size() == 1) return std::nullopt;
  const BalancedLayout l = ctx.layout(ctx.c());
  const WindowPoset poset(ctx.balanced_path(ctx.c()), ctx.b);

  auto witness = [&](Side side, const PairClass& pc, Segment copy1, std::size_t z) {
    std::optional<std::size_t> lo, hi;
    if (pc.lower_pos) lo = copy1.begin + *pc.lower_pos;
    if (pc.upper_pos) hi = copy1.begin + *pc.upper_pos;
    if (!poset.fits(lo, z, hi)) return std::optional<SplittableWitness>();
    Core core{poset.extension(lo, z, hi), l};
    if (perm_to_path(core.perm, ctx.b) != ctx.balanced_path(ctx.c()))
      throw std::logic_error("splitting core leaves the balanced path");
    return std::optional<SplittableWitness>(SplittableWitness{0, std::move(core), side, pc, z});
  };
  if (ctx.iterators.gamma)
    for (const auto& pc : classify_pairs(*ctx.iterators.gamma)) {
      if (pc.kind != PairKind::shrinking) continue;
      for (std::size_t z = l.beta().end; z-- > 0;)
        if (auto w = witness(Side::terminal, pc, l.gamma(1), z)) return w;
    }
  if (ctx.iterators.alpha)
    for (const auto& pc : classify_pairs(*ctx.iterators.alpha)) {
      if (pc.kind != PairKind::shrinking) continue;
      for (std::size_t z = l.beta().begin; z < l.total(); ++z)
        if (auto w = witness(Side::initial, pc, l.alpha(1), z)) return w;
    }
  return std::nullopt;
}

namespace {

// Elements p' Z[1..y] for a sequence Z whose first entry p splits a shrinking
// pair; y runs over entries of one iterator position inside p's gap.
std::vector<Permutation> split_family(const std::vector<int>& z, std::size_t b, std::size_t x0,
                                      std::size_t x_ref, std::size_t step, bool above, std::size_t n) {
  int lo = 0, hi = static_cast<int>(z.size()) + 1;
  for (std::size_t k = 1; k < b && k < z.size(); ++k) {
    if (z[k] < z[0]) lo = std::max(lo, z[k]);
    else hi = std::min(hi, z[k]);
  }
  std::vector<std::size_t> ys;
  for (std::size_t x = std::max<std::size_t>(x0, b); x < z.size() && ys.size() < n; ++x) {
    if ((x + step - x_ref % step) % step != 0) continue;
    if (z[x] <= lo || z[x] >= hi) continue;
    if (!ys.empty() && (above ? z[x] > z[ys.back()] : z[x] < z[ys.back()])) return {};
    ys.push_back(x);
  }
  if (ys.size() < n) return {};
  std::vector<Permutation> out;
  for (std::size_t y : ys) {
    std::vector<int> seq{2 * z[y] + (above ? 1 : -1)};
    for (std::size_t k = 1; k <= y; ++k) seq.push_back(2 * z[k]);
    out.push_back(canonical_perm(seq));
  }
  return out;
}

bool pairwise_incomparable(const std::vector<Permutation>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (i != j && perm_factor_leq(xs[i], xs[j])) return false;
  return true;
}

}  // namespace

std::vector<Permutation> antichain_from_splittable(const BicycleContext& ctx, const SplittableWitness& w,
                                                   std::size_t n) {
  if (n == 0) return {};
  const IteratorSpec& it = w.side == Side::terminal ? *ctx.iterators.gamma : *ctx.iterators.alpha;
  const BalancedLayout& l = w.core.layout;
  const bool use_upper = w.pair.upper_pos.has_value();
  const std::size_t ref_pos = use_upper ? *w.pair.upper_pos : *w.pair.lower_pos;

  for (std::size_t extra = n + 2;; extra *= 2) {
    if (extra > 64 * (n + 2)) throw std::logic_error("splittable antichain construction did not converge");
    std::vector<int> seq = extend_by_copies(it, w.core.perm.values(), extra);
    std::vector<int> z;
    std::size_t x0 = 0, x_ref = 0;
    if (w.side == Side::terminal) {
      const std::size_t p = w.entry_position;
      z.assign(seq.begin() + static_cast<std::ptrdiff_t>(p), seq.end());
      std::size_t cycle_start = l.beta().begin + ctx.bicycle.connecting_path.size() - 1;
      x0 = cycle_start > p ? cycle_start - p : 0;
      x_ref = l.gamma(1).begin + ref_pos - p;
    } else {
      const std::size_t p = w.entry_position + extra * it.length();
      z.assign(seq.rbegin() + static_cast<std::ptrdiff_t>(seq.size() - 1 - p), seq.rend());
      std::size_t cycle_end = extra * it.length() + l.beta().begin + ctx.b - 1;
      x0 = p > cycle_end ? p - cycle_end : 0;
      x_ref = p - (extra * it.length() + l.alpha(1).begin + ref_pos);
    }
    for (std::size_t step : {it.r, it.length()}) {
      auto family = split_family(z, ctx.b, x0, x_ref, step, use_upper, n);
      if (family.empty()) continue;
      if (w.side == Side::initial)
        for (auto& f : family) {
          std::vector<int> rev(f.values().rbegin(), f.values().rend());
          f = Permutation::trusted(std::move(rev));
        }
      if (pairwise_incomparable(family)) return family;
    }
  }
}

// ------------------------------------------------------------ ambiguous cycles

std::vector<Permutation> antichain_from_ambiguous_cycle(const PermFactorGraph& g, const DiPath& path,
                                                        std::size_t n) {
  if (path.size() < 2) throw InvalidInput("path is not ambiguous");
  // Close the path into a ring of vertices.
  DiPath ring(path.begin(), path.end());
  if (path.front() == path.back()) {
    ring.pop_back();
  } else {
    std::vector<std::optional<Vertex>> parent(g.graph.size());
    std::vector<bool> seen(g.graph.size(), false);
    std::vector<Vertex> queue{path.back()};
    seen[path.back()] = true;
    DiPath back;
    for (std::size_t head = 0; head < queue.size() && back.empty(); ++head) {
      Vertex v = queue[head];
      for (Vertex u : g.graph.successors(v)) {
        if (u == path.front()) {
          for (Vertex x = v; x != path.back(); x = *parent[x]) back.push_back(x);
          std::reverse(back.begin(), back.end());
          back.push_back(u);
          break;
        }
        if (seen[u]) continue;
        seen[u] = true;
        parent[u] = v;
        queue.push_back(u);
      }
    }
    if (back.empty()) throw InvalidInput("path end does not reach its start");
    ring.insert(ring.end(), back.begin(), back.end() - 1);
  }
  const std::size_t t = ring.size();
  auto window = [&](std::size_t i, std::size_t edges) {
    std::vector<Permutation> w;
    for (std::size_t k = 0; k <= edges; ++k) w.push_back(g.perm(ring[(i + k) % t]));
    return w;
  };

  std::size_t l = 0, first = 0;
  for (std::size_t edges = 1; edges < path.size() && l == 0; ++edges)
    for (std::size_t i = 0; i < t; ++i)
      if (is_path_ambiguous(window(i, edges)).ambiguous) {
        l = edges;
        first = i;
        break;
      }
  if (l == 0) throw InvalidInput("path is not ambiguous");
  std::rotate(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(first), ring.end());

  std::vector<Permutation> lifted;
  for (std::size_t i = 0; i < t; ++i) lifted.push_back(path_to_perm_set(window(i, l), 0).front());
  auto pair = path_to_perm_set(window(0, l), 1);
  lifted.push_back(pair.front() == lifted.front() ? pair.back() : pair.front());
  PermFactorGraph h = perm_graph_on(lifted);

  auto wqo = path_poset_wqo(h.graph, n);
  if (!wqo.fails()) throw std::logic_error("lifted ambiguous cycle has no in-out cycle");
  std::vector<Permutation> out;
  for (const auto& p : wqo.witness->paths) out.push_back(path_to_perm_set(h.perms_of(p), 0).front());
  return out;
}

}  // namespace consec
