#include <algorithm>
#include <functional>

#include "consec/errors.hpp"
#include "consec/perms.hpp"

namespace consec {

namespace {

void check_path(std::span<const Permutation> path) {
  if (path.empty()) throw InvalidInput("empty path");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!perm_overlap(path[i], path[i + 1]))
      throw InvalidInput("no edge " + path[i].str() + " -> " + path[i + 1].str());
}

// Insert a value just above `slot` (0 = below everything): larger values shift up.
void shift_above(std::vector<int>& v, int slot) {
  for (int& x : v)
    if (x > slot) ++x;
}

}  // namespace

std::vector<Permutation> path_to_perm_set(std::span<const Permutation> path, std::optional<std::size_t> limit,
                                          std::size_t cap) {
  check_path(path);
  const std::size_t m = path.front().size();
  std::vector<Permutation> found;
  const std::size_t stop = limit ? *limit + 1 : static_cast<std::size_t>(-1);

  std::vector<int> cur(path.front().values());
  std::function<bool(std::size_t)> grow = [&](std::size_t k) -> bool {
    if (k == path.size()) {
      found.push_back(Permutation::trusted(cur));
      if (found.size() > cap) throw ResourceLimit("path permutation set exceeds " + std::to_string(cap));
      return found.size() >= stop;
    }
    const std::size_t len = cur.size();
    const int rank = path[k][m - 1];
    std::vector<int> window(cur.end() - static_cast<std::ptrdiff_t>(m - 1), cur.end());
    std::sort(window.begin(), window.end());
    int lower = rank >= 2 ? window[rank - 2] : 0;
    int upper = rank <= static_cast<int>(m - 1) ? window[rank - 1] : static_cast<int>(len) + 1;
    for (int slot = lower; slot < upper; ++slot) {
      std::vector<int> saved = cur;
      shift_above(cur, slot);
      cur.push_back(slot + 1);
      bool done = grow(k + 1);
      cur = std::move(saved);
      if (done) return true;
    }
    return false;
  };
  grow(1);
  std::sort(found.begin(), found.end());
  return found;
}

PrependResult unambiguous_prepend(const Permutation& tail, const Permutation& front) {
  const std::size_t m = front.size();
  if (m == 0 || tail.size() + 1 < m) throw InvalidInput("prepend vertex longer than the tail allows");
  if (pattern_at(front, 1, m - 1) != pattern_at(tail, 0, m - 1))
    throw InvalidInput("vertex " + front.str() + " is not compatible with " + tail.str());
  std::vector<int> head(tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(m - 1));
  std::sort(head.begin(), head.end());
  const int rank = front[0];
  int lower = rank >= 2 ? head[rank - 2] : 0;
  int upper = rank <= static_cast<int>(m - 1) ? head[rank - 1] : static_cast<int>(tail.size()) + 1;

  PrependResult r;
  r.count = static_cast<std::size_t>(upper - lower);
  for (int slot = lower; slot < upper && r.extensions.size() < 2; ++slot) {
    std::vector<int> v(tail.values());
    shift_above(v, slot);
    v.insert(v.begin(), slot + 1);
    r.extensions.push_back(Permutation::trusted(std::move(v)));
  }
  return r;
}

AmbiguityReport is_path_ambiguous(std::span<const Permutation> path) {
  check_path(path);
  AmbiguityReport r;
  Permutation tail = path.back();
  for (std::size_t k = path.size() - 1; k-- > 0;) {
    PrependResult step = unambiguous_prepend(tail, path[k]);
    if (step.count >= 2) {
      Permutation a = step.extensions[0], b = step.extensions[1];
      for (std::size_t j = k; j-- > 0;) {
        a = unambiguous_prepend(a, path[j]).extensions.front();
        b = unambiguous_prepend(b, path[j]).extensions.front();
      }
      r.ambiguous = true;
      r.evidence = {std::min(a, b), std::max(a, b)};
      return r;
    }
    tail = step.extensions.front();
  }
  r.evidence = {tail};
  return r;
}

namespace {

// Paths with exactly `count` vertices in lexicographic order, until visit returns true.
bool for_each_path(const Digraph& g, std::size_t count, const std::function<bool(const DiPath&)>& visit) {
  DiPath cur;
  std::function<bool()> grow = [&]() -> bool {
    if (cur.size() == count) return visit(cur);
    for (Vertex w : g.successors(cur.back())) {
      cur.push_back(w);
      bool done = grow();
      cur.pop_back();
      if (done) return true;
    }
    return false;
  };
  for (Vertex v = 0; v < g.size(); ++v) {
    cur = {v};
    if (grow()) return true;
  }
  return false;
}

bool ambiguous(const PermFactorGraph& g, const DiPath& p) {
  auto perms = g.perms_of(p);
  return is_path_ambiguous(perms).ambiguous;
}

}  // namespace

std::optional<DiPath> has_ambiguous_path(const PermFactorGraph& g) {
  std::optional<DiPath> hit;
  for (std::size_t len = 2; len <= g.dimension && !hit; ++len)
    for_each_path(g.graph, len, [&](const DiPath& p) {
      if (!ambiguous(g, p)) return false;
      hit = p;
      return true;
    });
  return hit;
}

std::optional<DiPath> has_ambiguous_cycle(const PermFactorGraph& g) {
  SccDecomposition d = scc(g.graph);
  std::optional<DiPath> hit;
  for (std::size_t len = 2; len <= g.dimension && !hit; ++len)
    for_each_path(g.graph, len, [&](const DiPath& p) {
      if (d.component_of[p.front()] != d.component_of[p.back()]) return false;
      if (!ambiguous(g, p)) return false;
      DiPath head(p.begin(), p.end() - 1), tail(p.begin() + 1, p.end());
      if (ambiguous(g, head) || ambiguous(g, tail)) return false;
      hit = p;
      return true;
    });
  return hit;
}

}  // namespace consec
