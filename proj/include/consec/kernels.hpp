#pragma once

// Data-parallel filtering kernels. Each kernel has a serial reference with
// identical output in namespace serial; tests and benchmarks compare the two.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "consec/permutation.hpp"
#include "consec/words.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace consec::kernels {

// Permutations of length n with no window order-isomorphic to a basis element, lex order.
std::vector<Permutation> avoiding_perms(std::span<const Permutation> basis, std::size_t n);
// Words of length n over symbols 0..k-1 with no basis factor, lex order.
std::vector<Word> avoiding_words(std::size_t k, std::span<const Word> basis, std::size_t n);
// Permutations of length |path|+m-1 whose width-m windows are exactly `path`, lex order.
std::vector<Permutation> sigma_filter(std::span<const Permutation> path);

namespace serial {
std::vector<Permutation> avoiding_perms(std::span<const Permutation> basis, std::size_t n);
std::vector<Word> avoiding_words(std::size_t k, std::span<const Word> basis, std::size_t n);
std::vector<Permutation> sigma_filter(std::span<const Permutation> path);
}  // namespace serial

using IndexPair = std::pair<std::size_t, std::size_t>;

namespace detail {

template <class Leq>
std::vector<std::vector<bool>> containment(std::size_t n_items, std::size_t n_universe, Leq&& leq,
                                           bool parallel) {
  std::vector<std::vector<bool>> below(n_universe, std::vector<bool>(n_items));
  const long long nu = static_cast<long long>(n_universe);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (long long u = 0; u < nu; ++u)
    for (std::size_t i = 0; i < n_items; ++i) below[u][i] = leq(i, static_cast<std::size_t>(u));
  return below;
}

template <class Leq>
std::optional<IndexPair> first_unjoinable(std::size_t n_items, std::size_t n_universe, Leq&& leq,
                                          bool parallel) {
  auto below = containment(n_items, n_universe, leq, parallel);
  std::vector<std::vector<std::size_t>> above(n_items);
  for (std::size_t u = 0; u < n_universe; ++u)
    for (std::size_t i = 0; i < n_items; ++i)
      if (below[u][i]) above[i].push_back(u);
  // Smallest failing partner of each i, or n_items.
  std::vector<std::size_t> partner(n_items, n_items);
  const long long ni = static_cast<long long>(n_items);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (long long i = 0; i < ni; ++i)
    for (std::size_t j = static_cast<std::size_t>(i); j < n_items; ++j) {
      bool joined = false;
      for (std::size_t u : above[i])
        if (below[u][j]) { joined = true; break; }
      if (!joined) { partner[i] = j; break; }
    }
  for (std::size_t i = 0; i < n_items; ++i)
    if (partner[i] < n_items) return IndexPair{i, partner[i]};
  return std::nullopt;
}

template <class Leq>
std::optional<IndexPair> first_comparable(std::size_t n, Leq&& leq, bool parallel) {
  std::vector<std::size_t> partner(n, n);
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (long long i = 0; i < nn; ++i)
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j)
      if (leq(i, j) || leq(j, i)) { partner[i] = j; break; }
  for (std::size_t i = 0; i < n; ++i)
    if (partner[i] < n) return IndexPair{i, partner[i]};
  return std::nullopt;
}

}  // namespace detail

// First pair (i, j), i <= j, lexicographically, such that no universe element
// lies above both items. leq(i, u): item i embeds in universe element u.
template <class Leq>
std::optional<IndexPair> first_unjoinable_pair(std::size_t n_items, std::size_t n_universe, Leq&& leq) {
  return detail::first_unjoinable(n_items, n_universe, leq, true);
}

// First pair (i, j), i < j, with leq(i, j) or leq(j, i).
template <class Leq>
std::optional<IndexPair> first_comparable_pair(std::size_t n, Leq&& leq) {
  return detail::first_comparable(n, leq, true);
}

namespace serial {
template <class Leq>
std::optional<IndexPair> first_unjoinable_pair(std::size_t n_items, std::size_t n_universe, Leq&& leq) {
  return detail::first_unjoinable(n_items, n_universe, leq, false);
}
template <class Leq>
std::optional<IndexPair> first_comparable_pair(std::size_t n, Leq&& leq) {
  return detail::first_comparable(n, leq, false);
}
}  // namespace serial

}  // namespace consec::kernels
