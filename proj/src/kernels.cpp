#include "consec/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace consec::kernels {

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Permutation of rank `index` in lexicographic order.
std::vector<int> unrank(std::size_t n, std::size_t index) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t k = n; k > 0; --k) {
    std::size_t f = factorial(k - 1);
    std::size_t q = index / f;
    index %= f;
    out.push_back(pool[q]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
  }
  return out;
}

bool window_matches(const std::vector<int>& pattern, const std::vector<int>& v, std::size_t start) {
  const std::size_t k = pattern.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if ((pattern[i] < pattern[j]) != (v[start + i] < v[start + j])) return false;
  return true;
}

bool avoids(std::span<const Permutation> basis, const std::vector<int>& v) {
  for (const auto& beta : basis)
    for (std::size_t s = 0; s + beta.size() <= v.size(); ++s)
      if (window_matches(beta.values(), v, s)) return false;
  return true;
}

bool traces(std::span<const Permutation> path, const std::vector<int>& v) {
  for (std::size_t i = 0; i < path.size(); ++i)
    if (!window_matches(path[i].values(), v, i)) return false;
  return true;
}

// Visit all permutations of length n in lexicographic order, split into blocks.
template <class Keep>
std::vector<Permutation> filter_perms(std::size_t n, Keep keep, bool parallel) {
  const std::size_t total = factorial(n);
  const std::size_t blocks = parallel ? std::min<std::size_t>(total, 256) : 1;
  std::vector<std::vector<Permutation>> found(blocks);
  const long long nb = static_cast<long long>(blocks);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long long b = 0; b < nb; ++b) {
    std::size_t lo = total * b / blocks, hi = total * (b + 1) / blocks;
    std::vector<int> v = unrank(n, lo);
    for (std::size_t i = lo; i < hi; ++i) {
      if (keep(v)) found[b].push_back(Permutation::trusted(v));
      std::next_permutation(v.begin(), v.end());
    }
  }
  std::vector<Permutation> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::vector<Word> filter_words(std::size_t k, std::span<const Word> basis, std::size_t n, bool parallel) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= k;
  const std::size_t blocks = parallel ? std::min<std::size_t>(total, 256) : 1;
  std::vector<std::vector<Word>> found(blocks);
  const long long nb = static_cast<long long>(blocks);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long long b = 0; b < nb; ++b) {
    std::size_t lo = total * b / blocks, hi = total * (b + 1) / blocks;
    for (std::size_t idx = lo; idx < hi; ++idx) {
      Word w(n);
      std::size_t x = idx;
      for (std::size_t i = n; i > 0; --i) {
        w[i - 1] = static_cast<Symbol>(x % k);
        x /= k;
      }
      bool ok = std::none_of(basis.begin(), basis.end(), [&](const Word& u) { return factor_leq(u, w); });
      if (ok) found[b].push_back(std::move(w));
    }
  }
  std::vector<Word> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::vector<Permutation> sigma(std::span<const Permutation> path, bool parallel) {
  if (path.empty()) return {};
  const std::size_t n = path.size() + path.front().size() - 1;
  return filter_perms(n, [&](const std::vector<int>& v) { return traces(path, v); }, parallel);
}

}  // namespace

std::vector<Permutation> avoiding_perms(std::span<const Permutation> basis, std::size_t n) {
  return filter_perms(n, [&](const std::vector<int>& v) { return avoids(basis, v); }, true);
}

std::vector<Word> avoiding_words(std::size_t k, std::span<const Word> basis, std::size_t n) {
  return filter_words(k, basis, n, true);
}

std::vector<Permutation> sigma_filter(std::span<const Permutation> path) { return sigma(path, true); }

namespace serial {

std::vector<Permutation> avoiding_perms(std::span<const Permutation> basis, std::size_t n) {
  return filter_perms(n, [&](const std::vector<int>& v) { return avoids(basis, v); }, false);
}

std::vector<Word> avoiding_words(std::size_t k, std::span<const Word> basis, std::size_t n) {
  return filter_words(k, basis, n, false);
}

std::vector<Permutation> sigma_filter(std::span<const Permutation> path) { return sigma(path, false); }

}  // namespace serial

}  // namespace consec::kernels
