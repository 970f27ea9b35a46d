#include "consec/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "consec/errors.hpp"

namespace consec::oracle {

namespace {

nlohmann::json to_json(const Permutation& p) { return p.str(); }
nlohmann::json to_json(const Word& w) { return w; }

template <class T, class Leq>
OracleReport jep(std::span<const T> elements, std::span<const T> universe, Leq leq, std::string scale) {
  OracleReport r{"every pair has a common upper bound in the universe", std::move(scale), Verdict::confirmed, {}};
  std::vector<std::vector<std::size_t>> above(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t u = 0; u < universe.size(); ++u)
      if (leq(elements[i], universe[u])) above[i].push_back(u);
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i; j < elements.size(); ++j) {
      std::vector<std::size_t> both;
      std::set_intersection(above[i].begin(), above[i].end(), above[j].begin(), above[j].end(),
                            std::back_inserter(both));
      if (!both.empty()) continue;
      // An element outside the universe proves nothing about joins.
      bool inside = !above[i].empty() && !above[j].empty();
      r.verdict = inside ? Verdict::refuted : Verdict::inconclusive;
      r.counterexample = nlohmann::json{{"pair", {to_json(elements[i]), to_json(elements[j])}}};
      return r;
    }
  return r;
}

template <class T, class Leq>
OracleReport antichain(std::span<const T> items, Leq leq) {
  OracleReport r{"pairwise incomparable", std::to_string(items.size()) + " items", Verdict::confirmed, {}};
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j)
      if (i != j && leq(items[i], items[j])) {
        r.verdict = Verdict::refuted;
        r.counterexample = nlohmann::json{{"below", to_json(items[i])}, {"above", to_json(items[j])}};
        return r;
      }
  return r;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

nlohmann::json OracleReport::to_json() const {
  nlohmann::json j{{"checked", checked}, {"scale", scale}, {"verdict", to_string(verdict)}};
  if (counterexample) j["counterexample"] = *counterexample;
  return j;
}

std::vector<Permutation> enumerate_av_perms(std::span<const Permutation> basis, std::size_t max_len) {
  if (max_len > kMaxPermLength)
    throw ResourceLimit("oracle permutation length " + std::to_string(max_len) + " exceeds " +
                        std::to_string(kMaxPermLength));
  std::vector<Permutation> out;
  auto avoids = [&](const Permutation& p) {
    return std::none_of(basis.begin(), basis.end(), [&](const Permutation& q) { return perm_factor_leq(q, p); });
  };
  // Av(basis) is closed under taking factors, so members of length n+1 extend members of length n.
  std::vector<std::vector<int>> level{{}};
  for (std::size_t n = 1; n <= max_len && !level.empty(); ++n) {
    std::vector<std::vector<int>> next;
    for (const auto& v : level)
      for (int last = 1; last <= static_cast<int>(n); ++last) {
        std::vector<int> w;
        for (int x : v) w.push_back(x >= last ? x + 1 : x);
        w.push_back(last);
        Permutation p(w);
        if (avoids(p)) next.push_back(std::move(w));
      }
    std::sort(next.begin(), next.end());
    for (const auto& v : next) out.push_back(Permutation::trusted(v));
    level = std::move(next);
  }
  return out;
}

std::vector<Word> enumerate_av_words(std::size_t k, std::span<const Word> basis, std::size_t max_len) {
  auto avoids = [&](const Word& w) {
    return std::none_of(basis.begin(), basis.end(), [&](const Word& u) { return factor_leq(u, w); });
  };
  std::vector<Word> out, level{Word{}};
  if (!avoids(Word{})) return out;
  out.push_back(Word{});
  for (std::size_t n = 1; n <= max_len && !level.empty(); ++n) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (Symbol s = 0; s < k; ++s) {
        Word x = w;
        x.push_back(s);
        if (avoids(x)) next.push_back(std::move(x));
      }
    if (next.size() > 4'000'000) throw ResourceLimit("oracle word universe too large");
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

OracleReport bounded_jep(std::span<const Permutation> elements, std::span<const Permutation> universe) {
  std::size_t longest = 0;
  for (const auto& u : universe) longest = std::max(longest, u.size());
  return jep(elements, universe, perm_factor_leq,
             std::to_string(universe.size()) + " permutations of length <= " + std::to_string(longest));
}

OracleReport bounded_jep(std::span<const Word> elements, std::span<const Word> universe) {
  std::size_t longest = 0;
  for (const auto& u : universe) longest = std::max(longest, u.size());
  return jep(elements, universe, factor_leq,
             std::to_string(universe.size()) + " words of length <= " + std::to_string(longest));
}

OracleReport validate_antichain(std::span<const Permutation> items) {
  return antichain(items, perm_factor_leq);
}

OracleReport validate_antichain(std::span<const Word> items) { return antichain(items, factor_leq); }

std::vector<Permutation> brute_sigma(std::span<const Permutation> path, std::size_t m) {
  if (path.empty()) throw InvalidInput("empty path");
  const std::size_t n = path.size() + m - 1;
  if (n > kMaxPermLength) throw ResourceLimit("oracle sigma length " + std::to_string(n) + " exceeds 10");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < path.size() && ok; ++i)
      ok = canonical_perm(std::span<const int>(v).subspan(i, m)) == path[i];
    if (ok) out.push_back(Permutation::trusted(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace consec::oracle
