#include "consec/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "consec/errors.hpp"

namespace consec {

Permutation::Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
  std::vector<bool> seen(v_.size() + 1, false);
  for (int x : v_) {
    if (x < 1 || x > static_cast<int>(v_.size()) || seen[x])
      throw InvalidInput("not a permutation of 1.." + std::to_string(v_.size()));
    seen[x] = true;
  }
}

Permutation Permutation::trusted(std::vector<int> one_line) {
  Permutation p;
  p.v_ = std::move(one_line);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  std::vector<int> values;
  if (!separated) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw InvalidInput("bad permutation '" + std::string(text) + "'");
      values.push_back(ch - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == ' ' || text[i] == ',' || text[i] == '\t') { ++i; continue; }
      int x = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), x);
      if (ec != std::errc()) throw InvalidInput("bad permutation '" + std::string(text) + "'");
      values.push_back(x);
      i = ptr - text.data();
    }
  }
  return Permutation(std::move(values));
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_.size() > 9 && i) out += ' ';
    out += std::to_string(v_[i]);
  }
  return out;
}

Permutation canonical_perm(std::span<const int> seq) {
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::vector<int> rank(seq.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r && seq[order[r]] == seq[order[r - 1]]) throw InvalidInput("repeated value in point sequence");
    rank[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation::trusted(std::move(rank));
}

Permutation pattern_at(const Permutation& p, std::size_t start, std::size_t len) {
  return canonical_perm(std::span<const int>(p.values()).subspan(start, len));
}

namespace {

// Window of `big` at `start` is order-isomorphic to `small`.
bool matches_at(const Permutation& small, const Permutation& big, std::size_t start) {
  const std::size_t k = small.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if ((small[i] < small[j]) != (big[start + i] < big[start + j])) return false;
  return true;
}

}  // namespace

bool perm_factor_leq(const Permutation& small, const Permutation& big) {
  if (small.size() > big.size()) return false;
  for (std::size_t s = 0; s + small.size() <= big.size(); ++s)
    if (matches_at(small, big, s)) return true;
  return false;
}

std::vector<Permutation> perm_to_path(const Permutation& p, std::size_t m) {
  if (m == 0 || p.size() < m) throw InvalidInput("permutation shorter than the graph dimension");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i + m <= p.size(); ++i) out.push_back(pattern_at(p, i, m));
  return out;
}

}  // namespace consec
