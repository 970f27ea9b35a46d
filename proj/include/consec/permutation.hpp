#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace consec {

// One-line notation over 1..n.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInput unless the values are exactly 1..n.
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}
  static Permutation trusted(std::vector<int> one_line);
  // "3142" (one digit per entry) or whitespace/comma separated integers.
  static Permutation parse(std::string_view text);

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  int operator[](std::size_t i) const { return v_[i]; }
  const std::vector<int>& values() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  // Digits when n <= 9, otherwise space separated.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> v_;
};

// Rank replacement; throws InvalidInput on repeated values.
Permutation canonical_perm(std::span<const int> seq);
Permutation pattern_at(const Permutation& p, std::size_t start, std::size_t len);
bool perm_factor_leq(const Permutation& small, const Permutation& big);
// Windows of width m; the vertices of the path of p in a permutation factor graph.
std::vector<Permutation> perm_to_path(const Permutation& p, std::size_t m);

}  // namespace consec
