#pragma once

// Brute-force baselines. Only the canonicalization and comparison primitives
// are shared with the decision code.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "consec/permutation.hpp"
#include "consec/words.hpp"

namespace consec::oracle {

inline constexpr std::size_t kMaxPermLength = 10;
inline constexpr std::size_t kDefaultJoinLength = 9;

enum class Verdict { confirmed, refuted, inconclusive };
std::string to_string(Verdict v);

struct OracleReport {
  std::string checked;
  std::string scale;
  Verdict verdict = Verdict::inconclusive;
  std::optional<nlohmann::json> counterexample;

  bool confirmed() const { return verdict == Verdict::confirmed; }
  bool refuted() const { return verdict == Verdict::refuted; }
  nlohmann::json to_json() const;
};

// Members of Av(basis) of length 1..max_len by direct filtering, by length then lex.
std::vector<Permutation> enumerate_av_perms(std::span<const Permutation> basis, std::size_t max_len);
// Words over symbols 0..k-1 of length 0..max_len avoiding the basis, shortlex.
std::vector<Word> enumerate_av_words(std::size_t k, std::span<const Word> basis, std::size_t max_len);

// Searches `universe` for a common upper bound of every pair of `elements`.
// Refuted carries the first pair with none.
OracleReport bounded_jep(std::span<const Permutation> elements, std::span<const Permutation> universe);
OracleReport bounded_jep(std::span<const Word> elements, std::span<const Word> universe);

OracleReport validate_antichain(std::span<const Permutation> items);
OracleReport validate_antichain(std::span<const Word> items);

// Permutations of length |path|+m-1 whose width-m windows are `path`, lex order.
std::vector<Permutation> brute_sigma(std::span<const Permutation> path, std::size_t m);

}  // namespace consec::oracle
