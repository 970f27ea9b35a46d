#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "consec/decision.hpp"
#include "consec/digraph.hpp"

namespace consec {

// Index into an Alphabet.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(Symbol s) const { return symbols_.at(s); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<Symbol> find(std::string_view token) const;
  // Every token is one character, so words print as plain strings.
  bool single_char() const { return single_char_; }

  // Character-per-symbol text; requires single_char().
  Word parse(std::string_view text) const;
  Word parse(const std::vector<std::string>& tokens) const;
  // Concatenation when single_char(), otherwise tokens joined by spaces.
  std::string format(const Word& w) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Symbol> index_;
  bool single_char_ = true;
};

bool factor_leq(const Word& u, const Word& v);

// Length first, then lexicographic in alphabet order.
bool shortlex_less(const Word& u, const Word& v);

struct WordClassSpec {
  Alphabet alphabet;
  std::vector<Word> basis;  // antichain, shortlex sorted
  std::size_t b = 1;
  bool empty_class = false;  // the basis contained the empty word
  bool empty_basis = false;

  // Drops basis elements containing another one as a factor.
  static WordClassSpec make(Alphabet alphabet, std::vector<Word> basis);
  bool contains(const Word& w) const;
};

Digraph de_bruijn_graph(const Alphabet& a, std::size_t m);

// Window sequence of w; the vertices of its path in a de Bruijn graph.
std::vector<Word> word_to_path(const Word& w, std::size_t m);
// Overlap concatenation; inverse of word_to_path.
Word path_to_word(const std::vector<Word>& path);

struct WordFactorGraph {
  std::size_t dimension = 0;
  Digraph graph;
  std::vector<Word> vertex_words;
  std::map<Word, Vertex> index;

  std::optional<DiPath> path_of(const Word& w) const;
  Word word_of(const DiPath& p) const;
  std::vector<Word> words_of(const DiPath& p) const;
};

WordFactorGraph word_factor_graph(const WordClassSpec& spec);

// Members of length <= max_len in shortlex order.
std::vector<Word> enumerate_class_words(const WordClassSpec& spec, std::size_t max_len);

struct WordWitness {
  enum class Kind { non_joinable_pair, unextendable_word, antichain };
  Kind kind = Kind::non_joinable_pair;
  // A pair with no common extension in the class (for unextendable_word the
  // first entry is the short word), or an antichain prefix.
  std::vector<Word> words;
  std::vector<Word> cycle;  // in-out cycle vertices, antichain witnesses only
};

Decision<WordWitness> decide_word_atomic(const WordClassSpec& spec);
Decision<WordWitness> decide_word_wqo(const WordClassSpec& spec,
                                      std::size_t n = kDefaultAntichainLength);

}  // namespace consec
