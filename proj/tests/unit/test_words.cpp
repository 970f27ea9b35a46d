#include <doctest.h>

#include <random>

#include "consec/errors.hpp"
#include "consec/oracle.hpp"
#include "support.hpp"

using namespace consec;
using fixtures::word_class;

namespace {

Alphabet ab() { return Alphabet({"a", "b"}); }

std::vector<std::string> texts(const Alphabet& a, const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(a.format(w));
  return out;
}

}  // namespace

TEST_CASE("alphabet") {
  CHECK_THROWS_AS(Alphabet({}), InvalidInput);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), InvalidInput);
  Alphabet tokens({"x1", "x2"});
  CHECK_FALSE(tokens.single_char());
  Word w = tokens.parse(std::vector<std::string>{"x2", "x1"});
  CHECK(tokens.format(w) == "x2 x1");
  CHECK_THROWS_AS(tokens.parse("x1"), InvalidInput);
  CHECK_THROWS_AS(ab().parse("abc"), InvalidInput);
}

TEST_CASE("factor_leq") {
  Alphabet a = ab();
  CHECK(factor_leq(a.parse("ab"), a.parse("bab")));
  CHECK_FALSE(factor_leq(a.parse("bb"), a.parse("abab")));
  CHECK(factor_leq(Word{}, a.parse("abba")));
  CHECK(factor_leq(Word{}, Word{}));
}

TEST_CASE("de_bruijn_graph") {
  Digraph g1 = de_bruijn_graph(ab(), 1);
  CHECK(g1.size() == 2);
  CHECK(g1.edge_count() == 4);
  Digraph g2 = de_bruijn_graph(ab(), 2);
  CHECK(g2.size() == 4);
  CHECK(g2.edge_count() == 8);
  CHECK(g2.has_edge(*g2.find("ab"), *g2.find("ba")));
  CHECK_FALSE(g2.has_edge(*g2.find("ab"), *g2.find("aa")));
  Digraph g3 = de_bruijn_graph(Alphabet({"a"}), 3);
  CHECK(fixtures::edge_set(g3) == std::set<std::pair<std::string, std::string>>{{"aaa", "aaa"}});
  CHECK_THROWS_AS(de_bruijn_graph(ab(), 0), InvalidInput);
}

TEST_CASE("word_to_path and path_to_word") {
  Alphabet a = ab();
  CHECK(texts(a, word_to_path(a.parse("abab"), 2)) == std::vector<std::string>{"ab", "ba", "ab"});
  CHECK(texts(a, word_to_path(a.parse("aab"), 3)) == std::vector<std::string>{"aab"});
  CHECK(texts(a, word_to_path(a.parse("baaa"), 3)) == std::vector<std::string>{"baa", "aaa"});
  CHECK_THROWS_AS(word_to_path(a.parse("ab"), 3), InvalidInput);

  auto path = [&](std::vector<std::string> xs) {
    std::vector<Word> out;
    for (auto& x : xs) out.push_back(a.parse(x));
    return out;
  };
  CHECK(a.format(path_to_word(path({"ab", "ba", "ab"}))) == "abab");
  CHECK(a.format(path_to_word(path({"aaa"}))) == "aaa");
  CHECK(a.format(path_to_word(path({"bab", "aba", "baa", "aaa"}))) == "babaaa");
  CHECK_THROWS_AS(path_to_word(path({"ab", "ab"})), InvalidInput);
}

TEST_CASE("class normalization") {
  auto spec = word_class({"aab", "bb", "abb", "bb"});
  CHECK(texts(spec.alphabet, spec.basis) == std::vector<std::string>{"bb", "aab"});
  CHECK(spec.b == 3);
  auto all = word_class({});
  CHECK(all.empty_basis);
  CHECK(all.b == 1);
  auto none = word_class({"", "ab"});
  CHECK(none.empty_class);
}

TEST_CASE("word_factor_graph reproduces the three drawn classes") {
  using E = std::set<std::pair<std::string, std::string>>;
  using V = std::set<std::string>;
  auto g1 = word_factor_graph(word_class({"bb", "aab"})).graph;
  CHECK(fixtures::vertex_set(g1) == V{"bab", "aba", "baa", "aaa"});
  CHECK(fixtures::edge_set(g1) == E{{"bab", "aba"}, {"aba", "bab"}, {"aba", "baa"}, {"baa", "aaa"}, {"aaa", "aaa"}});

  auto g2 = word_factor_graph(word_class({"aaa", "baa", "bba", "bbb"})).graph;
  CHECK(fixtures::vertex_set(g2) == V{"aab", "abb", "aba", "bab"});
  CHECK(fixtures::edge_set(g2) == E{{"aab", "aba"}, {"aab", "abb"}, {"aba", "bab"}, {"bab", "aba"}, {"bab", "abb"}});

  auto g3 = word_factor_graph(word_class({"aa", "aba", "abb", "bab"})).graph;
  CHECK(fixtures::vertex_set(g3) == V{"bbb", "bba"});
  CHECK(fixtures::edge_set(g3) == E{{"bbb", "bbb"}, {"bbb", "bba"}});

  auto complete = word_factor_graph(word_class({}, "abc")).graph;
  CHECK(complete.size() == 3);
  CHECK(complete.edge_count() == 9);
}

TEST_CASE("enumerate_class_words") {
  auto spec = word_class({"bb", "aab"});
  CHECK(texts(spec.alphabet, enumerate_class_words(spec, 3)) ==
        std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "aaa", "aba", "baa", "bab"});
  auto unary = word_class({"a"}, "a");
  CHECK(enumerate_class_words(unary, 5) == std::vector<Word>{Word{}});
  CHECK(enumerate_class_words(word_class({"aaa", "baa", "bba", "bbb"}), 3).size() == 11);
}

TEST_CASE("decide_word_atomic") {
  CHECK(decide_word_atomic(word_class({"bb", "aab"})).holds());

  auto d2 = decide_word_atomic(word_class({"aaa", "baa", "bba", "bbb"}));
  CHECK(d2.fails());
  REQUIRE(d2.witness);
  CHECK(d2.witness->kind == WordWitness::Kind::non_joinable_pair);

  auto spec3 = word_class({"aa", "aba", "abb", "bab"});
  auto d3 = decide_word_atomic(spec3);
  REQUIRE(d3.fails());
  CHECK(d3.witness->kind == WordWitness::Kind::unextendable_word);
  CHECK(spec3.alphabet.format(d3.witness->words.front()) == "ab");

  auto empty = decide_word_atomic(word_class({"", "a"}));
  CHECK(empty.outcome == Outcome::degenerate);
  CHECK(empty.degenerate_tag == "degenerate: empty class");

  auto free = decide_word_atomic(word_class({}));
  CHECK(free.holds());
  CHECK(free.note == "degenerate: empty basis");
}

TEST_CASE("finite classes are decided by exhaustive search") {
  // Av(aa, bb, aba, bab) = {e, a, b, ab, ba}: ab and ba have no common extension.
  auto spec = word_class({"aa", "bb", "aba", "bab"});
  auto d = decide_word_atomic(spec);
  REQUIRE(d.fails());
  auto universe = oracle::enumerate_av_words(2, spec.basis, 6);
  CHECK(oracle::bounded_jep(std::span<const Word>(d.witness->words), std::span<const Word>(universe)).refuted());
  // Av(b) over {a,b} restricted to length: Av(aa, b) = {e, a}: atomic.
  CHECK(decide_word_atomic(word_class({"aa", "b"})).holds());
}

TEST_CASE("decide_word_wqo") {
  CHECK(decide_word_wqo(word_class({"bb", "aab"})).holds());
  CHECK(decide_word_wqo(word_class({"aa", "aba", "abb", "bab"})).holds());
  CHECK(decide_word_wqo(word_class({}, "a")).holds());

  auto spec = word_class({"aaa", "baa", "bba", "bbb"});
  auto d = decide_word_wqo(spec);
  REQUIRE(d.fails());
  CHECK(texts(spec.alphabet, d.witness->cycle) == std::vector<std::string>{"aba", "bab", "aba"});
  CHECK(d.witness->words.size() == kDefaultAntichainLength);
  CHECK(oracle::validate_antichain(std::span<const Word>(d.witness->words)).confirmed());
  for (const auto& w : d.witness->words) CHECK(spec.contains(w));

  auto free = decide_word_wqo(word_class({}));
  CHECK(free.fails());
  CHECK(free.note == "degenerate: empty basis");
}

TEST_CASE("factor graph vertices are the length-b members") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> basis;
    std::uniform_int_distribution<int> len(1, 4), count(1, 4), bit(0, 1);
    for (int i = count(rng); i > 0; --i) {
      std::string s;
      for (int k = len(rng); k > 0; --k) s += bit(rng) ? 'b' : 'a';
      basis.push_back(s);
    }
    auto spec = word_class(basis);
    auto fg = word_factor_graph(spec);
    std::size_t exact = 0;
    for (const auto& w : enumerate_class_words(spec, spec.b)) exact += w.size() == spec.b;
    CHECK(fg.graph.size() == exact);
  }
}
