#include "consec/words.hpp"

#include <algorithm>

#include "consec/errors.hpp"
#include "consec/kernels.hpp"

namespace consec {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvalidInput("alphabet is empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw InvalidInput("alphabet symbol is empty");
    if (!index_.emplace(symbols_[i], static_cast<Symbol>(i)).second)
      throw InvalidInput("duplicate alphabet symbol '" + symbols_[i] + "'");
    if (symbols_[i].size() != 1) single_char_ = false;
  }
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Word Alphabet::parse(std::string_view text) const {
  if (!single_char_) throw InvalidInput("multi-character alphabet: words must be token arrays");
  Word w;
  for (char ch : text) {
    auto s = find(std::string_view(&ch, 1));
    if (!s) throw InvalidInput("letter '" + std::string(1, ch) + "' is not in the alphabet");
    w.push_back(*s);
  }
  return w;
}

Word Alphabet::parse(const std::vector<std::string>& tokens) const {
  Word w;
  for (const auto& t : tokens) {
    auto s = find(t);
    if (!s) throw InvalidInput("letter '" + t + "' is not in the alphabet");
    w.push_back(*s);
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i) out += ' ';
    out += symbols_.at(w[i]);
  }
  return out;
}

bool factor_leq(const Word& u, const Word& v) {
  if (u.empty()) return true;
  return std::search(v.begin(), v.end(), u.begin(), u.end()) != v.end();
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

WordClassSpec WordClassSpec::make(Alphabet alphabet, std::vector<Word> basis) {
  for (const auto& w : basis)
    for (Symbol s : w)
      if (s >= alphabet.size()) throw InvalidInput("basis letter outside the alphabet");
  std::sort(basis.begin(), basis.end(), shortlex_less);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  std::vector<Word> kept;
  for (const auto& w : basis)
    if (std::none_of(kept.begin(), kept.end(), [&](const Word& k) { return factor_leq(k, w); }))
      kept.push_back(w);

  WordClassSpec spec{std::move(alphabet), std::move(kept)};
  spec.empty_basis = spec.basis.empty();
  spec.empty_class = !spec.basis.empty() && spec.basis.front().empty();
  spec.b = 1;
  for (const auto& w : spec.basis) spec.b = std::max(spec.b, w.size());
  return spec;
}

bool WordClassSpec::contains(const Word& w) const {
  return std::none_of(basis.begin(), basis.end(), [&](const Word& u) { return factor_leq(u, w); });
}

Digraph de_bruijn_graph(const Alphabet& a, std::size_t m) {
  if (m == 0) throw InvalidInput("de Bruijn dimension must be at least 1");
  const std::size_t k = a.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < m; ++i) count *= k;
  Digraph g;
  for (std::size_t idx = 0; idx < count; ++idx) {
    Word w(m);
    std::size_t x = idx;
    for (std::size_t i = m; i > 0; --i) {
      w[i - 1] = static_cast<Symbol>(x % k);
      x /= k;
    }
    g.add_vertex(a.format(w));
  }
  // Successors of the word with index idx drop the leading letter and append one.
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t shifted = (idx * k) % count;
    for (std::size_t s = 0; s < k; ++s) g.add_edge(idx, shifted + s);
  }
  return g;
}

std::vector<Word> word_to_path(const Word& w, std::size_t m) {
  if (m == 0 || w.size() < m) throw InvalidInput("word shorter than the graph dimension");
  std::vector<Word> out;
  for (std::size_t i = 0; i + m <= w.size(); ++i) out.emplace_back(w.begin() + i, w.begin() + i + m);
  return out;
}

Word path_to_word(const std::vector<Word>& path) {
  if (path.empty()) throw InvalidInput("empty path");
  const std::size_t m = path.front().size();
  Word w = path.front();
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Word& prev = path[i - 1];
    const Word& cur = path[i];
    if (cur.size() != m || !std::equal(prev.begin() + 1, prev.end(), cur.begin()))
      throw InvalidInput("consecutive path vertices do not overlap");
    w.push_back(cur.back());
  }
  return w;
}

std::optional<DiPath> WordFactorGraph::path_of(const Word& w) const {
  DiPath p;
  for (const auto& window : word_to_path(w, dimension)) {
    auto it = index.find(window);
    if (it == index.end()) return std::nullopt;
    p.push_back(it->second);
  }
  return p;
}

std::vector<Word> WordFactorGraph::words_of(const DiPath& p) const {
  std::vector<Word> out;
  for (Vertex v : p) out.push_back(vertex_words.at(v));
  return out;
}

Word WordFactorGraph::word_of(const DiPath& p) const { return path_to_word(words_of(p)); }

std::vector<Word> enumerate_class_words(const WordClassSpec& spec, std::size_t max_len) {
  std::vector<Word> out;
  if (spec.empty_class) return out;
  std::vector<Word> level{Word{}};
  for (std::size_t len = 0;; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) break;
    std::vector<Word> next;
    for (const auto& w : level)
      for (Symbol s = 0; s < spec.alphabet.size(); ++s) {
        Word x = w;
        x.push_back(s);
        // Only suffixes of x can be new occurrences.
        bool ok = std::none_of(spec.basis.begin(), spec.basis.end(), [&](const Word& u) {
          return u.size() <= x.size() && std::equal(u.rbegin(), u.rend(), x.rbegin());
        });
        if (ok) next.push_back(std::move(x));
      }
    if (next.empty()) break;
    level = std::move(next);
  }
  return out;
}

WordFactorGraph word_factor_graph(const WordClassSpec& spec) {
  WordFactorGraph fg;
  fg.dimension = spec.b;
  for (auto& w : enumerate_class_words(spec, spec.b))
    if (w.size() == spec.b) {
      fg.index.emplace(w, fg.vertex_words.size());
      fg.graph.add_vertex(spec.alphabet.format(w));
      fg.vertex_words.push_back(std::move(w));
    }
  for (Vertex v = 0; v < fg.vertex_words.size(); ++v) {
    Word next(fg.vertex_words[v].begin() + 1, fg.vertex_words[v].end());
    next.push_back(0);
    for (Symbol s = 0; s < spec.alphabet.size(); ++s) {
      next.back() = s;
      auto it = fg.index.find(next);
      if (it != fg.index.end()) fg.graph.add_edge(v, it->second);
    }
  }
  return fg;
}

namespace {

bool acyclic(const Digraph& g) {
  SccDecomposition d = scc(g);
  for (std::size_t c = 0; c < d.components.size(); ++c)
    if (!d.trivial(g, c)) return false;
  return true;
}

template <class W>
void set_degenerate(Decision<W>& r, std::string tag, std::string why) {
  r.outcome = Outcome::degenerate;
  r.degenerate_tag = std::move(tag);
  r.explanation = std::move(why);
}

}  // namespace

Decision<WordWitness> decide_word_atomic(const WordClassSpec& spec) {
  Decision<WordWitness> r;
  if (spec.empty_class) {
    set_degenerate(r, "degenerate: empty class", "basis contains the empty word");
    return r;
  }
  if (spec.empty_basis) r.note = "degenerate: empty basis";
  WordFactorGraph fg = word_factor_graph(spec);

  if (acyclic(fg.graph)) {
    std::vector<Word> all = enumerate_class_words(spec, fg.graph.size() + spec.b - 1);
    auto bad = kernels::first_unjoinable_pair(all.size(), all.size(), [&](std::size_t i, std::size_t u) {
      return factor_leq(all[i], all[u]);
    });
    if (!bad) {
      r.explanation = "finite class; every pair joins (exhaustive check)";
      return r;
    }
    r.outcome = Outcome::no;
    r.witness = WordWitness{WordWitness::Kind::non_joinable_pair, {all[bad->first], all[bad->second]}, {}};
    r.explanation = "finite class; exhaustive check found a pair with no common extension";
    return r;
  }

  auto graph_atomic = path_poset_atomic(fg.graph);
  if (graph_atomic.fails()) {
    r.outcome = Outcome::no;
    const auto& pair = *graph_atomic.witness;
    r.witness = WordWitness{WordWitness::Kind::non_joinable_pair,
                            {fg.word_of(pair.first), fg.word_of(pair.second)}, {}};
    r.explanation = "factor graph is neither strongly connected nor a bicycle: " + graph_atomic.explanation;
    return r;
  }

  for (const auto& u : enumerate_class_words(spec, spec.b - 1)) {
    bool extends = std::any_of(fg.vertex_words.begin(), fg.vertex_words.end(),
                               [&](const Word& v) { return factor_leq(u, v); });
    if (extends) continue;
    r.outcome = Outcome::no;
    r.witness = WordWitness{WordWitness::Kind::unextendable_word, {u, fg.vertex_words.front()}, {}};
    r.explanation = "word '" + spec.alphabet.format(u) + "' is not a factor of any class word of length " +
                    std::to_string(spec.b);
    return r;
  }
  r.explanation = graph_atomic.explanation + " and every short word extends to length " + std::to_string(spec.b);
  return r;
}

Decision<WordWitness> decide_word_wqo(const WordClassSpec& spec, std::size_t n) {
  Decision<WordWitness> r;
  if (spec.empty_class) {
    set_degenerate(r, "degenerate: empty class", "basis contains the empty word");
    return r;
  }
  if (spec.empty_basis) r.note = "degenerate: empty basis";
  WordFactorGraph fg = word_factor_graph(spec);
  auto graph_wqo = path_poset_wqo(fg.graph, n);
  if (graph_wqo.holds()) {
    r.explanation = "factor graph has no in-out cycle";
    return r;
  }
  r.outcome = Outcome::no;
  WordWitness w{WordWitness::Kind::antichain, {}, fg.words_of(graph_wqo.witness->in_out_cycle)};
  for (const auto& p : graph_wqo.witness->paths) w.words.push_back(fg.word_of(p));
  r.witness = std::move(w);
  r.explanation = "factor graph has an in-out cycle " + format_path(fg.graph, graph_wqo.witness->in_out_cycle);
  return r;
}

}  // namespace consec
