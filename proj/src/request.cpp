#include "consec/request.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "consec/errors.hpp"
#include "consec/oracle.hpp"
#include "consec/perms.hpp"
#include "consec/words.hpp"

namespace consec::cli {

using nlohmann::json;

std::string to_string(Kind k) {
  switch (k) {
    case Kind::words: return "words";
    case Kind::perms: return "perms";
    case Kind::digraph: return "digraph";
  }
  return "?";
}

std::string to_string(Format f) { return f == Format::json ? "json" : "text"; }

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw InvalidInput("field '" + field + "': " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::string> whitespace_tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::vector<std::string> string_list(const json& j, const std::string& field) {
  if (j.is_string()) return split(j.get<std::string>(), ',');
  if (!j.is_array()) bad(field, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad(field, "expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

// ------------------------------------------------------------ class specs

WordClassSpec word_spec(const Request& r) {
  std::optional<Alphabet> a;
  try {
    a.emplace(r.alphabet);
  } catch (const InvalidInput& e) {
    bad("alphabet", e.what());
  }
  std::vector<Word> basis;
  try {
    for (const auto& tokens : r.word_basis) basis.push_back(a->parse(tokens));
  } catch (const InvalidInput& e) {
    bad("basis", e.what());
  }
  return WordClassSpec::make(*a, std::move(basis));
}

PermClassSpec perm_spec(const Request& r) {
  std::vector<Permutation> basis;
  try {
    for (const auto& v : r.perm_basis) {
      if (v.empty()) throw InvalidInput("the empty permutation is not a valid basis element");
      basis.emplace_back(v);
    }
  } catch (const InvalidInput& e) {
    bad("basis", e.what());
  }
  return PermClassSpec::make(std::move(basis));
}

Digraph input_graph(const Request& r) {
  Digraph g;
  try {
    for (const auto& v : r.vertices) g.add_vertex(v);
  } catch (const std::exception& e) {
    bad("vertices", e.what());
  }
  for (const auto& [u, v] : r.edges) {
    if (!g.find(u)) bad("edges", "unknown vertex '" + u + "'");
    if (!g.find(v)) bad("edges", "unknown vertex '" + v + "'");
    g.add_edge(u, v);
  }
  return g;
}

const std::vector<std::string>& allowed_queries(Kind k) {
  static const std::vector<std::string> classes{"atomic", "wqo"}, graphs{"path-atomic", "path-wqo"};
  return k == Kind::digraph ? graphs : classes;
}

void validate(const Request& r) {
  switch (r.kind) {
    case Kind::words: word_spec(r); break;
    case Kind::perms: perm_spec(r); break;
    case Kind::digraph: input_graph(r); break;
  }
  if (r.queries.empty()) bad("queries", "must name at least one query");
  const auto& ok = allowed_queries(r.kind);
  for (const auto& q : r.queries)
    if (std::find(ok.begin(), ok.end(), q) == ok.end())
      bad("queries", "'" + q + "' is not a query for kind " + to_string(r.kind));
  if (r.witness_len == 0) bad("witness_len", "must be at least 1");
}

// ------------------------------------------------------------ witnesses

json word_json(const Alphabet& a, const Word& w) {
  if (a.single_char()) return a.format(w);
  json arr = json::array();
  for (Symbol s : w) arr.push_back(a.symbol(s));
  return arr;
}

json words_json(const Alphabet& a, const std::vector<Word>& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(word_json(a, w));
  return arr;
}

json perms_json(const std::vector<Permutation>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(p.str());
  return arr;
}

json path_json(const Digraph& g, const DiPath& p) {
  json arr = json::array();
  for (Vertex v : p) arr.push_back(g.id(v));
  return arr;
}

void require(const oracle::OracleReport& r, bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("witness failed oracle validation (" + what + "): " + r.to_json().dump());
}

// A join was found: the pair witness is wrong. Out-of-range elements stay inconclusive.
void require_no_join(const oracle::OracleReport& r) { require(r, !r.confirmed(), "pair joins"); }

void require_antichain(const oracle::OracleReport& r) { require(r, r.confirmed(), "not an antichain"); }

std::size_t word_validation_length(std::size_t k, std::size_t cap) {
  std::size_t len = 0;
  double count = 1;
  while (len < cap && count * static_cast<double>(k) <= double(1 << 20)) {
    count *= static_cast<double>(k);
    ++len;
  }
  return len;
}

QueryResult from_decision_base(Outcome outcome, const std::string& tag, const std::string& explanation,
                               const std::string& note) {
  QueryResult q;
  if (outcome == Outcome::degenerate)
    q.value = tag;
  else
    q.value = outcome == Outcome::yes;
  q.explanation = explanation;
  q.note = note;
  return q;
}

QueryResult word_query(const Request& r, const RunOptions& opt, const std::string& query) {
  const WordClassSpec spec = word_spec(r);
  const auto d = query == "atomic" ? decide_word_atomic(spec) : decide_word_wqo(spec, r.witness_len);
  QueryResult q = from_decision_base(d.outcome, d.degenerate_tag, d.explanation, d.note);
  if (!d.fails() || !r.witness || !d.witness) return q;

  const auto& w = *d.witness;
  const Alphabet& a = spec.alphabet;
  json out;
  if (w.kind == WordWitness::Kind::antichain) {
    auto report = oracle::validate_antichain(std::span<const Word>(w.words));
    require_antichain(report);
    out = {{"type", "antichain"}, {"in_out_cycle", words_json(a, w.cycle)}, {"antichain", words_json(a, w.words)},
           {"validation", report.to_json()}};
  } else {
    auto universe = oracle::enumerate_av_words(a.size(), spec.basis,
                                               word_validation_length(a.size(), opt.validation_length));
    auto report = oracle::bounded_jep(std::span<const Word>(w.words), std::span<const Word>(universe));
    require_no_join(report);
    out = {{"type", w.kind == WordWitness::Kind::unextendable_word ? "unextendable-word" : "non-joinable-pair"},
           {"pair", words_json(a, w.words)},
           {"validation", report.to_json()}};
  }
  q.witness = std::move(out);
  return q;
}

json splittable_json(const SplittableWitness& s) {
  json pair{{"lower", s.pair.value}, {"upper", s.pair.value + 1}, {"kind", to_string(s.pair.kind)}};
  return {{"side", to_string(s.side)},
          {"pair", pair},
          {"core_index", s.core_index},
          {"core", s.core.perm.str()},
          {"entry_position", s.entry_position}};
}

QueryResult perm_query(const Request& r, const RunOptions& opt, const std::string& query) {
  const PermClassSpec spec = perm_spec(r);
  const auto d = query == "atomic" ? decide_perm_atomic(spec) : decide_perm_wqo(spec, r.witness_len);
  QueryResult q = from_decision_base(d.outcome, d.degenerate_tag, d.explanation, d.note);
  if (!d.fails() || !r.witness || !d.witness) return q;

  const auto& w = *d.witness;
  json out{{"source", w.source}};
  if (w.kind == PermWitness::Kind::antichain) {
    auto report = oracle::validate_antichain(std::span<const Permutation>(w.perms));
    require_antichain(report);
    out["type"] = "antichain";
    out["antichain"] = perms_json(w.perms);
    out["validation"] = report.to_json();
  } else {
    auto universe = oracle::enumerate_av_perms(spec.basis, std::min(opt.validation_length, oracle::kMaxPermLength));
    auto report = oracle::bounded_jep(std::span<const Permutation>(w.perms), std::span<const Permutation>(universe));
    require_no_join(report);
    out["type"] = w.kind == PermWitness::Kind::unextendable_perm ? "unextendable-permutation" : "non-joinable-pair";
    out["pair"] = perms_json(w.perms);
    out["validation"] = report.to_json();
  }
  if (!w.graph_path.empty()) out["graph_path"] = perms_json(w.graph_path);
  if (w.splittable) out["splittable"] = splittable_json(*w.splittable);
  q.witness = std::move(out);
  return q;
}

std::vector<bool> reachable_from(const Digraph& g, Vertex s) {
  std::vector<bool> seen(g.size(), false);
  std::deque<Vertex> queue;
  for (Vertex w : g.successors(s))
    if (!seen[w]) seen[w] = true, queue.push_back(w);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.successors(v))
      if (!seen[w]) seen[w] = true, queue.push_back(w);
  }
  return seen;
}

// Exact test for a common superpath: containment, an overlap, or a connecting walk.
bool paths_join(const Digraph& g, const DiPath& a, const DiPath& b) {
  if (is_subpath(a, b) || is_subpath(b, a)) return true;
  auto ordered = [&](const DiPath& x, const DiPath& y) {
    for (std::size_t k = 1; k <= std::min(x.size(), y.size()); ++k)
      if (std::equal(x.end() - static_cast<std::ptrdiff_t>(k), x.end(), y.begin())) return true;
    return static_cast<bool>(reachable_from(g, x.back())[y.front()]);
  };
  return ordered(a, b) || ordered(b, a);
}

QueryResult graph_query(const Request& r, const std::string& query) {
  const Digraph g = input_graph(r);
  if (query == "path-atomic") {
    auto d = path_poset_atomic(g);
    QueryResult q = from_decision_base(d.outcome, d.degenerate_tag, d.explanation, d.note);
    if (!d.fails() || !r.witness || !d.witness) return q;
    const auto& [a, b] = *d.witness;
    bool joins = paths_join(g, a, b);
    oracle::OracleReport report{"the two paths have a common superpath", "exact reachability",
                                joins ? oracle::Verdict::confirmed : oracle::Verdict::refuted, {}};
    require_no_join(report);
    q.witness = json{{"type", "non-joinable-pair"},
                     {"pair", {path_json(g, a), path_json(g, b)}},
                     {"validation", report.to_json()}};
    return q;
  }
  auto d = path_poset_wqo(g, r.witness_len);
  QueryResult q = from_decision_base(d.outcome, d.degenerate_tag, d.explanation, d.note);
  if (!d.fails() || !r.witness || !d.witness) return q;
  const auto& w = *d.witness;
  oracle::OracleReport report{"pairwise incomparable", std::to_string(w.paths.size()) + " paths",
                              oracle::Verdict::confirmed, {}};
  json paths = json::array();
  for (std::size_t i = 0; i < w.paths.size(); ++i) {
    paths.push_back(path_json(g, w.paths[i]));
    for (std::size_t j = 0; j < w.paths.size(); ++j)
      if (i != j && is_subpath(w.paths[i], w.paths[j])) report.verdict = oracle::Verdict::refuted;
  }
  require_antichain(report);
  q.witness = json{{"type", "antichain"},
                   {"in_out_cycle", path_json(g, w.in_out_cycle)},
                   {"antichain", paths},
                   {"validation", report.to_json()}};
  return q;
}

}  // namespace

// ------------------------------------------------------------ requests

Request Request::from_json(const json& j) {
  if (!j.is_object()) bad("request", "expected a JSON object");
  Request r;
  if (!j.contains("kind") || !j["kind"].is_string()) bad("kind", "required: words, perms or digraph");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "words")
    r.kind = Kind::words;
  else if (kind == "perms")
    r.kind = Kind::perms;
  else if (kind == "digraph")
    r.kind = Kind::digraph;
  else
    bad("kind", "unknown kind '" + kind + "'");

  if (r.kind == Kind::words) {
    if (!j.contains("alphabet")) bad("alphabet", "required for words");
    if (j["alphabet"].is_string()) {
      for (char c : j["alphabet"].get<std::string>()) r.alphabet.emplace_back(1, c);
    } else {
      r.alphabet = string_list(j["alphabet"], "alphabet");
    }
    bool single = std::all_of(r.alphabet.begin(), r.alphabet.end(), [](const auto& s) { return s.size() == 1; });
    if (!j.contains("basis") || !j["basis"].is_array()) bad("basis", "required array");
    for (const auto& x : j["basis"]) {
      if (x.is_string()) {
        const auto s = x.get<std::string>();
        if (single) {
          std::vector<std::string> tokens;
          for (char c : s) tokens.emplace_back(1, c);
          r.word_basis.push_back(std::move(tokens));
        } else {
          r.word_basis.push_back(whitespace_tokens(s));
        }
      } else {
        r.word_basis.push_back(string_list(x, "basis"));
      }
    }
  } else if (r.kind == Kind::perms) {
    if (!j.contains("basis") || !j["basis"].is_array()) bad("basis", "required array");
    for (const auto& x : j["basis"]) {
      if (x.is_string()) {
        try {
          r.perm_basis.push_back(Permutation::parse(x.get<std::string>()).values());
        } catch (const InvalidInput& e) {
          bad("basis", e.what());
        }
      } else if (x.is_array() && std::all_of(x.begin(), x.end(), [](const json& v) { return v.is_number_integer(); })) {
        r.perm_basis.push_back(x.get<std::vector<int>>());
      } else {
        bad("basis", "permutations are integer arrays or one-line strings");
      }
    }
  } else {
    if (!j.contains("vertices")) bad("vertices", "required for digraph");
    r.vertices = string_list(j["vertices"], "vertices");
    if (j.contains("edges")) {
      if (!j["edges"].is_array()) bad("edges", "expected an array of [u, v] pairs");
      for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
          bad("edges", "expected an array of [u, v] pairs");
        r.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      }
    }
  }

  if (j.contains("queries"))
    r.queries = string_list(j["queries"], "queries");
  else
    r.queries = allowed_queries(r.kind);
  if (j.contains("witness")) {
    if (!j["witness"].is_boolean()) bad("witness", "expected a boolean");
    r.witness = j["witness"].get<bool>();
  }
  if (j.contains("witness_len")) {
    if (!j["witness_len"].is_number_unsigned()) bad("witness_len", "expected a positive integer");
    r.witness_len = j["witness_len"].get<std::size_t>();
  }
  if (j.contains("format")) {
    const auto f = j["format"].is_string() ? j["format"].get<std::string>() : "";
    if (f == "json")
      r.format = Format::json;
    else if (f == "text")
      r.format = Format::text;
    else
      bad("format", "expected json or text");
  }
  validate(r);
  return r;
}

json Request::to_json() const {
  json j{{"kind", to_string(kind)},
         {"queries", queries},
         {"witness", witness},
         {"witness_len", witness_len},
         {"format", to_string(format)}};
  if (kind == Kind::words) {
    j["alphabet"] = alphabet;
    bool single = std::all_of(alphabet.begin(), alphabet.end(), [](const auto& s) { return s.size() == 1; });
    json basis = json::array();
    for (const auto& tokens : word_basis) {
      if (single) {
        std::string s;
        for (const auto& t : tokens) s += t;
        basis.push_back(s);
      } else {
        basis.push_back(tokens);
      }
    }
    j["basis"] = basis;
  } else if (kind == Kind::perms) {
    j["basis"] = perm_basis;
  } else {
    j["vertices"] = vertices;
    json edge_list = json::array();
    for (const auto& [u, v] : edges) edge_list.push_back({u, v});
    j["edges"] = edge_list;
  }
  return j;
}

// ------------------------------------------------------------ responses

json Response::to_json() const {
  json out = json::object();
  for (const auto& [name, q] : results) {
    json e;
    if (std::holds_alternative<bool>(q.value))
      e["value"] = std::get<bool>(q.value);
    else
      e["value"] = std::get<std::string>(q.value);
    e["explanation"] = q.explanation;
    if (!q.note.empty()) e["note"] = q.note;
    if (q.witness) e["witness"] = *q.witness;
    out[name] = e;
  }
  return out;
}

Response Response::from_json(const json& j) {
  if (!j.is_object()) bad("response", "expected a JSON object");
  Response r;
  for (const auto& [name, e] : j.items()) {
    QueryResult q;
    if (!e.contains("value")) bad(name, "missing value");
    if (e["value"].is_boolean())
      q.value = e["value"].get<bool>();
    else if (e["value"].is_string())
      q.value = e["value"].get<std::string>();
    else
      bad(name + ".value", "expected a boolean or a degenerate tag");
    q.explanation = e.value("explanation", "");
    q.note = e.value("note", "");
    if (e.contains("witness")) q.witness = e["witness"];
    r.results.emplace(name, std::move(q));
  }
  return r;
}

std::string Response::to_text() const {
  std::ostringstream os;
  for (const auto& [name, q] : results) {
    os << name << ": ";
    if (std::holds_alternative<bool>(q.value))
      os << (std::get<bool>(q.value) ? "true" : "false");
    else
      os << std::get<std::string>(q.value);
    os << "\n  reason: " << q.explanation << "\n";
    if (!q.note.empty()) os << "  note: " << q.note << "\n";
    if (q.witness) {
      os << "  witness: " << q.witness->value("type", "") << "\n";
      for (const char* key : {"pair", "antichain", "in_out_cycle", "graph_path"}) {
        if (!q.witness->contains(key)) continue;
        os << "    " << key << ":";
        for (const auto& x : (*q.witness)[key]) {
          os << ' ';
          if (!x.is_string()) {
            os << x.dump();
            continue;
          }
          auto text = x.get<std::string>();
          os << (text.find(' ') == std::string::npos ? text : "(" + text + ")");
        }
        os << "\n";
      }
    }
  }
  return os.str();
}

Response run(const Request& request, const RunOptions& options) {
  validate(request);
  Response out;
  for (const auto& query : request.queries) {
    if (out.results.count(query)) continue;
    QueryResult q;
    switch (request.kind) {
      case Kind::words: q = word_query(request, options, query); break;
      case Kind::perms: q = perm_query(request, options, query); break;
      case Kind::digraph: q = graph_query(request, query); break;
    }
    out.results.emplace(query, std::move(q));
  }
  return out;
}

std::string graph_dot(const Request& request) {
  validate(request);
  static const std::string empty = "digraph factor_graph {\n  // empty class\n}\n";
  switch (request.kind) {
    case Kind::words: {
      auto spec = word_spec(request);
      return spec.empty_class ? empty : to_dot(word_factor_graph(spec).graph, "factor_graph");
    }
    case Kind::perms: {
      auto spec = perm_spec(request);
      return spec.empty_class ? empty : to_dot(perm_factor_graph(spec, spec.b).graph, "factor_graph");
    }
    case Kind::digraph: return to_dot(input_graph(request), "input");
  }
  return empty;
}

void export_graph(const Request& request, const std::string& target) {
  std::string dot = graph_dot(request);
  std::ofstream os(target);
  if (!os) throw std::runtime_error("cannot open '" + target + "' for writing");
  os << dot;
  if (!os) throw std::runtime_error("failed writing '" + target + "'");
}

}  // namespace consec::cli
