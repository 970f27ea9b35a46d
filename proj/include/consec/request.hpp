#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace consec::cli {

enum class Kind { words, perms, digraph };
enum class Format { json, text };

std::string to_string(Kind k);
std::string to_string(Format f);

struct Request {
  Kind kind = Kind::perms;
  // words
  std::vector<std::string> alphabet;
  std::vector<std::vector<std::string>> word_basis;  // token sequences
  // perms
  std::vector<std::vector<int>> perm_basis;
  // digraph
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  std::vector<std::string> queries;
  bool witness = true;
  std::size_t witness_len = 10;
  Format format = Format::json;

  // Throws InvalidInput naming the offending field.
  static Request from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  bool operator==(const Request&) const = default;
};

struct QueryResult {
  std::variant<bool, std::string> value;  // boolean or a degenerate tag
  std::optional<nlohmann::json> witness;
  std::string explanation;
  std::string note;

  bool operator==(const QueryResult&) const = default;
};

struct Response {
  std::map<std::string, QueryResult> results;

  static Response from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  std::string to_text() const;
  bool operator==(const Response&) const = default;
};

struct RunOptions {
  // Longest element in the bounded join search used to check pair witnesses.
  std::size_t validation_length = 9;
};

Response run(const Request& request, const RunOptions& options = {});

// DOT text of the factor graph (or the input digraph).
std::string graph_dot(const Request& request);
void export_graph(const Request& request, const std::string& target);

}  // namespace consec::cli
