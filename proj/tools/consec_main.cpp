#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "consec/errors.hpp"
#include "consec/request.hpp"

namespace {

std::string read_all(const std::string& source) {
  if (source == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(source);
  if (!in) throw consec::InvalidInput("cannot read input file '" + source + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> comma_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide atomicity and well-quasi-order for classes defined by forbidden consecutive patterns"};
  app.require_subcommand(1);

  auto* decide = app.add_subcommand("decide", "answer queries about a class or a digraph");
  std::string kind, input, query, basis, alphabet, format, export_dot;
  bool witness = true;
  std::size_t witness_len = 10;
  decide->add_option("kind", kind, "words, perms or digraph (inline form)")
      ->check(CLI::IsMember({"words", "perms", "digraph"}));
  decide->add_option("--input", input, "JSON request file, or - for stdin");
  decide->add_option("--basis", basis, "comma separated basis, e.g. 132,213 or bb,aab");
  decide->add_option("--alphabet", alphabet, "letters (ab) or comma separated tokens (x1,x2)");
  decide->add_option("--query", query, "comma separated: atomic,wqo or path-atomic,path-wqo");
  auto* witness_flag = decide->add_flag("--witness,!--no-witness", witness, "include witnesses (default on)");
  auto* len_opt = decide->add_option("--witness-len", witness_len, "antichain prefix length")->check(CLI::PositiveNumber);
  auto* format_opt = decide->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  decide->add_option("--export-dot", export_dot, "write the factor graph in DOT format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    nlohmann::json j;
    if (!input.empty()) {
      try {
        j = nlohmann::json::parse(read_all(input));
      } catch (const nlohmann::json::parse_error& e) {
        throw consec::InvalidInput(std::string("input is not valid JSON: ") + e.what());
      }
      if (!j.is_object()) throw consec::InvalidInput("input must be a JSON object");
      if (!kind.empty() && j.value("kind", "") != kind)
        throw consec::InvalidInput("kind on the command line does not match the input");
    } else {
      if (kind.empty()) throw consec::InvalidInput("give a kind (words, perms) or --input");
      if (kind == "digraph") throw consec::InvalidInput("digraph requests must be given with --input");
      j["kind"] = kind;
      j["basis"] = comma_list(basis);
      if (kind == "words") {
        if (alphabet.empty()) throw consec::InvalidInput("field 'alphabet': required for words");
        if (alphabet.find(',') != std::string::npos)
          j["alphabet"] = comma_list(alphabet);
        else
          j["alphabet"] = alphabet;
      }
    }
    if (!query.empty()) j["queries"] = query;
    if (witness_flag->count()) j["witness"] = witness;
    if (len_opt->count()) j["witness_len"] = witness_len;
    if (format_opt->count()) j["format"] = format;

    const auto request = consec::cli::Request::from_json(j);
    if (!export_dot.empty()) consec::cli::export_graph(request, export_dot);
    const auto response = consec::cli::run(request);
    if (request.format == consec::cli::Format::json)
      std::cout << response.to_json().dump(2) << "\n";
    else
      std::cout << response.to_text();
    return 0;
  } catch (const consec::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const consec::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
