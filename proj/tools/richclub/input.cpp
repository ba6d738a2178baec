#include "input.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "richclub/error.hpp"
#include "richclub/graph.hpp"

namespace richclub::cli {

namespace {

template <typename T>
bool parse_integer(std::string_view token, T& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

Characteristic read_characteristic(std::istream& in, const Graph& g, const std::string& source) {
  std::vector<std::uint8_t> values(g.node_count(), 0);
  std::vector<char> seen(g.node_count(), 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(line_no, "expected label<TAB>value", source);
    const std::string label = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    if (value != "0" && value != "1")
      throw ParseError(line_no, "attribute value '" + value + "' is not 0 or 1", source);
    auto node = g.find(label);
    if (!node) throw InputError("node '" + label + "' in attribute file is not in the graph");
    if (seen[*node]) throw ParseError(line_no, "node '" + label + "' listed twice", source);
    seen[*node] = 1;
    values[*node] = value == "1" ? 1 : 0;
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!seen[v]) throw InputError("node '" + g.label(v) + "' has no attribute value");
  }
  return Characteristic(std::move(values));
}

std::vector<std::int64_t> read_degree_list(std::istream& in, const std::string& source) {
  std::vector<std::int64_t> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = line.substr(0, line.find('#'));
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      std::int64_t value = 0;
      if (!parse_integer(token, value))
        throw ParseError(line_no, "'" + token + "' is not an integer", source);
      out.push_back(value);
    }
  }
  return out;
}

std::vector<std::int64_t> parse_degree_list(const std::string& text) {
  std::istringstream in(text);
  return read_degree_list(in, "sequence");
}

std::vector<Count> parse_count_list(const std::string& text) {
  std::vector<Count> out;
  if (text.find_first_not_of(' ') == std::string::npos) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string_view token(text.data() + start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Count value = 0;
    if (!parse_integer(token, value))
      throw InputError("'" + std::string(token) + "' is not a non-negative integer");
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

}  // namespace richclub::cli
