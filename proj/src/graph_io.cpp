#include <charconv>
#include <set>
#include <sstream>

#include "gbsr/graph.hpp"

namespace gbsr {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string at_line(std::size_t n) { return "line " + std::to_string(n) + ": "; }

std::int64_t parse_label(std::string_view tok, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw Error(ErrorCode::SyntaxError, at_line(line_no) + "bad label '" + std::string(tok) + "'");
  if (value < 1)
    throw Error(ErrorCode::NonPositiveLabel, at_line(line_no) + "label " + std::string(tok) + " is not positive");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  GraphSpec spec;
  std::set<std::string> declared;
  auto declare = [&](std::string_view name) {
    if (declared.insert(std::string(name)).second) spec.vertices.emplace_back(name);
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;

    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw Error(ErrorCode::SyntaxError, at_line(line_no) + "expected 'vertex <name>'");
      if (declared.count(std::string(tok[1])))
        throw Error(ErrorCode::DuplicateName, at_line(line_no) + "vertex '" + std::string(tok[1]) + "' declared twice");
      declare(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 6)
        throw Error(ErrorCode::SyntaxError, at_line(line_no) + "expected 'edge <name> <v> <label> <label> <w>'");
      EdgeSpec e{std::string(tok[1]), std::string(tok[2]), parse_label(tok[3], line_no), parse_label(tok[4], line_no),
                 std::string(tok[5])};
      declare(tok[2]);
      declare(tok[5]);
      spec.edges.push_back(std::move(e));
    } else {
      throw Error(ErrorCode::SyntaxError, at_line(line_no) + "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  return Graph::create(spec);
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertex_names()) out << "vertex " << v << "\n";
  for (const auto& e : g.edges()) {
    out << "edge " << e.name << " " << g.vertex_name(e.ends[0].vertex) << " " << e.ends[0].label << " "
        << e.ends[1].label << " " << g.vertex_name(e.ends[1].vertex) << "\n";
  }
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph gbs {\n";
  for (const auto& v : g.vertex_names()) out << "  \"" << v << "\";\n";
  for (const auto& e : g.edges()) {
    out << "  \"" << g.vertex_name(e.ends[0].vertex) << "\" -- \"" << g.vertex_name(e.ends[1].vertex)
        << "\" [label=\"" << e.name << "\", taillabel=\"" << e.ends[0].label << "\", headlabel=\""
        << e.ends[1].label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gbsr
