#include "stabidx/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "stabidx/errors.hpp"

namespace stabidx {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
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

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!order) {
      if (toks.size() != 2 || toks[0] != "n")
        throw ParseError(line_no, "expected header 'n <order>'");
      const std::uint64_t n = parse_uint(toks[1], line_no);
      if (n == 0) throw ParseError(line_no, "order must be at least 1");
      order = static_cast<std::size_t>(n);
      continue;
    }
    if (toks.size() != 2) throw ParseError(line_no, "expected an arc 'u v'");
    const std::uint64_t u = parse_uint(toks[0], line_no);
    const std::uint64_t v = parse_uint(toks[1], line_no);
    if (u >= *order || v >= *order)
      throw ParseError(line_no, "arc endpoint outside [0," + std::to_string(*order) + ")");
    const Arc arc{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(arc).second)
      throw ParseError(line_no, "duplicate arc " + std::to_string(u) + " " + std::to_string(v));
    arcs.push_back(arc);
  }
  if (!order) throw ParseError(line_no, "missing header 'n <order>'");
  return Digraph::from_arcs(*order, arcs);
}

Digraph read_edge_list(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_edge_list(text);
}

Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open edge-list file '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& d) {
  out << "n " << d.order() << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

std::string format_edge_list(const Digraph& d) {
  std::ostringstream os;
  write_edge_list(os, d);
  return os.str();
}

}  // namespace stabidx
