#include "idem/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace idem {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
    fail(line, "expected a non-negative integer, got '" + tok + "'");
  }
  try {
    return std::stoul(tok);
  } catch (const std::out_of_range&) {
    fail(line, "integer out of range: " + tok);
  }
}

void check_op_name(const std::string& name, std::size_t line) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  static const std::regex reserved("p[0-9]+|iter");
  if (!std::regex_match(name, ident)) fail(line, "operation name '" + name + "' is not an identifier");
  if (std::regex_match(name, reserved)) fail(line, "operation name '" + name + "' is reserved for terms");
}

std::string dot_id(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string_view edge_style(EdgeType t) {
  switch (t) {
    case EdgeType::Semilattice:
      return "solid";
    case EdgeType::Majority:
      return "dashed";
    case EdgeType::Affine:
      return "dotted";
    case EdgeType::Unary:
      return "bold";
  }
  return "solid";
}

}  // namespace

AlgebraDescription parse_algebra_text(std::string_view text) {
  std::vector<Line> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream ls(raw);
      Line l{number, {}};
      for (std::string tok; ls >> tok;) l.tokens.push_back(tok);
      if (!l.tokens.empty()) lines.push_back(std::move(l));
    }
  }
  AlgebraDescription d;
  bool have_header = false, have_size = false, ended = false;
  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& l = lines[i];
    const std::string& kw = l.tokens[0];
    if (ended) fail(l.number, "content after 'end'");
    if (kw == "algebra") {
      if (have_header) fail(l.number, "duplicate 'algebra'");
      if (l.tokens.size() != 2) fail(l.number, "expected 'algebra <name>'");
      d.name = l.tokens[1];
      have_header = true;
      ++i;
    } else if (!have_header) {
      fail(l.number, "file must start with 'algebra <name>'");
    } else if (kw == "size") {
      if (have_size) fail(l.number, "duplicate 'size'");
      if (l.tokens.size() != 2) fail(l.number, "expected 'size <n>'");
      d.size = parse_count(l.tokens[1], l.number);
      if (d.size == 0) fail(l.number, "size must be positive");
      have_size = true;
      ++i;
    } else if (kw == "labels") {
      if (!d.labels.empty()) fail(l.number, "duplicate 'labels'");
      d.labels.assign(l.tokens.begin() + 1, l.tokens.end());
      if (d.labels.empty()) fail(l.number, "'labels' needs at least one label");
      ++i;
    } else if (kw == "op") {
      if (!have_size) fail(l.number, "'size' must precede operations");
      if (l.tokens.size() != 3) fail(l.number, "expected 'op <name> <arity>'");
      AlgebraDescription::Operation op;
      op.name = l.tokens[1];
      check_op_name(op.name, l.number);
      op.arity = parse_count(l.tokens[2], l.number);
      if (op.arity == 0) fail(l.number, "arity must be positive");
      const std::size_t want = checked_pow(d.size, op.arity);
      const std::size_t start = l.number;
      ++i;
      while (op.table.size() < want) {
        if (i >= lines.size()) fail(start, "table of '" + op.name + "' ends early");
        const Line& row = lines[i];
        if (!std::isdigit(static_cast<unsigned char>(row.tokens[0][0]))) {
          fail(row.number, "table of '" + op.name + "' has " + std::to_string(op.table.size()) + " of " +
                               std::to_string(want) + " entries");
        }
        for (const std::string& tok : row.tokens) {
          if (op.table.size() == want) fail(row.number, "table of '" + op.name + "' has too many entries");
          const std::size_t v = parse_count(tok, row.number);
          if (v >= d.size) fail(row.number, "entry " + tok + " outside 0.." + std::to_string(d.size - 1));
          op.table.push_back(static_cast<Elem>(v));
        }
        ++i;
      }
      d.operations.push_back(std::move(op));
    } else if (kw == "end") {
      if (l.tokens.size() != 1) fail(l.number, "unexpected text after 'end'");
      ended = true;
      ++i;
    } else {
      fail(l.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_header) fail(0, "empty input");
  if (!have_size) fail(0, "missing 'size'");
  if (!ended) fail(lines.back().number, "missing 'end'");
  if (d.operations.empty()) fail(lines.back().number, "no operations");
  return d;
}

std::string serialize_algebra(const AlgebraDescription& d) {
  std::ostringstream out;
  out << "algebra " << d.name << "\n";
  out << "size " << d.size << "\n";
  if (!d.labels.empty()) {
    out << "labels";
    for (const auto& l : d.labels) out << " " << l;
    out << "\n";
  }
  for (const auto& op : d.operations) {
    out << "op " << op.name << " " << op.arity << "\n";
    for (std::size_t i = 0; i < op.table.size(); ++i) {
      out << op.table[i] << ((i + 1) % d.size == 0 ? "\n" : " ");
    }
  }
  out << "end\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error(ErrorKind::ParseError, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::string graph_dot(const StructureGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << dot_id(std::string(name)) << " {\n";
  for (const auto& l : g.labels) out << "  " << dot_id(l) << ";\n";
  for (const auto& e : g.edges) {
    out << "  " << dot_id(g.labels[e.a]) << " -- " << dot_id(g.labels[e.b]) << " [style=" << edge_style(e.type)
        << ", label=\"" << to_string(e.type) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string hypergraph_dot(const StructureGraph& h, std::string_view name) {
  std::ostringstream out;
  out << "graph " << dot_id(std::string(name)) << " {\n";
  for (const auto& l : h.labels) out << "  " << dot_id(l) << ";\n";
  for (std::size_t i = 0; i < h.hyperedges.size(); ++i) {
    const std::string node = "\"H" + std::to_string(i) + "\"";
    out << "  " << node << " [shape=point];\n";
    for (Elem e : h.hyperedges[i].elements()) out << "  " << node << " -- " << dot_id(h.labels[e]) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string thin_dot(const ThinGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << dot_id(std::string(name)) << " {\n";
  for (const auto& l : g.labels) out << "  " << dot_id(l) << ";\n";
  for (const auto& e : g.arcs) {
    const EdgeType t = e.kind == ThinKind::ThinSemilattice       ? EdgeType::Semilattice
                       : e.kind == ThinKind::SpecialThinMajority ? EdgeType::Majority
                                                                 : EdgeType::Affine;
    std::string label = std::string(to_string(e.kind)) + ": " + e.certificate;
    if (e.necessary) label += *e.necessary ? " [necessary ok]" : " [necessary FAILED]";
    out << "  " << dot_id(g.labels[e.a]) << " -> " << dot_id(g.labels[e.b]) << " [style=" << edge_style(t)
        << ", label=" << dot_id(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace idem
