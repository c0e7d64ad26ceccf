#include "cckit/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace cckit {

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edgelist" || name == "el") return GraphFormat::edgelist;
  if (name == "dot") return GraphFormat::dot;
  throw InvalidInput("unknown graph format '" + std::string(name) + "'");
}

const char* format_extension(GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6: return ".g6";
    case GraphFormat::edgelist: return ".el";
    case GraphFormat::dot: return ".dot";
  }
  return "";
}

std::string to_graph6(const Multigraph& g) {
  if (!g.is_simple()) throw InvalidInput("graph6 needs a simple graph; this one has parallel edges");
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift : {12, 6, 0}) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    throw InvalidInput("graph too large for graph6");
  }
  int bits = 0;
  int acc = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.multiplicity(i, j) > 0 ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(acc + 63);
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>((acc << (6 - bits)) + 63);
  return out;
}

Multigraph from_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw InvalidInput("empty graph6 string");
  auto byte = [&](std::size_t i) {
    if (i >= line.size()) throw InvalidInput("truncated graph6 string");
    int c = static_cast<unsigned char>(line[i]) - 63;
    if (c < 0 || c > 63) throw InvalidInput("bad graph6 character");
    return c;
  };
  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(line[0]) == 126) {
    if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126) throw InvalidInput("graph6 graph too large");
    n = (static_cast<std::size_t>(byte(1)) << 12) | (static_cast<std::size_t>(byte(2)) << 6) | byte(3);
    pos = 4;
  } else {
    n = static_cast<std::size_t>(byte(0));
    pos = 1;
  }
  Multigraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex(std::to_string(v));
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int c = byte(pos + k / 6);
      if ((c >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (pos + (k + 5) / 6 != line.size()) throw InvalidInput("graph6 string has trailing data");
  return g;
}

std::string to_edgelist(const Multigraph& g) {
  std::ostringstream os;
  os << "# " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) os << g.label(v) << '\n';
  for (const auto& e : g.bundles()) os << g.label(e.u) << ' ' << g.label(e.v) << ' ' << e.multiplicity << '\n';
  return os.str();
}

Multigraph from_edgelist(std::string_view text) {
  Multigraph g;
  auto vertex = [&](const std::string& label) {
    if (auto v = g.find(label)) return *v;
    return g.add_vertex(label);
  };
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto where = " on line " + std::to_string(lineno);
    if (tok.size() == 1) {
      vertex(tok[0]);
      continue;
    }
    if (tok.size() > 3) throw InvalidInput("too many fields" + where);
    int k = 1;
    if (tok.size() == 3) {
      std::size_t used = 0;
      try {
        k = std::stoi(tok[2], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok[2].size() || k < 1) throw InvalidInput("bad multiplicity '" + tok[2] + "'" + where);
    }
    if (tok[0] == tok[1]) throw InvalidInput("loop at '" + tok[0] + "'" + where);
    VertexId u = vertex(tok[0]);
    VertexId v = vertex(tok[1]);
    g.add_edge(u, v, k);
  }
  return g;
}

namespace {
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}
}  // namespace

std::string to_dot(const Multigraph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << quoted(std::string(name)) << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) os << "  " << quoted(g.label(v)) << ";\n";
  for (const auto& e : g.bundles()) {
    for (int i = 0; i < e.multiplicity; ++i) os << "  " << quoted(g.label(e.u)) << " -- " << quoted(g.label(e.v)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string serialize(const Multigraph& g, GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6: return to_graph6(g) + "\n";
    case GraphFormat::edgelist: return to_edgelist(g);
    case GraphFormat::dot: return to_dot(g);
  }
  return {};
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.ends_with(".g6")) {
    std::string line;
    std::getline(buf, line);
    return from_graph6(line);
  }
  return from_edgelist(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
  if (!out) throw InvalidInput("write failed for '" + path + "'");
}

}  // namespace cckit
