#include "wlpa/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "wlpa/errors.hpp"

namespace wlpa {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      toks.push_back(cur);
      cur.clear();
    }
  };
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == ':' || c == '-' || c == '>') {
      // ':' and '->' are punctuation even when glued to identifiers.
      if (c == ':') {
        flush();
        toks.push_back(":");
      } else if (c == '>') {
        if (!cur.empty() && cur.back() == '-') {
          cur.pop_back();
          flush();
          toks.push_back("->");
        } else {
          cur += c;
        }
      } else {
        cur += c;
      }
    } else {
      cur += c;
    }
  }
  flush();
  return toks;
}

[[noreturn]] void fail(const std::string& msg, int line) {
  throw input_error(msg + " (line " + std::to_string(line) + ")");
}

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
  RawGraph raw;
  std::string line;
  int lineno = 0;
  std::vector<std::pair<RawEdge, int>> pending;  // edges with their line numbers
  std::vector<int> vertex_lines;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "vertex") {
      if (toks.size() != 2) fail("expected 'vertex IDENT'", lineno);
      if (!valid_ident(toks[1])) fail("invalid vertex name '" + toks[1] + "'", lineno);
      raw.vertices.push_back(toks[1]);
      vertex_lines.push_back(lineno);
    } else if (toks[0] == "edge") {
      // edge NAME : SRC -> RNG [weight W]
      if (toks.size() != 6 && toks.size() != 8) fail("expected 'edge IDENT : IDENT -> IDENT [weight INT]'", lineno);
      if (toks[2] != ":" || toks[4] != "->")
        fail("expected 'edge IDENT : IDENT -> IDENT [weight INT]'", lineno);
      if (!valid_ident(toks[1])) fail("invalid edge name '" + toks[1] + "'", lineno);
      RawEdge e;
      e.name = toks[1];
      e.source = toks[3];
      e.range = toks[5];
      e.weight = 1;
      if (toks.size() == 8) {
        if (toks[6] != "weight") fail("expected 'weight INT'", lineno);
        try {
          size_t pos = 0;
          e.weight = std::stoll(toks[7], &pos);
          if (pos != toks[7].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          fail("invalid weight '" + toks[7] + "'", lineno);
        }
      }
      pending.emplace_back(e, lineno);
    } else {
      fail("unknown directive '" + toks[0] + "'", lineno);
    }
  }

  // Re-validate line by line so diagnostics carry positions.
  for (auto& [e, ln] : pending) {
    bool src_ok = false, rng_ok = false;
    for (const auto& v : raw.vertices) {
      src_ok |= v == e.source;
      rng_ok |= v == e.range;
    }
    if (!src_ok) fail("unknown vertex '" + e.source + "'", ln);
    if (!rng_ok) fail("unknown vertex '" + e.range + "'", ln);
    if (e.weight < 1) fail("edge '" + e.name + "' has weight " + std::to_string(e.weight) + "; weights must be >= 1", ln);
    raw.edges.push_back(e);
  }
  if (raw.vertices.empty()) throw input_error("empty vertex set");
  return WeightedGraph::validate(raw);
}

WeightedGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

WeightedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return parse_graph(in);
}

std::string render_graph(const WeightedGraph& g) {
  std::ostringstream out;
  for (const std::string& name : g.vertex_names()) out << "vertex " << name << "\n";
  for (const WEdge& e : g.edges()) {
    out << "edge " << e.name << " : " << g.vertex_name(e.source) << " -> "
        << g.vertex_name(e.range);
    if (e.weight != 1) out << " weight " << e.weight;
    out << "\n";
  }
  return out.str();
}

std::string render_letter(const NodAutomaton& aut, int x) {
  const Letter& l = aut.letter(x);
  std::string s = aut.graph().edge(l.edge).name + "." + std::to_string(l.index);
  if (l.ghost) s += "*";
  return s;
}

std::string render_word(const NodAutomaton& aut, const LetterWord& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += render_letter(aut, w[i]);
  }
  return s;
}

}  // namespace wlpa
