#pragma once

#include <iosfwd>
#include <string>

#include "wlpa/nod.hpp"

namespace wlpa {

/// Parses the line-oriented graph format:
///   vertex IDENT
///   edge IDENT : IDENT -> IDENT [weight INT]
/// '#' starts a comment; blank lines are skipped. Errors carry line numbers.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph_string(const std::string& text);
WeightedGraph parse_graph_file(const std::string& path);

/// Serializes back to the same format; parse(render(g)) == g.
std::string render_graph(const WeightedGraph& g);

/// "e.2" for the real letter e_2, "e.2*" for its ghost.
std::string render_letter(const NodAutomaton& aut, int x);

/// Space-separated letters.
std::string render_word(const NodAutomaton& aut, const LetterWord& w);

}  // namespace wlpa
