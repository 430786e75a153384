#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "wlpa/errors.hpp"
#include "wlpa/fd.hpp"
#include "wlpa/gk.hpp"
#include "wlpa/oracle.hpp"
#include "wlpa/parse.hpp"
#include "wlpa/quasicycle.hpp"

using json = nlohmann::json;
using namespace wlpa;

namespace {

struct Options {
  std::string file;
  std::string base_override;  // "v=e"
  bool all_bases = false;
  std::string format = "text";
  bool oracle = false;
  bool fast_unweighted = false;
  int max_len = 8;
  bool counts = false;
};

WeightedGraph load(const Options& opt) {
  if (opt.file == "-") return parse_graph(std::cin);
  return parse_graph_file(opt.file);
}

BasePointChoice base_for(const WeightedGraph& g, const Options& opt) {
  BasePointChoice choice = choose_base(g);
  if (opt.base_override.empty()) return choice;
  auto eq = opt.base_override.find('=');
  if (eq == std::string::npos)
    throw input_error("--base expects VERTEX=EDGE, got '" + opt.base_override + "'");
  std::string vname = opt.base_override.substr(0, eq);
  std::string ename = opt.base_override.substr(eq + 1);
  auto v = g.find_vertex(vname);
  if (!v) throw input_error("unknown vertex '" + vname + "'");
  auto e = g.find_edge(ename);
  if (!e) throw input_error("unknown edge '" + ename + "'");
  if (g.edge(*e).source != *v)
    throw input_error("edge '" + ename + "' is not emitted by '" + vname + "'");
  if (g.edge(*e).weight != vertex_weight(g, *v))
    throw input_error("edge '" + ename + "' does not have maximal weight at '" + vname + "'");
  choice.edge_at[*v] = *e;
  return choice;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

std::string growth_name(Growth g) {
  return g == Growth::polynomial ? "polynomial" : "exponential";
}

json gk_json(const NodAutomaton& aut, const GkResult& r) {
  json j;
  j["growth"] = growth_name(r.growth);
  if (r.growth == Growth::polynomial) {
    j["gk_dimension"] = r.dimension;
    if (!r.chain.empty()) {
      json chain = json::array();
      for (const auto& w : r.chain) chain.push_back(render_word(aut, w));
      j["chain"] = chain;
    }
  } else {
    j["witness"] = render_word(aut, *r.witness);
  }
  return j;
}

std::string gk_text(const NodAutomaton& aut, const GkResult& r) {
  std::ostringstream out;
  out << "growth: " << growth_name(r.growth) << "\n";
  if (r.growth == Growth::polynomial) {
    out << "gk_dimension: " << r.dimension << "\n";
    for (const auto& w : r.chain) out << "chain: " << render_word(aut, w) << "\n";
  } else {
    out << "witness: " << render_word(aut, *r.witness) << "\n";
  }
  return out.str();
}

int cmd_validate(const Options& opt) {
  WeightedGraph g = load(opt);
  emit(opt, json{{"ok", true}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}},
       "ok: " + std::to_string(g.vertex_count()) + " vertices, " +
           std::to_string(g.edge_count()) + " edges\n");
  return 0;
}

int cmd_info(const Options& opt) {
  WeightedGraph g = load(opt);
  BasePointChoice choice = base_for(g, opt);
  json j;
  std::ostringstream text;
  j["vertices"] = g.vertex_names();
  text << "vertices:";
  for (const auto& v : g.vertex_names()) text << " " << v;
  text << "\nedges:\n";
  json edges = json::array();
  for (const WEdge& e : g.edges()) {
    edges.push_back({{"name", e.name},
                     {"source", g.vertex_name(e.source)},
                     {"range", g.vertex_name(e.range)},
                     {"weight", e.weight}});
    text << "  " << e.name << " : " << g.vertex_name(e.source) << " -> "
         << g.vertex_name(e.range) << " weight " << e.weight << "\n";
  }
  j["edges"] = edges;
  json sink_names = json::array();
  text << "sinks:";
  for (VertexId v : sinks(g)) {
    sink_names.push_back(g.vertex_name(v));
    text << " " << g.vertex_name(v);
  }
  j["sinks"] = sink_names;
  json heavy = json::array();
  text << "\nweighted edges:";
  for (EdgeId e : weighted_edges(g)) {
    heavy.push_back(g.edge(e).name);
    text << " " << g.edge(e).name;
  }
  j["weighted_edges"] = heavy;
  json rwf_names = json::array();
  text << "\nrwf:";
  for (VertexId v : rwf(g)) {
    rwf_names.push_back(g.vertex_name(v));
    text << " " << g.vertex_name(v);
  }
  j["rwf"] = rwf_names;
  json base = json::object();
  text << "\nbase:";
  for (VertexId v : regular_vertices(g)) {
    base[g.vertex_name(v)] = g.edge(choice.edge_at[v]).name;
    text << " " << g.vertex_name(v) << "=" << g.edge(choice.edge_at[v]).name;
  }
  j["base"] = base;
  text << "\n";
  emit(opt, j, text.str());
  return 0;
}

int cmd_quasicycles(const Options& opt) {
  WeightedGraph g = load(opt);
  NodAutomaton aut(g, base_for(g, opt));
  auto classes = quasicycle_classes(aut);
  if (opt.oracle) {
    for (const auto& c : classes)
      for (const auto& w : c.members)
        if (!oracle::is_quasicycle_naive(aut, w) ||
            is_selfconnected(aut, w) != oracle::selfconnected_bruteforce(aut, w))
          throw internal_error("oracle disagreement on " + render_word(aut, w));
  }
  json j;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& c : classes) {
    json jc;
    jc["canonical"] = render_word(aut, c.canonical);
    jc["size"] = c.members.size();
    jc["selfconnected"] = c.selfconnected;
    jc["star"] = render_word(aut, canonical_rotation(star(aut, c.canonical)));
    arr.push_back(jc);
    text << "[" << render_word(aut, c.canonical) << "]  size " << c.members.size()
         << "  star [" << render_word(aut, canonical_rotation(star(aut, c.canonical)))
         << "]" << (c.selfconnected ? "  selfconnected" : "") << "\n";
  }
  j["classes"] = arr;
  if (classes.empty()) text << "no quasi-cycles\n";
  emit(opt, j, text.str());
  return 0;
}

GkResult gk_for(const WeightedGraph& g, const NodAutomaton& aut, const Options& opt) {
  if (opt.fast_unweighted) {
    if (!is_unweighted(g)) throw input_error("--fast-unweighted requires an unweighted graph");
    return unweighted_gk(g);
  }
  return gk_dimension(aut);
}

int cmd_gkdim(const Options& opt) {
  WeightedGraph g = load(opt);
  NodAutomaton aut(g, base_for(g, opt));
  GkResult r = gk_for(g, aut, opt);
  if (opt.all_bases) {
    for (const auto& choice : all_base_choices(g)) {
      NodAutomaton alt(g, choice);
      GkResult ra = gk_dimension(alt);
      if (ra.growth != r.growth ||
          (r.growth == Growth::polynomial && ra.dimension != r.dimension))
        throw internal_error("base choices disagree on growth/dimension");
    }
  }
  if (opt.oracle && is_unweighted(g)) {
    GkResult fast = unweighted_gk(g);
    if (fast.growth != r.growth ||
        (r.growth == Growth::polynomial && fast.dimension != r.dimension))
      throw internal_error("unweighted fast path disagrees with the chain search");
  }
  emit(opt, gk_json(aut, r), gk_text(aut, r));
  return 0;
}

int cmd_growth(const Options& opt) {
  WeightedGraph g = load(opt);
  NodAutomaton aut(g, base_for(g, opt));
  auto counts = count_by_length(aut, opt.max_len);
  auto dims = cumulative_dim(aut, opt.max_len);
  json j;
  std::ostringstream text;
  if (opt.counts) {
    json arr = json::array();
    for (const auto& c : counts) arr.push_back(c.str());
    j["counts"] = arr;
  }
  json darr = json::array();
  for (const auto& d : dims) darr.push_back(d.str());
  j["d_V"] = darr;
  for (int k = 0; k <= opt.max_len; ++k) {
    text << "n=" << k;
    if (opt.counts) text << "  c=" << counts[k].str();
    text << "  d_V=" << dims[k].str() << "\n";
  }
  emit(opt, j, text.str());
  return 0;
}

int cmd_basis(const Options& opt) {
  WeightedGraph g = load(opt);
  NodAutomaton aut(g, base_for(g, opt));
  auto paths = enumerate_nod_paths(aut, opt.max_len);
  json j;
  std::ostringstream text;
  json triv = json::array();
  for (VertexId v : paths.trivial) {
    triv.push_back(g.vertex_name(v));
    text << g.vertex_name(v) << "\n";
  }
  j["trivial"] = triv;
  json arr = json::array();
  for (int k = 1; k < static_cast<int>(paths.by_length.size()); ++k)
    for (const auto& w : paths.by_length[k]) {
      arr.push_back(render_word(aut, w));
      text << render_word(aut, w) << "\n";
    }
  j["words"] = arr;
  if (opt.oracle) {
    auto counts = count_by_length(aut, opt.max_len);
    for (int k = 1; k < static_cast<int>(paths.by_length.size()); ++k)
      if (counts[k] != BigInt(paths.by_length[k].size()))
        throw internal_error("counting operator disagrees with enumeration");
  }
  emit(opt, j, text.str());
  return 0;
}

int cmd_decompose(const Options& opt) {
  WeightedGraph g = load(opt);
  Decomposition dec = decompose(g);
  std::string oracle_status = "skipped";
  BigInt dim = dimension_oracle(g);
  oracle_status = dim == dec.dimension ? "ok" : "mismatch";
  if (oracle_status == "mismatch")
    throw internal_error("decomposition dimension " + dec.dimension.str() +
                         " != nod-path count " + dim.str());
  json j;
  j["sizes"] = dec.sizes;
  j["dimension"] = dec.dimension.convert_to<long long>();
  j["oracle"] = oracle_status;
  std::ostringstream text;
  text << "sizes:";
  for (long long n : dec.sizes) text << " " << n;
  text << "\ndimension: " << dec.dimension.str() << "\noracle: " << oracle_status << "\n";
  emit(opt, j, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural invariants of weighted Leavitt path algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "graph file ('-' for stdin)")->required();
    sub->add_option("--base", opt.base_override, "override the base edge, VERTEX=EDGE");
    sub->add_flag("--all-bases", opt.all_bases, "check agreement across all base choices");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--oracle", opt.oracle, "enable brute-force cross-checks");
    return sub;
  };

  auto* validate = add_common(app.add_subcommand("validate", "parse and validate a graph"));
  auto* info = add_common(app.add_subcommand("info", "summarize a graph"));
  auto* qcs = add_common(app.add_subcommand("quasicycles", "list quasi-cycle classes"));
  auto* gkdim = add_common(app.add_subcommand("gkdim", "growth type and GK dimension"));
  gkdim->add_flag("--fast-unweighted", opt.fast_unweighted,
                  "use the cycle-chain fast path (unweighted graphs only)");
  auto* growth = add_common(app.add_subcommand("growth", "growth function d_V"));
  growth->add_option("--max-len", opt.max_len, "maximum word length");
  growth->add_flag("--counts", opt.counts, "also print per-length counts");
  auto* basis = add_common(app.add_subcommand("basis", "enumerate nod-paths"));
  basis->add_option("--max-len", opt.max_len, "maximum word length");
  auto* decompose_cmd =
      add_common(app.add_subcommand("decompose", "matrix decomposition (aquasicyclic)"));

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (info->parsed()) return cmd_info(opt);
    if (qcs->parsed()) return cmd_quasicycles(opt);
    if (gkdim->parsed()) return cmd_gkdim(opt);
    if (growth->parsed()) return cmd_growth(opt);
    if (basis->parsed()) return cmd_basis(opt);
    if (decompose_cmd->parsed()) return cmd_decompose(opt);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
