// Command-line surface for spin graphs: build/export graphs, compute face
// rotations, certify spin groups, evaluate chains, transport groups
// between vertices, and run the verification report.
//
// Exit codes: 0 success, 1 verification or domain failure, 2 usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spingraph/chain.hpp"
#include "spingraph/graph.hpp"
#include "spingraph/perm_group.hpp"
#include "spingraph/rotation.hpp"
#include "spingraph/serialize.hpp"
#include "spingraph/transport.hpp"
#include "spingraph/verify.hpp"

namespace {

using spingraph::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw UsageError("cannot open output file '" + out_path + "'");
  os << text;
  if (text.empty() || text.back() != '\n') os << '\n';
}

void emit_json(const ordered_json& j, const std::string& out_path) {
  emit(j.dump(2), out_path);
}

spingraph::GraphKind kind_or_usage(const std::string& kind) {
  try {
    return spingraph::parse_kind(kind);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

spingraph::SpinGraph graph_or_usage(int genus, const std::string& kind) {
  spingraph::GraphKind k = kind_or_usage(kind);
  try {
    return spingraph::build_graph(genus, k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

spingraph::Vertex vertex_or_usage(const spingraph::SpinGraph& g, const std::string& label) {
  try {
    spingraph::Vertex v = spingraph::parse_vertex(label, g.genus());
    g.require_vertex(v);
    return v;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::pair<int, int> parse_genus_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int g = std::stoi(text);
      return {g, g};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("bad genus range '" + text + "' (want N or A..B)");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"spin graphs on hyperelliptic surfaces: rotations, spin groups, transport"};
  app.require_subcommand(1);

  // ------------------------------------------------------------ build/export
  int genus = 3;
  std::string kind = "standard";
  std::string format = "json";
  std::string out_path;
  auto add_graph_flags = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--genus", genus, "genus of the surface")->required();
    cmd->add_option("--kind", kind, "standard | weierstrass");
    if (with_format) cmd->add_option("--format", format, "json | dot");
    cmd->add_option("--out", out_path, "write to file instead of stdout");
  };

  CLI::App* build = app.add_subcommand("build", "construct a spin graph and serialize it");
  add_graph_flags(build, true);

  CLI::App* exp = app.add_subcommand("export", "serialize a spin graph to a file");
  add_graph_flags(exp, true);

  // ---------------------------------------------------------------- rotate
  std::string face_csv, edge_csv;
  CLI::App* rot = app.add_subcommand("rotate", "face rotation along an oriented edge");
  add_graph_flags(rot, false);
  rot->add_option("--face", face_csv, "face as comma-joined labels")->required();
  rot->add_option("--edge", edge_csv, "oriented edge FROM,TO")->required();

  // ----------------------------------------------------------------- group
  std::string base_label = "P";
  CLI::App* grp = app.add_subcommand("group", "spin group at a vertex");
  add_graph_flags(grp, false);
  grp->add_option("--base", base_label, "base vertex label");

  // ------------------------------------------------------------- chain-eval
  std::string chain_file, chain_inline;
  CLI::App* cev = app.add_subcommand("chain-eval", "evaluate a spin chain");
  add_graph_flags(cev, false);
  cev->add_option("--chain-file", chain_file, "chain JSON file");
  cev->add_option("--chain", chain_inline, "inline chain JSON");

  // -------------------------------------------------------------- conjugate
  std::string from_label, to_label_s;
  CLI::App* conj = app.add_subcommand("conjugate", "transport the spin group between vertices");
  add_graph_flags(conj, false);
  conj->add_option("--from", from_label, "source vertex")->required();
  conj->add_option("--to", to_label_s, "target vertex")->required();

  // ----------------------------------------------------------------- verify
  std::string genus_range = "3..6", checks = "all";
  std::uint64_t seed = 0;
  CLI::App* ver = app.add_subcommand("verify", "run the lemma verification report");
  ver->add_option("--genus,--genus-range", genus_range, "genus N or range A..B");
  ver->add_option("--checks", checks, "comma list of check ids, or 'all'");
  ver->add_option("--seed", seed, "seed for randomized checks");
  ver->add_option("--out", out_path, "write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (build->parsed() || exp->parsed()) {
    if (exp->parsed() && out_path.empty()) throw UsageError("export needs --out FILE");
    if (format != "json" && format != "dot")
      throw UsageError("unknown format '" + format + "' (want json or dot)");
    spingraph::SpinGraph g = graph_or_usage(genus, kind);
    if (format == "dot")
      emit(spingraph::graph_to_dot(g), out_path);
    else
      emit_json(spingraph::graph_to_json(g), out_path);
    return 0;
  }

  if (rot->parsed()) {
    spingraph::SpinGraph g = graph_or_usage(genus, kind);
    spingraph::Face face = [&] {
      try {
        return spingraph::face_from_labels(g, face_csv);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();
    auto [from, to] = [&] {
      try {
        return spingraph::edge_from_labels(g, edge_csv);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();
    spingraph::Permutation p = spingraph::rotate(g, face, {from, to});
    ordered_json j;
    j["genus"] = g.genus();
    j["kind"] = spingraph::to_string(g.kind());
    j["face"] = ordered_json::array();
    for (const auto& v : face.cycle()) j["face"].push_back(spingraph::to_label(v));
    j["edge"] = {spingraph::to_label(from), spingraph::to_label(to)};
    j["permutation"] = spingraph::permutation_to_json(p);
    emit_json(j, out_path);
    return 0;
  }

  if (grp->parsed()) {
    spingraph::SpinGraph g = graph_or_usage(genus, kind);
    spingraph::Vertex base = vertex_or_usage(g, base_label);
    spingraph::SpinGroupResult res = spingraph::spin_group(g, base);
    ordered_json j;
    j["genus"] = g.genus();
    j["kind"] = spingraph::to_string(g.kind());
    j["base"] = spingraph::to_label(base);
    j["order"] = res.group.order();
    j["alternating"] = res.certified_alternating;
    j["chains_examined"] = res.chains_examined;
    auto& gens = j["generators"] = ordered_json::array();
    for (const auto& [chain, p] : res.generators) {
      ordered_json e;
      e["chain"] = spingraph::chain_to_json(chain);
      e["permutation"] = spingraph::permutation_to_json(p);
      gens.push_back(std::move(e));
    }
    emit_json(j, out_path);
    return 0;
  }

  if (cev->parsed()) {
    spingraph::SpinGraph g = graph_or_usage(genus, kind);
    if (chain_file.empty() == chain_inline.empty())
      throw UsageError("chain-eval wants exactly one of --chain-file or --chain");
    nlohmann::json parsed;
    try {
      if (!chain_file.empty()) {
        std::ifstream is(chain_file);
        if (!is) throw UsageError("cannot read chain file '" + chain_file + "'");
        is >> parsed;
      } else {
        parsed = nlohmann::json::parse(chain_inline);
      }
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError(std::string("bad chain JSON: ") + e.what());
    }
    spingraph::SpinChain chain = [&] {
      try {
        return spingraph::chain_from_json(g, parsed);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();
    spingraph::ChainValidation v = spingraph::validate_chain(g, chain);
    if (!v.ok()) {
      std::cerr << "invalid chain: " << v.message << "\n";
      return 1;
    }
    spingraph::Permutation p = spingraph::evaluate_chain(g, chain);
    ordered_json j;
    j["genus"] = g.genus();
    j["kind"] = spingraph::to_string(g.kind());
    j["chain"] = spingraph::chain_to_json(chain);
    j["permutation"] = spingraph::permutation_to_json(p);
    j["even"] = spingraph::sign(p) == +1;
    emit_json(j, out_path);
    return 0;
  }

  if (conj->parsed()) {
    spingraph::SpinGraph g = graph_or_usage(genus, kind);
    spingraph::Vertex from = vertex_or_usage(g, from_label);
    spingraph::Vertex to = vertex_or_usage(g, to_label_s);
    spingraph::CanonicalPath path = spingraph::canonical_path(g, from, to);
    spingraph::ConjugatedGroup res = spingraph::conjugate_group(g, from, to);
    ordered_json j;
    j["genus"] = g.genus();
    j["from"] = spingraph::to_label(from);
    j["to"] = spingraph::to_label(to);
    auto& wp = j["path"] = ordered_json::array();
    for (const auto& v : path.waypoints) wp.push_back(spingraph::to_label(v));
    auto& fs = j["faces"] = ordered_json::array();
    for (const auto& f : path.faces) {
      ordered_json jf = ordered_json::array();
      for (const auto& v : f.cycle()) jf.push_back(spingraph::to_label(v));
      fs.push_back(std::move(jf));
    }
    j["sigma"] = spingraph::cycle_string(res.conjugator);
    j["sigma_images"] = res.conjugator.images();
    j["order"] = res.group.order();
    auto& gi = j["generator_images"] = ordered_json::array();
    for (std::size_t i = 0; i < res.mapped_generators.size(); ++i) {
      gi.push_back({{"from", spingraph::cycle_string(res.source_generators[i])},
                    {"to", spingraph::cycle_string(res.mapped_generators[i])}});
    }
    emit_json(j, out_path);
    return 0;
  }

  if (ver->parsed()) {
    auto [lo, hi] = parse_genus_range(genus_range);
    std::vector<std::string> filter;
    std::string cur;
    for (char c : checks + ",") {
      if (c == ',') {
        if (!cur.empty()) filter.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    spingraph::VerificationReport report;
    try {
      report = spingraph::run_verification(lo, hi, filter, seed);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::cerr << spingraph::report_table(report);
    emit_json(spingraph::report_to_json(report), out_path);
    return report.all_passed() ? 0 : 1;
  }

  throw UsageError("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
