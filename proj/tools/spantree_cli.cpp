// Command-line front end: construct extremal graphs, inspect spectra, run single
// checks and certificate searches, and drive exhaustive verification runs.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spantree/spantree.hpp"

namespace {

using namespace spantree;

// A file is an edge list when its first non-blank line is a bare integer; otherwise
// graph6, one graph per line.
std::vector<Graph> read_graphs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  std::istringstream lines(text);
  std::string first;
  while (std::getline(lines, first))
    if (first.find_first_not_of(" \t\r") != std::string::npos) break;
  const auto b = first.find_first_not_of(" \t");
  const auto e = first.find_last_not_of(" \t\r");
  const bool edge_list = b != std::string::npos &&
                         first.substr(b, e - b + 1).find_first_not_of("0123456789") == std::string::npos;
  if (edge_list) return {parse_edge_list(text)};

  std::vector<Graph> out;
  Graph6FileStream stream(path);
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

std::string format_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.members()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

TheoremId theorem_or_throw(const std::string& s) {
  auto id = parse_theorem(s);
  if (!id) throw GraphError("unknown theorem id '" + s + "'");
  return *id;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral conditions for degree-constrained spanning trees"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build an extremal graph");
  std::string family;
  int r = 0, k = 0, n = 0, s = 0;
  std::string out_format = "graph6";
  construct->add_option("--family", family, "H | leaf-extremal")
      ->required()
      ->check(CLI::IsMember({"H", "leaf-extremal"}));
  construct->add_option("--r", r, "Regularity (H)");
  construct->add_option("--k", k, "Degree or leaf-degree bound")->required();
  construct->add_option("--n", n, "Order (leaf-extremal)");
  construct->add_option("--s", s, "Join block size (leaf-extremal)");
  construct->add_option("--out", out_format, "graph6 | edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Print eigenvalues of each input graph");
  std::string in_path;
  std::string matrix = "adjacency";
  spectrum->add_option("--in", in_path, "graph6 file or edge list")->required();
  spectrum->add_option("--matrix", matrix, "adjacency | laplacian")
      ->check(CLI::IsMember({"adjacency", "laplacian"}));

  // check
  auto* check_cmd = app.add_subcommand("check", "Evaluate one theorem on each input graph (JSONL)");
  std::string theorem;
  int t = 0;
  check_cmd->add_option("--in", in_path, "graph6 file or edge list")->required();
  check_cmd->add_option("--theorem", theorem, "Theorem id, e.g. T5.2-leaf-laplacian")->required();
  check_cmd->add_option("--k", k, "Bound k")->required();
  check_cmd->add_option("--t", t, "Connectivity t (T4.3, C5.3)");

  // find-tree
  auto* find_tree = app.add_subcommand("find-tree", "Exact search for a constrained spanning tree");
  std::string mode;
  find_tree->add_option("--in", in_path, "graph6 file or edge list")->required();
  find_tree->add_option("--mode", mode, "ktree | leaftree")
      ->required()
      ->check(CLI::IsMember({"ktree", "leaftree"}));
  find_tree->add_option("--k", k, "Bound k")->required();

  // certify
  auto* certify = app.add_subcommand("certify", "Search for a violating vertex set");
  std::string condition;
  certify->add_option("--in", in_path, "graph6 file or edge list")->required();
  certify->add_option("--condition", condition, "win | kaneko")
      ->required()
      ->check(CLI::IsMember({"win", "kaneko"}));
  certify->add_option("--k", k, "Bound k")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive verification run over a graph family");
  std::string kind;
  bool dedup = false;
  std::string report_path;
  std::string summary_path;
  int workers = 1;
  verify->add_option("--family", kind, "all | connected | regular")
      ->required()
      ->check(CLI::IsMember({"all", "connected", "regular"}));
  verify->add_option("--n", n, "Order")->required();
  verify->add_option("--r", r, "Regularity (regular family)");
  verify->add_flag("--dedup", dedup, "One graph per isomorphism class");
  verify->add_option("--theorem", theorem, "Theorem id")->required();
  verify->add_option("--k", k, "Bound k")->required();
  verify->add_option("--t", t, "Connectivity t (T4.3, C5.3)");
  verify->add_option("--report", report_path, "JSONL report path")->required();
  verify->add_option("--summary", summary_path, "CSV summary path (default: report with .csv)");
  verify->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Print a graph family as graph6 lines");
  enumerate->add_option("--family", kind, "all | connected | regular")
      ->required()
      ->check(CLI::IsMember({"all", "connected", "regular"}));
  enumerate->add_option("--n", n, "Order")->required();
  enumerate->add_option("--r", r, "Regularity (regular family)");
  enumerate->add_flag("--dedup", dedup, "One graph per isomorphism class");

  CLI11_PARSE(app, argc, argv);

  auto family_spec = [&] {
    FamilySpec spec;
    spec.kind = kind == "all" ? FamilyKind::kAll
                : kind == "connected" ? FamilyKind::kConnected
                                      : FamilyKind::kRegular;
    spec.n = n;
    spec.r = r;
    spec.dedup_iso = dedup;
    return spec;
  };
  auto check_params = [&](const CLI::App* cmd) {
    CheckParams p;
    p.k = k;
    if (cmd->count("--t") > 0) p.t = t;
    return p;
  };

  try {
    if (*construct) {
      Graph g;
      if (family == "H") {
        g = build_H(RegularCaseParams::make(r, k));
      } else {
        g = build_leaf_extremal(LeafFamilyParams::make(n, k, s));
      }
      std::cout << (out_format == "graph6" ? to_graph6(g) + "\n" : to_edge_list(g));
      return 0;
    }

    if (*spectrum) {
      for (const Graph& g : read_graphs(in_path)) {
        const Spectrum sp = matrix == "adjacency" ? adjacency_spectrum(g) : laplacian_spectrum(g);
        std::cout << to_graph6(g);
        for (double v : sp.values) std::cout << ' ' << format_real(std::abs(v) < 1e-12 ? 0.0 : v);
        std::cout << '\n';
      }
      return 0;
    }

    if (*check_cmd) {
      const TheoremId id = theorem_or_throw(theorem);
      const CheckParams p = check_params(check_cmd);
      bool counterexample = false;
      for (const Graph& g : read_graphs(in_path)) {
        const auto rec = check(g, id, p);
        counterexample = counterexample || rec.verdict == Verdict::kCounterexample;
        std::cout << to_jsonl(rec) << '\n';
      }
      return counterexample ? 1 : 0;
    }

    if (*find_tree) {
      for (const Graph& g : read_graphs(in_path)) {
        const auto tree = mode == "ktree" ? find_k_tree(g, k) : find_leaf_tree(g, k);
        std::cout << to_graph6(g) << ':';
        if (!tree) {
          std::cout << " none\n";
          continue;
        }
        for (auto [u, v] : tree->edges) std::cout << ' ' << u << '-' << v;
        const auto st = tree_stats(*tree);
        std::cout << "  (max_degree " << st.max_degree << ", leaf_degree " << st.leaf_degree << ")\n";
      }
      return 0;
    }

    if (*certify) {
      for (const Graph& g : read_graphs(in_path)) {
        std::cout << to_graph6(g) << ": ";
        const auto hit = condition == "win" ? find_win_violator(g, k) : find_kaneko_violator(g, k);
        if (!hit) {
          std::cout << "none\n";
          continue;
        }
        const auto cut = describe_cut(g, *hit);
        std::cout << condition << "_violator S=" << format_set(cut.set) << " components=" << cut.components
                  << " isolated=" << cut.isolated << '\n';
      }
      return 0;
    }

    if (*enumerate) {
      auto stream = generate(family_spec());
      while (auto g = stream->next()) std::cout << to_graph6(*g) << '\n';
      return 0;
    }

    if (*verify) {
      const TheoremId id = theorem_or_throw(theorem);
      std::ofstream report(report_path, std::ios::binary);
      if (!report) throw GraphError("cannot write '" + report_path + "'");
      RunOptions opts;
      opts.workers = workers;
      const RunSummary sum = run_verification(family_spec(), id, check_params(verify), &report, opts);
      report.close();

      if (summary_path.empty()) {
        const auto dot = report_path.rfind('.');
        const auto slash = report_path.find_last_of('/');
        const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
        summary_path = (has_ext ? report_path.substr(0, dot) : report_path) + ".csv";
        if (summary_path == report_path) summary_path += ".summary.csv";
      }
      std::ofstream csv(summary_path);
      csv << csv_header() << '\n' << csv_row(sum) << '\n';

      std::cout << csv_header() << '\n' << csv_row(sum) << '\n';
      if (sum.min_pass_margin) std::cout << "min hypothesis margin among passes: " << format_real(*sum.min_pass_margin) << '\n';
      return sum.counterexample > 0 ? 1 : 0;
    }
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
