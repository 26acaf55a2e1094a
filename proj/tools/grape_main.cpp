#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grape/diagram_tools.hpp"
#include "grape/hub_pipeline.hpp"
#include "grape/io.hpp"
#include "grape/persistence.hpp"

namespace {

std::string show(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

grape::FeatureOptions options_from_env() {
  grape::FeatureOptions opts;
  if (const char* cap = std::getenv("GRAPE_MAX_SETS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || v == 0)
      throw std::invalid_argument("GRAPE_MAX_SETS must be a positive integer, got: " +
                                  std::string(cap));
    opts.max_sets = static_cast<std::size_t>(v);
  }
  return opts;
}

grape::WeightedGraph load_transformed(const std::string& path, bool directed,
                                      const std::string& transform) {
  grape::LoadOptions lopts;
  lopts.directed = directed;
  auto records = grape::parse_edge_list(path, lopts);
  grape::apply_transform(records, grape::transform_from_name(transform));
  std::size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return grape::build_graph(records, lopts, name);
}

grape::PersistenceDiagram diagram_of(const grape::WeightedGraph& g, const std::string& feature,
                                     const std::string& mode, const grape::FeatureOptions& opts) {
  const grape::Feature& f = grape::find_feature(feature);
  grape::Filtration filt = grape::build_filtration(g);
  auto profiles = grape::compute_activities(f, filt, opts);
  return mode == "steady" ? grape::steady_diagram(profiles, filt, f)
                          : grape::ranging_diagram(profiles, filt, f);
}

void print_hub_report(const grape::PersistentHubReport& report, std::size_t top) {
  std::cout << "feature=" << report.feature << " mode=" << report.mode
            << " gap=" << report.gap_index << " cornerpoints=" << report.diagram.points.size()
            << " selected=" << report.selection.selected.size() << "\n";
  if (!report.selection.gaps.empty()) {
    const grape::DiagonalGap& g = report.selection.gaps[report.gap_index - 1];
    std::cout << "gap interval (" << show(g.lower) << ", " << show(g.upper)
              << "), persistence threshold " << show(report.selection.threshold) << "\n";
  }
  std::cout << "label\tbirth\tdeath\tpersistence\n";
  std::size_t shown = 0;
  for (const grape::HubRow& row : report.rows) {
    if (shown++ == top) break;
    std::cout << row.label << "\t" << show(row.birth) << "\t" << show(row.death) << "\t"
              << show(row.persistence) << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"steady and ranging persistence of graph features"};
  app.require_subcommand(1);
  auto feature_names = grape::feature_names();
  const std::vector<std::string> modes{"steady", "ranging"};
  const std::vector<std::string> transforms{"identity", "inverse", "negshift", "product"};
  const std::vector<std::string> hub_features{"hub", "whub", "dhub"};

  // ---- diagram ----
  auto* cmd_diagram = app.add_subcommand("diagram", "compute a persistence diagram from a CSV");
  std::string in_path, feature, mode, transform = "identity", out_path, svg_path;
  bool directed = false;
  cmd_diagram->add_option("--input", in_path, "edge list CSV")->required();
  cmd_diagram->add_flag("--directed", directed, "treat edges as arcs");
  cmd_diagram->add_option("--feature", feature, "feature name")
      ->required()
      ->check(CLI::IsMember(feature_names));
  cmd_diagram->add_option("--mode", mode, "steady or ranging")
      ->required()
      ->check(CLI::IsMember(modes));
  cmd_diagram->add_option("--transform", transform, "weight transform")
      ->check(CLI::IsMember(transforms));
  cmd_diagram->add_option("--out", out_path, "output JSON path")->required();
  cmd_diagram->add_option("--svg", svg_path, "also render an SVG plot");

  // ---- hubs ----
  auto* cmd_hubs = app.add_subcommand("hubs", "report persistent hubs of a CSV");
  std::string h_in, h_feature, h_mode, h_transform = "identity";
  bool h_directed = false;
  std::size_t h_gap = 1, h_top = 0;
  cmd_hubs->add_option("--input", h_in, "edge list CSV")->required();
  cmd_hubs->add_flag("--directed", h_directed, "treat edges as arcs");
  cmd_hubs->add_option("--feature", h_feature, "hub feature")
      ->required()
      ->check(CLI::IsMember(hub_features));
  cmd_hubs->add_option("--mode", h_mode, "steady or ranging")
      ->required()
      ->check(CLI::IsMember(modes));
  cmd_hubs->add_option("--gap", h_gap, "diagonal gap index (1 = widest)");
  cmd_hubs->add_option("--top", h_top, "print at most N rows");
  cmd_hubs->add_option("--transform", h_transform, "weight transform")
      ->check(CLI::IsMember(transforms));

  // ---- bottleneck ----
  auto* cmd_bottleneck =
      app.add_subcommand("bottleneck", "bottleneck distance between two diagram files");
  std::string b_left, b_right;
  cmd_bottleneck->add_option("left", b_left, "first diagram JSON")->required();
  cmd_bottleneck->add_option("right", b_right, "second diagram JSON")->required();

  // ---- track ----
  auto* cmd_track = app.add_subcommand("track", "rank hubs across a sequence of CSV snapshots");
  std::vector<std::string> t_inputs;
  std::string t_feature = "hub", t_mode = "ranging", t_transform = "identity";
  bool t_directed = false;
  std::size_t t_top = 6;
  cmd_track->add_option("--inputs", t_inputs, "edge list CSVs, in order")
      ->required()
      ->expected(-1);
  cmd_track->add_option("--feature", t_feature, "hub feature")->check(CLI::IsMember(hub_features));
  cmd_track->add_option("--mode", t_mode, "steady or ranging")->check(CLI::IsMember(modes));
  cmd_track->add_option("--top", t_top, "hubs per snapshot");
  cmd_track->add_flag("--directed", t_directed, "treat edges as arcs");
  cmd_track->add_option("--transform", t_transform, "weight transform")
      ->check(CLI::IsMember(transforms));

  // ---- oracle ----
  auto* cmd_oracle = app.add_subcommand("oracle", "definition-level reference computations");
  cmd_oracle->require_subcommand(1);

  auto* osigma = cmd_oracle->add_subcommand("sigma", "steady count: diagram vs brute force");
  auto* orho = cmd_oracle->add_subcommand("rho", "ranging count: diagram vs brute force");
  std::string o_in, o_feature, o_transform = "identity";
  bool o_directed = false;
  double o_u = 0, o_v = 0;
  for (auto* c : {osigma, orho}) {
    c->add_option("--input", o_in, "edge list CSV")->required();
    c->add_flag("--directed", o_directed, "treat edges as arcs");
    c->add_option("--feature", o_feature, "feature name")
        ->required()
        ->check(CLI::IsMember(feature_names));
    c->add_option("--u", o_u, "lower query level")->required();
    c->add_option("--v", o_v, "upper query level")->required();
    c->add_option("--transform", o_transform, "weight transform")
        ->check(CLI::IsMember(transforms));
  }

  auto* obottleneck = cmd_oracle->add_subcommand(
      "bottleneck", "bottleneck distance: exact matcher vs exhaustive matcher");
  std::string ob_left, ob_right;
  obottleneck->add_option("left", ob_left, "first diagram JSON")->required();
  obottleneck->add_option("right", ob_right, "second diagram JSON")->required();

  auto* opseudo = cmd_oracle->add_subcommand(
      "pseudodistance", "natural pseudodistance between two small graphs");
  std::string op_left, op_right;
  bool op_directed = false;
  opseudo->add_option("left", op_left, "first edge list CSV")->required();
  opseudo->add_option("right", op_right, "second edge list CSV")->required();
  opseudo->add_flag("--directed", op_directed, "treat edges as arcs");

  auto* ounbal = cmd_oracle->add_subcommand(
      "unbalanced", "search for a balancedness violation of a generator");
  std::string ou_feature, ou_mode;
  std::uint64_t ou_trials = 100000, ou_seed = 1;
  unsigned ou_maxv = 7;
  ounbal->add_option("--feature", ou_feature, "feature name")
      ->required()
      ->check(CLI::IsMember(feature_names));
  ounbal->add_option("--mode", ou_mode, "steady (sigma) or ranging (rho)")
      ->required()
      ->check(CLI::IsMember(modes));
  ounbal->add_option("--trials", ou_trials, "trial budget");
  ounbal->add_option("--seed", ou_seed, "random seed");
  ounbal->add_option("--max-vertices", ou_maxv, "vertices per random graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the formatted message
    return 1;     // uniform usage-error code
  }
  grape::FeatureOptions fopts = options_from_env();

  if (cmd_diagram->parsed()) {
    grape::WeightedGraph g = load_transformed(in_path, directed, transform);
    grape::PersistenceDiagram d = diagram_of(g, feature, mode, fopts);
    grape::export_diagram(d, out_path);
    std::cout << "wrote " << out_path << " (" << d.points.size() << " cornerpoints, "
              << d.total_multiplicity() << " total multiplicity)\n";
    if (!svg_path.empty()) {
      grape::export_svg(d, svg_path);
      std::cout << "wrote " << svg_path << "\n";
    }
    return 0;
  }

  if (cmd_hubs->parsed()) {
    grape::WeightedGraph g = load_transformed(h_in, h_directed, h_transform);
    grape::PersistentHubReport report = grape::persistent_hubs(g, h_feature, h_mode, h_gap, fopts);
    print_hub_report(report, h_top == 0 ? report.rows.size() : h_top);
    return 0;
  }

  if (cmd_bottleneck->parsed()) {
    grape::PersistenceDiagram left = grape::import_diagram(b_left);
    grape::PersistenceDiagram right = grape::import_diagram(b_right);
    std::cout << show(grape::bottleneck_distance(left, right)) << "\n";
    return 0;
  }

  if (cmd_track->parsed()) {
    std::vector<grape::WeightedGraph> snapshots;
    for (const std::string& path : t_inputs)
      snapshots.push_back(load_transformed(path, t_directed, t_transform));
    grape::HubTimeline timeline = grape::track_hubs(snapshots, t_feature, t_mode, t_top, fopts);
    for (const auto& entry : timeline.entries) {
      std::cout << "== " << entry.name << " ==\n";
      std::size_t rank = 1;
      for (const grape::HubRow& row : entry.top)
        std::cout << rank++ << ". " << row.label << " (persistence " << show(row.persistence)
                  << ")\n";
    }
    return 0;
  }

  if (osigma->parsed() || orho->parsed()) {
    bool steady = osigma->parsed();
    grape::WeightedGraph g = load_transformed(o_in, o_directed, o_transform);
    const grape::Feature& f = grape::find_feature(o_feature);
    grape::Filtration filt = grape::build_filtration(g);
    auto profiles = grape::compute_activities(f, filt, fopts);
    grape::PersistenceDiagram d = steady ? grape::steady_diagram(profiles, filt, f)
                                         : grape::ranging_diagram(profiles, filt, f);
    int from_diagram = grape::sigma_at(d, o_u, o_v);
    int brute = steady ? grape::brute_force_sigma(f, filt, o_u, o_v, fopts)
                       : grape::brute_force_rho(f, filt, o_u, o_v, fopts);
    std::cout << (steady ? "sigma" : "rho") << "(" << show(o_u) << ", " << show(o_v)
              << "): diagram=" << from_diagram << " brute=" << brute
              << " agree=" << (from_diagram == brute ? "yes" : "NO") << "\n";
    return 0;
  }

  if (obottleneck->parsed()) {
    grape::PersistenceDiagram left = grape::import_diagram(ob_left);
    grape::PersistenceDiagram right = grape::import_diagram(ob_right);
    double exact = grape::bottleneck_distance(left, right);
    std::cout << "exact=" << show(exact);
    if (left.total_multiplicity() <= 6 && right.total_multiplicity() <= 6) {
      double reference = grape::bottleneck_oracle(left, right);
      std::cout << " oracle=" << show(reference)
                << " agree=" << (exact == reference ? "yes" : "NO");
    } else {
      std::cout << " oracle=skipped (more than 6 points)";
    }
    std::cout << "\n";
    return 0;
  }

  if (opseudo->parsed()) {
    grape::LoadOptions lopts;
    lopts.directed = op_directed;
    grape::WeightedGraph left = grape::load_edge_list(op_left, lopts);
    grape::WeightedGraph right = grape::load_edge_list(op_right, lopts);
    std::cout << show(grape::natural_pseudodistance_oracle(left, right)) << "\n";
    return 0;
  }

  if (ounbal->parsed()) {
    grape::SearchOptions sopts;
    sopts.trials = ou_trials;
    sopts.seed = ou_seed;
    sopts.max_vertices = ou_maxv;
    sopts.feature_options = fopts;
    auto witness = grape::search_unbalanced(ou_feature, ou_mode, sopts);
    if (!witness) {
      std::cout << "no violation found in " << ou_trials << " trials\n";
      return 0;
    }
    std::cout << "violation at trial " << witness->trial << " (h=" << show(witness->h)
              << ", u=" << show(witness->u) << ", v=" << show(witness->v)
              << "): wide=" << witness->wide << " > narrow=" << witness->narrow << "\n";
    auto dump = [](const char* tag, const grape::WeightedGraph& g) {
      std::cout << tag << ":";
      for (const grape::Edge& e : g.edges())
        std::cout << " " << g.label(e.a) << (g.directed() ? "->" : "--") << g.label(e.b) << "="
                  << show(e.weight);
      std::cout << "\n";
    };
    dump("left", witness->left);
    dump("right", witness->right);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 1;  // CLI11_PARSE handles printing; only reached on rethrow
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const grape::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const grape::ParseError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const grape::SchemaError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const grape::GraphError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
