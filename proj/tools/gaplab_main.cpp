// gaplab command-line driver.
//
//   gaplab generate  --model copy --n 256 --seed 7 --count 10 --out graphs/
//   gaplab gap       graph.txt [--solver dense] [--alpha-g 0.85]
//   gaplab sweep     --config configs/copy_gamma3.json [--workers 8] [--out runs/copy]
//   gaplab analyze   --records runs/copy/records.jsonl --out runs/copy [--graphs g*.txt]
//   gaplab fit       --summary summary.csv [--out fits.csv]
//   gaplab plot      --summary a.csv --fits a_fits.csv [--label copy] --out plots/
//
// Exit status: 0 success, 1 usage error, 2 runtime failure.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "gaplab/analysis.hpp"
#include "gaplab/config.hpp"
#include "gaplab/edge_list_io.hpp"
#include "gaplab/error.hpp"
#include "gaplab/harness.hpp"
#include "gaplab/netgen.hpp"
#include "gaplab/pagerank.hpp"
#include "gaplab/params.hpp"
#include "gaplab/plot.hpp"
#include "gaplab/records.hpp"
#include "gaplab/spectral.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

struct ModelOptions {
  std::string model = "copy";
  std::optional<int> m, m_x, m_y;
  std::optional<double> p, p_x, p_y, p1, p2, alpha;
  std::vector<double> targets;  // gamma_in gamma_out [mean_degree]
  bool allow_unbalanced = false;
};

void add_model_options(CLI::App* cmd, ModelOptions& o) {
  cmd->add_option("--model", o.model, "pa | copy | alpha_pa | empty")
      ->check(CLI::IsMember({"pa", "copy", "alpha_pa", "empty"}));
  cmd->add_option("--m", o.m, "edges per new vertex for both components");
  cmd->add_option("--m-x", o.m_x);
  cmd->add_option("--m-y", o.m_y);
  cmd->add_option("--p", o.p, "copy: uniform-link probability for both components");
  cmd->add_option("--p-x", o.p_x);
  cmd->add_option("--p-y", o.p_y);
  cmd->add_option("--p1", o.p1);
  cmd->add_option("--p2", o.p2);
  cmd->add_option("--alpha", o.alpha, "alpha_pa attachment offset");
  cmd->add_option("--targets", o.targets, "GAMMA_IN GAMMA_OUT [MEAN_DEGREE]")
      ->expected(2, 3);
  cmd->add_flag("--allow-unbalanced", o.allow_unbalanced, "admit m_x != m_y");
}

// Reuses the config parser so the CLI and config files share one schema.
gaplab::ExperimentConfig config_from(const ModelOptions& o) {
  ordered_json doc;
  doc["model"] = o.model;
  doc["allow_unbalanced"] = o.allow_unbalanced;
  if (!o.targets.empty()) {
    doc["targets"] = {{"gamma_in", o.targets[0]},
                      {"gamma_out", o.targets[1]},
                      {"mean_degree", o.targets.size() > 2 ? o.targets[2] : 2.0}};
  } else {
    ordered_json p = ordered_json::object();
    auto put = [&p](const char* key, const auto& value) {
      if (value) p[key] = *value;
    };
    put("m", o.m);
    put("m_x", o.m_x);
    put("m_y", o.m_y);
    put("p", o.p);
    put("p_x", o.p_x);
    put("p_y", o.p_y);
    put("p1", o.p1);
    put("p2", o.p2);
    put("alpha", o.alpha);
    doc["params"] = p;
  }
  return gaplab::parse_config(doc.dump());
}

void write_file(const fs::path& path, const auto& writer) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gaplab::Error(gaplab::ErrorKind::io, "cannot open " + path.string());
  writer(out);
  if (!out) throw gaplab::Error(gaplab::ErrorKind::io, "write failed: " + path.string());
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gaplab::Error(gaplab::ErrorKind::io, "cannot open " + path.string());
  return in;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  ModelOptions model;
  std::size_t n = 0;
  std::uint64_t seed = 20130705;
  std::size_t count = 1;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  const auto config = config_from(a.model);
  for (std::size_t i = 0; i < a.count; ++i) {
    gaplab::Rng rng(gaplab::derive_seed(a.seed, a.n, i));
    const auto graph = gaplab::generate_graph(config.params, a.n, rng, config.allow_unbalanced);
    if (a.out.empty()) {
      gaplab::write_edge_list(std::cout, graph);
    } else {
      const fs::path path = fs::path(a.out) / fmt::format("{}_n{}_{:04}.txt", a.model.model, a.n, i);
      write_file(path, [&](std::ostream& os) { gaplab::write_edge_list(os, graph); });
      std::cerr << path.string() << ": " << graph.edge_count() << " edges\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- gap

struct GapArgs {
  std::string graph;
  double alpha_g = gaplab::kDefaultDamping;
  std::string solver = "auto";
  std::size_t n_scan = 21;
  double tol = 1e-10;
  bool trace = false;
};

int run_gap(const GapArgs& a) {
  const auto graph = gaplab::read_edge_list(fs::path(a.graph));
  const auto google = gaplab::google_matrix(graph, a.alpha_g);
  gaplab::GapOptions options;
  options.mode = gaplab::parse_solver_mode(a.solver);
  options.n_scan = a.n_scan;
  options.tol = a.tol;
  const auto r = gaplab::min_gap(google, options);

  ordered_json doc;
  doc["n"] = graph.node_count();
  doc["edges"] = graph.edge_count();
  doc["delta"] = r.delta;
  doc["inverse_delta"] = 1.0 / r.delta;
  doc["s_star"] = r.s_star;
  doc["lambda0"] = r.lambda0;
  doc["lambda1"] = r.lambda1;
  doc["raw_lambda0"] = r.raw_lambda0;
  doc["solver"] = std::string(gaplab::to_string(r.mode));
  doc["refinement_converged"] = r.refinement_converged;
  doc["refinement_iterations"] = r.refinement_iterations;
  doc["evaluations"] = r.evaluations.size();
  if (a.trace) {
    ordered_json probes = ordered_json::array();
    for (const auto& p : r.evaluations) probes.push_back({p.s, p.delta});
    doc["trace"] = probes;
  }
  std::cout << doc.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<std::string> solver;
  std::optional<std::string> out;
  bool quiet = false;
};

int run_sweep(const SweepArgs& a) {
  auto config = gaplab::load_config(a.config);
  if (a.seed) config.master_seed = *a.seed;
  if (a.workers) config.workers = *a.workers;
  if (a.solver) config.solver.mode = gaplab::parse_solver_mode(*a.solver);
  if (a.out) config.output_dir = *a.out;
  gaplab::validate(config);

  const auto workers = gaplab::effective_workers(config);
  const double cpu = gaplab::estimate_cpu_seconds(config);
  const double wall = cpu / static_cast<double>(workers);
  std::cerr << fmt::format("sweep: {} sizes x {} instances, {} workers, estimated {:.0f} s wall\n",
                           config.sizes.size(), config.instances_per_size, workers, wall);
  if (wall > 3600.0) {
    std::cerr << fmt::format("warning: full-scale schedule, roughly {:.1f} h of wall time\n",
                             wall / 3600.0);
  }

  std::size_t last_percent = 0;
  auto progress = [&](const gaplab::RunRecord& rec, std::size_t done, std::size_t total) {
    if (!rec.ok()) {
      std::cerr << fmt::format("n={} instance={}: {} ({})\n", rec.n, rec.instance_id, rec.status,
                               rec.message);
    }
    const std::size_t percent = done * 100 / total;
    if (!a.quiet && percent >= last_percent + 10) {
      last_percent = percent - percent % 10;
      std::cerr << fmt::format("  {}/{} done\n", done, total);
    }
  };
  const auto outcome = gaplab::run_experiment(config, progress);

  const auto summaries = gaplab::summarize(outcome.records);
  const auto fits = gaplab::fit_all(summaries);
  gaplab::emit_outputs(config.output_dir, summaries, fits, gaplab::model_tag(config.params));

  std::cout << fmt::format("{} records ({} computed, {} resumed) -> {}\n", outcome.records.size(),
                           outcome.computed, outcome.resumed, outcome.records_path.string());
  for (const auto& s : summaries) {
    std::cout << fmt::format("  n={:<6} mean 1/delta={:<12.6g} stderr={:<10.4g} count={} errors={}\n",
                             s.n, s.mean, s.std_error, s.count, s.errors);
  }
  for (const auto& f : fits) {
    std::cout << fmt::format("  {:<8} a={:<12.6g} b={:<12.6g} rms={:.4g}\n",
                             gaplab::to_string(f.form), f.a, f.b, f.residual);
  }
  return 0;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string records;
  std::string out = ".";
  std::vector<std::string> graphs;
  std::int64_t s_t = gaplab::kDefaultSampleThreshold;
  std::optional<double> k_min;
};

int run_analyze(const AnalyzeArgs& a) {
  const fs::path out_dir(a.out);
  fs::create_directories(out_dir);

  if (!a.records.empty()) {
    const auto records = gaplab::read_records(fs::path(a.records));
    const auto summaries = gaplab::summarize(records);
    const auto fits = gaplab::fit_all(summaries);
    gaplab::emit_outputs(out_dir, summaries, fits);
    std::cout << fmt::format("{} records, {} sizes -> {}\n", records.size(), summaries.size(),
                             out_dir.string());
  }

  if (!a.graphs.empty()) {
    std::vector<gaplab::SimpleDigraph> graphs;
    graphs.reserve(a.graphs.size());
    for (const auto& g : a.graphs) graphs.push_back(gaplab::read_edge_list(fs::path(g)));
    for (auto direction : {gaplab::Direction::in, gaplab::Direction::out}) {
      const auto counts = gaplab::degree_counts(graphs, direction);
      const auto binned = gaplab::adaptive_bin(counts, a.s_t);
      const auto name = std::string(gaplab::to_string(direction));
      write_file(out_dir / fmt::format("degree_{}.csv", name),
                 [&](std::ostream& os) { gaplab::write_binned_csv(os, binned); });
      const double k_min = a.k_min.value_or(gaplab::default_tail_start(binned));
      std::cout << fmt::format("{:<3} mean degree {:.4f}, {} bins", name, counts.mean_degree(),
                               binned.bins.size());
      try {
        std::cout << fmt::format(", tail exponent {:.3f} (k >= {:.3g})\n",
                                 gaplab::tail_exponent(binned, k_min), k_min);
      } catch (const gaplab::Error& e) {
        std::cout << ", tail exponent unavailable: " << e.what() << '\n';
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------- fit / plot

struct FitArgs {
  std::string summary;
  std::string out;
};

int run_fit(const FitArgs& a) {
  auto in = open_input(a.summary);
  const auto summaries = gaplab::read_summary_csv(in);
  const auto fits = gaplab::fit_all(summaries);
  if (a.out.empty()) {
    gaplab::write_fits_csv(std::cout, fits);
  } else {
    write_file(a.out, [&](std::ostream& os) { gaplab::write_fits_csv(os, fits); });
  }
  return 0;
}

struct PlotArgs {
  std::vector<std::string> summaries;
  std::vector<std::string> fits;
  std::vector<std::string> labels;
  std::string out = ".";
};

int run_plot(const PlotArgs& a) {
  if (!a.fits.empty() && a.fits.size() != a.summaries.size()) {
    throw CLI::ValidationError("--fits", "give one fits file per summary file");
  }
  std::vector<gaplab::PlotSeries> series;
  for (std::size_t i = 0; i < a.summaries.size(); ++i) {
    gaplab::PlotSeries s;
    s.label = i < a.labels.size() ? a.labels[i] : fs::path(a.summaries[i]).stem().string();
    auto in = open_input(a.summaries[i]);
    s.summaries = gaplab::read_summary_csv(in);
    if (!a.fits.empty()) {
      auto fin = open_input(a.fits[i]);
      s.fits = gaplab::read_fits_csv(fin);
    }
    series.push_back(std::move(s));
  }
  const fs::path dir(a.out);
  write_file(dir / "semilog.svg", [&](std::ostream& os) {
    gaplab::write_scaling_svg(os, series, gaplab::PlotScale::semilog);
  });
  write_file(dir / "loglog.svg", [&](std::ostream& os) {
    gaplab::write_scaling_svg(os, series, gaplab::PlotScale::loglog);
  });
  std::cout << "wrote " << (dir / "semilog.svg").string() << " and "
            << (dir / "loglog.svg").string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gaplab: spectral-gap scaling of the adiabatic PageRank Hamiltonian"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "grow graphs and write edge lists");
  add_model_options(generate, gen.model);
  generate->add_option("--n", gen.n, "vertex count")->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "master seed");
  generate->add_option("--count", gen.count, "number of graphs")->check(CLI::PositiveNumber);
  generate->add_option("--out", gen.out, "output directory (stdout when omitted)");

  GapArgs gap;
  auto* gap_cmd = app.add_subcommand("gap", "minimum spectral gap of one graph");
  gap_cmd->add_option("graph", gap.graph, "edge-list file")->required()->check(CLI::ExistingFile);
  gap_cmd->add_option("--alpha-g", gap.alpha_g, "damping factor");
  gap_cmd->add_option("--solver", gap.solver)->check(CLI::IsMember({"auto", "dense", "iterative"}));
  gap_cmd->add_option("--scan", gap.n_scan, "grid points on [0, 1]");
  gap_cmd->add_option("--tol", gap.tol, "iterative eigen-residual");
  gap_cmd->add_flag("--trace", gap.trace, "include every (s, delta) probe");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "run an ensemble sweep from a config file");
  sweep_cmd->add_option("--config", sweep.config)->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("--seed", sweep.seed, "override master_seed");
  sweep_cmd->add_option("--workers", sweep.workers, "override worker count");
  sweep_cmd->add_option("--solver", sweep.solver)
      ->check(CLI::IsMember({"auto", "dense", "iterative"}));
  sweep_cmd->add_option("--out", sweep.out, "override output_dir");
  sweep_cmd->add_flag("--quiet", sweep.quiet, "no progress lines");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "summaries, histograms and degree distributions");
  analyze_cmd->add_option("--records", analyze.records, "records.jsonl")->check(CLI::ExistingFile);
  analyze_cmd->add_option("--graphs", analyze.graphs, "edge-list files to pool")
      ->check(CLI::ExistingFile);
  analyze_cmd->add_option("--out", analyze.out, "output directory");
  analyze_cmd->add_option("--s-t", analyze.s_t, "adaptive binning threshold")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--k-min", analyze.k_min, "tail start (default twice the mean)");

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "semilog, power-law and polylog fits of a summary");
  fit_cmd->add_option("--summary", fit.summary)->required()->check(CLI::ExistingFile);
  fit_cmd->add_option("--out", fit.out, "fits.csv (stdout when omitted)");

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plot", "semilog and log-log SVG plots");
  plot_cmd->add_option("--summary", plot.summaries)->required()->check(CLI::ExistingFile);
  plot_cmd->add_option("--fits", plot.fits)->check(CLI::ExistingFile);
  plot_cmd->add_option("--label", plot.labels);
  plot_cmd->add_option("--out", plot.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed() && analyze.records.empty() && analyze.graphs.empty()) {
      std::cerr << "analyze: give --records and/or --graphs\n";
      return kExitUsage;
    }
    if (generate->parsed()) return run_generate(gen);
    if (gap_cmd->parsed()) return run_gap(gap);
    if (sweep_cmd->parsed()) return run_sweep(sweep);
    if (analyze_cmd->parsed()) return run_analyze(analyze);
    if (fit_cmd->parsed()) return run_fit(fit);
    if (plot_cmd->parsed()) return run_plot(plot);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const gaplab::Error& e) {
    std::cerr << "error [" << gaplab::to_string(e.kind()) << "]: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
