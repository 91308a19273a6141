// Command-line front end: analyze spectra, generate digraph families,
// certify bounds, run the exhaustive small-n verifier, and drive the
// Monte-Carlo bound-comparison experiments.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "digraph_spectra/bounds.hpp"
#include "digraph_spectra/digraph.hpp"
#include "digraph_spectra/experiment.hpp"
#include "digraph_spectra/families.hpp"
#include "digraph_spectra/spectral.hpp"

namespace {

constexpr int kExitSolverFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitVerifyFindings = 3;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

dgs::Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dgs::DigraphError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return dgs::parse_digraph(buf.str());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

int cmd_analyze(const std::string& path, const std::string& alpha_text,
                const std::string& format) {
  dgs::Alpha alpha = dgs::Alpha::parse(alpha_text);
  dgs::Digraph g = load_digraph(path);
  if (g.order() < 1) {
    std::cerr << "analyze: digraph must have at least one vertex\n";
    return kExitBadInput;
  }
  auto M = dgs::build_alpha_matrix(g, alpha);
  auto s = dgs::eigenvalues(M);
  auto [m1, m2] = dgs::spectral_moments(M);
  double frob = dgs::frobenius_norm(M);
  double rho = dgs::spectral_radius(s);
  double energy = dgs::low_energy(s);
  auto [alg_normal, max_comm] =
      dgs::is_normal_algebraic(M, dgs::default_normality_tol(frob));
  std::optional<dgs::NormalityVerdict> topo;
  if (!alpha.is_one()) topo = dgs::is_normal_topological(g, alpha);

  if (format == "json") {
    std::cout << "{\"alpha\": " << fmt(alpha.value()) << ", \"n\": " << g.order()
              << ", \"m\": " << g.size() << ", \"spectrum\": " << dgs::spectrum_to_json(s)
              << ", \"rho\": " << fmt(rho) << ", \"energy\": " << fmt(energy)
              << ", \"m1\": " << fmt(m1) << ", \"m2\": " << fmt(m2)
              << ", \"frobenius_norm\": " << fmt(frob)
              << ", \"normal_algebraic\": " << (alg_normal ? "true" : "false")
              << ", \"max_commutator_entry\": " << fmt(max_comm) << ", \"normal_topological\": "
              << (topo ? (topo->topological ? "true" : "false") : "null") << "}\n";
  } else {
    std::printf("%-22s %s\n", "alpha", fmt(alpha.value()).c_str());
    std::printf("%-22s %d\n", "n", g.order());
    std::printf("%-22s %d\n", "m", g.size());
    std::printf("%-22s %s\n", "rho", fmt(rho).c_str());
    std::printf("%-22s %s\n", "energy", fmt(energy).c_str());
    std::printf("%-22s %s\n", "M1", fmt(m1).c_str());
    std::printf("%-22s %s\n", "M2", fmt(m2).c_str());
    std::printf("%-22s %s\n", "frobenius_norm", fmt(frob).c_str());
    std::printf("%-22s %s\n", "normal", alg_normal ? "yes" : "no");
    std::printf("eigenvalues:\n");
    for (const auto& lambda : s.eigenvalues)
      std::printf("  %14s %+14si\n", fmt(lambda.real()).c_str(), fmt(lambda.imag()).c_str());
  }
  return 0;
}

int cmd_bounds(const std::string& path, const std::string& alpha_text,
               const std::string& format) {
  dgs::Alpha alpha = dgs::Alpha::parse(alpha_text);
  dgs::Digraph g = load_digraph(path);
  if (g.order() < 1) {
    std::cerr << "bounds: digraph must have at least one vertex\n";
    return kExitBadInput;
  }
  auto report = dgs::make_bound_report(g, alpha);
  if (format == "json") {
    std::cout << dgs::bound_report_to_json(report) << "\n";
  } else if (format == "csv") {
    std::cout << dgs::bound_report_csv_header() << "\n"
              << dgs::bound_report_to_csv_row(report) << "\n";
  } else {
    std::printf("%-22s %s\n", "alpha", fmt(report.alpha).c_str());
    std::printf("%-22s %d\n", "n", report.n);
    std::printf("%-22s %d\n", "m", report.m);
    std::printf("%-22s %lld\n", "zagreb", report.zagreb);
    std::printf("%-22s %lld\n", "c2", report.c2);
    std::printf("%-22s %s\n", "rho_exact", fmt(report.rho_exact).c_str());
    std::printf("%-22s %s\n", "energy_exact", fmt(report.energy_exact).c_str());
    std::printf("%-22s %s\n", "sr_lower_trace", fmt(report.sr_lower_trace).c_str());
    std::printf("%-22s %s\n", "sr_lower_m2", fmt(report.sr_lower_m2).c_str());
    std::printf("%-22s %s\n", "sr_upper_km",
                report.sr_upper_km ? fmt(*report.sr_upper_km).c_str() : "n/a");
    std::printf("%-22s %s\n", "energy_upper_km", fmt(report.energy_upper_km).c_str());
    std::printf("%-22s %s\n", "energy_upper_rho_free",
                report.energy_upper_rho_free ? fmt(*report.energy_upper_rho_free).c_str() : "n/a");
    for (const auto& [name, flag] : report.equality_flags)
      std::printf("equality %-14s numeric=%s structural=%s\n", name.c_str(),
                  flag.numeric_equality ? "yes" : "no", flag.structural_match ? "yes" : "no");
  }
  return 0;
}

struct GenerateOptions {
  std::string family;
  int n = 0, k = 0, t = 0, r = 0, extra_arcs = 0;
  double beta = 0.5, p_arc = 0.5;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateOptions& opt) {
  dgs::Digraph g = [&] {
    using namespace dgs;
    RngSeed seed{opt.seed};
    if (opt.family == "complete") return complete_symmetric(opt.n);
    if (opt.family == "complete-plus-isolated") return complete_plus_isolated(opt.k, opt.n);
    if (opt.family == "empty") return empty_digraph(opt.n);
    if (opt.family == "digon-union") return digon_union(opt.t);
    if (opt.family == "cycle") return directed_cycle(opt.k);
    if (opt.family == "bipartite") return complete_bipartite_symmetric(opt.t);
    if (opt.family == "tournament") return rotational_tournament(opt.n);
    if (opt.family == "core-complete")
      return core_complete_random({opt.n, opt.r, opt.beta, opt.extra_arcs}, seed);
    if (opt.family == "k-regular") return random_k_regular(opt.n, opt.k, seed);
    if (opt.family == "random") return random_digraph(opt.n, opt.p_arc, seed);
    throw std::invalid_argument("unknown family: " + opt.family);
  }();
  std::string text = dgs::serialize_digraph(g);
  if (opt.out.empty())
    std::cout << text;
  else
    write_text(opt.out, text);
  return 0;
}

// Exhaustive certification of the bound and normality invariants over every
// loop-free digraph up to max_n, on an exact-rational alpha grid.
int cmd_verify(int max_n) {
  using namespace dgs;
  const std::vector<Alpha> alphas = {Alpha::rational(0, 1), Alpha::rational(1, 4),
                                     Alpha::rational(1, 3), Alpha::rational(1, 2),
                                     Alpha::rational(3, 4), Alpha::rational(1, 1)};
  long long checked = 0;
  long long failures = 0;
  std::string first_counterexample;

  auto record_failure = [&](const std::string& what, const Digraph& g, const Alpha& alpha) {
    ++failures;
    if (first_counterexample.empty()) {
      std::ostringstream msg;
      msg << what << " (alpha = " << alpha.value() << ")\n" << serialize_digraph(g);
      first_counterexample = msg.str();
    }
  };

  for (int n = 1; n <= max_n; ++n) {
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) pairs.emplace_back(u, v);
    const std::uint64_t count = 1ULL << pairs.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      std::vector<Arc> arcs;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask & (1ULL << i)) arcs.push_back(pairs[i]);
      Digraph g = Digraph::from_arcs(n, std::move(arcs));
      for (const Alpha& alpha : alphas) {
        ++checked;
        const double a = alpha.value();
        AlphaMatrix M = build_alpha_matrix(g, alpha);
        Spectrum s = eigenvalues(M);
        double rho = spectral_radius(s);
        double energy = low_energy(s);
        double frob = frobenius_norm(M);
        double scale = std::max(1.0, frob) * n;

        auto [m1, m2] = spectral_moments(M);
        if (std::abs(m1 - a * g.size()) > 1e-9 * scale)
          record_failure("M1 identity violated", g, alpha);
        double m2_expected = a * a * zagreb_index(g) +
                             (1 - a) * (1 - a) * static_cast<double>(closed_walks_2(g));
        if (std::abs(m2 - m2_expected) > 1e-8 * scale * scale)
          record_failure("M2 identity violated", g, alpha);

        double mod_sq = 0.0;
        for (auto lambda : s.eigenvalues) mod_sq += std::norm(lambda);
        if (mod_sq > frob * frob + 1e-7) record_failure("Schur inequality violated", g, alpha);

        double lo = std::max(bounds::sr_lower_trace(n, g.size(), a),
                             bounds::sr_lower_m2(n, zagreb_index(g), closed_walks_2(g), a));
        if (lo > rho + 1e-7) record_failure("lower bound exceeds rho", g, alpha);
        if (!alpha.is_one()) {
          double hi = bounds::sr_upper_km(n, g.size(), zagreb_index(g), a);
          if (rho > hi + 1e-7) record_failure("rho exceeds upper bound", g, alpha);
        }
        double e_km =
            bounds::energy_upper_km(n, g.size(), zagreb_index(g), closed_walks_2(g), a, rho);
        if (energy > e_km + 1e-7) record_failure("energy exceeds KM bound", g, alpha);
        if (n > 1) {
          double e_free =
              bounds::energy_upper_rho_free(n, g.size(), zagreb_index(g), closed_walks_2(g), a);
          if (e_km > e_free + 1e-7) record_failure("KM bound exceeds rho-free bound", g, alpha);
        }

        auto report = make_bound_report(g, alpha);
        for (const auto& [name, flag] : report.equality_flags) {
          if (name == "SR_LOWER_TRACE" || name == "E_KM") {
            // One-directional: structure (or spectral predicate) implies
            // numeric equality.
            if (flag.structural_match && !flag.numeric_equality)
              record_failure("structural equality without numeric equality: " + name, g, alpha);
          } else if (flag.structural_match != flag.numeric_equality) {
            record_failure("equality disagreement: " + name, g, alpha);
          }
        }

        if (!alpha.is_one()) {
          auto v = is_normal_topological(g, alpha);
          if (v.topological != v.algebraic)
            record_failure("normality criterion disagreement", g, alpha);
        }
      }
    }
  }

  std::printf("verify: %lld digraph/alpha checks, %lld failures\n", checked, failures);
  if (failures > 0) {
    std::printf("first counterexample:\n%s", first_counterexample.c_str());
    return kExitVerifyFindings;
  }
  return 0;
}

struct ExperimentOptions {
  int table = 1;
  std::string alpha_text = "0.3";
  int samples = 1000;
  std::uint64_t seed = 0;
  std::vector<double> beta_grid = {0.8, 0.6, 0.4, 0.2, 0.1};
  std::vector<int> k_grid = {6, 7, 8, 9, 10};
  std::vector<int> n_grid;
  int n = 100, r = 5;
  int extra_arcs = -1;  // -1 = default 8n
  std::string out;
};

int cmd_experiment(const ExperimentOptions& opt) {
  using namespace dgs;
  Alpha alpha = Alpha::parse(opt.alpha_text);
  ExperimentRunner runner;
  std::vector<TableCell> cells;
  std::ostringstream echo;
  echo << "{\"table\": " << opt.table << ", \"alpha\": \"" << opt.alpha_text
       << "\", \"samples\": " << opt.samples << ", \"seed\": " << opt.seed;

  if (opt.table == 1) {
    int extra = opt.extra_arcs >= 0 ? opt.extra_arcs : 8 * opt.n;
    echo << ", \"n\": " << opt.n << ", \"r\": " << opt.r << ", \"extra_arcs\": " << extra
         << ", \"beta_grid\": [";
    for (std::size_t i = 0; i < opt.beta_grid.size(); ++i)
      echo << (i ? ", " : "") << fmt(opt.beta_grid[i]);
    echo << "]}";
    for (double beta : opt.beta_grid) {
      ExperimentConfig cfg;
      cfg.id = ExperimentId::SpectralRadiusTable1;
      cfg.alpha = alpha;
      cfg.family = CoreCompleteParams{opt.n, opt.r, beta, extra};
      cfg.samples = opt.samples;
      cfg.master_seed = {opt.seed};
      TableCell cell;
      cell.params = {{"alpha", fmt(alpha.value())},
                     {"beta", fmt(beta)},
                     {"n", std::to_string(opt.n)},
                     {"r", std::to_string(opt.r)}};
      cell.stats = runner.run(cfg);
      cells.push_back(std::move(cell));
    }
  } else if (opt.table == 2) {
    std::vector<int> ns = opt.n_grid;
    if (ns.empty())
      for (int k : opt.k_grid) ns.push_back(10 * k);
    if (ns.size() != opt.k_grid.size()) {
      std::cerr << "experiment: --n-grid must match --k-grid in length\n";
      return kExitBadInput;
    }
    echo << ", \"k_grid\": [";
    for (std::size_t i = 0; i < opt.k_grid.size(); ++i)
      echo << (i ? ", " : "") << opt.k_grid[i];
    echo << "], \"n_grid\": [";
    for (std::size_t i = 0; i < ns.size(); ++i) echo << (i ? ", " : "") << ns[i];
    echo << "]}";
    for (std::size_t i = 0; i < opt.k_grid.size(); ++i) {
      ExperimentConfig cfg;
      cfg.id = ExperimentId::LowEnergyTable2;
      cfg.alpha = alpha;
      cfg.family = RegularParams{ns[i], opt.k_grid[i]};
      cfg.samples = opt.samples;
      cfg.master_seed = {opt.seed};
      TableCell cell;
      cell.params = {{"alpha", fmt(alpha.value())},
                     {"k", std::to_string(opt.k_grid[i])},
                     {"n", std::to_string(ns[i])}};
      cell.stats = runner.run(cfg);
      cells.push_back(std::move(cell));
    }
  } else {
    std::cerr << "experiment: --table must be 1 or 2\n";
    return kExitBadInput;
  }

  std::string csv = emit_table_csv(cells);
  std::string json = emit_table_json(cells, echo.str());
  if (opt.out.empty()) {
    std::cout << csv;
  } else {
    write_text(opt.out + ".csv", csv);
    write_text(opt.out + ".json", json);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A_alpha spectra, bounds, and Monte-Carlo bound comparison for digraphs"};
  app.require_subcommand(1);

  std::string path, alpha_text = "0", format = "table";

  auto* analyze = app.add_subcommand("analyze", "Spectrum, energy, and normality of a digraph");
  analyze->add_option("path", path, "edge-list file")->required();
  analyze->add_option("--alpha", alpha_text, "alpha as decimal or p/q");
  analyze->add_option("--format", format, "json|table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* bounds_cmd = app.add_subcommand("bounds", "Bound report with equality flags");
  bounds_cmd->add_option("path", path, "edge-list file")->required();
  bounds_cmd->add_option("--alpha", alpha_text, "alpha as decimal or p/q");
  bounds_cmd->add_option("--format", format, "json|table|csv")
      ->check(CLI::IsMember({"json", "table", "csv"}));

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Emit a digraph family as an edge list");
  generate
      ->add_option("family", gen.family,
                   "complete|complete-plus-isolated|empty|digon-union|cycle|bipartite|"
                   "tournament|core-complete|k-regular|random")
      ->required();
  generate->add_option("--n", gen.n, "vertex count");
  generate->add_option("--k", gen.k, "clique size / cycle length / regularity");
  generate->add_option("--t", gen.t, "digon count / bipartite part size");
  generate->add_option("--r", gen.r, "core size");
  generate->add_option("--beta", gen.beta, "attachment concentration in (0,1)");
  generate->add_option("--extra-arcs", gen.extra_arcs, "extra random arcs");
  generate->add_option("--p-arc", gen.p_arc, "arc probability");
  generate->add_option("--seed", gen.seed, "RNG seed");
  generate->add_option("--out", gen.out, "output file (default stdout)");

  int max_n = 4;
  auto* verify = app.add_subcommand("verify", "Exhaustive small-n invariant certification");
  verify->add_option("--max-n", max_n, "largest vertex count (default 4, cap 5)")
      ->check(CLI::Range(1, 5));

  ExperimentOptions exp;
  auto* experiment = app.add_subcommand("experiment", "Monte-Carlo bound comparison");
  experiment->add_option("--table", exp.table, "1 = spectral radius, 2 = low energy")
      ->required();
  experiment->add_option("--alpha", exp.alpha_text, "alpha as decimal or p/q");
  experiment->add_option("--samples", exp.samples, "samples per cell");
  experiment->add_option("--seed", exp.seed, "master seed");
  experiment->add_option("--beta-grid", exp.beta_grid, "table 1 beta values");
  experiment->add_option("--k-grid", exp.k_grid, "table 2 regularity values");
  experiment->add_option("--n-grid", exp.n_grid, "table 2 vertex counts (default 10k)");
  experiment->add_option("--n", exp.n, "table 1 vertex count");
  experiment->add_option("--r", exp.r, "table 1 core size");
  experiment->add_option("--extra-arcs", exp.extra_arcs, "table 1 extra arcs (default 8n)");
  experiment->add_option("--out", exp.out, "output prefix for .csv and .json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(path, alpha_text, format);
    if (bounds_cmd->parsed()) return cmd_bounds(path, alpha_text, format);
    if (generate->parsed()) return cmd_generate(gen);
    if (verify->parsed()) return cmd_verify(max_n);
    if (experiment->parsed()) return cmd_experiment(exp);
  } catch (const dgs::DigraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolverFailure;
  }
  return 0;
}
