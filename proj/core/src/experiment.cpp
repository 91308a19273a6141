#include "digraph_spectra/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "digraph_spectra/bounds.hpp"
#include "digraph_spectra/spectral.hpp"

namespace dgs {

double relative_error(double bound_value, double exact_value) {
  if (!(exact_value > 0.0))
    throw std::domain_error("relative_error: exact value must be positive");
  return bound_value / exact_value - 1.0;
}

void ExperimentRunner::register_baseline(const std::string& name, BaselineBound fn) {
  baselines_[name] = std::move(fn);
}

namespace {

int worker_count() {
  if (const char* env = std::getenv("DIGRAPH_SPECTRA_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<std::string> default_bounds(ExperimentId id) {
  if (id == ExperimentId::SpectralRadiusTable1) return {"SR_UPPER_KM"};
  return {"E_KM", "E_RHO_FREE"};
}

// Pairwise (tree) reduction: associative grouping fixed by index, so the sum
// does not depend on how samples were distributed across workers.
double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

ExperimentStats ExperimentRunner::run(const ExperimentConfig& cfg) const {
  if (cfg.samples < 1) throw std::invalid_argument("experiment requires samples >= 1");
  std::vector<std::string> bound_names =
      cfg.bound_ids.empty() ? default_bounds(cfg.id) : cfg.bound_ids;
  for (const auto& name : bound_names) {
    if (!bound_id_from_name(name) && !baselines_.count(name))
      throw std::invalid_argument("unknown bound id: " + name);
  }

  const int n_bounds = static_cast<int>(bound_names.size());
  const int samples = cfg.samples;
  // errors[b * samples + i]; NaN marks an excluded (degenerate) sample.
  std::vector<double> errors(static_cast<std::size_t>(n_bounds) * samples,
                             std::numeric_limits<double>::quiet_NaN());
  std::vector<std::uint8_t> excluded(samples, 0);

  std::atomic<int> next_sample{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&]() {
    try {
      for (;;) {
        int i = next_sample.fetch_add(1);
        if (i >= samples) return;
        RngSeed seed = child_seed(cfg.master_seed, static_cast<std::uint64_t>(i));
        Digraph g = std::holds_alternative<CoreCompleteParams>(cfg.family)
                        ? core_complete_random(std::get<CoreCompleteParams>(cfg.family), seed)
                        : random_k_regular(std::get<RegularParams>(cfg.family).n,
                                           std::get<RegularParams>(cfg.family).k, seed);
        AlphaMatrix M = build_alpha_matrix(g, cfg.alpha);
        Spectrum s = eigenvalues(M);
        double exact = cfg.id == ExperimentId::SpectralRadiusTable1 ? spectral_radius(s)
                                                                    : low_energy(s);
        if (!(exact > 0.0)) {
          excluded[i] = 1;
          continue;
        }
        for (int b = 0; b < n_bounds; ++b) {
          const std::string& name = bound_names[b];
          double bound;
          if (auto id = bound_id_from_name(name)) {
            switch (*id) {
              case BoundId::SrLowerTrace:
                bound = bounds::sr_lower_trace(M.n, M.m, cfg.alpha.value());
                break;
              case BoundId::SrLowerM2:
                bound = bounds::sr_lower_m2(M.n, M.zagreb, M.c2, cfg.alpha.value());
                break;
              case BoundId::SrUpperKm:
                bound = bounds::sr_upper_km(M.n, M.m, M.zagreb, cfg.alpha.value());
                break;
              case BoundId::EnergyKm:
                bound = bounds::energy_upper_km(M.n, M.m, M.zagreb, M.c2, cfg.alpha.value(),
                                                spectral_radius(s));
                break;
              case BoundId::EnergyRhoFree:
                bound = bounds::energy_upper_rho_free(M.n, M.m, M.zagreb, M.c2,
                                                      cfg.alpha.value());
                break;
              default:
                throw std::logic_error("unhandled bound id");
            }
          } else {
            bound = baselines_.at(name)(g, cfg.alpha.value(), exact);
          }
          errors[static_cast<std::size_t>(b) * samples + i] = relative_error(bound, exact);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      next_sample.store(samples);  // drain remaining work
    }
  };

  int workers = std::min(worker_count(), samples);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int t = 0; t < workers; ++t) threads.emplace_back(work);
  for (auto& th : threads) th.join();
  if (first_error) std::rethrow_exception(first_error);

  ExperimentStats stats;
  for (int i = 0; i < samples; ++i) stats.excluded_samples += excluded[i];
  for (int b = 0; b < n_bounds; ++b) {
    std::vector<double> vals;
    vals.reserve(samples);
    for (int i = 0; i < samples; ++i) {
      double e = errors[static_cast<std::size_t>(b) * samples + i];
      if (!std::isnan(e)) vals.push_back(e);
    }
    BoundStats bs;
    bs.sample_count = static_cast<int>(vals.size());
    if (!vals.empty()) {
      bs.mean = pairwise_sum(vals, 0, vals.size()) / static_cast<double>(vals.size());
      std::vector<double> sq(vals.size());
      for (std::size_t i = 0; i < vals.size(); ++i) {
        double d = vals[i] - bs.mean;
        sq[i] = d * d;
      }
      bs.std_dev = std::sqrt(pairwise_sum(sq, 0, sq.size()) / static_cast<double>(sq.size()));
      bs.min = *std::min_element(vals.begin(), vals.end());
      bs.max = *std::max_element(vals.begin(), vals.end());
    }
    stats.per_bound[bound_names[b]] = bs;
  }
  return stats;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::vector<std::string> param_columns(const std::vector<TableCell>& cells) {
  std::set<std::string> keys;
  for (const auto& cell : cells)
    for (const auto& [k, v] : cell.params) keys.insert(k);
  return {keys.begin(), keys.end()};
}

}  // namespace

std::string emit_table_csv(const std::vector<TableCell>& cells) {
  std::vector<std::string> cols = param_columns(cells);
  std::ostringstream out;
  out << "bound_id";
  for (const auto& c : cols) out << ',' << c;
  out << ",mean,std,min,max,n_samples\n";
  for (const auto& cell : cells) {
    for (const auto& [bound, bs] : cell.stats.per_bound) {
      out << bound;
      for (const auto& c : cols) {
        auto it = cell.params.find(c);
        out << ',' << (it != cell.params.end() ? it->second : "");
      }
      out << ',' << fmt(bs.mean) << ',' << fmt(bs.std_dev) << ',' << fmt(bs.min) << ','
          << fmt(bs.max) << ',' << bs.sample_count << '\n';
    }
  }
  return out.str();
}

std::string emit_table_json(const std::vector<TableCell>& cells,
                            const std::string& config_echo) {
  std::ostringstream out;
  out << "{\"config\": " << config_echo << ", \"cells\": [";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ", ";
    out << "{\"params\": {";
    bool first = true;
    for (const auto& [k, v] : cells[i].params) {
      if (!first) out << ", ";
      first = false;
      out << '"' << k << "\": \"" << v << '"';
    }
    out << "}, \"excluded_samples\": " << cells[i].stats.excluded_samples << ", \"bounds\": {";
    first = true;
    for (const auto& [bound, bs] : cells[i].stats.per_bound) {
      if (!first) out << ", ";
      first = false;
      out << '"' << bound << "\": {\"mean\": " << fmt(bs.mean) << ", \"std\": " << fmt(bs.std_dev)
          << ", \"min\": " << fmt(bs.min) << ", \"max\": " << fmt(bs.max)
          << ", \"n_samples\": " << bs.sample_count << '}';
    }
    out << "}}";
  }
  out << "]}";
  return out.str();
}

}  // namespace dgs
