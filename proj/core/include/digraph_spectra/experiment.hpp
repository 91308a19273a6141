#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "digraph_spectra/alpha.hpp"
#include "digraph_spectra/families.hpp"

namespace dgs {

enum class ExperimentId {
  SpectralRadiusTable1,  // core-complete digraphs, spectral radius bounds
  LowEnergyTable2,       // random di-regular digraphs, low energy bounds
};

struct RegularParams {
  int n = 0;
  int k = 0;
};

struct ExperimentConfig {
  ExperimentId id = ExperimentId::SpectralRadiusTable1;
  Alpha alpha;
  std::variant<CoreCompleteParams, RegularParams> family;
  int samples = 1000;
  RngSeed master_seed;
  /// Built-in ids ("SR_UPPER_KM" for table 1; "E_KM", "E_RHO_FREE" for
  /// table 2) plus any registered baseline names. Empty = defaults.
  std::vector<std::string> bound_ids;
};

struct BoundStats {
  double mean = 0.0;
  double std_dev = 0.0;  // population standard deviation
  double min = 0.0;
  double max = 0.0;
  int sample_count = 0;
};

struct ExperimentStats {
  std::map<std::string, BoundStats> per_bound;
  int excluded_samples = 0;  // degenerate exact value <= 0
};

/// bound_value / exact_value - 1. Throws on exact_value <= 0.
double relative_error(double bound_value, double exact_value);

/// User-suppliable baseline: maps (digraph, alpha, exact quantity) to a bound
/// value. Lets the full published comparison tables be rebuilt by registering
/// bounds from other papers; none ship here.
using BaselineBound = std::function<double(const Digraph&, double alpha, double exact)>;

class ExperimentRunner {
public:
  void register_baseline(const std::string& name, BaselineBound fn);

  /// Per-sample digraphs come from child_seed(master, index); relative errors
  /// are stored by sample index and reduced in fixed order, so the result is
  /// identical at any worker count. Worker count comes from
  /// DIGRAPH_SPECTRA_THREADS (default: hardware concurrency).
  ExperimentStats run(const ExperimentConfig& cfg) const;

private:
  std::map<std::string, BaselineBound> baselines_;
};

/// One grid cell of an emitted table.
struct TableCell {
  std::map<std::string, std::string> params;  // e.g. {"alpha": "0.3", "beta": "0.4"}
  ExperimentStats stats;
};

/// CSV: header "bound_id,<param columns>,mean,std,min,max,n_samples", one row
/// per (bound, cell). Param columns are the union of cell keys, sorted.
std::string emit_table_csv(const std::vector<TableCell>& cells);

/// JSON mirror of the CSV plus a config echo for provenance.
std::string emit_table_json(const std::vector<TableCell>& cells,
                            const std::string& config_echo);

}  // namespace dgs
