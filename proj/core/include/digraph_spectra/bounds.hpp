#pragma once

#include <map>
#include <optional>
#include <string>

#include "digraph_spectra/alpha.hpp"
#include "digraph_spectra/digraph.hpp"
#include "digraph_spectra/spectral.hpp"

namespace dgs {

enum class BoundId {
  SrLowerTrace,   // rho >= alpha*m/n
  SrLowerM2,      // rho >= sqrt((alpha^2 Z + (1-alpha)^2 c2) / n)
  SrUpperKm,      // Koolen-Moulton style upper bound on rho, alpha in [0,1)
  EnergyKm,       // E <= rho + sqrt((n-1)(T - rho^2))
  EnergyRhoFree,  // E <= sqrt(n*T), n > 1
};

std::string bound_id_name(BoundId id);
std::optional<BoundId> bound_id_from_name(const std::string& name);

namespace bounds {

double sr_lower_trace(int n, int m, double alpha);
double sr_lower_m2(int n, long long Z, long long c2, double alpha);
double sr_upper_km(int n, int m, long long Z, double alpha);
double energy_upper_km(int n, int m, long long Z, long long c2, double alpha, double rho);
double energy_upper_rho_free(int n, int m, long long Z, long long c2, double alpha);

// Undirected reductions. Callers assert symmetry (m = c2 = 2*mprime).
double km_undirected(int nprime, int mprime, long long Z, double alpha, double rho);
double mcclelland(int nprime, int mprime);
double koolen_moulton_classic(int nprime, int mprime);

}  // namespace bounds

/// Structural equality predicate for one bound: does the digraph belong to the
/// characterized extremal family at this alpha? For EnergyKm the predicate is
/// spectral (normal matrix and equal |Re lambda_i| off the Perron eigenvalue).
/// For SrLowerTrace the check is one-directional: structure implies equality,
/// the converse is not characterized.
bool equality_witness(const Digraph& g, Alpha alpha, BoundId id);

struct EqualityFlag {
  bool numeric_equality = false;
  bool structural_match = false;
};

struct BoundReport {
  double alpha = 0.0;
  bool alpha_exact = false;
  int n = 0;
  int m = 0;
  long long zagreb = 0;
  long long c2 = 0;
  double rho_exact = 0.0;
  double energy_exact = 0.0;
  double sr_lower_trace = 0.0;
  double sr_lower_m2 = 0.0;
  std::optional<double> sr_upper_km;            // absent at alpha = 1
  double energy_upper_km = 0.0;
  std::optional<double> energy_upper_rho_free;  // absent for n <= 1
  std::map<std::string, EqualityFlag> equality_flags;
};

/// Relative tolerance for the numeric side of the equality flags.
inline constexpr double kEqualityTol = 1e-6;

BoundReport make_bound_report(const Digraph& g, Alpha alpha);

std::string bound_report_to_json(const BoundReport& r);

/// Fixed column order: alpha,n,m,zagreb,c2,rho_exact,energy_exact,
/// sr_lower_trace,sr_lower_m2,sr_upper_km,energy_upper_km,
/// energy_upper_rho_free (empty cell when a bound is undefined).
std::string bound_report_csv_header();
std::string bound_report_to_csv_row(const BoundReport& r);

}  // namespace dgs
