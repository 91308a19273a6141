#include "digraph_spectra/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dgs {

std::string bound_id_name(BoundId id) {
  switch (id) {
    case BoundId::SrLowerTrace: return "SR_LOWER_TRACE";
    case BoundId::SrLowerM2: return "SR_LOWER_M2";
    case BoundId::SrUpperKm: return "SR_UPPER_KM";
    case BoundId::EnergyKm: return "E_KM";
    case BoundId::EnergyRhoFree: return "E_RHO_FREE";
  }
  throw std::invalid_argument("unknown bound id");
}

std::optional<BoundId> bound_id_from_name(const std::string& name) {
  for (BoundId id : {BoundId::SrLowerTrace, BoundId::SrLowerM2, BoundId::SrUpperKm,
                     BoundId::EnergyKm, BoundId::EnergyRhoFree})
    if (bound_id_name(id) == name) return id;
  return std::nullopt;
}

namespace bounds {

namespace {

// Tiny negative radicands are eigensolver rounding; anything larger is misuse.
double clamp_radicand(double rad) {
  if (rad < -1e-9) throw std::domain_error("negative radicand: " + std::to_string(rad));
  return rad < 0.0 ? 0.0 : rad;
}

double t_value(long long Z, long long c2, int m, double alpha) {
  return alpha * alpha * static_cast<double>(Z) +
         (1.0 - alpha) * (1.0 - alpha) * static_cast<double>(m + c2) / 2.0;
}

}  // namespace

double sr_lower_trace(int n, int m, double alpha) {
  if (n < 1) throw std::invalid_argument("sr_lower_trace requires n >= 1");
  return alpha * static_cast<double>(m) / static_cast<double>(n);
}

double sr_lower_m2(int n, long long Z, long long c2, double alpha) {
  if (n < 1) throw std::invalid_argument("sr_lower_m2 requires n >= 1");
  double m2 = alpha * alpha * static_cast<double>(Z) +
              (1.0 - alpha) * (1.0 - alpha) * static_cast<double>(c2);
  return std::sqrt(m2 / static_cast<double>(n));
}

double sr_upper_km(int n, int m, long long Z, double alpha) {
  if (n < 1) throw std::invalid_argument("sr_upper_km requires n >= 1");
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("sr_upper_km requires alpha in [0, 1)");
  double am = alpha * static_cast<double>(m);
  double frob_sq = alpha * alpha * static_cast<double>(Z) +
                   (1.0 - alpha) * (1.0 - alpha) * static_cast<double>(m);
  double rad = clamp_radicand(static_cast<double>(n - 1) / n * (frob_sq - am * am / n));
  return am / n + std::sqrt(rad);
}

double energy_upper_km(int n, int m, long long Z, long long c2, double alpha, double rho) {
  if (n < 1) throw std::invalid_argument("energy_upper_km requires n >= 1");
  double T = t_value(Z, c2, m, alpha);
  double rad = clamp_radicand(static_cast<double>(n - 1) * (T - rho * rho));
  return rho + std::sqrt(rad);
}

double energy_upper_rho_free(int n, int m, long long Z, long long c2, double alpha) {
  if (n <= 1) throw std::invalid_argument("energy_upper_rho_free requires n > 1");
  return std::sqrt(static_cast<double>(n) * t_value(Z, c2, m, alpha));
}

double km_undirected(int nprime, int mprime, long long Z, double alpha, double rho) {
  if (nprime < 1) throw std::invalid_argument("km_undirected requires n' >= 1");
  double rad = clamp_radicand(static_cast<double>(nprime - 1) *
                              (alpha * alpha * static_cast<double>(Z) +
                               2.0 * (1.0 - alpha) * (1.0 - alpha) * mprime - rho * rho));
  return rho + std::sqrt(rad);
}

double mcclelland(int nprime, int mprime) {
  return std::sqrt(2.0 * static_cast<double>(nprime) * mprime);
}

double koolen_moulton_classic(int nprime, int mprime) {
  if (nprime < 1) throw std::invalid_argument("koolen_moulton_classic requires n' >= 1");
  double mean_deg = 2.0 * mprime / nprime;
  if (mean_deg < 1.0)
    throw std::invalid_argument("koolen_moulton_classic requires 2m'/n' >= 1");
  double rad = clamp_radicand(static_cast<double>(nprime - 1) *
                              (2.0 * mprime - mean_deg * mean_deg));
  return mean_deg + std::sqrt(rad);
}

}  // namespace bounds

namespace {

bool is_complete_symmetric(const Digraph& g) {
  long long n = g.order();
  return g.size() == n * (n - 1);
}

// K<->k together with n-k isolated vertices, k >= 2.
std::optional<int> complete_plus_isolated_core(const Digraph& g) {
  long long k = 0;
  for (int v = 0; v < g.order(); ++v)
    if (!g.out_neighbors(v).empty() || !g.in_neighbors(v).empty()) ++k;
  if (k < 2 || g.size() != k * (k - 1)) return std::nullopt;
  // All arc endpoints are non-isolated, so m = k(k-1) forces the induced
  // subdigraph on the k non-isolated vertices to be complete symmetric.
  return static_cast<int>(k);
}

bool every_component_is_digon(const Digraph& g) {
  if (g.order() == 0) return false;
  for (const auto& comp : strong_components(g))
    if (comp.size() != 2) return false;
  return true;
}

// Disjoint union of digons covering every vertex, no other arcs.
bool is_perfect_digon_union(const Digraph& g) {
  if (g.order() == 0 || g.order() % 2 != 0) return false;
  if (!is_symmetric(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.out_neighbors(v).size() != 1) return false;
  return true;
}

bool energy_km_spectral_predicate(const Digraph& g, Alpha alpha) {
  AlphaMatrix M = build_alpha_matrix(g, alpha);
  auto [normal, max_entry] = is_normal_algebraic(M, default_normality_tol(frobenius_norm(M)));
  (void)max_entry;
  if (!normal) return false;
  if (g.order() <= 1) return true;
  Spectrum s = eigenvalues(M);
  double rho = spectral_radius(s);
  double tol = kEqualityTol * std::max(1.0, rho);
  // Drop one Perron eigenvalue (real, modulus rho); remaining |Re| must agree.
  std::vector<double> abs_re;
  bool perron_dropped = false;
  for (const auto& lambda : s.eigenvalues) {
    if (!perron_dropped && lambda.imag() == 0.0 && std::abs(lambda.real() - rho) <= tol) {
      perron_dropped = true;
      continue;
    }
    abs_re.push_back(std::abs(lambda.real()));
  }
  if (!perron_dropped) return false;  // Perron eigenvalue missing: solver trouble
  for (double x : abs_re)
    if (std::abs(x - abs_re.front()) > tol) return false;
  return true;
}

bool numeric_equal(double bound, double exact) {
  return std::abs(bound - exact) <= kEqualityTol * std::max(1.0, std::abs(exact));
}

}  // namespace

bool equality_witness(const Digraph& g, Alpha alpha, BoundId id) {
  const bool zero = alpha.is_zero();
  const bool one = alpha.is_one();
  switch (id) {
    case BoundId::SrLowerTrace:
      if (zero) return is_dag(g);
      if (one) return is_out_regular(g);
      return g.size() == 0;
    case BoundId::SrLowerM2:
      if (zero) return is_dag(g) || every_component_is_digon(g);
      if (one) return is_out_regular(g);
      return g.size() == 0;
    case BoundId::SrUpperKm: {
      if (one) throw std::invalid_argument("SR_UPPER_KM is undefined at alpha = 1");
      if (g.size() == 0) return true;
      if (is_complete_symmetric(g)) return true;
      if (auto k = complete_plus_isolated_core(g); k && alpha.equals_unit_fraction(*k))
        return true;
      return false;
    }
    case BoundId::EnergyKm:
      return energy_km_spectral_predicate(g, alpha);
    case BoundId::EnergyRhoFree:
      if (g.order() <= 1)
        throw std::invalid_argument("E_RHO_FREE is undefined for n <= 1");
      if (zero) return g.size() == 0 || is_perfect_digon_union(g);
      if (one) return is_out_regular(g);
      return g.size() == 0;
  }
  throw std::invalid_argument("unknown bound id");
}

BoundReport make_bound_report(const Digraph& g, Alpha alpha) {
  if (g.order() < 1) throw std::invalid_argument("bound report requires n >= 1");
  BoundReport r;
  r.alpha = alpha.value();
  r.alpha_exact = alpha.exact();
  r.n = g.order();
  r.m = g.size();
  r.zagreb = zagreb_index(g);
  r.c2 = closed_walks_2(g);

  AlphaMatrix M = build_alpha_matrix(g, alpha);
  Spectrum s = eigenvalues(M);
  r.rho_exact = spectral_radius(s);
  r.energy_exact = low_energy(s);

  const double a = alpha.value();
  r.sr_lower_trace = bounds::sr_lower_trace(r.n, r.m, a);
  r.sr_lower_m2 = bounds::sr_lower_m2(r.n, r.zagreb, r.c2, a);
  if (!alpha.is_one()) r.sr_upper_km = bounds::sr_upper_km(r.n, r.m, r.zagreb, a);
  r.energy_upper_km = bounds::energy_upper_km(r.n, r.m, r.zagreb, r.c2, a, r.rho_exact);
  if (r.n > 1)
    r.energy_upper_rho_free = bounds::energy_upper_rho_free(r.n, r.m, r.zagreb, r.c2, a);

  // A nilpotent A_alpha has exact spectrum {0}, but QR reports eigenvalues at
  // the eps^(1/n) scale, far beyond kEqualityTol. Nonnegative matrices are
  // nilpotent iff their support digraph is acyclic: with alpha > 0 any arc
  // puts a loop on the support, so only alpha = 0 needs the DAG test.
  const bool zero_spectrum = alpha.is_zero() ? is_dag(g) : g.size() == 0;
  const double rho_for_flags = zero_spectrum ? 0.0 : r.rho_exact;
  const double energy_for_flags = zero_spectrum ? 0.0 : r.energy_exact;

  auto flag = [&](BoundId id, double bound, double exact) {
    r.equality_flags[bound_id_name(id)] = {numeric_equal(bound, exact),
                                           equality_witness(g, alpha, id)};
  };
  flag(BoundId::SrLowerTrace, r.sr_lower_trace, rho_for_flags);
  flag(BoundId::SrLowerM2, r.sr_lower_m2, rho_for_flags);
  if (r.sr_upper_km) flag(BoundId::SrUpperKm, *r.sr_upper_km, rho_for_flags);
  flag(BoundId::EnergyKm, r.energy_upper_km, energy_for_flags);
  if (r.energy_upper_rho_free)
    flag(BoundId::EnergyRhoFree, *r.energy_upper_rho_free, energy_for_flags);
  return r;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string bound_report_to_json(const BoundReport& r) {
  std::ostringstream out;
  out << "{\"alpha\": " << fmt(r.alpha) << ", \"alpha_exact\": " << (r.alpha_exact ? "true" : "false")
      << ", \"n\": " << r.n << ", \"m\": " << r.m << ", \"zagreb\": " << r.zagreb
      << ", \"c2\": " << r.c2 << ", \"rho_exact\": " << fmt(r.rho_exact)
      << ", \"energy_exact\": " << fmt(r.energy_exact)
      << ", \"sr_lower_trace\": " << fmt(r.sr_lower_trace)
      << ", \"sr_lower_m2\": " << fmt(r.sr_lower_m2) << ", \"sr_upper_km\": ";
  if (r.sr_upper_km)
    out << fmt(*r.sr_upper_km);
  else
    out << "null";
  out << ", \"energy_upper_km\": " << fmt(r.energy_upper_km) << ", \"energy_upper_rho_free\": ";
  if (r.energy_upper_rho_free)
    out << fmt(*r.energy_upper_rho_free);
  else
    out << "null";
  out << ", \"equality_flags\": {";
  bool first = true;
  for (const auto& [name, f] : r.equality_flags) {
    if (!first) out << ", ";
    first = false;
    out << '"' << name << "\": {\"numeric_equality\": " << (f.numeric_equality ? "true" : "false")
        << ", \"structural_match\": " << (f.structural_match ? "true" : "false") << '}';
  }
  out << "}}";
  return out.str();
}

std::string bound_report_csv_header() {
  return "alpha,n,m,zagreb,c2,rho_exact,energy_exact,sr_lower_trace,sr_lower_m2,"
         "sr_upper_km,energy_upper_km,energy_upper_rho_free";
}

std::string bound_report_to_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << fmt(r.alpha) << ',' << r.n << ',' << r.m << ',' << r.zagreb << ',' << r.c2 << ','
      << fmt(r.rho_exact) << ',' << fmt(r.energy_exact) << ',' << fmt(r.sr_lower_trace) << ','
      << fmt(r.sr_lower_m2) << ',';
  if (r.sr_upper_km) out << fmt(*r.sr_upper_km);
  out << ',' << fmt(r.energy_upper_km) << ',';
  if (r.energy_upper_rho_free) out << fmt(*r.energy_upper_rho_free);
  return out.str();
}

}  // namespace dgs
