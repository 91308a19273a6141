#include "digraph_spectra/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dgs {

AlphaMatrix build_alpha_matrix(const Digraph& g, Alpha alpha) {
  AlphaMatrix M{alpha,      Eigen::MatrixXd::Zero(g.order(), g.order()),
                g,          g.order(),
                g.size(),   zagreb_index(g),
                closed_walks_2(g)};
  const double a = alpha.value();
  for (int u = 0; u < M.n; ++u) {
    M.entries(u, u) = a * static_cast<double>(g.out_neighbors(u).size());
    for (int v : g.out_neighbors(u)) M.entries(u, v) = 1.0 - a;
  }
  return M;
}

double default_residual_tol(int n, double frob_norm) {
  return 1e-9 * static_cast<double>(n) * frob_norm;
}

Spectrum eigenvalues(const AlphaMatrix& M) {
  if (M.n < 1) throw std::invalid_argument("eigenvalues: empty matrix");
  Spectrum s;
  s.residual_tol = default_residual_tol(M.n, frobenius_norm(M));

  Eigen::EigenSolver<Eigen::MatrixXd> solver(M.entries, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigensolver failed to converge on " << M.n << "x" << M.n
        << " matrix (alpha = " << M.alpha.value() << ", m = " << M.m << ")";
    throw std::runtime_error(msg.str());
  }

  // A repeated real root can come back as a conjugate pair split at the
  // sqrt(machine epsilon) scale, well past the backward-error bound, so the
  // snap threshold covers both regimes.
  const double snap_tol = std::max(
      s.residual_tol, std::sqrt(M.n * std::numeric_limits<double>::epsilon()) *
                          frobenius_norm(M));
  s.eigenvalues.reserve(M.n);
  for (int i = 0; i < M.n; ++i) {
    std::complex<double> lambda = solver.eigenvalues()[i];
    if (std::abs(lambda.imag()) <= snap_tol) lambda = {lambda.real(), 0.0};
    s.eigenvalues.push_back(lambda);
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              double ma = std::abs(a), mb = std::abs(b);
              if (ma != mb) return ma > mb;
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });
  return s;
}

double spectral_radius(const Spectrum& s) {
  if (s.eigenvalues.empty()) throw std::invalid_argument("spectral_radius: empty spectrum");
  double rho = 0.0;
  for (const auto& lambda : s.eigenvalues) rho = std::max(rho, std::abs(lambda));
  return rho;
}

double low_energy(const Spectrum& s) {
  if (s.eigenvalues.empty()) throw std::invalid_argument("low_energy: empty spectrum");
  double e = 0.0;
  for (const auto& lambda : s.eigenvalues) e += std::abs(lambda.real());
  return e;
}

std::pair<double, double> spectral_moments(const AlphaMatrix& M) {
  double m1 = M.entries.trace();
  double m2 = (M.entries * M.entries).trace();
  return {m1, m2};
}

double frobenius_norm(const AlphaMatrix& M) { return M.entries.norm(); }

std::pair<bool, double> is_normal_algebraic(const AlphaMatrix& M, double tol) {
  if (tol <= 0) throw std::invalid_argument("normality tolerance must be positive");
  Eigen::MatrixXd commutator =
      M.entries * M.entries.transpose() - M.entries.transpose() * M.entries;
  double max_entry = M.n > 0 ? commutator.cwiseAbs().maxCoeff() : 0.0;
  return {max_entry <= tol, max_entry};
}

double default_normality_tol(double frob_norm) { return 1e-9 * (1.0 + frob_norm * frob_norm); }

NormalityVerdict is_normal_topological(const Digraph& g, Alpha alpha) {
  if (alpha.is_one())
    throw std::invalid_argument("is_normal_topological requires alpha in [0, 1)");

  NormalityVerdict verdict;
  AlphaMatrix M = build_alpha_matrix(g, alpha);
  auto [alg, max_entry] = is_normal_algebraic(M, default_normality_tol(frobenius_norm(M)));
  verdict.algebraic = alg;
  verdict.max_commutator_entry = max_entry;

  const int n = g.order();
  DegreeProfile deg = degree_profile(g);
  for (int u = 0; u < n; ++u) {
    if (deg.out_degrees[u] != deg.in_degrees[u]) {
      verdict.topological = false;
      verdict.witness = {u, u};
      return verdict;
    }
  }

  // Pairwise condition: delta_uv = alpha/(1-alpha) * Delta_uv * sigma_uv.
  // With alpha = p/q exact this is the integer equation
  // delta * (q - p) = p * Delta * sigma.
  const bool exact = alpha.exact();
  const double a = alpha.value();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      auto [out_common, in_common] = common_neighbors(g, u, v);
      long long delta = out_common - in_common;
      long long big_delta = deg.out_degrees[u] - deg.out_degrees[v];
      long long sigma = (g.has_arc(u, v) ? 1 : 0) - (g.has_arc(v, u) ? 1 : 0);
      bool holds;
      if (exact) {
        holds = delta * (alpha.den() - alpha.num()) == alpha.num() * big_delta * sigma;
      } else {
        holds = std::abs(delta * (1.0 - a) - a * static_cast<double>(big_delta * sigma)) <= 1e-9;
      }
      if (!holds) {
        verdict.topological = false;
        verdict.witness = {u, v};
        return verdict;
      }
    }
  }
  verdict.topological = true;
  return verdict;
}

std::string spectrum_to_json(const Spectrum& s) {
  std::ostringstream out;
  out.precision(17);
  out << "{\"eigenvalues\": [";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    if (i) out << ", ";
    out << '[' << s.eigenvalues[i].real() << ", " << s.eigenvalues[i].imag() << ']';
  }
  out << "], \"residual_tol\": " << s.residual_tol << '}';
  return out.str();
}

}  // namespace dgs
