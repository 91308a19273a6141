#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "digraph_spectra/alpha.hpp"
#include "digraph_spectra/digraph.hpp"

namespace dgs {

/// Dense A_alpha = alpha * Deg + (1 - alpha) * A, together with the digraph
/// statistics every bound consumes.
struct AlphaMatrix {
  Alpha alpha;
  Eigen::MatrixXd entries;
  Digraph source;
  int n = 0;
  int m = 0;
  long long zagreb = 0;
  long long c2 = 0;
};

AlphaMatrix build_alpha_matrix(const Digraph& g, Alpha alpha);

/// Complex eigenvalue multiset with the solver's backward-error bound.
/// Eigenvalues are sorted by (-|lambda|, -Re, -Im); values with
/// |Im| <= residual_tol are snapped to the real axis.
struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;
  double residual_tol = 0.0;
};

/// Full complex spectrum of a real nonsymmetric matrix via balanced
/// Hessenberg-QR (Eigen's real Schur path). Throws on iteration failure.
Spectrum eigenvalues(const AlphaMatrix& M);

double spectral_radius(const Spectrum& s);

/// Sum of |Re(lambda_i)|.
double low_energy(const Spectrum& s);

/// (trace(A_alpha), trace(A_alpha^2)), computed from the matrix entries.
std::pair<double, double> spectral_moments(const AlphaMatrix& M);

double frobenius_norm(const AlphaMatrix& M);

/// Default solver backward-error bound for an n x n matrix.
double default_residual_tol(int n, double frob_norm);

struct NormalityVerdict {
  bool algebraic = false;
  bool topological = false;
  double max_commutator_entry = 0.0;
  /// (u, u) marks a degree imbalance at u; (u, v) with u != v marks a failed
  /// common-neighbor condition.
  std::optional<std::pair<int, int>> witness;
};

/// Max-entry test of |A Aᵀ - Aᵀ A| against tol.
std::pair<bool, double> is_normal_algebraic(const AlphaMatrix& M, double tol);

/// Default commutator tolerance, 1e-9 * (1 + ||A||_F^2).
double default_normality_tol(double frob_norm);

/// Degree-balance plus pairwise common-neighbor criterion, valid for
/// alpha in [0, 1). Uses integer arithmetic when alpha is exact rational.
/// Also fills the algebraic verdict for cross-checking.
NormalityVerdict is_normal_topological(const Digraph& g, Alpha alpha);

std::string spectrum_to_json(const Spectrum& s);

}  // namespace dgs
