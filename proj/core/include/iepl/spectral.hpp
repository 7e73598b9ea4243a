#pragma once

#include <Eigen/Dense>

#include <vector>

#include "iepl/graph.hpp"

namespace iepl {

/// Relative tolerance used for the symmetry gate and eigenvalue grouping.
inline constexpr double kDefaultSpectralTol = 1e-8;

/// Eigenvalues of a symmetric matrix, ascending, plus the relative
/// tolerance under which nearby values are considered one group.
struct Spectrum {
  Eigen::VectorXd values;       // ascending
  double tolerance = kDefaultSpectralTol;

  int size() const { return static_cast<int>(values.size()); }
  /// Absolute gap below which two consecutive eigenvalues merge:
  /// tolerance * max(1, spectral diameter).
  double grouping_threshold() const;
};

struct VarianceStats {
  double mean;      // average of the n-1 eigenvalues after dropping one zero
  double variance;  // average squared deviation over the same n-1 values
  double p2;        // sum of squared eigenvalues
};

/// Weighted Laplacian N diag(w) N^T assembled directly; w must have one
/// entry per edge, all >= 0 (strictly positive for a generalized
/// Laplacian; zeros are tolerated so closure points can be assembled).
Eigen::MatrixXd assemble_laplacian(const Graph& g, const Eigen::VectorXd& w);

/// Eigen-decompose a symmetric matrix (deterministic dense solver).
/// Throws std::invalid_argument when max|A - A^T| > tol * max(1, max|A|).
Spectrum spectrum_of(const Eigen::MatrixXd& a, double tol = kDefaultSpectralTol);

/// Ordered multiplicity list: sizes of the groups of eigenvalues whose
/// consecutive gaps are <= the grouping threshold.
std::vector<int> multiplicity_list(const Spectrum& s);

/// Mean / variance / power sum of the spectrum of an n x n Laplacian with
/// the zero eigenvalue dropped once (statistics over the other n-1).
VarianceStats variance_stats(const Spectrum& s);

/// Scale w so that the assembled Laplacian has trace 2m, i.e. w * (m / sum w).
Eigen::VectorXd normalize_trace(const Graph& g, const Eigen::VectorXd& w);

}  // namespace iepl
