#pragma once

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

#include "iepl/errors.hpp"
#include "iepl/graph.hpp"
#include "iepl/spectral.hpp"

namespace iepl {

/// Candidate spectrum {0, l2, ..., ln}: first entry exactly 0, the rest
/// strictly positive and ascending.  Throws std::invalid_argument otherwise.
struct TargetSpectrum {
  explicit TargetSpectrum(std::vector<double> vals);
  explicit TargetSpectrum(const Eigen::VectorXd& vals);

  /// Adopts a numerically computed spectrum: the leading eigenvalue may sit
  /// within tol * max(1, lambda_n) of zero and is snapped to exactly 0.
  static TargetSpectrum from_computed(const Eigen::VectorXd& vals,
                                      double tol = 1e-8);

  Eigen::VectorXd values;  // ascending, values(0) == 0
  int n() const { return static_cast<int>(values.size()); }
};

/// A constructive answer: graph, positive edge weights, the assembled
/// generalized Laplacian and its recomputed spectrum.
struct RealizationWitness {
  Graph graph;
  Eigen::VectorXd weights;
  Eigen::MatrixXd matrix;
  Spectrum achieved;
};

/// sigma_0..sigma_k of the given values (one-pass product recurrence).
std::vector<double> elementary_symmetric(const std::vector<double>& vals);

/// Monic polynomial f(x) = sum_k s_k x^{n-1-k} with s_k = sigma_k / (k+1),
/// where sigma_k are the elementary symmetric functions of l2..ln.  Its
/// negated roots are exactly the star weights realizing the target.
struct StarPolynomial {
  std::vector<double> coeffs;  // s_0 = 1 first
  double operator()(double x) const;
  double derivative(double x) const;
  double coeff_norm() const;  // max |s_k|
};

StarPolynomial star_polynomial(const TargetSpectrum& t);

/// Star realizability sign test: (-1)^k f(-l_k) <= 0 for k = 2..n-1,
/// evaluated with absolute slack 1e-12 * max|s_k| so that boundary
/// targets pass.  Vacuously true for n = 2.
bool check_star(const TargetSpectrum& t);

/// Weights of K_{1,n-1} realizing the target: negated roots of the star
/// polynomial (companion-matrix eigenvalues, root clusters collapsed to
/// their centroid, one multiplicity-aware Newton polish, then a refinement
/// of the weights against the target spectrum).  Throws NotRealizableError
/// when the sign test fails, NumericalError when the assembled spectrum
/// misses the target by more than 1e-8 * max(1, lambda_n).
RealizationWitness realize_star(const TargetSpectrum& t);

/// Path on three vertices: weights a <= b with a+b = (l2+l3)/2 and
/// ab = l2 l3 / 3; requires l3 >= 3 l2.
RealizationWitness realize_p3(const TargetSpectrum& t);

/// Join step: given Laplacian-like matrices A (p x p) and B (q x q) and
/// rho > 0, returns [[A + rho q I, -rho J],[-rho J^T, B + rho p I]].
Eigen::MatrixXd join_construct(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                               double rho);

/// Complete graph: any target realizes; recursive join construction with
/// rho = l2/n at each level.
RealizationWitness realize_kn(const TargetSpectrum& t);

enum class ThreeDistinctFamily { Star, Complete, Paw, C4, K4MinusE };

/// Recognize the graph families for which spectra with three distinct
/// eigenvalues are fully characterized (by degree sequence, so any
/// isomorphic labeling is accepted).  Stars need n >= 4 here.
std::optional<ThreeDistinctFamily> three_distinct_family(const Graph& g);

/// Is {0, lambda^(n-2), mu} attainable on g?  lambda is the repeated
/// eigenvalue whether or not lambda < mu; requires lambda, mu > 0 and
/// lambda != mu.  Throws UnsupportedFamilyError off the solved families.
bool check_three_distinct(const Graph& g, double lambda, double mu);

/// Constructive counterpart: rank-one perturbation A = lambda (I - J/n
/// + g uu^T) with g = (mu - lambda)/lambda for the 4-vertex families,
/// lambda * L for stars, the join recursion for complete graphs.
RealizationWitness realize_three_distinct(const Graph& g, double lambda, double mu);

/// Does p^2 + q^2 = alpha, pq = beta admit a solution with p, q > 0?
/// Requires alpha, beta > 0; the answer is alpha >= 2 beta.
bool check_quadratic_system(double alpha, double beta);

/// The solution pair (lo, hi) with lo <= hi, lo hi = beta, lo^2 + hi^2 =
/// alpha; nullopt when alpha < 2 beta beyond rounding slack.
std::optional<std::pair<double, double>> solve_quadratic_system(double alpha,
                                                                double beta);

}  // namespace iepl
