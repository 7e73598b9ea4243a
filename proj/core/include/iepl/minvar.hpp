#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "iepl/graph.hpp"

namespace iepl {

/// min w^T M2 w over the scaled simplex {w >= 0, sum w = m}, where
/// M2 = 4I + B and B is the line-graph adjacency.  M2 is positive definite
/// (its eigenvalues are >= 2), so the minimizer is unique.
struct QPInstance {
  Eigen::MatrixXd m2;
  int edge_count = 0;

  static QPInstance from_graph(const Graph& g);
  bool incident(int i, int j) const { return m2(i, j) == 1.0; }
};

struct UnconstrainedMinimizer {
  Eigen::VectorXd weights;  // k M2^{-1} 1 with k = m / (1^T M2^{-1} 1)
  double objective;         // m^2 / (1^T M2^{-1} 1)
  bool eligible;            // M2^{-1} 1 entrywise positive
};

/// Minimizer of the quadratic over the affine slice only (drops w >= 0).
/// When it is eligible it is the constrained optimum as well.
UnconstrainedMinimizer unconstrained_minimizer(const QPInstance& qp);

enum class MinVarSolver { Exact, Descent };

struct MinVarResult {
  Eigen::VectorXd weights;   // sums to m
  std::vector<int> support;  // 0-based edge indices with weight > 1e-8
  double objective;          // w^T M2 w
  double variance;           // objective/(n-1) - (2m/(n-1))^2
  MinVarSolver solver = MinVarSolver::Exact;
  bool full_support_eligible = false;
  long iterations = 0;  // descent steps, or subsets tested by the scan
  bool converged = true;
  bool boundary = false;  // some weight is 0: infimum attained on the closure
  double eta_final = 0.0;
};

/// Average minimal variance m^2/((n-1) 1^T M2^{-1} 1) - (2m/(n-1))^2,
/// a lower bound for the true minimum (equal to it when eligible).
double amv(const Graph& g);

/// Closed form m(4+r)/(n-1) - (2m/(n-1))^2 when the line graph is
/// r-regular (deg u + deg v - 2 identical over all edges), else nullopt.
std::optional<double> closed_form_line_regular(const Graph& g);

/// Minimum variance over paths: determinant recurrence d0 = 1, d1 = 4,
/// d_{k+2} = 4 d_{k+1} - d_k, evaluated through ratios so any n works.
double path_mv_exact(int n);

/// Local-minimum test of a support (ascending 0-based edge indices):
/// M2[alpha]^{-1} 1 entrywise positive and M2(alpha] M2[alpha]^{-1} 1 >= 1
/// entrywise.  Returns the full-length weight vector (zeros off alpha)
/// scaled to sum m when both hold.
std::optional<Eigen::VectorXd> support_check(const QPInstance& qp,
                                             const std::vector<int>& alpha);

/// Exhaustive support enumeration: cardinality m down to 1, ascending
/// bitmask order within a cardinality, stopping at the first support that
/// passes.  Refuses m > exhaustive_limit.  Honors IEPL_THREADS.
MinVarResult minvar_exact(const Graph& g, int exhaustive_limit = 20);

struct DescentStep {
  double objective;  // before the step
  double eta;
};

struct DescentOptions {
  double tol = 1e-10;
  long max_iter = 1000000;
  /// Divide coordinate gaps by d^T M2 d (6 for incident pairs, 8 otherwise)
  /// instead of the uniform 8.
  bool exact_step = false;
  std::vector<DescentStep>* trace = nullptr;
};

/// Pairwise coordinate descent from the all-ones weighting: move mass from
/// the coordinate maximizing eta_j = min{((M2 w)_j - min_i (M2 w)_i)/8, w_j}
/// to the minimizing coordinate, until eta < tol.
MinVarResult minvar_descent(const Graph& g, const DescentOptions& opt = {});

/// The descent stationarity measure at a feasible point.
double eta(const QPInstance& qp, const Eigen::VectorXd& w);

/// Variance of the all-ones weighting: (2m + sum deg^2)/(n-1) - (2m/(n-1))^2.
double var_one(const Graph& g);

/// Degree-free upper bound (m/(n-1)) (n - 2m/(n-1)) for var_one.
double var_one_upper_bound(const Graph& g);

/// Every support that passes support_check, scan order (cardinality
/// descending, ascending bitmask), no short-circuit.  Exactly one exists.
std::vector<std::vector<int>> all_eligible_supports(const Graph& g,
                                                    int exhaustive_limit = 20);

}  // namespace iepl
