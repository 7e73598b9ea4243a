#include "iepl/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>

namespace iepl {

double Spectrum::grouping_threshold() const {
  if (values.size() == 0) return tolerance;
  const double diam = values(values.size() - 1) - values(0);
  return tolerance * std::max(1.0, diam);
}

Eigen::MatrixXd assemble_laplacian(const Graph& g, const Eigen::VectorXd& w) {
  if (w.size() != g.edge_count())
    throw std::invalid_argument("weight vector length must equal the edge count");
  const int n = g.vertex_count();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (int e = 0; e < g.edge_count(); ++e) {
    const double we = w(e);
    if (we < 0.0) throw std::invalid_argument("edge weights must be nonnegative");
    const auto& [u, v] = g.edges()[e];
    L(u, u) += we;
    L(v, v) += we;
    L(u, v) -= we;
    L(v, u) -= we;
  }
  return L;
}

Spectrum spectrum_of(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol * scale)
    throw std::invalid_argument("matrix is not symmetric within tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigen decomposition failed");
  Spectrum s;
  s.values = es.eigenvalues();  // ascending
  s.tolerance = tol;
  return s;
}

std::vector<int> multiplicity_list(const Spectrum& s) {
  std::vector<int> groups;
  const int n = s.size();
  if (n == 0) return groups;
  const double thr = s.grouping_threshold();
  groups.push_back(1);
  for (int i = 1; i < n; ++i) {
    if (s.values(i) - s.values(i - 1) <= thr)
      ++groups.back();
    else
      groups.push_back(1);
  }
  return groups;
}

VarianceStats variance_stats(const Spectrum& s) {
  const int n = s.size();
  if (n < 2) throw std::invalid_argument("variance needs at least a 2x2 spectrum");
  // Drop the smallest eigenvalue (the structural zero of a connected
  // Laplacian) and average over the remaining n-1.
  const auto tail = s.values.tail(n - 1);
  const double mean = tail.sum() / (n - 1);
  const double variance = (tail.array() - mean).square().sum() / (n - 1);
  VarianceStats out;
  out.mean = mean;
  out.variance = variance;
  out.p2 = s.values.array().square().sum();
  return out;
}

Eigen::VectorXd normalize_trace(const Graph& g, const Eigen::VectorXd& w) {
  if (w.size() != g.edge_count())
    throw std::invalid_argument("weight vector length must equal the edge count");
  const double total = w.sum();
  if (!(total > 0.0)) throw std::invalid_argument("weights must have positive sum");
  // multiply before dividing: a single weight then normalizes to exactly 1
  return (w * static_cast<double>(g.edge_count())) / total;
}

}  // namespace iepl
