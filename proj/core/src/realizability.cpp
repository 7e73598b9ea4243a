#include "iepl/realizability.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace iepl {

namespace {

constexpr double kSignSlackRel = 1e-12;   // boundary slack for the star sign test
constexpr double kRootResidualRel = 1e-9; // accepted |f(-w)| after polishing
constexpr double kPatternTolRel = 1e-9;   // sign-pattern verification slack

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace

TargetSpectrum::TargetSpectrum(std::vector<double> vals) {
  if (vals.size() < 2) throw std::invalid_argument("target spectrum needs n >= 2");
  if (vals[0] != 0.0) throw std::invalid_argument("target spectrum must start with 0");
  for (std::size_t i = 1; i < vals.size(); ++i) {
    if (!(vals[i] > 0.0))
      throw std::invalid_argument("target eigenvalues after the 0 must be positive");
    if (vals[i] < vals[i - 1])
      throw std::invalid_argument("target spectrum must be ascending");
  }
  values = Eigen::Map<const Eigen::VectorXd>(vals.data(), vals.size());
}

TargetSpectrum::TargetSpectrum(const Eigen::VectorXd& vals)
    : TargetSpectrum(to_std(vals)) {}

TargetSpectrum TargetSpectrum::from_computed(const Eigen::VectorXd& vals,
                                             double tol) {
  if (vals.size() < 2) throw std::invalid_argument("target spectrum needs n >= 2");
  const double slack = tol * std::max(1.0, vals(vals.size() - 1));
  if (std::abs(vals(0)) > slack) {
    throw std::invalid_argument("leading eigenvalue is not close enough to 0");
  }
  std::vector<double> snapped = to_std(vals);
  snapped[0] = 0.0;
  return TargetSpectrum(std::move(snapped));
}

std::vector<double> elementary_symmetric(const std::vector<double>& vals) {
  std::vector<double> sigma(vals.size() + 1, 0.0);
  sigma[0] = 1.0;
  std::size_t used = 0;
  for (double v : vals) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) sigma[k] += v * sigma[k - 1];
  }
  return sigma;
}

double StarPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

double StarPolynomial::derivative(double x) const {
  const int d = static_cast<int>(coeffs.size()) - 1;
  double acc = 0.0;
  for (int k = 0; k < d; ++k) acc = acc * x + coeffs[k] * (d - k);
  return acc;
}

double StarPolynomial::coeff_norm() const {
  double m = 0.0;
  for (double c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

StarPolynomial star_polynomial(const TargetSpectrum& t) {
  std::vector<double> tail(t.values.data() + 1, t.values.data() + t.n());
  const auto sigma = elementary_symmetric(tail);
  StarPolynomial f;
  f.coeffs.resize(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) f.coeffs[k] = sigma[k] / (k + 1);
  return f;
}

bool check_star(const TargetSpectrum& t) {
  const auto f = star_polynomial(t);
  const double slack = kSignSlackRel * f.coeff_norm();
  for (int k = 2; k <= t.n() - 1; ++k) {
    const double val = f(-t.values(k - 1));
    const double signed_val = (k % 2 == 0) ? val : -val;
    if (signed_val > slack) return false;
  }
  return true;
}

namespace {

// Gauss-Newton on the eigenvalue map w -> spectrum(L(w)): near-coincident
// weights leave companion roots noise-limited around 1e-8, but the spectrum
// itself is a well-behaved target.  dlambda_j/dw_e = (v_j(u) - v_j(v))^2.
double refine_weights_to_target(const Graph& g, const TargetSpectrum& t,
                                Eigen::VectorXd& w, double err) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  for (int pass = 0; pass < 3; ++pass) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(assemble_laplacian(g, w));
    if (es.info() != Eigen::Success) break;
    Eigen::MatrixXd jac(n, m);
    for (int e = 0; e < m; ++e) {
      const auto& edge = g.edges()[e];
      for (int j = 0; j < n; ++j) {
        const double diff = es.eigenvectors()(edge.u, j) - es.eigenvectors()(edge.v, j);
        jac(j, e) = diff * diff;
      }
    }
    const Eigen::VectorXd rho = es.eigenvalues() - t.values;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    Eigen::VectorXd delta = svd.solve(rho);
    Eigen::VectorXd cand = w - delta;
    int halvings = 0;
    while ((cand.array() <= 0.0).any() && halvings++ < 20) {
      delta *= 0.5;
      cand = w - delta;
    }
    if ((cand.array() <= 0.0).any()) break;
    const Eigen::VectorXd achieved =
        spectrum_of(assemble_laplacian(g, cand)).values;
    const double cand_err = (achieved - t.values).cwiseAbs().maxCoeff();
    if (cand_err >= err) break;
    w = cand;
    err = cand_err;
    if (err <= 1e-13 * std::max(1.0, t.values(n - 1))) break;
  }
  return err;
}

}  // namespace

RealizationWitness realize_star(const TargetSpectrum& t) {
  if (!check_star(t))
    throw NotRealizableError("spectrum fails the star sign conditions");
  const auto f = star_polynomial(t);
  const int d = t.n() - 1;
  const Graph star = Graph::star(t.n());

  if (d == 1) {
    Eigen::VectorXd w(1);
    w(0) = t.values(1) / 2.0;
    RealizationWitness out{star, w, Eigen::MatrixXd(), Spectrum{}};
    out.matrix = assemble_laplacian(star, w);
    out.achieved = spectrum_of(out.matrix);
    return out;
  }

  // companion matrix of the monic polynomial
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -f.coeffs[d - i];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  if (es.info() != Eigen::Success) throw NumericalError("companion eigensolve failed");

  std::vector<std::complex<double>> roots(es.eigenvalues().data(),
                                          es.eigenvalues().data() + d);
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r));

  // A k-fold root comes back from the companion eigensolve as a cluster of
  // width ~eps^(1/k), but the cluster centroid cancels the spread.  The
  // right cluster radius is not known in advance, so try increasingly
  // coarse groupings and keep whichever reproduces the target best.
  const double allowed = kRootResidualRel * f.coeff_norm();
  Eigen::VectorXd best_w;
  Spectrum best_spec;
  double best_err = std::numeric_limits<double>::infinity();
  for (double tol : {1e-7, 1e-5, 1e-3, 1e-2}) {
    const double radius = tol * scale;
    Eigen::VectorXd w(d);
    int filled = 0;
    bool ok = true;
    for (int i = 0; i < d && ok;) {
      int j = i + 1;
      while (j < d && std::abs(roots[j] - roots[j - 1]) <= radius) ++j;
      std::complex<double> mean = 0.0;
      for (int k = i; k < j; ++k) mean += roots[k];
      mean /= static_cast<double>(j - i);
      if (std::abs(mean.imag()) > 1e-6 * scale) {
        ok = false;
        break;
      }
      // one Newton polish, aware of the cluster's multiplicity; at the
      // coefficient-noise floor f/f' is meaningless, so keep the step only
      // when it actually reduces the residual
      double r = mean.real();
      const double fp = f.derivative(r);
      if (fp != 0.0) {
        const double step = (j - i) * f(r) / fp;
        if (std::abs(step) <= 0.1 * (1.0 + std::abs(r)) &&
            std::abs(f(r - step)) < std::abs(f(r))) {
          r -= step;
        }
      }
      if (!(r < 0.0) || std::abs(f(r)) > allowed) {
        ok = false;
        break;
      }
      for (int k = i; k < j; ++k) w(filled++) = -r;
      i = j;
    }
    if (!ok) continue;
    std::sort(w.data(), w.data() + d);

    const Eigen::MatrixXd lap = assemble_laplacian(star, w);
    const Spectrum spec = spectrum_of(lap);
    const double err = (spec.values - t.values).cwiseAbs().maxCoeff();
    if (err < best_err) {
      best_err = err;
      best_w = w;
      best_spec = spec;
    }
    if (err <= 1e-12 * std::max(1.0, t.values(d))) break;
  }
  if (best_w.size() == d && best_err > 1e-12 * std::max(1.0, t.values(d))) {
    best_err = refine_weights_to_target(star, t, best_w, best_err);
    best_spec = spectrum_of(assemble_laplacian(star, best_w));
  }
  if (!(best_err <= 1e-8 * std::max(1.0, t.values(d)))) {
    throw NumericalError("star root extraction failed to reproduce the target");
  }

  RealizationWitness out{star, best_w, Eigen::MatrixXd(), Spectrum{}};
  out.matrix = assemble_laplacian(star, best_w);
  out.achieved = std::move(best_spec);
  return out;
}

RealizationWitness realize_p3(const TargetSpectrum& t) {
  if (t.n() != 3) throw std::invalid_argument("realize_p3 needs a 3-point spectrum");
  const double l2 = t.values(1), l3 = t.values(2);
  const double sum = (l2 + l3) / 2.0;   // a + b
  const double prod = l2 * l3 / 3.0;    // a b
  double disc = sum * sum - 4.0 * prod;
  if (disc < -kSignSlackRel * std::max(1.0, sum * sum))
    throw NotRealizableError("path on 3 vertices needs lambda3 >= 3 lambda2");
  disc = std::max(disc, 0.0);
  const double root = std::sqrt(disc);
  Eigen::VectorXd w(2);
  w << (sum - root) / 2.0, (sum + root) / 2.0;

  RealizationWitness out{Graph::path(3), w, Eigen::MatrixXd(), Spectrum{}};
  out.matrix = assemble_laplacian(out.graph, out.weights);
  out.achieved = spectrum_of(out.matrix);
  return out;
}

Eigen::MatrixXd join_construct(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                               double rho) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("join blocks must be square");
  if (!(rho > 0.0)) throw std::invalid_argument("join needs rho > 0");
  const int p = static_cast<int>(a.rows()), q = static_cast<int>(b.rows());
  for (const auto* blk : {&a, &b}) {
    const double scale = std::max(1.0, blk->cwiseAbs().maxCoeff());
    for (int i = 0; i < blk->rows(); ++i) {
      if (std::abs(blk->row(i).sum()) > 1e-9 * scale)
        throw std::invalid_argument("join blocks must have zero row sums");
      for (int j = 0; j < blk->cols(); ++j)
        if (i != j && (*blk)(i, j) > kSignSlackRel * scale)
          throw std::invalid_argument("join blocks must have nonpositive off-diagonals");
    }
  }
  Eigen::MatrixXd m(p + q, p + q);
  m.topLeftCorner(p, p) = a + rho * q * Eigen::MatrixXd::Identity(p, p);
  m.bottomRightCorner(q, q) = b + rho * p * Eigen::MatrixXd::Identity(q, q);
  m.topRightCorner(p, q).setConstant(-rho);
  m.bottomLeftCorner(q, p).setConstant(-rho);
  return m;
}

namespace {

Eigen::MatrixXd kn_matrix(const Eigen::VectorXd& lam) {
  const int n = static_cast<int>(lam.size());
  if (n == 2) {
    const double a = lam(1) / 2.0;
    Eigen::MatrixXd m(2, 2);
    m << a, -a, -a, a;
    return m;
  }
  const double rho = lam(1) / n;
  Eigen::VectorXd sub(n - 1);
  sub(0) = 0.0;
  for (int i = 2; i < n; ++i) sub(i - 1) = lam(i) - rho;
  const Eigen::MatrixXd a = kn_matrix(sub);
  return join_construct(a, Eigen::MatrixXd::Zero(1, 1), rho);
}

}  // namespace

RealizationWitness realize_kn(const TargetSpectrum& t) {
  const Eigen::MatrixXd m = kn_matrix(t.values);
  Graph g = Graph::complete(t.n());
  Eigen::VectorXd w(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [i, j] = g.edges()[e];
    w(e) = -m(i, j);
    if (!(w(e) > 0.0)) throw NumericalError("join recursion produced a nonpositive weight");
  }
  RealizationWitness out{std::move(g), std::move(w), m, spectrum_of(m)};
  return out;
}

std::optional<ThreeDistinctFamily> three_distinct_family(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !g.is_connected()) return std::nullopt;
  auto deg = g.degrees();
  std::sort(deg.begin(), deg.end());
  const bool complete = deg.front() == n - 1;
  if (complete) return ThreeDistinctFamily::Complete;
  if (n >= 4 && deg[n - 1] == n - 1 && deg[n - 2] == 1)
    return ThreeDistinctFamily::Star;
  if (n == 4) {
    if (deg == std::vector<int>{1, 2, 2, 3}) return ThreeDistinctFamily::Paw;
    if (deg == std::vector<int>{2, 2, 2, 2}) return ThreeDistinctFamily::C4;
    if (deg == std::vector<int>{2, 2, 3, 3}) return ThreeDistinctFamily::K4MinusE;
  }
  return std::nullopt;
}

namespace {

struct ThreeDistinctContext {
  ThreeDistinctFamily family;
  double lambda, mu, ratio;  // ratio = mu / lambda
};

ThreeDistinctContext three_distinct_context(const Graph& g, double lambda, double mu) {
  if (!(lambda > 0.0) || !(mu > 0.0))
    throw std::invalid_argument("three-distinct spectra need lambda, mu > 0");
  if (lambda == mu)
    throw std::invalid_argument("three-distinct spectra need lambda != mu");
  const auto fam = three_distinct_family(g);
  if (!fam)
    throw UnsupportedFamilyError(
        "three-distinct-eigenvalue realizability is only characterized for "
        "complete graphs, stars and the 4-vertex paw / C4 / K4-e");
  return {*fam, lambda, mu, mu / lambda};
}

bool three_distinct_admissible(const ThreeDistinctContext& c) {
  const double sqrt3 = std::numbers::sqrt3;
  switch (c.family) {
    case ThreeDistinctFamily::Complete:
      return true;
    case ThreeDistinctFamily::Star:
      // only lambda * L(K_{1,n-1}) and its scalings: mu must equal n*lambda
      return false;  // handled separately, needs n
    case ThreeDistinctFamily::Paw:
      return c.ratio >= 2.0 + sqrt3 || c.ratio <= 2.0 - sqrt3;
    case ThreeDistinctFamily::C4:
      return c.ratio >= 2.0;
    case ThreeDistinctFamily::K4MinusE:
      return c.ratio > 2.0 || c.ratio <= 0.5;
  }
  return false;
}

/// Distribute the unit vector u over the vertices of the 4-vertex families
/// by role, so any isomorphic labeling works.
Eigen::Vector4d place_u(const Graph& g, ThreeDistinctFamily fam, double x, double y,
                        double z, double w) {
  Eigen::Vector4d u;
  const auto deg = g.degrees();
  if (fam == ThreeDistinctFamily::Paw) {
    // x, y on the two triangle vertices (degree 2), z on the leaf, w on the hub
    std::vector<int> two;
    int leaf = -1, hub = -1;
    for (int v = 0; v < 4; ++v) {
      if (deg[v] == 2) two.push_back(v);
      else if (deg[v] == 1) leaf = v;
      else hub = v;
    }
    u(two[0]) = x;
    u(two[1]) = y;
    u(leaf) = z;
    u(hub) = w;
  } else if (fam == ThreeDistinctFamily::C4) {
    // x, y on one diagonal (vertex 0 and its non-neighbour), z, w opposite
    int mate = -1;
    for (int v = 1; v < 4; ++v)
      if (!g.has_edge(0, v)) mate = v;
    std::vector<int> rest;
    for (int v = 1; v < 4; ++v)
      if (v != mate) rest.push_back(v);
    u(0) = x;
    u(mate) = y;
    u(rest[0]) = z;
    u(rest[1]) = w;
  } else {  // K4 minus an edge: x, y on the degree-2 pair, z, w on the degree-3 pair
    std::vector<int> two, three;
    for (int v = 0; v < 4; ++v) (deg[v] == 2 ? two : three).push_back(v);
    u(two[0]) = x;
    u(two[1]) = y;
    u(three[0]) = z;
    u(three[1]) = w;
  }
  return u;
}

Eigen::Vector4d three_distinct_u(const Graph& g, const ThreeDistinctContext& c) {
  const double sqrt3 = std::numbers::sqrt3;
  const double sqrt2 = std::numbers::sqrt2;
  const double sqrt6 = std::sqrt(6.0);
  const double gg = c.ratio - 1.0;  // the rank-one gap factor, in (-1,0) or (0,inf)

  auto solved = [](std::optional<std::pair<double, double>> r) {
    if (!r) throw NumericalError("quadratic system unsolvable in admissible range");
    return *r;
  };

  switch (c.family) {
    case ThreeDistinctFamily::Paw: {
      if (gg > 0.0) {
        const auto [lo, hi] = solved(solve_quadratic_system(1.0 - 1.0 / gg, sqrt3 / (2.0 * gg)));
        const double x = lo / sqrt6, z = hi / sqrt2;  // sqrt6 x <= sqrt2 z
        return place_u(g, c.family, x, x, z, -(2.0 * x + z));
      }
      const auto [lo, hi] = solved(solve_quadratic_system(1.0 - 1.0 / gg, -sqrt3 / (2.0 * gg)));
      const double x = lo / sqrt6, z = -hi / sqrt2;
      return place_u(g, c.family, x, x, z, -(2.0 * x + z));
    }
    case ThreeDistinctFamily::C4: {
      const auto [lo, hi] = solved(solve_quadratic_system(0.5, 1.0 / (4.0 * gg)));
      return place_u(g, c.family, hi, lo, -hi, -lo);
    }
    case ThreeDistinctFamily::K4MinusE: {
      if (gg > 1.0) {
        const double eps = std::min((0.5 - 1.0 / (2.0 * gg)) / 2.0, 1.0 / (8.0 * gg));
        const auto [y, x] = solved(solve_quadratic_system(0.5 - eps, 1.0 / (4.0 * gg)));
        const auto [mw, mz] = solved(solve_quadratic_system(0.5 + eps, 1.0 / (4.0 * gg) - eps));
        return place_u(g, c.family, x, y, -mz, -mw);
      }
      // -1 < gg <= -1/2
      const double eps = 1.0 / (6.0 * gg) - 1.0 / 6.0;
      const double val = std::max(0.0, 1.0 / (12.0 * gg) + 1.0 / 6.0);
      const double zw = -std::sqrt(val);
      const auto [lo, hi] = solved(solve_quadratic_system(0.5 - eps, -1.0 / (4.0 * gg)));
      return place_u(g, c.family, hi, -lo, zw, zw);  // x >= -y
    }
    default:
      throw std::logic_error("three_distinct_u called off the 4-vertex families");
  }
}

}  // namespace

bool check_three_distinct(const Graph& g, double lambda, double mu) {
  const auto c = three_distinct_context(g, lambda, mu);
  if (c.family == ThreeDistinctFamily::Star) {
    const double target = g.vertex_count() * lambda;
    return std::abs(mu - target) <= kSignSlackRel * std::max(mu, target);
  }
  return three_distinct_admissible(c);
}

RealizationWitness realize_three_distinct(const Graph& g, double lambda, double mu) {
  const auto c = three_distinct_context(g, lambda, mu);
  const int n = g.vertex_count();

  if (c.family == ThreeDistinctFamily::Star) {
    if (!check_three_distinct(g, lambda, mu))
      throw NotRealizableError("a star spectrum {0, lambda^(n-2), mu} needs mu = n lambda");
    RealizationWitness out{g, Eigen::VectorXd::Constant(g.edge_count(), lambda),
                           Eigen::MatrixXd(), Spectrum{}};
    out.matrix = lambda * g.combinatorial_laplacian();
    out.achieved = spectrum_of(out.matrix);
    return out;
  }
  if (c.family == ThreeDistinctFamily::Complete) {
    std::vector<double> vals{0.0, mu};
    vals.insert(vals.end(), n - 2, lambda);
    std::sort(vals.begin(), vals.end());
    return realize_kn(TargetSpectrum(vals));
  }
  if (!three_distinct_admissible(c))
    throw NotRealizableError("(lambda, mu) is outside the admissible region of this family");

  const double gg = c.ratio - 1.0;
  const Eigen::Vector4d u = three_distinct_u(g, c);
  Eigen::MatrixXd a =
      lambda * (Eigen::MatrixXd::Identity(4, 4) - Eigen::MatrixXd::Constant(4, 4, 0.25) +
                gg * (u * u.transpose()));

  // internal consistency: verify the sign pattern before returning
  const double tol = kPatternTolRel * lambda * std::max(1.0, std::abs(gg));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (g.has_edge(i, j)) {
        if (a(i, j) > tol) throw NumericalError("edge entry failed to come out negative");
      } else if (std::abs(a(i, j)) > tol) {
        throw NumericalError("non-edge entry failed to vanish");
      }
    }

  Eigen::VectorXd w(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [i, j] = g.edges()[e];
    w(e) = std::max(0.0, -a(i, j));
  }
  RealizationWitness out{g, std::move(w), std::move(a), Spectrum{}};
  out.achieved = spectrum_of(out.matrix);
  return out;
}

bool check_quadratic_system(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("quadratic system needs alpha, beta > 0");
  return alpha >= 2.0 * beta;
}

std::optional<std::pair<double, double>> solve_quadratic_system(double alpha,
                                                                double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("quadratic system needs alpha, beta > 0");
  double disc = alpha - 2.0 * beta;
  if (disc < -kSignSlackRel * std::max(1.0, alpha)) return std::nullopt;
  disc = std::max(disc, 0.0);
  const double s = std::sqrt(alpha + 2.0 * beta);
  const double d = std::sqrt(disc);
  return std::make_pair((s - d) / 2.0, (s + d) / 2.0);
}

}  // namespace iepl
