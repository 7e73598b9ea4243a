#include "iepl/minvar.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "iepl/errors.hpp"

namespace iepl {

namespace {

constexpr double kEligibilityFloor = 1e-12;  // relative positivity cutoff
constexpr double kSupportTol = 1e-8;         // weight -> support membership

void require_connected(const Graph& g, const char* what) {
  if (!g.is_connected()) {
    throw std::invalid_argument(std::string(what) +
                                " requires a connected graph");
  }
}

double slice_variance(int n, int m, double objective) {
  const double mean = 2.0 * m / (n - 1);
  return objective / (n - 1) - mean * mean;
}

std::vector<int> support_of(const Eigen::VectorXd& w) {
  std::vector<int> s;
  for (int i = 0; i < w.size(); ++i) {
    if (w(i) > kSupportTol) s.push_back(i);
  }
  return s;
}

int worker_count() {
  if (const char* env = std::getenv("IEPL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(std::min(v, 64L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<std::vector<uint64_t>> binomial_table(int m) {
  std::vector<std::vector<uint64_t>> c(m + 1, std::vector<uint64_t>(m + 1, 0));
  for (int i = 0; i <= m; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j) {
      c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
  }
  return c;
}

// Next bitmask with the same popcount, ascending numeric order.
uint64_t gosper_next(uint64_t mask) {
  const uint64_t u = mask & (~mask + 1);
  const uint64_t v = mask + u;
  return v | (((v ^ mask) / u) >> 2);
}

// Rank-th (0-based) mask with popcount c over m bits, ascending numeric
// order: pick the highest bit h as the largest with C(h, c) <= rank.
uint64_t unrank_mask(uint64_t rank, int c,
                     const std::vector<std::vector<uint64_t>>& binom) {
  uint64_t mask = 0;
  int h = static_cast<int>(binom.size()) - 1;
  while (c > 0) {
    while (binom[h][c] > rank) --h;
    mask |= uint64_t{1} << h;
    rank -= binom[h][c];
    --c;
  }
  return mask;
}

std::vector<int> mask_to_indices(uint64_t mask) {
  std::vector<int> idx;
  for (int b = 0; mask >> b; ++b) {
    if (mask >> b & 1) idx.push_back(b);
  }
  return idx;
}

}  // namespace

QPInstance QPInstance::from_graph(const Graph& g) {
  QPInstance qp;
  qp.m2 = g.m2_matrix();
  qp.edge_count = g.edge_count();
  return qp;
}

UnconstrainedMinimizer unconstrained_minimizer(const QPInstance& qp) {
  const int m = qp.edge_count;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(m);
  Eigen::LLT<Eigen::MatrixXd> llt(qp.m2);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("pairwise-overlap matrix is not positive definite");
  }
  const Eigen::VectorXd y = llt.solve(ones);
  const double s = y.sum();
  const double floor = kEligibilityFloor * std::max(1.0, y.lpNorm<Eigen::Infinity>());

  UnconstrainedMinimizer result;
  result.eligible = (y.array() > floor).all();
  result.weights = (m / s) * y;
  result.objective = static_cast<double>(m) * m / s;
  return result;
}

double amv(const Graph& g) {
  require_connected(g, "amv");
  const auto um = unconstrained_minimizer(QPInstance::from_graph(g));
  return slice_variance(g.vertex_count(), g.edge_count(), um.objective);
}

std::optional<double> closed_form_line_regular(const Graph& g) {
  require_connected(g, "closed_form_line_regular");
  const auto deg = g.degrees();
  const auto& edges = g.edges();
  const int r = deg[edges[0].u] + deg[edges[0].v] - 2;
  for (const auto& e : edges) {
    if (deg[e.u] + deg[e.v] - 2 != r) return std::nullopt;
  }
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const double mean = 2.0 * m / (n - 1);
  return static_cast<double>(m) * (4 + r) / (n - 1) - mean * mean;
}

double path_mv_exact(int n) {
  if (n < 2) throw std::invalid_argument("path needs at least 2 vertices");
  const int m = n - 1;
  // S = 1^T M2^{-1} 1 via the tridiagonal determinants d_0 = 1, d_1 = 4,
  // d_{k+2} = 4 d_{k+1} - d_k, carried as ratios r_k = d_{k-1}/d_k and
  // inverses 1/d_k so large n cannot overflow:
  //   S = m/6 + 1/18 + r_m/18 + (-1)^{m-1} inv_m / 18.
  double ratio = 0.25;
  double inv = 0.25;
  for (int k = 2; k <= m; ++k) {
    ratio = 1.0 / (4.0 - ratio);
    inv *= ratio;
  }
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  const double s = m / 6.0 + (1.0 + ratio + sign * inv) / 18.0;
  return m / s - 4.0;
}

std::optional<Eigen::VectorXd> support_check(const QPInstance& qp,
                                             const std::vector<int>& alpha) {
  const int m = qp.edge_count;
  const int k = static_cast<int>(alpha.size());
  if (k == 0) throw std::invalid_argument("support must be nonempty");
  for (int i = 0; i < k; ++i) {
    if (alpha[i] < 0 || alpha[i] >= m) {
      throw std::invalid_argument("support index out of range");
    }
    if (i > 0 && alpha[i] <= alpha[i - 1]) {
      throw std::invalid_argument("support indices must be strictly ascending");
    }
  }

  Eigen::MatrixXd sub(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) sub(i, j) = qp.m2(alpha[i], alpha[j]);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(sub);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("principal submatrix is not positive definite");
  }
  const Eigen::VectorXd y = llt.solve(Eigen::VectorXd::Ones(k));

  const double floor = kEligibilityFloor * std::max(1.0, y.lpNorm<Eigen::Infinity>());
  if (!(y.array() > floor).all()) return std::nullopt;

  // Off-support rows must see at least the on-support level (Lagrange
  // feasibility of the complementary coordinates).
  std::vector<char> in(m, 0);
  for (int a : alpha) in[a] = 1;
  for (int r = 0; r < m; ++r) {
    if (in[r]) continue;
    double dot = 0.0;
    for (int j = 0; j < k; ++j) dot += qp.m2(r, alpha[j]) * y(j);
    if (dot < 1.0 - kEligibilityFloor) return std::nullopt;
  }

  Eigen::VectorXd w = Eigen::VectorXd::Zero(m);
  const double scale = m / y.sum();
  for (int j = 0; j < k; ++j) w(alpha[j]) = scale * y(j);
  return w;
}

MinVarResult minvar_exact(const Graph& g, int exhaustive_limit) {
  require_connected(g, "minvar_exact");
  const int m = g.edge_count();
  if (m > exhaustive_limit) {
    throw std::invalid_argument(
        "edge count " + std::to_string(m) + " exceeds the exhaustive limit " +
        std::to_string(exhaustive_limit) + "; use the descent solver");
  }
  const QPInstance qp = QPInstance::from_graph(g);
  const auto binom = binomial_table(m);
  const int threads = worker_count();

  std::atomic<long> tested{0};
  uint64_t found_mask = 0;

  for (int c = m; c >= 1 && found_mask == 0; --c) {
    const uint64_t total = binom[m][c];
    std::atomic<uint64_t> best{UINT64_MAX};

    auto scan = [&](uint64_t first_rank, uint64_t count) {
      uint64_t mask = unrank_mask(first_rank, c, binom);
      const uint64_t chunk_start = mask;
      long local_tested = 0;
      for (uint64_t t = 0; t < count; ++t, mask = gosper_next(mask)) {
        if ((t & 63) == 0 && best.load(std::memory_order_relaxed) <= chunk_start) {
          break;  // an earlier chunk already holds the lowest possible hit
        }
        ++local_tested;
        if (support_check(qp, mask_to_indices(mask))) {
          uint64_t prev = best.load(std::memory_order_relaxed);
          while (prev > mask &&
                 !best.compare_exchange_weak(prev, mask,
                                             std::memory_order_relaxed)) {
          }
          break;  // ascending within the chunk: first hit is the lowest
        }
      }
      tested.fetch_add(local_tested, std::memory_order_relaxed);
    };

    if (threads <= 1 || total < 2048) {
      scan(0, total);
    } else {
      const uint64_t nchunks = std::min<uint64_t>(threads, total);
      std::vector<std::thread> pool;
      pool.reserve(nchunks);
      for (uint64_t i = 0; i < nchunks; ++i) {
        const uint64_t lo = total * i / nchunks;
        const uint64_t hi = total * (i + 1) / nchunks;
        pool.emplace_back(scan, lo, hi - lo);
      }
      for (auto& t : pool) t.join();
    }

    if (best.load() != UINT64_MAX) found_mask = best.load();
  }

  if (found_mask == 0) {
    throw NumericalError("no support passed the optimality test");
  }

  const auto alpha = mask_to_indices(found_mask);
  const Eigen::VectorXd w = *support_check(qp, alpha);

  MinVarResult result;
  result.weights = w;
  result.support = alpha;
  result.objective = w.dot(qp.m2 * w);
  result.variance = slice_variance(g.vertex_count(), m, result.objective);
  result.solver = MinVarSolver::Exact;
  result.full_support_eligible = unconstrained_minimizer(qp).eligible;
  result.iterations = tested.load();
  result.converged = true;
  result.boundary = static_cast<int>(alpha.size()) < m;
  result.eta_final = eta(qp, w);
  return result;
}

MinVarResult minvar_descent(const Graph& g, const DescentOptions& opt) {
  require_connected(g, "minvar_descent");
  const QPInstance qp = QPInstance::from_graph(g);
  const int m = qp.edge_count;

  Eigen::VectorXd w = Eigen::VectorXd::Ones(m);
  Eigen::VectorXd mw = qp.m2 * w;

  long iter = 0;
  bool converged = false;
  double eta_now = 0.0;

  while (iter < opt.max_iter) {
    int i = 0;
    mw.minCoeff(&i);

    // Best donor: largest transferable mass toward coordinate i.
    int j = -1;
    double best_eta = -1.0;
    for (int cand = 0; cand < m; ++cand) {
      const double gap = mw(cand) - mw(i);
      const double div = opt.exact_step ? (qp.incident(i, cand) ? 6.0 : 8.0) : 8.0;
      const double e = std::min(gap / div, w(cand));
      if (e > best_eta) {
        best_eta = e;
        j = cand;
      }
    }
    eta_now = best_eta;
    if (eta_now < opt.tol) {
      converged = true;
      break;
    }
    if (opt.trace) opt.trace->push_back({w.dot(mw), eta_now});

    const double gap = mw(j) - mw(i);
    const double div = opt.exact_step ? (qp.incident(i, j) ? 6.0 : 8.0) : 8.0;
    const double t = gap / div;
    double step;
    if (w(j) <= t) {  // donor is emptied: land exactly on the face
      step = w(j);
      w(j) = 0.0;
    } else {
      step = t;
      w(j) -= step;
    }
    w(i) += step;
    mw += step * (qp.m2.col(i) - qp.m2.col(j));
    ++iter;
    if (iter % 1024 == 0) mw = qp.m2 * w;  // shed incremental drift
  }

  mw = qp.m2 * w;

  MinVarResult result;
  result.weights = w;
  result.support = support_of(w);
  result.objective = w.dot(mw);
  result.variance = slice_variance(g.vertex_count(), m, result.objective);
  result.solver = MinVarSolver::Descent;
  result.full_support_eligible = unconstrained_minimizer(qp).eligible;
  result.iterations = iter;
  result.converged = converged;
  result.boundary = static_cast<int>(result.support.size()) < m;
  result.eta_final = converged ? eta_now : eta(qp, w);
  return result;
}

double eta(const QPInstance& qp, const Eigen::VectorXd& w) {
  const int m = qp.edge_count;
  if (w.size() != m) throw std::invalid_argument("weight length mismatch");
  if (std::abs(w.sum() - m) > 1e-9 * std::max(1.0, static_cast<double>(m))) {
    throw std::invalid_argument("weights must sum to the edge count");
  }
  if ((w.array() < -kEligibilityFloor).any()) {
    throw std::invalid_argument("weights must be nonnegative");
  }
  const Eigen::VectorXd mw = qp.m2 * w;
  const double low = mw.minCoeff();
  double best = 0.0;
  for (int j = 0; j < m; ++j) {
    best = std::max(best, std::min((mw(j) - low) / 8.0, w(j)));
  }
  return best;
}

double var_one(const Graph& g) {
  require_connected(g, "var_one");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  double sq = 0.0;
  for (int d : g.degrees()) sq += static_cast<double>(d) * d;
  const double mean = 2.0 * m / (n - 1);
  return (2.0 * m + sq) / (n - 1) - mean * mean;
}

double var_one_upper_bound(const Graph& g) {
  require_connected(g, "var_one_upper_bound");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const double mean = 2.0 * m / (n - 1);
  return m * (n - mean) / (n - 1.0);
}

std::vector<std::vector<int>> all_eligible_supports(const Graph& g,
                                                    int exhaustive_limit) {
  require_connected(g, "all_eligible_supports");
  const int m = g.edge_count();
  if (m > exhaustive_limit) {
    throw std::invalid_argument("edge count exceeds the exhaustive limit");
  }
  const QPInstance qp = QPInstance::from_graph(g);
  std::vector<std::vector<int>> hits;
  for (int c = m; c >= 1; --c) {
    uint64_t mask = (uint64_t{1} << c) - 1;
    const uint64_t end = uint64_t{1} << m;
    for (; mask < end; mask = gosper_next(mask)) {
      const auto alpha = mask_to_indices(mask);
      if (support_check(qp, alpha)) hits.push_back(alpha);
    }
  }
  return hits;
}

}  // namespace iepl
