#include "iepl/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace iepl {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self loops are not allowed");
    if (!seen.insert({e.u, e.v}).second)
      throw std::invalid_argument("duplicate edge in edge list");
  }
  adj_.resize(n_);
  for (int idx = 0; idx < static_cast<int>(edges_.size()); ++idx) {
    adj_[edges_[idx].u].push_back({idx, edges_[idx].v});
    adj_[edges_[idx].v].push_back({idx, edges_[idx].u});
  }
}

Graph Graph::path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  Graph g(n, std::move(e));
  g.name_ = "P" + std::to_string(n);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  if (n == 4) {
    // crossed labeling: cycle 0-2-1-3-0, so {0,1} and {2,3} are the diagonals
    e = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  } else {
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({0, n - 1});
  }
  Graph g(n, std::move(e));
  g.name_ = "C" + std::to_string(n);
  return g;
}

Graph Graph::complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  Graph g(n, std::move(e));
  g.name_ = "K" + std::to_string(n);
  return g;
}

Graph Graph::star(int n) {
  if (n < 2) throw std::invalid_argument("star needs n >= 2");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  Graph g(n, std::move(e));
  g.name_ = "K1," + std::to_string(n - 1);
  return g;
}

Graph Graph::paw() {
  Graph g(4, {{0, 1}, {0, 3}, {1, 3}, {2, 3}});
  g.name_ = "paw";
  return g;
}

Graph Graph::k4_minus_e() {
  Graph g(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  g.name_ = "K4-e";
  return g;
}

Graph Graph::double_star(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("double star needs p, q >= 1");
  std::vector<Edge> e;
  for (int i = 1; i <= p; ++i) e.push_back({0, i});
  e.push_back({0, p + 1});
  for (int i = 1; i <= q; ++i) e.push_back({p + 1, p + 1 + i});
  Graph g(p + q + 2, std::move(e));
  g.name_ = "doublestar " + std::to_string(p) + " " + std::to_string(q);
  return g;
}

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::optional<int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  try {
    return std::stoi(s);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<Graph> Graph::from_name(const std::string& name) {
  std::istringstream in(name);
  std::vector<std::string> tok;
  std::string t;
  while (in >> t) tok.push_back(t);
  if (tok.empty()) return std::nullopt;

  if (tok.size() == 3 && lower(tok[0]) == "doublestar") {
    auto p = parse_int(tok[1]), q = parse_int(tok[2]);
    if (p && q && *p >= 1 && *q >= 1) return double_star(*p, *q);
    return std::nullopt;
  }
  if (tok.size() != 1) return std::nullopt;
  std::string s = tok[0], ls = lower(s);
  if (ls == "paw") return paw();
  if (ls == "k4-e") return k4_minus_e();
  if (s.size() >= 2 && (s[0] == 'P' || s[0] == 'p')) {
    if (auto n = parse_int(s.substr(1)); n && *n >= 1) return path(*n);
  }
  if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'c')) {
    if (auto n = parse_int(s.substr(1)); n && *n >= 3) return cycle(*n);
  }
  if (s.size() >= 2 && (s[0] == 'K' || s[0] == 'k')) {
    auto comma = s.find(',');
    if (comma != std::string::npos) {
      auto a = parse_int(s.substr(1, comma - 1));
      auto b = parse_int(s.substr(comma + 1));
      if (a && *a == 1 && b && *b >= 1) return star(*b + 1);
      return std::nullopt;
    }
    if (auto n = parse_int(s.substr(1)); n && *n >= 1) return complete(*n);
  }
  return std::nullopt;
}

Graph Graph::from_text(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("expected header line 'n m'");
  if (n < 1 || m < 0) throw std::invalid_argument("invalid graph header");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int k = 0; k < m; ++k) {
    int i = 0, j = 0;
    if (!(in >> i >> j)) throw std::invalid_argument("expected edge line 'i j'");
    if (i < 1 || i > n || j < 1 || j > n)
      throw std::invalid_argument("edge endpoint out of range (vertices are 1-based)");
    edges.push_back({i - 1, j - 1});
  }
  return Graph(n, std::move(edges));
}

Graph Graph::from_text(const std::string& text) {
  std::istringstream in(text);
  return from_text(in);
}

bool Graph::has_edge(int u, int v) const {
  for (const auto& [idx, w] : adj_[u])
    if (w == v) return true;
  return false;
}

int Graph::degree(int v) const { return static_cast<int>(adj_[v].size()); }

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

const std::vector<std::pair<int, int>>& Graph::incident(int v) const {
  return adj_[v];
}

bool Graph::is_connected() const {
  std::vector<char> seen(n_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& [idx, u] : adj_[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++cnt;
        q.push(u);
      }
  }
  return cnt == n_;
}

Eigen::MatrixXd Graph::incidence_matrix() const {
  Eigen::MatrixXd N = Eigen::MatrixXd::Zero(n_, edge_count());
  for (int e = 0; e < edge_count(); ++e) {
    N(edges_[e].u, e) = 1.0;
    N(edges_[e].v, e) = -1.0;
  }
  return N;
}

Eigen::MatrixXd Graph::combinatorial_laplacian() const {
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& e : edges_) {
    L(e.u, e.u) += 1.0;
    L(e.v, e.v) += 1.0;
    L(e.u, e.v) -= 1.0;
    L(e.v, e.u) -= 1.0;
  }
  return L;
}

Eigen::MatrixXd Graph::m2_matrix() const {
  const int m = edge_count();
  if (m == 0) throw std::invalid_argument("m2 matrix needs at least one edge");
  Eigen::MatrixXd M = 4.0 * Eigen::MatrixXd::Identity(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const bool share = edges_[a].u == edges_[b].u || edges_[a].u == edges_[b].v ||
                         edges_[a].v == edges_[b].u || edges_[a].v == edges_[b].v;
      if (share) M(a, b) = M(b, a) = 1.0;
    }
  return M;
}

std::optional<Bipartition> Graph::bipartition() const {
  if (!is_connected()) throw std::invalid_argument("bipartition needs a connected graph");
  std::vector<int> colour(n_, -1);
  std::queue<int> q;
  q.push(0);
  colour[0] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& [idx, u] : adj_[v]) {
      if (colour[u] == -1) {
        colour[u] = 1 - colour[v];
        q.push(u);
      } else if (colour[u] == colour[v]) {
        return std::nullopt;
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < n_; ++v) (colour[v] == 0 ? b.left : b.right).push_back(v);
  return b;
}

std::vector<int> Graph::spanning_tree() const {
  if (!is_connected()) throw std::invalid_argument("spanning tree needs a connected graph");
  std::vector<char> seen(n_, 0);
  std::vector<int> tree;
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& [idx, u] : adj_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        tree.push_back(idx);
        q.push(u);
      }
    }
  }
  return tree;
}

std::string Graph::to_text() const {
  std::ostringstream out;
  out << n_ << ' ' << edge_count() << '\n';
  for (const auto& e : edges_) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

}  // namespace iepl
