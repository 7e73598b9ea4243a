#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iepl {

/// Undirected edge with 0-based endpoints, stored with u < v.
struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Two colour classes of a bipartite graph, each sorted ascending.
struct Bipartition {
  std::vector<int> left;   // class containing vertex 0
  std::vector<int> right;
};

/// Simple undirected graph with an ordered edge list.  Vertices are 0-based
/// in the API; the text format and JSON output use 1-based labels.  Edge
/// index = position in the edge list; weight vectors are indexed the same
/// way.  Instances are immutable after construction.
class Graph {
public:
  Graph(int vertex_count, std::vector<Edge> edges);

  // Named constructors.  The 4-vertex graphs use the fixed labelings that
  // the rest of the library assumes (the crossed C4 labeling, the paw with
  // its degree-3 vertex last, K4 minus the {0,1} edge).
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph star(int n);  // K_{1,n-1}, hub = vertex 0
  static Graph paw();
  static Graph k4_minus_e();
  // Stars K_{1,p} and K_{1,q} joined by a bridge between their hubs.
  // Edge order: p hub-0 edges, the bridge, q hub-(p+1) edges.
  static Graph double_star(int p, int q);

  /// Parse a shorthand name: "P4", "C5", "K4", "K1,3", "paw", "K4-e",
  /// "doublestar 2 3" (case-insensitive for the word forms).
  static std::optional<Graph> from_name(const std::string& name);

  /// Parse the plain text format: first line "n m", then m lines "i j"
  /// with 1-based vertex indices.
  static Graph from_text(std::istream& in);
  static Graph from_text(const std::string& text);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::vector<int> degrees() const;
  /// (edge index, neighbour) pairs of v, ascending by edge index.
  const std::vector<std::pair<int, int>>& incident(int v) const;
  bool is_connected() const;

  /// n x m signed incidence matrix; column e has +1 at the lower-indexed
  /// endpoint and -1 at the higher-indexed one.
  Eigen::MatrixXd incidence_matrix() const;
  /// Unweighted Laplacian D - A.
  Eigen::MatrixXd combinatorial_laplacian() const;
  /// m x m matrix 4 I + B where B is the adjacency matrix of the line
  /// graph (edges are adjacent when they share an endpoint).
  Eigen::MatrixXd m2_matrix() const;
  /// Colour classes if bipartite, std::nullopt on an odd cycle.
  std::optional<Bipartition> bipartition() const;
  /// Edge indices of the BFS spanning tree rooted at vertex 0, scanning
  /// incident edges in index order; deterministic.
  std::vector<int> spanning_tree() const;

  /// Serialize in the plain text format (1-based).
  std::string to_text() const;

private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::string name_;
};

}  // namespace iepl
