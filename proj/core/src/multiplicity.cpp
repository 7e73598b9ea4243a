#include "iepl/multiplicity.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace iepl {

namespace {

/// Smallest gap between consecutive distinct eigenvalues (group means).
double min_distinct_gap(const Spectrum& s) {
  const double thr = s.grouping_threshold();
  std::vector<double> reps;
  double acc = s.values(0);
  int cnt = 1;
  for (int i = 1; i < s.size(); ++i) {
    if (s.values(i) - s.values(i - 1) <= thr) {
      acc += s.values(i);
      ++cnt;
    } else {
      reps.push_back(acc / cnt);
      acc = s.values(i);
      cnt = 1;
    }
  }
  reps.push_back(acc / cnt);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < reps.size(); ++i) best = std::min(best, reps[i] - reps[i - 1]);
  return best;
}

}  // namespace

RealizationWitness construct_all_distinct(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("all-distinct construction needs a connected graph");
  const int m = g.edge_count();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(m);
  const auto tree = g.spanning_tree();
  if (!tree.empty()) {
    w(tree[0]) = 1.0;
    auto next_weight = [&]() {
      const Spectrum s = spectrum_of(assemble_laplacian(g, w));
      return min_distinct_gap(s) / 7.0;
    };
    for (std::size_t k = 1; k < tree.size(); ++k) w(tree[k]) = next_weight();
    for (int e = 0; e < m; ++e)
      if (w(e) == 0.0) w(e) = next_weight();
  }
  RealizationWitness out{g, std::move(w), Eigen::MatrixXd(), Spectrum{}};
  out.matrix = assemble_laplacian(out.graph, out.weights);
  out.achieved = spectrum_of(out.matrix);
  const auto list = multiplicity_list(out.achieved);
  if (static_cast<int>(list.size()) != g.vertex_count())
    throw NumericalError("all-distinct construction left a repeated eigenvalue");
  return out;
}

std::optional<FamilySpec> FamilySpec::parse(const std::string& name) {
  std::string s = name;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) return std::nullopt;
  std::string ls = s;
  for (char& ch : ls) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));

  if (ls == "paw") return FamilySpec{ListFamily::Paw, 4};
  if (ls == "k4-e") return FamilySpec{ListFamily::K4MinusE, 4};
  if (ls == "c4") return FamilySpec{ListFamily::C4, 4};

  auto digits = [](const std::string& str) -> std::optional<int> {
    if (str.empty()) return std::nullopt;
    for (char c : str)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    try {
      return std::stoi(str);
    } catch (...) {
      return std::nullopt;
    }
  };

  const char head = ls[0];
  const std::string rest = s.substr(1);
  if (head == 'p') {
    if (auto n = digits(rest); n && *n >= 1) return FamilySpec{ListFamily::Path, *n};
  } else if (head == 'k') {
    const auto comma = rest.find(',');
    if (comma != std::string::npos) {
      auto a = digits(rest.substr(0, comma)), b = digits(rest.substr(comma + 1));
      if (a && *a == 1 && b && *b >= 1) return FamilySpec{ListFamily::Star, *b + 1};
      return std::nullopt;
    }
    if (auto n = digits(rest); n && *n >= 1) return FamilySpec{ListFamily::Complete, *n};
  }
  return std::nullopt;
}

namespace {

/// All compositions of total, longest first, lexicographic within a length.
void compositions(int total, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = 1; part <= total; ++part) {
    cur.push_back(part);
    compositions(total - part, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions_of(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(total, cur, out);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

constexpr int kMaxCatalogN = 16;  // 2^(n-2) candidate lists; keep output sane

}  // namespace

bool star_list_allowed(const std::vector<int>& list) {
  const int q = static_cast<int>(list.size());
  if (q < 2) return false;
  int sum = 0;
  for (int v : list) {
    if (v < 1) return false;
    sum += v;
  }
  if (list.front() != 1 || list.back() != 1) return false;
  for (int i = 0; i + 1 < q; ++i)
    if (list[i] >= 2 && list[i + 1] != 1) return false;
  return sum >= 2;
}

std::vector<std::vector<int>> allowed_lists(const FamilySpec& spec) {
  switch (spec.family) {
    case ListFamily::Path: {
      if (spec.n < 1) throw std::invalid_argument("path catalog needs n >= 1");
      return {std::vector<int>(spec.n, 1)};
    }
    case ListFamily::Complete: {
      if (spec.n < 1) throw std::invalid_argument("complete-graph catalog needs n >= 1");
      if (spec.n > kMaxCatalogN)
        throw std::invalid_argument("complete-graph catalog grows as 2^(n-2); n is capped at 16");
      if (spec.n == 1) return {{1}};
      std::vector<std::vector<int>> out;
      for (auto& tail : compositions_of(spec.n - 1)) {
        std::vector<int> list{1};
        list.insert(list.end(), tail.begin(), tail.end());
        out.push_back(std::move(list));
      }
      return out;
    }
    case ListFamily::Star: {
      if (spec.n < 2) throw std::invalid_argument("star catalog needs n >= 2");
      if (spec.n > kMaxCatalogN)
        throw std::invalid_argument("star catalog candidates grow as 2^(n-2); n is capped at 16");
      std::vector<std::vector<int>> out;
      for (auto& list : compositions_of(spec.n))
        if (star_list_allowed(list)) out.push_back(std::move(list));
      return out;
    }
    case ListFamily::Paw:
      return {{1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}};
    case ListFamily::C4:
      return {{1, 1, 1, 1}, {1, 2, 1}};
    case ListFamily::K4MinusE:
      return {{1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}};
  }
  throw std::logic_error("unreachable family");
}

RealizationWitness star_witness_for_list(const std::vector<int>& list) {
  if (!star_list_allowed(list))
    throw NotRealizableError("list is not attainable on a star");
  int n = 0;
  for (int v : list) n += v;

  // reduced list: drop the leading 1; each entry >= 2 absorbs the 1 after it
  std::vector<int> reduced;
  for (std::size_t i = 1; i < list.size(); ++i) {
    if (list[i] >= 2) {
      reduced.push_back(list[i] + 1);
      ++i;  // the absorbed entry is a 1 by the predicate
    } else {
      reduced.push_back(1);
    }
  }

  Eigen::VectorXd w(n - 1);
  int pos = 0;
  for (std::size_t k = 0; k < reduced.size(); ++k)
    for (int c = 0; c < reduced[k]; ++c) w(pos++) = static_cast<double>(k + 1);

  RealizationWitness out{Graph::star(n), std::move(w), Eigen::MatrixXd(), Spectrum{}};
  out.matrix = assemble_laplacian(out.graph, out.weights);
  out.achieved = spectrum_of(out.matrix);
  if (multiplicity_list(out.achieved) != list)
    throw NumericalError("star witness failed to reproduce the requested list");
  return out;
}

}  // namespace iepl
