#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iepl/graph.hpp"
#include "iepl/realizability.hpp"

namespace iepl {

/// Weight every edge of a connected graph so that all n eigenvalues of the
/// resulting Laplacian are distinct: the BFS spanning tree is added edge by
/// edge, each new weight 1/7 of the current minimum gap between distinct
/// eigenvalues, then the non-tree edges the same way.
RealizationWitness construct_all_distinct(const Graph& g);

/// Families whose attainable ordered multiplicity lists are known exactly.
enum class ListFamily { Path, Complete, Star, Paw, C4, K4MinusE };

struct FamilySpec {
  ListFamily family;
  int n = 0;  // vertex count for Path/Complete/Star; fixed 4 otherwise

  /// Parse "P7", "K5", "K1,3", "paw", "C4", "K4-e".  Returns nullopt for
  /// anything else (including C_n with n != 4).
  static std::optional<FamilySpec> parse(const std::string& name);
};

/// Every ordered multiplicity list attainable on the family, longer lists
/// first, lexicographic within a length.  Complete graphs and stars are
/// generated from their predicates (complete: m1 = 1; star: m1 = mq = 1 and
/// every entry >= 2 is followed by a 1); the 4-vertex catalogs are fixed.
std::vector<std::vector<int>> allowed_lists(const FamilySpec& spec);

/// Predicate behind the star catalog.
bool star_list_allowed(const std::vector<int>& list);

/// Constructive witness for an allowed star list: integer weights
/// 1, 2, 3, ... with multiplicities given by the reduced list (drop the
/// leading 1; each entry >= 2 absorbs the following 1 and grows by one).
/// Throws NotRealizableError when the list is not attainable on a star.
RealizationWitness star_witness_for_list(const std::vector<int>& list);

}  // namespace iepl
