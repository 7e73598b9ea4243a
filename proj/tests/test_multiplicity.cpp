#include <algorithm>

#include "doctest.h"
#include "graph_enum.hpp"
#include "iepl/errors.hpp"
#include "iepl/multiplicity.hpp"

using iepl::FamilySpec;
using iepl::Graph;
using iepl::ListFamily;

TEST_SUITE("multiplicity") {

TEST_CASE("the incremental weighting separates all eigenvalues") {
  for (const char* name : {"P5", "C4", "K4", "K1,6", "paw", "K4-e",
                           "doublestar 2 3"}) {
    const Graph g = *Graph::from_name(name);
    const auto w = iepl::construct_all_distinct(g);
    CHECK(w.weights(g.spanning_tree()[0]) == 1.0);
    CHECK(w.weights.minCoeff() > 0.0);
    const auto list = iepl::multiplicity_list(w.achieved);
    CHECK(static_cast<int>(list.size()) == g.vertex_count());
    CHECK(std::all_of(list.begin(), list.end(), [](int c) { return c == 1; }));
  }
  CHECK_THROWS_AS(iepl::construct_all_distinct(Graph(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("family parsing") {
  auto p = FamilySpec::parse("P7");
  REQUIRE(p.has_value());
  CHECK(p->family == ListFamily::Path);
  CHECK(p->n == 7);

  auto k = FamilySpec::parse("K5");
  REQUIRE(k.has_value());
  CHECK(k->family == ListFamily::Complete);
  CHECK(k->n == 5);

  auto s = FamilySpec::parse("K1,3");
  REQUIRE(s.has_value());
  CHECK(s->family == ListFamily::Star);
  CHECK(s->n == 4);

  CHECK(FamilySpec::parse("paw")->family == ListFamily::Paw);
  CHECK(FamilySpec::parse("C4")->family == ListFamily::C4);
  CHECK(FamilySpec::parse("K4-e")->family == ListFamily::K4MinusE);
  CHECK(FamilySpec::parse(" p3 ")->family == ListFamily::Path);

  CHECK_FALSE(FamilySpec::parse("C5"));  // only the 4-cycle is catalogued
  CHECK_FALSE(FamilySpec::parse("flower"));
  CHECK_FALSE(FamilySpec::parse("K2,3"));
  CHECK_FALSE(FamilySpec::parse(""));
}

TEST_CASE("catalogs list longer entries first, lexicographic within a length") {
  using Lists = std::vector<std::vector<int>>;

  CHECK(iepl::allowed_lists({ListFamily::Path, 5}) == Lists{{1, 1, 1, 1, 1}});

  CHECK(iepl::allowed_lists({ListFamily::Complete, 4}) ==
        Lists{{1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 3}});
  // 2^(n-2) compositions with the simple lowest eigenvalue pinned
  CHECK(iepl::allowed_lists({ListFamily::Complete, 8}).size() == 64);

  CHECK(iepl::allowed_lists({ListFamily::Star, 4}) ==
        Lists{{1, 1, 1, 1}, {1, 2, 1}});
  CHECK(iepl::allowed_lists({ListFamily::Star, 6}) ==
        Lists{{1, 1, 1, 1, 1, 1},
              {1, 1, 1, 2, 1},
              {1, 1, 2, 1, 1},
              {1, 2, 1, 1, 1},
              {1, 1, 3, 1},
              {1, 3, 1, 1},
              {1, 4, 1}});

  CHECK(iepl::allowed_lists({ListFamily::Paw, 4}) ==
        Lists{{1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}});
  CHECK(iepl::allowed_lists({ListFamily::C4, 4}) ==
        Lists{{1, 1, 1, 1}, {1, 2, 1}});
  CHECK(iepl::allowed_lists({ListFamily::K4MinusE, 4}) ==
        Lists{{1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}});

  CHECK_THROWS_AS(iepl::allowed_lists({ListFamily::Complete, 17}),
                  std::invalid_argument);
  CHECK_THROWS_AS(iepl::allowed_lists({ListFamily::Star, 17}),
                  std::invalid_argument);
}

TEST_CASE("the star predicate pins the first and last entries") {
  CHECK(iepl::star_list_allowed({1, 1}));
  CHECK(iepl::star_list_allowed({1, 2, 1}));
  CHECK(iepl::star_list_allowed({1, 1, 2, 1}));
  CHECK(iepl::star_list_allowed({1, 3, 1}));
  CHECK_FALSE(iepl::star_list_allowed({1, 2, 2, 1})); // 2 followed by 2
  CHECK_FALSE(iepl::star_list_allowed({1}));          // too short
  CHECK_FALSE(iepl::star_list_allowed({2, 1}));       // first not 1
  CHECK_FALSE(iepl::star_list_allowed({1, 2}));       // last not 1
  CHECK_FALSE(iepl::star_list_allowed({1, 2, 2}));    // 2 not followed by 1
  CHECK_FALSE(iepl::star_list_allowed({1, 0, 1}));    // nonpositive entry
}

TEST_CASE("star witnesses use consecutive integer weights") {
  const auto w = iepl::star_witness_for_list({1, 2, 1});
  REQUIRE(w.weights.size() == 3);
  CHECK(w.weights(0) == 1.0);
  CHECK(w.weights(1) == 1.0);
  CHECK(w.weights(2) == 1.0);
  CHECK(iepl::multiplicity_list(w.achieved) == std::vector<int>{1, 2, 1});

  // all-distinct list: one edge per weight value 1, 2, 3
  const auto d = iepl::star_witness_for_list({1, 1, 1, 1});
  REQUIRE(d.weights.size() == 3);
  CHECK(d.weights(0) == 1.0);
  CHECK(d.weights(1) == 2.0);
  CHECK(d.weights(2) == 3.0);
  CHECK(iepl::multiplicity_list(d.achieved) == std::vector<int>{1, 1, 1, 1});

  // every catalogued list on up to 6 vertices round-trips
  for (int n = 2; n <= 6; ++n) {
    for (const auto& list : iepl::allowed_lists({ListFamily::Star, n})) {
      const auto witness = iepl::star_witness_for_list(list);
      CHECK(iepl::multiplicity_list(witness.achieved) == list);
    }
  }

  CHECK_THROWS_AS(iepl::star_witness_for_list({2, 1}), iepl::NotRealizableError);
}

}  // TEST_SUITE
