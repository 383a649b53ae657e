#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "poslab/smooth.hpp"

using namespace poslab;

namespace {

const char* kBigExample = "5,7,3-,6,4,9,2,8+,1";
const char* kSixExample = "1-,3,6,5,2,4";

Positroid positroid_of(const char* text) {
  return positroid_from_necklace(grassmann_necklace(parse_decorated(text)));
}

std::map<std::string, int> degree_map(const JohnsonGraphView& G) {
  std::map<std::string, int> out;
  for (size_t i = 0; i < G.positroid.bases.size(); ++i)
    out[to_string(G.positroid.bases[i])] = G.degrees[i];
  return out;
}

}  // namespace

TEST_SUITE("smooth") {

TEST_CASE("codimension") {
  CHECK(codimension(parse_decorated(kBigExample)) == 13);
  CHECK(codimension(parse_decorated(kSixExample)) == 4);
  CHECK(codimension(parse_decorated("3,4,1,2")) == 0);
  CHECK(codimension(parse_decorated("2,3,4,5,1")) == 0);
  CHECK(codimension(parse_decorated("1-,2-,3-")) == 0);
  CHECK(codimension(parse_decorated("2,1,4,3")) == 2);

  // both computations stay glued together over everything small
  for (int n = 1; n <= 6; ++n)
    for_each_decorated(n, [&](const DecoratedPermutation& w) { codimension(w); });
}

TEST_CASE("johnson graph") {
  const JohnsonGraphView G = johnson_graph(positroid_of(kSixExample));
  CHECK(degree_map(G) == std::map<std::string, int>{{"{2,4}", 4},
                                                    {"{2,5}", 4},
                                                    {"{2,6}", 5},
                                                    {"{3,4}", 4},
                                                    {"{3,5}", 4},
                                                    {"{3,6}", 5},
                                                    {"{4,6}", 5},
                                                    {"{5,6}", 5}});
  CHECK(G.edges.size() == 18);

  Positroid full{4, 2, {}};
  for (uint64_t m : ksubset_masks(4, 2)) full.bases.push_back(KSubset::from_mask(4, m));
  const JohnsonGraphView F = johnson_graph(full);
  CHECK(std::all_of(F.degrees.begin(), F.degrees.end(), [](int d) { return d == 4; }));

  const JohnsonGraphView point = johnson_graph(Positroid{5, 2, {KSubset(5, {2, 4})}});
  CHECK(point.edges.empty());
  CHECK(point.degrees == std::vector<int>{0});
}

TEST_CASE("tangent counts") {
  const Positroid M = positroid_of(kSixExample);
  CHECK(tangent_codim(M, KSubset(6, {2, 6})) == 3);
  CHECK(tangent_codim(M, KSubset(6, {2, 4})) == 4);
  CHECK_THROWS_AS(tangent_codim(M, KSubset(6, {1, 2})), invariant_error);

  Positroid full{5, 2, {}};
  for (uint64_t m : ksubset_masks(5, 2)) full.bases.push_back(KSubset::from_mask(5, m));
  CHECK(tangent_codim(full, KSubset(5, {3, 5})) == 0);

  // per-basis degree + tangent count always fills k(n-k)
  for (int n = 1; n <= 5; ++n) {
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      const Positroid P = positroid_from_necklace(grassmann_necklace(w));
      const JohnsonGraphView G = johnson_graph(P);
      for (size_t i = 0; i < P.bases.size(); ++i)
        REQUIRE(G.degrees[i] + tangent_codim(P, P.bases[i]) == P.k * (n - P.k));
    });
  }
}

TEST_CASE("criterion names") {
  CHECK(parse_criterion("degree") == Criterion::Degree);
  CHECK(parse_criterion("spirograph") == Criterion::Spirograph);
  CHECK(to_string(Criterion::Regular) == "regular");
  CHECK(to_string(Criterion::Crossed) == "crossed");
  CHECK_THROWS_AS(parse_criterion("smoothish"), parse_error);
}

TEST_CASE("the four criteria on the pinned examples") {
  const std::vector<Criterion> all = {Criterion::Degree, Criterion::Regular,
                                      Criterion::Crossed, Criterion::Spirograph};
  for (Criterion c : all) {
    CHECK_FALSE(is_smooth(parse_decorated(kBigExample), c));
    CHECK_FALSE(is_smooth(parse_decorated(kSixExample), c));
    CHECK(is_smooth(parse_decorated("3,4,1,2"), c));
    CHECK(is_smooth(parse_decorated("2,1,4,3"), c));
    CHECK(is_smooth(parse_decorated("2,1,4,3,6,5"), c));
    CHECK(is_smooth(parse_decorated("1+,2-,3+"), c));
    CHECK(is_smooth(parse_decorated("2,1"), c));
  }
  // all four agree everywhere small
  for (int n = 1; n <= 5; ++n) {
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      const bool verdict = is_smooth(w, Criterion::Crossed);
      for (Criterion c : all) REQUIRE(is_smooth(w, c) == verdict);
    });
  }

  // the smallest case where degree-regularity alone would lie: every basis
  // of 2,5,4,1,6,3 has johnson degree 6 and tangent codimension 2, but the
  // variety has codimension 3, so it is singular at every fixed point
  const DecoratedPermutation trap = parse_decorated("2,5,4,1,6,3");
  CHECK(codimension(trap) == 3);
  const Positroid M = positroid_from_necklace(grassmann_necklace(trap));
  const JohnsonGraphView G = johnson_graph(M);
  for (size_t i = 0; i < M.bases.size(); ++i) {
    CHECK(G.degrees[i] == 6);
    CHECK(tangent_codim(M, M.bases[i]) == 2);
  }
  for (Criterion c : all) CHECK_FALSE(is_smooth(trap, c));
}

TEST_CASE("singular fixed points") {
  const auto six = singular_fixed_points(parse_decorated(kSixExample));
  std::set<std::string> names;
  for (const auto& J : six) names.insert(to_string(J));
  CHECK(names.contains("{2,6}"));
  CHECK(names == std::set<std::string>{"{2,6}", "{3,6}", "{4,6}", "{5,6}"});

  CHECK(singular_fixed_points(parse_decorated("3,4,1,2")).empty());
  CHECK_FALSE(singular_fixed_points(parse_decorated(kBigExample)).empty());
}

TEST_CASE("smoothness report") {
  const SmoothnessReport bad = smoothness_report(parse_decorated(kSixExample));
  CHECK(bad.codim == 4);
  CHECK_FALSE(bad.smooth);
  CHECK_FALSE(bad.degree_ok);
  CHECK_FALSE(bad.regular_ok);
  CHECK_FALSE(bad.crossed_ok);
  CHECK_FALSE(bad.spirograph_ok);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->pair == ArcPair{2, 6});
  CHECK(bad.witness->witness == 3);
  CHECK(bad.singular_points.size() == 4);
  CHECK(bad.M.bases.size() == 8);
  CHECK(bad.jacobian_ranks.empty());

  const SmoothnessReport big = smoothness_report(parse_decorated(kBigExample));
  CHECK(big.codim == 13);
  REQUIRE(big.witness.has_value());
  CHECK(big.witness->pair == ArcPair{2, 4});
  CHECK(big.witness->witness == 1);

  const SmoothnessReport fine = smoothness_report(parse_decorated("3,4,1,2"));
  CHECK(fine.smooth);
  CHECK(fine.singular_points.empty());
  CHECK_FALSE(fine.witness.has_value());
  CHECK(fine.codim == 0);
}

TEST_CASE("anti-exchange pairs") {
  const auto pairs = anti_exchange_pairs(parse_permutation("2,5,4,1,3"));
  CHECK(pairs == std::vector<std::pair<int, int>>{{1, 4}, {3, 2}});

  CHECK(anti_exchange_pairs(parse_permutation("3,4,1,2")).empty());
  CHECK(anti_exchange_pairs(parse_permutation("2,3,4,5,1")).empty());
  CHECK_THROWS_AS(anti_exchange_pairs(parse_permutation("1,3,2")), invariant_error);

  // never throws (the walk conditions match the matroid) on derangements
  for (int n = 2; n <= 6; ++n)
    for_each_derangement(n, [&](const Permutation& w) { anti_exchange_pairs(w); });
}

TEST_CASE("psi lands on alignments, injectively") {
  const Permutation w = parse_permutation("2,5,4,1,3");
  CHECK(psi_map(w, {3, 2}) == ArcPair{1, 5});  // arcs 1->2 and 5->3
  CHECK(psi_map(w, {1, 4}) == ArcPair{2, 3});  // arcs 2->5 and 3->4
  CHECK_THROWS_AS(psi_map(w, {1, 5}), invariant_error);
  CHECK_THROWS_AS(psi_map(w, {2, 4}), invariant_error);

  for (int n = 2; n <= 6; ++n) {
    for_each_derangement(n, [&](const Permutation& u) {
      const auto pairs = anti_exchange_pairs(u);
      std::set<ArcPair> image;
      for (const auto& ab : pairs) image.insert(psi_map(u, ab));
      REQUIRE(image.size() == pairs.size());
    });
  }
}

TEST_CASE("canonical crossed configuration") {
  const DecoratedPermutation big = parse_decorated(kBigExample);
  CHECK(canonicalize_crossed(big) == std::pair<int, bool>{0, false});
  CHECK(apply_dihedral(big, {0, false}) == big);

  const DecoratedPermutation six = parse_decorated(kSixExample);
  const auto t = canonicalize_crossed(six);
  const DecoratedPermutation canon = apply_dihedral(six, t);
  bool witnessed = false;
  for (const auto& c : crossed_alignments(canon)) {
    if (c.witness != 1) continue;
    const int head = canon(1);
    auto inside = [&](int x) { return 1 < x && x < head; };
    if (inside(c.pair.i) && inside(c.pair.j) && !inside(canon(c.pair.i)) &&
        !inside(canon(c.pair.j)))
      witnessed = true;
  }
  CHECK(witnessed);

  CHECK_THROWS_AS(canonicalize_crossed(parse_decorated("3,4,1,2")), invariant_error);

  // canonicalization succeeds on every crossed instance up to n = 6 and
  // feeds the strict inequality of the non-surjectivity argument
  for (int n = 2; n <= 6; ++n) {
    for_each_derangement(n, [&](const Permutation& u) {
      const DecoratedPermutation w{u, {}};
      if (!has_crossed_alignment(w)) return;
      const DecoratedPermutation canon2 = apply_dihedral(w, canonicalize_crossed(w));
      REQUIRE(anti_exchange_pairs(canon2.perm()).size() < alignments(canon2).size());
    });
  }
}

TEST_CASE("verdict survives the dihedral action and loop removal") {
  for (int n = 1; n <= 5; ++n) {
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      const bool verdict = is_smooth(w, Criterion::Crossed);
      REQUIRE(is_smooth(reflect(w), Criterion::Degree) == verdict);
      REQUIRE(is_smooth(reverse_arcs(w), Criterion::Regular) == verdict);
      if (n > 1) REQUIRE(is_smooth(rotate(w, 1), Criterion::Spirograph) == verdict);
      for (int i = 1; i <= n; ++i)
        if (w.is_loop(i))
          REQUIRE(is_smooth(remove_fixed_point(w, i), Criterion::Crossed) == verdict);

      bool conj = true;
      for (const auto& comp : crossing_components(w))
        conj = conj && is_smooth(restrict_to_support(w, comp), Criterion::Crossed);
      REQUIRE(conj == verdict);
    });
  }
}

}  // TEST_SUITE
