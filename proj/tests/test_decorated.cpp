#include "doctest.h"

#include <map>
#include <set>
#include <vector>

#include "poslab/decorated.hpp"

using namespace poslab;

namespace {

const char* kBigExample = "5,7,3-,6,4,9,2,8+,1";  // n=9, loops at 3 (ccw) and 8 (cw)
const char* kSixExample = "1-,3,6,5,2,4";         // n=6, ccw loop at 1

PairRelation classify_bases(const DecoratedPermutation& w, int i, int j) {
  return classify_pair(affine_arc(w, i), affine_arc(w, j), w.size());
}

std::set<ArcPair> pair_set(const std::vector<ArcPair>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("decorated") {

TEST_CASE("decorated parsing and printing") {
  const DecoratedPermutation w = parse_decorated(kBigExample);
  CHECK(w.size() == 9);
  CHECK(w(1) == 5);
  CHECK(w.is_loop(3));
  CHECK_FALSE(w.is_clockwise_loop(3));
  CHECK(w.is_clockwise_loop(8));
  CHECK(to_string(w) == kBigExample);

  CHECK(to_string(parse_decorated("1-,3,6,5,2,4")) == "1-,3,6,5,2,4");
  CHECK(to_string(parse_decorated("3,4,1,2")) == "3,4,1,2");

  CHECK_THROWS_AS(parse_decorated("1,3,6,5,2,4"), parse_error);   // unmarked loop
  CHECK_THROWS_AS(parse_decorated("2+,1"), parse_error);          // mark off a loop
  CHECK_THROWS_AS(parse_decorated("1-,1-"), parse_error);
  CHECK_THROWS_AS(parse_decorated("x,y"), parse_error);
  CHECK_THROWS_AS((DecoratedPermutation{parse_permutation("2,1"), {1}}), invariant_error);
}

TEST_CASE("affine lift encodes loops at the interval ends") {
  const auto arcs = to_affine(parse_decorated(kSixExample));
  const std::vector<BoundedAffineArc> expected = {{1, 1}, {2, 3}, {3, 6},
                                                  {4, 5}, {5, 8}, {6, 10}};
  CHECK(arcs == expected);

  const auto cw_id = to_affine(parse_decorated("1+,2+,3+"));
  CHECK(cw_id == std::vector<BoundedAffineArc>{{1, 4}, {2, 5}, {3, 6}});

  CHECK(to_affine(parse_decorated("2,1")) == std::vector<BoundedAffineArc>{{1, 2}, {2, 3}});
}

TEST_CASE("pair classification on the n=9 example") {
  const DecoratedPermutation w = parse_decorated(kBigExample);
  CHECK(classify_bases(w, 2, 4) == PairRelation::Alignment);   // 2->7 over 4->6
  CHECK(classify_bases(w, 9, 4) == PairRelation::Misalignment);
  CHECK(classify_bases(w, 1, 2) == PairRelation::Crossing);
  CHECK(classify_bases(w, 1, 5) == PairRelation::Crossing);    // heads meet at 5
  CHECK(classify_bases(w, 4, 8) == PairRelation::Alignment);   // clockwise loop swallows 4->6
  CHECK(classify_bases(w, 4, 3) == PairRelation::Misalignment);

  CHECK(alignments(w).size() == 13);
}

TEST_CASE("pair classification, small degenerate cases") {
  const DecoratedPermutation swap2 = parse_decorated("2,1");
  CHECK(classify_bases(swap2, 1, 2) == PairRelation::Crossing);

  const DecoratedPermutation mixed = parse_decorated("1+,4,3-,2");
  CHECK(classify_bases(mixed, 1, 4) == PairRelation::Misalignment);  // cw loop vs 4->2
  CHECK(classify_bases(mixed, 1, 2) == PairRelation::Alignment);     // cw loop vs 2->4
  CHECK(pair_set(alignments(mixed)) ==
        std::set<ArcPair>{{1, 2}, {1, 3}, {2, 3}});

  // Loops of opposite orientation align; same orientation misaligns.
  const DecoratedPermutation loops = parse_decorated("1+,2-,3+");
  CHECK(classify_bases(loops, 1, 2) == PairRelation::Alignment);
  CHECK(classify_bases(loops, 1, 3) == PairRelation::Misalignment);
  CHECK(classify_bases(loops, 2, 3) == PairRelation::Alignment);

  // Two 2-cycles wrapping around each other do not intersect.
  const DecoratedPermutation disjoint = parse_decorated("2,1,4,3");
  CHECK(classify_bases(disjoint, 2, 4) == PairRelation::Misalignment);
  CHECK(classify_bases(disjoint, 1, 3) == PairRelation::Misalignment);
  CHECK(classify_bases(disjoint, 2, 3) == PairRelation::Alignment);
  CHECK(classify_bases(disjoint, 1, 4) == PairRelation::Alignment);
  CHECK(crossed_alignments(disjoint).empty());

  CHECK_THROWS_AS(classify_pair({1, 3}, {1, 3}, 4), invariant_error);
}

TEST_CASE("alignment/crossing partition on the n=6 example") {
  const DecoratedPermutation w = parse_decorated(kSixExample);
  CHECK(pair_set(alignments(w)) ==
        std::set<ArcPair>{{1, 5}, {1, 6}, {2, 6}, {3, 4}});
  CHECK(pair_set(crossings(w)) ==
        std::set<ArcPair>{{2, 3}, {2, 5}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
  CHECK(pair_set(misalignments(w)) ==
        std::set<ArcPair>{{1, 2}, {1, 3}, {1, 4}, {2, 4}});

  // Every unordered pair lands in exactly one bucket.
  CHECK(alignments(w).size() + crossings(w).size() + misalignments(w).size() == 15);
}

TEST_CASE("crossed alignments") {
  const DecoratedPermutation big = parse_decorated(kBigExample);
  bool found = false;
  for (const auto& c : crossed_alignments(big))
    if (c.pair == ArcPair{2, 4} && c.witness == 1) found = true;
  CHECK(found);
  CHECK(has_crossed_alignment(big));

  const DecoratedPermutation six = parse_decorated(kSixExample);
  const auto crossed = crossed_alignments(six);
  bool has26by3 = false;
  for (const auto& c : crossed)
    if (c.pair == ArcPair{2, 6} && c.witness == 3) has26by3 = true;
  CHECK(has26by3);

  CHECK(crossed_alignments(parse_decorated("3,4,1,2")).empty());
  CHECK_FALSE(has_crossed_alignment(parse_decorated("3,4,1,2")));

  // Alignments able to involve a loop are never crossed: loops cannot cross.
  for (const auto& c : crossed_alignments(six)) {
    CHECK_FALSE(six.is_loop(c.pair.i));
    CHECK_FALSE(six.is_loop(c.pair.j));
    CHECK_FALSE(six.is_loop(c.witness));
  }
}

TEST_CASE("dihedral maps: basic identities") {
  const DecoratedPermutation w = parse_decorated(kSixExample);
  CHECK(rotate(w, 6) == w);
  CHECK(rotate(rotate(w, 2), 4) == w);
  CHECK(reflect(reflect(w)) == w);
  CHECK(reverse_arcs(reverse_arcs(w)) == w);
  CHECK(to_string(reverse_arcs(w)) == "1+,5,2,6,4,3");

  const DecoratedPermutation r1 = rotate(w, 1);
  CHECK(to_string(r1) == "5,2-,4,1,6,3");
}

TEST_CASE("alignment count is a dihedral invariant") {
  for (int n = 1; n <= 6; ++n) {
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      const size_t a = alignments(w).size();
      for (int s = 1; s < n; ++s) REQUIRE(alignments(rotate(w, s)).size() == a);
      REQUIRE(alignments(reflect(w)).size() == a);
      REQUIRE(alignments(reverse_arcs(w)).size() == a);
      // crossed alignments survive the dihedral action too
      const bool crossed = has_crossed_alignment(w);
      REQUIRE(has_crossed_alignment(reflect(w)) == crossed);
      REQUIRE(has_crossed_alignment(reverse_arcs(w)) == crossed);
      if (n > 1) REQUIRE(has_crossed_alignment(rotate(w, 1)) == crossed);
    });
  }
}

TEST_CASE("fixed point removal") {
  const DecoratedPermutation w = parse_decorated(kSixExample);
  const DecoratedPermutation trimmed = remove_fixed_point(w, 1);
  CHECK(to_string(trimmed) == "2,5,4,1,3");
  CHECK_THROWS_AS(remove_fixed_point(w, 2), invariant_error);

  const DecoratedPermutation big = parse_decorated(kBigExample);
  const DecoratedPermutation once = remove_fixed_point(big, 3);
  const DecoratedPermutation twice = remove_fixed_point(once, 7);  // 8 shifted down
  CHECK(twice.size() == 7);
  CHECK(twice.clockwise().empty());
  for (int i = 1; i <= 7; ++i) CHECK_FALSE(twice.is_loop(i));

  DecoratedPermutation shrunk = parse_decorated("1+,2-");
  shrunk = remove_fixed_point(shrunk, 2);
  CHECK(to_string(shrunk) == "1+");
  shrunk = remove_fixed_point(shrunk, 1);
  CHECK(shrunk.size() == 0);
}

TEST_CASE("crossing components partition the ground set") {
  const DecoratedPermutation six = parse_decorated(kSixExample);
  CHECK(crossing_components(six) ==
        std::vector<std::vector<int>>{{1}, {2, 3, 4, 5, 6}});

  CHECK(crossing_components(parse_decorated("3,4,1,2")) ==
        std::vector<std::vector<int>>{{1, 2, 3, 4}});

  CHECK(crossing_components(parse_decorated("1+,2-,3+")) ==
        std::vector<std::vector<int>>{{1}, {2}, {3}});

  for (int n = 1; n <= 6; ++n) {
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      const auto comps = crossing_components(w);
      std::set<int> all;
      size_t total = 0;
      for (const auto& c : comps) {
        total += c.size();
        all.insert(c.begin(), c.end());
        // arcs of one cycle never split across components
        for (int i : c) REQUIRE(all.contains(w(i)));
      }
      REQUIRE(total == static_cast<size_t>(n));
      REQUIRE(static_cast<int>(all.size()) == n);
    });
  }
}

TEST_CASE("spirograph unions") {
  CHECK(is_spirograph_union(parse_decorated("3,4,1,2")));
  CHECK(is_spirograph_union(parse_decorated("2,3,4,5,1")));
  CHECK(is_spirograph_union(parse_decorated("2,1,4,3")));
  CHECK(is_spirograph_union(parse_decorated("1+,2+,3+")));
  CHECK(is_spirograph_union(parse_decorated("1-,2+,3-")));

  std::vector<std::vector<int>> blocks;
  CHECK_FALSE(is_spirograph_union(parse_decorated(kSixExample), &blocks));
  CHECK(blocks == std::vector<std::vector<int>>{{1}, {2, 3, 4, 5, 6}});

  CHECK_FALSE(is_spirograph_union(parse_decorated(kBigExample)));

  // 2,1,5,6,3,4 has blocks {1,2} and {3,4,5,6}: nested, both shifts.
  CHECK(is_spirograph_union(parse_decorated("2,1,5,6,3,4")));
  // 3,4,5,2,1: one block, relabels to itself, not a shift.
  CHECK_FALSE(is_spirograph_union(parse_decorated("3,4,5,2,1")));
}

TEST_CASE("decorated enumeration counts") {
  const std::vector<uint64_t> expected = {2, 5, 16, 65, 326, 1957};  // sum of 2^fix
  for (int n = 1; n <= 6; ++n) {
    uint64_t count = 0;
    std::set<std::string> seen;
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      ++count;
      seen.insert(to_string(w));
    });
    REQUIRE(count == expected[static_cast<size_t>(n) - 1]);
    REQUIRE(seen.size() == count);  // each decorated permutation exactly once
  }

  const std::vector<uint64_t> derangements = {0, 1, 2, 9, 44, 265};  // n = 1..6
  for (int n = 1; n <= 6; ++n) {
    uint64_t count = 0;
    for_each_derangement(n, [&](const Permutation&) { ++count; });
    REQUIRE(count == derangements[static_cast<size_t>(n) - 1]);
  }

  // The sharded stream is the same stream.
  std::vector<std::string> whole, pieces;
  for_each_decorated(4, [&](const DecoratedPermutation& w) { whole.push_back(to_string(w)); });
  for (uint64_t b : {uint64_t{0}, uint64_t{7}, uint64_t{16}, uint64_t{24}}) {
    uint64_t e = b == 0 ? 7 : b == 7 ? 16 : b == 16 ? 24 : 24;
    for_each_decorated_range(4, b, e,
                             [&](const DecoratedPermutation& w) { pieces.push_back(to_string(w)); });
  }
  CHECK(whole == pieces);

  CHECK_THROWS_AS(for_each_decorated(10, [](const DecoratedPermutation&) {}), guard_error);
}

}  // TEST_SUITE
