#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glw/diagrams.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using glw::canonicalize;
using glw::Chord;
using glw::ChordDiagram;
using glw::DiagramSum;
using glw::Int;
using glw::mirror;
using glw::parse_diagram;
using glw::render_diagram;
using glw::rotate;

namespace {

ChordDiagram diagram(const std::vector<Chord>& pairs) { return ChordDiagram::from_pairs(pairs); }

const ChordDiagram kEmpty;
const ChordDiagram kTheta = diagram({{0, 1}});
const ChordDiagram kCrossing = diagram({{0, 2}, {1, 3}});
const ChordDiagram kDisjoint = diagram({{0, 1}, {2, 3}});
const ChordDiagram kTriple = diagram({{0, 3}, {1, 4}, {2, 5}});

// Independent count of perfect matchings on 2n points: (2n-1)!!.
long double_factorial(int n) {
  long out = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) out *= k;
  return out;
}

}  // namespace

TEST_CASE("construction validates the involution") {
  CHECK(kEmpty.order() == 0);
  CHECK(kTheta.points() == 2);
  CHECK(kTheta.partner(0) == 1);
  CHECK(kCrossing.partner(1) == 3);

  CHECK_THROWS_AS(diagram({{0, 0}}), std::invalid_argument);          // fixed point
  CHECK_THROWS_AS(diagram({{0, 1}, {1, 2}}), std::invalid_argument);  // reused position
  CHECK_THROWS_AS(diagram({{0, 2}}), std::invalid_argument);          // gap
  CHECK_THROWS_AS(diagram({{-1, 0}}), std::invalid_argument);
}

TEST_CASE("sparse labels compact preserving circular order") {
  CHECK(ChordDiagram::from_sparse_pairs({{0, 6}, {2, 8}, {4, 10}}) == kTriple);
  CHECK(ChordDiagram::from_sparse_pairs({{3, 9}}) == kTheta);
  CHECK(ChordDiagram::from_sparse_pairs({}) == kEmpty);
  // Label 6 appears twice.
  CHECK_THROWS_AS(ChordDiagram::from_sparse_pairs({{0, 6}, {6, 8}}), std::invalid_argument);
}

TEST_CASE("chords are reported sorted") {
  auto chords = kTriple.chords();
  REQUIRE(chords.size() == 3);
  CHECK(chords[0] == Chord{0, 3});
  CHECK(chords[1] == Chord{1, 4});
  CHECK(chords[2] == Chord{2, 5});
}

TEST_CASE("rotation") {
  CHECK(rotate(kCrossing, 1) == kCrossing);  // the crossing is rotation-symmetric
  CHECK(rotate(kDisjoint, 1) == diagram({{0, 3}, {1, 2}}));
  CHECK(rotate(kDisjoint, 4) == kDisjoint);
  for (int k = 0; k < 6; ++k)
    CHECK(rotate(rotate(kTriple, k), 6 - k) == kTriple);
}

TEST_CASE("canonical form is the least rotation and is rotation-invariant") {
  CHECK(canonicalize(diagram({{0, 3}, {1, 2}})) == kDisjoint);
  CHECK(canonicalize(kEmpty) == kEmpty);
  for (const auto& d : glw::enumerate_diagrams(4)) {
    CHECK(canonicalize(d) == d);  // enumeration yields canonical forms
    for (int k = 0; k < d.points(); ++k) CHECK(canonicalize(rotate(d, k)) == d);
  }
}

TEST_CASE("mirror is an involution preserving crossings") {
  for (const auto& d : glw::enumerate_diagrams(4)) {
    CHECK(mirror(mirror(d)) == d);
    CHECK(glw::crossings(mirror(d)).size() == glw::crossings(d).size());
  }
}

TEST_CASE("crossing predicate and counts") {
  CHECK(glw::chords_cross({0, 2}, {1, 3}));
  CHECK_FALSE(glw::chords_cross({0, 1}, {2, 3}));
  CHECK_FALSE(glw::chords_cross({0, 3}, {1, 2}));

  CHECK(glw::crossings(kTriple).size() == 3);
  CHECK(glw::crossings(kDisjoint).empty());
  CHECK(glw::crossings(parse_diagram("0-8,2-6,4-10")).size() == 2);

  auto crossers = glw::crossings_of(kTriple, {0, 3});
  CHECK(crossers == std::vector<Chord>{{1, 4}, {2, 5}});
}

TEST_CASE("enumeration counts match the matching count through orbit sizes") {
  const long expected_classes[] = {1, 1, 2, 5, 18, 105};
  for (int n = 0; n <= 5; ++n) {
    auto all = glw::enumerate_diagrams(n);
    CHECK(static_cast<long>(all.size()) == expected_classes[n]);

    // Independent check: orbit sizes under rotation must add up to the
    // number of perfect matchings on 2n labeled points, (2n-1)!!.
    long total = 0;
    for (const auto& d : all) {
      std::set<ChordDiagram> orbit;
      for (int k = 0; k < std::max(1, d.points()); ++k) orbit.insert(rotate(d, k));
      total += static_cast<long>(orbit.size());
    }
    CHECK(total == double_factorial(n));
  }
}

TEST_CASE("decompose splits along crossing components") {
  CHECK(glw::decompose(kEmpty).empty());
  CHECK(glw::decompose(kTheta) == std::vector<ChordDiagram>{kTheta});
  CHECK(glw::decompose(kCrossing) == std::vector<ChordDiagram>{kCrossing});
  CHECK(glw::decompose(kTriple) == std::vector<ChordDiagram>{kTriple});

  // A nested pair is two disjoint single chords.
  CHECK(glw::decompose(kDisjoint) == std::vector<ChordDiagram>{kTheta, kTheta});

  // Isolated chord first (contains position 0), then the crossing pair.
  auto parts = glw::decompose(diagram({{0, 1}, {2, 4}, {3, 5}}));
  CHECK(parts == std::vector<ChordDiagram>{kTheta, kCrossing});
}

TEST_CASE("chord removal") {
  CHECK(glw::remove_chords(kTriple, {{0, 3}}) == kCrossing);
  CHECK(glw::remove_chords(kTriple, {{0, 3}, {1, 4}, {2, 5}}) == kEmpty);
  CHECK(glw::remove_chords(kTheta, {{0, 1}}) == kEmpty);
  CHECK_THROWS_AS(glw::remove_chords(kTriple, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("surgery quadruple on the all-crossing order-4 diagram") {
  ChordDiagram d = diagram({{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  auto quad = glw::surgery_quadruple(d, {0, 4}, {1, 5}, {2, 6});
  // left ends 1, 2 sit strictly inside (0,4); right ends are 5, 6.
  CHECK(quad[0] == ChordDiagram::from_sparse_pairs({{1, 6}, {3, 7}}));  // l_i - r_j
  CHECK(quad[1] == ChordDiagram::from_sparse_pairs({{2, 5}, {3, 7}}));  // r_i - l_j
  CHECK(quad[2] == ChordDiagram::from_sparse_pairs({{1, 2}, {3, 7}}));  // l_i - l_j
  CHECK(quad[3] == ChordDiagram::from_sparse_pairs({{5, 6}, {3, 7}}));  // r_i - r_j

  CHECK(quad[0] == kCrossing);
  CHECK(quad[1] == kCrossing);
  CHECK(quad[2] == kDisjoint);
  CHECK(canonicalize(quad[3]) == kDisjoint);

  DiagramSum lambda = glw::lambda_sum(d, {0, 4}, {1, 5}, {2, 6});
  REQUIRE(lambda.terms().size() == 2);
  CHECK(lambda.terms().at(kCrossing) == 2);
  CHECK(lambda.terms().at(kDisjoint) == -2);

  CHECK_THROWS_AS(glw::surgery_quadruple(d, {0, 3}, {1, 5}, {2, 6}), std::invalid_argument);
}

TEST_CASE("surgery commutes with label compaction") {
  // The same configuration embedded with sparse labels on a larger circle.
  ChordDiagram d = diagram({{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  ChordDiagram sparse =
      ChordDiagram::from_sparse_pairs({{0, 8}, {2, 10}, {4, 12}, {6, 14}});
  CHECK(sparse == d);
  auto a = glw::surgery_quadruple(d, {0, 4}, {1, 5}, {3, 7});
  auto b = glw::surgery_quadruple(sparse, {0, 4}, {1, 5}, {3, 7});
  for (int i = 0; i < 4; ++i) CHECK(canonicalize(a[i]) == canonicalize(b[i]));
}

TEST_CASE("four-term combinations") {
  auto order2 = glw::four_term_instances(2);
  REQUIRE(order2.size() == 1);
  CHECK(order2[0].terms().empty());  // the four order-2 terms cancel pairwise

  auto order3 = glw::four_term_instances(3);
  CHECK(order3.size() == 6);
  bool some_nonzero = false;
  for (const auto& inst : order3) {
    for (const auto& [d, coeff] : inst.terms()) {
      CHECK(d.order() == 3);
      CHECK((coeff == 1 || coeff == -1 || coeff == 2 || coeff == -2));
    }
    some_nonzero = some_nonzero || !inst.terms().empty();
  }
  CHECK(some_nonzero);

  // Coefficients of every instance sum to zero (signs +,-,+,-).
  for (const auto& inst : glw::four_term_instances(4)) {
    Int total = 0;
    for (const auto& [d, coeff] : inst.terms()) total += coeff;
    CHECK(total == 0);
  }
}

TEST_CASE("y-relation templates expose their free positions") {
  CHECK(glw::eight_term_free_positions(1) == std::vector<int>{0, 2, 3, 6, 9, 11});
  CHECK(glw::eight_term_free_positions(2) == std::vector<int>{0, 3, 6, 9});
  CHECK(glw::eight_term_free_positions(3) == std::vector<int>{0, 3, 5, 6, 9, 11});
  CHECK(glw::eight_term_free_positions(4) == std::vector<int>{0, 2, 3, 6, 8, 9});
  CHECK_THROWS_AS(glw::eight_term_free_positions(0), std::invalid_argument);
  CHECK_THROWS_AS(glw::eight_term_free_positions(5), std::invalid_argument);
}

TEST_CASE("y-relation templates validate hidden chords") {
  auto pairs = glw::eight_term_templates({});
  REQUIRE(pairs.size() == 4);
  for (const auto& [r, s] : pairs) {
    for (const auto& [d, coeff] : r.terms()) CHECK(d.order() == 3);
    for (const auto& [d, coeff] : s.terms()) CHECK(d.order() == 1);
  }

  // With no hidden chords the S side of template 1 cancels entirely.
  CHECK(pairs[0].second.terms().empty());

  CHECK_NOTHROW(glw::eight_term_template(1, {{0, 2}, {3, 6}}));
  // Position 1 belongs to the template.
  CHECK_THROWS_AS(glw::eight_term_template(1, {{0, 1}}), std::invalid_argument);
  // Position 2 is free for template 1 but not for template 2.
  CHECK_THROWS_AS(glw::eight_term_template(2, {{0, 2}}), std::invalid_argument);
  // Hidden chords may not share a position.
  CHECK_THROWS_AS(glw::eight_term_template(1, {{0, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("rendering") {
  CHECK(render_diagram(kEmpty) == "");
  CHECK(render_diagram(kTheta) == "0-1");
  CHECK(render_diagram(kTriple) == "0-3,1-4,2-5");
}

TEST_CASE("parsing pair lists, sparse labels, and words") {
  CHECK(parse_diagram("") == kEmpty);
  CHECK(parse_diagram("0-1") == kTheta);
  CHECK(parse_diagram("0-2,1-3") == kCrossing);
  CHECK(parse_diagram("0-6,2-8,4-10") == kTriple);
  CHECK(parse_diagram(" 0-2 , 1-3 ") == kCrossing);

  CHECK(parse_diagram("ABAB") == kCrossing);
  CHECK(parse_diagram("AABB") == kDisjoint);
  CHECK(parse_diagram("ABCABC") == kTriple);

  CHECK_THROWS_AS(parse_diagram("0-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("0-0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("0-1,1-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("ABA"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("ABCA"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("not a diagram"), std::invalid_argument);
}

TEST_CASE("parse inverts render on every diagram of order <= 5") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& d : glw::enumerate_diagrams(n)) {
      CHECK(parse_diagram(render_diagram(d)) == canonicalize(d));
      // Also on a non-canonical rotation.
      ChordDiagram r = rotate(d, 1);
      CHECK(parse_diagram(render_diagram(r)) == r);
    }
}

TEST_CASE("diagram sums canonicalize their keys and drop zeros") {
  DiagramSum s;
  s.add(diagram({{0, 3}, {1, 2}}), 2);  // a rotation of the disjoint pair
  s.add(kDisjoint, -1);
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms().begin()->first == kDisjoint);
  CHECK(s.terms().begin()->second == 1);
  s.add(kDisjoint, -1);
  CHECK(s.terms().empty());
}
