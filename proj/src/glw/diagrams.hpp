#pragma once

#include "glw/numeric.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glw {

// A chord's two endpoints, stored as (min, max).
using Chord = std::pair<int, int>;

// Chord diagram: a fixed-point-free involution on the positions
// 0 .. 2n-1 of a counterclockwise-oriented circle.  Diagrams are compared
// by their raw pairing; rotation equivalence goes through canonicalize().
class ChordDiagram {
public:
  ChordDiagram() = default;  // the empty diagram (order 0)

  // Throws std::invalid_argument unless the pairs form a fixed-point-free
  // involution covering exactly 0 .. 2n-1.
  static ChordDiagram from_pairs(const std::vector<Chord>& pairs);

  // Accepts pairs with arbitrary distinct non-negative labels and compacts
  // them to 0 .. 2n-1 preserving order.  Used by template constructions.
  static ChordDiagram from_sparse_pairs(const std::vector<Chord>& pairs);

  int order() const { return static_cast<int>(partner_.size()) / 2; }
  int points() const { return static_cast<int>(partner_.size()); }
  int partner(int position) const { return partner_.at(position); }

  // Chords as (min,max), sorted ascending by first endpoint.
  std::vector<Chord> chords() const;

  bool operator==(const ChordDiagram&) const = default;
  auto operator<=>(const ChordDiagram&) const = default;

private:
  std::vector<int> partner_;
};

// Formal Z-linear combination of diagrams.  Keys are canonical forms and no
// zero coefficient is stored.
class DiagramSum {
public:
  DiagramSum() = default;
  void add(const ChordDiagram& d, const Int& coeff);
  const std::map<ChordDiagram, Int>& terms() const { return terms_; }
  bool operator==(const DiagramSum&) const = default;
  DiagramSum& operator+=(const DiagramSum& rhs);
  std::string text() const;

private:
  std::map<ChordDiagram, Int> terms_;
};

// Rotation of every position by k (mod 2n).
ChordDiagram rotate(const ChordDiagram& d, int k);

// Reflection (position p -> 2n-1-p).  W's behavior under this map is an
// empirical question; diagrams are never quotiented by it.
ChordDiagram mirror(const ChordDiagram& d);

// Lexicographically least sorted pair-list over all 2n rotations.
ChordDiagram canonicalize(const ChordDiagram& d);

bool chords_cross(const Chord& a, const Chord& b);

// All crossing pairs {a,b}, each listed once with a < b.
std::vector<std::pair<Chord, Chord>> crossings(const ChordDiagram& d);

// Chords of d crossing the given chord.
std::vector<Chord> crossings_of(const ChordDiagram& d, const Chord& a);

// Delete the listed chords and compact the remaining labels, preserving
// cyclic order.  Throws std::invalid_argument if a chord is not in d.
ChordDiagram remove_chords(const ChordDiagram& d, const std::vector<Chord>& chords);

// The four order-(n-2) surgeries on (a, bi, bj), where bi and bj both cross
// a.  With a = (p,q), arc1 is the set of positions strictly between p and q
// counterclockwise; a crossing chord has its "left" end l in arc1 and its
// "right" end r in the complement.  Remove a, bi, bj and add one chord:
//   [0] l_i - r_j   ("+-")
//   [1] r_i - l_j   ("-+")
//   [2] l_i - l_j   ("l")
//   [3] r_i - r_j   ("r")
std::array<ChordDiagram, 4> surgery_quadruple(const ChordDiagram& d, const Chord& a,
                                              const Chord& bi, const Chord& bj);

// The signed combination (+-) + (-+) - (l) - (r), canonicalized.
DiagramSum lambda_sum(const ChordDiagram& d, const Chord& a, const Chord& bi, const Chord& bj);

// All canonical diagrams of order n (perfect matchings modulo rotation).
std::vector<ChordDiagram> enumerate_diagrams(int n);

// Connected components of the crossing graph, each compacted to its own
// diagram, ordered by smallest original endpoint.  Empty list for the empty
// diagram; singleton iff d is indecomposable.
std::vector<ChordDiagram> decompose(const ChordDiagram& d);

// s(D) = sum over single-chord deletions; the zero sum for the empty diagram.
DiagramSum s_operator(const ChordDiagram& d);

// Apply s linearly to a sum.
DiagramSum s_operator(const DiagramSum& sum);

// All four-term combinations of order n: a host diagram of order n-2 plus
// five cyclically ordered marker positions m1..m5 (m1,m2 adjacent; m4,m5
// adjacent; no host endpoint inside either adjacent pair), combined as
//   + [(m1,m4),(m3,m5)] - [(m1,m5),(m3,m4)]
//   + [(m2,m3),(m1,m5)] - [(m1,m3),(m2,m5)]
// with the unused marker removed from each term.  Every weight system
// vanishes on each returned sum.
std::vector<DiagramSum> four_term_instances(int n);

// The four template pairs (R_i, S_i) on a 12-position circle satisfying
// W(R_i) = y * W(S_i); `hidden` chords are added to every term and may only
// use the template's free positions (throws std::invalid_argument otherwise):
//   i=1: {0,2,3,6,9,11}   i=2: {0,3,6,9}
//   i=3: {0,3,5,6,9,11}   i=4: {0,2,3,6,8,9}
std::vector<std::pair<DiagramSum, DiagramSum>> eight_term_templates(
    const std::vector<Chord>& hidden);

// A single template pair (1-based i); hidden is validated against this
// template's free positions only.
std::pair<DiagramSum, DiagramSum> eight_term_template(int i, const std::vector<Chord>& hidden);

// Free positions usable by hidden chords for template i (1-based).
std::vector<int> eight_term_free_positions(int i);

// Text format: comma-separated "p-q" pairs sorted ascending by first element
// ("0-3,1-4,2-5"); the empty diagram renders as "".  parse_diagram accepts
// arbitrary distinct labels ("0-6,2-8,4-10") and compacts them, and also a
// double-occurrence word over letters ("ABCABC"), chords numbered by first
// occurrence.  Throws std::invalid_argument on malformed input.
std::string render_diagram(const ChordDiagram& d);
ChordDiagram parse_diagram(std::string_view text);

}  // namespace glw
