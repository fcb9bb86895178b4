#pragma once

#include "glw/diagrams.hpp"
#include "glw/poly.hpp"

#include <utility>

namespace glw {

// The universal weight: W(empty) = 1 and, for a pivot chord a crossed by
// chords b_1..b_k,
//   W(D) = c W(D_a) - y sum_i W(D_{a,i}) + y sum_{i<j} W(Lambda_{a,ij})
// where D_a drops a, D_{a,i} drops a and b_i, and Lambda is lambda_sum.
// Memoized process-wide on canonical forms; safe to call concurrently.
WeightPoly eval_weight(const ChordDiagram& d);

// Same value, computed by expanding the top level at the given pivot chord
// (which must cross something or be the only choice the recursion allows --
// any chord of d is permitted).  Bypasses the top-level cache entry so the
// pivot-independence property test actually recomputes.
WeightPoly eval_weight_with_pivot(const ChordDiagram& d, const Chord& pivot);

// Product of eval_weight over the crossing-components of d.
WeightPoly eval_weight_multiplicative(const ChordDiagram& d);

// W with c -> 0; the deframed (Alexander-Conway side) weight system.
WeightPoly deframe_by_substitution(const ChordDiagram& d);

// sum_k (-1)^k (1/k!) c^k W(s^k(D)), computed over rationals.  Asserts the
// result is integral and equals deframe_by_substitution (internal_error
// otherwise).
WeightPoly deframe_by_psi(const ChordDiagram& d);

// (coefficient of c^n, coefficient of c^{n-2} y); the first must be 1 and
// the second the negated crossing count, which tests enforce.
std::pair<Int, Int> coefficient_checks(const ChordDiagram& d);

// Drop all memoized values (test isolation only).
void clear_weight_cache();

}  // namespace glw
