#pragma once

#include "glw/diagrams.hpp"

#include <string>
#include <vector>

namespace glw {

// Boundary cycles of the orientable ribbon surface: a disk with one untwisted
// band per chord.  Arc i runs counterclockwise from endpoint i to endpoint
// i+1; the boundary leaves arc i and continues on the arc starting at
// partner(i+1).
struct SurfaceTrace {
  std::vector<std::vector<int>> cycles;  // arc indices; one empty cycle for the chordless disk
};

SurfaceTrace surface_trace(const ChordDiagram& d);

// Number of boundary circles of the surface; 1 for the empty diagram.
int boundary_components(const ChordDiagram& d);

// 1 if the surface has a single boundary circle, else 0.
int conway_weight(const ChordDiagram& d);

struct CalibrationResult {
  int sigma;  // the unique value in {+1,-1} matching the universal weight
  int max_order;
  long diagrams_checked;
  std::string report;
};

// Determine the unique sigma with conway_weight(D) = W(D) at (c=0, y=sigma)
// across every diagram of order <= max_order.  Throws std::invalid_argument
// for max_order < 4 and internal_error if zero or both candidates survive.
CalibrationResult calibrate_specialization(int max_order);

// Two-component criterion: removing `chord` must leave exactly two boundary
// circles with the chord's endpoints on different ones precisely when the
// diagram's weight is 1.  Returns whether prediction and weight agree.
bool lemma2_check(const ChordDiagram& d, const Chord& chord);

}  // namespace glw
