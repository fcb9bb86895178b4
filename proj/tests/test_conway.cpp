#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glw/conway.hpp"

#include "glw/diagrams.hpp"
#include "glw/poly.hpp"
#include "glw/weights.hpp"

#include <stdexcept>
#include <string>

using glw::boundary_components;
using glw::ChordDiagram;
using glw::conway_weight;
using glw::parse_diagram;

TEST_CASE("boundary circles of the ribbon surface, base cases") {
  CHECK(boundary_components(ChordDiagram()) == 1);  // the bare disk
  CHECK(boundary_components(parse_diagram("0-1")) == 2);
  CHECK(boundary_components(parse_diagram("0-2,1-3")) == 1);
  CHECK(boundary_components(parse_diagram("0-1,2-3")) == 3);
}

TEST_CASE("the surface trace visits every arc exactly once") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& d : glw::enumerate_diagrams(n)) {
      auto trace = glw::surface_trace(d);
      std::size_t visited = 0;
      for (const auto& cycle : trace.cycles) visited += cycle.size();
      CHECK(visited == static_cast<std::size_t>(d.points()));
    }
}

TEST_CASE("worked example: two boundary circles, weight zero") {
  ChordDiagram d = parse_diagram("0-6,2-10,4-8");
  CHECK(boundary_components(d) == 2);
  CHECK(conway_weight(d) == 0);
}

TEST_CASE("weight one exactly on single-boundary surfaces") {
  CHECK(conway_weight(parse_diagram("0-2,1-3")) == 1);
  CHECK(conway_weight(parse_diagram("0-1")) == 0);
  CHECK(conway_weight(ChordDiagram()) == 1);
}

TEST_CASE("boundary count has parity opposite to the order") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& d : glw::enumerate_diagrams(n))
      CHECK((boundary_components(d) + n) % 2 == 1);
}

TEST_CASE("two-component criterion agrees with the weight") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& d : glw::enumerate_diagrams(n))
      for (const auto& chord : d.chords()) {
        INFO(glw::render_diagram(d) << " chord " << chord.first << "-" << chord.second);
        CHECK(glw::lemma2_check(d, chord));
      }
  CHECK_THROWS_AS(glw::lemma2_check(parse_diagram("0-1"), glw::Chord{0, 2}),
                  std::invalid_argument);
}

TEST_CASE("calibration finds the unique specialization sign") {
  auto result = glw::calibrate_specialization(5);
  CHECK(result.sigma == -1);
  CHECK(result.max_order == 5);
  CHECK(result.diagrams_checked == 1 + 1 + 2 + 5 + 18 + 105);
  CHECK(result.report.find("y = -1") != std::string::npos);
  // The report shows why the other sign dies.
  CHECK(result.report.find("first fails") != std::string::npos);

  CHECK_THROWS_AS(glw::calibrate_specialization(3), std::invalid_argument);
}

TEST_CASE("the calibrated sign reproduces the weight on explicit diagrams") {
  // W(crossing) = c^2 - y evaluates to 1 at (c, y) = (0, -1): one boundary.
  CHECK(glw::eval_weight(parse_diagram("0-2,1-3")).eval(0, -1) == 1);
  // W(single chord) = c evaluates to 0: two boundaries.
  CHECK(glw::eval_weight(parse_diagram("0-1")).eval(0, -1) == 0);
  // Worked example has weight zero.
  CHECK(glw::eval_weight(parse_diagram("0-6,2-10,4-8")).eval(0, -1) == 0);
}
