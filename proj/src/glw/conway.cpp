#include "glw/conway.hpp"

#include "glw/weights.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace glw {

SurfaceTrace surface_trace(const ChordDiagram& d) {
  SurfaceTrace out;
  int m = d.points();
  if (m == 0) {
    out.cycles.push_back({});  // the disk's one boundary circle
    return out;
  }
  std::vector<bool> seen(m, false);
  for (int start = 0; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int arc = start;
    do {
      seen[arc] = true;
      cycle.push_back(arc);
      arc = d.partner((arc + 1) % m);
    } while (arc != start);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

int boundary_components(const ChordDiagram& d) {
  return static_cast<int>(surface_trace(d).cycles.size());
}

int conway_weight(const ChordDiagram& d) { return boundary_components(d) == 1 ? 1 : 0; }

CalibrationResult calibrate_specialization(int max_order) {
  if (max_order < 4) throw std::invalid_argument("calibration needs max_order >= 4");
  struct Candidate {
    int sigma;
    bool ok = true;
    std::string witness;  // first mismatching diagram, with both values
  };
  Candidate cand[2] = {{+1, true, ""}, {-1, true, ""}};
  long checked = 0;
  for (int n = 0; n <= max_order; ++n) {
    for (const auto& d : enumerate_diagrams(n)) {
      ++checked;
      int nabla = conway_weight(d);
      WeightPoly w = eval_weight(d);
      for (auto& c : cand) {
        if (!c.ok) continue;
        Rat value = w.eval(0, c.sigma);
        if (value != nabla) {
          c.ok = false;
          std::ostringstream os;
          os << "(" << render_diagram(d) << "): boundary count gives " << nabla
             << ", specialization gives " << value.str();
          c.witness = os.str();
        }
      }
    }
  }
  if (cand[0].ok == cand[1].ok)
    throw internal_error(cand[0].ok ? "both specialization signs match every diagram"
                                    : "no specialization sign matches every diagram");
  const Candidate& good = cand[0].ok ? cand[0] : cand[1];
  const Candidate& bad = cand[0].ok ? cand[1] : cand[0];
  std::ostringstream os;
  os << "nabla(D) = W(D) at (c = 0, y = " << (good.sigma > 0 ? "+1" : "-1") << ") for all "
     << checked << " diagrams of order <= " << max_order << "; y = "
     << (bad.sigma > 0 ? "+1" : "-1") << " first fails at " << bad.witness;
  return {good.sigma, max_order, checked, os.str()};
}

bool lemma2_check(const ChordDiagram& d, const Chord& chord) {
  Chord ch = chord.first < chord.second ? chord : Chord{chord.second, chord.first};
  if (ch.first < 0 || ch.second >= d.points() || d.partner(ch.first) != ch.second)
    throw std::invalid_argument("chord not present in diagram");

  bool actual = conway_weight(d) == 1;
  ChordDiagram rest = remove_chords(d, {ch});
  bool predicted = false;
  if (rest.points() > 0) {
    SurfaceTrace trace = surface_trace(rest);
    if (trace.cycles.size() == 2) {
      // Arc of `rest` that held original endpoint p: the one starting at the
      // relabeled predecessor of p.
      auto arc_of = [&](int p) {
        int before = 0;
        for (int e = 0; e < d.points(); ++e)
          if (e != ch.first && e != ch.second && e < p) ++before;
        int arcs = rest.points();
        return (before - 1 + arcs) % arcs;
      };
      auto component_of = [&](int arc) {
        for (size_t i = 0; i < trace.cycles.size(); ++i) {
          const auto& cycle = trace.cycles[i];
          if (std::find(cycle.begin(), cycle.end(), arc) != cycle.end())
            return static_cast<int>(i);
        }
        throw internal_error("arc missing from boundary trace");
      };
      predicted = component_of(arc_of(ch.first)) != component_of(arc_of(ch.second));
    }
  }
  return predicted == actual;
}

}  // namespace glw
