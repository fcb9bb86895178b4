#include "glw/weights.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace glw {

namespace {

std::mutex cache_mutex;
std::map<ChordDiagram, WeightPoly>& cache() {
  static std::map<ChordDiagram, WeightPoly> c;
  return c;
}

// Fewest crossings, ties to the smallest endpoint (chords() is sorted).
Chord choose_pivot(const ChordDiagram& d) {
  Chord best{-1, -1};
  size_t best_crossings = std::numeric_limits<size_t>::max();
  for (const auto& c : d.chords()) {
    size_t k = crossings_of(d, c).size();
    if (k < best_crossings) {
      best_crossings = k;
      best = c;
    }
  }
  return best;
}

WeightPoly expand_at(const ChordDiagram& d, const Chord& a) {
  WeightPoly out = WeightPoly::monomial(1, 0, 1) * eval_weight(remove_chords(d, {a}));
  auto bs = crossings_of(d, a);
  WeightPoly y_part;
  for (size_t i = 0; i < bs.size(); ++i) {
    y_part -= eval_weight(remove_chords(d, {a, bs[i]}));
    for (size_t j = i + 1; j < bs.size(); ++j) {
      DiagramSum lam = lambda_sum(d, a, bs[i], bs[j]);
      for (const auto& [t, k] : lam.terms()) y_part += k * eval_weight(t);
    }
  }
  out += WeightPoly::monomial(0, 1, 1) * y_part;
  return out;
}

}  // namespace

WeightPoly eval_weight(const ChordDiagram& d0) {
  if (d0.order() == 0) return WeightPoly::constant(1);
  ChordDiagram d = canonicalize(d0);
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache().find(d);
    if (it != cache().end()) return it->second;
  }
  WeightPoly result = expand_at(d, choose_pivot(d));
  std::lock_guard lock(cache_mutex);
  return cache().emplace(std::move(d), std::move(result)).first->second;
}

WeightPoly eval_weight_with_pivot(const ChordDiagram& d, const Chord& pivot) {
  Chord a = pivot.first < pivot.second ? pivot : Chord{pivot.second, pivot.first};
  if (a.first < 0 || a.second >= d.points() || d.partner(a.first) != a.second)
    throw std::invalid_argument("pivot chord not present in diagram");
  if (d.order() == 0) return WeightPoly::constant(1);
  return expand_at(d, a);
}

WeightPoly eval_weight_multiplicative(const ChordDiagram& d) {
  WeightPoly out = WeightPoly::constant(1);
  for (const auto& factor : decompose(d)) out *= eval_weight(factor);
  return out;
}

WeightPoly deframe_by_substitution(const ChordDiagram& d) {
  return eval_weight(d).at_c_zero();
}

WeightPoly deframe_by_psi(const ChordDiagram& d) {
  std::map<WeightPoly::Key, Rat, std::greater<WeightPoly::Key>> acc;
  DiagramSum power;  // s^k applied to d, as a signed sum
  power.add(d, 1);
  Rat factorial = 1;
  for (int k = 0; k <= d.order(); ++k) {
    if (k > 0) {
      factorial *= k;
      power = s_operator(power);
    }
    Rat scale = Rat((k % 2) ? -1 : 1) / factorial;
    for (const auto& [t, mult] : power.terms()) {
      WeightPoly wt = eval_weight(t);
      for (const auto& [key, coeff] : wt.terms()) {
        Rat& slot = acc[{key.first + k, key.second}];  // the c^k factor
        slot += scale * Rat(mult * coeff);
      }
    }
  }
  WeightPoly out;
  for (const auto& [key, value] : acc) {
    Int k = rat_to_int(value, "deframed weight coefficient");
    if (k != 0) out.add_term(key.first, key.second, k);
  }
  if (out != deframe_by_substitution(d))
    throw internal_error("deframing sum disagrees with the c = 0 specialization");
  return out;
}

std::pair<Int, Int> coefficient_checks(const ChordDiagram& d) {
  WeightPoly w = eval_weight(d);
  int n = d.order();
  return {w.coefficient(n, 0), n >= 2 ? w.coefficient(n - 2, 1) : Int(0)};
}

void clear_weight_cache() {
  std::lock_guard lock(cache_mutex);
  cache().clear();
}

}  // namespace glw
