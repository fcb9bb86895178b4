#include "glw/poly.hpp"

#include <sstream>

namespace glw {

WeightPoly WeightPoly::constant(Int k) {
  WeightPoly p;
  p.add_term(0, 0, k);
  return p;
}

WeightPoly WeightPoly::monomial(int c_exp, int y_exp, Int coeff) {
  WeightPoly p;
  p.add_term(c_exp, y_exp, coeff);
  return p;
}

Int WeightPoly::coefficient(int c_exp, int y_exp) const {
  auto it = terms_.find({c_exp, y_exp});
  return it == terms_.end() ? Int(0) : it->second;
}

void WeightPoly::add_term(int c_exp, int y_exp, const Int& coeff) {
  if (coeff == 0) return;
  Key key{c_exp, y_exp};
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) add_term(key.first, key.second, coeff);
  return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) add_term(key.first, key.second, -coeff);
  return *this;
}

WeightPoly operator*(const WeightPoly& lhs, const WeightPoly& rhs) {
  WeightPoly out;
  for (const auto& [ka, ca] : lhs.terms_)
    for (const auto& [kb, cb] : rhs.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

WeightPoly operator*(const Int& k, const WeightPoly& p) {
  WeightPoly out;
  for (const auto& [key, coeff] : p.terms()) out.add_term(key.first, key.second, k * coeff);
  return out;
}

Rat WeightPoly::eval(const Rat& c_val, const Rat& y_val) const {
  Rat total = 0;
  for (const auto& [key, coeff] : terms_) {
    Rat term(coeff);
    for (int i = 0; i < key.first; ++i) term *= c_val;
    for (int i = 0; i < key.second; ++i) term *= y_val;
    total += term;
  }
  return total;
}

WeightPoly WeightPoly::ddc() const {
  WeightPoly out;
  for (const auto& [key, coeff] : terms_)
    if (key.first > 0) out.add_term(key.first - 1, key.second, coeff * key.first);
  return out;
}

WeightPoly WeightPoly::at_c_zero() const {
  WeightPoly out;
  for (const auto& [key, coeff] : terms_)
    if (key.first == 0) out.add_term(0, key.second, coeff);
  return out;
}

bool WeightPoly::weighted_homogeneous(int n) const {
  for (const auto& [key, coeff] : terms_) {
    (void)coeff;
    if (key.first + 2 * key.second != n) return false;
  }
  return true;
}

namespace {

std::string monomial_text(int c_exp, int y_exp, const Int& abs_coeff) {
  std::ostringstream os;
  bool need_star = false;
  if (abs_coeff != 1 || (c_exp == 0 && y_exp == 0)) {
    os << abs_coeff.str();
    need_star = true;
  }
  if (c_exp > 0) {
    if (need_star) os << '*';
    os << 'c';
    if (c_exp > 1) os << '^' << c_exp;
    need_star = true;
  }
  if (y_exp > 0) {
    if (need_star) os << '*';
    os << 'y';
    if (y_exp > 1) os << '^' << y_exp;
  }
  return os.str();
}

}  // namespace

std::string WeightPoly::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    Int abs = coeff < 0 ? Int(-coeff) : coeff;
    if (first) {
      if (coeff < 0) os << '-';
      first = false;
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    os << monomial_text(key.first, key.second, abs);
  }
  return os.str();
}

std::string WeightPoly::json() const {
  std::ostringstream os;
  os << "{\"terms\":[";
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    if (!first) os << ',';
    first = false;
    os << "{\"c\":" << key.first << ",\"y\":" << key.second << ",\"k\":" << coeff.str() << '}';
  }
  os << "]}";
  return os.str();
}

}  // namespace glw
