#pragma once

#include "glw/numeric.hpp"

#include <map>
#include <string>
#include <utility>

namespace glw {

// Element of Z[c,y], the value ring of the universal weight system.
// Invariants: no zero coefficient is ever stored, so equal polynomials have
// identical term maps.  For W(D) with D of order n every exponent pair (a,b)
// additionally satisfies a + 2b = n (c has weight 1, y has weight 2).
class WeightPoly {
public:
  // Iteration order doubles as rendering order: descending c-exponent,
  // then descending y-exponent.
  using Key = std::pair<int, int>;  // (c_exp, y_exp)
  using TermMap = std::map<Key, Int, std::greater<Key>>;

  WeightPoly() = default;  // zero polynomial

  static WeightPoly constant(Int k);
  static WeightPoly monomial(int c_exp, int y_exp, Int coeff);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Int coefficient(int c_exp, int y_exp) const;

  void add_term(int c_exp, int y_exp, const Int& coeff);

  WeightPoly& operator+=(const WeightPoly& rhs);
  WeightPoly& operator-=(const WeightPoly& rhs);
  friend WeightPoly operator+(WeightPoly lhs, const WeightPoly& rhs) { return lhs += rhs; }
  friend WeightPoly operator-(WeightPoly lhs, const WeightPoly& rhs) { return lhs -= rhs; }
  friend WeightPoly operator*(const WeightPoly& lhs, const WeightPoly& rhs);
  WeightPoly& operator*=(const WeightPoly& rhs) { return *this = *this * rhs; }
  friend WeightPoly operator*(const Int& k, const WeightPoly& p);
  bool operator==(const WeightPoly&) const = default;

  Rat eval(const Rat& c_val, const Rat& y_val) const;

  // Formal partial derivative in c.
  WeightPoly ddc() const;

  // The c -> 0 specialization (keeps only pure-y terms).
  WeightPoly at_c_zero() const;

  // True iff every stored (a,b) satisfies a + 2b == n.
  bool weighted_homogeneous(int n) const;

  // "c^5 - 4*c^3*y + 3*c*y^2"; "0" for the zero polynomial.
  std::string text() const;
  // {"terms":[{"c":5,"y":0,"k":1},...]} in the same term order.
  std::string json() const;

private:
  TermMap terms_;
};

}  // namespace glw
