#pragma once

#include "glw/diagrams.hpp"
#include "glw/poly.hpp"
#include "glw/superalg.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace glw {

// Element of the enveloping algebra in PBW normal order h < g < q+ < q-.
// For the super spec the q exponents never exceed 1 (q+- squares to zero);
// the bosonic spec has no such bound.
class UEAElement {
public:
  using Monomial = std::array<int, 4>;  // exponents of h, g, q+, q-

  static UEAElement one();
  static UEAElement generator(int basis_index);

  void add(const Monomial& m, const Rat& coeff);
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const UEAElement&) const = default;
  UEAElement& operator+=(const UEAElement& rhs);
  UEAElement& operator-=(const UEAElement& rhs);
  UEAElement& operator*=(const Rat& scalar);

  std::string text() const;

private:
  std::map<Monomial, Rat> terms_;
};

// Normal-ordered product, rewriting with the algebra's brackets: h central,
// q+-.g = g.q+- -+ q+-, and q-.q+ = h - q+.q- (super) or q+.q- - h (bosonic).
UEAElement pbw_multiply(const AlgebraSpec& alg, const UEAElement& a, const UEAElement& b);

// C^{(x)n} on slot pairs (0,1),(2,3),... for chords sorted by first endpoint,
// then koszul_permute sending those slots to the chords' actual endpoints.
SuperTensor diagram_tensor(const AlgebraSpec& alg, const ChordDiagram& d);

// Multiply each monomial's factors left to right; sum.
UEAElement project_to_uea(const AlgebraSpec& alg, const SuperTensor& t);

// Express z (the image of an order-n diagram tensor) exactly as
// sum_k a_k * c_u^{n-2k} * y_u^k with c_u, y_u the images of tensor_C and
// tensor_F; return sum_k a_k c^{n-2k} y^k.  Throws internal_error if the
// system is inconsistent or not unique or some a_k is not an integer.
WeightPoly center_to_cy(const AlgebraSpec& alg, const UEAElement& z, int n);

// center_to_cy . project_to_uea . diagram_tensor.
WeightPoly oracle_weight(const AlgebraSpec& alg, const ChordDiagram& d);

// True iff z supercommutes with every generator.
bool centrality_check(const AlgebraSpec& alg, const UEAElement& z);

struct IdentityCheck {
  std::string name;
  bool passed;
  std::string detail;  // empty when passed
};

// The fixed tensor identities: B = -2 HxH (+2 for bosonic), K = M/2, and
// invariance of C, F, B, K, M, N under every generator, for both specs;
// plus the enveloping-algebra images of C and F.
std::vector<IdentityCheck> tensor_identity_suite();

// Dimension of the space of invariant tensors of arity m (joint kernel of
// the four adjoint actions), by exact rank.
int invariant_dimension(const AlgebraSpec& alg, int m);

}  // namespace glw
