#pragma once

#include "glw/numeric.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace glw {

// Basis indices, in PBW order.
inline constexpr int kH = 0;
inline constexpr int kG = 1;
inline constexpr int kQp = 2;
inline constexpr int kQm = 3;

const char* basis_name(int index);  // "H", "G", "Q+", "Q-"

// A four-dimensional algebra given by structure constants, parities, and an
// invariant metric with its dual.  Only three fixed instances exist.
struct AlgebraSpec {
  std::string name;
  std::array<int, 4> parity;                           // 0 even, 1 odd
  std::array<std::array<std::array<Rat, 4>, 4>, 4> f;  // [e_i,e_j] = sum_k f[i][j][k] e_k
  std::array<std::array<Rat, 4>, 4> metric;            // <e_i, e_j>
  std::array<std::array<Rat, 4>, 4> dual;              // metric * dual = identity

  int word_parity(const std::vector<int>& word) const;

  // H, G even and Q+, Q- odd; [G,Q+/-] = +/-Q+/-, [Q+,Q-] = [Q-,Q+] = H;
  // metric <H,G> = 1, <Q+,Q-> = 1 = -<Q-,Q+>, <G,G> = 0.
  static const AlgebraSpec& gl11();

  // Same brackets read as an ordinary Lie algebra (all generators even, so
  // [Q-,Q+] = -H) with the symmetric metric <Q+,Q-> = <Q-,Q+> = 1.
  static const AlgebraSpec& bosonic();

  // gl11 with the supertrace metric (all listed products -1).  Exposed for
  // documentation tests only; no computation path uses it.
  static const AlgebraSpec& gl11_supertrace();
};

// Sparse element of the arity-fold tensor power of the algebra's span.
class SuperTensor {
public:
  using Word = std::vector<int>;

  explicit SuperTensor(int arity = 0) : arity_(arity) {}

  int arity() const { return arity_; }
  void add(const Word& word, const Rat& coeff);
  const std::map<Word, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const SuperTensor&) const = default;
  SuperTensor& operator+=(const SuperTensor& rhs);
  SuperTensor& operator-=(const SuperTensor& rhs);
  SuperTensor& operator*=(const Rat& scalar);

  std::string text() const;

private:
  int arity_;
  std::map<Word, Rat> terms_;
};

SuperTensor tensor_product(const SuperTensor& a, const SuperTensor& b);

// Reorder factors, factor i moving to position pos_of_slot[i]; each
// transposition of two odd factors contributes a -1.  Throws
// std::invalid_argument unless pos_of_slot is a permutation of 0..arity-1.
SuperTensor koszul_permute(const AlgebraSpec& alg, const SuperTensor& t,
                           const std::vector<int>& pos_of_slot);

// sum_i (-1)^{|x| * (parity of factors before i)} v_1 x ... x [e_x, v_i] x ... x v_m.
SuperTensor adjoint_action(const AlgebraSpec& alg, int x, const SuperTensor& t);

// True iff adjoint_action by every generator vanishes.
bool is_invariant(const AlgebraSpec& alg, const SuperTensor& t);

// Bracket factors (slot, slot+1) into one factor; f is an even map, so
// contracting adjacent slots needs no sign.
SuperTensor contract_adjacent(const AlgebraSpec& alg, const SuperTensor& t, int slot);

// C = sum C^{ij} e_i x e_j, the dual-metric 2-tensor.
SuperTensor tensor_C(const AlgebraSpec& alg);

// F = sum f_{lm}^i C^{mj} C^{lk} over slots (i,j,k): bracket the middle
// factors of C x C.  Invariant; its enveloping-algebra image defines y.
SuperTensor tensor_F(const AlgebraSpec& alg);

// B = bracket of F's first two factors; -2 HxH here, +2 HxH for bosonic.
SuperTensor tensor_B(const AlgebraSpec& alg);

// K = C^{im} C^{np} C^{ql} f_{mn}^j f_{pq}^k on slots (i,j,k,l).
SuperTensor tensor_K(const AlgebraSpec& alg);

// M = B13 C24 + C13 B24 - C14 B23 - B14 C23, subscripts giving each
// 2-tensor's target positions (1-based), placed with Koszul signs.
SuperTensor tensor_M(const AlgebraSpec& alg);

// N = C13 C24 - C14 C23, placed with Koszul signs.
SuperTensor tensor_N(const AlgebraSpec& alg);

}  // namespace glw
