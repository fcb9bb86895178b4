#pragma once

#include "glw/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace glw {

// The six families of diagonalizable indecomposable cyclic modules.
enum class ModuleKind { I, II, IIplus, IIminus, III0, III };

enum class ModuleParity { even, odd };

// A module symbol: kind plus its weights.  lambda is meaningful only for
// kind II, where it must be nonzero; gamma is carried by every kind.  parity
// (of the highest-weight vector) is tracked only where the square
// decompositions need it.
struct ModuleSymbol {
  ModuleKind kind;
  Rat lambda;  // 0 except for kind II
  Rat gamma;
  std::optional<ModuleParity> parity;

  static ModuleSymbol make_I(const Rat& gamma);
  static ModuleSymbol make_II(const Rat& lambda, const Rat& gamma);  // throws on lambda = 0
  static ModuleSymbol make_IIplus(const Rat& gamma);
  static ModuleSymbol make_IIminus(const Rat& gamma);
  static ModuleSymbol make_III0(const Rat& gamma);
  static ModuleSymbol make_III(const Rat& gamma);

  ModuleSymbol with_parity(ModuleParity p) const;
  ModuleSymbol without_parity() const;

  int dimension() const;  // I:1, II and II+-:2, III0:3, III:4

  bool operator==(const ModuleSymbol&) const = default;
  friend bool operator<(const ModuleSymbol& a, const ModuleSymbol& b);

  std::string text() const;  // "III_1", "II(l=1/2)_0", "II+_0", "III0_2^even"
};

// Formal nonnegative-integer combination of module symbols.
class ModuleSum {
public:
  ModuleSum() = default;
  explicit ModuleSum(const ModuleSymbol& m) { add(m, 1); }

  void add(const ModuleSymbol& m, const Int& multiplicity);
  const std::map<ModuleSymbol, Int>& terms() const { return terms_; }
  bool operator==(const ModuleSum&) const = default;
  ModuleSum& operator+=(const ModuleSum& rhs);

  Int total_dimension() const;
  std::string text() const;

private:
  std::map<ModuleSymbol, Int> terms_;
};

// The 16-case product table, symmetric in its arguments; parities are
// dropped.  Throws std::invalid_argument on a kind-II symbol with lambda 0.
ModuleSum tensor(const ModuleSymbol& a, const ModuleSymbol& b);
ModuleSum tensor(const ModuleSum& a, const ModuleSum& b);

// Parity-tracking product, defined for the III family only.
ModuleSum tensor_iii(const ModuleSymbol& a, const ModuleSymbol& b);

// 1 exactly for I_0, II+_0, II-_1, III_1, III0_0, and III0_2; else 0.
int inv_dim(const ModuleSymbol& m);
Int inv_dim(const ModuleSum& s);

// Decomposition of the n-th tensor power of the adjoint module III_1:
// sum over l = -n+2 .. n of C(2n-2, n-l) copies of III_l.
ModuleSum adjoint_power(int n);

// The same power computed by repeated table multiplication (cross-check).
ModuleSum adjoint_power_by_tensor(int n);

// (symmetric square, alternating square) of a parity-carrying III symbol:
//   alt  III_g^odd  = III_{2g}^even + III_{2g-2}^even
//   sym  III_g^odd  = 2 III_{2g-1}^odd
//   alt  III_g^even = 2 III_{2g-1}^odd
//   sym  III_g^even = III_{2g}^even + III_{2g-2}^even
// Throws std::invalid_argument for other kinds or a missing parity.
std::pair<ModuleSum, ModuleSum> sym_alt_square(const ModuleSymbol& m);

// Squares of a sum of parity-carrying III symbols, using
// S2(A + B) = S2 A + S2 B + A x B and its alternating twin.
std::pair<ModuleSum, ModuleSum> sym_alt_square(const ModuleSum& s);

}  // namespace glw
