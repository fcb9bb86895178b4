#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glw/repring.hpp"

#include <stdexcept>
#include <vector>

using glw::Int;
using glw::ModuleKind;
using glw::ModuleParity;
using glw::ModuleSum;
using glw::ModuleSymbol;
using glw::Rat;

namespace {

ModuleSymbol I(const Rat& g) { return ModuleSymbol::make_I(g); }
ModuleSymbol II(const Rat& l, const Rat& g) { return ModuleSymbol::make_II(l, g); }
ModuleSymbol IIp(const Rat& g) { return ModuleSymbol::make_IIplus(g); }
ModuleSymbol IIm(const Rat& g) { return ModuleSymbol::make_IIminus(g); }
ModuleSymbol III0(const Rat& g) { return ModuleSymbol::make_III0(g); }
ModuleSymbol III(const Rat& g) { return ModuleSymbol::make_III(g); }

ModuleSum sum(std::vector<std::pair<ModuleSymbol, int>> parts) {
  ModuleSum s;
  for (const auto& [m, k] : parts) s.add(m, k);
  return s;
}

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

TEST_CASE("symbols know their dimensions") {
  CHECK(I(0).dimension() == 1);
  CHECK(II(Rat(1, 2), 0).dimension() == 2);
  CHECK(IIp(0).dimension() == 2);
  CHECK(IIm(0).dimension() == 2);
  CHECK(III0(0).dimension() == 3);
  CHECK(III(0).dimension() == 4);
}

TEST_CASE("a vanishing continuous weight is not a valid kind-II symbol") {
  CHECK_THROWS_AS(ModuleSymbol::make_II(0, 1), std::invalid_argument);
}

TEST_CASE("rendering") {
  CHECK(III(1).text() == "III_1");
  CHECK(IIp(0).text() == "II+_0");
  CHECK(II(Rat(1, 2), 0).text() == "II(l=1/2)_0");
  CHECK(III0(2).with_parity(ModuleParity::even).text() == "III0_2^even");
}

TEST_CASE("sums reject negative multiplicities and track dimension") {
  ModuleSum s;
  CHECK_THROWS_AS(s.add(III(0), -1), std::invalid_argument);
  s.add(III(0), 2);
  s.add(I(1), 1);
  CHECK(s.total_dimension() == 9);
}

TEST_CASE("products with the one-dimensional module shift the weight") {
  CHECK(tensor(I(2), III(1)) == ModuleSum(III(3)));
  CHECK(tensor(I(1), I(-1)) == ModuleSum(I(0)));
  CHECK(tensor(II(1, 0), I(3)) == ModuleSum(II(1, 3)));
}

TEST_CASE("products of the generic two-dimensional modules") {
  CHECK(tensor(II(1, 0), II(2, 1)) == sum({{II(3, 1), 1}, {II(3, 0), 1}}));
  // Opposite continuous weights collapse onto the four-dimensional module.
  CHECK(tensor(II(1, 0), II(-1, 2)) == ModuleSum(III(2)));
  CHECK(tensor(II(Rat(1, 2), 0), II(Rat(-1, 2), 0)) == ModuleSum(III(0)));
}

TEST_CASE("products with the degenerate two-dimensional modules") {
  CHECK(tensor(II(1, 1), IIp(2)) == sum({{II(1, 3), 1}, {II(1, 2), 1}}));
  CHECK(tensor(II(1, 1), IIm(2)) == sum({{II(1, 3), 1}, {II(1, 2), 1}}));
  CHECK(tensor(IIp(1), IIp(2)) == sum({{IIp(3), 1}, {IIp(2), 1}}));
  CHECK(tensor(IIm(0), IIm(0)) == sum({{IIm(0), 1}, {IIm(-1), 1}}));
  CHECK(tensor(IIp(1), IIm(2)) == ModuleSum(III(3)));
}

TEST_CASE("products with the three-dimensional module") {
  CHECK(tensor(II(2, 0), III0(1)) ==
        sum({{II(2, 1), 1}, {II(2, 0), 1}, {II(2, -1), 1}}));
  CHECK(tensor(IIp(0), III0(1)) == sum({{IIp(1), 1}, {III(0), 1}}));
  CHECK(tensor(IIm(0), III0(1)) == sum({{III(1), 1}, {IIm(-1), 1}}));
  // The self-product of the three-dimensional module is the one entry that
  // is not an honest direct sum: the actual tensor product is III_-1 plus a
  // five-dimensional indecomposable that falls outside the cyclic family.
  // The table records that remainder by its composition factors, regrouped
  // into cyclic symbols with the same character.
  CHECK(tensor(III0(0), III0(0)) ==
        sum({{IIp(0), 1}, {III0(-1), 1}, {I(-2), 2}, {IIm(-3), 1}}));
}

TEST_CASE("products with the four-dimensional module") {
  CHECK(tensor(II(1, 0), III(1)) ==
        sum({{II(1, 1), 1}, {II(1, 0), 2}, {II(1, -1), 1}}));
  CHECK(tensor(IIp(0), III(1)) == sum({{III(1), 1}, {III(0), 1}}));
  CHECK(tensor(IIm(0), III(1)) == sum({{III(1), 1}, {III(0), 1}}));
  // The three-by-four product: weights force one copy each of III_1, III_0,
  // III_-1 (the projective factor makes every summand a III).
  CHECK(tensor(III0(0), III(1)) ==
        sum({{III(1), 1}, {III(0), 1}, {III(-1), 1}}));
  CHECK(tensor(III(1), III(1)) == sum({{III(2), 1}, {III(1), 2}, {III(0), 1}}));
}

TEST_CASE("the product is symmetric and multiplies dimensions") {
  std::vector<ModuleSymbol> basket = {I(1),    II(Rat(1, 2), 0), II(Rat(-1, 2), 1),
                                      IIp(0),  IIm(1),           III0(0),
                                      III0(2), III(1),           III(-1)};
  for (const auto& a : basket)
    for (const auto& b : basket) {
      ModuleSum ab = tensor(a, b);
      CHECK(ab == tensor(b, a));
      CHECK(ab.total_dimension() == Int(a.dimension()) * b.dimension());
    }
}

// Every table row except III0 x III0 is the true direct-sum decomposition,
// so the product is exactly associative on the kinds closed under honest
// decomposition: I, II, II+, II-, III.  (III0 x III0 stands in for a product
// containing a non-cyclic indecomposable, which breaks summand-level
// associativity on triples that reassociate through it.)
TEST_CASE("the product is associative on the closed kinds") {
  std::vector<ModuleSymbol> basket = {I(1),    II(Rat(1, 2), 0),
                                      II(Rat(-1, 2), 1), II(1, -1),
                                      IIp(0),  IIm(1),
                                      III(1),  III(-2)};
  for (const auto& a : basket)
    for (const auto& b : basket)
      for (const auto& c : basket) {
        ModuleSum left = tensor(tensor(a, b), ModuleSum(c));
        ModuleSum right = tensor(ModuleSum(a), tensor(b, c));
        CHECK(left == right);
      }
}

namespace {

// Character of a symbol: multiset of (lambda, G-weight) lines.
std::map<std::pair<Rat, Rat>, long> character(const ModuleSymbol& m) {
  std::map<std::pair<Rat, Rat>, long> ch;
  auto line = [&](const Rat& g, long mult) { ch[{m.lambda, g}] += mult; };
  switch (m.kind) {
    case ModuleKind::I: line(m.gamma, 1); break;
    case ModuleKind::II:
    case ModuleKind::IIplus:
    case ModuleKind::IIminus:
      line(m.gamma, 1);
      line(m.gamma - 1, 1);
      break;
    case ModuleKind::III0:
      line(m.gamma, 1);
      line(m.gamma - 1, 1);
      line(m.gamma - 2, 1);
      break;
    case ModuleKind::III:
      line(m.gamma, 1);
      line(m.gamma - 1, 2);
      line(m.gamma - 2, 1);
      break;
  }
  return ch;
}

std::map<std::pair<Rat, Rat>, long> character(const ModuleSum& s) {
  std::map<std::pair<Rat, Rat>, long> ch;
  for (const auto& [m, k] : s.terms())
    for (const auto& [line, mult] : character(m))
      ch[line] += mult * static_cast<long>(k);
  return ch;
}

}  // namespace

// On all kinds, including III0, every row multiplies characters: the lines
// of a product are the pairwise sums of the factors' lines.  This is the
// level at which the III0 x III0 row is exact.
TEST_CASE("every product row multiplies characters") {
  std::vector<ModuleSymbol> basket = {I(1),    II(Rat(1, 2), 0), II(Rat(-1, 2), 1),
                                      IIp(0),  IIm(1),           III0(0),
                                      III0(2), III(1),           III(-1)};
  for (const auto& a : basket)
    for (const auto& b : basket) {
      std::map<std::pair<Rat, Rat>, long> expect;
      for (const auto& [la, ca] : character(a))
        for (const auto& [lb, cb] : character(b))
          expect[{la.first + lb.first, la.second + lb.second}] += ca * cb;
      CHECK(character(tensor(a, b)) == expect);
    }
}

TEST_CASE("invariant lines sit in exactly six symbols") {
  CHECK(glw::inv_dim(I(0)) == 1);
  CHECK(glw::inv_dim(IIp(0)) == 1);
  CHECK(glw::inv_dim(IIm(1)) == 1);
  CHECK(glw::inv_dim(III(1)) == 1);
  CHECK(glw::inv_dim(III0(0)) == 1);
  CHECK(glw::inv_dim(III0(2)) == 1);

  CHECK(glw::inv_dim(I(1)) == 0);
  CHECK(glw::inv_dim(II(1, 0)) == 0);
  CHECK(glw::inv_dim(IIp(1)) == 0);
  CHECK(glw::inv_dim(IIm(0)) == 0);
  CHECK(glw::inv_dim(III(0)) == 0);
  CHECK(glw::inv_dim(III0(1)) == 0);
}

TEST_CASE("powers of the adjoint module") {
  CHECK(glw::adjoint_power(1) == ModuleSum(III(1)));
  CHECK(glw::adjoint_power(2) == sum({{III(2), 1}, {III(1), 2}, {III(0), 1}}));

  for (int n = 1; n <= 5; ++n) {
    CHECK(glw::adjoint_power(n) == glw::adjoint_power_by_tensor(n));
    CHECK(glw::inv_dim(glw::adjoint_power(n)) == binom(2 * n - 2, n - 1));
    CHECK(glw::adjoint_power(n).total_dimension() == Int(1) << (2 * n));  // 4^n
  }
}

TEST_CASE("parity-tracking product of the four-dimensional family") {
  ModuleSymbol odd1 = III(1).with_parity(ModuleParity::odd);
  ModuleSum expect;
  expect.add(III(2).with_parity(ModuleParity::even), 1);
  expect.add(III(1).with_parity(ModuleParity::odd), 2);
  expect.add(III(0).with_parity(ModuleParity::even), 1);
  CHECK(glw::tensor_iii(odd1, odd1) == expect);

  ModuleSymbol even2 = III(2).with_parity(ModuleParity::even);
  ModuleSymbol even0 = III(0).with_parity(ModuleParity::even);
  ModuleSum expect2;
  expect2.add(III(2).with_parity(ModuleParity::even), 1);
  expect2.add(III(1).with_parity(ModuleParity::odd), 2);
  expect2.add(III(0).with_parity(ModuleParity::even), 1);
  CHECK(glw::tensor_iii(even2, even0) == expect2);
}

TEST_CASE("symmetric and alternating squares of one symbol") {
  ModuleSymbol odd = III(1).with_parity(ModuleParity::odd);
  auto [sym_odd, alt_odd] = glw::sym_alt_square(odd);
  CHECK(sym_odd == sum({{III(1).with_parity(ModuleParity::odd), 2}}));
  CHECK(alt_odd == sum({{III(2).with_parity(ModuleParity::even), 1},
                        {III(0).with_parity(ModuleParity::even), 1}}));

  ModuleSymbol even = III(2).with_parity(ModuleParity::even);
  auto [sym_even, alt_even] = glw::sym_alt_square(even);
  CHECK(sym_even == sum({{III(4).with_parity(ModuleParity::even), 1},
                         {III(2).with_parity(ModuleParity::even), 1}}));
  CHECK(alt_even == sum({{III(3).with_parity(ModuleParity::odd), 2}}));

  // The two squares of M together are M x M.
  ModuleSum both = sym_odd;
  both += alt_odd;
  CHECK(both == glw::tensor_iii(odd, odd));

  CHECK_THROWS_AS(glw::sym_alt_square(III(1)), std::invalid_argument);  // parity missing
  CHECK_THROWS_AS(glw::sym_alt_square(III0(0).with_parity(ModuleParity::even)),
                  std::invalid_argument);
}

TEST_CASE("the symmetric square of the alternating square of the adjoint") {
  ModuleSymbol adj = glw::ModuleSymbol::make_III(1).with_parity(ModuleParity::odd);
  auto [sym1, alt1] = glw::sym_alt_square(adj);
  (void)sym1;
  auto [sym2, alt2] = glw::sym_alt_square(alt1);
  (void)alt2;

  ModuleSum expect;
  expect.add(III(4).with_parity(ModuleParity::even), 1);
  expect.add(III(2).with_parity(ModuleParity::even), 2);
  expect.add(III(1).with_parity(ModuleParity::odd), 2);
  expect.add(III(0).with_parity(ModuleParity::even), 2);
  expect.add(III(-2).with_parity(ModuleParity::even), 1);
  CHECK(sym2 == expect);
  CHECK(glw::inv_dim(sym2) == 2);
}
