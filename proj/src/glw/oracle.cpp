#include "glw/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace glw {

UEAElement UEAElement::one() {
  UEAElement e;
  e.add({0, 0, 0, 0}, 1);
  return e;
}

UEAElement UEAElement::generator(int basis_index) {
  if (basis_index < 0 || basis_index > 3) throw std::invalid_argument("basis index must be 0..3");
  Monomial m{0, 0, 0, 0};
  m[basis_index] = 1;
  UEAElement e;
  e.add(m, 1);
  return e;
}

void UEAElement::add(const Monomial& m, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& rhs) {
  for (const auto& [m, k] : rhs.terms_) add(m, k);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& rhs) {
  for (const auto& [m, k] : rhs.terms_) add(m, -k);
  return *this;
}

UEAElement& UEAElement::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, k] : terms_) k *= scalar;
  return *this;
}

std::string UEAElement::text() const {
  if (terms_.empty()) return "0";
  static const char* names[4] = {"h", "g", "q+", "q-"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, k] : terms_) {
    Rat abs = k < 0 ? Rat(-k) : k;
    os << (k < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool constant = m == Monomial{0, 0, 0, 0};
    bool printed = false;
    if (abs != 1 || constant) {
      os << abs.str();
      printed = true;
    }
    for (int i = 0; i < 4; ++i) {
      if (m[i] == 0) continue;
      if (printed) os << '*';
      printed = true;
      os << names[i];
      if (m[i] > 1) os << '^' << m[i];
    }
  }
  return os.str();
}

namespace {

void accumulate(std::map<UEAElement::Monomial, Rat>& out, const UEAElement::Monomial& m,
                const Rat& coeff) {
  auto [it, inserted] = out.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) out.erase(it);
  }
}

// Rewrite a generator word into PBW normal order.  At the first out-of-order
// adjacent pair, x.y = (-1)^{|x||y|} y.x + [x,y]; an adjacent odd square is
// [x,x]/2 (zero for both fixed specs).
void straighten(const AlgebraSpec& alg, const std::vector<int>& word, const Rat& coeff,
                std::map<UEAElement::Monomial, Rat>& out) {
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    int x = word[i], y = word[i + 1];
    if (x < y || (x == y && !alg.parity[x])) continue;

    auto contracted = [&](int m) {
      std::vector<int> w;
      w.reserve(word.size() - 1);
      w.insert(w.end(), word.begin(), word.begin() + i);
      w.push_back(m);
      w.insert(w.end(), word.begin() + i + 2, word.end());
      return w;
    };
    if (x == y) {
      for (int m = 0; m < 4; ++m)
        if (alg.f[x][x][m] != 0) straighten(alg, contracted(m), coeff * alg.f[x][x][m] / 2, out);
      return;
    }
    std::vector<int> swapped = word;
    std::swap(swapped[i], swapped[i + 1]);
    straighten(alg, swapped, (alg.parity[x] && alg.parity[y]) ? Rat(-coeff) : coeff, out);
    for (int m = 0; m < 4; ++m)
      if (alg.f[x][y][m] != 0) straighten(alg, contracted(m), coeff * alg.f[x][y][m], out);
    return;
  }
  UEAElement::Monomial mono{0, 0, 0, 0};
  for (int g : word) ++mono[g];
  accumulate(out, mono, coeff);
}

UEAElement from_map(std::map<UEAElement::Monomial, Rat>&& terms) {
  UEAElement e;
  for (const auto& [m, k] : terms) e.add(m, k);
  return e;
}

void push_factors(std::vector<int>& word, const UEAElement::Monomial& m, bool include_h) {
  if (include_h)
    for (int rep = 0; rep < m[0]; ++rep) word.push_back(kH);
  for (int rep = 0; rep < m[1]; ++rep) word.push_back(kG);
  for (int rep = 0; rep < m[2]; ++rep) word.push_back(kQp);
  for (int rep = 0; rep < m[3]; ++rep) word.push_back(kQm);
}

int monomial_parity(const AlgebraSpec& alg, const UEAElement::Monomial& m) {
  return (alg.parity[kQp] * m[2] + alg.parity[kQm] * m[3]) & 1;
}

}  // namespace

UEAElement pbw_multiply(const AlgebraSpec& alg, const UEAElement& a, const UEAElement& b) {
  std::map<UEAElement::Monomial, Rat> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // h is central: strip it from the word and restore the exponent after.
      std::vector<int> word;
      push_factors(word, ma, false);
      push_factors(word, mb, false);
      std::map<UEAElement::Monomial, Rat> local;
      straighten(alg, word, ca * cb, local);
      for (const auto& [m, k] : local) {
        UEAElement::Monomial shifted = m;
        shifted[0] += ma[0] + mb[0];
        accumulate(acc, shifted, k);
      }
    }
  }
  return from_map(std::move(acc));
}

SuperTensor diagram_tensor(const AlgebraSpec& alg, const ChordDiagram& d) {
  SuperTensor t(0);
  t.add({}, 1);
  SuperTensor c = tensor_C(alg);
  for (int r = 0; r < d.order(); ++r) t = tensor_product(t, c);
  std::vector<int> pos_of_slot;
  for (const auto& [p, q] : d.chords()) {
    pos_of_slot.push_back(p);
    pos_of_slot.push_back(q);
  }
  return koszul_permute(alg, t, pos_of_slot);
}

UEAElement project_to_uea(const AlgebraSpec& alg, const SuperTensor& t) {
  std::map<UEAElement::Monomial, Rat> acc;
  for (const auto& [w, k] : t.terms()) straighten(alg, w, k, acc);
  return from_map(std::move(acc));
}

namespace {

// Exact Gauss-Jordan solve of A x = b requiring a unique solution and full
// consistency; A is rows x cols with rows >= rank = cols.
std::vector<Rat> solve_unique(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<size_t> pivot_row(cols);
  size_t next = 0;
  for (size_t c = 0; c < cols; ++c) {
    size_t p = next;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) throw internal_error("center decomposition is underdetermined");
    std::swap(a[p], a[next]);
    std::swap(b[p], b[next]);
    Rat lead = a[next][c];
    for (size_t j = c; j < cols; ++j) a[next][j] /= lead;
    b[next] /= lead;
    for (size_t r = 0; r < rows; ++r) {
      if (r == next || a[r][c] == 0) continue;
      Rat factor = a[r][c];
      for (size_t j = c; j < cols; ++j) a[r][j] -= factor * a[next][j];
      b[r] -= factor * b[next];
    }
    pivot_row[c] = next;
    ++next;
  }
  for (size_t r = next; r < rows; ++r)
    if (b[r] != 0) throw internal_error("element is outside the c,y subalgebra");
  std::vector<Rat> x(cols);
  for (size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]];
  return x;
}

}  // namespace

WeightPoly center_to_cy(const AlgebraSpec& alg, const UEAElement& z, int n) {
  if (n < 0) throw std::invalid_argument("order must be non-negative");
  UEAElement c_u = project_to_uea(alg, tensor_C(alg));
  UEAElement y_u = project_to_uea(alg, tensor_F(alg));

  int kmax = n / 2;
  std::vector<UEAElement> cpow(n + 1), ypow(kmax + 1);
  cpow[0] = UEAElement::one();
  for (int e = 1; e <= n; ++e) cpow[e] = pbw_multiply(alg, cpow[e - 1], c_u);
  ypow[0] = UEAElement::one();
  for (int e = 1; e <= kmax; ++e) ypow[e] = pbw_multiply(alg, ypow[e - 1], y_u);

  std::vector<UEAElement> basis;
  for (int k = 0; k <= kmax; ++k) basis.push_back(pbw_multiply(alg, cpow[n - 2 * k], ypow[k]));

  std::set<UEAElement::Monomial> monos;
  for (const auto& [m, k] : z.terms()) monos.insert(m);
  for (const auto& e : basis)
    for (const auto& [m, k] : e.terms()) monos.insert(m);

  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (const auto& m : monos) {
    std::vector<Rat> row(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
      auto it = basis[k].terms().find(m);
      if (it != basis[k].terms().end()) row[k] = it->second;
    }
    a.push_back(std::move(row));
    auto it = z.terms().find(m);
    b.push_back(it == z.terms().end() ? Rat(0) : it->second);
  }

  std::vector<Rat> coeffs = solve_unique(std::move(a), std::move(b));
  WeightPoly out;
  for (int k = 0; k <= kmax; ++k) {
    Int ak = rat_to_int(coeffs[k], "center decomposition coefficient");
    if (ak != 0) out.add_term(n - 2 * k, k, ak);
  }
  return out;
}

WeightPoly oracle_weight(const AlgebraSpec& alg, const ChordDiagram& d) {
  UEAElement z = project_to_uea(alg, diagram_tensor(alg, d));
  return center_to_cy(alg, z, d.order());
}

bool centrality_check(const AlgebraSpec& alg, const UEAElement& z) {
  for (int x = 0; x < 4; ++x) {
    UEAElement gen = UEAElement::generator(x);
    UEAElement comm = pbw_multiply(alg, gen, z);
    for (const auto& [m, k] : z.terms()) {
      UEAElement mono;
      mono.add(m, k);
      UEAElement right = pbw_multiply(alg, mono, gen);
      if (alg.parity[x] && monomial_parity(alg, m))
        comm += right;
      else
        comm -= right;
    }
    if (!comm.is_zero()) return false;
  }
  return true;
}

namespace {

SuperTensor h_square(const Rat& coeff) {
  SuperTensor t(2);
  t.add({kH, kH}, coeff);
  return t;
}

}  // namespace

std::vector<IdentityCheck> tensor_identity_suite() {
  std::vector<IdentityCheck> out;
  auto check = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  };

  for (const AlgebraSpec* alg : {&AlgebraSpec::gl11(), &AlgebraSpec::bosonic()}) {
    const std::string tag = " (" + alg->name + ")";
    SuperTensor b = tensor_B(*alg);
    SuperTensor expected_b = h_square(alg->name == "bosonic" ? 2 : -2);
    check("bubble B = " + std::string(alg->name == "bosonic" ? "+2" : "-2") + " HxH" + tag,
          b == expected_b, "B = " + b.text());

    SuperTensor k2 = tensor_K(*alg);
    k2 *= 2;
    SuperTensor m = tensor_M(*alg);
    if (alg->name == "gl11")
      check("2K = M" + tag, k2 == m, "2K = " + k2.text() + "; M = " + m.text());

    const std::pair<const char*, SuperTensor> tensors[] = {
        {"C", tensor_C(*alg)}, {"F", tensor_F(*alg)}, {"B", b},
        {"K", tensor_K(*alg)}, {"M", m},              {"N", tensor_N(*alg)},
    };
    for (const auto& [name, t] : tensors)
      check(std::string(name) + " invariant" + tag, is_invariant(*alg, t),
            std::string(name) + " is not annihilated by every generator");
  }

  const AlgebraSpec& gl = AlgebraSpec::gl11();
  UEAElement c_u = project_to_uea(gl, tensor_C(gl));
  UEAElement c_expect;
  c_expect.add({1, 1, 0, 0}, 2);
  c_expect.add({1, 0, 0, 0}, 1);
  c_expect.add({0, 0, 1, 1}, -2);
  check("image of C = 2hg + h - 2q+q- (gl11)", c_u == c_expect, "got " + c_u.text());

  UEAElement y_u = project_to_uea(gl, tensor_F(gl));
  UEAElement y_expect;
  y_expect.add({2, 0, 0, 0}, -1);
  check("image of F = -h^2 (gl11)", y_u == y_expect, "got " + y_u.text());

  return out;
}

int invariant_dimension(const AlgebraSpec& alg, int m) {
  if (m < 0) throw std::invalid_argument("tensor power must be non-negative");
  long dim = 1;
  for (int i = 0; i < m; ++i) dim *= 4;

  // Rank of the stacked adjoint operators, one sparse row per basis word
  // (rows of the transpose; rank is the same).
  std::map<long, std::map<long, Rat>> pivots;
  int rank = 0;
  std::vector<int> w(m);
  for (long v = 0; v < dim; ++v) {
    long t = v;
    for (int i = m - 1; i >= 0; --i) {
      w[i] = static_cast<int>(t & 3);
      t >>= 2;
    }
    std::map<long, Rat> row;
    for (int x = 0; x < 4; ++x) {
      int before = 0;
      long stride = dim / 4;
      long base = v;
      for (int i = 0; i < m; ++i, stride /= 4) {
        int sign = (alg.parity[x] && (before & 1)) ? -1 : 1;
        for (int target = 0; target < 4; ++target) {
          const Rat& c = alg.f[x][w[i]][target];
          if (c == 0) continue;
          long u = base + (target - w[i]) * stride;
          auto [it, inserted] = row.emplace(x * dim + u, sign > 0 ? c : Rat(-c));
          if (!inserted) {
            it->second += sign > 0 ? c : Rat(-c);
            if (it->second == 0) row.erase(it);
          }
        }
        before += alg.parity[w[i]];
      }
    }
    while (!row.empty()) {
      long lead_col = row.begin()->first;
      Rat lead = row.begin()->second;
      auto p = pivots.find(lead_col);
      if (p == pivots.end()) {
        for (auto& [cc, vv] : row) vv /= lead;
        pivots.emplace(lead_col, std::move(row));
        ++rank;
        break;
      }
      for (const auto& [cc, vv] : p->second) {
        auto [it, inserted] = row.emplace(cc, -lead * vv);
        if (!inserted) {
          it->second -= lead * vv;
          if (it->second == 0) row.erase(it);
        }
      }
    }
  }
  return static_cast<int>(dim) - rank;
}

}  // namespace glw
