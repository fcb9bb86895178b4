#include "glw/superalg.hpp"

#include <sstream>
#include <stdexcept>

namespace glw {

const char* basis_name(int index) {
  switch (index) {
    case kH: return "H";
    case kG: return "G";
    case kQp: return "Q+";
    case kQm: return "Q-";
  }
  throw std::invalid_argument("basis index must be 0..3");
}

int AlgebraSpec::word_parity(const std::vector<int>& word) const {
  int p = 0;
  for (int i : word) p ^= parity[i];
  return p;
}

namespace {

AlgebraSpec make_gl11_brackets() {
  AlgebraSpec a;
  a.parity = {0, 0, 1, 1};
  a.f[kG][kQp][kQp] = 1;
  a.f[kQp][kG][kQp] = -1;
  a.f[kG][kQm][kQm] = -1;
  a.f[kQm][kG][kQm] = 1;
  a.f[kQp][kQm][kH] = 1;
  a.f[kQm][kQp][kH] = 1;  // odd-odd bracket is symmetric
  return a;
}

void invert_metric(AlgebraSpec& a) {
  // The metric is block 2x2: (H,G) and (Q+,Q-).
  auto invert_block = [&](int i, int j) {
    Rat det = a.metric[i][i] * a.metric[j][j] - a.metric[i][j] * a.metric[j][i];
    if (det == 0) throw internal_error("metric block is singular");
    a.dual[i][i] = a.metric[j][j] / det;
    a.dual[j][j] = a.metric[i][i] / det;
    a.dual[i][j] = -a.metric[i][j] / det;
    a.dual[j][i] = -a.metric[j][i] / det;
  };
  invert_block(kH, kG);
  invert_block(kQp, kQm);
}

}  // namespace

const AlgebraSpec& AlgebraSpec::gl11() {
  static const AlgebraSpec spec = [] {
    AlgebraSpec a = make_gl11_brackets();
    a.name = "gl11";
    a.metric[kH][kG] = a.metric[kG][kH] = 1;
    a.metric[kQp][kQm] = 1;
    a.metric[kQm][kQp] = -1;
    invert_metric(a);
    return a;
  }();
  return spec;
}

const AlgebraSpec& AlgebraSpec::bosonic() {
  static const AlgebraSpec spec = [] {
    AlgebraSpec a = make_gl11_brackets();
    a.name = "bosonic";
    a.parity = {0, 0, 0, 0};
    a.f[kQm][kQp][kH] = -1;  // all-even bracket is antisymmetric
    a.metric[kH][kG] = a.metric[kG][kH] = 1;
    a.metric[kQp][kQm] = a.metric[kQm][kQp] = 1;
    invert_metric(a);
    return a;
  }();
  return spec;
}

const AlgebraSpec& AlgebraSpec::gl11_supertrace() {
  static const AlgebraSpec spec = [] {
    AlgebraSpec a = make_gl11_brackets();
    a.name = "gl11_supertrace";
    a.metric[kH][kG] = a.metric[kG][kH] = -1;
    a.metric[kG][kG] = -1;
    a.metric[kQp][kQm] = -1;
    a.metric[kQm][kQp] = 1;
    invert_metric(a);
    return a;
  }();
  return spec;
}

void SuperTensor::add(const Word& word, const Rat& coeff) {
  if (static_cast<int>(word.size()) != arity_)
    throw std::invalid_argument("tensor term arity mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SuperTensor& SuperTensor::operator+=(const SuperTensor& rhs) {
  if (rhs.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
  for (const auto& [w, k] : rhs.terms_) add(w, k);
  return *this;
}

SuperTensor& SuperTensor::operator-=(const SuperTensor& rhs) {
  if (rhs.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
  for (const auto& [w, k] : rhs.terms_) add(w, -k);
  return *this;
}

SuperTensor& SuperTensor::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, k] : terms_) k *= scalar;
  return *this;
}

std::string SuperTensor::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, k] : terms_) {
    Rat abs = k < 0 ? Rat(-k) : k;
    os << (k < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    if (abs != 1 || w.empty()) os << abs.str();
    for (size_t i = 0; i < w.size(); ++i) {
      if (i > 0 || abs != 1) os << '*';
      os << basis_name(w[i]);
    }
  }
  return os.str();
}

SuperTensor tensor_product(const SuperTensor& a, const SuperTensor& b) {
  SuperTensor out(a.arity() + b.arity());
  for (const auto& [wa, ka] : a.terms())
    for (const auto& [wb, kb] : b.terms()) {
      SuperTensor::Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ka * kb);
    }
  return out;
}

SuperTensor koszul_permute(const AlgebraSpec& alg, const SuperTensor& t,
                           const std::vector<int>& pos_of_slot) {
  int m = t.arity();
  if (static_cast<int>(pos_of_slot.size()) != m)
    throw std::invalid_argument("permutation size does not match tensor arity");
  std::vector<bool> seen(m, false);
  for (int p : pos_of_slot) {
    if (p < 0 || p >= m || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  SuperTensor out(m);
  for (const auto& [w, k] : t.terms()) {
    int sign = 1;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (pos_of_slot[i] > pos_of_slot[j] && alg.parity[w[i]] && alg.parity[w[j]]) sign = -sign;
    SuperTensor::Word nw(m);
    for (int i = 0; i < m; ++i) nw[pos_of_slot[i]] = w[i];
    out.add(nw, sign > 0 ? k : -k);
  }
  return out;
}

SuperTensor adjoint_action(const AlgebraSpec& alg, int x, const SuperTensor& t) {
  SuperTensor out(t.arity());
  for (const auto& [w, k] : t.terms()) {
    int before = 0;  // parity of factors to the left
    for (int i = 0; i < t.arity(); ++i) {
      int sign = (alg.parity[x] && (before & 1)) ? -1 : 1;
      for (int m = 0; m < 4; ++m) {
        const Rat& c = alg.f[x][w[i]][m];
        if (c == 0) continue;
        SuperTensor::Word nw = w;
        nw[i] = m;
        out.add(nw, k * c * sign);
      }
      before += alg.parity[w[i]];
    }
  }
  return out;
}

bool is_invariant(const AlgebraSpec& alg, const SuperTensor& t) {
  for (int x = 0; x < 4; ++x)
    if (!adjoint_action(alg, x, t).is_zero()) return false;
  return true;
}

SuperTensor contract_adjacent(const AlgebraSpec& alg, const SuperTensor& t, int slot) {
  if (slot < 0 || slot + 1 >= t.arity())
    throw std::invalid_argument("contraction slot out of range");
  SuperTensor out(t.arity() - 1);
  for (const auto& [w, k] : t.terms()) {
    for (int m = 0; m < 4; ++m) {
      const Rat& c = alg.f[w[slot]][w[slot + 1]][m];
      if (c == 0) continue;
      SuperTensor::Word nw;
      nw.reserve(w.size() - 1);
      nw.insert(nw.end(), w.begin(), w.begin() + slot);
      nw.push_back(m);
      nw.insert(nw.end(), w.begin() + slot + 2, w.end());
      out.add(nw, k * c);
    }
  }
  return out;
}

SuperTensor tensor_C(const AlgebraSpec& alg) {
  SuperTensor out(2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (alg.dual[i][j] != 0) out.add({i, j}, alg.dual[i][j]);
  return out;
}

SuperTensor tensor_F(const AlgebraSpec& alg) {
  SuperTensor c = tensor_C(alg);
  return contract_adjacent(alg, tensor_product(c, c), 1);
}

SuperTensor tensor_B(const AlgebraSpec& alg) {
  return contract_adjacent(alg, tensor_F(alg), 0);
}

SuperTensor tensor_K(const AlgebraSpec& alg) {
  SuperTensor c = tensor_C(alg);
  SuperTensor ccc = tensor_product(tensor_product(c, c), c);
  return contract_adjacent(alg, contract_adjacent(alg, ccc, 3), 1);
}

namespace {

// X into positions pos1-1, pos3-1 and Y into pos2-1, pos4-1 (1-based names).
SuperTensor place_pair(const AlgebraSpec& alg, const SuperTensor& x, const SuperTensor& y,
                       const std::vector<int>& pos_of_slot) {
  return koszul_permute(alg, tensor_product(x, y), pos_of_slot);
}

}  // namespace

SuperTensor tensor_M(const AlgebraSpec& alg) {
  SuperTensor b = tensor_B(alg);
  SuperTensor c = tensor_C(alg);
  const std::vector<int> p1324{0, 2, 1, 3};  // first pair to slots 1,3; second to 2,4
  const std::vector<int> p1423{0, 3, 1, 2};  // first pair to slots 1,4; second to 2,3
  SuperTensor out(4);
  out += place_pair(alg, b, c, p1324);  // B13 C24
  out += place_pair(alg, c, b, p1324);  // C13 B24
  out -= place_pair(alg, c, b, p1423);  // C14 B23
  out -= place_pair(alg, b, c, p1423);  // B14 C23
  return out;
}

SuperTensor tensor_N(const AlgebraSpec& alg) {
  SuperTensor c = tensor_C(alg);
  SuperTensor out(4);
  out += place_pair(alg, c, c, {0, 2, 1, 3});
  out -= place_pair(alg, c, c, {0, 3, 1, 2});
  return out;
}

}  // namespace glw
