#include "glw/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace glw {

namespace {

Chord norm(int a, int b) { return a < b ? Chord{a, b} : Chord{b, a}; }

// All perfect matchings on 2n labeled points ((2n-1)!! of them).
void matchings_rec(std::vector<int>& partner, std::vector<ChordDiagram>& out) {
  int first = -1;
  for (size_t i = 0; i < partner.size(); ++i)
    if (partner[i] < 0) {
      first = static_cast<int>(i);
      break;
    }
  if (first < 0) {
    std::vector<Chord> pairs;
    for (size_t i = 0; i < partner.size(); ++i)
      if (static_cast<int>(i) < partner[i]) pairs.push_back({static_cast<int>(i), partner[i]});
    out.push_back(ChordDiagram::from_pairs(pairs));
    return;
  }
  for (size_t j = first + 1; j < partner.size(); ++j) {
    if (partner[j] >= 0) continue;
    partner[first] = static_cast<int>(j);
    partner[j] = first;
    matchings_rec(partner, out);
    partner[first] = partner[j] = -1;
  }
}

std::vector<ChordDiagram> enumerate_matchings(int n) {
  std::vector<int> partner(2 * n, -1);
  std::vector<ChordDiagram> out;
  matchings_rec(partner, out);
  return out;
}

}  // namespace

ChordDiagram ChordDiagram::from_pairs(const std::vector<Chord>& pairs) {
  int points = static_cast<int>(pairs.size()) * 2;
  std::vector<int> partner(points, -1);
  for (const auto& [a, b] : pairs) {
    if (a == b) throw std::invalid_argument("diagram pairing has a fixed point");
    if (a < 0 || b < 0 || a >= points || b >= points)
      throw std::invalid_argument("diagram endpoint out of range");
    if (partner[a] != -1 || partner[b] != -1)
      throw std::invalid_argument("diagram endpoint used twice");
    partner[a] = b;
    partner[b] = a;
  }
  ChordDiagram d;
  d.partner_ = std::move(partner);
  return d;
}

ChordDiagram ChordDiagram::from_sparse_pairs(const std::vector<Chord>& pairs) {
  std::vector<int> labels;
  for (const auto& [a, b] : pairs) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::invalid_argument("diagram endpoint used twice");
  std::vector<Chord> compact;
  auto index_of = [&](int label) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  for (const auto& [a, b] : pairs) compact.push_back(norm(index_of(a), index_of(b)));
  return from_pairs(compact);
}

std::vector<Chord> ChordDiagram::chords() const {
  std::vector<Chord> out;
  for (int i = 0; i < points(); ++i)
    if (i < partner_[i]) out.push_back({i, partner_[i]});
  return out;
}

void DiagramSum::add(const ChordDiagram& d, const Int& coeff) {
  if (coeff == 0) return;
  ChordDiagram key = canonicalize(d);
  auto [it, inserted] = terms_.emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& rhs) {
  for (const auto& [d, k] : rhs.terms_) add(d, k);
  return *this;
}

std::string DiagramSum::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, k] : terms_) {
    if (!first) os << ' ';
    os << (k < 0 ? "-" : (first ? "" : "+"));
    first = false;
    Int abs = k < 0 ? Int(-k) : k;
    os << abs.str() << "*(" << render_diagram(d) << ')';
  }
  return os.str();
}

ChordDiagram rotate(const ChordDiagram& d, int k) {
  int m = d.points();
  if (m == 0) return d;
  k = ((k % m) + m) % m;
  std::vector<Chord> pairs;
  for (const auto& [a, b] : d.chords()) pairs.push_back(norm((a + k) % m, (b + k) % m));
  return ChordDiagram::from_pairs(pairs);
}

ChordDiagram mirror(const ChordDiagram& d) {
  int m = d.points();
  std::vector<Chord> pairs;
  for (const auto& [a, b] : d.chords()) pairs.push_back(norm(m - 1 - a, m - 1 - b));
  return ChordDiagram::from_pairs(pairs);
}

ChordDiagram canonicalize(const ChordDiagram& d) {
  ChordDiagram best = d;
  std::vector<Chord> best_pairs = best.chords();
  for (int k = 1; k < d.points(); ++k) {
    ChordDiagram cand = rotate(d, k);
    std::vector<Chord> cand_pairs = cand.chords();
    if (cand_pairs < best_pairs) {
      best = std::move(cand);
      best_pairs = std::move(cand_pairs);
    }
  }
  return best;
}

bool chords_cross(const Chord& a, const Chord& b) {
  auto [a1, a2] = norm(a.first, a.second);
  auto [b1, b2] = norm(b.first, b.second);
  return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

std::vector<std::pair<Chord, Chord>> crossings(const ChordDiagram& d) {
  std::vector<std::pair<Chord, Chord>> out;
  auto cs = d.chords();
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j)
      if (chords_cross(cs[i], cs[j])) out.push_back({cs[i], cs[j]});
  return out;
}

std::vector<Chord> crossings_of(const ChordDiagram& d, const Chord& a) {
  std::vector<Chord> out;
  for (const auto& c : d.chords())
    if (c != a && chords_cross(c, a)) out.push_back(c);
  return out;
}

ChordDiagram remove_chords(const ChordDiagram& d, const std::vector<Chord>& chords) {
  std::set<Chord> doomed;
  for (const auto& c : chords) {
    Chord nc = norm(c.first, c.second);
    if (nc.first < 0 || nc.second >= d.points() || d.partner(nc.first) != nc.second)
      throw std::invalid_argument("chord not present in diagram");
    doomed.insert(nc);
  }
  std::vector<Chord> kept;
  for (const auto& c : d.chords())
    if (!doomed.count(c)) kept.push_back(c);
  return ChordDiagram::from_sparse_pairs(kept);
}

std::array<ChordDiagram, 4> surgery_quadruple(const ChordDiagram& d, const Chord& a,
                                              const Chord& bi, const Chord& bj) {
  Chord na = norm(a.first, a.second);
  Chord nbi = norm(bi.first, bi.second);
  Chord nbj = norm(bj.first, bj.second);
  if (nbi == nbj) throw std::invalid_argument("surgery needs two distinct crossing chords");
  for (const Chord& c : {na, nbi, nbj})
    if (c.first < 0 || c.second >= d.points() || d.partner(c.first) != c.second)
      throw std::invalid_argument("chord not present in diagram");

  auto in_arc1 = [&](int pos) { return pos > na.first && pos < na.second; };
  auto split = [&](const Chord& b) -> std::pair<int, int> {  // (left, right)
    bool f1 = in_arc1(b.first), f2 = in_arc1(b.second);
    if (f1 == f2) throw std::invalid_argument("chord does not cross the surgery chord");
    return f1 ? std::pair{b.first, b.second} : std::pair{b.second, b.first};
  };
  auto [li, ri] = split(nbi);
  auto [lj, rj] = split(nbj);

  std::vector<Chord> base;
  for (const auto& c : d.chords())
    if (c != na && c != nbi && c != nbj) base.push_back(c);

  auto build = [&](int u, int v) {
    std::vector<Chord> pairs = base;
    pairs.push_back(norm(u, v));
    return ChordDiagram::from_sparse_pairs(pairs);
  };
  return {build(li, rj), build(ri, lj), build(li, lj), build(ri, rj)};
}

DiagramSum lambda_sum(const ChordDiagram& d, const Chord& a, const Chord& bi, const Chord& bj) {
  auto quad = surgery_quadruple(d, a, bi, bj);
  DiagramSum sum;
  sum.add(quad[0], 1);
  sum.add(quad[1], 1);
  sum.add(quad[2], -1);
  sum.add(quad[3], -1);
  return sum;
}

std::vector<ChordDiagram> enumerate_diagrams(int n) {
  if (n < 0) throw std::invalid_argument("diagram order must be non-negative");
  std::set<ChordDiagram> classes;
  for (const auto& m : enumerate_matchings(n)) classes.insert(canonicalize(m));
  return {classes.begin(), classes.end()};
}

std::vector<ChordDiagram> decompose(const ChordDiagram& d) {
  auto cs = d.chords();
  int n = static_cast<int>(cs.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (chords_cross(cs[i], cs[j])) parent[find(i)] = find(j);

  std::map<int, std::vector<Chord>> groups;  // keyed by component root
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(cs[i]);

  std::vector<std::vector<Chord>> ordered;
  for (auto& [root, chords] : groups) ordered.push_back(std::move(chords));
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<ChordDiagram> out;
  for (const auto& chords : ordered) out.push_back(ChordDiagram::from_sparse_pairs(chords));
  return out;
}

DiagramSum s_operator(const ChordDiagram& d) {
  DiagramSum sum;
  for (const auto& c : d.chords()) sum.add(remove_chords(d, {c}), 1);
  return sum;
}

DiagramSum s_operator(const DiagramSum& sum) {
  DiagramSum out;
  for (const auto& [d, k] : sum.terms())
    for (const auto& c : d.chords()) out.add(remove_chords(d, {c}), k);
  return out;
}

std::vector<DiagramSum> four_term_instances(int n) {
  if (n < 2) throw std::invalid_argument("four-term combinations need order >= 2");
  int m = n - 2;
  int total = 2 * m + 5;
  std::vector<DiagramSum> out;
  for (const auto& host : enumerate_matchings(m)) {
    // Markers at positions 0, 1, q3, q4, q4+1; host endpoints fill the rest
    // in circle order.
    for (int q3 = 2; q3 + 2 < total; ++q3) {
      for (int q4 = q3 + 1; q4 + 1 < total; ++q4) {
        std::array<int, 5> marker{0, 1, q3, q4, q4 + 1};
        std::vector<int> host_pos;
        for (int p = 0; p < total; ++p)
          if (std::find(marker.begin(), marker.end(), p) == marker.end()) host_pos.push_back(p);

        std::vector<Chord> host_chords;
        for (const auto& [a, b] : host.chords())
          host_chords.push_back(norm(host_pos[a], host_pos[b]));

        auto term = [&](int u1, int v1, int u2, int v2) {
          std::vector<Chord> pairs = host_chords;
          pairs.push_back(norm(marker[u1], marker[v1]));
          pairs.push_back(norm(marker[u2], marker[v2]));
          return ChordDiagram::from_sparse_pairs(pairs);
        };
        DiagramSum sum;
        sum.add(term(0, 3, 2, 4), 1);   // (m1,m4),(m3,m5)
        sum.add(term(0, 4, 2, 3), -1);  // (m1,m5),(m3,m4)
        sum.add(term(1, 2, 0, 4), 1);   // (m2,m3),(m1,m5)
        sum.add(term(0, 2, 1, 4), -1);  // (m1,m3),(m2,m5)
        out.push_back(std::move(sum));
      }
    }
  }
  return out;
}

namespace {

struct EightTermTemplate {
  // Four signed chord triples (R side) and four signed single chords (S side).
  Chord r_terms[4][3];
  Chord s_terms[4];
};

const std::array<EightTermTemplate, 4>& eight_term_data() {
  static const std::array<EightTermTemplate, 4> data{{
      {{{{1, 4}, {5, 7}, {8, 10}},
        {{1, 4}, {5, 8}, {7, 10}},
        {{1, 5}, {4, 7}, {8, 10}},
        {{1, 5}, {4, 8}, {7, 10}}},
       {{1, 7}, {4, 10}, {4, 7}, {1, 10}}},
      {{{{1, 8}, {4, 11}, {5, 7}},
        {{1, 7}, {4, 11}, {5, 8}},
        {{1, 8}, {5, 11}, {4, 7}},
        {{1, 7}, {4, 8}, {5, 11}}},
       {{8, 10}, {2, 4}, {4, 7}, {1, 11}}},
      {{{{1, 7}, {2, 4}, {8, 10}},
        {{1, 8}, {2, 4}, {7, 10}},
        {{1, 4}, {2, 7}, {8, 10}},
        {{1, 4}, {2, 8}, {7, 10}}},
       {{1, 8}, {4, 10}, {4, 7}, {1, 10}}},
      {{{{1, 4}, {5, 11}, {7, 10}},
        {{1, 4}, {5, 10}, {7, 11}},
        {{1, 5}, {4, 11}, {7, 10}},
        {{1, 5}, {4, 10}, {7, 11}}},
       {{1, 7}, {4, 10}, {4, 7}, {1, 10}}},
  }};
  return data;
}

constexpr std::array<int, 4> kEightTermSigns{1, -1, -1, 1};  // +,-,-,+ on R; +,+,-,- on S
constexpr std::array<int, 4> kEightTermSSigns{1, 1, -1, -1};

}  // namespace

std::vector<int> eight_term_free_positions(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("template index must be 1..4");
  const auto& t = eight_term_data()[i - 1];
  std::set<int> used;
  for (const auto& triple : t.r_terms)
    for (const auto& [a, b] : triple) {
      used.insert(a);
      used.insert(b);
    }
  for (const auto& [a, b] : t.s_terms) {
    used.insert(a);
    used.insert(b);
  }
  std::vector<int> free;
  for (int p = 0; p < 12; ++p)
    if (!used.count(p)) free.push_back(p);
  return free;
}

std::pair<DiagramSum, DiagramSum> eight_term_template(int i, const std::vector<Chord>& hidden) {
  auto free = eight_term_free_positions(i);
  std::set<int> free_set(free.begin(), free.end());
  std::set<int> hidden_used;
  for (const auto& [a, b] : hidden) {
    for (int p : {a, b}) {
      if (!free_set.count(p))
        throw std::invalid_argument("hidden chord collides with a template position");
      if (!hidden_used.insert(p).second)
        throw std::invalid_argument("hidden chords overlap");
    }
  }
  const auto& t = eight_term_data()[i - 1];
  DiagramSum r, s;
  for (int k = 0; k < 4; ++k) {
    std::vector<Chord> r_pairs(hidden.begin(), hidden.end());
    for (const auto& c : t.r_terms[k]) r_pairs.push_back(c);
    r.add(ChordDiagram::from_sparse_pairs(r_pairs), kEightTermSigns[k]);

    std::vector<Chord> s_pairs(hidden.begin(), hidden.end());
    s_pairs.push_back(t.s_terms[k]);
    s.add(ChordDiagram::from_sparse_pairs(s_pairs), kEightTermSSigns[k]);
  }
  return {std::move(r), std::move(s)};
}

std::vector<std::pair<DiagramSum, DiagramSum>> eight_term_templates(
    const std::vector<Chord>& hidden) {
  std::vector<std::pair<DiagramSum, DiagramSum>> out;
  for (int i = 1; i <= 4; ++i) out.push_back(eight_term_template(i, hidden));
  return out;
}

std::string render_diagram(const ChordDiagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, b] : d.chords()) {
    if (!first) os << ',';
    first = false;
    os << a << '-' << b;
  }
  return os.str();
}

namespace {

ChordDiagram parse_word(std::string_view text) {
  std::map<char, std::vector<int>> occurrences;
  for (size_t i = 0; i < text.size(); ++i) occurrences[text[i]].push_back(static_cast<int>(i));
  std::vector<Chord> pairs;
  for (const auto& [letter, pos] : occurrences) {
    (void)letter;
    if (pos.size() != 2)
      throw std::invalid_argument("double-occurrence word: every letter must appear exactly twice");
    pairs.push_back({pos[0], pos[1]});
  }
  return ChordDiagram::from_pairs(pairs);
}

}  // namespace

ChordDiagram parse_diagram(std::string_view text) {
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trimmed(text);
  if (text.empty()) return ChordDiagram{};
  bool all_alpha = std::all_of(text.begin(), text.end(),
                               [](unsigned char c) { return std::isalpha(c); });
  if (all_alpha) return parse_word(text);

  std::vector<Chord> pairs;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                             : comma - pos);
    size_t dash = item.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash + 1 == item.size())
      throw std::invalid_argument("diagram pair must look like \"p-q\"");
    auto parse_int = [](std::string_view s) {
      if (s.empty() || !std::all_of(s.begin(), s.end(),
                                    [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("diagram endpoint must be a non-negative integer");
      return std::stoi(std::string(s));
    };
    pairs.push_back(norm(parse_int(trimmed(item.substr(0, dash))),
                         parse_int(trimmed(item.substr(dash + 1)))));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ChordDiagram::from_sparse_pairs(pairs);
}

}  // namespace glw
