#include "glw/verify.hpp"

#include "glw/conway.hpp"
#include "glw/diagrams.hpp"
#include "glw/numeric.hpp"
#include "glw/oracle.hpp"
#include "glw/poly.hpp"
#include "glw/repring.hpp"
#include "glw/superalg.hpp"
#include "glw/weights.hpp"

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace glw {
namespace {

// Run fn(i) for i in [0, count) across worker threads.  The checks below
// parallelize across diagrams; result aggregation is the only shared state.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t workers = std::min<std::size_t>(count, hw == 0 ? 1 : hw);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Thread-safe failure sink for one aggregated check; keeps the first
// reproducer and counts the rest.
class Failures {
public:
  void record(const std::string& reproducer, const std::string& detail) {
    std::lock_guard<std::mutex> lock(mutex_);
    ++count_;
    if (count_ == 1) {
      reproducer_ = reproducer;
      detail_ = detail;
    }
  }

  CheckResult finish(std::string name, std::size_t instances) const {
    CheckResult r;
    r.name = std::move(name);
    r.passed = count_ == 0;
    if (r.passed) {
      r.detail = std::to_string(instances) + " instances";
    } else {
      r.reproducer = reproducer_;
      r.detail = detail_;
      if (count_ > 1) r.detail += "; " + std::to_string(count_ - 1) + " further failures";
    }
    return r;
  }

private:
  mutable std::mutex mutex_;
  std::size_t count_ = 0;
  std::string reproducer_;
  std::string detail_;
};

WeightPoly sum_weight(const DiagramSum& s) {
  WeightPoly out;
  for (const auto& [d, coeff] : s.terms()) out += coeff * eval_weight(d);
  return out;
}

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

void suite_four_term(int max_order, std::vector<CheckResult>& out) {
  for (int n = 2; n <= max_order; ++n) {
    auto instances = four_term_instances(n);
    Failures failures;
    parallel_for(instances.size(), [&](std::size_t i) {
      WeightPoly sum;
      for (const auto& [d, coeff] : instances[i].terms()) sum += coeff * eval_weight(d);
      if (!sum.is_zero()) failures.record(instances[i].text(), "weight sum is " + sum.text());
    });
    out.push_back(
        failures.finish("four-term relations, order " + std::to_string(n), instances.size()));
  }
}

// All ways to place k disjoint chords on the given positions (not
// necessarily covering them): choose the subset, then match it up.
std::vector<std::vector<Chord>> hidden_placements(const std::vector<int>& positions, int k) {
  std::vector<std::vector<Chord>> out;
  std::vector<int> subset;
  auto match_all = [&](auto&& self, std::vector<int> pool, std::vector<Chord> acc) -> void {
    if (pool.empty()) {
      out.push_back(acc);
      return;
    }
    int first = pool.front();
    for (std::size_t j = 1; j < pool.size(); ++j) {
      std::vector<int> rest;
      for (std::size_t t = 1; t < pool.size(); ++t)
        if (t != j) rest.push_back(pool[t]);
      auto next = acc;
      next.push_back({first, pool[j]});
      self(self, std::move(rest), std::move(next));
    }
  };
  auto choose = [&](auto&& self, std::size_t start, int left) -> void {
    if (left == 0) {
      match_all(match_all, subset, {});
      return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(left) <= positions.size(); ++i) {
      subset.push_back(positions[i]);
      self(self, i + 1, left - 1);
      subset.pop_back();
    }
  };
  choose(choose, 0, 2 * k);
  return out;
}

std::string render_chords(const std::vector<Chord>& chords) {
  std::ostringstream os;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    if (i) os << ',';
    os << chords[i].first << '-' << chords[i].second;
  }
  return os.str();
}

void suite_eight_term(std::vector<CheckResult>& out) {
  const WeightPoly y = WeightPoly::monomial(0, 1, 1);
  for (int i = 1; i <= 4; ++i) {
    auto free = eight_term_free_positions(i);
    for (int k = 0; k <= 2; ++k) {
      if (free.size() < static_cast<std::size_t>(2 * k)) continue;
      auto placements = hidden_placements(free, k);
      Failures failures;
      parallel_for(placements.size(), [&](std::size_t p) {
        auto [r, s] = eight_term_template(i, placements[p]);
        WeightPoly left = sum_weight(r);
        WeightPoly right = y * sum_weight(s);
        if (left != right)
          failures.record("template " + std::to_string(i) + " hidden " +
                              render_chords(placements[p]),
                          "W(R) = " + left.text() + ", y*W(S) = " + right.text());
      });
      out.push_back(failures.finish("y-relation template " + std::to_string(i) + ", " +
                                        std::to_string(k) + " hidden chords",
                                    placements.size()));
    }
  }
}

void suite_oracle(int max_order, const AlgebraSpec& alg, std::vector<CheckResult>& out) {
  for (int n = 0; n <= max_order; ++n) {
    auto diagrams = enumerate_diagrams(n);
    Failures failures;
    parallel_for(diagrams.size(), [&](std::size_t i) {
      WeightPoly rec = eval_weight(diagrams[i]);
      WeightPoly direct = oracle_weight(alg, diagrams[i]);
      if (rec != direct)
        failures.record(render_diagram(diagrams[i]),
                        "recursion " + rec.text() + ", " + alg.name + " algebra " + direct.text());
    });
    out.push_back(failures.finish(
        "recursion vs enveloping algebra (" + alg.name + "), order " + std::to_string(n),
        diagrams.size()));
  }
  if (alg.name == "gl11") {
    for (int m = 1; m <= 4; ++m) {
      Int expect = binom(2 * m - 2, m - 1);
      int got = invariant_dimension(alg, m);
      CheckResult r;
      r.name = "invariant tensor dimension, arity " + std::to_string(m);
      r.passed = Int(got) == expect;
      r.detail = "dimension " + std::to_string(got) + ", expected " + expect.str();
      if (!r.passed) r.reproducer = "arity " + std::to_string(m);
      out.push_back(std::move(r));
    }
  }
}

void suite_tensor_identities(std::vector<CheckResult>& out) {
  for (const auto& check : tensor_identity_suite()) {
    CheckResult r;
    r.name = check.name;
    r.passed = check.passed;
    r.detail = check.detail;
    if (!r.passed && r.detail.empty()) r.detail = "identity failed";
    if (!r.passed) r.reproducer = check.name;
    out.push_back(std::move(r));
  }
}

void suite_deframing(int max_order, std::vector<CheckResult>& out) {
  std::vector<ChordDiagram> all;
  for (int n = 0; n <= max_order; ++n) {
    auto d = enumerate_diagrams(n);
    all.insert(all.end(), d.begin(), d.end());
  }

  Failures agree, isolated, derivative;
  std::atomic<long> isolated_count{0};
  parallel_for(all.size(), [&](std::size_t i) {
    const ChordDiagram& d = all[i];
    std::string text = render_diagram(d);

    WeightPoly sub = deframe_by_substitution(d);
    try {
      WeightPoly psi = deframe_by_psi(d);
      if (psi != sub)
        agree.record(text, "series gives " + psi.text() + ", substitution " + sub.text());
    } catch (const internal_error& e) {
      agree.record(text, e.what());
    }

    bool has_isolated = false;
    for (const auto& c : d.chords())
      if (crossings_of(d, c).empty()) has_isolated = true;
    if (has_isolated) {
      isolated_count.fetch_add(1);
      if (!sub.is_zero()) isolated.record(text, "deframed value " + sub.text());
    }

    WeightPoly deleted = sum_weight(s_operator(d));
    WeightPoly ddc = eval_weight(d).ddc();
    if (deleted != ddc)
      derivative.record(text, "deletion sum " + deleted.text() + ", derivative " + ddc.text());
  });
  std::string range = "orders 0.." + std::to_string(max_order);
  out.push_back(agree.finish("deframing series vs substitution, " + range, all.size()));
  out.push_back(
      isolated.finish("deframed weight kills isolated chords, " + range, isolated_count.load()));
  out.push_back(derivative.finish("chord deletion acts as d/dc, " + range, all.size()));
}

void suite_conway(int max_order, std::vector<CheckResult>& out, int& sigma) {
  {
    ChordDiagram d = parse_diagram("0-6,2-10,4-8");
    int b = boundary_components(d);
    int w = conway_weight(d);
    CheckResult r;
    r.name = "surface boundary, worked example";
    r.passed = b == 2 && w == 0;
    r.detail = "0-6,2-10,4-8: " + std::to_string(b) + " boundary circles, weight " +
               std::to_string(w);
    if (!r.passed) r.reproducer = "0-6,2-10,4-8";
    out.push_back(std::move(r));
  }

  std::vector<ChordDiagram> all;
  for (int n = 0; n <= max_order; ++n) {
    auto d = enumerate_diagrams(n);
    all.insert(all.end(), d.begin(), d.end());
  }
  Failures parity;
  parallel_for(all.size(), [&](std::size_t i) {
    int b = boundary_components(all[i]);
    if ((b + all[i].order()) % 2 != 1)
      parity.record(render_diagram(all[i]),
                    std::to_string(b) + " boundary circles at order " +
                        std::to_string(all[i].order()));
  });
  out.push_back(parity.finish(
      "boundary count has parity opposite the order, orders 0.." + std::to_string(max_order),
      all.size()));

  Failures criterion;
  std::atomic<long> pairs{0};
  parallel_for(all.size(), [&](std::size_t i) {
    for (const auto& c : all[i].chords()) {
      pairs.fetch_add(1);
      if (!lemma2_check(all[i], c))
        criterion.record(render_diagram(all[i]),
                         "chord " + std::to_string(c.first) + "-" + std::to_string(c.second));
    }
  });
  out.push_back(criterion.finish(
      "two-component criterion for weight 1, orders 0.." + std::to_string(max_order),
      pairs.load()));

  CheckResult cal;
  cal.name = "specialization calibration, orders <= " + std::to_string(max_order);
  try {
    CalibrationResult result = calibrate_specialization(max_order);
    sigma = result.sigma;
    cal.passed = true;
    cal.detail = result.report;
  } catch (const internal_error& e) {
    cal.passed = false;
    cal.detail = e.what();
    cal.reproducer = "calibrate orders <= " + std::to_string(max_order);
  }
  out.push_back(std::move(cal));
}

void suite_repring(int max_order, std::vector<CheckResult>& out) {
  Failures decomp;
  for (int n = 1; n <= max_order; ++n) {
    ModuleSum closed = adjoint_power(n);
    ModuleSum iterated = adjoint_power_by_tensor(n);
    if (!(closed == iterated))
      decomp.record("n = " + std::to_string(n),
                    "closed form " + closed.text() + ", iterated " + iterated.text());
  }
  out.push_back(decomp.finish(
      "adjoint power decomposition, n = 1.." + std::to_string(max_order), max_order));

  Failures dims;
  for (int n = 1; n <= max_order; ++n) {
    Int expect = binom(2 * n - 2, n - 1);
    Int got = inv_dim(adjoint_power(n));
    if (got != expect)
      dims.record("n = " + std::to_string(n), got.str() + " invariants, expected " + expect.str());
  }
  out.push_back(dims.finish(
      "adjoint power invariant count, n = 1.." + std::to_string(max_order), max_order));

  {
    ModuleSymbol adj = ModuleSymbol::make_III(1).with_parity(ModuleParity::odd);
    auto [sym1, alt1] = sym_alt_square(adj);
    (void)sym1;
    auto [sym2, alt2] = sym_alt_square(alt1);
    (void)alt2;
    ModuleSum expect;
    expect.add(ModuleSymbol::make_III(4).with_parity(ModuleParity::even), 1);
    expect.add(ModuleSymbol::make_III(2).with_parity(ModuleParity::even), 2);
    expect.add(ModuleSymbol::make_III(1).with_parity(ModuleParity::odd), 2);
    expect.add(ModuleSymbol::make_III(0).with_parity(ModuleParity::even), 2);
    expect.add(ModuleSymbol::make_III(-2).with_parity(ModuleParity::even), 1);
    CheckResult r;
    r.name = "symmetric square of the alternating square of the adjoint";
    r.passed = sym2 == expect && inv_dim(sym2) == 2;
    r.detail = sym2.text() + "; " + inv_dim(sym2).str() + " invariants";
    if (!r.passed) r.reproducer = "S^2(L^2(III_1^odd))";
    out.push_back(std::move(r));
  }
}

int default_order(const std::string& suite, const std::string& algebra) {
  if (suite == "4T" || suite == "deframing") return 5;
  if (suite == "oracle") return algebra == "bosonic" ? 3 : 4;
  if (suite == "conway" || suite == "repring") return 6;
  return 0;  // fixed-size suites
}

}  // namespace

bool RunReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string RunReport::text() const {
  std::ostringstream os;
  os << command << '\n';
  std::size_t passed = 0;
  for (const auto& c : checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
    if (!c.passed) os << "       reproducer: " << c.reproducer << '\n';
    if (c.passed) ++passed;
  }
  os << passed << '/' << checks.size() << " checks passed in " << elapsed_seconds << " s\n";
  if (conway_sigma != 0)
    os << "calibrated specialization: y = " << (conway_sigma > 0 ? "1" : "-1") << '\n';
  return os.str();
}

namespace {

std::string json_escape(const std::string& s) {
  std::ostringstream os;
  for (char ch : s) {
    switch (ch) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          os << buf;
        } else {
          os << ch;
        }
    }
  }
  return os.str();
}

}  // namespace

std::string RunReport::json() const {
  std::ostringstream os;
  os << "{\"command\":\"" << json_escape(command) << "\",\"checks\":[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    if (i) os << ',';
    os << "{\"name\":\"" << json_escape(c.name) << "\",\"passed\":" << (c.passed ? "true" : "false")
       << ",\"reproducer\":\"" << json_escape(c.reproducer) << "\",\"detail\":\""
       << json_escape(c.detail) << "\"}";
  }
  os << "],\"passed\":" << (all_passed() ? "true" : "false") << ",\"elapsed_seconds\":"
     << elapsed_seconds << ",\"conway_sigma\":" << conway_sigma << '}';
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"4T",        "8T",     "oracle", "tensor-identities",
                                              "deframing", "conway", "repring", "all"};
  return names;
}

RunReport run_suite(const std::string& suite, int max_order, const std::string& algebra) {
  if (algebra != "gl11" && algebra != "bosonic")
    throw std::invalid_argument("unknown algebra: " + algebra);
  bool known = false;
  for (const auto& name : suite_names()) known = known || name == suite;
  if (!known) throw std::invalid_argument("unknown suite: " + suite);

  const AlgebraSpec& alg = algebra == "bosonic" ? AlgebraSpec::bosonic() : AlgebraSpec::gl11();

  RunReport report;
  auto start = std::chrono::steady_clock::now();
  auto run_one = [&](const std::string& name) {
    int order = max_order > 0 ? max_order : default_order(name, algebra);
    if (name == "4T") suite_four_term(order, report.checks);
    else if (name == "8T") suite_eight_term(report.checks);
    else if (name == "oracle") suite_oracle(order, alg, report.checks);
    else if (name == "tensor-identities") suite_tensor_identities(report.checks);
    else if (name == "deframing") suite_deframing(order, report.checks);
    else if (name == "conway") suite_conway(order, report.checks, report.conway_sigma);
    else if (name == "repring") suite_repring(order, report.checks);
  };

  std::ostringstream cmd;
  cmd << "verify " << suite;
  int echo_order = max_order > 0 ? max_order : default_order(suite, algebra);
  if (echo_order > 0) cmd << " --max-order " << echo_order;
  if (suite == "oracle" || suite == "all") cmd << " --algebra " << algebra;
  report.command = cmd.str();

  if (suite == "all") {
    for (const auto& name : suite_names())
      if (name != "all") run_one(name);
  } else {
    run_one(suite);
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace glw
