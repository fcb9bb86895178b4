#include "glw/glw.h"

#include "glw/conway.hpp"
#include "glw/diagrams.hpp"
#include "glw/numeric.hpp"
#include "glw/poly.hpp"
#include "glw/verify.hpp"
#include "glw/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

struct glw_diagram {
  glw::ChordDiagram value;
};

struct glw_poly {
  glw::WeightPoly value;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

glw_status fail(glw_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Uniform exception-to-status translation; `parse_context` upgrades
// std::invalid_argument to the parse status.
template <class Fn>
glw_status guarded(bool parse_context, Fn&& fn) {
  try {
    return fn();
  } catch (const glw::internal_error& e) {
    return fail(GLW_ERR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(parse_context ? GLW_ERR_PARSE : GLW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(GLW_ERR_INTERNAL, e.what());
  }
}

std::string table_string(int order, bool include_decomposable, bool as_json) {
  struct Row {
    std::string diagram;
    std::string poly;
    int crossings;
  };
  std::vector<Row> rows;
  for (const auto& d : glw::enumerate_diagrams(order)) {
    if (!include_decomposable && glw::decompose(d).size() > 1) continue;
    rows.push_back({glw::render_diagram(d), glw::eval_weight(d).text(),
                    static_cast<int>(glw::crossings(d).size())});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.diagram < b.diagram; });
  std::ostringstream os;
  if (as_json) {
    os << '[';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) os << ',';
      os << "{\"diagram\":\"" << rows[i].diagram << "\",\"polynomial\":\"" << rows[i].poly
         << "\",\"crossings\":" << rows[i].crossings << '}';
    }
    os << ']';
  } else {
    os << "diagram,polynomial,crossings\n";
    for (const auto& r : rows) os << r.diagram << ',' << r.poly << ',' << r.crossings << '\n';
  }
  return os.str();
}

}  // namespace

extern "C" {

const char* glw_last_error(void) { return g_last_error.c_str(); }

glw_status glw_diagram_parse(const char* text, glw_diagram** out) {
  if (!text || !out) return fail(GLW_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded(true, [&] {
    auto d = new glw_diagram{glw::parse_diagram(text)};
    *out = d;
    return GLW_OK;
  });
}

void glw_diagram_free(glw_diagram* d) { delete d; }

glw_status glw_diagram_canonical_text(const glw_diagram* d, char** out) {
  if (!d || !out) return fail(GLW_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded(false, [&] {
    *out = copy_string(glw::render_diagram(glw::canonicalize(d->value)));
    return GLW_OK;
  });
}

int glw_diagram_order(const glw_diagram* d) { return d ? d->value.order() : -1; }

int glw_diagram_crossings(const glw_diagram* d) {
  return d ? static_cast<int>(glw::crossings(d->value).size()) : -1;
}

glw_status glw_eval(const glw_diagram* d, glw_poly** out) {
  if (!d || !out) return fail(GLW_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded(false, [&] {
    *out = new glw_poly{glw::eval_weight(d->value)};
    return GLW_OK;
  });
}

glw_status glw_eval_deframed(const glw_diagram* d, glw_poly** out) {
  if (!d || !out) return fail(GLW_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded(false, [&] {
    *out = new glw_poly{glw::deframe_by_substitution(d->value)};
    return GLW_OK;
  });
}

glw_status glw_conway(const glw_diagram* d, int* out) {
  if (!d || !out) return fail(GLW_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded(false, [&] {
    *out = glw::conway_weight(d->value);
    return GLW_OK;
  });
}

glw_status glw_poly_text(const glw_poly* p, char** out) {
  if (!p || !out) return fail(GLW_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded(false, [&] {
    *out = copy_string(p->value.text());
    return GLW_OK;
  });
}

glw_status glw_poly_json(const glw_poly* p, char** out) {
  if (!p || !out) return fail(GLW_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded(false, [&] {
    *out = copy_string(p->value.json());
    return GLW_OK;
  });
}

void glw_poly_free(glw_poly* p) { delete p; }

glw_status glw_table(int order, int include_decomposable, int as_json, char** out) {
  if (!out) return fail(GLW_ERR_INVALID_ARGUMENT, "NULL argument");
  if (order < 0 || order > 7)
    return fail(GLW_ERR_INVALID_ARGUMENT, "table order must be within 0..7");
  return guarded(false, [&] {
    *out = copy_string(table_string(order, include_decomposable != 0, as_json != 0));
    return GLW_OK;
  });
}

glw_status glw_verify(const char* suite, int max_order, const char* algebra, int as_json,
                      char** report, int* passed) {
  if (!suite || !report || !passed) return fail(GLW_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded(false, [&] {
    glw::RunReport r = glw::run_suite(suite, max_order, algebra ? algebra : "gl11");
    *report = copy_string(as_json ? r.json() : r.text());
    *passed = r.all_passed() ? 1 : 0;
    if (!r.all_passed()) return fail(GLW_ERR_VERIFY_FAILED, "verification checks failed");
    return GLW_OK;
  });
}

void glw_string_free(char* s) { std::free(s); }

}  // extern "C"
