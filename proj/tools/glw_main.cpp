// Command-line front end.  All functionality goes through the C API in
// glw/glw.h; exit codes: 0 success, 1 verification failure, 2 usage or
// parse error, 3 internal invariant breach.

#include "glw/glw.h"

#include "CLI11.hpp"

#include <cstdio>
#include <string>

namespace {

int status_to_exit(glw_status s) {
  switch (s) {
    case GLW_OK: return 0;
    case GLW_ERR_VERIFY_FAILED: return 1;
    case GLW_ERR_PARSE:
    case GLW_ERR_INVALID_ARGUMENT: return 2;
    case GLW_ERR_INTERNAL: return 3;
  }
  return 3;
}

int report_failure(glw_status s) {
  std::fprintf(stderr, "error: %s\n", glw_last_error());
  return status_to_exit(s);
}

int run_eval(const std::string& text, bool json, bool deframe, bool conway) {
  glw_diagram* d = nullptr;
  glw_status st = glw_diagram_parse(text.c_str(), &d);
  if (st != GLW_OK) return report_failure(st);

  int code = 0;
  if (conway) {
    int w = 0;
    st = glw_conway(d, &w);
    if (st != GLW_OK) {
      code = report_failure(st);
    } else if (json) {
      std::printf("{\"conway\":%d}\n", w);
    } else {
      std::printf("%d\n", w);
    }
  } else {
    glw_poly* p = nullptr;
    st = deframe ? glw_eval_deframed(d, &p) : glw_eval(d, &p);
    if (st != GLW_OK) {
      code = report_failure(st);
    } else {
      char* rendered = nullptr;
      st = json ? glw_poly_json(p, &rendered) : glw_poly_text(p, &rendered);
      if (st != GLW_OK) {
        code = report_failure(st);
      } else {
        std::printf("%s\n", rendered);
        glw_string_free(rendered);
      }
      glw_poly_free(p);
    }
  }
  glw_diagram_free(d);
  return code;
}

int run_table(int order, bool json, bool all_diagrams) {
  char* out = nullptr;
  glw_status st = glw_table(order, all_diagrams ? 1 : 0, json ? 1 : 0, &out);
  if (st != GLW_OK) return report_failure(st);
  std::fputs(out, stdout);
  if (json) std::fputc('\n', stdout);
  glw_string_free(out);
  return 0;
}

int run_verify(const std::string& suite, int max_order, const std::string& algebra, bool json) {
  char* report = nullptr;
  int passed = 0;
  glw_status st = glw_verify(suite.c_str(), max_order, algebra.c_str(), json ? 1 : 0, &report,
                             &passed);
  if (st != GLW_OK && st != GLW_ERR_VERIFY_FAILED) return report_failure(st);
  std::fputs(report, stdout);
  if (json) std::fputc('\n', stdout);
  glw_string_free(report);
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal gl(1|1) weight system on chord diagrams"};
  app.require_subcommand(1);

  std::string diagram_text;
  std::string suite = "all";
  std::string algebra = "gl11";
  int order = 0;
  int max_order = 0;
  bool json = false;
  bool deframe = false;
  bool conway = false;
  bool all_diagrams = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate the weight of one diagram");
  eval->add_option("diagram", diagram_text, "diagram text, e.g. \"0-2,1-3\" or \"ABAB\"")
      ->required();
  eval->add_flag("--json", json, "emit JSON");
  eval->add_flag("--deframe", deframe, "evaluate at c = 0");
  eval->add_flag("--conway", conway, "print the Conway weight (0 or 1) instead");

  CLI::App* table = app.add_subcommand("table", "tabulate all diagrams of one order");
  table->add_option("order", order, "diagram order, 0..7")->required();
  table->add_flag("--json", json, "emit JSON instead of CSV");
  table->add_flag("--all-diagrams", all_diagrams, "include connected sums");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite,
                     "4T, 8T, oracle, tensor-identities, deframing, conway, repring, or all");
  verify->add_option("--max-order", max_order, "largest diagram order to check (0 = default)");
  verify->add_option("--algebra", algebra, "gl11 or bosonic (oracle suite only)");
  verify->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; anything else is a usage error.
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (eval->parsed()) return run_eval(diagram_text, json, deframe, conway);
  if (table->parsed()) return run_table(order, json, all_diagrams);
  return run_verify(suite, max_order, algebra, json);
}
