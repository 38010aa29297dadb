#include <stdint.h>
#include <stdio.h>
#include <string.h>

#include "signumcalc/signumcalc.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int printed_as(const sc_gfun* g, sc_print_style style, const char* expected) {
  char* s = NULL;
  if (sc_gfun_print(g, style, &s) != SC_OK) return 0;
  int ok = strcmp(s, expected) == 0;
  if (!ok) fprintf(stderr, "got '%s', expected '%s'\n", s, expected);
  sc_string_free(s);
  return ok;
}

int main(void) {
  sc_gfun* g = NULL;
  EXPECT(sc_gfun_parse("dr^2 delta", &g) == SC_OK);
  EXPECT(printed_as(g, SC_PRINT_CANONICAL, "-(m+1)/2 * D^2 delta"));

  sc_gfun* s = NULL;
  EXPECT(sc_gfun_specialize(g, 3, &s) == SC_OK);
  EXPECT(printed_as(s, SC_PRINT_CANONICAL, "-2 * D^2 delta"));

  sc_gfun *fixed = NULL, *fixed3 = NULL, *fixed_r = NULL;
  EXPECT(sc_gfun_parse("w dr^2 delta", &fixed) == SC_OK);
  EXPECT(sc_gfun_specialize(fixed, 3, &fixed3) == SC_OK);
  EXPECT(printed_as(fixed3, SC_PRINT_CANONICAL, "w dr^2 delta"));
  EXPECT(printed_as(fixed3, SC_PRINT_BASIS, "-2 * s[2]"));
  EXPECT(sc_gfun_apply(fixed3, "r", 1, &fixed_r) == SC_OK);
  EXPECT(printed_as(fixed_r, SC_PRINT_CANONICAL, "-4 * D delta"));
  sc_gfun_free(fixed);
  sc_gfun_free(fixed3);
  sc_gfun_free(fixed_r);

  sc_gfun* h = NULL;
  EXPECT(sc_gfun_apply(g, "r", 1, &h) == SC_OK);
  sc_space space = SC_SPACE_DIST;
  EXPECT(sc_gfun_space(h, &space) == SC_OK && space == SC_SPACE_SIGN);
  EXPECT(printed_as(h, SC_PRINT_CANONICAL, "-(m+1) * dr delta"));

  sc_gfun* inv = NULL;
  EXPECT(sc_gfun_parse("inv_r delta", &inv) == SC_OK);
  EXPECT(printed_as(inv, SC_PRINT_CANONICAL, "-(1/m) * dr delta"));
  EXPECT(printed_as(inv, SC_PRINT_BASIS, "1/m * s[1]"));

  sc_gfun *a = NULL, *b = NULL;
  int eq = 0;
  EXPECT(sc_gfun_parse("(w dr) delta", &a) == SC_OK);
  EXPECT(sc_gfun_parse("D delta", &b) == SC_OK);
  EXPECT(sc_gfun_equal(a, b, &eq) == SC_OK && eq == 1);

  sc_gfun* bad = NULL;
  EXPECT(sc_gfun_parse("delta +", &bad) == SC_ERR_PARSE);
  EXPECT(bad == NULL);
  EXPECT(sc_last_error_offset() == 7);
  EXPECT(strlen(sc_last_error()) > 0);
  EXPECT(sc_gfun_parse("G (w dr) delta", &bad) == SC_ERR_UNSUPPORTED);
  EXPECT(sc_last_error_offset() == SIZE_MAX);
  EXPECT(sc_gfun_apply(g, "nope", 1, &bad) == SC_ERR_INVALID_ARGUMENT);
  EXPECT(sc_gfun_parse(NULL, &bad) == SC_ERR_INVALID_ARGUMENT);

  sc_poly* phi = NULL;
  EXPECT(sc_poly_parse("x1^2", 3, &phi) == SC_OK);
  sc_gfun* lap = NULL;
  EXPECT(sc_gfun_parse("L delta", &lap) == SC_OK);
  char *cart = NULL, *sph = NULL;
  int agree = 0;
  EXPECT(sc_pair_both(lap, phi, &cart, &sph, &agree) == SC_OK);
  EXPECT(agree == 1 && strcmp(cart, "2") == 0 && strcmp(sph, "2") == 0);
  sc_string_free(cart);
  sc_string_free(sph);

  sc_verify_config cfg;
  sc_verify_config_default(&cfg);
  EXPECT(cfg.kmax == 4 && cfg.n_dims == 3 && cfg.trials == 25 && cfg.seed == 0);
  EXPECT(sc_suite_count() == 11);
  EXPECT(strcmp(sc_suite_name(0), "prop31") == 0);
  EXPECT(sc_suite_name(11) == NULL);
  cfg.kmax = 2;
  cfg.trials = 3;
  sc_report* report = NULL;
  EXPECT(sc_verify_run("prop31", &cfg, &report) == SC_OK);
  EXPECT(sc_report_all_pass(report) == 1);
  char* json = NULL;
  EXPECT(sc_report_render(report, SC_FORMAT_JSON, &json) == SC_OK);
  EXPECT(strstr(json, "\"schema\": \"1\"") != NULL);
  sc_string_free(json);
  sc_report_free(report);
  EXPECT(sc_verify_run("nosuch", &cfg, &report) == SC_ERR_UNKNOWN_SUITE);

  char* table = NULL;
  EXPECT(sc_table_prop35(1, 1, SC_FORMAT_MARKDOWN, &table) == SC_OK);
  EXPECT(strstr(table, "| i | 1 | 1 | m*(m+1) | delta |") != NULL);
  sc_string_free(table);

  sc_gfun_free(g);
  sc_gfun_free(s);
  sc_gfun_free(h);
  sc_gfun_free(inv);
  sc_gfun_free(a);
  sc_gfun_free(b);
  sc_gfun_free(lap);
  sc_poly_free(phi);
  sc_gfun_free(NULL);

  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  puts("C API smoke test passed");
  return 0;
}
