#ifndef SIGNUMCALC_SIGNUMCALC_H
#define SIGNUMCALC_SIGNUMCALC_H

/*
 * C interface to the signumcalc engine: radial operators r, dr and w acting
 * on delta and on signumdistributions, with exact pairing oracles.
 *
 * Every function returning sc_status leaves a message in sc_last_error()
 * (thread-local) on failure. Strings returned through char** are owned by
 * the caller and released with sc_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(SIGNUMCALC_BUILDING)
#define SC_API __attribute__((visibility("default")))
#else
#define SC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_PARSE = 1,
  SC_ERR_ARITY = 2,
  SC_ERR_UNSUPPORTED = 3,
  SC_ERR_DOMAIN = 4,
  SC_ERR_DIV_ZERO = 5,
  SC_ERR_POLE = 6,
  SC_ERR_KIND_MISMATCH = 7,
  SC_ERR_SPACE_MISMATCH = 8,
  SC_ERR_UNKNOWN_SUITE = 9,
  SC_ERR_INVALID_ARGUMENT = 10,
  SC_ERR_INTERNAL = 11
} sc_status;

typedef enum sc_space { SC_SPACE_DIST = 0, SC_SPACE_SIGN = 1 } sc_space;
typedef enum sc_route { SC_ROUTE_CARTESIAN = 0, SC_ROUTE_SPHERICAL = 1 } sc_route;
typedef enum sc_format { SC_FORMAT_JSON = 0, SC_FORMAT_MARKDOWN = 1, SC_FORMAT_TEXT = 2 } sc_format;

/* SC_PRINT_CANONICAL renders signumdistributions through radial aliases
 * ("-(1/m) * dr delta"); SC_PRINT_BASIS uses s[n]. Distributions print the
 * same either way. */
typedef enum sc_print_style { SC_PRINT_CANONICAL = 0, SC_PRINT_BASIS = 1 } sc_print_style;

typedef struct sc_gfun sc_gfun;
typedef struct sc_poly sc_poly;
typedef struct sc_report sc_report;

SC_API const char* sc_version(void);
SC_API const char* sc_status_name(sc_status status);

SC_API const char* sc_last_error(void);
/* Byte offset of the last parse error, or SIZE_MAX. */
SC_API size_t sc_last_error_offset(void);

SC_API void sc_string_free(char* s);

/* Distributions and signumdistributions. */
SC_API sc_status sc_gfun_parse(const char* text, sc_gfun** out);
/* op is one of r, dr, w, x, D, L, E, G, LB, inv_r, inv_x, inv_r_dr. */
SC_API sc_status sc_gfun_apply(const sc_gfun* g, const char* op, unsigned power, sc_gfun** out);
/* Fixes the dimension: coefficients are evaluated at m, and operators applied
 * to the result are evaluated there as well. */
SC_API sc_status sc_gfun_specialize(const sc_gfun* g, long m, sc_gfun** out);
SC_API sc_status sc_gfun_space(const sc_gfun* g, sc_space* out);
SC_API sc_status sc_gfun_equal(const sc_gfun* a, const sc_gfun* b, int* out);
SC_API sc_status sc_gfun_print(const sc_gfun* g, sc_print_style style, char** out);
SC_API void sc_gfun_free(sc_gfun* g);

/* Polynomial test functions, e.g. "3*x1^2*x2 - 1/2*x3". */
SC_API sc_status sc_poly_parse(const char* text, unsigned m, sc_poly** out);
SC_API sc_status sc_poly_print(const sc_poly* p, char** out);
SC_API void sc_poly_free(sc_poly* p);

/* <g, phi> for distributions, <g, w phi> for signumdistributions. */
SC_API sc_status sc_pair(const sc_gfun* g, const sc_poly* phi, sc_route route, char** out);
/* Both routes; *agree is 1 when they coincide exactly. */
SC_API sc_status sc_pair_both(const sc_gfun* g, const sc_poly* phi, char** cartesian, char** spherical, int* agree);

/* Verification suites. */
typedef struct sc_verify_config {
  unsigned kmax;
  const long* dims;
  size_t n_dims;
  unsigned trials;
  unsigned max_degree;
  uint64_t seed;
} sc_verify_config;

/* kmax 4, dims {2, 3, 5}, 25 trials, degree 8, seed 0. */
SC_API void sc_verify_config_default(sc_verify_config* cfg);
SC_API size_t sc_suite_count(void);
SC_API const char* sc_suite_name(size_t index);
/* suite == NULL runs every suite. */
SC_API sc_status sc_verify_run(const char* suite, const sc_verify_config* cfg, sc_report** out);
SC_API int sc_report_all_pass(const sc_report* report);
SC_API sc_status sc_report_render(const sc_report* report, sc_format format, char** out);
SC_API void sc_report_free(sc_report* report);

/* Coefficient table for r^a dr^b delta (markdown or JSON). */
SC_API sc_status sc_table_prop35(unsigned kmax, unsigned lmax, sc_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
