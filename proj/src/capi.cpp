#include "signumcalc/signumcalc.h"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>

#include "oracle.hpp"
#include "parser.hpp"
#include "report.hpp"

using namespace signumcalc;

struct sc_gfun {
  GeneralizedFunction value;
  std::optional<long> m0;  // set once specialized to a fixed dimension
};

struct sc_poly {
  MultiPoly value;
};

struct sc_report {
  std::vector<SuiteReport> reports;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_offset = SIZE_MAX;

sc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return SC_ERR_DIV_ZERO;
    case ErrorCode::PoleAtDimension: return SC_ERR_POLE;
    case ErrorCode::UnsupportedAction: return SC_ERR_UNSUPPORTED;
    case ErrorCode::DomainError: return SC_ERR_DOMAIN;
    case ErrorCode::KindMismatch: return SC_ERR_KIND_MISMATCH;
    case ErrorCode::SpaceMismatch: return SC_ERR_SPACE_MISMATCH;
    case ErrorCode::UnknownSuite: return SC_ERR_UNKNOWN_SUITE;
    case ErrorCode::ParseError: return SC_ERR_PARSE;
    case ErrorCode::ArityError: return SC_ERR_ARITY;
    case ErrorCode::InvalidArgument: return SC_ERR_INVALID_ARGUMENT;
  }
  return SC_ERR_INTERNAL;
}

sc_status fail(sc_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <typename F>
sc_status guarded(F&& f) {
  last_error.clear();
  last_offset = SIZE_MAX;
  try {
    f();
    return SC_OK;
  } catch (const ParseError& e) {
    last_offset = e.offset();
    return fail(status_of(e.code()), e.what());
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SC_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

Format to_format(sc_format f) {
  switch (f) {
    case SC_FORMAT_JSON: return Format::Json;
    case SC_FORMAT_MARKDOWN: return Format::Markdown;
    case SC_FORMAT_TEXT: return Format::Text;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown output format");
}

const long kDefaultDims[] = {2, 3, 5};

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_status_name(sc_status status) {
  switch (status) {
    case SC_OK: return "ok";
    case SC_ERR_PARSE: return "ParseError";
    case SC_ERR_ARITY: return "ArityError";
    case SC_ERR_UNSUPPORTED: return "UnsupportedAction";
    case SC_ERR_DOMAIN: return "DomainError";
    case SC_ERR_DIV_ZERO: return "DivisionByZero";
    case SC_ERR_POLE: return "PoleAtDimension";
    case SC_ERR_KIND_MISMATCH: return "KindMismatch";
    case SC_ERR_SPACE_MISMATCH: return "SpaceMismatch";
    case SC_ERR_UNKNOWN_SUITE: return "UnknownSuite";
    case SC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SC_ERR_INTERNAL: return "InternalError";
  }
  return "unknown";
}

const char* sc_last_error(void) { return last_error.c_str(); }
size_t sc_last_error_offset(void) { return last_offset; }

void sc_string_free(char* s) { std::free(s); }

sc_status sc_gfun_parse(const char* text, sc_gfun** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new sc_gfun{evaluate(std::string_view(text)), std::nullopt};
  });
}

sc_status sc_gfun_apply(const sc_gfun* g, const char* op, unsigned power, sc_gfun** out) {
  return guarded([&] {
    require(g, "g");
    require(op, "op");
    require(out, "out");
    auto o = operator_from_name(op);
    if (!o) throw Error(ErrorCode::InvalidArgument, "unknown operator '" + std::string(op) + "'");
    GeneralizedFunction r = apply(*o, g->value, power);
    *out = new sc_gfun{g->m0 ? specialize(r, *g->m0) : r, g->m0};
  });
}

sc_status sc_gfun_specialize(const sc_gfun* g, long m, sc_gfun** out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    if (m < 1) throw Error(ErrorCode::DomainError, "dimension must be positive");
    *out = new sc_gfun{specialize(g->value, m), m};
  });
}

sc_status sc_gfun_space(const sc_gfun* g, sc_space* out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = g->value.is_dist() ? SC_SPACE_DIST : SC_SPACE_SIGN;
  });
}

sc_status sc_gfun_equal(const sc_gfun* a, const sc_gfun* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = is_equal(a->value, b->value) ? 1 : 0;
  });
}

sc_status sc_gfun_print(const sc_gfun* g, sc_print_style style, char** out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = dup(style == SC_PRINT_BASIS ? print_basis(g->value) : print_canonical(g->value, g->m0));
  });
}

void sc_gfun_free(sc_gfun* g) { delete g; }

sc_status sc_poly_parse(const char* text, unsigned m, sc_poly** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    if (m < 1) throw Error(ErrorCode::DomainError, "dimension must be positive");
    *out = new sc_poly{parse_poly(text, m)};
  });
}

sc_status sc_poly_print(const sc_poly* p, char** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = dup(p->value.to_string());
  });
}

void sc_poly_free(sc_poly* p) { delete p; }

sc_status sc_pair(const sc_gfun* g, const sc_poly* phi, sc_route route, char** out) {
  return guarded([&] {
    require(g, "g");
    require(phi, "phi");
    require(out, "out");
    Route r = route == SC_ROUTE_SPHERICAL ? Route::Spherical : Route::Cartesian;
    *out = dup(pair(g->value, phi->value, r).to_string());
  });
}

sc_status sc_pair_both(const sc_gfun* g, const sc_poly* phi, char** cartesian, char** spherical, int* agree) {
  return guarded([&] {
    require(g, "g");
    require(phi, "phi");
    require(cartesian, "cartesian");
    require(spherical, "spherical");
    require(agree, "agree");
    PairingValue c = pair(g->value, phi->value, Route::Cartesian);
    PairingValue s = pair(g->value, phi->value, Route::Spherical);
    char* cs = dup(c.to_string());
    try {
      *spherical = dup(s.to_string());
    } catch (...) {
      std::free(cs);
      throw;
    }
    *cartesian = cs;
    *agree = c == s ? 1 : 0;
  });
}

void sc_verify_config_default(sc_verify_config* cfg) {
  if (!cfg) return;
  VerifyConfig d;
  cfg->kmax = d.kmax;
  cfg->dims = kDefaultDims;
  cfg->n_dims = sizeof kDefaultDims / sizeof kDefaultDims[0];
  cfg->trials = d.trials;
  cfg->max_degree = d.max_degree;
  cfg->seed = d.seed;
}

size_t sc_suite_count(void) { return suite_names().size(); }

const char* sc_suite_name(size_t index) {
  return index < suite_names().size() ? suite_names()[index].c_str() : nullptr;
}

sc_status sc_verify_run(const char* suite, const sc_verify_config* cfg, sc_report** out) {
  return guarded([&] {
    require(out, "out");
    VerifyConfig c;
    if (cfg) {
      c.kmax = cfg->kmax;
      if (cfg->n_dims > 0) {
        require(cfg->dims, "cfg->dims");
        c.dims.assign(cfg->dims, cfg->dims + cfg->n_dims);
      }
      c.trials = cfg->trials;
      c.max_degree = cfg->max_degree;
      c.seed = cfg->seed;
    }
    if (c.dims.empty()) throw Error(ErrorCode::InvalidArgument, "at least one dimension is required");
    if (c.kmax > 32) throw Error(ErrorCode::InvalidArgument, "kmax above 32 is not supported");
    std::vector<std::string> names = suite ? std::vector<std::string>{suite} : suite_names();
    *out = new sc_report{run_suites(names, c)};
  });
}

int sc_report_all_pass(const sc_report* report) {
  if (!report) return 0;
  for (const auto& r : report->reports)
    if (!r.all_pass()) return 0;
  return 1;
}

sc_status sc_report_render(const sc_report* report, sc_format format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = dup(render_reports(report->reports, to_format(format)));
  });
}

void sc_report_free(sc_report* report) { delete report; }

sc_status sc_table_prop35(unsigned kmax, unsigned lmax, sc_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    if (kmax > 64) throw Error(ErrorCode::InvalidArgument, "kmax above 64 is not supported");
    *out = dup(render_prop35_table(kmax, lmax, to_format(format)));
  });
}

}  // extern "C"
