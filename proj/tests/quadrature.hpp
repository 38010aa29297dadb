#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include <gsl/gsl_integration.h>
#include <gsl/gsl_math.h>

#include "poly.hpp"

namespace quad {

using signumcalc::MultiIndex;

inline double mono(const std::vector<double>& w, const MultiIndex& a) {
  double v = 1;
  for (std::size_t i = 0; i < w.size(); ++i) v *= std::pow(w[i], a[i]);
  return v;
}

/// Mean of w^a over the unit circle by the N-point trapezoid rule.
inline double circle_mean(const MultiIndex& a, unsigned points = 64) {
  double sum = 0;
  for (unsigned i = 0; i < points; ++i) {
    double t = 2 * M_PI * i / points;
    sum += mono({std::cos(t), std::sin(t)}, a);
  }
  return sum / points;
}

/// Mean of w^a over the unit 2-sphere: Gauss-Legendre in cos(theta) times
/// Gauss-Legendre in the azimuth.
inline double sphere_mean(const MultiIndex& a, unsigned nt = 16, unsigned nphi = 48) {
  gsl_integration_glfixed_table* tt = gsl_integration_glfixed_table_alloc(nt);
  gsl_integration_glfixed_table* tp = gsl_integration_glfixed_table_alloc(nphi);
  double sum = 0;
  for (unsigned i = 0; i < nt; ++i) {
    double t, wt;
    gsl_integration_glfixed_point(-1, 1, i, &t, &wt, tt);
    double s = std::sqrt(1 - t * t);
    for (unsigned j = 0; j < nphi; ++j) {
      double p, wp;
      gsl_integration_glfixed_point(0, 2 * M_PI, j, &p, &wp, tp);
      sum += wt * wp * mono({s * std::cos(p), s * std::sin(p), t}, a);
    }
  }
  gsl_integration_glfixed_table_free(tt);
  gsl_integration_glfixed_table_free(tp);
  return sum / (4 * M_PI);
}

/// Every multi-index of length m with |a| <= max_degree.
inline std::vector<MultiIndex> indices(unsigned m, unsigned max_degree) {
  std::vector<MultiIndex> out;
  MultiIndex a(m, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
    if (i == m) {
      out.push_back(a);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      a[i] = k;
      rec(i + 1, left - k);
    }
    a[i] = 0;
  };
  rec(0, max_degree);
  return out;
}

/// Largest |sphere_moment - quadrature| over |a| <= 8 in dimension m (2 or 3).
inline double max_moment_error(unsigned m) {
  double worst = 0;
  for (const auto& a : indices(m, 8)) {
    double exact = signumcalc::sphere_moment(a, m).to_double();
    double numeric = m == 2 ? circle_mean(a) : sphere_mean(a);
    worst = std::max(worst, std::abs(exact - numeric));
  }
  return worst;
}

}  // namespace quad
