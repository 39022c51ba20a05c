#include "varlex/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "varlex/parallel.hpp"

namespace varlex {
namespace {

double clamp_exponent_root(double base, double inv_exp) {
  // pow with the convention needed for bracket seeds; base > 0 expected.
  return std::pow(base, inv_exp);
}

}  // namespace

double modular(const GridFunction& f, const ExponentField& p) {
  require_same_domain(f.domain(), p.domain(), "modular");
  const auto fs = f.samples();
  const auto ps = p.samples();
  const double sum = deterministic_sum(fs.size(), [&](std::size_t i) {
    return std::pow(std::fabs(fs[i]), ps[i]);
  });
  return sum * f.domain().cell_volume();
}

double modular_scaled(const GridFunction& f, const ExponentField& p,
                      double lambda) {
  require_same_domain(f.domain(), p.domain(), "modular_scaled");
  if (!(lambda > 0.0))
    throw std::invalid_argument("modular_scaled: lambda must be positive");
  const auto fs = f.samples();
  const auto ps = p.samples();
  const double sum = deterministic_sum(fs.size(), [&](std::size_t i) {
    return std::pow(std::fabs(fs[i]) / lambda, ps[i]);
  });
  return sum * f.domain().cell_volume();
}

NormResult luxemburg_norm(const GridFunction& f, const ExponentField& p) {
  require_same_domain(f.domain(), p.domain(), "luxemburg_norm");
  if (!f.all_finite())
    throw std::invalid_argument("luxemburg_norm: non-finite sample");
  if (f.all_zero()) return NormResult{};

  // Work on f/scale with scale = max|f| so the modular of the rescaled
  // function is pinned inside [cell_volume, |Omega|]; the norm is absolutely
  // homogeneous, so the result is scale * lambda.
  const double scale = f.max_abs();
  const auto fs = f.samples();
  const auto ps = p.samples();
  const double volume = f.domain().cell_volume();

  auto scaled_modular = [&](double lambda) {
    const double denom = scale * lambda;
    const double sum = deterministic_sum(fs.size(), [&](std::size_t i) {
      return std::pow(std::fabs(fs[i]) / denom, ps[i]);
    });
    return sum * volume;
  };

  NormResult result;
  const double m1 = scaled_modular(1.0);
  double lo, hi;  // modular(lo) >= 1 >= modular(hi)
  if (m1 <= 1.0) {
    lo = clamp_exponent_root(m1, 1.0 / p.p_minus());
    hi = clamp_exponent_root(m1, 1.0 / p.p_plus());
  } else {
    lo = clamp_exponent_root(m1, 1.0 / p.p_plus());
    hi = clamp_exponent_root(m1, 1.0 / p.p_minus());
  }
  // Rounding can nudge the analytic bracket off by an ulp; expand until it
  // actually brackets the root.
  for (int guard = 0; guard < 64 && scaled_modular(hi) > 1.0; ++guard) hi *= 2.0;
  for (int guard = 0; guard < 64 && scaled_modular(lo) < 1.0; ++guard) lo *= 0.5;

  double mid = 0.5 * (lo + hi);
  double m_mid = scaled_modular(mid);
  while (result.iterations < kMaxNormIterations) {
    ++result.iterations;
    mid = 0.5 * (lo + hi);
    m_mid = scaled_modular(mid);
    if (std::fabs(m_mid - 1.0) <= kModularTolerance) break;
    if (m_mid > 1.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= mid * std::numeric_limits<double>::epsilon()) break;
  }

  result.value = scale * mid;
  result.modular_at_value = modular_scaled(f, p, result.value);
  return result;
}

double luxemburg_norm_infty(const GridFunction& g,
                            const DualExponentField& q) {
  require_same_domain(g.domain(), q.domain(), "luxemburg_norm_infty");
  if (!g.all_finite())
    throw std::invalid_argument("luxemburg_norm_infty: non-finite sample");

  const auto gs = g.samples();
  const auto qs = q.samples();
  const double volume = g.domain().cell_volume();

  // The infinite-exponent part forces lambda >= sup |g| over that region.
  double lam_min = 0.0;
  double finite_max = 0.0;
  bool have_finite = false;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const double a = std::fabs(gs[i]);
    if (std::isinf(qs[i])) {
      lam_min = std::max(lam_min, a);
    } else {
      have_finite = true;
      finite_max = std::max(finite_max, a);
    }
  }
  if (!have_finite || finite_max == 0.0) return lam_min;

  auto finite_modular = [&](double lambda) {
    const double sum = deterministic_sum(gs.size(), [&](std::size_t i) {
      if (std::isinf(qs[i])) return 0.0;
      return std::pow(std::fabs(gs[i]) / lambda, qs[i]);
    });
    return sum * volume;
  };

  // Root of the finite part, by the same doubling bracket + bisection.
  double hi = finite_max * std::max(1.0, g.domain().measure());
  if (!(hi > 0.0)) hi = 1.0;
  for (int guard = 0; guard < 200 && finite_modular(hi) > 1.0; ++guard) hi *= 2.0;
  double lo = hi;
  for (int guard = 0; guard < 200 && finite_modular(lo * 0.5) <= 1.0; ++guard)
    lo *= 0.5;
  lo *= 0.5;

  double mid = hi;
  for (int iter = 0; iter < kMaxNormIterations; ++iter) {
    mid = 0.5 * (lo + hi);
    const double m = finite_modular(mid);
    if (std::fabs(m - 1.0) <= kModularTolerance) break;
    if (m > 1.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= mid * std::numeric_limits<double>::epsilon()) break;
  }
  return std::max(lam_min, mid);
}

HolderCheck holder_check(const GridFunction& f, const GridFunction& g,
                         const ExponentField& p) {
  require_same_domain(f.domain(), g.domain(), "holder_check");
  require_same_domain(f.domain(), p.domain(), "holder_check");
  const DualExponentField q = dual_exponent(p);

  HolderCheck out;
  const auto fs = f.samples();
  const auto gs = g.samples();
  out.lhs = deterministic_sum(fs.size(), [&](std::size_t i) {
              return std::fabs(fs[i] * gs[i]);
            }) *
            f.domain().cell_volume();
  const double sup_inv_q = std::isinf(q.q_minus()) ? 0.0 : 1.0 / q.q_minus();
  out.k = 1.0 / p.p_minus() + sup_inv_q;
  out.rhs = out.k * luxemburg_norm(f, p).value * luxemburg_norm_infty(g, q);
  out.holds = out.lhs <= out.rhs + kInequalitySlack;
  return out;
}

IndicatorBounds indicator_norm_bounds(const IndicatorSet& set,
                                      const ExponentField& p,
                                      ExponentScope scope) {
  require_same_domain(set.domain(), p.domain(), "indicator_norm_bounds");
  const double m = set.measure();
  if (!(m > 0.0))
    throw std::invalid_argument("indicator_norm_bounds: set has measure zero");

  double p_lo = p.p_minus();
  double p_hi = p.p_plus();
  if (scope == ExponentScope::set_restricted) {
    p_lo = std::numeric_limits<double>::infinity();
    p_hi = 1.0;
    for (std::size_t i = 0; i < set.domain().cell_count(); ++i) {
      if (!set.contains(i)) continue;
      p_lo = std::min(p_lo, p[i]);
      p_hi = std::max(p_hi, p[i]);
    }
  }

  const double a = std::pow(m, 1.0 / p_lo);
  const double b = std::pow(m, 1.0 / p_hi);
  IndicatorBounds out;
  out.lower = std::min(a, b);
  out.upper = std::max(a, b);
  out.actual = luxemburg_norm(set.to_function(), p).value;
  out.holds = out.lower - kInequalitySlack <= out.actual &&
              out.actual <= out.upper + kInequalitySlack;
  return out;
}

bool ideal_check(const GridFunction& f, const GridFunction& g,
                 const ExponentField& p) {
  require_same_domain(f.domain(), g.domain(), "ideal_check");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::fabs(f[i]) > std::fabs(g[i]))
      throw std::invalid_argument(
          "ideal_check: |f| <= |g| violated at cell " + std::to_string(i));
  }
  const double nf = luxemburg_norm(f, p).value;
  const double ng = luxemburg_norm(g, p).value;
  return nf <= ng + kInequalitySlack;
}

}  // namespace varlex
