#pragma once

#include "varlex/exponent.hpp"
#include "varlex/grid.hpp"

namespace varlex {

// Bisection target on |I_p(f/lambda) - 1| and its iteration cap.
inline constexpr double kModularTolerance = 1e-12;
inline constexpr int kMaxNormIterations = 200;

// Absolute slack applied to inequality checks (two orders above the
// bisection tolerance, well below quadrature error at working resolutions).
inline constexpr double kInequalitySlack = 1e-8;

struct NormResult {
  double value = 0.0;
  double modular_at_value = 0.0;  // I_p(f/value); within 1e-10 of 1 when value > 0
  int iterations = 0;
};

// I_p(f) = sum |f_i|^{p_i} * cell_volume.
double modular(const GridFunction& f, const ExponentField& p);

// I_p(f/lambda) without materializing the scaled function.
double modular_scaled(const GridFunction& f, const ExponentField& p,
                      double lambda);

// Luxemburg norm: the unique lambda with I_p(f/lambda) = 1 (0 for f == 0).
// The modular is strictly decreasing in lambda, so bisection from the
// norm-modular bracket converges unconditionally.
NormResult luxemburg_norm(const GridFunction& f, const ExponentField& p);

// Luxemburg norm against a dual field that may carry q = infinity.
// Cells with q = infinity contribute 0 to the modular when |g/lambda| <= 1
// and +infinity otherwise; reduces to the essential supremum when all q are
// infinite and to luxemburg_norm when all are finite.
double luxemburg_norm_infty(const GridFunction& g, const DualExponentField& q);

struct HolderCheck {
  double lhs = 0.0;  // integral of |f g|
  double rhs = 0.0;  // k * ||f||_p * ||g||_q
  double k = 0.0;    // sup 1/p + sup 1/q
  bool holds = false;
};

HolderCheck holder_check(const GridFunction& f, const GridFunction& g,
                         const ExponentField& p);

// Which cells supply the p_-, p_+ used in the indicator bounds.
enum class ExponentScope { set_restricted, whole_domain };

struct IndicatorBounds {
  double lower = 0.0;
  double upper = 0.0;
  double actual = 0.0;
  bool holds = false;
};

// Bracket |E|^{1/p_-}, |E|^{1/p_+} around ||chi_E||, ordered by min/max so
// that both the |E| <= 1 and the reversed |E| >= 1 branch come out right.
IndicatorBounds indicator_norm_bounds(
    const IndicatorSet& set, const ExponentField& p,
    ExponentScope scope = ExponentScope::set_restricted);

// |f| <= |g| pointwise (rejected otherwise) must imply norm domination.
bool ideal_check(const GridFunction& f, const GridFunction& g,
                 const ExponentField& p);

}  // namespace varlex
