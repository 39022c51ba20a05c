#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "varlex/grid.hpp"

namespace varlex {

// Sampled variable exponent p(.) with cached essential bounds. Sampled
// fields are step functions, so min/max over cells are their exact
// essential bounds.
class ExponentField {
 public:
  ExponentField(GridDomain domain, std::vector<double> samples);

  static ExponentField constant(const GridDomain& domain, double p0);

  template <class F>
  static ExponentField sample(const GridDomain& domain, F&& fn) {
    std::vector<double> v(domain.cell_count());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(domain.cell_center(i));
    return ExponentField(domain, std::move(v));
  }

  // Named presets: "const:<v>", "affine:<a>,<b>" (p = a + b*x1),
  // "sin:<base>,<amp>,<freq>" (p = base + amp*sin(2*pi*freq*x1)).
  static ExponentField preset(const GridDomain& domain, const std::string& spec);

  const GridDomain& domain() const { return domain_; }
  std::span<const double> samples() const { return samples_; }
  double operator[](std::size_t i) const { return samples_[i]; }
  double p_minus() const { return p_minus_; }
  double p_plus() const { return p_plus_; }
  bool is_constant() const { return p_minus_ == p_plus_; }

 private:
  GridDomain domain_;
  std::vector<double> samples_;
  double p_minus_ = 1.0;
  double p_plus_ = 1.0;
};

// Pointwise conjugate exponent; q = +infinity where p = 1. Infinity is kept
// as the IEEE value and treated explicitly by the norm routines.
class DualExponentField {
 public:
  DualExponentField(GridDomain domain, std::vector<double> samples,
                    double q_minus);

  const GridDomain& domain() const { return domain_; }
  std::span<const double> samples() const { return samples_; }
  double operator[](std::size_t i) const { return samples_[i]; }

  // min over cells; +infinity when p == 1 everywhere.
  double q_minus() const { return q_minus_; }
  bool any_infinite() const { return any_infinite_; }
  bool all_infinite() const { return all_infinite_; }

  static constexpr double infinity() {
    return std::numeric_limits<double>::infinity();
  }

 private:
  GridDomain domain_;
  std::vector<double> samples_;
  double q_minus_;
  bool any_infinite_ = false;
  bool all_infinite_ = true;
};

DualExponentField dual_exponent(const ExponentField& p);

struct LogHolderResult {
  double c_star = 0.0;         // max |p(x)-p(y)| * (-ln|x-y|) over sampled pairs
  std::size_t worst_a = 0;     // cell indices of the attaining pair
  std::size_t worst_b = 0;
  std::size_t pairs_checked = 0;
  bool subsampled = false;
};

// Scans pairs with 0 < |x-y| <= 1/2. All pairs when the pair count is within
// budget, otherwise adjacent-cell pairs plus a seeded uniform subsample.
LogHolderResult log_holder_check(const ExponentField& p);

// max over cells of |p(x) - p_inf| * ln(2 + |x|); always finite on a box.
double decay_check(const ExponentField& p, double p_inf);

}  // namespace varlex
