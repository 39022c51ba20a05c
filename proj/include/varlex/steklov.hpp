#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "varlex/exponent.hpp"
#include "varlex/family.hpp"
#include "varlex/grid.hpp"

namespace varlex {

// |B(0,1)| in R^n; exact closed forms for n in {1,2}.
double unit_ball_volume(int dim);

enum class BallNormalization {
  continuum,     // divide by v_n h^n (matches the analytic formulas)
  discrete_mass  // divide by the discrete ball mass; preserves constants exactly
};

struct SteklovOptions {
  BallNormalization normalization = BallNormalization::continuum;
  // Radii below 2x the cell spacing degenerate the discrete ball; they are
  // rejected unless explicitly allowed.
  bool allow_under_resolved = false;
};

// The scalar every in-ball sample contributes under continuum normalization.
double steklov_weight(const GridDomain& domain, double h);

// f_h(x) = average of f over B(x,h), with f zero beyond the domain.
GridFunction steklov_apply(const GridFunction& f, double h,
                           const SteklovOptions& options = {});

// Radial kernel phi(x) = g(|x|) supported on |x| <= R, held as a normalized
// piecewise-constant radial profile together with its radial majorant
// sup_{|y| >= |x|} |phi(y)|.
class ApproximateIdentity {
 public:
  // "ball", "triangle", "gauss-truncated:<R>".
  static ApproximateIdentity preset(const std::string& name, int dim);

  static ApproximateIdentity from_radial(const std::function<double(double)>& g,
                                         double support, int dim,
                                         std::size_t bins = 4096);

  int dim() const { return dim_; }
  double support() const { return support_; }
  double bin_width() const { return bin_width_; }

  // phi at radius r (normalized so the kernel has unit mass).
  double value_at(double r) const;

  const std::vector<double>& profile() const { return profile_; }
  const std::vector<double>& majorant() const { return majorant_; }
  double majorant_integral() const { return majorant_integral_; }

  // Unit mass recomputed by the construction quadrature (diagnostic).
  double mass() const { return mass_; }

 private:
  ApproximateIdentity() = default;

  int dim_ = 1;
  double support_ = 1.0;
  double bin_width_ = 0.0;
  std::vector<double> profile_;
  std::vector<double> majorant_;
  double majorant_integral_ = 0.0;
  double mass_ = 1.0;
};

struct RadialMajorant {
  std::vector<double> samples;
  double integral = 0.0;
  double bin_width = 0.0;
};

RadialMajorant radial_majorant(const ApproximateIdentity& phi);

// Discrete convolution (phi_t * f)(x) with phi_t = t^{-n} phi(x/t) and zero
// extension; reduces to steklov_apply for the ball preset with t = h.
GridFunction mollify(const GridFunction& f, const ApproximateIdentity& phi,
                     double t);

struct MollifierBoundEntry {
  std::size_t member = 0;
  double t = 0.0;
  double ratio = 0.0;  // ||phi_t * f|| / ||f||
};

struct MollifierBoundReport {
  double c_est = 0.0;
  std::vector<MollifierBoundEntry> ratios;
};

MollifierBoundReport mollifier_bound_check(const FunctionFamily& family,
                                           const ApproximateIdentity& phi,
                                           const std::vector<double>& t_schedule,
                                           const ExponentField& p);

inline constexpr std::size_t kDenseMatrixCellLimit = 4096;

// Dense discretization of the averaging operator. Entries are
// cell_volume/(v_n h^n) at in-ball columns; apply() reproduces
// steklov_apply bit for bit.
class SteklovMatrix {
 public:
  SteklovMatrix(GridDomain domain, double h, std::vector<double> entries);

  const GridDomain& domain() const { return domain_; }
  double radius() const { return h_; }
  std::size_t size() const { return n_; }
  double entry(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  const std::vector<double>& entries() const { return entries_; }

  GridFunction apply(const GridFunction& f) const;
  std::vector<double> row_sums() const;

 private:
  GridDomain domain_;
  double h_;
  std::size_t n_;
  std::vector<double> entries_;
};

SteklovMatrix steklov_matrix(const GridDomain& domain, double h,
                             const SteklovOptions& options = {});

struct UniformBoundReport {
  double k = 0.0;            // Holder constant sup 1/p + sup 1/q
  double norm_bound = 0.0;   // M = max member norm
  double ball_volume = 0.0;  // v_n h^n
  double rhs = 0.0;          // k M (v_n h^n)^{1/q_-}
  double conservative_rhs = 0.0;  // k M (v_n h^n)^{1/q_+}, always valid
  double grid_slack = 0.0;   // discrete-ball measure overshoot, folded into tol
  double worst_ratio = 0.0;  // max member lhs / rhs
  std::size_t worst_member = 0;
  bool holds = false;
  std::vector<double> member_lhs;  // sup_x v_n h^n |f_h(x)| per member
};

// Checks sup_x v_n h^n |f_h(x)| <= k M (v_n h^n)^{1/q_-} for every member;
// requires v_n h^n <= 1.
UniformBoundReport uniform_bound_check(const FunctionFamily& family, double h,
                                       const ExponentField& p);

// 2 n v_n |u| (2h)^{n-1}; requires |u| <= h.
double theta_bound(const Point& u, double h, int dim);

// Grid measure of Theta(x,u,h) = B(x,|u|+h)\B(x,h) union B(x,h)\B(x,h-|u|),
// i.e. the annulus h-|u| <= d < h+|u| around x, clipped to the domain.
double measured_theta(const Point& x, const Point& u, double h,
                      const GridDomain& domain);

// Grid measure of B(x+u,h) symmetric-difference B(x,h); always bounded by
// measured_theta cell by cell.
double measured_ball_sym_diff(const Point& x, const Point& u, double h,
                              const GridDomain& domain);

struct EquicontinuityResult {
  double c_lip = 0.0;  // max |f(x+u)-f(x)| / |u| over members, cells, offsets
  std::size_t worst_member = 0;
  std::size_t worst_cell = 0;
  Point worst_offset;
};

// Measured Lipschitz modulus of a family over lattice offsets with
// 0 < |u| <= h; both endpoints are kept inside the domain.
EquicontinuityResult equicontinuity_modulus(const FunctionFamily& family_hh,
                                            double h);

// Lattice offsets used by equicontinuity_modulus (exposed for the
// diagnostics that re-walk the same samples).
std::vector<Point> equicontinuity_offsets(const GridDomain& domain, double h);

}  // namespace varlex
