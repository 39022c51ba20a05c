#include "varlex/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "varlex/parallel.hpp"

namespace varlex {

double point_norm(const Point& u, int dim) {
  return std::sqrt(dist_sq(u, Point{}, dim));
}

GridDomain GridDomain::interval(double lower, double upper,
                                std::size_t cells) {
  if (!(lower < upper))
    throw std::invalid_argument("GridDomain: lower bound must be < upper");
  if (cells == 0)
    throw std::invalid_argument("GridDomain: cell count must be positive");
  GridDomain d;
  d.dim_ = 1;
  d.lo_ = Point{lower, 0.0};
  d.hi_ = Point{upper, 0.0};
  d.nx_ = cells;
  d.ny_ = 1;
  d.dx_ = (upper - lower) / static_cast<double>(cells);
  d.dy_ = 1.0;
  d.volume_ = d.dx_;
  return d;
}

GridDomain GridDomain::box(Point lower, Point upper, std::size_t cells_x,
                           std::size_t cells_y) {
  if (!(lower.x < upper.x) || !(lower.y < upper.y))
    throw std::invalid_argument("GridDomain: lower bounds must be < upper");
  if (cells_x == 0 || cells_y == 0)
    throw std::invalid_argument("GridDomain: cell counts must be positive");
  GridDomain d;
  d.dim_ = 2;
  d.lo_ = lower;
  d.hi_ = upper;
  d.nx_ = cells_x;
  d.ny_ = cells_y;
  d.dx_ = (upper.x - lower.x) / static_cast<double>(cells_x);
  d.dy_ = (upper.y - lower.y) / static_cast<double>(cells_y);
  d.volume_ = d.dx_ * d.dy_;
  return d;
}

GridFunction::GridFunction(GridDomain domain, std::vector<double> samples)
    : domain_(std::move(domain)), samples_(std::move(samples)) {
  if (samples_.size() != domain_.cell_count())
    throw std::invalid_argument(
        "GridFunction: sample count does not match the grid");
}

GridFunction GridFunction::zeros(const GridDomain& domain) {
  return GridFunction(domain, std::vector<double>(domain.cell_count(), 0.0));
}

GridFunction GridFunction::constant(const GridDomain& domain, double value) {
  return GridFunction(domain, std::vector<double>(domain.cell_count(), value));
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : samples_) {
    const double a = std::fabs(v);
    if (a > m) m = a;
  }
  return m;
}

bool GridFunction::all_finite() const {
  for (double v : samples_)
    if (!std::isfinite(v)) return false;
  return true;
}

bool GridFunction::all_zero() const {
  for (double v : samples_)
    if (v != 0.0) return false;
  return true;
}

void require_same_domain(const GridDomain& a, const GridDomain& b,
                         const char* what) {
  if (!(a == b))
    throw std::invalid_argument(std::string(what) +
                                ": arguments live on different grids");
}

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
  require_same_domain(f.domain(), g.domain(), "operator+");
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] + g[i];
  return GridFunction(f.domain(), std::move(v));
}

GridFunction operator-(const GridFunction& f, const GridFunction& g) {
  require_same_domain(f.domain(), g.domain(), "operator-");
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] - g[i];
  return GridFunction(f.domain(), std::move(v));
}

GridFunction operator*(double c, const GridFunction& f) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * f[i];
  return GridFunction(f.domain(), std::move(v));
}

IndicatorSet::IndicatorSet(GridDomain domain, std::vector<std::uint8_t> flags)
    : domain_(std::move(domain)), flags_(std::move(flags)) {
  if (flags_.size() != domain_.cell_count())
    throw std::invalid_argument(
        "IndicatorSet: flag count does not match the grid");
}

IndicatorSet IndicatorSet::empty(const GridDomain& domain) {
  return IndicatorSet(domain,
                      std::vector<std::uint8_t>(domain.cell_count(), 0));
}

std::size_t IndicatorSet::count() const {
  std::size_t n = 0;
  for (std::uint8_t f : flags_) n += f != 0;
  return n;
}

double IndicatorSet::measure() const {
  return static_cast<double>(count()) * domain_.cell_volume();
}

GridFunction IndicatorSet::to_function() const {
  std::vector<double> v(flags_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = flags_[i] ? 1.0 : 0.0;
  return GridFunction(domain_, std::move(v));
}

double integrate(const GridFunction& f) {
  const auto s = f.samples();
  const double sum = deterministic_sum(s.size(), [&](std::size_t i) { return s[i]; });
  return sum * f.domain().cell_volume();
}

IndicatorSet ball_indicator(const Point& center, double radius,
                            const GridDomain& domain) {
  if (!(radius > 0.0))
    throw std::invalid_argument("ball_indicator: radius must be positive");
  const double r_sq = radius * radius;
  const int dim = domain.dim();
  return IndicatorSet::from_predicate(domain, [&](const Point& p) {
    return in_open_ball(center, r_sq, p, dim);
  });
}

double symmetric_difference_measure(const IndicatorSet& a,
                                    const IndicatorSet& b) {
  require_same_domain(a.domain(), b.domain(), "symmetric_difference_measure");
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.domain().cell_count(); ++i)
    n += a.contains(i) != b.contains(i);
  return static_cast<double>(n) * a.domain().cell_volume();
}

}  // namespace varlex
