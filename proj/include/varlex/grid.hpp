#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace varlex {

struct Point {
  double x = 0.0;
  double y = 0.0;  // ignored for 1-D domains
};

inline double dist_sq(const Point& a, const Point& b, int dim) {
  const double dx = a.x - b.x;
  double s = dx * dx;
  if (dim == 2) {
    const double dy = a.y - b.y;
    s += dy * dy;
  }
  return s;
}

double point_norm(const Point& u, int dim);

// Open-ball membership; boundary points are excluded.
inline bool in_open_ball(const Point& center, double radius_sq, const Point& p,
                         int dim) {
  return dist_sq(center, p, dim) < radius_sq;
}

// Bounded axis-aligned box in R^n (n in {1,2}) carrying a uniform cell grid.
// Integrals are midpoint sums over cell centers; functions are extended by
// zero beyond the box.
class GridDomain {
 public:
  static GridDomain interval(double lower, double upper, std::size_t cells);
  static GridDomain box(Point lower, Point upper, std::size_t cells_x,
                        std::size_t cells_y);

  int dim() const { return dim_; }
  std::size_t cell_count() const { return nx_ * ny_; }
  std::size_t cells(int axis) const { return axis == 0 ? nx_ : ny_; }
  double lower(int axis) const { return axis == 0 ? lo_.x : lo_.y; }
  double upper(int axis) const { return axis == 0 ? hi_.x : hi_.y; }
  double spacing(int axis) const { return axis == 0 ? dx_ : dy_; }
  double max_spacing() const { return dim_ == 2 && dy_ > dx_ ? dy_ : dx_; }
  double cell_volume() const { return volume_; }
  double measure() const { return volume_ * static_cast<double>(cell_count()); }

  Point cell_center(std::size_t i) const {
    const std::size_t ix = i % nx_;
    const std::size_t iy = i / nx_;
    Point p;
    p.x = lo_.x + (static_cast<double>(ix) + 0.5) * dx_;
    if (dim_ == 2) p.y = lo_.y + (static_cast<double>(iy) + 0.5) * dy_;
    return p;
  }

  std::size_t linear_index(std::size_t ix, std::size_t iy) const {
    return ix + nx_ * iy;
  }

  bool operator==(const GridDomain&) const = default;

 private:
  GridDomain() = default;

  int dim_ = 1;
  Point lo_, hi_;
  std::size_t nx_ = 0, ny_ = 1;
  double dx_ = 0.0, dy_ = 1.0;
  double volume_ = 0.0;
};

// Real-valued samples at cell centers, zero beyond the domain.
class GridFunction {
 public:
  GridFunction(GridDomain domain, std::vector<double> samples);

  static GridFunction zeros(const GridDomain& domain);
  static GridFunction constant(const GridDomain& domain, double value);

  template <class F>
  static GridFunction sample(const GridDomain& domain, F&& fn) {
    std::vector<double> v(domain.cell_count());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(domain.cell_center(i));
    return GridFunction(domain, std::move(v));
  }

  const GridDomain& domain() const { return domain_; }
  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double operator[](std::size_t i) const { return samples_[i]; }

  double max_abs() const;
  bool all_finite() const;
  bool all_zero() const;

 private:
  GridDomain domain_;
  std::vector<double> samples_;
};

GridFunction operator+(const GridFunction& f, const GridFunction& g);
GridFunction operator-(const GridFunction& f, const GridFunction& g);
GridFunction operator*(double c, const GridFunction& f);

// Measurable set realized as per-cell membership flags.
class IndicatorSet {
 public:
  IndicatorSet(GridDomain domain, std::vector<std::uint8_t> flags);

  static IndicatorSet empty(const GridDomain& domain);

  template <class F>
  static IndicatorSet from_predicate(const GridDomain& domain, F&& pred) {
    std::vector<std::uint8_t> flags(domain.cell_count());
    for (std::size_t i = 0; i < flags.size(); ++i)
      flags[i] = pred(domain.cell_center(i)) ? 1 : 0;
    return IndicatorSet(domain, std::move(flags));
  }

  const GridDomain& domain() const { return domain_; }
  bool contains(std::size_t i) const { return flags_[i] != 0; }
  std::size_t count() const;
  double measure() const;
  GridFunction to_function() const;

 private:
  GridDomain domain_;
  std::vector<std::uint8_t> flags_;
};

double integrate(const GridFunction& f);

IndicatorSet ball_indicator(const Point& center, double radius,
                            const GridDomain& domain);

double symmetric_difference_measure(const IndicatorSet& a,
                                    const IndicatorSet& b);

void require_same_domain(const GridDomain& a, const GridDomain& b,
                         const char* what);

}  // namespace varlex
