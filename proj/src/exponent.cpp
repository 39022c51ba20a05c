#include "varlex/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "varlex/parallel.hpp"
#include "varlex/rng.hpp"

namespace varlex {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr std::size_t kPairBudget = 1000000;

std::vector<double> parse_numbers(const std::string& csv, std::size_t expected,
                                  const std::string& context) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string token =
        csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (...) {
      throw std::invalid_argument(context + ": cannot parse number '" + token + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != expected)
    throw std::invalid_argument(context + ": expected " +
                                std::to_string(expected) + " parameters");
  return out;
}

}  // namespace

ExponentField::ExponentField(GridDomain domain, std::vector<double> samples)
    : domain_(std::move(domain)), samples_(std::move(samples)) {
  if (samples_.size() != domain_.cell_count())
    throw std::invalid_argument(
        "ExponentField: sample count does not match the grid");
  double lo = samples_[0], hi = samples_[0];
  for (double v : samples_) {
    if (!std::isfinite(v) || v < 1.0)
      throw std::invalid_argument(
          "ExponentField: exponents must be finite and >= 1");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  p_minus_ = lo;
  p_plus_ = hi;
}

ExponentField ExponentField::constant(const GridDomain& domain, double p0) {
  return ExponentField(domain,
                       std::vector<double>(domain.cell_count(), p0));
}

ExponentField ExponentField::preset(const GridDomain& domain,
                                    const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  if (name == "const") {
    const auto v = parse_numbers(args, 1, "exponent preset const");
    return constant(domain, v[0]);
  }
  if (name == "affine") {
    const auto v = parse_numbers(args, 2, "exponent preset affine");
    return sample(domain,
                  [&](const Point& p) { return v[0] + v[1] * p.x; });
  }
  if (name == "sin") {
    const auto v = parse_numbers(args, 3, "exponent preset sin");
    return sample(domain, [&](const Point& p) {
      return v[0] + v[1] * std::sin(kTwoPi * v[2] * p.x);
    });
  }
  throw std::invalid_argument("unknown exponent preset '" + spec + "'");
}

DualExponentField::DualExponentField(GridDomain domain,
                                     std::vector<double> samples,
                                     double q_minus)
    : domain_(std::move(domain)),
      samples_(std::move(samples)),
      q_minus_(q_minus) {
  for (double v : samples_) {
    if (std::isinf(v))
      any_infinite_ = true;
    else
      all_infinite_ = false;
  }
}

DualExponentField dual_exponent(const ExponentField& p) {
  std::vector<double> q(p.samples().size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double pi = p[i];
    q[i] = pi > 1.0 ? pi / (pi - 1.0) : DualExponentField::infinity();
  }
  const double q_minus = p.p_plus() > 1.0
                             ? p.p_plus() / (p.p_plus() - 1.0)
                             : DualExponentField::infinity();
  return DualExponentField(p.domain(), std::move(q), q_minus);
}

LogHolderResult log_holder_check(const ExponentField& p) {
  const GridDomain& dom = p.domain();
  const std::size_t n = dom.cell_count();
  if (n < 2)
    throw std::invalid_argument("log_holder_check: need at least 2 cells");

  LogHolderResult result;
  const int dim = dom.dim();

  auto score = [&](std::size_t a, std::size_t b) {
    const double d =
        std::sqrt(dist_sq(dom.cell_center(a), dom.cell_center(b), dim));
    if (!(d > 0.0) || d > 0.5) return -1.0;
    return std::fabs(p[a] - p[b]) * (-std::log(d));
  };

  auto consider = [&](std::size_t a, std::size_t b) {
    const double s = score(a, b);
    ++result.pairs_checked;
    if (s > result.c_star) {
      result.c_star = s;
      result.worst_a = a;
      result.worst_b = b;
    }
  };

  const std::size_t all_pairs = n * (n - 1) / 2;
  if (all_pairs <= kPairBudget) {
    // Exhaustive scan; best score per row, rows merged in index order.
    std::vector<double> best(n, -1.0);
    std::vector<std::size_t> best_j(n, 0);
#pragma omp parallel for schedule(static) num_threads(varlex::thread_count())
    for (long long ia = 0; ia < static_cast<long long>(n); ++ia) {
      const auto a = static_cast<std::size_t>(ia);
      for (std::size_t b = a + 1; b < n; ++b) {
        const double s = score(a, b);
        if (s > best[a]) {
          best[a] = s;
          best_j[a] = b;
        }
      }
    }
    result.pairs_checked = all_pairs;
    for (std::size_t a = 0; a < n; ++a) {
      if (best[a] > result.c_star) {
        result.c_star = best[a];
        result.worst_a = a;
        result.worst_b = best_j[a];
      }
    }
    return result;
  }

  result.subsampled = true;
  // Adjacent pairs catch the local (discontinuity) worst case.
  const std::size_t nx = dom.cells(0);
  const std::size_t ny = dom.cells(1);
  for (std::size_t iy = 0; iy < ny; ++iy)
    for (std::size_t ix = 0; ix + 1 < nx; ++ix)
      consider(dom.linear_index(ix, iy), dom.linear_index(ix + 1, iy));
  if (dim == 2)
    for (std::size_t iy = 0; iy + 1 < ny; ++iy)
      for (std::size_t ix = 0; ix < nx; ++ix)
        consider(dom.linear_index(ix, iy), dom.linear_index(ix, iy + 1));

  Rng rng(0x9e3779b97f4a7c15ull);
  const std::size_t samples = kPairBudget;
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t a = rng.index(n);
    const std::size_t b = rng.index(n);
    if (a == b) continue;
    consider(a, b);
  }
  return result;
}

double decay_check(const ExponentField& p, double p_inf) {
  const GridDomain& dom = p.domain();
  const int dim = dom.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < dom.cell_count(); ++i) {
    const double r = point_norm(dom.cell_center(i), dim);
    const double v = std::fabs(p[i] - p_inf) * std::log(2.0 + r);
    if (v > worst) worst = v;
  }
  return worst;
}

}  // namespace varlex
