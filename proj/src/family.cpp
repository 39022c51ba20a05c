#include "varlex/family.hpp"

#include <cmath>
#include <stdexcept>

#include "varlex/norms.hpp"
#include "varlex/parallel.hpp"
#include "varlex/rng.hpp"

namespace varlex {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct GeneratorSpec {
  std::string name;
  std::vector<std::uint64_t> params;
};

GeneratorSpec parse_generator(const std::string& spec) {
  GeneratorSpec out;
  const std::size_t colon = spec.find(':');
  out.name = spec.substr(0, colon);
  if (colon == std::string::npos) return out;
  std::string args = spec.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= args.size()) {
    const std::size_t comma = args.find(',', pos);
    const std::string token = args.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      out.params.push_back(std::stoull(token));
    } catch (...) {
      throw std::invalid_argument("family generator '" + spec +
                                  "': cannot parse parameter '" + token + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void require_1d(const GridDomain& domain, const std::string& name) {
  if (domain.dim() != 1)
    throw std::invalid_argument("family generator '" + name +
                                "' is defined for 1-D domains only");
}

// Smooth 1-D draw: c0 + sum_{k=1..4} (a_k cos + b_k sin)(2 pi k x)/(1+k)^2,
// with |c0| >= 1/4 so the L2 norm is bounded below by 1/4.
void smooth_series(Rng& rng, std::vector<double>& a, std::vector<double>& b,
                   double& c0) {
  c0 = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.25, 1.0);
  a.resize(4);
  b.resize(4);
  for (int k = 0; k < 4; ++k) {
    const double damp = (1.0 + (k + 1)) * (1.0 + (k + 1));
    a[k] = rng.uniform(-1.0, 1.0) / damp;
    b[k] = rng.uniform(-1.0, 1.0) / damp;
  }
}

GridFunction smooth_1d(const GridDomain& domain, Rng& rng) {
  std::vector<double> a, b;
  double c0;
  smooth_series(rng, a, b, c0);
  const double lo = domain.lower(0);
  const double len = domain.upper(0) - lo;
  return GridFunction::sample(domain, [&](const Point& p) {
    const double t = (p.x - lo) / len;
    double v = c0;
    for (int k = 0; k < 4; ++k) {
      v += a[k] * std::cos(kTwoPi * (k + 1) * t) +
           b[k] * std::sin(kTwoPi * (k + 1) * t);
    }
    return v;
  });
}

}  // namespace

FunctionFamily make_family(std::vector<GridFunction> members, std::string label,
                           std::string generator) {
  if (members.empty())
    throw std::invalid_argument("FunctionFamily: must be nonempty");
  for (const auto& m : members)
    require_same_domain(m.domain(), members.front().domain(), "FunctionFamily");
  return FunctionFamily{std::move(members), std::move(label),
                        std::move(generator)};
}

GridFunction random_smooth_function(const GridDomain& domain,
                                    std::uint64_t seed) {
  Rng rng(seed);
  if (domain.dim() == 1) return smooth_1d(domain, rng);
  // Boxes: product of independent smooth profiles in x and y.
  std::vector<double> ax, bx, ay, by;
  double cx, cy;
  smooth_series(rng, ax, bx, cx);
  smooth_series(rng, ay, by, cy);
  const double lox = domain.lower(0), lenx = domain.upper(0) - lox;
  const double loy = domain.lower(1), leny = domain.upper(1) - loy;
  return GridFunction::sample(domain, [&](const Point& p) {
    const double tx = (p.x - lox) / lenx;
    const double ty = (p.y - loy) / leny;
    double vx = cx, vy = cy;
    for (int k = 0; k < 4; ++k) {
      vx += ax[k] * std::cos(kTwoPi * (k + 1) * tx) +
            bx[k] * std::sin(kTwoPi * (k + 1) * tx);
      vy += ay[k] * std::cos(kTwoPi * (k + 1) * ty) +
            by[k] * std::sin(kTwoPi * (k + 1) * ty);
    }
    return vx * vy;
  });
}

FunctionFamily generate_family(const std::string& spec,
                               const GridDomain& domain,
                               std::uint64_t default_seed) {
  const GeneratorSpec gen = parse_generator(spec);
  std::vector<GridFunction> members;

  if (gen.name == "constants") {
    if (gen.params.size() != 1 || gen.params[0] == 0)
      throw std::invalid_argument("constants:<m> requires m >= 1");
    const auto m = static_cast<double>(gen.params[0]);
    for (std::uint64_t j = 1; j <= gen.params[0]; ++j)
      members.push_back(
          GridFunction::constant(domain, static_cast<double>(j) / m));
  } else if (gen.name == "translates") {
    require_1d(domain, gen.name);
    if (gen.params.size() != 1 || gen.params[0] == 0)
      throw std::invalid_argument("translates:<m> requires m >= 1");
    const std::uint64_t m = gen.params[0];
    const double lo = domain.lower(0);
    const double len = domain.upper(0) - lo;
    for (std::uint64_t j = 0; j < m; ++j) {
      const double a =
          m == 1 ? 0.0
                 : 0.75 * static_cast<double>(j) / static_cast<double>(m - 1);
      members.push_back(GridFunction::sample(domain, [&](const Point& p) {
        const double t = (p.x - lo) / len;
        return (t >= a && t < a + 0.25) ? 1.0 : 0.0;
      }));
    }
  } else if (gen.name == "oscillations") {
    require_1d(domain, gen.name);
    if (gen.params.size() != 1 || gen.params[0] == 0)
      throw std::invalid_argument("oscillations:<K> requires K >= 1");
    const double lo = domain.lower(0);
    const double len = domain.upper(0) - lo;
    for (std::uint64_t k = 1; k <= gen.params[0]; ++k) {
      members.push_back(GridFunction::sample(domain, [&](const Point& p) {
        return std::sin(kTwoPi * static_cast<double>(k) * (p.x - lo) / len);
      }));
    }
  } else if (gen.name == "lipschitz-bumps") {
    require_1d(domain, gen.name);
    if (gen.params.size() != 1 || gen.params[0] == 0)
      throw std::invalid_argument("lipschitz-bumps:<m> requires m >= 1");
    const std::uint64_t m = gen.params[0];
    const double lo = domain.lower(0);
    const double len = domain.upper(0) - lo;
    // Bump supports stay inside the domain so the zero extension is exact
    // and the family is uniformly Lipschitz up to the boundary.
    for (std::uint64_t j = 0; j < m; ++j) {
      const double a =
          m == 1 ? 0.5
                 : 0.25 + 0.5 * static_cast<double>(j) / static_cast<double>(m - 1);
      members.push_back(GridFunction::sample(domain, [&](const Point& p) {
        const double t = (p.x - lo) / len;
        return std::max(0.0, 1.0 - 4.0 * std::fabs(t - a));
      }));
    }
  } else if (gen.name == "random-smooth") {
    if (gen.params.empty() || gen.params.size() > 2 || gen.params[0] == 0)
      throw std::invalid_argument(
          "random-smooth:<m>[,<seed>] requires m >= 1");
    const std::uint64_t seed =
        gen.params.size() == 2 ? gen.params[1] : default_seed;
    for (std::uint64_t j = 0; j < gen.params[0]; ++j)
      members.push_back(random_smooth_function(domain, seed + j));
  } else {
    throw std::invalid_argument("unknown family generator '" + spec + "'");
  }

  return make_family(std::move(members), gen.name, spec);
}

std::vector<double> member_norms(const FunctionFamily& family,
                                 const ExponentField& p) {
  std::vector<double> norms(family.size(), 0.0);
#pragma omp parallel for schedule(dynamic) num_threads(varlex::thread_count())
  for (long long i = 0; i < static_cast<long long>(family.size()); ++i)
    norms[static_cast<std::size_t>(i)] =
        luxemburg_norm(family.members[static_cast<std::size_t>(i)], p).value;
  return norms;
}

double family_norm_bound(const FunctionFamily& family,
                         const ExponentField& p) {
  double m = 0.0;
  for (double v : member_norms(family, p)) m = std::max(m, v);
  return m;
}

}  // namespace varlex
