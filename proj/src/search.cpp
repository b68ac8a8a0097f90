#include "starlike/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "starlike/bounds.hpp"
#include "starlike/error.hpp"
#include "starlike/log_coefficients.hpp"

namespace starlike {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxDamping = 5.0;
constexpr std::size_t kPolyDegree = 4;

using Point = std::vector<double>;

struct Probe {
  Point key; // canonical seed parameters, used for tie-breaking
  double value = -1.0;
};

bool better(const Probe &a, const Probe &b) {
  if (a.value != b.value)
    return a.value > b.value;
  return a.key < b.key;
}

// Maps an unconstrained point onto a certified seed of the family.
class Family {
public:
  explicit Family(SeedFamily family) : family_(family) {}

  std::size_t dim() const {
    return family_ == SeedFamily::ExpDamp ? 2 : 2 * kPolyDegree;
  }

  Point canonical(const Point &x) const {
    Point out = x;
    if (family_ == SeedFamily::ExpDamp) {
      out[0] = std::fmod(x[0], kTwoPi);
      if (out[0] < 0.0)
        out[0] += kTwoPi;
      out[1] = std::clamp(x[1], 0.0, kMaxDamping);
      return out;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < kPolyDegree; ++i)
      total += std::hypot(x[2 * i], x[2 * i + 1]);
    if (total > 1.0)
      for (auto &v : out)
        v /= total;
    return out;
  }

  SchwarzSeed seed(const Point &canon) const {
    if (family_ == SeedFamily::ExpDamp)
      return seed::ExpDamp{canon[0], canon[1]};
    seed::Polynomial p;
    for (std::size_t i = 0; i < kPolyDegree; ++i)
      p.coeffs.emplace_back(canon[2 * i], canon[2 * i + 1]);
    return p;
  }

  Point random_point(Rng &rng) const {
    if (family_ == SeedFamily::ExpDamp)
      return {rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kMaxDamping)};
    const auto s = std::get<seed::Polynomial>(random_seed(family_, rng));
    Point out;
    for (const auto &c : s.coeffs) {
      out.push_back(c.real());
      out.push_back(c.imag());
    }
    return out;
  }

private:
  SeedFamily family_;
};

class Objective {
public:
  Objective(const ClassParams &params, double t, const Family &family,
            std::size_t order, std::size_t budget)
      : params_(params), t_(t), family_(family), order_(order), budget_(budget) {}

  bool exhausted() const { return evaluations_ >= budget_; }
  std::size_t remaining() const { return budget_ - evaluations_; }
  std::size_t evaluations() const { return evaluations_; }
  const Probe &best() const { return best_; }

  Probe operator()(const Point &x) {
    Probe p{family_.canonical(x), 0.0};
    p.value = seed_ratio(params_, t_, family_.seed(p.key), order_);
    ++evaluations_;
    if (evaluations_ == 1 || better(p, best_))
      best_ = p;
    return p;
  }

private:
  ClassParams params_;
  double t_;
  const Family &family_;
  std::size_t order_;
  std::size_t budget_;
  std::size_t evaluations_ = 0;
  Probe best_;
};

struct Vertex {
  Point x;
  Probe probe;
};

// Nelder-Mead maximization; returns true when the simplex collapses before
// the objective's budget runs out.
bool nelder_mead(Objective &f, const Point &start, const Point &steps) {
  const std::size_t dim = start.size();
  if (f.remaining() < dim + 1)
    return false;

  std::vector<Vertex> simplex;
  simplex.push_back({start, f(start)});
  for (std::size_t i = 0; i < dim; ++i) {
    Point x = start;
    x[i] += steps[i];
    simplex.push_back({x, f(x)});
  }

  auto order_simplex = [&] {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex &a, const Vertex &b) { return better(a.probe, b.probe); });
  };
  auto affine = [dim](const Point &a, const Point &b, double s) {
    Point out(dim);
    for (std::size_t i = 0; i < dim; ++i)
      out[i] = a[i] + s * (b[i] - a[i]);
    return out;
  };

  while (!f.exhausted()) {
    order_simplex();
    double spread = simplex.front().probe.value - simplex.back().probe.value;
    double extent = 0.0;
    for (const auto &v : simplex)
      for (std::size_t i = 0; i < dim; ++i)
        extent = std::max(extent, std::abs(v.probe.key[i] - simplex.front().probe.key[i]));
    if (spread <= 1e-14 && extent <= 1e-9)
      return true;

    Point centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v)
      for (std::size_t i = 0; i < dim; ++i)
        centroid[i] += simplex[v].x[i] / static_cast<double>(dim);

    Vertex &worst = simplex.back();
    const Point reflected = affine(centroid, worst.x, -1.0);
    const Probe r = f(reflected);
    if (better(r, simplex.front().probe)) {
      if (f.exhausted()) {
        worst = {reflected, r};
        break;
      }
      const Point expanded = affine(centroid, worst.x, -2.0);
      const Probe e = f(expanded);
      worst = better(e, r) ? Vertex{expanded, e} : Vertex{reflected, r};
      continue;
    }
    if (better(r, simplex[dim - 1].probe)) {
      worst = {reflected, r};
      continue;
    }
    if (f.exhausted())
      break;
    const bool outside = better(r, worst.probe);
    const Point contracted =
        outside ? affine(centroid, reflected, 0.5) : affine(centroid, worst.x, 0.5);
    const Probe c = f(contracted);
    if (better(c, outside ? r : worst.probe)) {
      worst = {contracted, c};
      continue;
    }
    for (std::size_t v = 1; v <= dim && !f.exhausted(); ++v) {
      simplex[v].x = affine(simplex.front().x, simplex[v].x, 0.5);
      simplex[v].probe = f(simplex[v].x);
    }
  }
  return false;
}

} // namespace

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::string to_string(SeedFamily family) {
  return family == SeedFamily::ExpDamp ? "expdamp" : "poly";
}

SeedFamily parse_family(const std::string &text) {
  if (text == "expdamp")
    return SeedFamily::ExpDamp;
  if (text == "poly" || text == "polynomial")
    return SeedFamily::Polynomial;
  throw Error(Errc::DomainError, "unknown seed family '" + text + "'");
}

SchwarzSeed random_seed(SeedFamily family, Rng &rng) {
  if (family == SeedFamily::ExpDamp)
    return seed::ExpDamp{rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kMaxDamping)};
  // Moduli from a uniform point of the 4-simplex scaled by a radius in [0, 1].
  std::vector<double> weights(kPolyDegree + 1);
  double total = 0.0;
  for (auto &w : weights) {
    w = -std::log1p(-rng.uniform());
    total += w;
  }
  seed::Polynomial p;
  for (std::size_t i = 0; i < kPolyDegree; ++i)
    p.coeffs.push_back(std::polar(weights[i] / total, rng.uniform(0.0, kTwoPi)));
  return p;
}

double seed_ratio(const ClassParams &params, double t, const SchwarzSeed &s,
                  std::size_t order) {
  const LogCoeffVector d = log_coefficients(member_from_seed(params, s, order));
  if (t == 0.0)
    return sum_sq(d) / thm_a_bound(params).bound;
  return sum_weighted(d, t) / thm3_bound(params, t).bound;
}

SearchReport adversarial_search(const ClassParams &params, double t,
                                SeedFamily family, const SearchOptions &options) {
  const Family fam(family);
  const std::size_t order =
      options.order ? options.order : recommended_order(params);
  const std::size_t budget = std::max<std::size_t>(options.budget, 1);
  Objective f(params, t, fam, order, budget);
  Rng rng(options.rng_seed);

  // Coarse phase on roughly a quarter of the budget.
  const std::size_t coarse = std::max<std::size_t>(1, budget / 4);
  std::size_t grid = 1;
  if (family == SeedFamily::ExpDamp) {
    grid = static_cast<std::size_t>(std::sqrt(static_cast<double>(coarse)));
    grid = std::max<std::size_t>(grid, 1);
    for (std::size_t i = 0; i < grid && !f.exhausted(); ++i)
      for (std::size_t j = 0; j < grid && !f.exhausted(); ++j) {
        const double c = grid > 1 ? kMaxDamping * j / double(grid - 1) : 0.0;
        f(Point{kTwoPi * i / double(grid), c});
      }
  } else {
    for (std::size_t i = 0; i < kPolyDegree && !f.exhausted(); ++i) {
      Point corner(fam.dim(), 0.0);
      corner[2 * i] = 1.0;
      f(corner);
    }
    while (f.evaluations() < coarse && !f.exhausted())
      f(fam.random_point(rng));
    grid = 4;
  }

  Point steps(fam.dim(), 0.1);
  if (family == SeedFamily::ExpDamp)
    steps = {0.5 * kTwoPi / double(grid),
             0.5 * kMaxDamping / double(std::max<std::size_t>(grid - 1, 1))};
  const bool converged = nelder_mead(f, f.best().key, steps);

  // Seeded restarts with whatever budget is left.
  while (f.remaining() > 4 * (fam.dim() + 1)) {
    const Point start = fam.random_point(rng);
    nelder_mead(f, start, steps);
  }

  SearchReport report;
  report.max_ratio = f.best().value;
  report.argmax = fam.seed(f.best().key);
  report.evaluations = f.evaluations();
  report.converged = converged;
  report.order = order;
  return report;
}

} // namespace starlike
