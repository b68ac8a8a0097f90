#include "starlike/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "starlike/error.hpp"
#include "starlike/numeric_text.hpp"

namespace starlike {

Series compose_schwarz(const Series &outer, const Series &inner) {
  if (inner[0] != cplx{})
    throw Error(Errc::NonzeroConstantTerm, "compose_schwarz requires inner_0 == 0");
  const std::size_t order = std::min(outer.order(), inner.order());
  const Series w = inner.truncated(order);
  Series acc = Series::constant(outer[order], order);
  for (std::size_t i = order; i-- > 0;) {
    acc = mul(acc, w);
    acc[0] += outer[i];
  }
  return acc;
}

Series subordinate_of(const Series &superordinate, const SchwarzSeed &s) {
  return compose_schwarz(superordinate, seed_series(s, superordinate.order()));
}

RogosinskiResult rogosinski_l2_check(const Series &subordinate,
                                     const Series &superordinate,
                                     std::size_t upto) {
  upto = std::min({upto, subordinate.order(), superordinate.order()});
  RogosinskiResult result{true, std::numeric_limits<double>::infinity(), 0};
  double sub = 0.0;
  double sup = 0.0;
  for (std::size_t n = 1; n <= upto; ++n) {
    sub += std::norm(subordinate[n]);
    sup += std::norm(superordinate[n]);
    const double slack = sup - sub;
    if (slack < result.min_slack) {
      result.min_slack = slack;
      result.tightest_k = n;
    }
    if (slack < -kRogosinskiTolerance)
      result.holds = false;
  }
  return result;
}

double weight_factor(std::size_t k, double t) {
  const double kd = static_cast<double>(k);
  return std::pow(kd + 1.0, t) / (kd * kd) -
         std::pow(kd + 2.0, t) / ((kd + 1.0) * (kd + 1.0));
}

std::optional<std::size_t> first_nonpositive_weight(double t, std::size_t k_max) {
  for (std::size_t k = 1; k <= k_max; ++k)
    if (!(weight_factor(k, t) > 0.0))
      return k;
  return std::nullopt;
}

AbelResult abel_weight_transfer(std::span<const double> x,
                                std::span<const double> y, double C, double t,
                                std::size_t n_terms) {
  if (t > 2.0)
    throw Error(Errc::WeightOutOfRange,
                "weight exponent t = " + format_real(t) + " exceeds 2");
  if (x.size() < n_terms || y.size() < n_terms || n_terms == 0)
    throw Error(Errc::DomainError, "sequences shorter than the requested length");

  std::vector<double> px(n_terms), py(n_terms);
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n_terms; ++i) {
    if (x[i] < 0.0 || y[i] < 0.0)
      throw Error(Errc::DomainError, "sequences must be nonnegative");
    sx += x[i];
    sy += y[i];
    px[i] = sx;
    py[i] = sy;
    if (sx > C * sy + 1e-12 * std::max(1.0, C * sy))
      throw Error(Errc::HypothesisViolated,
                  "partial-sum dominance fails at K = " + std::to_string(i + 1));
  }

  for (std::size_t k = 1; k < n_terms; ++k)
    if (!(weight_factor(k, t) > 0.0))
      throw Error(Errc::WeightOutOfRange,
                  "weight factor not positive at k = " + std::to_string(k));

  auto weight = [t](std::size_t n) {
    const double nd = static_cast<double>(n);
    return std::pow(nd + 1.0, t) / (nd * nd);
  };

  AbelResult r;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    r.weighted_x += weight(n) * x[n - 1];
    r.weighted_y += weight(n) * y[n - 1];
  }
  // sum_{k<N} lambda_k X_k + w_N X_N, lambda_k the positive weight factors
  for (std::size_t k = 1; k < n_terms; ++k) {
    r.telescoped_x += weight_factor(k, t) * px[k - 1];
    r.telescoped_y += weight_factor(k, t) * py[k - 1];
  }
  r.telescoped_x += weight(n_terms) * px[n_terms - 1];
  r.telescoped_y += weight(n_terms) * py[n_terms - 1];

  r.margin = C * r.weighted_y - r.weighted_x;
  r.holds = r.weighted_x <= C * r.weighted_y + 1e-12 * std::max(1.0, C * r.weighted_y);
  return r;
}

} // namespace starlike
