#include "starlike/log_coefficients.hpp"

#include <cmath>

#include "starlike/error.hpp"
#include "starlike/numeric_text.hpp"

namespace starlike {

LogCoeffVector log_coefficients(const ClassMember &member) {
  const Series log_ratio = log_series(member.ratio);
  const auto m = static_cast<std::size_t>(member.params.m());
  LogCoeffVector out;
  out.m = member.params.m();
  out.d.reserve(member.order / m);
  for (std::size_t i = 1; i <= log_ratio.order(); ++i) {
    if (i % m == 0) {
      out.d.push_back(0.5 * log_ratio[i]);
    } else if (std::abs(log_ratio[i]) > kSupportTolerance) {
      throw Error(Errc::SupportViolation,
                  "log(f/z) has coefficient " + format_complex(log_ratio[i]) +
                      " at exponent " + std::to_string(i) +
                      ", not a multiple of m = " + std::to_string(m));
    }
  }
  return out;
}

cplx extremal_log_coefficient(const ClassParams &params, int n) {
  if (n < 1)
    throw Error(Errc::DomainError, "log coefficients start at n = 1");
  const double m = params.m();
  const double B = params.B();
  if (B == 0.0)
    return n == 1 ? params.A() / (2.0 * m) : cplx{};
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return 0.5 * sign * ((params.A() - B) / (m * B)) * std::pow(B, n) /
         static_cast<double>(n);
}

double sum_sq(const LogCoeffVector &d) {
  double s = 0.0;
  for (const auto &c : d.d)
    s += std::norm(c);
  return s;
}

double sum_n2(const LogCoeffVector &d) {
  double s = 0.0;
  for (std::size_t i = 0; i < d.d.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    s += n * n * std::norm(d.d[i]);
  }
  return s;
}

double sum_weighted(const LogCoeffVector &d, double t) {
  if (t > 2.0)
    throw Error(Errc::WeightOutOfRange,
                "weight exponent t = " + format_real(t) + " exceeds 2");
  double s = 0.0;
  for (std::size_t i = 0; i < d.d.size(); ++i)
    s += std::pow(static_cast<double>(i + 2), t) * std::norm(d.d[i]);
  return s;
}

} // namespace starlike
