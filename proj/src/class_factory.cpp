#include "starlike/class_factory.hpp"

#include <cmath>
#include <sstream>

#include "starlike/error.hpp"
#include "starlike/numeric_text.hpp"

namespace starlike {

namespace {

constexpr double kSeedSumTolerance = 1e-12;

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

void require_order(const ClassParams &params, std::size_t order) {
  if (order < static_cast<std::size_t>(params.m()))
    throw Error(Errc::TruncationTooSmall,
                "order " + std::to_string(order) + " is below m = " +
                    std::to_string(params.m()));
}

// 1 + B w as an exact polynomial carried to `order`.
Series one_plus_bw(double B, std::size_t order) {
  Series s(std::max<std::size_t>(order, 1));
  s[0] = 1.0;
  s[1] = B;
  return s;
}

} // namespace

ClassParams ClassParams::make(int j, int k, cplx A, double B) {
  if (k < 1 || j < 0)
    throw Error(Errc::InvalidParams, "need j >= 0 and k >= 1");
  if (j + k - 1 < 1)
    throw Error(Errc::InvalidParams, "m = j + k - 1 must be positive");
  if (!(j <= k - 1 || (j == 1 && k == 1)))
    throw Error(Errc::InvalidParams,
                "need 0 <= j <= k - 1 or (j, k) = (1, 1); got j = " +
                    std::to_string(j) + ", k = " + std::to_string(k));
  if (!(B >= -1.0 && B <= 0.0))
    throw Error(Errc::InvalidParams, "B must lie in [-1, 0]");
  if (A == cplx{B, 0.0})
    throw Error(Errc::InvalidParams, "A must differ from B");
  return ClassParams(j, k, A, B);
}

std::string ClassParams::describe() const {
  std::ostringstream os;
  os << "(j=" << j_ << ", k=" << k_ << ", A=" << format_complex(A_)
     << ", B=" << format_real(B_) << ")";
  return os.str();
}

void validate_seed(const SchwarzSeed &s) {
  std::visit(overloaded{
                 [](const seed::Identity &) {},
                 [](const seed::Rotation &r) {
                   if (!std::isfinite(r.theta))
                     throw Error(Errc::InvalidSeed, "rotation angle not finite");
                 },
                 [](const seed::ExpDamp &e) {
                   if (!std::isfinite(e.theta) || !(e.c >= 0.0) ||
                       !std::isfinite(e.c))
                     throw Error(Errc::InvalidSeed,
                                 "expdamp needs finite theta and c >= 0");
                 },
                 [](const seed::Polynomial &p) {
                   double total = 0.0;
                   for (const auto &c : p.coeffs)
                     total += std::abs(c);
                   if (!(total <= 1.0 + kSeedSumTolerance))
                     throw Error(Errc::InvalidSeed,
                                 "polynomial seed has sum |p_i| = " +
                                     format_real(total) + " > 1");
                 },
             },
             s);
}

std::string describe(const SchwarzSeed &s) {
  return std::visit(
      overloaded{
          [](const seed::Identity &) -> std::string { return "identity"; },
          [](const seed::Rotation &r) -> std::string {
            return "rotation:" + format_real(r.theta);
          },
          [](const seed::ExpDamp &e) -> std::string {
            return "expdamp:" + format_real(e.theta) + ":" + format_real(e.c);
          },
          [](const seed::Polynomial &p) -> std::string {
            std::string out = "poly:";
            for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
              if (i)
                out += "/";
              out += format_complex(p.coeffs[i]);
            }
            return out;
          },
      },
      s);
}

SchwarzSeed parse_seed(const std::string &text) {
  const auto parts = split(text, ':');
  const std::string &kind = parts.front();
  SchwarzSeed result = seed::Identity{};
  try {
    if (kind == "identity" && parts.size() == 1) {
      result = seed::Identity{};
    } else if (kind == "rotation" && parts.size() == 2) {
      result = seed::Rotation{parse_real(parts[1])};
    } else if (kind == "expdamp" && parts.size() == 3) {
      result = seed::ExpDamp{parse_real(parts[1]), parse_real(parts[2])};
    } else if (kind == "poly" && parts.size() == 2) {
      seed::Polynomial p;
      for (const auto &c : split(parts[1], '/'))
        p.coeffs.push_back(parse_complex(c));
      result = std::move(p);
    } else {
      throw Error(Errc::InvalidSeed, "unrecognized seed '" + text + "'");
    }
  } catch (const Error &e) {
    if (e.code() == Errc::InvalidSeed)
      throw;
    throw Error(Errc::InvalidSeed, "malformed seed '" + text + "'");
  }
  validate_seed(result);
  return result;
}

cplx seed_value(const SchwarzSeed &s, cplx w) {
  return std::visit(
      overloaded{
          [w](const seed::Identity &) { return w; },
          [w](const seed::Rotation &r) { return std::polar(1.0, r.theta) * w; },
          [w](const seed::ExpDamp &e) {
            return std::polar(1.0, e.theta) * w * std::exp(e.c * (w - 1.0));
          },
          [w](const seed::Polynomial &p) {
            cplx acc{};
            for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
              acc = (acc + *it) * w;
            return acc;
          },
      },
      s);
}

Series seed_series(const SchwarzSeed &s, std::size_t order) {
  validate_seed(s);
  return std::visit(
      overloaded{
          [order](const seed::Identity &) {
            return Series::monomial(1.0, 1, order);
          },
          [order](const seed::Rotation &r) {
            return Series::monomial(std::polar(1.0, r.theta), 1, order);
          },
          [order](const seed::ExpDamp &e) {
            // e^{i theta} e^{-c} w exp(c w)
            const Series ecw = exp_series(Series::monomial(e.c, 1, order));
            const cplx scale = std::polar(std::exp(-e.c), e.theta);
            Series out(order);
            for (std::size_t i = 1; i <= order; ++i)
              out[i] = scale * ecw[i - 1];
            return out;
          },
          [order](const seed::Polynomial &p) {
            Series out(order);
            for (std::size_t i = 0; i < p.coeffs.size() && i + 1 <= order; ++i)
              out[i + 1] = p.coeffs[i];
            return out;
          },
      },
      s);
}

Series ClassMember::series() const {
  Series f(order);
  for (std::size_t i = 1; i <= order; ++i)
    f[i] = ratio[i - 1];
  return f;
}

ClassMember extremal_function(const ClassParams &params, std::size_t order) {
  require_order(params, order);
  const auto m = static_cast<std::size_t>(params.m());
  const std::size_t inner = order / m;
  Series ratio(order);
  if (params.B() == 0.0) {
    ratio = exp_series(
        compose_power(Series::monomial(params.A() / double(m), 1, inner), m, order));
  } else {
    const cplx p = (params.A() - params.B()) / (double(m) * params.B());
    ratio = pow_complex(compose_power(one_plus_bw(params.B(), inner), m, order), p);
  }
  return ClassMember{params, seed::Identity{}, order, std::move(ratio)};
}

Series subordinate_term(const ClassParams &params, const SchwarzSeed &s,
                        std::size_t order) {
  require_order(params, order);
  const auto m = static_cast<std::size_t>(params.m());
  const Series v = compose_power(seed_series(s, order / m), m, order);
  const Series numerator = v.scaled(params.A() - params.B());
  Series denominator = v.scaled(params.B());
  denominator[0] += 1.0;
  return div(numerator, denominator);
}

ClassMember member_from_seed(const ClassParams &params, const SchwarzSeed &s,
                             std::size_t order) {
  const Series p = subordinate_term(params, s, order);
  Series ratio = exp_series(integrate_over_t(p));
  return ClassMember{params, s, order, std::move(ratio)};
}

Series q_function(const ClassParams &params, std::size_t order) {
  const auto m = static_cast<std::size_t>(params.m());
  const std::size_t inner = order / m;
  if (params.B() == 0.0)
    return exp_series(compose_power(
        Series::monomial(-params.A() / double(m), 1, inner), m, order));
  const cplx p = -(params.A() - params.B()) / (double(m) * params.B());
  return pow_complex(compose_power(one_plus_bw(params.B(), inner), m, order), p);
}

} // namespace starlike
