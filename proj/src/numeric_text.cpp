#include "starlike/numeric_text.hpp"

#include <cmath>
#include <cstdio>

#include "starlike/error.hpp"

namespace starlike {

namespace {

bool is_exponent_sign(const std::string &s, std::size_t pos) {
  return pos > 0 && (s[pos - 1] == 'e' || s[pos - 1] == 'E');
}

} // namespace

double parse_real(const std::string &text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception &) {
    throw Error(Errc::DomainError, "not a number: '" + text + "'");
  }
  if (used != text.size())
    throw Error(Errc::DomainError, "trailing characters in '" + text + "'");
  return value;
}

cplx parse_complex(const std::string &raw) {
  std::string s;
  for (char ch : raw)
    if (ch != ' ')
      s.push_back(ch);
  if (s.empty())
    throw Error(Errc::DomainError, "empty complex literal");
  if (s.back() != 'i' && s.back() != 'j')
    return {parse_real(s), 0.0};

  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t pos = s.size(); pos-- > 1;) {
    if ((s[pos] == '+' || s[pos] == '-') && !is_exponent_sign(s, pos)) {
      split = pos;
      break;
    }
  }
  auto imag_part = [](const std::string &t) {
    if (t.empty() || t == "+")
      return 1.0;
    if (t == "-")
      return -1.0;
    return parse_real(t);
  };
  if (split == std::string::npos)
    return {0.0, imag_part(s)};
  return {parse_real(s.substr(0, split)), imag_part(s.substr(split))};
}

std::string format_real(double x) {
  if (std::isnan(x))
    return "nan";
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(cplx z) {
  if (z.imag() == 0.0)
    return format_real(z.real());
  std::string im = format_real(z.imag());
  if (im.front() != '-')
    im = "+" + im;
  return format_real(z.real()) + im + "i";
}

} // namespace starlike
