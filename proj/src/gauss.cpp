#include "lics/gauss.hpp"

#include "lics/error.hpp"

#include <cctype>
#include <string>

namespace lics {

GaussScalar& GaussScalar::operator+=(const GaussScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussScalar& GaussScalar::operator-=(const GaussScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussScalar& GaussScalar::operator*=(const GaussScalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussScalar GaussScalar::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  const Rational n = norm2();
  return {re_ / n, -im_ / n};
}

GaussScalar& GaussScalar::operator/=(const GaussScalar& o) { return *this *= o.inv(); }

std::pair<double, double> GaussScalar::to_float() const {
  return {re_.to_double(), im_.to_double()};
}

std::string GaussScalar::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im;
  if (im_ == Rational(1)) {
    im = "i";
  } else if (im_ == Rational(-1)) {
    im = "-i";
  } else {
    im = im_.to_string() + "i";
  }
  if (re_.is_zero()) return im;
  if (im.front() != '-') im.insert(im.begin(), '+');
  return re_.to_string() + im;
}

namespace {

Rational parse_coefficient(std::string_view body, std::string_view whole) {
  // "i" and "-i" carry an implicit unit coefficient.
  if (body.empty() || body == "+") return Rational(1);
  if (body == "-") return Rational(-1);
  if (body.front() == '+') body.remove_prefix(1);
  try {
    return Rational::parse(body);
  } catch (const Error&) {
    throw Error(Errc::Parse, "malformed scalar '" + std::string(whole) + "'");
  }
}

}  // namespace

GaussScalar GaussScalar::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  const std::string_view s = compact;
  if (s.empty()) throw Error(Errc::Parse, "empty scalar");
  if (s.back() != 'i') {
    try {
      return GaussScalar(Rational::parse(s));
    } catch (const Error&) {
      throw Error(Errc::Parse, "malformed scalar '" + std::string(text) + "'");
    }
  }
  const std::string_view head = s.substr(0, s.size() - 1);
  // A sign after position 0 separates the real and imaginary parts.
  const auto split = head.find_last_of("+-");
  if (split == std::string_view::npos || split == 0) {
    return {Rational(0), parse_coefficient(head, text)};
  }
  const std::string_view re_text = head.substr(0, split);
  if (re_text.find_first_of("+-", 1) != std::string_view::npos) {
    throw Error(Errc::Parse, "malformed scalar '" + std::string(text) + "'");
  }
  Rational re;
  try {
    re = Rational::parse(re_text);
  } catch (const Error&) {
    throw Error(Errc::Parse, "malformed scalar '" + std::string(text) + "'");
  }
  return {std::move(re), parse_coefficient(head.substr(split), text)};
}

}  // namespace lics
