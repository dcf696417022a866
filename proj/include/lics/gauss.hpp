#pragma once

#include "lics/rational.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace lics {

/// Exact element re + im·i of the Gaussian rationals Q(i).
class GaussScalar {
 public:
  GaussScalar() = default;
  GaussScalar(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussScalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussScalar i() { return {Rational(0), Rational(1)}; }

  /// Parses the scalar text grammar: "2", "-1/3", "1/2+3/4i", "-i".
  static GaussScalar parse(std::string_view text);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  GaussScalar conj() const { return {re_, -im_}; }
  /// |z|^2 = z·conj(z).
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  GaussScalar inv() const;

  /// Independent nearest-binary64 rounding of both components.
  std::pair<double, double> to_float() const;

  /// Canonical text form, accepted back by parse().
  std::string to_string() const;

  GaussScalar& operator+=(const GaussScalar& o);
  GaussScalar& operator-=(const GaussScalar& o);
  GaussScalar& operator*=(const GaussScalar& o);
  GaussScalar& operator/=(const GaussScalar& o);

  friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
  friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
  friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
  friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }
  GaussScalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussScalar&, const GaussScalar&) = default;

 private:
  Rational re_;
  Rational im_;
};

inline GaussScalar conj(const GaussScalar& z) { return z.conj(); }
inline GaussScalar inv(const GaussScalar& z) { return z.inv(); }

}  // namespace lics
