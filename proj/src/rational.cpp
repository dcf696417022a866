#include "lics/rational.hpp"

#include "lics/error.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>

namespace lics {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::Overflow: return "Overflow";
    case Errc::Parse: return "Parse";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotContained: return "NotContained";
    case Errc::NotAlmostComplex: return "NotAlmostComplex";
    case Errc::DegeneratePoint: return "DegeneratePoint";
    case Errc::NotInV: return "NotInV";
    case Errc::NotConjInvariant: return "NotConjInvariant";
    case Errc::NotAFoliationPoint: return "NotAFoliationPoint";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::EvaluationError: return "EvaluationError";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::InvalidAlgebra: return "InvalidAlgebra";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(Errc::Parse, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

double Rational::to_double() const {
  // Correctly rounded (ties-to-even) conversion, including subnormals.
  const mpfr_exp_t old_emin = mpfr_get_emin();
  const mpfr_exp_t old_emax = mpfr_get_emax();
  mpfr_set_emin(-1073);
  mpfr_set_emax(1024);
  mpfr_t x;
  mpfr_init2(x, 53);
  const int t = mpfr_set_q(x, v_.get_mpq_t(), MPFR_RNDN);
  mpfr_subnormalize(x, t, MPFR_RNDN);
  const double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  mpfr_set_emin(old_emin);
  mpfr_set_emax(old_emax);
  if (std::isinf(d)) throw Error(Errc::Overflow, "rational exceeds binary64 range");
  return d;
}

}  // namespace lics
