#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "halfint.hpp"

namespace qso {

/// Error kinds surfaced through the C API; the core throws Error.
enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kDivisionByZero,
  kPole,
  kDomain,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

/// Gaussian rational a + b*i with exact rational parts.
struct GaussRat {
  mpq_class re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long n) : re(n), im(0) {}
  GaussRat(const mpq_class& r) : re(r), im(0) {}
  GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat imaginary() { return GaussRat(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return GaussRat(re, -im); }
  mpq_class norm() const { return re * re + im * im; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re + b.re, a.im + b.im);
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re - b.re, a.im - b.im);
  }
  friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
  GaussRat& operator+=(const GaussRat& b) { re += b.re; im += b.im; return *this; }
  GaussRat& operator-=(const GaussRat& b) { re -= b.re; im -= b.im; return *this; }
  GaussRat& operator*=(const GaussRat& b) { *this = *this * b; return *this; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

/// Dense polynomial in u over the Gaussian rationals, ascending powers,
/// trailing zeros trimmed. Coefficients form a field, so Euclidean division
/// and gcd are exact.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(GaussRat c) { if (!c.is_zero()) c_.push_back(std::move(c)); }
  static UPoly one() { return UPoly(GaussRat(1)); }
  static UPoly monomial(int deg, GaussRat c = GaussRat(1));

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int valuation() const;                                          // lowest nonzero power
  const GaussRat& coeff(int i) const;
  const GaussRat& leading() const { return c_.back(); }
  const std::vector<GaussRat>& coeffs() const { return c_; }

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const GaussRat& c) const;

  /// Euclidean division; throws on zero divisor.
  static UPoly divrem(const UPoly& a, const UPoly& b, UPoly* rem);
  /// Monic gcd (1 when coprime; 0 only for gcd(0,0)).
  static UPoly gcd(UPoly a, UPoly b);

  /// Coefficients reversed into u^size-1..0; used by the u -> 1/u substitution.
  UPoly reflected() const;

  std::complex<double> eval(std::complex<double> u) const;
  GaussRat eval_exact(const GaussRat& u) const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  void trim();

private:
  std::vector<GaussRat> c_;
};

/// Element of the field Q(i)(u), q = u^2. Canonical form: reduced fraction
/// with monic denominator, so structural equality coincides with field
/// equality and zero is unique (0/1).
class QScalar {
public:
  QScalar() : num_(), den_(UPoly::one()) {}
  QScalar(long n) : num_(GaussRat(n)), den_(UPoly::one()) {}
  explicit QScalar(GaussRat c) : num_(std::move(c)), den_(UPoly::one()) {}
  QScalar(UPoly num, UPoly den);  // reduces; throws DivisionByZero on den = 0

  static QScalar imaginary() { return QScalar(GaussRat::imaginary()); }
  /// u^e, e any integer.
  static QScalar upower(long long e);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a);
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(const QScalar& a, const QScalar& b);
  QScalar& operator+=(const QScalar& b) { *this = *this + b; return *this; }
  QScalar& operator-=(const QScalar& b) { *this = *this - b; return *this; }
  QScalar& operator*=(const QScalar& b) { *this = *this * b; return *this; }

  QScalar inverse() const;
  QScalar pow(long long e) const;

  /// u -> 1/u, re-canonicalized; an involution.
  QScalar subst_u_inverse() const;

  /// Evaluate at u = u0. Throws Pole when the denominator vanishes there.
  std::complex<double> eval_at_u(std::complex<double> u0) const;
  /// Evaluate at q = q0 via the principal square root u0 = sqrt(q0).
  std::complex<double> eval_at_q(std::complex<double> q0) const;
  /// Exact evaluation at a rational point (q0 = u0^2); throws Pole.
  GaussRat eval_exact_at_u(const GaussRat& u0) const;

  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  void reduce();
  UPoly num_, den_;
};

/// q^x = u^(2x) as an exact monomial.
QScalar qpower(HalfInt x);
/// [x] = (q^x - q^-x) / (q - q^-1), canonicalized.
QScalar qbracket(HalfInt x);
/// [x] evaluated directly at real q0 > 0 (u0 = sqrt(q0)), without symbols.
double qbracket_num(HalfInt x, double q0);
/// q0^x for real q0 > 0 via integer powers of sqrt(q0).
double qpower_num(HalfInt x, double q0);

}  // namespace qso
