#include "scalar.hpp"

#include <algorithm>
#include <cmath>

namespace qso {

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  if (b.is_zero()) throw Error(ErrorKind::kDivisionByZero, "division by zero (coefficient)");
  mpq_class n = b.norm();
  GaussRat c = a * b.conj();
  return GaussRat(c.re / n, c.im / n);
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monomial(int deg, GaussRat c) {
  UPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<size_t>(deg) + 1, GaussRat());
  p.c_.back() = std::move(c);
  return p;
}

int UPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return 0;
}

const GaussRat& UPoly::coeff(int i) const {
  static const GaussRat zero;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(i)];
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] += b.c_[i];
  }
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator-(const UPoly& a) {
  UPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussRat());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

UPoly UPoly::scaled(const GaussRat& c) const {
  UPoly r;
  if (c.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(x * c);
  r.trim();
  return r;
}

UPoly UPoly::divrem(const UPoly& a, const UPoly& b, UPoly* rem) {
  if (b.is_zero()) throw Error(ErrorKind::kDivisionByZero, "polynomial division by zero");
  UPoly q, r = a;
  const GaussRat& lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    GaussRat c = r.leading() / lead;
    UPoly t = UPoly::monomial(d, c);
    q = q + t;
    r = r - t * b;
  }
  if (rem) *rem = std::move(r);
  return q;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r;
    divrem(a, b, &r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(GaussRat(1) / a.leading());  // monic
}

UPoly UPoly::reflected() const {
  UPoly r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.trim();
  return r;
}

std::complex<double> UPoly::eval(std::complex<double> u) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + it->to_complex();
  return acc;
}

GaussRat UPoly::eval_exact(const GaussRat& u) const {
  GaussRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

QScalar::QScalar(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::kDivisionByZero, "division by zero");
  reduce();
}

void QScalar::reduce() {
  if (num_.is_zero()) {
    den_ = UPoly::one();
    return;
  }
  UPoly g = UPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = UPoly::divrem(num_, g, nullptr);
    den_ = UPoly::divrem(den_, g, nullptr);
  }
  const GaussRat& lead = den_.leading();
  if (!lead.is_one()) {
    GaussRat inv = GaussRat(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

QScalar QScalar::upower(long long e) {
  if (e >= 0) return QScalar(UPoly::monomial(static_cast<int>(e)), UPoly::one());
  return QScalar(UPoly::one(), UPoly::monomial(static_cast<int>(-e)));
}

QScalar operator+(const QScalar& a, const QScalar& b) {
  return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator-(const QScalar& a, const QScalar& b) {
  return QScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator-(const QScalar& a) {
  QScalar r = a;
  r.num_ = -r.num_;
  return r;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
  return QScalar(a.num_ * b.num_, a.den_ * b.den_);
}

QScalar operator/(const QScalar& a, const QScalar& b) {
  if (b.is_zero()) throw Error(ErrorKind::kDivisionByZero, "division by zero");
  return QScalar(a.num_ * b.den_, a.den_ * b.num_);
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::kDivisionByZero, "inverse of zero");
  return QScalar(den_, num_);
}

QScalar QScalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  QScalar r(1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

QScalar QScalar::subst_u_inverse() const {
  // num(1/u)/den(1/u) scaled by u^max_deg on both sides.
  int d = std::max(num_.degree(), den_.degree());
  UPoly n = num_.reflected() * UPoly::monomial(d - num_.degree());
  UPoly de = den_.reflected() * UPoly::monomial(d - den_.degree());
  return QScalar(std::move(n), std::move(de));
}

// Defined in textio.cpp; forward-declared here to keep rendering out of the
// arithmetic layer while still naming the vanishing denominator in errors.
std::string render_upoly_for_error(const UPoly&);

std::complex<double> QScalar::eval_at_u(std::complex<double> u0) const {
  std::complex<double> d = den_.eval(u0);
  // Scale for the pole check: coefficient magnitude times |u0|^deg spread.
  double scale = 0.0;
  for (const auto& c : den_.coeffs()) scale = std::max(scale, std::abs(c.to_complex()));
  double um = std::max(1.0, std::abs(u0));
  scale *= std::pow(um, std::max(0, den_.degree()));
  if (std::abs(d) <= 1e-14 * std::max(scale, 1e-300)) {
    throw Error(ErrorKind::kPole,
                "pole: denominator " + render_upoly_for_error(den_) + " vanishes at u0");
  }
  return num_.eval(u0) / d;
}

std::complex<double> QScalar::eval_at_q(std::complex<double> q0) const {
  if (q0 == std::complex<double>(0.0, 0.0))
    throw Error(ErrorKind::kInvalidArgument, "q0 must be nonzero");
  return eval_at_u(std::sqrt(q0));
}

GaussRat QScalar::eval_exact_at_u(const GaussRat& u0) const {
  GaussRat d = den_.eval_exact(u0);
  if (d.is_zero()) {
    throw Error(ErrorKind::kPole,
                "pole: denominator " + render_upoly_for_error(den_) + " vanishes at u0");
  }
  return num_.eval_exact(u0) / d;
}

QScalar qpower(HalfInt x) { return QScalar::upower(x.twice()); }

QScalar qbracket(HalfInt x) {
  // (u^2x - u^-2x) / (u^2 - u^-2); antisymmetric, so [0] = 0 exactly.
  if (x.is_zero()) return QScalar();
  return (qpower(x) - qpower(-x)) / (qpower(HalfInt(1)) - qpower(HalfInt(-1)));
}

double qpower_num(HalfInt x, double q0) {
  double u = std::sqrt(q0);
  return std::pow(u, static_cast<double>(x.twice()));
}

double qbracket_num(HalfInt x, double q0) {
  return (qpower_num(x, q0) - qpower_num(-x, q0)) / (q0 - 1.0 / q0);
}

}  // namespace qso
