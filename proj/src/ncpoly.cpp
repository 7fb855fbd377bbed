#include "ncpoly.hpp"

#include <algorithm>

namespace qso {

bool word_is_ordered(const Word& w) {
  for (const auto& g : w)
    if (g.sign != 1) return false;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    const auto &a = w[i], &b = w[i + 1];
    if (b.upper < a.upper || (b.upper == a.upper && b.lower < a.lower)) return false;
  }
  return true;
}

int word_max_index(const Word& w) {
  int m = 0;
  for (const auto& g : w) m = std::max(m, g.upper);
  return m;
}

NCPoly NCPoly::scalar(QScalar c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(Word{}, std::move(c));
  return p;
}

NCPoly NCPoly::generator(GenSymbol g) { return monomial(Word{g}); }

NCPoly NCPoly::monomial(Word w, QScalar c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

const QScalar& NCPoly::coeff(const Word& w) const {
  static const QScalar zero;
  auto it = terms_.find(w);
  return it == terms_.end() ? zero : it->second;
}

bool NCPoly::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

QScalar NCPoly::scalar_value() const {
  if (is_zero()) return QScalar();
  if (!is_scalar()) throw Error(ErrorKind::kDomain, "element is not a scalar");
  return terms_.begin()->second;
}

void NCPoly::add_term(const Word& w, const QScalar& c) {
  normal_ = false;
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
  NCPoly r = a;
  r += b;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& b) {
  normal_ = false;
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& b) {
  normal_ = false;
  for (const auto& [w, c] : b.terms_) add_term(w, -c);
  return *this;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
  NCPoly r = a;
  r -= b;
  return r;
}

NCPoly operator-(const NCPoly& a) {
  NCPoly r;
  for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

NCPoly NCPoly::scaled(const QScalar& c) const {
  NCPoly r;
  if (c.is_zero()) return r;
  for (const auto& [w, co] : terms_) r.terms_.emplace(w, co * c);
  return r;
}

int NCPoly::max_index() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, word_max_index(w));
  return m;
}

NCPoly qcomm(const NCPoly& x, const NCPoly& y, int sgn) {
  if (sgn != 1 && sgn != -1) throw Error(ErrorKind::kInvalidArgument, "qcomm sign must be +1/-1");
  return (x * y).scaled(QScalar::upower(sgn)) - (y * x).scaled(QScalar::upower(-sgn));
}

}  // namespace qso
