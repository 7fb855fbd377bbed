#pragma once

#include <map>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace qso {

/// Generator I^sign_{upper,lower}, 1 <= lower < upper. Basic generators are
/// the adjacent ones (upper == lower+1); their sign is irrelevant and is
/// canonicalized to +1 so structural comparison treats I+(k+1,k) and
/// I-(k+1,k) as the same symbol.
struct GenSymbol {
  int sign;  // +1 or -1
  int upper, lower;

  GenSymbol(int sign_, int upper_, int lower_) : sign(sign_), upper(upper_), lower(lower_) {
    if (lower < 1 || upper <= lower)
      throw Error(ErrorKind::kInvalidArgument, "generator indices must satisfy 1 <= l < k");
    if (sign != 1 && sign != -1)
      throw Error(ErrorKind::kInvalidArgument, "generator sign must be +1 or -1");
    if (is_basic()) sign = 1;
  }
  static GenSymbol basic(int j) { return GenSymbol(+1, j + 1, j); }  // I_{j+1,j}

  bool is_basic() const { return upper == lower + 1; }

  /// Index order used for ordered monomials: (upper, lower), sign last only
  /// to totalize the order over mixed-sign words.
  friend bool operator<(const GenSymbol& a, const GenSymbol& b) {
    if (a.upper != b.upper) return a.upper < b.upper;
    if (a.lower != b.lower) return a.lower < b.lower;
    return a.sign < b.sign;
  }
  friend bool operator==(const GenSymbol& a, const GenSymbol& b) {
    return a.upper == b.upper && a.lower == b.lower && a.sign == b.sign;
  }
  /// True when (upper,lower) indices coincide, regardless of sign.
  bool same_indices(const GenSymbol& b) const { return upper == b.upper && lower == b.lower; }
};

using Word = std::vector<GenSymbol>;

/// Ordered monomial: all signs +, indices non-decreasing (repetition encodes
/// powers).
bool word_is_ordered(const Word& w);
int word_max_index(const Word& w);

/// Degree-lexicographic order on words; every rewrite step strictly
/// decreases in it, which is the termination argument.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      return a[i] < b[i];
    }
    return false;
  }
};

/// Finite formal sum of words with QScalar coefficients. Zero coefficients
/// are never stored; term order is deterministic (deglex).
class NCPoly {
public:
  using TermMap = std::map<Word, QScalar, DegLexLess>;

  NCPoly() = default;
  static NCPoly scalar(QScalar c);
  static NCPoly one() { return scalar(QScalar(1)); }
  static NCPoly generator(GenSymbol g);
  static NCPoly monomial(Word w, QScalar c = QScalar(1));

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  /// Coefficient of a word (zero if absent).
  const QScalar& coeff(const Word& w) const;
  /// True iff the poly is a scalar (zero or a single empty-word term).
  bool is_scalar() const;
  QScalar scalar_value() const;  // requires is_scalar()

  /// Set only by normalize(); cleared by any mutation.
  bool is_normal() const { return normal_; }

  void add_term(const Word& w, const QScalar& c);

  friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator-(const NCPoly& a);
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly& operator+=(const NCPoly& b);
  NCPoly& operator-=(const NCPoly& b);
  NCPoly scaled(const QScalar& c) const;

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  int max_index() const;

private:
  friend NCPoly normalize(const NCPoly&, int, struct RewriteStats*);
  TermMap terms_;
  bool normal_ = false;
};

/// q-commutator u^sgn * x*y - u^-sgn * y*x (unnormalized).
NCPoly qcomm(const NCPoly& x, const NCPoly& y, int sgn);

}  // namespace qso
