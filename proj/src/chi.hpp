#pragma once

#include <mutex>
#include <span>
#include <vector>

#include "casimir.hpp"
#include "gtrep.hpp"
#include "scalar.hpp"

namespace qso {

/// The shift sequence a = ([eps]^2, [eps+1]^2, [eps+2]^2, ...), generated on
/// demand and cached; eps is 0 for even n and 1/2 for odd n, so a_1 = [eps]^2
/// vanishes in the even case.
class ShiftSequence {
public:
  explicit ShiftSequence(HalfInt epsilon) : eps_(epsilon) {}

  HalfInt epsilon() const { return eps_; }
  /// a_j, 1-indexed.
  const QScalar& at(int j) const;

private:
  HalfInt eps_;
  mutable std::mutex mu_;
  mutable std::vector<QScalar> cache_;
};

/// Generalized factorial elementary symmetric polynomial
/// e_r(z|a) = sum over p_1<...<p_r of prod_t (z_{p_t} - a_{p_t - t + 1}).
QScalar e_factorial(std::span<const QScalar> z, const ShiftSequence& a, int r);

/// l_{k,n} = m_{k,n} + N - k + eps, the natural eigenvalue coordinates.
std::vector<HalfInt> l_coordinates(const HighestWeight& hw);

/// Eigenvalue of C^(2r)_n on the hw irrep: (-1)^r e_r([l_1]^2,...,[l_N]^2|a).
QScalar chi_2r(const HighestWeight& hw, int r);
/// Eigenvalue of C^(n)+/- (even n): i^N [l_1][l_2]...[l_N]; sign-independent.
QScalar chi_top(const HighestWeight& hw);
/// Dispatch on the Casimir kind.
QScalar chi_of(const HighestWeight& hw, const CasimirElement& c);

}  // namespace qso
