#include "chi.hpp"

namespace qso {

const QScalar& ShiftSequence::at(int j) const {
  if (j < 1) throw Error(ErrorKind::kInvalidArgument, "shift sequence is 1-indexed");
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(cache_.size()) < j) {
    QScalar b = qbracket(eps_ + HalfInt(static_cast<long long>(cache_.size())));
    cache_.push_back(b * b);
  }
  return cache_[static_cast<size_t>(j - 1)];
}

QScalar e_factorial(std::span<const QScalar> z, const ShiftSequence& a, int r) {
  const int N = static_cast<int>(z.size());
  if (r < 0 || r > N)
    throw Error(ErrorKind::kInvalidArgument, "e_r needs 0 <= r <= number of variables");
  if (r == 0) return QScalar(1);
  QScalar acc;
  std::vector<int> p(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) p[static_cast<size_t>(i)] = i + 1;
  while (true) {
    QScalar term(1);
    for (int t = 1; t <= r; ++t) {
      int pt = p[static_cast<size_t>(t - 1)];
      term *= z[static_cast<size_t>(pt - 1)] - a.at(pt - t + 1);
    }
    acc += term;
    int i = r - 1;
    while (i >= 0 && p[static_cast<size_t>(i)] == N - (r - 1 - i)) --i;
    if (i < 0) break;
    ++p[static_cast<size_t>(i)];
    for (int j = i + 1; j < r; ++j) p[static_cast<size_t>(j)] = p[static_cast<size_t>(j - 1)] + 1;
  }
  return acc;
}

std::vector<HalfInt> l_coordinates(const HighestWeight& hw) {
  if (!validate_weight(hw))
    throw Error(ErrorKind::kInvalidArgument, "invalid highest weight: " + hw.str());
  const int N = hw.n / 2;
  const HalfInt eps = hw.n % 2 == 0 ? HalfInt(0) : kHalf;
  std::vector<HalfInt> l(static_cast<size_t>(N));
  for (int k = 1; k <= N; ++k)
    l[static_cast<size_t>(k - 1)] = hw.m[static_cast<size_t>(k - 1)] + HalfInt(N - k) + eps;
  return l;
}

QScalar chi_2r(const HighestWeight& hw, int r) {
  const int N = hw.n / 2;
  if (r < 1 || r > N) throw Error(ErrorKind::kInvalidArgument, "chi_2r order out of range");
  auto l = l_coordinates(hw);
  std::vector<QScalar> z;
  z.reserve(l.size());
  for (HalfInt lk : l) {
    QScalar b = qbracket(lk);
    z.push_back(b * b);
  }
  ShiftSequence a(hw.n % 2 == 0 ? HalfInt(0) : kHalf);
  QScalar e = e_factorial(z, a, r);
  return r % 2 == 0 ? e : -e;
}

QScalar chi_top(const HighestWeight& hw) {
  if (hw.n % 2 != 0) throw Error(ErrorKind::kInvalidArgument, "chi_top requires even n");
  const int N = hw.n / 2;
  QScalar acc(1);
  for (HalfInt lk : l_coordinates(hw)) acc *= qbracket(lk);
  // i^N
  switch (((N % 4) + 4) % 4) {
    case 0: break;
    case 1: acc *= QScalar::imaginary(); break;
    case 2: acc = -acc; break;
    case 3: acc = -(acc * QScalar::imaginary()); break;
  }
  return acc;
}

QScalar chi_of(const HighestWeight& hw, const CasimirElement& c) {
  if (c.n != hw.n) throw Error(ErrorKind::kInvalidArgument, "Casimir and weight have different n");
  if (c.kind == CasimirKind::kEven) return chi_2r(hw, c.r);
  return chi_top(hw);
}

}  // namespace qso
