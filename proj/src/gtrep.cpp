#include "gtrep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <gmpxx.h>

#include "scalar.hpp"

namespace qso {

std::string HighestWeight::str() const {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += m[i].str();
  }
  return s;
}

HighestWeight HighestWeight::parse(int n, std::string_view text) {
  HighestWeight hw;
  hw.n = n;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    if (piece.empty()) throw Error(ErrorKind::kParse, "empty weight entry");
    hw.m.push_back(HalfInt::parse(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return hw;
}

bool validate_weight(const HighestWeight& hw) {
  int N = hw.n / 2;
  if (hw.n < 2 || static_cast<int>(hw.m.size()) != N) return false;
  for (size_t i = 1; i < hw.m.size(); ++i)
    if (hw.m[i].is_integer() != hw.m[0].is_integer()) return false;
  if (hw.n % 2 == 1) {
    for (int i = 0; i + 1 < N; ++i)
      if (hw.m[static_cast<size_t>(i)] < hw.m[static_cast<size_t>(i + 1)]) return false;
    return !(hw.m.back() < HalfInt(0));
  }
  // even n: m_1 >= ... >= m_{N-1} >= |m_N|; vacuous for N = 1
  for (int i = 0; i + 2 < N; ++i)
    if (hw.m[static_cast<size_t>(i)] < hw.m[static_cast<size_t>(i + 1)]) return false;
  if (N >= 2 && hw.m[static_cast<size_t>(N - 2)] < hw.m.back().abs()) return false;
  return true;
}

std::string GTPattern::str() const {
  std::string s;
  for (int k = n; k >= 2; --k) {
    const auto& r = row(k);
    for (size_t i = 0; i < r.size(); ++i) {
      if (i) s += " ";
      s += r[i].str();
    }
    s += "\n";
  }
  return s;
}

namespace {

// Interlocking between row k+1 (upper) and row k (lower).
bool rows_interlock(int upper_k, const std::vector<HalfInt>& up, const std::vector<HalfInt>& lo) {
  if (upper_k % 2 == 1) {
    // odd row above even row, equal lengths p: x_i >= y_i >= x_{i+1},
    // x_p >= y_p >= -x_p
    size_t p = up.size();
    for (size_t i = 0; i + 1 < p; ++i)
      if (up[i] < lo[i] || lo[i] < up[i + 1]) return false;
    return !(up[p - 1] < lo[p - 1]) && !(lo[p - 1] < -up[p - 1]);
  }
  // even row above odd row, lengths p and p-1: y_i >= z_i >= y_{i+1},
  // y_{p-1} >= z_{p-1} >= |y_p|
  size_t p = up.size();
  if (p == 1) return lo.empty();
  for (size_t i = 0; i + 2 < p; ++i)
    if (up[i] < lo[i] || lo[i] < up[i + 1]) return false;
  return !(up[p - 2] < lo[p - 2]) && !(lo[p - 2] < up[p - 1].abs());
}

}  // namespace

bool pattern_valid(const GTPattern& pat) {
  for (int k = pat.n - 1; k >= 2; --k)
    if (!rows_interlock(k + 1, pat.row(k + 1), pat.row(k))) return false;
  return true;
}

std::vector<HighestWeight> dominant_weights(int n, HalfInt max_entry) {
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "n must be at least 2");
  if (max_entry < HalfInt(0))
    throw Error(ErrorKind::kInvalidArgument, "max entry must be nonnegative");
  const int N = n / 2;
  std::vector<HighestWeight> out;
  for (int parity = 0; parity <= 1; ++parity) {
    if (parity == 1 && max_entry < kHalf) continue;
    HalfInt lo_start = HalfInt::from_twice(parity);  // 0 or 1/2
    // largest value of this parity class not exceeding max_entry
    HalfInt cap = HalfInt::from_twice(max_entry.twice() -
                                      (((max_entry.twice() - parity) % 2 + 2) % 2));
    std::vector<HalfInt> cur(static_cast<size_t>(N));
    auto rec = [&](auto&& self, int i) -> void {
      if (i == N) {
        out.push_back(HighestWeight{n, cur});
        return;
      }
      HalfInt hi = i == 0 ? cap : cur[static_cast<size_t>(i - 1)];
      // last entry of an even-n weight may be negative
      HalfInt lo = (n % 2 == 0 && i == N - 1) ? -hi : lo_start;
      for (HalfInt v = lo; v <= hi; v += HalfInt(1)) {
        cur[static_cast<size_t>(i)] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end(),
            [](const HighestWeight& a, const HighestWeight& b) { return a.m < b.m; });
  return out;
}

std::vector<GTPattern> enumerate_patterns(const HighestWeight& hw) {
  if (!validate_weight(hw))
    throw Error(ErrorKind::kInvalidArgument, "invalid highest weight: " + hw.str());
  std::vector<GTPattern> pats;
  GTPattern seed;
  seed.n = hw.n;
  seed.rows.push_back(hw.m);
  pats.push_back(std::move(seed));

  for (int k = hw.n - 1; k >= 2; --k) {
    std::vector<GTPattern> next;
    size_t len = static_cast<size_t>(k / 2);
    for (const auto& p : pats) {
      const auto& up = p.row(k + 1);
      // entry ranges from the interlocking constraints
      std::vector<std::pair<HalfInt, HalfInt>> rng(len);
      if ((k + 1) % 2 == 1) {
        size_t pp = up.size();
        for (size_t i = 0; i < pp; ++i)
          rng[i] = {i + 1 == pp ? -up[pp - 1] : up[i + 1], up[i]};
      } else {
        size_t pp = up.size();
        for (size_t i = 0; i + 1 < pp; ++i)
          rng[i] = {i + 2 == pp ? up[pp - 1].abs() : up[i + 1], up[i]};
      }
      std::vector<HalfInt> cur(len);
      // iterate the product of ranges, rightmost fastest
      auto rec = [&](auto&& self, size_t i) -> void {
        if (i == len) {
          GTPattern q = p;
          q.rows.push_back(cur);
          next.push_back(std::move(q));
          return;
        }
        for (HalfInt v = rng[i].first; v <= rng[i].second; v += HalfInt(1)) {
          cur[i] = v;
          self(self, i + 1);
        }
      };
      rec(rec, 0);
    }
    pats = std::move(next);
  }
  std::sort(pats.begin(), pats.end());
  return pats;
}

long long dimension(const HighestWeight& hw) {
  return static_cast<long long>(enumerate_patterns(hw).size());
}

long long weyl_dimension(const HighestWeight& hw) {
  if (!validate_weight(hw))
    throw Error(ErrorKind::kInvalidArgument, "invalid highest weight: " + hw.str());
  int N = hw.n / 2;
  bool odd = hw.n % 2 == 1;
  std::vector<mpq_class> l(static_cast<size_t>(N)), rho(static_cast<size_t>(N));
  for (int i = 1; i <= N; ++i) {
    // l_i = m_i + N - i (+ 1/2 when odd); rho is the same at m = 0
    mpq_class mi(static_cast<long>(hw.m[static_cast<size_t>(i - 1)].twice()), 2);
    mpq_class shift = N - i + (odd ? mpq_class(1, 2) : mpq_class(0));
    l[static_cast<size_t>(i - 1)] = mi + shift;
    rho[static_cast<size_t>(i - 1)] = shift;
  }
  mpq_class d(1);
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j)
      d *= (l[static_cast<size_t>(i)] * l[static_cast<size_t>(i)] - l[static_cast<size_t>(j)] * l[static_cast<size_t>(j)]) /
           (rho[static_cast<size_t>(i)] * rho[static_cast<size_t>(i)] - rho[static_cast<size_t>(j)] * rho[static_cast<size_t>(j)]);
    if (odd) d *= l[static_cast<size_t>(i)] / rho[static_cast<size_t>(i)];
  }
  d.canonicalize();
  if (d.get_den() != 1)
    throw Error(ErrorKind::kDomain, "Weyl dimension is not integral for " + hw.str());
  return static_cast<long long>(d.get_num().get_si());
}

HalfInt row_l(const GTPattern& pat, int i, int k) {
  HalfInt m = pat.entry(k, i);
  if (k % 2 == 0) return m + HalfInt(k / 2 - i);
  return m + HalfInt((k - 1) / 2 - i) + kHalf;
}

namespace {

// [a]^2 - [b]^2 evaluated as [a+b][a-b]
double sq_diff(HalfInt a, HalfInt b, double q0) {
  return qbracket_num(a + b, q0) * qbracket_num(a - b, q0);
}

double checked_sqrt(double radicand, const char* what) {
  if (radicand < 0) {
    if (radicand > -1e-12) return 0.0;  // exact boundary zero hit by rounding
    throw Error(ErrorKind::kDomain,
                std::string("negative radicand in ") + what + "; q0 must be real positive");
  }
  return std::sqrt(radicand);
}

GTPattern shifted(const GTPattern& pat, int k, int r, int delta) {
  GTPattern q = pat;
  q.row(k)[static_cast<size_t>(r - 1)] += HalfInt::from_twice(2 * delta);
  return q;
}

}  // namespace

double coeff_A(const GTPattern& pat, int r, int p, double q0) {
  const int k = 2 * p;
  if (!pattern_valid(shifted(pat, k, r, +1))) return 0.0;
  HalfInt L = row_l(pat, r, k);
  // pole-free form of the replaced 1/2: 1/sqrt((q^L+q^-L)(q^{L+1}+q^-L-1))
  double half_repl =
      (qpower_num(L, q0) + qpower_num(-L, q0)) * (qpower_num(L + HalfInt(1), q0) + qpower_num(-(L + HalfInt(1)), q0));
  double num = 1.0;
  for (int i = 1; i <= p; ++i) num *= sq_diff(row_l(pat, i, k + 1), L + kHalf, q0);
  for (int i = 1; i <= p - 1; ++i) num *= sq_diff(row_l(pat, i, k - 1), L + kHalf, q0);
  double den = 1.0;
  for (int i = 1; i <= p; ++i) {
    if (i == r) continue;
    HalfInt li = row_l(pat, i, k);
    den *= sq_diff(li, L, q0) * sq_diff(li, L + HalfInt(1), q0);
  }
  return checked_sqrt(num / (den * half_repl), "A coefficient");
}

double coeff_B(const GTPattern& pat, int r, int p, double q0) {
  const int k = 2 * p - 1;
  if (!pattern_valid(shifted(pat, k, r, +1))) return 0.0;
  HalfInt M = row_l(pat, r, k);
  HalfInt Lam = M + kHalf;
  double num = 1.0;
  for (int i = 1; i <= p; ++i) num *= sq_diff(row_l(pat, i, k + 1), Lam, q0);
  for (int i = 1; i <= p - 1; ++i) num *= sq_diff(row_l(pat, i, k - 1), Lam, q0);
  double bl = qbracket_num(Lam, q0);
  double den = bl * bl * qbracket_num(Lam.doubled() - HalfInt(1), q0) *
               qbracket_num(Lam.doubled() + HalfInt(1), q0);
  for (int i = 1; i <= p - 1; ++i) {
    if (i == r) continue;
    HalfInt li = row_l(pat, i, k);
    den *= sq_diff(li, M, q0) * sq_diff(li, M + HalfInt(1), q0);
  }
  return checked_sqrt(num / den, "B coefficient");
}

double coeff_C(const GTPattern& pat, int p, double q0) {
  // Degenerate point: a zero last entry of row 2p-1 zeroes the denominator
  // but forces two numerator zeros; the removable value is 0.
  if (p >= 2 && pat.entry(2 * p - 1, p - 1).is_zero()) return 0.0;
  double num = 1.0;
  for (int i = 1; i <= p; ++i) num *= qbracket_num(row_l(pat, i, 2 * p), q0);
  for (int i = 1; i <= p - 1; ++i) num *= qbracket_num(row_l(pat, i, 2 * p - 2), q0);
  double den = 1.0;
  for (int i = 1; i <= p - 1; ++i) {
    HalfInt li = row_l(pat, i, 2 * p - 1);
    den *= qbracket_num(li - kHalf, q0) * qbracket_num(li + kHalf, q0);
  }
  return num / den;
}

Representation::Representation(HighestWeight hw, double q0, RepOptions opts)
    : hw_(std::move(hw)), q0_(q0) {
  if (!(q0 > 0.0))
    throw Error(ErrorKind::kInvalidArgument, "representation matrices need real q0 > 0");
  patterns_ = enumerate_patterns(hw_);
  const int d = dim();
  const int n = hw_.n;

  auto index_of = [&](const GTPattern& p) -> int {
    auto it = std::lower_bound(patterns_.begin(), patterns_.end(), p);
    return static_cast<int>(it - patterns_.begin());
  };

  gen_.assign(static_cast<size_t>(n - 1), Eigen::MatrixXcd::Zero(d, d));
  for (int j = 1; j <= n - 1; ++j) {
    Eigen::MatrixXcd& M = gen_[static_cast<size_t>(j - 1)];
    if (j % 2 == 0) {
      const int p = j / 2;  // I_{2p+1,2p}
      for (int t = 0; t < d; ++t) {
        const GTPattern& al = patterns_[static_cast<size_t>(t)];
        for (int r = 1; r <= p; ++r) {
          GTPattern up = shifted(al, 2 * p, r, +1);
          if (pattern_valid(up))
            M(index_of(up), t) += opts.a_coefficient_scale * coeff_A(al, r, p, q0_);
          GTPattern dn = shifted(al, 2 * p, r, -1);
          if (pattern_valid(dn))
            M(index_of(dn), t) -= opts.a_coefficient_scale * coeff_A(dn, r, p, q0_);
        }
      }
    } else {
      const int p = (j + 1) / 2;  // I_{2p,2p-1}
      for (int t = 0; t < d; ++t) {
        const GTPattern& al = patterns_[static_cast<size_t>(t)];
        for (int r = 1; r <= p - 1; ++r) {
          GTPattern up = shifted(al, 2 * p - 1, r, +1);
          if (pattern_valid(up)) M(index_of(up), t) += coeff_B(al, r, p, q0_);
          GTPattern dn = shifted(al, 2 * p - 1, r, -1);
          if (pattern_valid(dn)) M(index_of(dn), t) -= coeff_B(dn, r, p, q0_);
        }
        M(t, t) += std::complex<double>(0.0, coeff_C(al, p, q0_));
      }
    }
  }

  // composite generators by the q-commutator recursion on matrices
  const double u = std::sqrt(q0_);
  for (int j = 1; j <= n - 1; ++j) {
    composite_[{+1, j + 1, j}] = gen_[static_cast<size_t>(j - 1)];
    composite_[{-1, j + 1, j}] = gen_[static_cast<size_t>(j - 1)];
  }
  for (int span = 2; span <= n - 1; ++span) {
    for (int l = 1; l + span <= n; ++l) {
      int k = l + span;
      for (int sign : {+1, -1}) {
        double us = sign > 0 ? u : 1.0 / u;
        const Eigen::MatrixXcd& head = composite_.at({+1, l + 1, l});
        const Eigen::MatrixXcd& tail = composite_.at({sign, k, l + 1});
        composite_[{sign, k, l}] = us * (head * tail) - (1.0 / us) * (tail * head);
      }
    }
  }
}

const Eigen::MatrixXcd& Representation::generator(int j) const {
  if (j < 1 || j > hw_.n - 1)
    throw Error(ErrorKind::kInvalidArgument, "generator index out of range");
  return gen_[static_cast<size_t>(j - 1)];
}

const Eigen::MatrixXcd& Representation::matrix_of(const GenSymbol& g) const {
  auto it = composite_.find({g.sign, g.upper, g.lower});
  if (it == composite_.end())
    throw Error(ErrorKind::kInvalidArgument, "generator indices above n of this representation");
  return it->second;
}

Eigen::MatrixXcd Representation::element_matrix(const NCPoly& p) const {
  const int d = dim();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [w, c] : p.terms()) {
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(d, d);
    for (const auto& g : w) prod = prod * matrix_of(g);
    acc += c.eval_at_q(q0_) * prod;
  }
  return acc;
}

std::string dump_generator_matrix(const Representation& rep, int j) {
  std::ostringstream os;
  os.precision(17);
  const auto& M = rep.generator(j);
  os << "# hw=" << rep.weight().str() << " q0=" << rep.q0() << " generator=I(" << j + 1 << ","
     << j << ") dim=" << rep.dim() << "\n";
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
      if (c) os << " ";
      os << M(r, c).real() << " " << M(r, c).imag();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace qso
