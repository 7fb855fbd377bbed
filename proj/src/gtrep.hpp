#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "halfint.hpp"
#include "ncpoly.hpp"

namespace qso {

/// Irrep label m_n = (m_{1,n}, ..., m_{N,n}), N = floor(n/2); entries all
/// integers or all half-integers and dominance-ordered (the last entry may be
/// negative for even n).
struct HighestWeight {
  int n = 0;
  std::vector<HalfInt> m;

  std::string str() const;  // "3/2,1/2"
  static HighestWeight parse(int n, std::string_view text);
};

bool validate_weight(const HighestWeight& hw);

/// Gel'fand-Tsetlin pattern: rows for k = n, n-1, ..., 2 (top-down), row k
/// holding floor(k/2) entries, consecutive rows interlocking.
struct GTPattern {
  int n = 0;
  std::vector<std::vector<HalfInt>> rows;  // rows[0] = row n, ..., back() = row 2

  const std::vector<HalfInt>& row(int k) const { return rows[static_cast<size_t>(n - k)]; }
  std::vector<HalfInt>& row(int k) { return rows[static_cast<size_t>(n - k)]; }
  HalfInt entry(int k, int i) const { return row(k)[static_cast<size_t>(i - 1)]; }  // 1-indexed

  std::string str() const;  // row per line

  friend bool operator==(const GTPattern& a, const GTPattern& b) { return a.rows == b.rows; }
  friend bool operator<(const GTPattern& a, const GTPattern& b) { return a.rows < b.rows; }
};

bool pattern_valid(const GTPattern& pat);

/// All dominant weights with entries of absolute value <= max_entry, both
/// parity classes, sorted ascending.
std::vector<HighestWeight> dominant_weights(int n, HalfInt max_entry);

/// All patterns over hw, in lexicographic order (rows top-down, entries
/// left-to-right); the count is the irrep dimension.
std::vector<GTPattern> enumerate_patterns(const HighestWeight& hw);
long long dimension(const HighestWeight& hw);
/// Independent cross-check: classical Weyl dimension formula for so_n.
long long weyl_dimension(const HighestWeight& hw);

/// Shifted row coordinate l_{i,k} (1-indexed i): m + s - i for row 2s,
/// m + s - i + 1/2 for row 2s+1.
HalfInt row_l(const GTPattern& pat, int i, int k);

struct RepOptions {
  /// Scale applied to every A coefficient; != 1 only in negative-control
  /// runs that must break the relations.
  double a_coefficient_scale = 1.0;
};

/// Raising coefficient A^r_{2p}; 0 when the shift leaves the pattern space.
double coeff_A(const GTPattern& pat, int r, int p, double q0);
/// Raising coefficient B^r_{2p-1}; 0 at the boundary.
double coeff_B(const GTPattern& pat, int r, int p, double q0);
/// Diagonal coefficient C_{2p-1} (the matrix gets i*C).
double coeff_C(const GTPattern& pat, int p, double q0);

/// Complex matrices of all generators of one irrep at a fixed real q0 > 0,
/// in the deterministic pattern basis; immutable after construction.
class Representation {
public:
  Representation(HighestWeight hw, double q0, RepOptions opts = {});

  const HighestWeight& weight() const { return hw_; }
  double q0() const { return q0_; }
  int dim() const { return static_cast<int>(patterns_.size()); }
  const std::vector<GTPattern>& patterns() const { return patterns_; }

  /// Matrix of the basic generator I_{j+1,j}, 1 <= j <= n-1.
  const Eigen::MatrixXcd& generator(int j) const;
  /// Matrix of any generator symbol (composites via the q-commutator
  /// recursion, built once in the constructor).
  const Eigen::MatrixXcd& matrix_of(const GenSymbol& g) const;
  /// Homomorphic evaluation of an element: words become matrix products,
  /// coefficients are evaluated at q0.
  Eigen::MatrixXcd element_matrix(const NCPoly& p) const;

private:
  HighestWeight hw_;
  double q0_;
  std::vector<GTPattern> patterns_;
  std::vector<Eigen::MatrixXcd> gen_;  // index j-1
  std::map<std::tuple<int, int, int>, Eigen::MatrixXcd> composite_;  // (sign,k,l)
};

/// Plain numeric dump with a header naming hw, q0 and the generator.
std::string dump_generator_matrix(const Representation& rep, int j);

}  // namespace qso
