#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ncpoly.hpp"

namespace qso {

/// Perfect matching of an even index set into (low, high) pairs, sorted by
/// the high element; `length` is the inversion count of the flattened
/// sequence (low1, high1, low2, high2, ...) against ascending order, which
/// reproduces the printed coefficient patterns of the q-antisymmetric
/// tensors.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
  int length = 0;
};

/// All (2r-1)!! matchings of a strictly increasing index sequence of size 2r.
std::vector<Matching> matchings(std::span<const int> indices);

/// q-tensor operator J^sign over a strictly increasing index set of even
/// size: q^{-sign*r(r-1)/2} * sum over matchings of (-q^sign)^length *
/// prod I^sign_{high,low}.
NCPoly build_J(int sign, std::span<const int> indices);

enum class CasimirKind { kEven, kTopPlus, kTopMinus };

struct CasimirElement {
  int n = 0;
  CasimirKind kind = CasimirKind::kEven;
  int r = 0;  // order/2 for kEven; n/2 for top kinds
  NCPoly body; // exact constructor output, unnormalized

  std::string name() const;  // "C3^(2)", "C4^(4)+", ...
};

/// C^(2r)_n = sum over 2r-subsets of q^{sum(k)-r(n+1)} J+ J-.
CasimirElement build_C2r(int n, int r);
/// C^(n)+/- = J^sign_{1..n} for even n.
CasimirElement build_Ctop(int n, int sign);
/// C^(2r)_n for r = 1..floor((n-1)/2), plus C^(n)+ when n is even.
std::vector<CasimirElement> casimir_generating_set(int n);
/// All Casimirs acting in a battery check: C^(2r)_n for r = 1..floor(n/2),
/// plus C^(n)+/- for even n.
std::vector<CasimirElement> casimir_full_set(int n);

}  // namespace qso
