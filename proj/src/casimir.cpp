#include "casimir.hpp"

#include <algorithm>

namespace qso {

namespace {

void enumerate_matchings(std::vector<int>& pool, std::vector<std::pair<int, int>>& acc,
                         std::vector<Matching>& out) {
  if (pool.empty()) {
    Matching m;
    m.pairs = acc;
    std::sort(m.pairs.begin(), m.pairs.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    std::vector<int> flat;
    flat.reserve(m.pairs.size() * 2);
    for (const auto& [lo, hi] : m.pairs) {
      flat.push_back(lo);
      flat.push_back(hi);
    }
    int inv = 0;
    for (size_t i = 0; i < flat.size(); ++i)
      for (size_t j = i + 1; j < flat.size(); ++j)
        if (flat[i] > flat[j]) ++inv;
    m.length = inv;
    out.push_back(std::move(m));
    return;
  }
  // pair the smallest unused index with each other unused index
  int lo = pool.front();
  std::vector<int> rest(pool.begin() + 1, pool.end());
  for (size_t t = 0; t < rest.size(); ++t) {
    int hi = rest[t];
    std::vector<int> rem;
    rem.reserve(rest.size() - 1);
    for (size_t s = 0; s < rest.size(); ++s)
      if (s != t) rem.push_back(rest[s]);
    acc.emplace_back(lo, hi);
    enumerate_matchings(rem, acc, out);
    acc.pop_back();
  }
}

void check_indices(std::span<const int> idx) {
  if (idx.size() % 2 != 0)
    throw Error(ErrorKind::kInvalidArgument, "index sequence must have even size");
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] >= idx[i + 1])
      throw Error(ErrorKind::kInvalidArgument, "index sequence must be strictly increasing");
  if (!idx.empty() && idx.front() < 1)
    throw Error(ErrorKind::kInvalidArgument, "indices start at 1");
}

}  // namespace

std::vector<Matching> matchings(std::span<const int> indices) {
  check_indices(indices);
  std::vector<int> pool(indices.begin(), indices.end());
  std::vector<std::pair<int, int>> acc;
  std::vector<Matching> out;
  enumerate_matchings(pool, acc, out);
  // deterministic: sort by pair list
  std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) { return a.pairs < b.pairs; });
  return out;
}

NCPoly build_J(int sign, std::span<const int> indices) {
  check_indices(indices);
  if (sign != 1 && sign != -1) throw Error(ErrorKind::kInvalidArgument, "sign must be +1/-1");
  const long long r = static_cast<long long>(indices.size()) / 2;
  // q^{-sign * r(r-1)/2}
  QScalar prefactor = QScalar::upower(-sign * r * (r - 1));
  NCPoly acc;
  for (const Matching& m : matchings(indices)) {
    // (-q^sign)^length
    QScalar c = QScalar::upower(2LL * sign * m.length);
    if (m.length % 2 != 0) c = -c;
    Word w;
    w.reserve(m.pairs.size());
    for (const auto& [lo, hi] : m.pairs) w.emplace_back(sign, hi, lo);
    acc.add_term(w, c * prefactor);
  }
  return acc;
}

std::string CasimirElement::name() const {
  switch (kind) {
    case CasimirKind::kEven:
      return "C" + std::to_string(n) + "^(" + std::to_string(2 * r) + ")";
    case CasimirKind::kTopPlus:
      return "C" + std::to_string(n) + "^(" + std::to_string(n) + ")+";
    case CasimirKind::kTopMinus:
      return "C" + std::to_string(n) + "^(" + std::to_string(n) + ")-";
  }
  return {};
}

CasimirElement build_C2r(int n, int r) {
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "n must be at least 2");
  if (r < 1 || 2 * r > n)
    throw Error(ErrorKind::kInvalidArgument, "order out of range: need 1 <= r <= n/2");
  CasimirElement c;
  c.n = n;
  c.kind = CasimirKind::kEven;
  c.r = r;
  // iterate strictly increasing 2r-subsets of {1..n} in lexicographic order
  std::vector<int> sub(static_cast<size_t>(2 * r));
  for (int i = 0; i < 2 * r; ++i) sub[static_cast<size_t>(i)] = i + 1;
  while (true) {
    long long ksum = 0;
    for (int k : sub) ksum += k;
    QScalar coeff = QScalar::upower(2 * (ksum - static_cast<long long>(r) * (n + 1)));
    c.body += (build_J(+1, sub) * build_J(-1, sub)).scaled(coeff);
    // next subset
    int i = 2 * r - 1;
    while (i >= 0 && sub[static_cast<size_t>(i)] == n - (2 * r - 1 - i)) --i;
    if (i < 0) break;
    ++sub[static_cast<size_t>(i)];
    for (int j = i + 1; j < 2 * r; ++j) sub[static_cast<size_t>(j)] = sub[static_cast<size_t>(j - 1)] + 1;
  }
  return c;
}

CasimirElement build_Ctop(int n, int sign) {
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorKind::kInvalidArgument, "top Casimir requires even n");
  if (sign != 1 && sign != -1) throw Error(ErrorKind::kInvalidArgument, "sign must be +1/-1");
  CasimirElement c;
  c.n = n;
  c.kind = sign > 0 ? CasimirKind::kTopPlus : CasimirKind::kTopMinus;
  c.r = n / 2;
  std::vector<int> all(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i + 1;
  c.body = build_J(sign, all);
  return c;
}

std::vector<CasimirElement> casimir_generating_set(int n) {
  std::vector<CasimirElement> out;
  for (int r = 1; 2 * r <= n - 1; ++r) out.push_back(build_C2r(n, r));
  if (n % 2 == 0) out.push_back(build_Ctop(n, +1));
  return out;
}

std::vector<CasimirElement> casimir_full_set(int n) {
  std::vector<CasimirElement> out;
  for (int r = 1; 2 * r <= n; ++r) out.push_back(build_C2r(n, r));
  if (n % 2 == 0) {
    out.push_back(build_Ctop(n, +1));
    out.push_back(build_Ctop(n, -1));
  }
  return out;
}

}  // namespace qso
