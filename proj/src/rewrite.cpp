#include "rewrite.hpp"

#include <algorithm>

namespace qso {

namespace {

// Strict index order on (upper, lower), ignoring sign.
bool index_less(const GenSymbol& a, const GenSymbol& b) {
  if (a.upper != b.upper) return a.upper < b.upper;
  return a.lower < b.lower;
}

GenSymbol plus(int k, int l) { return GenSymbol(+1, k, l); }

}  // namespace

NCPoly expand_composite(GenSymbol g) {
  if (g.is_basic()) return NCPoly::generator(g);
  // I^s_{k,l} = u^s I_{l+1,l} I^s_{k,l+1} - u^-s I^s_{k,l+1} I_{l+1,l}
  NCPoly head = NCPoly::generator(GenSymbol::basic(g.lower));
  NCPoly tail = expand_composite(GenSymbol(g.sign, g.upper, g.lower + 1));
  return qcomm(head, tail, g.sign);
}

NCPoly reorder_rule(const GenSymbol& a, const GenSymbol& b) {
  if (a.sign != 1 || b.sign != 1)
    throw Error(ErrorKind::kInvalidArgument, "reorder_rule requires plus-signed symbols");
  if (!index_less(b, a))
    throw Error(ErrorKind::kInvalidArgument, "reorder_rule called on an ordered pair");

  const QScalar u1 = QScalar::upower(1), um1 = QScalar::upower(-1);
  const QScalar u2 = QScalar::upower(2), um2 = QScalar::upower(-2);
  Word swapped{b, a};

  if (a.upper == b.upper) {
    // shared upper index K: I_{K,L} I_{K,M} = u^-1 I_{L,M} + u^-2 I_{K,M} I_{K,L}
    NCPoly r = NCPoly::monomial(Word{plus(a.lower, b.lower)}, um1);
    r.add_term(swapped, um2);
    return r;
  }
  // here b.upper < a.upper
  if (b.upper == a.lower) {
    // chain: I_{K,L} I_{L,M} = u^2 I_{L,M} I_{K,L} - u I_{K,M}
    NCPoly r = NCPoly::monomial(swapped, u2);
    r.add_term(Word{plus(a.upper, b.lower)}, -u1);
    return r;
  }
  if (b.lower == a.lower) {
    // shared lower index M: I_{K,M} I_{L,M} = u^-1 I_{K,L} + u^-2 I_{L,M} I_{K,M}
    NCPoly r = NCPoly::monomial(Word{plus(a.upper, b.upper)}, um1);
    r.add_term(swapped, um2);
    return r;
  }
  if (b.upper < a.lower || (b.lower > a.lower && b.upper < a.upper)) {
    // disjoint separated (K > L > M > P) or nested (K > M > P > L): commute
    return NCPoly::monomial(swapped);
  }
  // crossing K > M > L > P:
  // I_{K,L} I_{M,P} = I_{M,P} I_{K,L} + (q - q^-1)(I_{L,P} I_{K,M} - I_{K,P} I_{M,L})
  const int K = a.upper, L = a.lower, M = b.upper, P = b.lower;
  QScalar qdiff = u2 - um2;
  NCPoly r = NCPoly::monomial(swapped);
  r.add_term(Word{plus(L, P), plus(K, M)}, qdiff);
  r.add_term(Word{plus(K, P), plus(M, L)}, -qdiff);
  return r;
}

namespace {

class Normalizer {
public:
  explicit Normalizer(RewriteStats* stats) : stats_(stats) {}

  const NCPoly& word_normal_form(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;

    size_t pos = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (index_less(w[i + 1], w[i])) {
        pos = i;
        break;
      }
    }
    NCPoly out;
    if (pos == w.size()) {
      out = NCPoly::monomial(w);
    } else {
      NCPoly local = reorder_rule(w[pos], w[pos + 1]);
      if (stats_) ++stats_->steps;
      for (const auto& [tw, c] : local.terms()) {
        Word next;
        next.reserve(w.size() - 2 + tw.size());
        next.insert(next.end(), w.begin(), w.begin() + static_cast<long>(pos));
        next.insert(next.end(), tw.begin(), tw.end());
        next.insert(next.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
        out += word_normal_form(next).scaled(c);
      }
      if (stats_) stats_->peak_terms = std::max(stats_->peak_terms, (std::uint64_t)out.term_count());
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

private:
  RewriteStats* stats_;
  std::map<Word, NCPoly, DegLexLess> memo_;
};

}  // namespace

NCPoly normalize(const NCPoly& p, int n, RewriteStats* stats) {
  if (p.max_index() > n)
    throw Error(ErrorKind::kInvalidArgument, "element uses generator indices above n");

  // Eliminate minus-signed composites first; the normal-form alphabet is the
  // I+ family only.
  NCPoly expanded;
  for (const auto& [w, c] : p.terms()) {
    bool has_minus = std::any_of(w.begin(), w.end(), [](const GenSymbol& g) { return g.sign < 0; });
    if (!has_minus) {
      expanded.add_term(w, c);
      continue;
    }
    NCPoly prod = NCPoly::scalar(c);
    for (const auto& g : w)
      prod = prod * (g.sign < 0 ? expand_composite(g) : NCPoly::generator(g));
    expanded += prod;
  }

  Normalizer nz(stats);
  NCPoly out;
  for (const auto& [w, c] : expanded.terms()) out += nz.word_normal_form(w).scaled(c);
  out.normal_ = true;
  return out;
}

std::vector<NCPoly> commutator_residuals(const NCPoly& p, int n) {
  std::vector<NCPoly> res;
  res.reserve(static_cast<size_t>(n > 0 ? n - 1 : 0));
  for (int j = 1; j <= n - 1; ++j) {
    NCPoly g = NCPoly::generator(GenSymbol::basic(j));
    res.push_back(normalize(p * g - g * p, n));
  }
  return res;
}

}  // namespace qso
