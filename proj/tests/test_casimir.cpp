#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "casimir.hpp"
#include "rewrite.hpp"
#include "textio.hpp"

using namespace qso;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(QSO_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file: " << name);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string s = buf.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

void check_against_golden(const NCPoly& body, const std::string& file) {
  std::string text = read_golden(file);
  CHECK(parse_element(text) == body);          // same element
  CHECK(to_string(body) == text);              // stable rendering
}

}  // namespace

TEST_CASE("matchings") {
  {
    std::vector<int> idx{2, 5};
    auto ms = matchings(idx);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].pairs == std::vector<std::pair<int, int>>{{2, 5}});
    CHECK(ms[0].length == 0);
  }
  {
    // (i,j,k,l) = (1,2,3,4): lengths 0,1,2 for the three pairings
    std::vector<int> idx{1, 2, 3, 4};
    auto ms = matchings(idx);
    REQUIRE(ms.size() == 3);
    for (const auto& m : ms) {
      if (m.pairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}}) CHECK(m.length == 0);
      else if (m.pairs == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}}) CHECK(m.length == 1);
      else if (m.pairs == std::vector<std::pair<int, int>>{{2, 3}, {1, 4}}) CHECK(m.length == 2);
      else FAIL("unexpected matching");
      // pairs sorted by high element, low < high
      for (size_t t = 0; t < m.pairs.size(); ++t) {
        CHECK(m.pairs[t].first < m.pairs[t].second);
        if (t) CHECK(m.pairs[t - 1].second < m.pairs[t].second);
      }
    }
  }
  {
    std::vector<int> idx{1, 2, 3, 4, 5, 6};
    CHECK(matchings(idx).size() == 15);  // (2*3-1)!!
  }
  std::vector<int> odd{1, 2, 3};
  CHECK_THROWS_AS(matchings(odd), Error);
  std::vector<int> bad{2, 2};
  CHECK_THROWS_AS(matchings(bad), Error);
}

TEST_CASE("build_J printed forms") {
  {
    std::vector<int> idx{1, 2};
    CHECK(build_J(+1, idx) == parse_element("I(2,1)"));
    CHECK(build_J(-1, idx) == parse_element("I(2,1)"));
  }
  {
    // J+_{i,j,k,l} = q^-1 I+(j,i) I+(l,k) - I+(k,i) I+(l,j) + q I+(k,j) I+(l,i)
    std::vector<int> idx{1, 2, 4, 5};
    CHECK(build_J(+1, idx) ==
          parse_element("q^-1 I+(2,1) I+(5,4) - I+(4,1) I+(5,2) + q I+(4,2) I+(5,1)"));
    CHECK(build_J(-1, idx) ==
          parse_element("q I-(2,1) I-(5,4) - I-(4,1) I-(5,2) + q^-1 I-(4,2) I-(5,1)"));
  }
}

TEST_CASE("J coefficient vectors coincide at u=1") {
  for (std::vector<int> idx :
       {std::vector<int>{1, 2, 3, 4}, {1, 2, 3, 4, 5, 6}, {2, 3, 5, 6}, {1, 3, 4, 6}}) {
    NCPoly jp = build_J(+1, idx), jm = build_J(-1, idx);
    REQUIRE(jp.term_count() == jm.term_count());
    auto it = jp.terms().begin();
    auto jt = jm.terms().begin();
    for (; it != jp.terms().end(); ++it, ++jt) {
      // words correspond under sign flip; coefficients agree at u=1
      REQUIRE(it->first.size() == jt->first.size());
      for (size_t s = 0; s < it->first.size(); ++s)
        CHECK(it->first[s].same_indices(jt->first[s]));
      GaussRat a = it->second.eval_exact_at_u(GaussRat(1));
      GaussRat b = jt->second.eval_exact_at_u(GaussRat(1));
      CHECK(a == b);
    }
  }
}

TEST_CASE("build_C2r") {
  // C_3^(2) = q^-1 I21^2 + I31+ I31- + q I32^2
  CHECK(build_C2r(3, 1).body ==
        parse_element("q^-1 I(2,1)^2 + I+(3,1) I-(3,1) + q I(3,2)^2"));
  // general quadratic: sum q^{i+j-n-1} I+(j,i) I-(j,i)
  for (int n = 2; n <= 8; ++n) {
    NCPoly expect;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        expect += NCPoly::monomial(Word{GenSymbol(1, j, i), GenSymbol(-1, j, i)},
                                   QScalar::upower(2 * (i + j - n - 1)));
    CHECK(build_C2r(n, 1).body == expect);
  }
  // C_5^(4): five-term sum with coefficients q^-2..q^2 pairing J+ J-
  {
    NCPoly expect;
    const int subs[5][4] = {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}};
    for (const auto& s : subs) {
      std::vector<int> idx(s, s + 4);
      long long e = idx[0] + idx[1] + idx[2] + idx[3] - 12;
      expect += (build_J(+1, idx) * build_J(-1, idx)).scaled(QScalar::upower(2 * e));
    }
    CHECK(build_C2r(5, 2).body == expect);
  }
  CHECK_THROWS_AS(build_C2r(3, 2), Error);
  CHECK_THROWS_AS(build_C2r(4, 0), Error);
  CHECK(build_C2r(4, 1).name() == "C4^(2)");
}

TEST_CASE("build_Ctop") {
  CHECK(build_Ctop(2, +1).body == parse_element("I(2,1)"));
  CHECK(build_Ctop(4, +1).body ==
        parse_element("q^-1 I(2,1) I(4,3) - I+(3,1) I+(4,2) + q I(3,2) I+(4,1)"));
  CHECK(build_Ctop(6, +1).body.term_count() == 15);
  CHECK_THROWS_AS(build_Ctop(5, +1), Error);
  CHECK(build_Ctop(4, -1).name() == "C4^(4)-");
}

TEST_CASE("casimir_generating_set") {
  auto s3 = casimir_generating_set(3);
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].name() == "C3^(2)");
  auto s4 = casimir_generating_set(4);
  REQUIRE(s4.size() == 2);
  CHECK(s4[0].name() == "C4^(2)");
  CHECK(s4[1].name() == "C4^(4)+");
  auto s5 = casimir_generating_set(5);
  REQUIRE(s5.size() == 2);
  CHECK(s5[0].name() == "C5^(2)");
  CHECK(s5[1].name() == "C5^(4)");
}

TEST_CASE("top order factorization is structural") {
  for (int n : {2, 4, 6}) {
    CHECK(build_C2r(n, n / 2).body == build_Ctop(n, +1).body * build_Ctop(n, -1).body);
  }
}

TEST_CASE("printed C_3^(2) dual form agrees in normal form") {
  NCPoly lhs = parse_element("q^-1 I(2,1)^2 + I+(3,1) I-(3,1) + q I(3,2)^2");
  NCPoly rhs = parse_element("q I(2,1)^2 + I-(3,1) I+(3,1) + q^-1 I(3,2)^2");
  CHECK(normalize(lhs, 3) == normalize(rhs, 3));
  CHECK(normalize(build_Ctop(4, +1).body, 4) == normalize(build_Ctop(4, -1).body, 4));
}

TEST_CASE("golden files") {
  check_against_golden(build_C2r(3, 1).body, "c3_2.txt");
  check_against_golden(build_C2r(4, 1).body, "c4_2.txt");
  check_against_golden(build_Ctop(4, +1).body, "c4_4_plus.txt");
  check_against_golden(build_Ctop(4, -1).body, "c4_4_minus.txt");
  check_against_golden(build_C2r(5, 2).body, "c5_4.txt");
  check_against_golden(build_Ctop(6, +1).body, "c6_6_plus.txt");
  for (int n = 2; n <= 8; ++n)
    check_against_golden(build_C2r(n, 1).body, "c" + std::to_string(n) + "_2.txt");
}
