#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gtrep.hpp"
#include "rewrite.hpp"
#include "textio.hpp"

using namespace qso;

namespace {

HighestWeight hw_of(int n, std::initializer_list<const char*> entries) {
  HighestWeight hw;
  hw.n = n;
  for (const char* e : entries) hw.m.push_back(HalfInt::parse(e));
  return hw;
}

double inf_norm(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("validate_weight") {
  CHECK(validate_weight(hw_of(4, {"1", "-1"})));   // last entry may be negative
  CHECK(validate_weight(hw_of(4, {"1", "1"})));
  CHECK(!validate_weight(hw_of(5, {"1", "3/2"})));  // mixed parity
  CHECK(!validate_weight(hw_of(3, {"-1"})));        // odd n needs m >= 0
  CHECK(!validate_weight(hw_of(4, {"0", "1"})));
  CHECK(validate_weight(hw_of(2, {"-2"})));         // so_2: no constraint
  CHECK(validate_weight(hw_of(7, {"5/2", "3/2", "1/2"})));
  CHECK(!validate_weight(hw_of(7, {"5/2", "3/2", "-1/2"})));
}

TEST_CASE("weight parse and str round-trip") {
  HighestWeight hw = HighestWeight::parse(5, "3/2,1/2");
  CHECK(hw.m.size() == 2);
  CHECK(hw.m[0] == HalfInt::from_twice(3));
  CHECK(hw.str() == "3/2,1/2");
  CHECK_THROWS_AS(HighestWeight::parse(4, "1,,0"), Error);
}

TEST_CASE("pattern enumeration fixed examples") {
  // n=3, hw=(1): three patterns, m_{1,2} in {-1,0,1}
  auto pats = enumerate_patterns(hw_of(3, {"1"}));
  REQUIRE(pats.size() == 3);
  CHECK(pats[0].entry(2, 1) == HalfInt(-1));
  CHECK(pats[1].entry(2, 1) == HalfInt(0));
  CHECK(pats[2].entry(2, 1) == HalfInt(1));
  // n=4, hw=(1,0): 4 patterns
  CHECK(enumerate_patterns(hw_of(4, {"1", "0"})).size() == 4);
  // trivial irrep
  CHECK(enumerate_patterns(hw_of(3, {"0"})).size() == 1);
  // so_2
  CHECK(enumerate_patterns(hw_of(2, {"-3/2"})).size() == 1);
  CHECK_THROWS_AS(enumerate_patterns(hw_of(3, {"-1"})), Error);
  // pattern text: row per line
  CHECK(pats[2].str() == "1\n1\n");
}

TEST_CASE("dimension equals the Weyl formula") {
  CHECK(dimension(hw_of(3, {"1/2"})) == 2);
  CHECK(weyl_dimension(hw_of(3, {"1/2"})) == 2);
  CHECK(dimension(hw_of(5, {"1", "0"})) == 5);
  CHECK(weyl_dimension(hw_of(5, {"1", "0"})) == 5);
  CHECK(dimension(hw_of(2, {"4"})) == 1);
  for (int n = 2; n <= 6; ++n)
    for (const auto& hw : dominant_weights(n, HalfInt(2)))
      CHECK(dimension(hw) == weyl_dimension(hw));
}

TEST_CASE("dominant weight enumeration") {
  // n=2, max=1: (-1), (-1/2), (0), (1/2), (1)
  auto ws = dominant_weights(2, HalfInt(1));
  REQUIRE(ws.size() == 5);
  CHECK(ws[0].str() == "-1");
  CHECK(ws[1].str() == "-1/2");
  CHECK(ws[2].str() == "0");
  CHECK(ws[3].str() == "1/2");
  CHECK(ws[4].str() == "1");
  for (const auto& w : ws) CHECK(dimension(w) == 1);
  // n=4, max=1 includes both (1,-1) and (1,1)
  auto w4 = dominant_weights(4, HalfInt(1));
  int seen = 0;
  for (const auto& w : w4) seen += (w.str() == "1,-1") + (w.str() == "1,1");
  CHECK(seen == 2);
  for (const auto& w : w4) CHECK(validate_weight(w));
}

TEST_CASE("GT coefficients, fixed values") {
  double q0 = 1.2;
  // n=3, hw=(1): C_1 = [m_{1,2}]
  auto pats = enumerate_patterns(hw_of(3, {"1"}));
  CHECK(coeff_C(pats[0], 1, q0) == doctest::Approx(-qbracket_num(HalfInt(1), q0)));
  CHECK(coeff_C(pats[1], 1, q0) == doctest::Approx(0.0));
  CHECK(coeff_C(pats[2], 1, q0) == doctest::Approx(qbracket_num(HalfInt(1), q0)));
  // [1] = 1 at any q0
  CHECK(qbracket_num(HalfInt(1), q0) == doctest::Approx(1.0));
  // spinor raising step: 1/(q^(1/2) + q^(-1/2))
  auto spin = enumerate_patterns(hw_of(3, {"1/2"}));
  double expect = 1.0 / (std::sqrt(q0) + 1.0 / std::sqrt(q0));
  CHECK(coeff_A(spin[0], 1, 1, q0) == doctest::Approx(expect));
  // boundary: raising the top pattern leaves the space, coefficient 0
  CHECK(coeff_A(spin[1], 1, 1, q0) == doctest::Approx(0.0));
  // classical limit of the replaced 1/2 factor
  auto top = enumerate_patterns(hw_of(3, {"2"}));
  // A at q0 -> 1 equals the classical 1/2 sqrt((m-mu)(m+mu+1))
  for (size_t t = 0; t + 1 < top.size(); ++t) {
    double mu = top[t].entry(2, 1).to_double();
    double cls = 0.5 * std::sqrt((2.0 - mu) * (2.0 + mu + 1.0));
    CHECK(coeff_A(top[t], 1, 1, 1.0 + 1e-12) == doctest::Approx(cls).epsilon(1e-6));
  }
}

TEST_CASE("generator matrices, fixed examples") {
  // n=3, hw=(1): T(I21) = diag(-i, 0, i) at any q0
  for (double q0 : {1.2, 0.85, 2.0}) {
    Representation rep(hw_of(3, {"1"}), q0);
    Eigen::MatrixXcd m = rep.generator(1);
    CHECK(inf_norm(m - (Eigen::MatrixXcd(3, 3) << std::complex<double>(0, -1), 0, 0, 0, 0, 0, 0,
                        0, std::complex<double>(0, 1))
                           .finished()) < 1e-14);
  }
  // trivial irrep: all generators are 1x1 zero
  Representation triv(hw_of(3, {"0"}), 1.2);
  CHECK(triv.dim() == 1);
  CHECK(inf_norm(triv.generator(1)) == 0.0);
  CHECK(inf_norm(triv.generator(2)) == 0.0);
  // spinor: T(I32) antidiagonal with +-a
  double q0 = 1.2;
  Representation spin(hw_of(3, {"1/2"}), q0);
  double a = 1.0 / (std::sqrt(q0) + 1.0 / std::sqrt(q0));
  Eigen::MatrixXcd expect(2, 2);
  expect << 0, -a, a, 0;
  CHECK(inf_norm(spin.generator(2) - expect) < 1e-14);
  CHECK_THROWS_AS(spin.generator(3), Error);
  CHECK_THROWS_AS(Representation(hw_of(3, {"1"}), -1.0), Error);
}

TEST_CASE("structure of generator matrices") {
  // even-index generators are real with shift terms only; odd-index carry the
  // imaginary diagonal
  Representation rep(hw_of(5, {"3/2", "1/2"}), 1.4);
  for (int j = 1; j <= 4; ++j) {
    const auto& m = rep.generator(j);
    for (int r = 0; r < rep.dim(); ++r)
      for (int c = 0; c < rep.dim(); ++c) {
        if (r == c) CHECK(m(r, c).real() == doctest::Approx(0.0));
        else CHECK(m(r, c).imag() == doctest::Approx(0.0));
      }
    if (j % 2 == 0)
      for (int r = 0; r < rep.dim(); ++r) CHECK(std::abs(m(r, r)) == doctest::Approx(0.0));
  }
}

TEST_CASE("element_matrix is homomorphic") {
  Representation rep(hw_of(4, {"1", "0"}), 1.2);
  // empty word -> identity
  CHECK(inf_norm(rep.element_matrix(NCPoly::one()) -
                 Eigen::MatrixXcd::Identity(rep.dim(), rep.dim())) == 0.0);
  // composite = q-commutator of matrices
  double u = std::sqrt(1.2);
  Eigen::MatrixXcd m21 = rep.generator(1), m32 = rep.generator(2);
  Eigen::MatrixXcd i31 = u * (m21 * m32) - 1.0 / u * (m32 * m21);
  CHECK(inf_norm(rep.element_matrix(parse_element("I+(3,1)")) - i31) < 1e-13);
  // products map to matrix products
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    NCPoly p = parse_element("I+(3,1) I(2,1)"), r = parse_element("I-(4,2) + q I(4,3)");
    CHECK(inf_norm(rep.element_matrix(p * r) - rep.element_matrix(p) * rep.element_matrix(r)) <
          1e-12);
  }
}

TEST_CASE("boundary shifts never leave the pattern space") {
  for (int n : {3, 4, 5}) {
    for (const auto& hw : dominant_weights(n, HalfInt::from_twice(3))) {
      auto pats = enumerate_patterns(hw);
      for (const auto& p : pats) {
        for (int k = 2; k < n; ++k) {
          for (int i = 1; i <= static_cast<int>(p.row(k).size()); ++i) {
            GTPattern up = p;
            up.row(k)[static_cast<size_t>(i - 1)] += HalfInt(1);
            if (!pattern_valid(up)) {
              // the matching raising coefficient must vanish
              if (k % 2 == 0) CHECK(coeff_A(p, i, k / 2, 1.2) == doctest::Approx(0.0));
              else CHECK(coeff_B(p, i, (k + 1) / 2, 1.2) == doctest::Approx(0.0));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("matrix dump format") {
  Representation rep(hw_of(3, {"1"}), 1.2);
  std::string dump = dump_generator_matrix(rep, 1);
  CHECK(dump.rfind("# hw=1 q0=1.2 generator=I(2,1) dim=3\n", 0) == 0);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 4);  // header + 3 rows
}

TEST_CASE("perturbed A coefficients break the relations") {
  Representation good(hw_of(4, {"1", "0"}), 1.2);
  Representation bad(hw_of(4, {"1", "0"}), 1.2, RepOptions{1.01});
  auto tri = [](const Representation& rep, int j) {
    const auto& a = rep.generator(j);
    const auto& b = rep.generator(j - 1);
    double q0 = rep.q0();
    return inf_norm(a * a * b + b * a * a - (q0 + 1 / q0) * (a * b * a) + b);
  };
  CHECK(tri(good, 2) < 1e-12);
  CHECK(tri(bad, 2) > 1e-3);
}
