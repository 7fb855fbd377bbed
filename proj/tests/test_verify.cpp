#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "textio.hpp"
#include "verify.hpp"

using namespace qso;

namespace {

HighestWeight hw_of(int n, std::initializer_list<const char*> entries) {
  HighestWeight hw;
  hw.n = n;
  for (const char* e : entries) hw.m.push_back(HalfInt::parse(e));
  return hw;
}

}  // namespace

TEST_CASE("check_relations") {
  Representation rep(hw_of(3, {"1"}), 1.2);
  auto res = check_relations(rep);
  CHECK(!res.empty());
  for (const auto& r : res) {
    CHECK(r.pass);
    CHECK(r.residual < 1e-12);
  }
  // n=2: empty table
  Representation r2(hw_of(2, {"1"}), 1.2);
  CHECK(check_relations(r2).empty());
  // corrupted A coefficients produce a residual above the control threshold
  Representation bad(hw_of(3, {"1"}), 1.2, RepOptions{1.01});
  double worst = 0;
  for (const auto& r : check_relations(bad)) worst = std::max(worst, r.residual);
  CHECK(worst > 1e-3);
}

TEST_CASE("check_scalarness and check_eigenvalue") {
  Representation rep(hw_of(3, {"1"}), 1.2);
  CasimirElement c = build_C2r(3, 1);
  auto sc = check_scalarness(rep, c);
  CHECK(sc.pass);
  CHECK(sc.off_diag < 1e-12);
  auto ev = check_eigenvalue(rep, c);
  CHECK(ev.pass);
  // measured ~ -[1][2] at q0 = 1.2
  double expect = -(qbracket_num(HalfInt(1), 1.2) * qbracket_num(HalfInt(2), 1.2));
  CHECK(ev.measured.real() == doctest::Approx(expect).epsilon(1e-12));
  CHECK(ev.chi_value.real() == doctest::Approx(expect).epsilon(1e-12));

  // trivial irrep: 1x1, trivially scalar
  Representation triv(hw_of(3, {"0"}), 1.2);
  CHECK(check_scalarness(triv, c).pass);

  // vanishing chi: n=5, hw=(1,0), C^(4)_5 scalar with mean ~ 0
  Representation r5(hw_of(5, {"1", "0"}), 1.2);
  CasimirElement c54 = build_C2r(5, 2);
  auto sc5 = check_scalarness(r5, c54);
  CHECK(sc5.pass);
  CHECK(std::abs(sc5.mean_diag) < 1e-10);
  auto ev5 = check_eigenvalue(r5, c54);
  CHECK(ev5.pass);
  CHECK(ev5.chi_text == "0");

  // n=4, hw=(1,1): C^(4)+ measured ~ -[2]
  Representation r4(hw_of(4, {"1", "1"}), 1.2);
  auto ev4 = check_eigenvalue(r4, build_Ctop(4, +1));
  CHECK(ev4.pass);
  CHECK(ev4.measured.real() ==
        doctest::Approx(-qbracket_num(HalfInt(2), 1.2) * qbracket_num(HalfInt(1), 1.2)));
  // n=4, hw=(1,0): [0] factor kills the eigenvalue
  Representation r40(hw_of(4, {"1", "0"}), 1.2);
  auto ev40 = check_eigenvalue(r40, build_Ctop(4, +1));
  CHECK(ev40.pass);
  CHECK(std::abs(ev40.measured) < 1e-10);

  CHECK_THROWS_AS(check_scalarness(rep, build_C2r(4, 1)), Error);
}

TEST_CASE("check_symbolic_centrality") {
  CHECK(check_symbolic_centrality(3, build_C2r(3, 1), 4).status == "central");
  CHECK(check_symbolic_centrality(4, build_Ctop(4, +1), 4).status == "central");
  CHECK(check_symbolic_centrality(4, build_Ctop(4, -1), 4).status == "central");
  CHECK(check_symbolic_centrality(5, build_C2r(5, 1), 4).status == "skipped");
  CasimirElement fake;
  fake.n = 3;
  fake.kind = CasimirKind::kEven;
  fake.r = 1;
  fake.body = NCPoly::generator(GenSymbol::basic(1));
  auto rec = check_symbolic_centrality(3, fake, 4);
  CHECK(rec.status == "not-central");
  CHECK(rec.counts_as_failure());
}

TEST_CASE("check_identities") {
  for (int n : {3, 4, 5, 6}) {
    for (const auto& id : check_identities(n)) {
      INFO(id.name);
      CHECK(id.pass);
    }
  }
}

TEST_CASE("run_verification end to end") {
  VerificationJob job;
  job.n = 3;
  job.weights = {hw_of(3, {"1"}), hw_of(3, {"1/2"})};
  job.q0 = {1.2, 0.85};
  job.symbolic = true;
  job.jobs = 2;
  VerificationReport rep = run_verification(job);
  CHECK(rep.pass);
  CHECK(rep.relations.size() == 2 * 2 * 8);
  CHECK(!rep.centrality.empty());
  CHECK(rep.centrality[0].status == "central");
  REQUIRE(rep.negative_controls.size() == 2);
  CHECK(rep.negative_controls[0].behaved);
  CHECK(rep.negative_controls[1].behaved);

  // invalid weight is an input error, not a failed run
  VerificationJob badjob;
  badjob.n = 3;
  badjob.weights = {hw_of(3, {"-1"})};
  badjob.q0 = {1.2};
  CHECK_THROWS_AS(run_verification(badjob), Error);
}

TEST_CASE("report json schema and determinism") {
  VerificationJob job;
  job.n = 3;
  job.weights = {hw_of(3, {"1"})};
  job.q0 = {1.2};
  job.jobs = 1;
  VerificationReport r1 = run_verification(job);
  job.jobs = 3;  // worker count must not change the bytes
  VerificationReport r2 = run_verification(job);
  auto j1 = r1.to_json(), j2 = r2.to_json();
  j2["job"]["jobs"] = 1;  // job echo differs only in the knob itself
  CHECK(j1.dump() == j2.dump());
  for (const char* key : {"job", "relations", "scalarness", "eigenvalues", "identities",
                          "centrality", "negative_controls", "verdict"})
    CHECK(j1.contains(key));
  CHECK(j1["verdict"] == "pass");
  // every numeric entry records its tolerance
  for (const auto& e : j1["relations"]) CHECK(e.contains("tol"));
  for (const auto& e : j1["scalarness"]) CHECK(e.contains("tol"));
  for (const auto& e : j1["eigenvalues"]) CHECK(e.contains("tol"));
  // repeated runs are byte-identical
  CHECK(run_verification(job).to_json().dump() == r2.to_json().dump());
  CHECK(r1.to_text().find("verdict: PASS") != std::string::npos);
}

TEST_CASE("spectrum rows") {
  auto rows = run_spectrum(3, {hw_of(3, {"0"}), hw_of(3, {"1"}), hw_of(3, {"2"})}, {1.2}, 1);
  REQUIRE(rows.size() == 3);
  // column matches -[m][m+1] numerics
  for (const auto& row : rows) {
    HalfInt m = HalfInt::parse(row.weight);
    double expect = -(qbracket_num(m, 1.2) * qbracket_num(m + HalfInt(1), 1.2));
    CHECK(row.chi_numeric.real() == doctest::Approx(expect).epsilon(1e-12));
    CHECK(row.rel_err < 1e-9);
  }
  // n=4, (m,0) rows: top Casimir column all zero
  auto rows4 = run_spectrum(4, {hw_of(4, {"1", "0"}), hw_of(4, {"2", "0"})}, {1.2}, 1);
  int tops = 0;
  for (const auto& row : rows4)
    if (row.casimir == "C4^(4)+" || row.casimir == "C4^(4)-") {
      ++tops;
      CHECK(row.chi_exact == "0");
      CHECK(std::abs(row.chi_numeric) == 0.0);
    }
  CHECK(tops == 4);
  // csv header
  std::string csv = spectrum_csv(rows, 12);
  CHECK(csv.rfind("n,weights,casimir_kind,q0,chi_exact,chi_numeric_re,chi_numeric_im,"
                  "measured_re,measured_im,rel_err\n", 0) == 0);
  CHECK(spectrum_json(rows).size() == 3);
  CHECK(!spectrum_text(rows, 12).empty());
}
