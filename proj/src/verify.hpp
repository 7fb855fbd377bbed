#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "casimir.hpp"
#include "chi.hpp"
#include "gtrep.hpp"
#include "rewrite.hpp"

namespace qso {

// Pinned tolerances. Relation residuals: double precision on dense products
// of battery-sized matrices leaves two orders of headroom below 1e-9.
inline constexpr double kRelationTol = 1e-9;
inline constexpr double kScalarnessTol = 1e-9;
inline constexpr double kEigenvalueTol = 1e-8;
inline constexpr double kNegativeControlMin = 1e-3;
inline constexpr int kDefaultSymbolicLimit = 4;

struct RelationResidual {
  std::string relation;
  double residual = 0.0;  // relative to the operand scale
  bool pass = false;
};

struct ScalarnessRecord {
  std::string casimir;
  double off_diag = 0.0;  // relative to |mean| (absolute when mean ~ 0)
  double spread = 0.0;
  std::complex<double> mean_diag;
  bool pass = false;
};

struct EigenvalueRecord {
  std::string casimir;
  std::string chi_text;  // exact chi
  std::complex<double> chi_value;
  std::complex<double> measured;
  double rel_err = 0.0;
  bool pass = false;
};

struct CentralityRecord {
  std::string casimir;
  std::string status;  // "central", "not-central", "skipped"
  bool counts_as_failure() const { return status == "not-central"; }
};

struct IdentityRecord {
  std::string name;
  bool pass = false;
};

struct NegativeControlRecord {
  std::string name;
  double observed = 0.0;
  bool behaved = false;  // true when the control failed as it must
};

/// Residuals of every trilinear relation, every distant commutation and both
/// bilinear relation sets under the representation.
std::vector<RelationResidual> check_relations(const Representation& rep);
ScalarnessRecord check_scalarness(const Representation& rep, const CasimirElement& c);
EigenvalueRecord check_eigenvalue(const Representation& rep, const CasimirElement& c);
/// Exact PBW check that the commutator with every basic generator
/// normalizes to zero; "skipped" above the symbolic limit.
CentralityRecord check_symbolic_centrality(int n, const CasimirElement& c, int limit);
/// Exact normal-form identities between the printed Casimir expressions.
std::vector<IdentityRecord> check_identities(int n);

struct VerificationJob {
  int n = 3;
  std::vector<HighestWeight> weights;
  std::vector<double> q0;
  bool symbolic = false;
  int symbolic_limit = kDefaultSymbolicLimit;
  bool run_identities = true;
  bool run_negative_controls = true;
  int jobs = 1;
  int precision = 12;
};

struct VerificationReport {
  VerificationJob job;
  struct RelationEntry { std::string weight; double q0; RelationResidual r; };
  struct ScalarnessEntry { std::string weight; double q0; ScalarnessRecord r; };
  struct EigenvalueEntry { std::string weight; double q0; EigenvalueRecord r; };
  std::vector<RelationEntry> relations;
  std::vector<ScalarnessEntry> scalarness;
  std::vector<EigenvalueEntry> eigenvalues;
  std::vector<IdentityRecord> identities;
  std::vector<CentralityRecord> centrality;
  std::vector<NegativeControlRecord> negative_controls;
  bool pass = false;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

VerificationReport run_verification(const VerificationJob& job);

struct SpectrumRow {
  int n = 0;
  std::string weight;
  std::string casimir;
  double q0 = 0.0;
  std::string chi_exact;
  std::complex<double> chi_numeric;
  std::complex<double> measured;
  double rel_err = 0.0;
};

/// chi for every Casimir of each weight over a q grid, with the measured
/// mean diagonal alongside.
std::vector<SpectrumRow> run_spectrum(int n, const std::vector<HighestWeight>& weights,
                                      const std::vector<double>& q0s, int jobs = 1);

std::string spectrum_csv(const std::vector<SpectrumRow>& rows, int precision);
nlohmann::ordered_json spectrum_json(const std::vector<SpectrumRow>& rows);
std::string spectrum_text(const std::vector<SpectrumRow>& rows, int precision);

}  // namespace qso
