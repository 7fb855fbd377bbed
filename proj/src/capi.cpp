#include "qso/qso.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "casimir.hpp"
#include "gtrep.hpp"
#include "rewrite.hpp"
#include "textio.hpp"
#include "verify.hpp"

struct qso_element {
  qso::NCPoly poly;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qso_status status_of(const qso::Error& e) {
  switch (e.kind()) {
    case qso::ErrorKind::kInvalidArgument: return QSO_ERROR_INVALID_ARGUMENT;
    case qso::ErrorKind::kParse: return QSO_ERROR_PARSE;
    case qso::ErrorKind::kDivisionByZero: return QSO_ERROR_DIVISION_BY_ZERO;
    case qso::ErrorKind::kPole: return QSO_ERROR_POLE;
    case qso::ErrorKind::kDomain: return QSO_ERROR_DOMAIN;
  }
  return QSO_ERROR_INTERNAL;
}

template <typename F>
qso_status guarded(F&& body) {
  try {
    body();
    return QSO_OK;
  } catch (const qso::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return QSO_ERROR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QSO_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QSO_ERROR_INTERNAL;
  }
}

std::vector<qso::HighestWeight> weights_from_config(const nlohmann::json& cfg, int n) {
  std::vector<qso::HighestWeight> out;
  if (cfg.contains("weights")) {
    for (const auto& w : cfg.at("weights"))
      out.push_back(qso::HighestWeight::parse(n, w.get<std::string>()));
  } else if (cfg.contains("max_entry")) {
    out = qso::dominant_weights(n, qso::HalfInt::parse(cfg.at("max_entry").get<std::string>()));
  } else {
    throw qso::Error(qso::ErrorKind::kInvalidArgument, "config needs weights or max_entry");
  }
  if (out.empty())
    throw qso::Error(qso::ErrorKind::kInvalidArgument, "empty weight list");
  return out;
}

std::vector<double> q0_from_config(const nlohmann::json& cfg) {
  std::vector<double> q;
  if (cfg.contains("q0"))
    for (const auto& v : cfg.at("q0")) q.push_back(v.get<double>());
  else
    q = {1.2, 0.85, 2.0};
  return q;
}

}  // namespace

extern "C" {

const char* qso_version(void) { return "1.0.0"; }

const char* qso_status_name(qso_status status) {
  switch (status) {
    case QSO_OK: return "ok";
    case QSO_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case QSO_ERROR_PARSE: return "parse error";
    case QSO_ERROR_DIVISION_BY_ZERO: return "division by zero";
    case QSO_ERROR_POLE: return "pole";
    case QSO_ERROR_DOMAIN: return "domain error";
    case QSO_ERROR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* qso_last_error(void) { return g_last_error.c_str(); }

void qso_string_free(char* s) { std::free(s); }

void qso_element_free(qso_element* e) { delete e; }

qso_status qso_element_parse(const char* text, qso_element** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return QSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new qso_element{qso::parse_element(text)}; });
}

qso_status qso_element_to_string(const qso_element* e, int style, char** out) {
  if (!e || !out) {
    g_last_error = "null argument";
    return QSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    *out = dup_string(qso::to_string(
        e->poly, style == QSO_STYLE_EXACT_U ? qso::CoeffStyle::kExactU : qso::CoeffStyle::kPrettyQ));
  });
}

qso_status qso_element_normalize(const qso_element* e, int n, qso_element** out) {
  if (!e || !out) {
    g_last_error = "null argument";
    return QSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new qso_element{qso::normalize(e->poly, n)}; });
}

qso_status qso_element_mul(const qso_element* a, const qso_element* b, qso_element** out) {
  if (!a || !b || !out) {
    g_last_error = "null argument";
    return QSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new qso_element{a->poly * b->poly}; });
}

qso_status qso_element_equal(const qso_element* a, const qso_element* b, int* equal) {
  if (!a || !b || !equal) {
    g_last_error = "null argument";
    return QSO_ERROR_INVALID_ARGUMENT;
  }
  *equal = a->poly == b->poly ? 1 : 0;
  return QSO_OK;
}

qso_status qso_casimir_c2r(int n, int r, qso_element** out) {
  if (!out) {
    g_last_error = "null argument";
    return QSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new qso_element{qso::build_C2r(n, r).body}; });
}

qso_status qso_casimir_top(int n, char sign, qso_element** out) {
  if (!out || (sign != '+' && sign != '-')) {
    g_last_error = "sign must be '+' or '-'";
    return QSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new qso_element{qso::build_Ctop(n, sign == '+' ? 1 : -1).body}; });
}

qso_status qso_irreps_json(int n, const char* max_entry, char** out) {
  if (!max_entry || !out) {
    g_last_error = "null argument";
    return QSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& hw : qso::dominant_weights(n, qso::HalfInt::parse(max_entry)))
      arr.push_back({{"weights", hw.str()}, {"dimension", qso::dimension(hw)}});
    *out = dup_string(arr.dump(2));
  });
}

qso_status qso_verify_run(const char* config_json, char** report_json, char** report_text,
                          int* passed) {
  if (!config_json || !passed) {
    g_last_error = "null argument";
    return QSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    nlohmann::json cfg = nlohmann::json::parse(config_json);
    qso::VerificationJob job;
    job.n = cfg.at("n").get<int>();
    job.weights = weights_from_config(cfg, job.n);
    job.q0 = q0_from_config(cfg);
    job.symbolic = cfg.value("symbolic", false);
    job.symbolic_limit = cfg.value("symbolic_limit", qso::kDefaultSymbolicLimit);
    job.run_identities = cfg.value("identities", true);
    job.run_negative_controls = cfg.value("negative_controls", true);
    job.jobs = cfg.value("jobs", 1);
    job.precision = cfg.value("precision", 12);
    qso::VerificationReport report = qso::run_verification(job);
    if (report_json) *report_json = dup_string(report.to_json().dump(2));
    if (report_text) *report_text = dup_string(report.to_text());
    *passed = report.pass ? 1 : 0;
  });
}

qso_status qso_spectrum_run(const char* config_json, char** out) {
  if (!config_json || !out) {
    g_last_error = "null argument";
    return QSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    nlohmann::json cfg = nlohmann::json::parse(config_json);
    int n = cfg.at("n").get<int>();
    auto weights = weights_from_config(cfg, n);
    auto q0 = q0_from_config(cfg);
    int jobs = cfg.value("jobs", 1);
    int precision = cfg.value("precision", 12);
    std::string format = cfg.value("format", "csv");
    auto rows = qso::run_spectrum(n, weights, q0, jobs);
    if (format == "csv") *out = dup_string(qso::spectrum_csv(rows, precision));
    else if (format == "json") *out = dup_string(qso::spectrum_json(rows).dump(2));
    else if (format == "text") *out = dup_string(qso::spectrum_text(rows, precision));
    else throw qso::Error(qso::ErrorKind::kInvalidArgument, "format must be csv, json or text");
  });
}

}  // extern "C"
