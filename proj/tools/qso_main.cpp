// Command-line front end for libqso; talks to the library exclusively
// through the C API in qso/qso.h.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qso/qso.h"

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { qso_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct OwnedElement {
  qso_element* ptr = nullptr;
  ~OwnedElement() { qso_element_free(ptr); }
};

int exit_code_for(qso_status st) {
  switch (st) {
    case QSO_OK: return 0;
    case QSO_ERROR_INTERNAL: return kExitChecksFailed;
    default: return kExitUsage;  // bad input of some kind
  }
}

int fail(qso_status st) {
  std::cerr << "error: " << qso_status_name(st) << ": " << qso_last_error() << "\n";
  return exit_code_for(st);
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return true;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output file " << path << "\n";
    return false;
  }
  out << content;
  return true;
}

int default_precision() {
  if (const char* env = std::getenv("QSO_PRECISION")) {
    int v = std::atoi(env);
    if (v >= 1 && v <= 17) return v;
  }
  return 12;
}

nlohmann::json base_config(int n, const std::vector<std::string>& weights,
                           const std::string& max_entry, const std::vector<double>& qs,
                           int jobs, int precision) {
  nlohmann::json cfg;
  cfg["n"] = n;
  if (!weights.empty()) cfg["weights"] = weights;
  else cfg["max_entry"] = max_entry;
  if (!qs.empty()) cfg["q0"] = qs;
  cfg["jobs"] = jobs;
  cfg["precision"] = precision;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir elements of the q-deformed orthogonal algebras U'_q(so_n):\n"
               "construction, PBW normal forms, Gel'fand-Tsetlin representations and\n"
               "eigenvalue verification."};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  int precision = default_precision();
  app.add_option("--precision", precision,
                 "Digits printed for numeric values (env QSO_PRECISION overrides the default)")
      ->capture_default_str();

  // ---- irreps ----
  auto* irreps = app.add_subcommand("irreps", "List dominant weights up to a bound, with dimensions");
  int ir_n = 3;
  std::string ir_max = "1";
  std::string ir_format = "text";
  std::string ir_output;
  irreps->add_option("--n", ir_n, "Algebra rank parameter n of so_n")->required();
  irreps->add_option("--max", ir_max, "Largest weight entry (exact rational, e.g. 2 or 3/2)")
      ->capture_default_str();
  irreps->add_option("--format", ir_format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  irreps->add_option("--output", ir_output, "Output file (default stdout)");

  // ---- casimir ----
  auto* casimir = app.add_subcommand("casimir", "Print a Casimir element in element syntax");
  int ca_n = 3;
  int ca_order = 0;
  std::string ca_top;
  bool ca_normalized = false;
  std::string ca_style = "q";
  std::string ca_output;
  casimir->add_option("--n", ca_n, "Algebra rank parameter n")->required();
  casimir->add_option("--order", ca_order, "Even order 2r of C^(2r)_n");
  casimir->add_option("--top", ca_top, "Top Casimir sign (+ or -) for even n")
      ->check(CLI::IsMember({"+", "-"}));
  casimir->add_flag("--normalized", ca_normalized, "Also print the PBW normal form");
  casimir->add_option("--style", ca_style, "Coefficient style: q (pretty) or u (exact fraction)")
      ->check(CLI::IsMember({"q", "u"}))
      ->capture_default_str();
  casimir->add_option("--output", ca_output, "Output file (default stdout)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "Run the relation/scalarness/eigenvalue battery");
  int ve_n = 3;
  std::vector<std::string> ve_weights;
  std::string ve_max = "2";
  std::vector<double> ve_q;
  bool ve_symbolic = false;
  int ve_symbolic_limit = 4;
  bool ve_no_identities = false, ve_no_controls = false;
  int ve_jobs = 1;
  std::string ve_format = "text";
  std::string ve_output;
  verify->add_option("--n", ve_n, "Algebra rank parameter n")->required();
  verify->add_option("--weights", ve_weights,
                     "Weight to check, comma-separated exact rationals (repeatable)");
  verify->add_option("--max", ve_max,
                     "When no --weights given: check all dominant weights with entries <= max")
      ->capture_default_str();
  verify->add_option("--q", ve_q, "q0 values (default 1.2 0.85 2.0)");
  verify->add_flag("--symbolic", ve_symbolic, "Also run exact symbolic centrality checks");
  verify->add_option("--symbolic-limit", ve_symbolic_limit,
                     "Skip symbolic centrality above this n")
      ->capture_default_str();
  verify->add_flag("--no-identities", ve_no_identities, "Skip the printed-form identity checks");
  verify->add_flag("--no-negative-controls", ve_no_controls, "Skip the negative controls");
  verify->add_option("--jobs", ve_jobs, "Worker threads (output is identical for any value)")
      ->capture_default_str();
  verify->add_option("--format", ve_format, "Stdout format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_option("--output", ve_output, "Write the JSON report to this file");

  // ---- spectrum ----
  auto* spectrum = app.add_subcommand("spectrum", "Casimir eigenvalues over a q grid");
  int sp_n = 3;
  std::vector<std::string> sp_weights;
  std::string sp_max;
  std::vector<double> sp_q;
  std::string sp_format = "csv";
  int sp_jobs = 1;
  std::string sp_output;
  spectrum->add_option("--n", sp_n, "Algebra rank parameter n")->required();
  spectrum->add_option("--weights", sp_weights, "Weight rows (repeatable)");
  spectrum->add_option("--max", sp_max, "Alternative: all dominant weights with entries <= max");
  spectrum->add_option("--q", sp_q, "q0 grid (default 1.2 0.85 2.0)");
  spectrum->add_option("--format", sp_format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  spectrum->add_option("--jobs", sp_jobs, "Worker threads")->capture_default_str();
  spectrum->add_option("--output", sp_output, "Output file (default stdout)");

  // ---- normalize ----
  auto* normalize = app.add_subcommand("normalize", "Read element text, print its PBW normal form");
  int no_n = 0;
  std::string no_element;
  std::string no_style = "q";
  normalize->add_option("--n", no_n, "Algebra rank parameter n")->required();
  normalize->add_option("element", no_element, "Element text (reads stdin when omitted)");
  normalize->add_option("--style", no_style, "Coefficient style: q or u")
      ->check(CLI::IsMember({"q", "u"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (irreps->parsed()) {
    OwnedString json;
    qso_status st = qso_irreps_json(ir_n, ir_max.c_str(), &json.ptr);
    if (st != QSO_OK) return fail(st);
    std::string out;
    if (ir_format == "json") {
      out = json.str();
    } else {
      auto arr = nlohmann::json::parse(json.str());
      std::ostringstream os;
      if (ir_format == "csv") {
        os << "n,weights,dimension\n";
        for (const auto& row : arr)
          os << ir_n << ",\"" << row["weights"].get<std::string>() << "\","
             << row["dimension"].get<long long>() << "\n";
      } else {
        for (const auto& row : arr)
          os << "(" << row["weights"].get<std::string>() << ")  dim "
             << row["dimension"].get<long long>() << "\n";
      }
      out = os.str();
    }
    return write_output(ir_output, out) ? 0 : kExitChecksFailed;
  }

  if (casimir->parsed()) {
    if ((ca_order == 0) == ca_top.empty()) {
      std::cerr << "error: choose exactly one of --order or --top\n";
      return kExitUsage;
    }
    OwnedElement el;
    qso_status st;
    if (!ca_top.empty()) {
      st = qso_casimir_top(ca_n, ca_top[0], &el.ptr);
    } else {
      if (ca_order % 2 != 0) {
        std::cerr << "error: --order must be even (it is 2r)\n";
        return kExitUsage;
      }
      st = qso_casimir_c2r(ca_n, ca_order / 2, &el.ptr);
    }
    if (st != QSO_OK) return fail(st);
    int style = ca_style == "u" ? QSO_STYLE_EXACT_U : QSO_STYLE_PRETTY_Q;
    OwnedString text;
    st = qso_element_to_string(el.ptr, style, &text.ptr);
    if (st != QSO_OK) return fail(st);
    std::string out = text.str() + "\n";
    if (ca_normalized) {
      OwnedElement nf;
      st = qso_element_normalize(el.ptr, ca_n, &nf.ptr);
      if (st != QSO_OK) return fail(st);
      OwnedString nft;
      st = qso_element_to_string(nf.ptr, style, &nft.ptr);
      if (st != QSO_OK) return fail(st);
      out += "normal form:\n" + nft.str() + "\n";
    }
    return write_output(ca_output, out) ? 0 : kExitChecksFailed;
  }

  if (verify->parsed()) {
    nlohmann::json cfg = base_config(ve_n, ve_weights, ve_max, ve_q, ve_jobs, precision);
    cfg["symbolic"] = ve_symbolic;
    cfg["symbolic_limit"] = ve_symbolic_limit;
    cfg["identities"] = !ve_no_identities;
    cfg["negative_controls"] = !ve_no_controls;
    OwnedString json, text;
    int passed = 0;
    qso_status st = qso_verify_run(cfg.dump().c_str(), &json.ptr, &text.ptr, &passed);
    if (st != QSO_OK) return fail(st);
    std::cout << (ve_format == "json" ? json.str() : text.str());
    if (!ve_output.empty() && !write_output(ve_output, json.str())) return kExitChecksFailed;
    return passed ? 0 : kExitChecksFailed;
  }

  if (spectrum->parsed()) {
    if (sp_weights.empty() && sp_max.empty()) {
      std::cerr << "error: spectrum needs --weights or --max\n";
      return kExitUsage;
    }
    nlohmann::json cfg = base_config(sp_n, sp_weights, sp_max, sp_q, sp_jobs, precision);
    cfg["format"] = sp_format;
    OwnedString out;
    qso_status st = qso_spectrum_run(cfg.dump().c_str(), &out.ptr);
    if (st != QSO_OK) return fail(st);
    return write_output(sp_output, out.str()) ? 0 : kExitChecksFailed;
  }

  if (normalize->parsed()) {
    std::string text = no_element;
    if (text.empty()) {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    }
    OwnedElement el, nf;
    qso_status st = qso_element_parse(text.c_str(), &el.ptr);
    if (st != QSO_OK) return fail(st);
    st = qso_element_normalize(el.ptr, no_n, &nf.ptr);
    if (st != QSO_OK) return fail(st);
    OwnedString rendered;
    st = qso_element_to_string(nf.ptr, no_style == "u" ? QSO_STYLE_EXACT_U : QSO_STYLE_PRETTY_Q,
                               &rendered.ptr);
    if (st != QSO_OK) return fail(st);
    std::cout << rendered.str() << "\n";
    return 0;
  }

  return kExitUsage;
}
