#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetacoef/coefficients.hpp"
#include "zetacoef/errors.hpp"
#include "zetacoef/oracle.hpp"

namespace zetacoef::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoeffArgs {
  std::string family;
  std::string n = "0";
  std::string a = "1";
  std::string lambda;
  int digits = kDefaultDigits;
  int max_terms = kDefaultMaxTerms;
  bool verify = false;
  std::string format = "json";
  std::string out;
};

int default_digits() {
  if (const char* env = std::getenv("ZETA_DIGITS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("ZETA_DIGITS is not an integer: '") + env + "'");
    }
  }
  return kDefaultDigits;
}

std::pair<long, long> parse_range(const std::string& text) {
  static const std::regex single(R"(^\d+$)");
  static const std::regex range(R"(^(\d+)\.\.(\d+)$)");
  std::smatch m;
  if (std::regex_match(text, m, single)) {
    const long n = std::stol(text);
    return {n, n};
  }
  if (std::regex_match(text, m, range)) {
    const long lo = std::stol(m[1].str());
    const long hi = std::stol(m[2].str());
    if (lo > hi) throw UsageError("empty range --n " + text);
    return {lo, hi};
  }
  throw UsageError("--n expects k or lo..hi, got '" + text + "'");
}

RealValue parse_real(const std::string& flag, const std::string& text) {
  try {
    return RealValue::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

CoefficientQuery base_query(const CoeffArgs& args) {
  CoefficientQuery q;
  try {
    q.family = parse_family(args.family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  q.a = parse_real("--a", args.a);
  if (!args.lambda.empty()) {
    if (q.family != Family::lerch) throw UsageError("--lambda applies only to --family lerch");
    q.lambda = parse_real("--lambda", args.lambda);
  } else if (q.family == Family::lerch) {
    throw UsageError("--family lerch requires --lambda");
  }
  if (args.digits < kMinDigits) throw UsageError("--digits must be at least " + std::to_string(kMinDigits));
  if (args.max_terms < 2) throw UsageError("--max-terms must be at least 2");
  q.digits = args.digits;
  q.max_terms = args.max_terms;
  return q;
}

struct OracleColumn {
  std::optional<OracleCoefficient> value;
  std::string skipped;
};

std::vector<OracleColumn> oracle_values(const CoefficientQuery& q, long lo, long hi) {
  std::vector<OracleColumn> out(hi - lo + 1);
  PrecisionScope scope(q.digits + 10);
  std::optional<BigFloat> lambda;
  if (q.family == Family::lerch) {
    lambda = q.lambda->to_bigfloat();
    if (!(abs(*lambda) < BigFloat(1L))) {
      for (auto& col : out) col.skipped = "oracle needs |lambda| < 1";
      return out;
    }
  }
  const auto cfg = OracleConfig::for_digits(q.digits);
  const auto coeffs = taylor_coefficients_contour(q.family, hi, q.a.to_bigfloat(),
                                                  lambda ? &*lambda : nullptr, cfg);
  for (long n = lo; n <= hi; ++n) out[n - lo].value = coeffs[n];
  return out;
}

Json record(const CoefficientResult& r, const OracleColumn* oracle, bool* mismatch) {
  const CoefficientQuery& q = r.query;
  const int d = roundtrip_digits(digits_to_bits(q.digits));
  Json j;
  j["family"] = std::string(to_string(q.family));
  j["n"] = q.n;
  j["a"] = q.a.str();
  j["lambda"] = q.lambda ? Json(q.lambda->str()) : Json(nullptr);
  j["digits"] = q.digits;
  j["max_terms"] = q.max_terms;
  j["value"] = r.value.str(d);
  j["error_estimate"] = r.result.error_estimate.str(d);
  j["truncation_index"] = r.result.truncation_index;
  j["terminated_by"] = std::string(to_string(r.result.terminated_by));
  j["derivative_value"] = r.derivative_value.str(d);
  if (oracle != nullptr) {
    if (oracle->value) {
      PrecisionScope scope(d + 10);
      const BigFloat delta = r.value - oracle->value->value;
      j["oracle_value"] = oracle->value->value.str(d);
      j["oracle_error_estimate"] = oracle->value->error_estimate.str(3);
      j["oracle_delta"] = delta.str(3);
      if (abs(delta) > r.result.error_estimate + oracle->value->error_estimate) *mismatch = true;
    } else {
      j["oracle_skipped"] = oracle->skipped;
    }
  }
  return j;
}

void print_table(std::ostream& out, const std::vector<CoefficientResult>& results,
                 const std::vector<Json>& rows) {
  const bool with_oracle = !rows.empty() && rows.front().contains("oracle_delta");
  out << std::left << std::setw(4) << "n" << "  " << std::setw(10) << "error_est" << "  " << std::setw(5)
      << "k*" << "  " << std::setw(13) << "terminated_by" << "  ";
  if (with_oracle) out << std::setw(12) << "oracle_delta" << "  ";
  out << "value\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out << std::setw(4) << r.query.n << "  " << std::setw(10) << r.result.error_estimate.str(3) << "  "
        << std::setw(5) << r.result.truncation_index << "  " << std::setw(13)
        << to_string(r.result.terminated_by) << "  ";
    if (with_oracle) out << std::setw(12) << rows[i]["oracle_delta"].get<std::string>() << "  ";
    out << r.value.str(roundtrip_digits(digits_to_bits(r.query.digits))) << '\n';
  }
}

int cmd_coeff(const CoeffArgs& args, std::ostream& out) {
  const CoefficientQuery base = base_query(args);
  const auto [lo, hi] = parse_range(args.n);
  if (args.format != "json" && args.format != "table") throw UsageError("--format must be json or table");

  std::vector<std::future<CoefficientResult>> pending;
  for (long n = lo; n <= hi; ++n) {
    CoefficientQuery q = base;
    q.n = n;
    pending.push_back(std::async(std::launch::async, [q] { return compute_coefficient(q); }));
  }
  std::vector<CoefficientResult> results;
  for (auto& f : pending) results.push_back(f.get());

  std::vector<OracleColumn> oracle;
  if (args.verify) oracle = oracle_values(base, lo, hi);

  bool mismatch = false;
  std::vector<Json> rows;
  for (std::size_t i = 0; i < results.size(); ++i) {
    rows.push_back(record(results[i], args.verify ? &oracle[i] : nullptr, &mismatch));
  }
  if (args.format == "table") {
    print_table(out, results, rows);
  } else {
    for (const auto& j : rows) out << j.dump() << '\n';
  }
  return mismatch ? kCheckFailed : kOk;
}

int cmd_trace(const CoeffArgs& args, std::ostream& out, std::ostream& err) {
  CoefficientQuery q = base_query(args);
  const auto [lo, hi] = parse_range(args.n);
  if (lo != hi) throw UsageError("trace takes a single --n");
  q.n = lo;
  q.trace = true;
  const CoefficientResult r = compute_coefficient(q);

  std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write '" << args.out << "'\n";
    return kCannotCreate;
  }
  const int d = roundtrip_digits(digits_to_bits(q.digits));
  file << "k,term,partial_sum\n";
  for (const TraceRecord& row : *r.result.trace) {
    file << row.k << ',' << row.term.str(d) << ',' << row.partial_sum.str(d) << '\n';
  }
  file << "# terminated_by=" << to_string(r.result.terminated_by)
       << ",truncation_index=" << r.result.truncation_index
       << ",error_estimate=" << r.result.error_estimate.str(d) << '\n';
  file.close();
  if (!file) {
    err << "error: failed writing '" << args.out << "'\n";
    return kCannotCreate;
  }
  out << "wrote " << r.result.trace->size() << " rows to " << args.out << '\n';
  return kOk;
}

int cmd_verify(const std::string& suite, int digits, std::ostream& out) {
  if (digits < kMinDigits) throw UsageError("--digits must be at least " + std::to_string(kMinDigits));
  std::vector<CheckOutcome> outcomes;
  try {
    outcomes = run_suite(suite, digits);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::size_t passed = 0;
  for (const auto& c : outcomes) {
    out << (c.pass ? "PASS" : "FAIL") << ' ' << c.suite << '/' << c.name << ' ' << c.detail << '\n';
    if (c.pass) ++passed;
  }
  out << passed << '/' << outcomes.size() << " checks passed\n";
  return passed == outcomes.size() ? kOk : kCheckFailed;
}

void add_coeff_flags(CLI::App& cmd, CoeffArgs& args) {
  cmd.add_option("--family", args.family, "hurwitz | riemann | lerch")->required();
  cmd.add_option("--n", args.n, "coefficient index k or inclusive range lo..hi")->required();
  cmd.add_option("--a", args.a, "shift a > 0 (decimal or p/q)");
  cmd.add_option("--lambda", args.lambda, "Lerch lambda, |lambda| <= 1, lambda != 1");
  cmd.add_option("--digits", args.digits, "working precision in decimal digits");
  cmd.add_option("--max-terms", args.max_terms, "series term budget");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Taylor coefficients of the Hurwitz, Riemann and Lerch zeta functions at s=0",
               "zeta_coeffs"};
  app.require_subcommand(1);

  CoeffArgs coeff;
  CoeffArgs trace;
  std::string suite = "all";
  int verify_digits = kDefaultDigits;
  try {
    coeff.digits = trace.digits = verify_digits = default_digits();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  auto* coeff_cmd = app.add_subcommand("coeff", "compute coefficients");
  add_coeff_flags(*coeff_cmd, coeff);
  coeff_cmd->add_flag("--verify", coeff.verify, "compare against the contour-integral oracle");
  coeff_cmd->add_option("--format", coeff.format, "json | table");

  auto* trace_cmd = app.add_subcommand("trace", "export the partial sums of one series as CSV");
  add_coeff_flags(*trace_cmd, trace);
  trace_cmd->add_option("--out", trace.out, "CSV path")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suite", suite, "identities | coefficients | oracle | all");
  verify_cmd->add_option("--digits", verify_digits, "working precision in decimal digits");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (coeff_cmd->parsed()) return cmd_coeff(coeff, out);
    if (trace_cmd->parsed()) return cmd_trace(trace, out, err);
    return cmd_verify(suite, verify_digits, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace zetacoef::cli
