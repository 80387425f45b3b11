#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "zetacoef/bigfloat.hpp"
#include "zetacoef/coefficients.hpp"

using namespace zetacoef;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) rows.push_back(json::parse(line));
  }
  return rows;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::filesystem::path temp_csv(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("zetacoef_" + name + ".csv");
}

}  // namespace

TEST_CASE("coeff closed forms") {
  auto r = run({"coeff", "--family", "hurwitz", "--a", "2", "--n", "0"});
  REQUIRE(r.code == cli::kOk);
  auto rows = json_lines(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["value"] == "-1.5");
  CHECK(rows[0]["family"] == "hurwitz");
  CHECK(rows[0]["lambda"].is_null());
  CHECK(rows[0]["digits"] == 50);
  CHECK(rows[0]["max_terms"] == 64);
  CHECK_FALSE(rows[0].contains("oracle_value"));

  r = run({"coeff", "--family", "lerch", "--a", "1", "--lambda", "0.5", "--n", "0"});
  REQUIRE(r.code == cli::kOk);
  rows = json_lines(r.out);
  CHECK(rows[0]["value"] == "2");
  CHECK(rows[0]["lambda"] == "1/2");
}

TEST_CASE("coeff output keys") {
  const auto r = run({"coeff", "--family", "riemann", "--n", "1", "--verify"});
  REQUIRE(r.code == cli::kOk);
  const auto row = json_lines(r.out).at(0);
  std::vector<std::string> keys;
  for (const auto& item : row.items()) keys.push_back(item.key());
  const std::vector<std::string> expected{"family", "n", "a", "lambda", "digits", "max_terms",
                                          "value", "error_estimate", "truncation_index", "terminated_by",
                                          "derivative_value", "oracle_value", "oracle_error_estimate",
                                          "oracle_delta"};
  CHECK(keys == expected);
  CHECK(row["terminated_by"] == "minimal_term");
  const BigFloat value = BigFloat::parse(row["value"].get<std::string>());
  const BigFloat estimate = BigFloat::parse(row["error_estimate"].get<std::string>());
  const BigFloat delta = BigFloat::parse(row["oracle_delta"].get<std::string>());
  CHECK(abs(value + BigFloat(0.9189385332046727)) <= estimate);
  CHECK(abs(delta) <= estimate);
}

TEST_CASE("coeff ranges are emitted in order") {
  const auto r = run({"coeff", "--family", "hurwitz", "--a", "3/2", "--n", "0..4"});
  REQUIRE(r.code == cli::kOk);
  const auto rows = json_lines(r.out);
  REQUIRE(rows.size() == 5);
  for (int n = 0; n <= 4; ++n) CHECK(rows[static_cast<size_t>(n)]["n"] == n);
}

TEST_CASE("printed values round-trip at the requested precision") {
  for (const int digits : {20, 40, 50, 75}) {
    const auto r = run({"coeff", "--family", "hurwitz", "--a", "1/3", "--n", "0..3", "--digits",
                        std::to_string(digits)});
    REQUIRE(r.code == cli::kOk);
    const auto rows = json_lines(r.out);
    for (long n = 0; n <= 3; ++n) {
      CoefficientQuery q;
      q.n = n;
      q.a = RealValue::parse("1/3");
      q.digits = digits;
      const auto direct = hurwitz_coefficient(q);
      PrecisionScope scope(digits);
      const auto& row = rows.at(static_cast<size_t>(n));
      CAPTURE(digits);
      CAPTURE(n);
      CHECK(BigFloat::parse(row["value"].get<std::string>()) == direct.value);
      CHECK(BigFloat::parse(row["error_estimate"].get<std::string>()) == direct.result.error_estimate);
    }
  }
}

TEST_CASE("verify flag") {
  // no oracle on the unit circle
  auto r = run({"coeff", "--family", "lerch", "--a", "1", "--lambda", "-1", "--n", "1", "--verify"});
  CHECK(r.code == cli::kOk);
  const auto row = json_lines(r.out).at(0);
  CHECK(row.contains("oracle_skipped"));
  CHECK_FALSE(row.contains("oracle_delta"));

  // At a = 1/2 the interleaved even/odd Bernoulli components make the
  // minimal-term estimate too optimistic from n = 5 on; the oracle catches it.
  r = run({"coeff", "--family", "hurwitz", "--a", "1/2", "--n", "5", "--verify"});
  CHECK(r.code == cli::kCheckFailed);
  CHECK(json_lines(r.out).size() == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({"coeff", "--family", "lerch", "--a", "1", "--lambda", "1", "--n", "0"}).code == cli::kDomainError);
  const auto lambda_one = run({"coeff", "--family", "lerch", "--a", "1", "--lambda", "1", "--n", "0"});
  CHECK(lambda_one.err.find("use hurwitz family") != std::string::npos);
  CHECK(run({"coeff", "--family", "hurwitz", "--a", "-1", "--n", "0"}).code == cli::kDomainError);
  CHECK(run({"coeff", "--family", "riemann", "--a", "2", "--n", "0"}).code == cli::kDomainError);
  CHECK(run({"coeff", "--family", "bogus", "--n", "0"}).code == cli::kUsage);
  CHECK(run({"coeff", "--family", "hurwitz", "--n", "x"}).code == cli::kUsage);
  CHECK(run({"coeff", "--family", "hurwitz", "--n", "3..1"}).code == cli::kUsage);
  CHECK(run({"coeff", "--family", "hurwitz", "--n", "0", "--a", "1/0"}).code == cli::kUsage);
  CHECK(run({"coeff", "--family", "hurwitz", "--n", "0", "--digits", "5"}).code == cli::kUsage);
  CHECK(run({"coeff", "--family", "hurwitz", "--n", "0", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"coeff", "--nonsense"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  const auto usage = run({"coeff", "--nonsense"});
  CHECK(usage.err.find("--family") != std::string::npos);
}

TEST_CASE("ZETA_DIGITS sets the default precision") {
  ::setenv("ZETA_DIGITS", "30", 1);
  auto r = run({"coeff", "--family", "hurwitz", "--n", "0"});
  CHECK(json_lines(r.out).at(0)["digits"] == 30);
  r = run({"coeff", "--family", "hurwitz", "--n", "0", "--digits", "60"});
  CHECK(json_lines(r.out).at(0)["digits"] == 60);
  ::setenv("ZETA_DIGITS", "many", 1);
  CHECK(run({"coeff", "--family", "hurwitz", "--n", "0"}).code == cli::kUsage);
  ::unsetenv("ZETA_DIGITS");
}

TEST_CASE("table format") {
  const auto r = run({"coeff", "--family", "riemann", "--n", "0..1", "--format", "table"});
  REQUIRE(r.code == cli::kOk);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header.find("terminated_by") != std::string::npos);
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("trace csv for the riemann n = 1 series") {
  const auto path = temp_csv("riemann1");
  const auto r = run({"trace", "--family", "riemann", "--n", "1", "--out", path.string()});
  REQUIRE(r.code == cli::kOk);
  const auto lines = read_lines(path);
  REQUIRE(lines.size() >= 3);
  CHECK(lines.front() == "k,term,partial_sum");
  CHECK(lines.back().rfind("# terminated_by=minimal_term,truncation_index=", 0) == 0);
  CHECK(lines.back().find(",error_estimate=") != std::string::npos);

  BigFloat smallest(1L);
  long arg_min = -1;
  long expected_k = 1;
  for (size_t i = 1; i + 1 < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string k, term, partial;
    std::getline(row, k, ',');
    std::getline(row, term, ',');
    std::getline(row, partial, ',');
    CHECK(std::stol(k) == expected_k++);
    const BigFloat t = abs(BigFloat::parse(term));
    if (!t.is_zero() && t < smallest) {
      smallest = t;
      arg_min = std::stol(k);
    }
  }
  CHECK(arg_min >= 5);
  CHECK(arg_min <= 9);
  std::filesystem::remove(path);
}

TEST_CASE("trace csv for n = 0 has one nonzero row at k = 0") {
  const auto path = temp_csv("hurwitz0");
  REQUIRE(run({"trace", "--family", "hurwitz", "--a", "2", "--n", "0", "--out", path.string()}).code == cli::kOk);
  const auto lines = read_lines(path);
  int nonzero = 0;
  for (size_t i = 1; i + 1 < lines.size(); ++i) {
    const auto first = lines[i].find(',');
    const auto second = lines[i].find(',', first + 1);
    const std::string term = lines[i].substr(first + 1, second - first - 1);
    if (!BigFloat::parse(term).is_zero()) {
      ++nonzero;
      CHECK(lines[i].substr(0, first) == "0");
    }
  }
  CHECK(nonzero == 1);
  std::filesystem::remove(path);
}

TEST_CASE("trace csv telescopes for the lerch series") {
  const auto path = temp_csv("lerch1");
  REQUIRE(run({"trace", "--family", "lerch", "--a", "1", "--lambda", "0.5", "--n", "1", "--out",
               path.string()}).code == cli::kOk);
  const auto lines = read_lines(path);
  BigFloat previous(0L);
  const BigFloat tol = BigFloat::pow10(-45);
  for (size_t i = 1; i + 1 < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string k, term, partial;
    std::getline(row, k, ',');
    std::getline(row, term, ',');
    std::getline(row, partial, ',');
    const BigFloat sum = BigFloat::parse(partial);
    CHECK(abs(previous + BigFloat::parse(term) - sum) <= tol * (abs(sum) + BigFloat(1L)));
    previous = sum;
  }
  std::filesystem::remove(path);
}

TEST_CASE("trace errors") {
  CHECK(run({"trace", "--family", "riemann", "--n", "1", "--out", "/nonexistent-dir/t.csv"}).code ==
        cli::kCannotCreate);
  CHECK(run({"trace", "--family", "riemann", "--n", "1"}).code == cli::kUsage);
  CHECK(run({"trace", "--family", "riemann", "--n", "1..2", "--out", temp_csv("range").string()}).code ==
        cli::kUsage);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"coeff", "--family", "hurwitz", "--a", "5/4", "--n", "0..5", "--verify"};
  CHECK(run(args).out == run(args).out);
  const auto p1 = temp_csv("det1");
  const auto p2 = temp_csv("det2");
  run({"trace", "--family", "hurwitz", "--a", "1/2", "--n", "3", "--out", p1.string()});
  run({"trace", "--family", "hurwitz", "--a", "1/2", "--n", "3", "--out", p2.string()});
  CHECK(read_lines(p1) == read_lines(p2));
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST_CASE("verify suites") {
  for (const char* suite : {"identities", "coefficients", "oracle"}) {
    const auto r = run({"verify", "--suite", suite});
    CAPTURE(suite);
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("checks passed") != std::string::npos);
  }
  CHECK(run({"verify", "--suite", "identities"}).out.find("stirling") != std::string::npos);
  CHECK_THROWS_AS(cli::run_suite("bogus", 50), std::invalid_argument);
}
