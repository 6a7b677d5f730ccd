// Config parsing and report serialization.
//
// Config tests pin the strictness contract: unknown fields are rejected with
// their dotted path, rationals must be strings, and every numeric bound is
// enforced.  Report tests pin the exact CSV layout (it is a machine-readable
// output format) and exercise the certificate verifier against hand-tampered
// certificates: each tamper must be detected by recomputation, not just by
// schema checks.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kmconv/config.hpp>
#include <kmconv/errors.hpp>
#include <kmconv/property.hpp>
#include <kmconv/report.hpp>
#include <kmconv/special.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace kmconv;

namespace {

CartanMatrix make(std::vector<std::vector<long long>> rows) {
  return CartanMatrix::validate(std::move(rows));
}

// Expects parse_job_config to throw ConfigError whose message contains
// `needle`.  Returns the message for further inspection.
std::string expect_config_error(std::string const& text, std::string const& needle) {
  try {
    parse_job_config(text);
  } catch (ConfigError const& e) {
    std::string msg = e.what();
    INFO("message: ", msg);
    CHECK(msg.find(needle) != std::string::npos);
    return msg;
  }
  FAIL("expected ConfigError containing '", needle, "' from: ", text);
  return {};
}

}  // namespace

TEST_CASE("minimal config applies documented defaults") {
  auto cfg = parse_job_config(R"({"cartan": [[2,-3],[-3,2]]})");
  CHECK(cfg.cartan.rank() == 2);
  CHECK(cfg.cartan.a(1, 2) == -3);
  CHECK(!cfg.lambda.has_value());
  CHECK(!cfg.point.has_value());
  CHECK(!cfg.mu.has_value());
  CHECK(cfg.precision_digits == 30);
  CHECK(!cfg.max_length.has_value());
  CHECK(!cfg.big_m.has_value());
  CHECK(!cfg.big_n.has_value());
  CHECK(cfg.caps.tits_cap == 10000);
  CHECK(cfg.caps.string_cap == 64);
}

TEST_CASE("full config round trips every field") {
  auto cfg = parse_job_config(R"({
    "cartan": [[2,-3],[-3,2]],
    "lambda": {"coroot_pairings": ["2", "2"]},
    "point": {"alpha_values": ["1", "3/2"]},
    "mu": {"coroot_pairings": ["1/3", "-4"]},
    "precision_digits": 50,
    "max_length": 12,
    "M": "2.5",
    "N": "10/3",
    "caps": {"tits_cap": 500, "string_cap": 32}
  })");
  REQUIRE(cfg.lambda.has_value());
  CHECK(cfg.lambda->pairings == std::vector<Rat>{Rat(2), Rat(2)});
  REQUIRE(cfg.point.has_value());
  CHECK(cfg.point->values == std::vector<Rat>{Rat(1), Rat(3, 2)});
  REQUIRE(cfg.mu.has_value());
  CHECK(cfg.mu->pairings == std::vector<Rat>{Rat(1, 3), Rat(-4)});
  CHECK(cfg.precision_digits == 50);
  REQUIRE(cfg.max_length.has_value());
  CHECK(*cfg.max_length == 12);
  REQUIRE(cfg.big_m.has_value());
  CHECK(*cfg.big_m == "2.5");
  REQUIRE(cfg.big_n.has_value());
  CHECK(*cfg.big_n == Rat(10, 3));
  CHECK(cfg.caps.tits_cap == 500);
  CHECK(cfg.caps.string_cap == 32);
}

TEST_CASE("unknown fields are rejected with their path") {
  expect_config_error(R"({"cartan": [[2]], "bogus": 1})", "bogus: unknown field");
  expect_config_error(R"({"cartan": [[2]], "caps": {"bogus": 1}})",
                      "caps.bogus: unknown field");
  expect_config_error(R"({"cartan": [[2]], "lambda": {"bogus": ["1"]}})",
                      "lambda.bogus: unknown field");
}

TEST_CASE("rationals must be exact strings") {
  // A JSON number would silently pass through binary floating point, so the
  // parser refuses it even when the value happens to be exact.
  expect_config_error(R"({"cartan": [[2]], "lambda": {"coroot_pairings": [2]}})",
                      "expected a rational as a string");
  expect_config_error(R"({"cartan": [[2]], "N": 3})", "expected a rational as a string");
  // Decimal notation is not a rational literal.
  expect_config_error(R"({"cartan": [[2]], "N": "2.5"})", "N");
  expect_config_error(
      R"({"cartan": [[2]], "point": {"alpha_values": ["1.5"]}})",
      "point.alpha_values[0]");
}

TEST_CASE("vector fields must match the rank") {
  expect_config_error(
      R"({"cartan": [[2,-3],[-3,2]], "lambda": {"coroot_pairings": ["1"]}})", "lambda");
  expect_config_error(
      R"({"cartan": [[2,-3],[-3,2]], "point": {"alpha_values": ["1","2","3"]}})",
      "point");
}

TEST_CASE("numeric bounds are enforced") {
  expect_config_error(R"({"cartan": [[2]], "precision_digits": 5})", "precision_digits");
  expect_config_error(R"({"cartan": [[2]], "precision_digits": 200000})",
                      "precision_digits");
  expect_config_error(R"({"cartan": [[2]], "precision_digits": 30.5})",
                      "precision_digits");
  expect_config_error(R"({"cartan": [[2]], "max_length": -1})", "max_length");
  expect_config_error(R"({"cartan": [[2]], "caps": {"tits_cap": 0}})", "caps.tits_cap");
  expect_config_error(R"({"cartan": [[2]], "caps": {"string_cap": -3}})",
                      "caps.string_cap");
}

TEST_CASE("M must be a decimal literal in a string") {
  expect_config_error(R"({"cartan": [[2]], "M": 2.5})", "M");
  expect_config_error(R"({"cartan": [[2]], "M": "two"})", "M");
  auto cfg = parse_job_config(R"({"cartan": [[2]], "M": "0.125"})");
  REQUIRE(cfg.big_m.has_value());
  CHECK(*cfg.big_m == "0.125");
}

TEST_CASE("matrix validation failures carry the cartan path and error name") {
  auto msg = expect_config_error(R"({"cartan": [[2,-1],[0,2]]})", "cartan");
  CHECK(msg.find("InvalidGCM") != std::string::npos);
  msg = expect_config_error(
      R"({"cartan": [[2,-1,-2],[-2,2,-1],[-1,-1,2]]})", "cartan");
  CHECK(msg.find("NotSymmetrizable") != std::string::npos);
  msg = expect_config_error(R"({"cartan": [[2,-2],[-2,2]]})", "cartan");
  CHECK(msg.find("SingularMatrix") != std::string::npos);
}

TEST_CASE("malformed documents are rejected") {
  expect_config_error(R"({"lambda": {"coroot_pairings": ["1"]}})", "cartan");
  expect_config_error("[1,2,3]", "object");
  expect_config_error("{not json", "invalid JSON");
}

TEST_CASE("load_job_config reads a file and reports missing ones") {
  std::string path = "kmconv_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"cartan": [[2,-1],[-1,2]], "precision_digits": 40})";
  }
  auto cfg = load_job_config(path);
  CHECK(cfg.cartan.rank() == 2);
  CHECK(cfg.precision_digits == 40);
  std::remove(path.c_str());

  try {
    load_job_config("no_such_file_7f3a.json");
    FAIL("expected ConfigError for a missing file");
  } catch (ConfigError const& e) {
    CHECK(std::string(e.what()).find("no_such_file_7f3a.json") != std::string::npos);
  }
}

TEST_CASE("json helpers serialize the documented shapes") {
  auto cm = make({{2, -3}, {-3, 2}});
  CHECK(matrix_json(cm).dump() == "[[2,-3],[-3,2]]");
  CHECK(word_json({1, 2, 1}).dump() == "[1,2,1]");
  CHECK(coords_json(simple_root(cm, 1)).dump() == "[1,0]");
  CHECK(rationals_json({Rat(1, 2), Rat(3)}).dump() == R"(["1/2","3"])");
}

TEST_CASE("shell table CSV layout is pinned") {
  auto ctx = PrecisionContext::make(30);
  PrecisionScope scope(ctx);

  ShellTable t;
  t.max_length = 1;
  ShellRow r0;
  r0.length = 0;
  r0.count = 1;
  r0.abs_sum = Real("0.0024786");
  r0.partial_sum = Real("0.0024786");
  ShellRow r1;
  r1.length = 1;
  r1.count = 2;
  r1.abs_sum = Real("0.001");
  r1.partial_sum = Real("0.0034786");
  r1.ratio = Real("0.403");
  t.rows = {r0, r1};

  std::ostringstream out;
  write_shell_table_csv(out, t, {{"mode", "probe"}, {"precision_digits", "30"}}, 10);
  CHECK(out.str() ==
        "# mode: probe\n"
        "# precision_digits: 30\n"
        "length,count,shell_abs_sum,partial_sum,ratio\n"
        "0,1,2.478600000e-03,2.478600000e-03,\n"
        "1,2,1.000000000e-03,3.478600000e-03,4.030000000e-01\n");
}

TEST_CASE("failure certificates round trip through the verifier") {
  auto cm = make({{2, -1}, {-5, 2}});
  auto j = property_report_json(cm, check_property(cm, 5));

  CHECK(j["status"] == "fails_at");
  CHECK(j["length"] == 3);
  CHECK(j["elements_checked"] == 7);
  CHECK(j["word"].dump() == "[2,1,2]");
  REQUIRE(j["violations"].size() == 1);
  auto const& row = j["violations"][0];
  CHECK(row["decomposition"]["v_word"].dump() == "[2,1]");
  CHECK(row["decomposition"]["beta"] == 2);
  CHECK(row["alpha"].dump() == "[1,1]");
  CHECK(row["alpha_minus_beta"].dump() == "[1,0]");

  auto verdict = verify_certificate(j.dump());
  CHECK(verdict.ok);
  CHECK(verdict.problems.empty());
  auto vj = certificate_verdict_json(verdict);
  CHECK(vj["verified"] == true);
  CHECK(vj["problems"].dump() == "[]");
}

TEST_CASE("holds certificates round trip and are recomputed") {
  auto cm = make({{2, -3}, {-3, 2}});
  auto j = property_report_json(cm, check_property(cm, 4));
  CHECK(j["status"] == "holds_up_to");
  CHECK(j["length"] == 4);
  CHECK(j["elements_checked"] == 9);
  CHECK(!j.contains("word"));
  CHECK(!j.contains("violations"));
  CHECK(verify_certificate(j.dump()).ok);

  // A holds claim over a system where the property actually fails must be
  // caught by recomputation.
  auto t = j;
  t["matrix"] = OrderedJson::array({OrderedJson::array({2, -1}),
                                    OrderedJson::array({-1, 2})});
  auto v = verify_certificate(t.dump());
  CHECK(!v.ok);
  REQUIRE(!v.problems.empty());
  CHECK(v.problems[0].find("recomputation finds a failure at length 3") !=
        std::string::npos);

  // The element count is part of the holds claim.
  t = j;
  t["elements_checked"] = 99;
  v = verify_certificate(t.dump());
  CHECK(!v.ok);
  CHECK(v.problems[0].find("element count differs") != std::string::npos);
}

TEST_CASE("tampered failure certificates are rejected") {
  auto cm = make({{2, -1}, {-5, 2}});
  auto j = property_report_json(cm, check_property(cm, 5));

  SUBCASE("altered ambient root") {
    auto t = j;
    t["violations"][0]["alpha"] = OrderedJson::array({2, 1});
    auto v = verify_certificate(t.dump());
    CHECK(!v.ok);
    bool arithmetic = false;
    for (auto const& p : v.problems) {
      arithmetic |= p.find("alpha_minus_beta is not alpha - beta") != std::string::npos;
    }
    CHECK(arithmetic);
  }

  SUBCASE("altered failing word") {
    // [1,2,1] is genuinely admissible in this system, so the verifier must
    // notice both that the rows do not match and that recomputation clears it.
    auto t = j;
    t["word"] = OrderedJson::array({1, 2, 1});
    auto v = verify_certificate(t.dump());
    CHECK(!v.ok);
    bool cleared = false;
    for (auto const& p : v.problems) {
      cleared |= p.find("recomputation finds the element admissible") != std::string::npos;
    }
    CHECK(cleared);
  }

  SUBCASE("dropped violation rows") {
    auto t = j;
    t["violations"] = OrderedJson::array();
    auto v = verify_certificate(t.dump());
    CHECK(!v.ok);
    bool missing = false;
    for (auto const& p : v.problems) {
      missing |= p.find("has no violation row") != std::string::npos;
    }
    CHECK(missing);
  }

  SUBCASE("inconsistent length field") {
    auto t = j;
    t["length"] = 2;
    auto v = verify_certificate(t.dump());
    CHECK(!v.ok);
    bool mismatch = false;
    for (auto const& p : v.problems) {
      mismatch |= p.find("length field does not match") != std::string::npos;
    }
    CHECK(mismatch);
  }

  SUBCASE("decomposition does not multiply back") {
    auto t = j;
    t["violations"][0]["decomposition"]["beta"] = 1;
    auto v = verify_certificate(t.dump());
    CHECK(!v.ok);
    bool recover = false;
    for (auto const& p : v.problems) {
      recover |= p.find("does not recover the failing element") != std::string::npos;
    }
    CHECK(recover);
  }

  SUBCASE("status flip demands the witness fields") {
    auto cm2 = make({{2, -3}, {-3, 2}});
    auto h = property_report_json(cm2, check_property(cm2, 4));
    h["status"] = "fails_at";
    auto v = verify_certificate(h.dump());
    CHECK(!v.ok);
    CHECK(v.problems[0].find("must carry word and violations") != std::string::npos);
  }
}

TEST_CASE("structurally broken certificates are rejected without crashing") {
  auto v = verify_certificate("not json at all");
  CHECK(!v.ok);
  CHECK(v.problems[0].find("invalid JSON") != std::string::npos);

  v = verify_certificate(R"({"matrix": [[2]]})");
  CHECK(!v.ok);
  CHECK(v.problems[0].find("must carry matrix, status and length") != std::string::npos);

  v = verify_certificate(R"({"matrix": [[2,0],[0,3]], "status": "holds_up_to", "length": 1})");
  CHECK(!v.ok);
  CHECK(v.problems[0].find("matrix does not validate") != std::string::npos);

  v = verify_certificate(R"({"matrix": [[2]], "status": "mystery", "length": 1})");
  CHECK(!v.ok);
  CHECK(v.problems[0].find("unknown status 'mystery'") != std::string::npos);
}
