#include "bunzeta/cli.hpp"

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>

using namespace bunzeta;
using ordered_json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult invoke(const RunConfig& config) {
  std::ostringstream out, err;
  int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig verify_config(const std::string& group, long q) {
  RunConfig c;
  c.command = Command::verify_tamagawa;
  c.group_spec = group;
  c.curve_spec = "p1";
  c.q = q;
  return c;
}

}  // namespace

TEST_CASE("exit codes: 0 verified, 1 failed, 2 input error") {
  RunResult ok = invoke(verify_config("A1", 2));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("VERIFIED") != std::string::npos);
  CHECK(ok.out.find("1/3") != std::string::npos);

  RunConfig bad_group = verify_config("Z9", 2);
  RunResult parse_error = invoke(bad_group);
  CHECK(parse_error.code == 2);
  CHECK(parse_error.err.find("bad group label") != std::string::npos);

  RunConfig info;
  info.command = Command::info;
  info.group_spec = "Z9";
  CHECK(invoke(info).code == 2);

  RunConfig unsupported = verify_config("B2", 2);
  CHECK(invoke(unsupported).code == 2);  // oracle covers A1..A3 only

  RunConfig genus1 = verify_config("A1", 2);
  genus1.curve_spec = "weil:q=2,g=1,num=1,0,2";
  genus1.q.reset();
  CHECK(invoke(genus1).code == 2);
}

TEST_CASE("parameter range validation") {
  RunConfig c = verify_config("A1", 2);
  c.order = 500;
  CHECK(invoke(c).code == 2);

  c = verify_config("A1", 2);
  c.max_twist = 100;
  CHECK(invoke(c).code == 2);

  c = verify_config("A1", 2);
  c.point_degree_cutoff = 40;
  CHECK(invoke(c).code == 2);

  c = verify_config("A1", 2);
  c.decimal_digits = 0;
  CHECK(invoke(c).code == 2);
}

TEST_CASE("series comparison command") {
  RunConfig c;
  c.command = Command::series_compare;
  c.group_spec = "G2";
  c.curve_spec = "p1";
  c.q = 2;
  c.order = 15;
  RunResult r = invoke(c);
  CHECK(r.code == 0);
  CHECK(r.out.find("identical through t^15") != std::string::npos);
}

TEST_CASE("json reports round-trip byte-identically and deterministically") {
  RunConfig c = verify_config("A2", 2);
  c.format = OutputFormat::json;
  RunResult first = invoke(c);
  RunResult second = invoke(c);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);

  ordered_json j = ordered_json::parse(first.out);
  CHECK(j.dump(2) + "\n" == first.out);

  CHECK(j["group"] == "A2");
  CHECK(j["curve"] == "p1");
  CHECK(j["trace_total"] == "256/63");
  CHECK(j["tamagawa_rhs"] == "1/63");
  CHECK(j["ser_identity_order"] == 20);
  CHECK(j["ser_identity_ok"] == true);
  CHECK(j["euler"]["D"] == 12);
  CHECK(j["euler"].contains("value"));
  CHECK(j["euler"].contains("tail_bound"));
  CHECK(j["mass"]["verdict"] == true);
  CHECK(j["verified"] == true);
}

TEST_CASE("info and trace reports") {
  RunConfig c;
  c.command = Command::info;
  c.group_spec = "E8";
  c.q = 2;
  c.format = OutputFormat::json;
  RunResult r = invoke(c);
  REQUIRE(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["dim"] == 248);
  CHECK(j["weyl_order"] == "696729600");
  CHECK(j["exponents"].size() == 8);

  RunConfig t;
  t.command = Command::trace;
  t.group_spec = "A1";
  t.curve_spec = "elliptic:p=2,a=[0,0,1,0,0]";
  t.format = OutputFormat::json;
  t.decimal_digits = 4;
  RunResult tr = invoke(t);
  REQUIRE(tr.code == 0);
  ordered_json tj = ordered_json::parse(tr.out);
  CHECK(tj["trace_total"] == "3");
  CHECK(tj["trace_total_decimal"] == "3.0000");
  CHECK(tj["tamagawa_rhs"] == "3");
}

TEST_CASE("zeta and poincare reports") {
  RunConfig z;
  z.command = Command::zeta;
  z.curve_spec = "weil:q=2,g=1,num=1,0,2";
  z.point_degree_cutoff = 6;
  z.format = OutputFormat::json;
  RunResult r = invoke(z);
  REQUIRE(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["genus"] == 1);
  CHECK(j["point_counts"][0] == "3");
  CHECK(j["point_counts"][1] == "9");
  CHECK(j["zeta_values"]["2"] == "3");

  RunConfig p;
  p.command = Command::poincare;
  p.group_spec = "A1";
  p.curve_spec = "p1";
  p.q = 2;
  p.cohomology_cutoff = 8;
  p.format = OutputFormat::json;
  RunResult pr = invoke(p);
  REQUIRE(pr.code == 0);
  ordered_json pj = ordered_json::parse(pr.out);
  CHECK(pj["coeffs"] == ordered_json::array({"1", "0", "1", "0", "2", "0", "2", "0", "3"}));

  // conflicting q between flag and inline spec
  RunConfig conflict = z;
  conflict.q = 3;
  CHECK(invoke(conflict).code == 2);
}

TEST_CASE("every json report round-trips byte-identically") {
  for (Command cmd : {Command::info, Command::zeta, Command::trace, Command::series_compare,
                      Command::euler, Command::poincare, Command::verify_tamagawa}) {
    RunConfig c;
    c.command = cmd;
    c.group_spec = "A1";
    c.curve_spec = "p1";
    c.q = 2;
    c.format = OutputFormat::json;
    RunResult r = invoke(c);
    REQUIRE(r.code == 0);
    CHECK(ordered_json::parse(r.out).dump(2) + "\n" == r.out);
    CHECK(invoke(c).out == r.out);
  }
}

TEST_CASE("euler report carries the declared schema") {
  RunConfig c;
  c.command = Command::euler;
  c.group_spec = "A1";
  c.curve_spec = "p1";
  c.q = 2;
  c.point_degree_cutoff = 12;
  c.format = OutputFormat::json;
  RunResult r = invoke(c);
  REQUIRE(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["euler"]["D"] == 12);
  CHECK(j["trace_total"] == "8/3");
  ordered_json reparsed = ordered_json::parse(j.dump(2) + "\n");
  CHECK(reparsed == j);
}
