#include "oddzeta/certificate.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace oddzeta;

namespace {

RunConfig small(Mode m) {
  RunConfig c;
  c.mode = m;
  c.s = 7;
  c.n_min = 1;
  c.n_max = 4;
  c.precision = 20;
  c.samples = 200;
  return c;
}

int count(const Report& r, Verdict v) {
  return static_cast<int>(
      std::count_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.verdict == v; }));
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.s = 8;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = RunConfig{};
  c.n_min = 5;
  c.n_max = 4;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = RunConfig{};
  c.precision = 9;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = RunConfig{};
  c.fault = FaultSpec{13, 1, 0};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.fault = FaultSpec{3, 26, 0};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = RunConfig{};
  c.s = 5;
  CHECK_THROWS_AS(run(c), ConfigError);

  CHECK(parse_mode("decay-table") == Mode::decay_table);
  CHECK_THROWS_AS(parse_mode("verify"), ConfigError);
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
  const ScanRange r = parse_scan("7..41");
  CHECK(r.from == 7);
  CHECK(r.to == 41);
  CHECK_THROWS_AS(parse_scan("8..41"), ConfigError);
  CHECK_THROWS_AS(parse_scan("41..7"), ConfigError);
  CHECK_THROWS_AS(parse_scan("7-41"), ConfigError);
  const FaultSpec f = parse_fault("3,2,1");
  CHECK(f.n == 3);
  CHECK(f.i == 2);
  CHECK(f.k == 1);
  CHECK_THROWS_AS(parse_fault("3,2"), ConfigError);
  CHECK_THROWS_AS(parse_fault("3,x,1"), ConfigError);
}

TEST_CASE("verify-exact passes on a small grid") {
  const Report r = run(small(Mode::verify_exact));
  CHECK(count(r, Verdict::fail) == 0);
  CHECK(count(r, Verdict::indeterminate) == 0);
  CHECK(exit_code(r.summary()) == 0);
  for (const char* id : {"exact.lemma1", "exact.lemma2_mirror", "exact.lemma2_even_sums",
                         "exact.a1_sum", "exact.lemma3", "exact.zeta3_elimination",
                         "exact.combined_integrality", "oracle.brick.half_shifted",
                         "oracle.ratio_consecutive", "oracle.ratio_cross"})
    CHECK(std::count_if(r.checks.begin(), r.checks.end(),
                        [&](const Check& c) { return c.id == id; }) == 4);
}

TEST_CASE("an injected fault fails and is localized") {
  RunConfig c = small(Mode::verify_exact);
  c.fault = FaultSpec{3, 4, 1};
  const Report r = run(c);
  CHECK(exit_code(r.summary()) == 1);
  bool found = false;
  for (const auto& chk : r.checks) {
    if (chk.verdict != Verdict::fail) continue;
    CHECK(chk.subject == "n=3");
    if (chk.id == "exact.lemma1") {
      found = true;
      CHECK(chk.note.find("i=4, k=1") != std::string::npos);
    }
  }
  CHECK(found);
}

TEST_CASE("reports are deterministic and JSON round-trips byte for byte") {
  for (Mode m : {Mode::verify_exact, Mode::asymptotics, Mode::zeta_table, Mode::decay_table}) {
    RunConfig c = small(m);
    c.scan_s = ScanRange{7, 31};
    const std::string a = render_json(run(c));
    const std::string b = render_json(run(c));
    CHECK(a == b);
    const auto parsed = nlohmann::ordered_json::parse(a);
    CHECK(parsed.dump(2) + "\n" == a);
    CHECK(parsed.contains("version"));
    CHECK(parsed["summary"].contains("indeterminate"));
    for (const auto& chk : parsed["checks"]) {
      const auto& v = chk["payload"]["value"];
      if (v.is_object()) {
        CHECK(v.contains("decimal"));
        CHECK(v.contains("radius"));
      }
      const std::string verdict = chk["verdict"];
      CHECK((verdict == "pass" || verdict == "fail" || verdict == "indeterminate"));
    }
  }
}

TEST_CASE("payload shapes") {
  Report r;
  r.version = "x";
  r.add({"a", "n=1", Verdict::pass, Value::exact(make_rational(-3, 4)), {}, ""});
  r.add({"b", "n=2", Verdict::fail, Value::enclosure(Enclosure::exact(make_rational(1, 3), 64), 10),
         {{"extra", Value::text("t,x")}}, "note"});
  const auto j = to_json(r);
  CHECK(j["checks"][0]["payload"]["value"]["decimal"] == "-3/4");
  CHECK(j["checks"][0]["payload"]["value"]["radius"] == "0");
  CHECK(j["checks"][0]["payload"]["value"]["exact"] == true);
  CHECK(j["checks"][1]["payload"]["value"]["decimal"] == "3.333333333e-01");
  CHECK(j["checks"][1]["payload"]["note"] == "note");
  const std::string csv = render_csv(r);
  CHECK(csv == "id,subject,verdict,payload,radius\n"
               "a,n=1,pass,-3/4,0\n"
               "b,n=2,fail,3.333333333e-01," +
                   Enclosure::exact(make_rational(1, 3), 64).rad_decimal() + "\n");
  CHECK(render_human(r).find("summary: 1 pass, 1 fail, 0 indeterminate") != std::string::npos);
}

TEST_CASE("exit code depends only on the verdict multiset") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Report r;
    const int len = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int j = 0; j < len; ++j)
      r.add({"c", "n=1", static_cast<Verdict>(std::uniform_int_distribution<int>(0, 2)(rng)),
             Value::text("v"), {}, ""});
    const int code = exit_code(r.summary());
    Report shuffled = r;
    std::shuffle(shuffled.checks.begin(), shuffled.checks.end(), rng);
    CHECK(exit_code(shuffled.summary()) == code);
    const Summary s = r.summary();
    CHECK(code == (s.fail ? 1 : s.indeterminate ? 3 : 0));
  }
}

TEST_CASE("decay-table on the default small range leaves n0 indeterminate") {
  RunConfig c;
  c.mode = Mode::decay_table;
  c.n_max = 3;
  c.precision = 15;
  const Report r = run(c);
  CHECK(exit_code(r.summary()) == 3);
  for (const auto& chk : r.checks) {
    if (chk.id == "decay.delta") CHECK(chk.note == "negative");
    if (chk.id == "decay.cross_route") CHECK(chk.verdict == Verdict::pass);
    if (chk.id == "decay.n0") CHECK(chk.verdict == Verdict::indeterminate);
    CHECK(chk.id != "decay.u_n");
  }
}

TEST_CASE("asymptotics report carries x0 and log g") {
  RunConfig c;
  c.mode = Mode::asymptotics;
  const Report r = run(c);
  CHECK(exit_code(r.summary()) == 0);
  for (const auto& chk : r.checks) {
    if (chk.id == "asym.x0") CHECK(chk.value.decimal.substr(0, 8) == "3.671305");
    if (chk.id == "asym.log_g") CHECK(chk.value.decimal.substr(0, 10) == "-2.5292363");
  }
}

TEST_CASE("selftest passes") {
  RunConfig c;
  c.mode = Mode::selftest;
  c.samples = 300;
  const Report r = run(c);
  CHECK(exit_code(r.summary()) == 0);
  CHECK(count(r, Verdict::pass) == static_cast<int>(r.checks.size()));
}
