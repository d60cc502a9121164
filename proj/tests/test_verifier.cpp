#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fdq/cli.hpp"
#include "fdq/errors.hpp"
#include "fdq/verifier.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace fdq;

namespace {

std::vector<CaseRecord> bundled() { return load_cases(default_cases_dir()); }

CaseRecord bundled_case(const std::string& name) {
  for (auto& c : bundled())
    if (c.name == name) return c;
  FAIL("missing bundled case " << name);
  return {};
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& tag) {
  auto p = std::filesystem::temp_directory_path() / ("fdq_test_" + tag);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

void write_case(const std::filesystem::path& dir, const CaseRecord& c) {
  std::ofstream(dir / (c.name + ".json")) << case_to_json(c).dump(2) << '\n';
}

const CheckResult* find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("bundled database") {
  const auto cases = bundled();
  REQUIRE(cases.size() == 9);
  std::vector<std::string> names;
  for (const auto& c : cases) names.push_back(c.name);
  CHECK(std::is_sorted(names.begin(), names.end()));
  for (const auto& c : cases) {
    const auto r = verify_case(c);
    INFO(report_to_markdown(r));
    CHECK(r.overall());
    CHECK(r.assumptions == c.assumptions);
  }
}

TEST_CASE("G2 rows carry the tabulated values") {
  // Values transcribed independently of the case files.
  const auto a = bundled_case("g2-pi-alpha-half");
  CHECK(a.removed_root == 1);
  CHECK(a.j == 2);
  CHECK(a.order_pi == 2);
  CHECK(a.order_sigma == 2);
  CHECK(*a.expected.rho_p == RatVec{Rational(9, 2), 3});
  CHECK(*a.expected.alpha_tilde == RatVec{3, 2});
  const std::map<int, std::vector<IntVec>> la{{1, {{0, 1}, {1, 1}}}, {2, {{1, 2}}}, {3, {{1, 3}, {2, 3}}}};
  CHECK(*a.expected.levels == la);

  const auto b = bundled_case("g2-pi-beta-one");
  CHECK(b.removed_root == 0);
  CHECK(b.j == 1);
  CHECK(b.order_pi == 1);
  CHECK(b.order_sigma == 2);
  CHECK(*b.expected.rho_p == RatVec{5, Rational(5, 2)});
  CHECK(*b.expected.alpha_tilde == RatVec{2, 1});

  for (const auto& c : bundled()) {
    if (c.builtin != "G2") continue;
    CHECK(*c.expected.m_idx == 2);
    CHECK(*c.expected.chi_pairing == 1);
    const auto r = verify_case(c);
    const auto* p = find_check(r, "pi0-equals-j");
    REQUIRE(p != nullptr);
    CHECK(p->pass);
  }
}

TEST_CASE("GL_2n compatibility constants") {
  for (int n = 1; n <= 6; ++n) {
    const auto c = bundled_case("gl2n-n" + std::to_string(n));
    CHECK(c.order_pi == 2 * n);
    CHECK(c.order_sigma == n * n);
    const auto r = verify_case(c);
    const auto* comp = find_check(r, "compatibility");
    REQUIRE(comp != nullptr);
    CHECK(comp->pass);
    CHECK(comp->expected.find("= " + to_string(Rational(2, n))) != std::string::npos);
  }
}

TEST_CASE("semisimple evaluations") {
  const RootDatum g2 = builtin_datum("G2");
  const auto& rs = g2.system;
  const LeviData pb = levi_data(rs, 0);
  CHECK(semisimple_evaluation(rs, pb, 1, {0, 1}) == 0);
  CHECK(semisimple_evaluation(rs, pb, 1, {1, 0}) == 1);
  CHECK(semisimple_evaluation(rs, pb, 1, {2, 3}) == 2);
  const LeviData pa = levi_data(rs, 1);
  CHECK(semisimple_evaluation(rs, pa, 2, {1, 0}) == 0);
  CHECK(semisimple_evaluation(rs, pa, 2, {1, 2}) == 1);
  CHECK_THROWS_AS(semisimple_evaluation(rs, pa, 3, {1, 2}), InputError);

  CHECK(q_power_string(0) == "1");
  CHECK(q_power_string(1) == "q");
  CHECK(q_power_string(2) == "q^2");
  CHECK(q_power_string(Rational(1, 2)) == "q^(1/2)");

  // Levi coroots evaluate trivially, for every maximal Levi of small types.
  for (const char* name : {"A4", "B3", "C4", "D5", "F4", "G2", "E6"}) {
    const RootDatum d = builtin_datum(name);
    for (int alpha = 0; alpha < d.system.rank(); ++alpha) {
      const LeviData l = levi_data(d.system, alpha);
      for (std::size_t k : l.levi_roots)
        for (int j : {1, 2}) CHECK(semisimple_evaluation(d.system, l, j, d.system.coroot(k).coords) == 0);
    }
  }
}

TEST_CASE("report soundness under mutation") {
  std::mt19937 rng(20261018);
  const auto cases = bundled();
  int mutated = 0;
  for (int trial = 0; trial < 200; ++trial) {
    CaseRecord c = cases[rng() % cases.size()];
    CaseExpected& x = c.expected;
    switch (rng() % 10) {
      case 0:
        if (!x.rho_p) continue;
        (*x.rho_p)[rng() % x.rho_p->size()] += Rational(1, 2);
        break;
      case 1:
        if (!x.alpha_tilde) continue;
        (*x.alpha_tilde)[rng() % x.alpha_tilde->size()] -= 1;
        break;
      case 2: {
        if (!x.levels || x.levels->size() < 2) continue;
        auto it = x.levels->begin();
        IntVec moved = it->second.back();
        it->second.pop_back();
        std::next(it)->second.push_back(moved);
        break;
      }
      case 3:
        if (!x.m_ls) continue;
        *x.m_ls += 1;
        break;
      case 4:
        if (!x.chi) continue;
        (*x.chi)[rng() % x.chi->size()] *= -1;
        break;
      case 5:
        if (!x.chi_pairing) continue;
        *x.chi_pairing += 1;
        break;
      case 6:
        if (!x.m_idx) continue;
        *x.m_idx += 1 + rng() % 3;
        break;
      case 7:
        if (x.semisimple.empty()) continue;
        x.semisimple[rng() % x.semisimple.size()].exponent += Rational(1, 2);
        break;
      case 8:
        c.order_pi += 1;
        break;
      case 9:
        c.j = 3 - c.j;
        break;
    }
    ++mutated;
    const auto r = verify_case(c);
    INFO(report_to_markdown(r));
    CHECK_FALSE(r.overall());
    bool any_fail = false;
    for (const auto& ch : r.checks) any_fail = any_fail || !ch.pass;
    CHECK(any_fail);
  }
  CHECK(mutated > 100);
}

TEST_CASE("JSON round trips") {
  for (const auto& c : bundled()) {
    const auto j = case_to_json(c);
    CHECK(case_from_json(nlohmann::json::parse(j.dump())) == c);
    const auto r = verify_case(c);
    const auto rj = report_to_json(r);
    CHECK(report_from_json(nlohmann::json::parse(rj.dump())) == r);
    CHECK(rj["overall"].get<bool>() == r.overall());
  }
  auto rj = report_to_json(verify_case(bundled().front()));
  rj["overall"] = false;
  CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(rj.dump())), InputError);
}

TEST_CASE("case validation") {
  auto base = case_to_json(bundled().front());
  auto with = [&](auto edit) {
    nlohmann::json j = nlohmann::json::parse(base.dump());
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(case_from_json(with([](auto& j) { j["j"] = 3; })), InputError);
  CHECK_THROWS_AS(case_from_json(with([](auto& j) { j["schemaVersion"] = 2; })), InputError);
  CHECK_THROWS_AS(case_from_json(with([](auto& j) { j["componentOrders"] = {0, 2}; })), InputError);
  CHECK_THROWS_AS(case_from_json(with([](auto& j) { j.erase("group"); })), InputError);
  CHECK_THROWS_AS(case_from_json(with([](auto& j) { j["group"]["datum"] = {{"cartan", {{2}}}}; })), InputError);
  CHECK_THROWS_AS(case_from_json(with([](auto& j) { j["expected"]["levels"] = {{"x", nlohmann::json::array()}}; })),
                  InputError);
  CHECK_THROWS_AS(case_from_json(nlohmann::json::array()), InputError);
}

TEST_CASE("pipeline errors become failing checks") {
  CaseRecord c = bundled_case("g2-pi-beta-one");
  c.builtin = "Q7";
  auto r = verify_case(c);
  CHECK_FALSE(r.overall());
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].name == "datum");

  c = bundled_case("g2-pi-beta-one");
  c.removed_root = 5;
  r = verify_case(c);
  CHECK_FALSE(r.overall());

  // (m_LS, j) = (1, 2) has no pole on level 1, so the derivation check fails.
  c = bundled_case("gl2n-n2");
  c.j = 2;
  c.order_pi = 8;
  r = verify_case(c);
  const auto* d = find_check(r, "derivation");
  REQUIRE(d != nullptr);
  CHECK_FALSE(d->pass);
  CHECK(find_check(r, "compatibility")->pass);

  // The |pi0| = j shortcut needs a dual group with trivial center.
  c = bundled_case("gl2n-n2");
  c.expected.pi0_equals_j = true;
  r = verify_case(c);
  CHECK_FALSE(find_check(r, "pi0-equals-j")->pass);
}

TEST_CASE("datum given inline") {
  CaseRecord c = bundled_case("g2-pi-alpha-half");
  c.builtin.clear();
  c.datum = nlohmann::json{{"name", "G2"}, {"cartan", {{2, -3}, {-1, 2}}}};
  CHECK(verify_case(c).overall());
  CHECK(case_from_json(nlohmann::json::parse(case_to_json(c).dump())) == c);
}

TEST_CASE("load_cases rejects duplicates and missing directories") {
  const auto dir = scratch_dir("dup");
  CaseRecord c = bundled_case("gl2n-n1");
  write_case(dir, c);
  std::ofstream(dir / "copy.json") << case_to_json(c).dump();
  CHECK_THROWS_AS(load_cases(dir), InputError);
  CHECK_THROWS_AS(load_cases(dir / "nope"), InputError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli exit codes") {
  CHECK(cli({"verify-case", "--all"}).code == 0);
  CHECK(cli({"verify-case", "g2-pi-alpha-half", "gl2n-n3"}).code == 0);
  CHECK(cli({"verify-case", "no-such-case"}).code == 2);
  CHECK(cli({"verify-case"}).code == 2);
  CHECK(cli({"roots", "NoSuchType"}).code == 2);
  CHECK(cli({"roots"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"roots", "G2", "--format", "yaml"}).code == 2);
  CHECK(cli({"parabolic", "G2", "--remove", "gamma"}).code == 2);
  CHECK(cli({"constants", "A1", "--remove", "3"}).code == 2);
  CHECK(cli({"--help"}).code == 0);

  const auto bad = cli({"roots", "NoSuchType"});
  CHECK(bad.out.empty());
  CHECK(bad.err.find("NoSuchType") != std::string::npos);

  const auto dir = scratch_dir("fail");
  CaseRecord c = bundled_case("g2-pi-beta-one");
  c.order_pi = 2;
  write_case(dir, c);
  const auto failing = cli({"verify-case", "--all", "--cases-dir", dir.string()});
  CHECK(failing.code == 1);
  CHECK(failing.out.find("FAIL") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli outputs") {
  auto p = cli({"parabolic", "G2", "--remove", "alpha", "--format", "json"});
  REQUIRE(p.code == 0);
  auto j = nlohmann::json::parse(p.out);
  CHECK(j["alphaTilde"] == nlohmann::json::array({2, 1}));
  CHECK(j["mLS"] == 2);
  CHECK(j["wmOrder"] == 2);

  auto r = cli({"--format", "json", "roots", "G2"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  REQUIRE(j["positiveRoots"].size() == 6);
  const std::vector<IntVec> coroots{{1, 0}, {0, 1}, {1, 3}, {2, 3}, {1, 1}, {1, 2}};
  for (std::size_t k = 0; k < 6; ++k) CHECK(j["positiveRoots"][k]["coroot"].get<IntVec>() == coroots[k]);

  auto c = cli({"constants", "g2-pi-beta-half", "--format", "json"});
  REQUIRE(c.code == 0);
  j = nlohmann::json::parse(c.out);
  CHECK(j["constants"]["mIdx"] == 2);
  CHECK(j["constants"]["chiPairing"] == 1);

  auto m = cli({"motive", "G2", "--format", "json"});
  REQUIRE(m.code == 0);
  j = nlohmann::json::parse(m.out);
  CHECK(j["dimG"] == 14);
  CHECK(j["iwahoriExponent"] == 8);

  auto g = cli({"gamma-gm", "GL2", "--remove", "0", "--format", "json"});
  REQUIRE(g.code == 0);
  CHECK(nlohmann::json::parse(g.out)["gammaGM"] == "(q + 1)/q");

  auto d = cli({"derive", "gl2n-n3", "--format", "json"});
  REQUIRE(d.code == 0);
  j = nlohmann::json::parse(d.out);
  CHECK(j["constant"] == "3/2");
  CHECK(j["pass"] == true);

  auto bad = cli({"derive", "GL4", "--remove", "1", "--j", "2"});
  CHECK(bad.code == 1);

  auto l = cli({"list-cases", "--format", "json"});
  REQUIRE(l.code == 0);
  CHECK(nlohmann::json::parse(l.out).size() == 9);

  auto v = cli({"verify-case", "--all", "--format", "json"});
  j = nlohmann::json::parse(v.out);
  CHECK(j["overall"] == true);
  CHECK(j["passed"] == 9);
}

TEST_CASE("cli output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify-case", "--all"}, {"verify-case", "--all", "--format", "json"},
        {"roots", "E6"}, {"parabolic", "F4", "--remove", "2"}, {"motive", "GL5", "--format", "json"},
        {"derive", "g2-pi-alpha-half"}}) {
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
