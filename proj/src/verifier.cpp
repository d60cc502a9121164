#include "fdq/verifier.hpp"

#include "fdq/errors.hpp"
#include "fdq/int_matrix.hpp"
#include "fdq/motive_volumes.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef FDQ_DEFAULT_CASES_DIR
#define FDQ_DEFAULT_CASES_DIR "cases"
#endif

namespace fdq {

namespace {

using ojson = nlohmann::ordered_json;

Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("expected an integer or a \"p/q\" string, got " + v.dump());
}

ojson rational_json(const Rational& r) {
  if (is_integral(r)) return to_long(numerator_of(r));
  return to_string(r);
}

ojson ratvec_json(const RatVec& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

RatVec json_ratvec(const nlohmann::json& v) {
  if (!v.is_array()) throw InputError("expected an array, got " + v.dump());
  RatVec out;
  for (const auto& x : v) out.push_back(json_rational(x));
  return out;
}

Integer json_integer(const nlohmann::json& v) {
  const Rational r = json_rational(v);
  if (!is_integral(r)) throw InputError("expected an integer, got " + v.dump());
  return numerator_of(r);
}

int positive_int(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw InputError(std::string(what) + " must be a positive integer");
  return v.get<int>();
}

std::pair<int, int> int_pair(const nlohmann::json& v, const char* what) {
  if (!v.is_array() || v.size() != 2) throw InputError(std::string(what) + " must be a pair [pi, sigma]");
  return {positive_int(v[0], what), positive_int(v[1], what)};
}

std::string ratvec_str(const RatVec& v) { return to_string(v); }

std::string levels_str(const std::map<int, std::vector<IntVec>>& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, cs] : m) {
    os << (first ? "" : "; ") << i << ": {";
    first = false;
    for (std::size_t k = 0; k < cs.size(); ++k) os << (k ? ", " : "") << to_string(cs[k]);
    os << '}';
  }
  return os.str();
}

std::map<int, std::vector<IntVec>> normalized_levels(std::map<int, std::vector<IntVec>> m) {
  for (auto& [i, cs] : m) std::sort(cs.begin(), cs.end());
  return m;
}

bool dual_center_trivial(const RootDatum& d) {
  const auto idx = sublattice_index(IntMatrix::from_columns(d.coroot_embed, d.lattice_rank));
  return idx && *idx == 1;
}

CheckResult make_check(std::string name, std::string cites, std::string computed, std::string expected, bool pass) {
  return {std::move(name), std::move(cites), std::move(computed), std::move(expected), pass};
}

std::string cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

CaseRecord case_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw InputError("case file must be a JSON object");
    const int version = j.value("schemaVersion", 0);
    if (version != kCaseSchemaVersion)
      throw InputError("unsupported schemaVersion " + std::to_string(version));
    CaseRecord c;
    c.name = j.at("name").get<std::string>();
    if (c.name.empty()) throw InputError("case name is empty");
    c.description = j.value("description", std::string());
    c.provenance = j.value("provenance", std::string());
    const auto& g = j.at("group");
    if (g.contains("builtin")) c.builtin = g.at("builtin").get<std::string>();
    if (g.contains("datum")) c.datum = g.at("datum");
    if (c.builtin.empty() == !c.datum.has_value())
      throw InputError("group needs exactly one of \"builtin\" or \"datum\"");
    c.removed_root = j.at("removedRoot").get<int>();
    c.j = j.at("j").get<int>();
    if (c.j != 1 && c.j != 2) throw InputError("j must be 1 or 2");
    std::tie(c.order_pi, c.order_sigma) = int_pair(j.at("componentOrders"), "componentOrders");
    if (j.contains("dimRho")) std::tie(c.dim_rho_pi, c.dim_rho_sigma) = int_pair(j.at("dimRho"), "dimRho");
    if (j.contains("assumptions")) c.assumptions = j.at("assumptions").get<std::map<std::string, bool>>();

    if (j.contains("expected")) {
      const auto& e = j.at("expected");
      CaseExpected& x = c.expected;
      if (e.contains("rhoP")) x.rho_p = json_ratvec(e.at("rhoP"));
      if (e.contains("alphaTilde")) x.alpha_tilde = json_ratvec(e.at("alphaTilde"));
      if (e.contains("levels")) {
        std::map<int, std::vector<IntVec>> lv;
        for (const auto& [k, v] : e.at("levels").items()) lv[std::stoi(k)] = v.get<std::vector<IntVec>>();
        x.levels = std::move(lv);
      }
      if (e.contains("mLS")) x.m_ls = e.at("mLS").get<int>();
      if (e.contains("chi")) x.chi = e.at("chi").get<IntVec>();
      if (e.contains("chiPairing")) x.chi_pairing = json_integer(e.at("chiPairing"));
      if (e.contains("mIdx")) x.m_idx = json_integer(e.at("mIdx"));
      if (e.contains("pi0EqualsJ")) x.pi0_equals_j = e.at("pi0EqualsJ").get<bool>();
      if (e.contains("semisimple")) {
        for (const auto& s : e.at("semisimple"))
          x.semisimple.push_back({s.at("coroot").get<IntVec>(), json_rational(s.at("exponent"))});
      }
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed case file: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("malformed case file: level keys must be integers");
  }
}

nlohmann::ordered_json case_to_json(const CaseRecord& c) {
  ojson j;
  j["schemaVersion"] = kCaseSchemaVersion;
  j["name"] = c.name;
  if (!c.description.empty()) j["description"] = c.description;
  ojson g = ojson::object();
  if (!c.builtin.empty()) g["builtin"] = c.builtin;
  if (c.datum) g["datum"] = *c.datum;
  j["group"] = g;
  j["removedRoot"] = c.removed_root;
  j["j"] = c.j;
  j["componentOrders"] = {c.order_pi, c.order_sigma};
  j["dimRho"] = {c.dim_rho_pi, c.dim_rho_sigma};
  j["assumptions"] = c.assumptions;

  ojson e = ojson::object();
  const CaseExpected& x = c.expected;
  if (x.rho_p) e["rhoP"] = ratvec_json(*x.rho_p);
  if (x.alpha_tilde) e["alphaTilde"] = ratvec_json(*x.alpha_tilde);
  if (x.levels) {
    ojson lv = ojson::object();
    for (const auto& [i, cs] : *x.levels) lv[std::to_string(i)] = cs;
    e["levels"] = lv;
  }
  if (x.m_ls) e["mLS"] = *x.m_ls;
  if (x.chi) e["chi"] = *x.chi;
  if (x.chi_pairing) e["chiPairing"] = rational_json(Rational(*x.chi_pairing));
  if (x.m_idx) e["mIdx"] = rational_json(Rational(*x.m_idx));
  if (x.pi0_equals_j) e["pi0EqualsJ"] = *x.pi0_equals_j;
  if (!x.semisimple.empty()) {
    ojson ss = ojson::array();
    for (const auto& s : x.semisimple) ss.push_back({{"coroot", s.coroot}, {"exponent", rational_json(s.exponent)}});
    e["semisimple"] = ss;
  }
  j["expected"] = e;
  if (!c.provenance.empty()) j["provenance"] = c.provenance;
  return j;
}

CaseRecord load_case_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open case file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return case_from_json(j);
}

std::vector<CaseRecord> load_cases(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InputError("cases directory not found: " + dir.string());
  std::vector<CaseRecord> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(load_case_file(entry.path()));
  }
  std::sort(out.begin(), out.end(), [](const CaseRecord& a, const CaseRecord& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].name == out[i - 1].name) throw InputError("duplicate case name '" + out[i].name + "'");
  }
  return out;
}

std::filesystem::path default_cases_dir() {
  if (const char* env = std::getenv("FDQ_CASES_DIR"); env && *env) return env;
  return FDQ_DEFAULT_CASES_DIR;
}

RootDatum resolve_datum(const CaseRecord& c) {
  if (!c.builtin.empty()) return builtin_datum(c.builtin);
  if (c.datum) return root_datum_from_json(*c.datum);
  throw InputError("case '" + c.name + "' has no group");
}

Rational semisimple_evaluation(const RootSystem& rs, const LeviData& levi, int j, const IntVec& coroot) {
  if (j != 1 && j != 2) throw InputError("j must be 1 or 2");
  return pairing(rs, levi.alpha_tilde, coroot) / j;
}

std::string q_power_string(const Rational& e) {
  if (e == 0) return "1";
  if (e == 1) return "q";
  if (is_integral(e) && e > 0) return "q^" + to_string(e);
  return "q^(" + to_string(e) + ")";
}

bool VerificationReport::overall() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerificationReport verify_case(const CaseRecord& c) {
  VerificationReport r;
  r.case_name = c.name;
  r.assumptions = c.assumptions;
  auto& out = r.checks;
  std::string stage = "datum";

  try {
    const RootDatum datum = resolve_datum(c);
    const RootSystem& rs = datum.system;
    if (c.removed_root < 0 || c.removed_root >= rs.rank())
      throw InputError("removedRoot " + std::to_string(c.removed_root) + " out of range");

    stage = "levi";
    const LeviData levi = levi_data(rs, c.removed_root);
    {
      bool ok = pairing(rs, levi.alpha_tilde, rs.coroot(rs.simple_index(c.removed_root)).coords) == 1;
      for (int t : levi.theta) ok = ok && pairing(rs, levi.alpha_tilde, rs.coroot(rs.simple_index(t)).coords) == 0;
      out.push_back(make_check("alpha-tilde-normalization", "", "alphaTilde = " + ratvec_str(levi.alpha_tilde),
                               "<alphaTilde, alpha^vee> = 1, zero on theta", ok));
    }

    stage = "levels";
    const ShahidiLevels levels = shahidi_levels(rs, levi);
    {
      std::size_t weighted = 0;
      for (const auto& [i, ks] : levels.levels)
        for (auto k : ks) weighted += static_cast<std::size_t>(rs.root_dim(k));
      const bool ok = levels.count() == levi.sigma_p.size() && static_cast<int>(weighted) == levi.dim_n &&
                      levels.m_ls >= 1;
      out.push_back(make_check("level-partition", "",
                               std::to_string(levels.count()) + " roots in " + std::to_string(levels.levels.size()) +
                                   " levels, mLS = " + std::to_string(levels.m_ls),
                               std::to_string(levi.sigma_p.size()) + " roots of N", ok));
    }

    stage = "adjoint-dimension";
    {
      const auto ad = adjoint_dimension_check(datum, levi);
      out.push_back(make_check("adjoint-dimension", "",
                               std::to_string(ad.dim_g_ad) + " = 1 + " + std::to_string(ad.dim_m_ad) + " + 2*" +
                                   std::to_string(ad.dim_n),
                               "dim g/z = 1 + dim m/z + 2 dim n", ad.pass));
    }

    stage = "relative-weyl";
    {
      const auto rw = relative_weyl(rs, levi);
      const auto it = c.assumptions.find("selfAssociate");
      const bool need_two = it != c.assumptions.end() && it->second;
      const bool ok = rw.wm_order <= 2 && (!need_two || (rw.wm_order == 2 && rw.self_associate));
      out.push_back(make_check("relative-weyl", "", "|W(M)| = " + std::to_string(rw.wm_order),
                               need_two ? "|W(M)| = 2" : "|W(M)| <= 2", ok));
    }

    stage = "structure-constants";
    const StructureConstants sc = structure_constants(datum, levi.theta, c.removed_root);
    {
      const int e = sc.dim_a_m - sc.dim_a_g;
      out.push_back(make_check("structure-constants", "",
                               "chi = " + to_string(sc.chi) + ", <chi, alpha^vee> = " + to_string(sc.chi_pairing) +
                                   ", m = " + to_string(sc.m_idx) + ", dim A_M - dim A_G = " + std::to_string(e),
                               "rank one, dim A_M - dim A_G = 1", e == 1 && sc.chi_pairing > 0 && sc.m_idx >= 1));
    }

    stage = "measure-factor";
    {
      const QRational f = measure_quotient_factor(datum, levi.theta);
      const QRational unit = QRational(Poly(std::vector<Integer>{-1, 1}), Poly::monomial(1));
      const QRational direct = gamma_GM(datum, levi.theta) * unit.pow(sc.dim_a_m - sc.dim_a_g);
      out.push_back(make_check("measure-factor", "Prop 3.1", f.str(), direct.str(), f == direct));
    }

    stage = "derivation";
    const DerivationReport dr = derive_main_theorem(levels.m_ls, c.j, sc);
    {
      std::vector<std::string> cites;
      for (const auto& s : dr.steps)
        if (cites.empty() || cites.back() != s.cites) cites.push_back(s.cites);
      std::string cited;
      for (std::size_t i = 0; i < cites.size(); ++i) cited += (i ? ", " : "") + cites[i];
      const bool ok = dr.success() && dr.constant && *dr.constant == dr.expected;
      out.push_back(make_check("derivation", cited,
                               dr.success() ? "d(pi)/d(sigma) = " + to_string(*dr.constant) + " |gamma ratio|"
                                            : "failed: " + dr.failure,
                               "j^-1 m/<chi, alpha^vee> = " + to_string(dr.expected), ok));
    }

    stage = "compatibility";
    {
      const Rational lhs = Rational(c.order_pi, c.order_sigma);
      const Rational rhs = Rational(c.dim_rho_pi, c.dim_rho_sigma) * sc.compat_constant(c.j);
      out.push_back(make_check("compatibility", "Thm 6.1",
                               "|S_pi|/|S_sigma| = " + std::to_string(c.order_pi) + "/" +
                                   std::to_string(c.order_sigma) + " = " + to_string(lhs),
                               "(dim rho ratio) j <chi, alpha^vee>/m = " + to_string(rhs), lhs == rhs));
    }

    const CaseExpected& x = c.expected;
    if (x.pi0_equals_j && *x.pi0_equals_j) {
      const bool trivial = dual_center_trivial(datum);
      out.push_back(make_check("pi0-equals-j", "",
                               "(|pi0|, j) = (" + std::to_string(c.order_pi) + ", " + std::to_string(c.j) + ")" +
                                   (trivial ? "" : ", dual center not trivial"),
                               "|pi0| = j", trivial && c.order_pi == c.j));
    }

    stage = "expected";
    auto compare = [&](const std::string& name, const std::string& computed, const std::string& expected) {
      out.push_back(make_check("expected:" + name, "", computed, expected, computed == expected));
    };
    if (x.rho_p) compare("rhoP", ratvec_str(levi.rho_p), ratvec_str(*x.rho_p));
    if (x.alpha_tilde) compare("alphaTilde", ratvec_str(levi.alpha_tilde), ratvec_str(*x.alpha_tilde));
    if (x.levels) {
      std::map<int, std::vector<IntVec>> got;
      for (const auto& [i, ks] : levels.levels)
        for (auto k : ks) got[i].push_back(rs.coroot(k).coords);
      compare("levels", levels_str(normalized_levels(got)), levels_str(normalized_levels(*x.levels)));
    }
    if (x.m_ls) compare("mLS", std::to_string(levels.m_ls), std::to_string(*x.m_ls));
    if (x.chi) compare("chi", to_string(sc.chi), to_string(*x.chi));
    if (x.chi_pairing) compare("chiPairing", to_string(sc.chi_pairing), to_string(*x.chi_pairing));
    if (x.m_idx) compare("mIdx", to_string(sc.m_idx), to_string(*x.m_idx));

    stage = "semisimple";
    for (const auto& s : x.semisimple) {
      const Rational e = semisimple_evaluation(rs, levi, c.j, s.coroot);
      out.push_back(make_check("semisimple:" + root_label(rs, s.coroot, true), "", q_power_string(e),
                               q_power_string(s.exponent), e == s.exponent));
    }
  } catch (const std::exception& e) {
    out.push_back(make_check(stage, "", std::string("error: ") + e.what(), "no error", false));
  }
  return r;
}

nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  ojson j;
  j["case"] = r.case_name;
  j["overall"] = r.overall();
  j["assumptions"] = r.assumptions;
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"checkName", c.name},
                      {"cites", c.cites},
                      {"computed", c.computed},
                      {"expected", c.expected},
                      {"pass", c.pass}});
  }
  j["checks"] = checks;
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.case_name = j.at("case").get<std::string>();
    r.assumptions = j.at("assumptions").get<std::map<std::string, bool>>();
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("checkName").get<std::string>(), c.at("cites").get<std::string>(),
                          c.at("computed").get<std::string>(), c.at("expected").get<std::string>(),
                          c.at("pass").get<bool>()});
    }
    if (j.at("overall").get<bool>() != r.overall()) throw InputError("report overall flag disagrees with its checks");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "## " << r.case_name << " : " << (r.overall() ? "PASS" : "FAIL") << "\n\n";
  if (!r.assumptions.empty()) {
    os << "assumptions:";
    for (const auto& [k, v] : r.assumptions) os << ' ' << k << '=' << (v ? "true" : "false");
    os << "\n\n";
  }
  os << "| check | cites | computed | expected | pass |\n|---|---|---|---|---|\n";
  for (const auto& c : r.checks) {
    os << "| " << c.name << " | " << c.cites << " | " << cell(c.computed) << " | " << cell(c.expected) << " | "
       << (c.pass ? "yes" : "NO") << " |\n";
  }
  return os.str();
}

}  // namespace fdq
