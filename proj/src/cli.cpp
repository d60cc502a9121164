#include "fdq/cli.hpp"

#include "fdq/errors.hpp"
#include "fdq/lattice_constants.hpp"
#include "fdq/mero_symbolic.hpp"
#include "fdq/motive_volumes.hpp"
#include "fdq/parabolic_levi.hpp"
#include "fdq/verifier.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

namespace fdq {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string format = "markdown";
  std::string cases_dir;
  std::string target;
  std::string remove;
  int j = 1;
  std::vector<std::string> names;
  bool all = false;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::filesystem::path cases_dir(const Options& o) {
  return o.cases_dir.empty() ? default_cases_dir() : std::filesystem::path(o.cases_dir);
}

// A builtin name such as "G2" or "GL6", or a path to a datum JSON file.
RootDatum resolve_group(const std::string& spec) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    std::ifstream in(spec);
    if (!in) throw InputError("cannot open datum file " + spec);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw InputError(spec + ": " + e.what());
    }
    return root_datum_from_json(j);
  }
  return builtin_datum(spec);
}

std::optional<CaseRecord> find_case(const Options& o, const std::string& name) {
  const std::filesystem::path dir = cases_dir(o);
  if (!std::filesystem::is_directory(dir)) return std::nullopt;
  for (auto& c : load_cases(dir))
    if (c.name == name) return c;
  return std::nullopt;
}

CaseRecord require_case(const Options& o, const std::string& name) {
  auto c = find_case(o, name);
  if (!c) throw InputError("unknown case '" + name + "' (see list-cases)");
  return *c;
}

// Group and removed root from either a case name or "<type> --remove <root>".
struct Target {
  RootDatum datum;
  int removed = 0;
  int j = 1;
  std::string label;
};

Target resolve_target(const Options& o) {
  if (o.remove.empty()) {
    const CaseRecord c = require_case(o, o.target);
    return {resolve_datum(c), c.removed_root, c.j, c.name};
  }
  RootDatum d = resolve_group(o.target);
  const int alpha = parse_simple_root(d.system, o.remove);
  return {std::move(d), alpha, o.j, o.target};
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << '\n'; }

int cmd_roots(const Options& o, std::ostream& out) {
  const RootDatum d = resolve_group(o.target);
  const RootSystem& rs = d.system;
  if (json_out(o)) {
    ojson roots = ojson::array();
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
      const Root& r = rs.positive_root(k);
      roots.push_back({{"index", k},
                       {"root", r.coords},
                       {"label", root_label(rs, r.coords)},
                       {"length", std::string(to_string(r.length))},
                       {"coroot", rs.coroot(k).coords},
                       {"corootLabel", root_label(rs, rs.coroot(k).coords, true)}});
    }
    emit(out, {{"group", d.name}, {"rank", rs.rank()}, {"positiveRoots", roots}});
    return 0;
  }
  out << "# " << d.name << ": " << rs.num_positive() << " positive roots\n\n";
  out << "| # | root | coords | length | coroot | coroot coords |\n|---|---|---|---|---|---|\n";
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const Root& r = rs.positive_root(k);
    out << "| " << k << " | " << root_label(rs, r.coords) << " | " << to_string(r.coords) << " | "
        << to_string(r.length) << " | " << root_label(rs, rs.coroot(k).coords, true) << " | "
        << to_string(rs.coroot(k).coords) << " |\n";
  }
  return 0;
}

int cmd_parabolic(const Options& o, std::ostream& out) {
  const RootDatum d = resolve_group(o.target);
  const RootSystem& rs = d.system;
  const LeviData levi = levi_data(rs, parse_simple_root(rs, o.remove));
  const ShahidiLevels levels = shahidi_levels(rs, levi);
  const RelativeWeylData rw = relative_weyl(rs, levi);
  if (json_out(o)) {
    ojson j = levi_to_json(rs, levi, levels);
    j["wmOrder"] = rw.wm_order;
    j["selfAssociate"] = rw.self_associate;
    emit(out, j);
    return 0;
  }
  out << "# " << d.name << ", removed root " << root_label(rs, rs.positive_root(rs.simple_index(levi.removed)).coords)
      << "\n\n";
  out << "- rho_P = " << to_string(levi.rho_p) << "\n";
  out << "- alphaTilde = " << to_string(levi.alpha_tilde) << "\n";
  out << "- dim N = " << levi.dim_n << "\n";
  out << "- |W(M)| = " << rw.wm_order << (rw.self_associate ? " (self-associate)" : "") << "\n\n";
  out << "| level | coroots |\n|---|---|\n";
  for (const auto& [i, ks] : levels.levels) {
    out << "| " << i << " |";
    for (std::size_t n = 0; n < ks.size(); ++n)
      out << (n ? ", " : " ") << root_label(rs, rs.coroot(ks[n]).coords, true);
    out << " |\n";
  }
  if (levels.non_reduced) out << "\nnon-reduced: only beta is graded when 2 beta is also a root\n";
  return 0;
}

int cmd_constants(const Options& o, std::ostream& out) {
  const Target t = resolve_target(o);
  const StructureConstants sc = structure_constants(t.datum, t.removed);
  const OrbitVolumeData ov = orbit_volume(sc, 1, 1);
  if (json_out(o)) {
    ojson j;
    j["target"] = t.label;
    j["removedRoot"] = t.removed;
    j["constants"] = structure_constants_to_json(sc);
    j["orbitVolume"] = orbit_volume_to_json(ov);
    emit(out, j);
    return 0;
  }
  out << "# structure constants: " << t.label << "\n\n";
  out << "- chi = " << to_string(sc.chi) << "\n";
  out << "- <chi, alpha^vee> = " << to_string(sc.chi_pairing) << "\n";
  out << "- m = " << to_string(sc.m_idx) << "\n";
  out << "- m/<chi, alpha^vee> = " << to_string(sc.heiermann_constant()) << "\n";
  out << "- dim A_M = " << sc.dim_a_m << ", dim A_G = " << sc.dim_a_g << "\n";
  out << "- vol/y1 (l = t = 1) = " << to_string(ov.ratio_coeff) << " * log q/2pi\n";
  return 0;
}

int cmd_motive(const Options& o, std::ostream& out) {
  const RootDatum d = resolve_group(o.target);
  const MotiveData md = motive_degrees(d);
  const Rational v = iwahori_volume_exponent(md);
  const QRational pc = point_count(d);
  if (json_out(o)) {
    ojson j = motive_to_json(md);
    j["group"] = d.name;
    j["iwahoriExponent"] = is_integral(v) ? ojson(to_long(numerator_of(v))) : ojson(to_string(v));
    j["pointCount"] = pc.str();
    j["pointCountPoly"] = to_json(pc);
    emit(out, j);
    return 0;
  }
  out << "# motive of " << d.name << "\n\n";
  out << "- degrees:";
  for (const auto& [deg, mult] : md.degrees_with_mult) out << ' ' << deg << (mult > 1 ? "^" + std::to_string(mult) : "");
  out << "\n- dim G = " << md.dim_g << ", dim T = " << md.dim_t << "\n";
  out << "- Iwahori volume = q^-" << to_string(v) << "\n";
  out << "- |G(F_q)| = " << pc.str() << "\n";
  return 0;
}

int cmd_gamma_gm(const Options& o, std::ostream& out) {
  const RootDatum d = resolve_group(o.target);
  const int alpha = parse_simple_root(d.system, o.remove);
  const LeviData levi = levi_data(d.system, alpha);
  const QRational g = gamma_GM(d, levi.theta);
  const QRational f = measure_quotient_factor(d, levi.theta);
  if (json_out(o)) {
    emit(out, {{"group", d.name},
               {"removedRoot", alpha},
               {"dimN", levi.dim_n},
               {"gammaGM", g.str()},
               {"gammaGMPoly", to_json(g)},
               {"measureFactor", f.str()},
               {"measureFactorPoly", to_json(f)}});
    return 0;
  }
  out << "# gamma(G/M) for " << d.name << ", removed root " << alpha << "\n\n";
  out << "- dim N = " << levi.dim_n << "\n";
  out << "- gamma(G/M) = " << g.str() << "\n";
  out << "- measure factor = " << f.str() << "\n";
  return 0;
}

int cmd_derive(const Options& o, std::ostream& out) {
  const Target t = resolve_target(o);
  const LeviData levi = levi_data(t.datum.system, t.removed);
  const ShahidiLevels levels = shahidi_levels(t.datum.system, levi);
  const StructureConstants sc = structure_constants(t.datum, levi.theta, t.removed);
  const DerivationReport r = derive_main_theorem(levels.m_ls, t.j, sc);
  if (json_out(o)) {
    ojson j = to_json(r);
    j["target"] = t.label;
    emit(out, j);
  } else {
    out << "# derivation: " << t.label << "\n\n" << to_markdown(r);
  }
  return r.success() ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<CaseRecord> cases;
  if (o.all) {
    if (!o.names.empty()) throw InputError("give either case names or --all");
    cases = load_cases(cases_dir(o));
  } else {
    if (o.names.empty()) throw InputError("verify-case needs a case name or --all");
    for (const auto& n : o.names) cases.push_back(require_case(o, n));
  }
  std::vector<std::future<VerificationReport>> jobs;
  jobs.reserve(cases.size());
  for (const auto& c : cases) jobs.push_back(std::async(std::launch::async, [&c] { return verify_case(c); }));
  std::vector<VerificationReport> reports;
  for (auto& f : jobs) reports.push_back(f.get());

  const std::size_t passed =
      std::count_if(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.overall(); });
  const bool ok = passed == reports.size();
  if (json_out(o)) {
    ojson rs = ojson::array();
    for (const auto& r : reports) rs.push_back(report_to_json(r));
    emit(out, {{"overall", ok}, {"passed", passed}, {"total", reports.size()}, {"reports", rs}});
  } else {
    for (const auto& r : reports) out << report_to_markdown(r) << '\n';
    out << passed << "/" << reports.size() << " cases pass\n";
  }
  return ok ? 0 : 1;
}

int cmd_list(const Options& o, std::ostream& out) {
  const auto cases = load_cases(cases_dir(o));
  if (json_out(o)) {
    ojson a = ojson::array();
    for (const auto& c : cases) {
      a.push_back({{"name", c.name},
                   {"group", c.builtin.empty() ? "datum" : c.builtin},
                   {"removedRoot", c.removed_root},
                   {"j", c.j},
                   {"componentOrders", {c.order_pi, c.order_sigma}},
                   {"description", c.description}});
    }
    emit(out, a);
    return 0;
  }
  out << "| case | group | removed | j | orders | description |\n|---|---|---|---|---|---|\n";
  for (const auto& c : cases) {
    out << "| " << c.name << " | " << (c.builtin.empty() ? "datum" : c.builtin) << " | " << c.removed_root << " | "
        << c.j << " | " << c.order_pi << ", " << c.order_sigma << " | " << c.description << " |\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Formal degree quotient toolkit", "fdq"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--cases-dir", o.cases_dir, "case database directory");

  auto* roots = app.add_subcommand("roots", "positive roots and coroots");
  roots->add_option("type", o.target, "builtin group or datum JSON file")->required();

  auto* para = app.add_subcommand("parabolic", "parabolic data for a removed simple root");
  para->add_option("type", o.target)->required();
  para->add_option("--remove", o.remove, "simple root: alpha, beta, a<i> or an index")->required();

  auto* cons = app.add_subcommand("constants", "chi, <chi, alpha^vee> and m");
  cons->add_option("target", o.target, "case name, or a group with --remove")->required();
  cons->add_option("--remove", o.remove);

  auto* mot = app.add_subcommand("motive", "motive degrees, Iwahori volume and point count");
  mot->add_option("type", o.target)->required();

  auto* ggm = app.add_subcommand("gamma-gm", "gamma(G/M) and the measure quotient factor");
  ggm->add_option("type", o.target)->required();
  ggm->add_option("--remove", o.remove)->required();

  auto* der = app.add_subcommand("derive", "symbolic derivation of the formal degree quotient");
  der->add_option("target", o.target, "case name, or a group with --remove")->required();
  der->add_option("--remove", o.remove);
  der->add_option("--j", o.j, "pole location, 1 or 2")->check(CLI::Range(1, 2));

  auto* ver = app.add_subcommand("verify-case", "verify bundled cases");
  ver->add_option("cases", o.names);
  ver->add_flag("--all", o.all);

  auto* lst = app.add_subcommand("list-cases", "list the case database");

  for (auto* sub : {roots, para, cons, mot, ggm, der, ver, lst}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*roots) return cmd_roots(o, out);
    if (*para) return cmd_parabolic(o, out);
    if (*cons) return cmd_constants(o, out);
    if (*mot) return cmd_motive(o, out);
    if (*ggm) return cmd_gamma_gm(o, out);
    if (*der) return cmd_derive(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*lst) return cmd_list(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace fdq
