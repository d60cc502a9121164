#pragma once

#include "fdq/lattice_constants.hpp"
#include "fdq/mero_symbolic.hpp"
#include "fdq/parabolic_levi.hpp"
#include "fdq/root_datum.hpp"

#include "json.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fdq {

inline constexpr int kCaseSchemaVersion = 1;

struct SemisimpleExpectation {
  IntVec coroot;      // simple-coroot coordinates
  Rational exponent;  // expected value q^exponent
  bool operator==(const SemisimpleExpectation&) const = default;
};

// Optional regression values; absent fields are not checked.
struct CaseExpected {
  std::optional<RatVec> rho_p;
  std::optional<RatVec> alpha_tilde;
  std::optional<std::map<int, std::vector<IntVec>>> levels;  // level -> coroot coords
  std::optional<int> m_ls;
  std::optional<IntVec> chi;
  std::optional<Integer> chi_pairing;
  std::optional<Integer> m_idx;
  std::optional<bool> pi0_equals_j;
  std::vector<SemisimpleExpectation> semisimple;
  bool operator==(const CaseExpected&) const = default;
};

struct CaseRecord {
  std::string name;
  std::string description;
  std::string builtin;                   // group.builtin, or empty
  std::optional<nlohmann::json> datum;   // group.datum
  int removed_root = 0;
  int j = 1;
  int order_pi = 1;     // |S_phi_pi|
  int order_sigma = 1;  // |S_phi_sigma|
  int dim_rho_pi = 1;
  int dim_rho_sigma = 1;
  std::map<std::string, bool> assumptions;
  CaseExpected expected;
  std::string provenance;
  bool operator==(const CaseRecord&) const = default;
};

// Throws InputError on schema problems or violated case invariants.
CaseRecord case_from_json(const nlohmann::json& j);
nlohmann::ordered_json case_to_json(const CaseRecord& c);
CaseRecord load_case_file(const std::filesystem::path& path);
// Every *.json under dir, sorted by case name. Duplicate names throw.
std::vector<CaseRecord> load_cases(const std::filesystem::path& dir);
// FDQ_CASES_DIR from the environment, else the directory baked in at build time.
std::filesystem::path default_cases_dir();

RootDatum resolve_datum(const CaseRecord& c);

// Exponent e with gamma^vee(s_lambda) = q^e, lambda = alpha~/j.
Rational semisimple_evaluation(const RootSystem& rs, const LeviData& levi, int j, const IntVec& coroot);
std::string q_power_string(const Rational& e);

struct CheckResult {
  std::string name;
  std::string cites;
  std::string computed;
  std::string expected;
  bool pass = false;
  bool operator==(const CheckResult&) const = default;
};

struct VerificationReport {
  std::string case_name;
  std::vector<CheckResult> checks;
  std::map<std::string, bool> assumptions;
  bool overall() const;
  bool operator==(const VerificationReport&) const = default;
};

// Structural errors from the pipeline are caught and reported as a failing
// check named after the stage that threw.
VerificationReport verify_case(const CaseRecord& c);

nlohmann::ordered_json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
std::string report_to_markdown(const VerificationReport& r);

}  // namespace fdq
