#pragma once

#include "fdq/root_datum.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace fdq {

// Standard maximal parabolic P = MN attached to a removed simple root.
struct LeviData {
  int removed = 0;
  std::vector<int> theta;                 // Delta - {alpha}, ascending
  std::vector<std::size_t> sigma_p;       // positive roots in N
  std::vector<std::size_t> levi_roots;    // positive roots of M
  int dim_n = 0;                          // weighted by root dims
  RatVec rho_p;                           // simple-root coordinates
  RatVec alpha_tilde;
};

LeviData levi_data(const RootSystem& rs, int alpha);

struct ShahidiLevels {
  // level i -> positive root indices beta with <alpha~, beta^vee> = i.
  std::map<int, std::vector<std::size_t>> levels;
  int m_ls = 0;
  // Set when Sigma(P) contains both beta and 2 beta; only beta is graded.
  bool non_reduced = false;

  std::size_t count() const;
};

ShahidiLevels shahidi_levels(const RootSystem& rs, const LeviData& levi);

struct RelativeWeylData {
  int wm_order = 1;
  std::optional<WeylElement> nontrivial;  // w with w(theta) = theta, w(alpha) in -alpha + Z theta
  bool self_associate = false;            // w0 w0(theta) preserves theta
  // Not computed: |Stab(A)| = 1 is an assumption carried by case files.
  int stab_a_order = 1;
};

RelativeWeylData relative_weyl(const RootSystem& rs, const LeviData& levi);

// |W(M)| = #{w in W : w(theta) in Z theta} / |W_theta|, by enumerating W.
std::size_t relative_weyl_order_bruteforce(const RootSystem& rs, const std::vector<int>& theta,
                                           std::size_t limit = 1'000'000);

struct AdjointDimensionCheck {
  int dim_g_ad = 0;   // dim G - dim Z(g^)
  int dim_m_ad = 0;   // dim M - dim Z(m^)
  int dim_n = 0;
  bool pass = false;  // dim_g_ad == 1 + dim_m_ad + 2 dim_n
};

AdjointDimensionCheck adjoint_dimension_check(const RootSystem& rs, const LeviData& levi);
AdjointDimensionCheck adjoint_dimension_check(const RootDatum& datum, const LeviData& levi);

nlohmann::ordered_json levi_to_json(const RootSystem& rs, const LeviData& levi,
                                    const ShahidiLevels& levels);

}  // namespace fdq
