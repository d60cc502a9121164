#pragma once

#include "fdq/qrational.hpp"
#include "fdq/root_datum.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace fdq {

struct SimpleFactor {
  std::string type;          // e.g. "G2", "A3"
  std::vector<int> nodes;    // simple-root indices of this component
  std::vector<int> degrees;  // ascending
  Integer weyl_order;        // orbit-stabilizer count, equals the product of degrees
};

struct MotiveData {
  std::map<int, int> degrees_with_mult;  // d -> dim V_d
  int dim_g = 0;
  int dim_t = 0;
  std::vector<SimpleFactor> factors;
};

// Invariant degrees of a simple type, from the embedded tables.
std::vector<int> invariant_degrees(char family, int rank);
// Identifies the type of a connected Cartan component by rank, root count and lacing.
std::string classify_component(const RootSystem& rs, const std::vector<int>& nodes);

MotiveData motive_degrees(const RootDatum& datum);
Rational iwahori_volume_exponent(const MotiveData& md);

// |G(F_q)| = q^{#Sigma+} prod_d (q^d - 1)^{dim V_d}.
QRational point_count(const RootDatum& datum);
QRational gamma_GM(const RootDatum& datum, const std::vector<int>& theta);
QRational measure_quotient_factor(const RootDatum& datum, const std::vector<int>& theta);
// [U_beta(o) : U_beta(p)] = q^{dim U_beta} for positive root k.
QRational root_subgroup_index(const RootSystem& rs, std::size_t k);

nlohmann::ordered_json motive_to_json(const MotiveData& md);

}  // namespace fdq
