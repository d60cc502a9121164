#pragma once

#include "fdq/int_matrix.hpp"
#include "fdq/root_datum.hpp"

#include "json.hpp"

#include <vector>

namespace fdq {

struct StructureConstants {
  IntVec chi;            // generator of X^*(M)^G in X, <chi, alpha^vee> > 0
  Integer chi_pairing;   // <chi, alpha^vee>
  Integer m_idx;         // [X^*(A_M)^G : res X^*(M)^G]
  int dim_a_m = 0;
  int dim_a_g = 0;

  Rational compat_constant(int j) const { return Rational(j) * Rational(chi_pairing) / Rational(m_idx); }
  Rational heiermann_constant() const { return Rational(m_idx) / Rational(chi_pairing); }
};

// Rank of the split central torus of the Levi with simple roots theta.
int central_torus_rank(const RootDatum& datum, const std::vector<int>& theta);

// theta must be Delta - {alpha}.
StructureConstants structure_constants(const RootDatum& datum, const std::vector<int>& theta, int alpha);
StructureConstants structure_constants(const RootDatum& datum, int alpha);

// y1 and vol are exact rationals; the units are implicit:
//   y1 = y1_coeff * (2 pi / log q), vol = vol, ratio = ratio_coeff * (log q / 2 pi).
struct OrbitVolumeData {
  int l = 1;
  int torsion_t = 1;
  Rational y1_coeff;
  Rational vol;
  Rational ratio_coeff;
};

OrbitVolumeData orbit_volume(const StructureConstants& sc, int l, int torsion_t);

nlohmann::ordered_json structure_constants_to_json(const StructureConstants& sc);
nlohmann::ordered_json orbit_volume_to_json(const OrbitVolumeData& ov);

}  // namespace fdq
