#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adedefect/defect/defect.hpp"
#include "adedefect/singular/ade.hpp"

namespace ade {

/// Ambient data of a fourfold X and an ample Y; supplied by the caller.
struct CohomologyInputs {
  long h1_Omega = 0;
  long h2_Omega = 0;
  long h3_Omega = 0;
  long h4_Omega = 0;
  long h0_2Y_K = 0;
  long h0_Y_K = 0;
  long h3_minus2Y = 0;
  long h4_Omega_minusY = 0;
  long h2_OX = 0;
};

/// Inputs for P4 and a degree-d hypersurface (Bott's formula for the twist).
CohomologyInputs toric_inputs_p4(int d);
/// Inputs for the weighted space P(1,1,1,1,d/n) and the cover hypersurface of degree d.
CohomologyInputs toric_inputs_cover(int d, int n);
/// Sections of O(k) on P(1,1,1,1,w).
long weighted_sections(int k, int w);

struct CoverSpec {
  int d = 0;
  int n = 2;
  /// Singularities of the branch surface.
  Inventory inventory;
  bool branch_nodal = false;
  bool branch_cuspidal = false;
  bool branch_du_val = false;

  /// Sets the flags that the inventory supports.
  static CoverSpec from_inventory(int d, int n, Inventory inventory);
};

enum class Resolution { Big, Small };
const char* to_string(Resolution r);

struct Check {
  std::string name;
  bool pass = false;
  long lhs = 0;
  long rhs = 0;
};

struct HodgeReport {
  long h11 = 0;
  std::optional<long> h12;
  long mu = 0;
  long delta = 0;
  std::optional<long> euler;
  std::optional<long> h3_O;
  Resolution resolution = Resolution::Big;
  std::string formula_id;
  std::vector<NamedRank> rank_inputs;
  std::vector<Check> checks;
};

/// Big resolution of Y in an ambient fourfold. h12 needs h2_OX = 0: with
/// require_h12 a violation throws AssumptionViolated, otherwise h12 is left empty.
HodgeReport hodge_big_general(const CohomologyInputs& c, long mu, long delta, bool require_h12 = true);

/// Big resolution of the cyclic cover. Errors: UnsupportedCover, DivisibilityError.
HodgeReport hodge_big_cover(const CoverSpec& spec, long delta);

/// Kahler small resolution of a triple sextic with cusps (ranks of the value
/// and the value-plus-v1 matrices) or a double octic with odd A points (one rank).
HodgeReport hodge_small(const CoverSpec& spec, const std::vector<NamedRank>& ranks);

/// Shifts h11 by h4 of the exceptional fibers; h12 is unchanged.
/// Errors: UnsupportedFiberTopology.
HodgeReport small_to_big(const CoverSpec& spec, const HodgeReport& small);
HodgeReport big_to_small(const CoverSpec& spec, const HodgeReport& big);

/// 2(h11 - h12) against the closed Euler formula of the small resolution.
Check euler_check(const HodgeReport& small, const CoverSpec& spec);

/// Big h11 and h12 via the cover formula against the shifted small report.
Check path_independence(const HodgeReport& big, const HodgeReport& small, const CoverSpec& spec);

}  // namespace ade
