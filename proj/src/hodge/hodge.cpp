#include "adedefect/hodge/hodge.hpp"

#include "adedefect/error.hpp"
#include "adedefect/numbers/rational.hpp"

namespace ade {

const char* to_string(Resolution r) { return r == Resolution::Big ? "big" : "small"; }

long weighted_sections(int k, int w) {
  if (w < 1) throw Error(ErrorCode::InvalidInput, "weight must be positive");
  long total = 0;
  for (int i = 0; i * w <= k; ++i) total += binomial_ll(k - i * w + 3, 3);
  return total;
}

CohomologyInputs toric_inputs_p4(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidInput, "degree must be positive");
  CohomologyInputs c;
  c.h1_Omega = 1;
  c.h0_2Y_K = binomial_ll(2 * d - 1, 4);
  c.h0_Y_K = binomial_ll(d - 1, 4);
  // Serre duality and Bott: h4(Omega^1(-d)) = h0(Omega^3(d)) = (d+1) C(d-1, 3)
  c.h4_Omega_minusY = (d + 1) * binomial_ll(d - 1, 3);
  return c;
}

CohomologyInputs toric_inputs_cover(int d, int n) {
  if (n < 2 || d % n != 0 || d <= n)
    throw Error(ErrorCode::DivisibilityError, "need n | d and d > n");
  const int w = d / n;
  CohomologyInputs c;
  c.h1_Omega = 1;
  // K = O(-4-w)
  c.h0_2Y_K = weighted_sections(2 * d - 4 - w, w);
  c.h0_Y_K = weighted_sections(d - 4 - w, w);
  c.h4_Omega_minusY = 4 * weighted_sections((n - 1) * w - 3, w) + weighted_sections(d - 4, w) -
                      weighted_sections((n - 1) * w - 4, w);
  return c;
}

CoverSpec CoverSpec::from_inventory(int d, int n, Inventory inventory) {
  CoverSpec s{d, n, std::move(inventory), true, true, true};
  for (const auto& [t, count] : s.inventory) {
    if (count == 0) continue;
    s.branch_nodal = s.branch_nodal && t == ADEType::make(Family::A, 1);
    s.branch_cuspidal = s.branch_cuspidal && t == ADEType::make(Family::A, 2);
  }
  return s;
}

HodgeReport hodge_big_general(const CohomologyInputs& c, long mu, long delta, bool require_h12) {
  if (mu < 0 || delta < 0) throw Error(ErrorCode::InvalidInput, "mu and delta must be nonnegative");
  for (long v : {c.h1_Omega, c.h2_Omega, c.h3_Omega, c.h4_Omega, c.h0_2Y_K, c.h0_Y_K, c.h3_minus2Y,
                 c.h4_Omega_minusY, c.h2_OX})
    if (v < 0) throw Error(ErrorCode::InvalidInput, "cohomology dimensions must be nonnegative");
  HodgeReport r;
  r.formula_id = "big_general";
  r.mu = mu;
  r.delta = delta;
  r.h11 = c.h1_Omega + mu + delta + c.h3_minus2Y;
  if (c.h2_OX == 0)
    r.h12 = c.h0_2Y_K + c.h4_Omega - c.h0_Y_K - c.h3_Omega - c.h4_Omega_minusY - mu + delta;
  else if (require_h12)
    throw Error(ErrorCode::AssumptionViolated, "h12 formula needs h2(O_X) = 0");
  return r;
}

namespace {

void validate(const CoverSpec& s) {
  if (s.n < 2) throw Error(ErrorCode::UnsupportedCover, "cover degree must be at least 2");
  if (s.d % s.n != 0 || s.d <= s.n)
    throw Error(ErrorCode::DivisibilityError,
                "need n | d and d > n, got d = " + std::to_string(s.d) + ", n = " + std::to_string(s.n));
  for (const auto& [t, count] : s.inventory)
    if (count < 0) throw Error(ErrorCode::InvalidInput, "negative count for " + t.to_string());
}

long count(const Inventory& inv) {
  long total = 0;
  for (const auto& [t, c] : inv) total += c;
  return total;
}

bool only(const Inventory& inv, const ADEType& t) {
  for (const auto& [u, c] : inv)
    if (c != 0 && u != t) return false;
  return true;
}

bool odd_a_only(const Inventory& inv) {
  for (const auto& [u, c] : inv)
    if (c != 0 && (u.family != Family::A || u.index % 2 == 0)) return false;
  return true;
}

// sum over odd A points of (k+1) = (m+1)/2
long odd_a_weight(const Inventory& inv) {
  long total = 0;
  for (const auto& [u, c] : inv) total += c * (u.index + 1) / 2;
  return total;
}

bool triple_sextic(const CoverSpec& s) { return s.n == 3 && s.d == 6 && only(s.inventory, ADEType::make(Family::A, 2)); }
bool double_octic(const CoverSpec& s) { return s.n == 2 && s.d == 8 && odd_a_only(s.inventory); }

long rank_named(const std::vector<NamedRank>& ranks, std::size_t i) {
  if (i >= ranks.size()) throw Error(ErrorCode::InvalidInput, "missing rank input " + std::to_string(i));
  return ranks[i].result.rank;
}

}  // namespace

HodgeReport hodge_big_cover(const CoverSpec& spec, long delta) {
  validate(spec);
  if (delta < 0) throw Error(ErrorCode::InvalidInput, "delta must be nonnegative");
  const bool any = count(spec.inventory) > 0;
  HodgeReport r;
  if (!any) {
    r.formula_id = "cover_smooth";
  } else if (spec.branch_nodal && only(spec.inventory, ADEType::make(Family::A, 1))) {
    r.formula_id = spec.n == 2 ? "double" : "nfold";
  } else if (spec.branch_cuspidal && spec.n == 3 && only(spec.inventory, ADEType::make(Family::A, 2))) {
    r.formula_id = "triple";
  } else if (spec.branch_du_val && spec.n == 2) {
    r.formula_id = "double";
  } else {
    throw Error(ErrorCode::UnsupportedCover, "no cover formula for n = " + std::to_string(spec.n) +
                                                 " with the given inventory and flags");
  }
  Inventory lifted;
  for (const auto& [t, c] : spec.inventory)
    if (c != 0) lifted[lift_type(t, spec.n)] += c;
  const long mu = mu_and_near_points(lifted).mu;
  const int w = spec.d / spec.n;
  long h12 = 0;
  for (int j = 1; j <= spec.n - 1; ++j)
    h12 += binomial_ll(spec.d + j * w - 1, 3) - 4 * binomial_ll(j * w, 3);
  r.resolution = Resolution::Big;
  r.mu = mu;
  r.delta = delta;
  r.h11 = 1 + mu + delta;
  r.h12 = h12 - mu + delta;
  r.h3_O = weighted_sections((spec.n - 1) * w - 4, w);
  // h1(O) = h2(O) = 0, so e = 2(1 + h11 - h30 - h12)
  r.euler = 2 * (1 + r.h11 - *r.h3_O - *r.h12);
  return r;
}

HodgeReport hodge_small(const CoverSpec& spec, const std::vector<NamedRank>& ranks) {
  validate(spec);
  HodgeReport r;
  r.resolution = Resolution::Small;
  r.rank_inputs = ranks;
  if (triple_sextic(spec)) {
    const long nu = count(spec.inventory);
    const long r4 = rank_named(ranks, 0), r6 = rank_named(ranks, 1);
    r.formula_id = "triple_sextic_small";
    r.mu = 4 * nu;
    r.delta = 4 * nu - r4 - r6;
    r.h11 = 1 + 3 * nu - r4 - r6;
    r.h12 = 103 - r4 - r6;
  } else if (double_octic(spec)) {
    const long weight = odd_a_weight(spec.inventory);
    const long r8 = rank_named(ranks, 0);
    r.formula_id = "double_octic_small";
    r.mu = weight;
    r.delta = weight - r8;
    r.h11 = 1 + weight - r8;
    r.h12 = 149 - r8;
  } else {
    throw Error(ErrorCode::UnsupportedCover, "small resolutions are covered for triple sextics with cusps and "
                                             "double octics with odd A points only");
  }
  r.h3_O = 1;
  r.euler = 2 * (r.h11 - *r.h12);
  return r;
}

namespace {

// h4 of the exceptional divisors of the big resolution, summed over the points
long fiber_h4(const CoverSpec& spec) {
  if (spec.n == 3 && only(spec.inventory, ADEType::make(Family::A, 2))) return 5 * count(spec.inventory);
  if (spec.n == 2 && odd_a_only(spec.inventory)) return odd_a_weight(spec.inventory);
  throw Error(ErrorCode::UnsupportedFiberTopology, "exceptional fibers known for cusps under triple covers and "
                                                   "odd A points under double covers only");
}

}  // namespace

HodgeReport small_to_big(const CoverSpec& spec, const HodgeReport& small) {
  validate(spec);
  HodgeReport r = small;
  r.resolution = Resolution::Big;
  r.formula_id = small.formula_id + "_to_big";
  r.h11 = small.h11 + fiber_h4(spec);
  r.euler.reset();
  if (r.h12 && r.h3_O) r.euler = 2 * (1 + r.h11 - *r.h3_O - *r.h12);
  r.checks.clear();
  return r;
}

HodgeReport big_to_small(const CoverSpec& spec, const HodgeReport& big) {
  validate(spec);
  HodgeReport r = big;
  r.resolution = Resolution::Small;
  r.formula_id = big.formula_id + "_to_small";
  r.h11 = big.h11 - fiber_h4(spec);
  r.euler.reset();
  if (r.h12 && r.h3_O) r.euler = 2 * (1 + r.h11 - *r.h3_O - *r.h12);
  r.checks.clear();
  return r;
}

Check euler_check(const HodgeReport& small, const CoverSpec& spec) {
  Check c{"euler", false, 0, 0};
  if (!small.h12) return c;
  c.lhs = 2 * (small.h11 - *small.h12);
  if (triple_sextic(spec))
    c.rhs = 6 * count(spec.inventory) - 204;
  else if (double_octic(spec))
    c.rhs = 2 * odd_a_weight(spec.inventory) - 296;
  else
    return c;
  c.pass = c.lhs == c.rhs;
  return c;
}

Check path_independence(const HodgeReport& big, const HodgeReport& small, const CoverSpec& spec) {
  Check c{"path_independence", false, big.h11, 0};
  HodgeReport shifted = small_to_big(spec, small);
  c.rhs = shifted.h11;
  c.pass = big.h11 == shifted.h11 && big.h12 == shifted.h12;
  return c;
}

}  // namespace ade
