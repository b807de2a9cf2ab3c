#include <functional>
#include <random>

#include "adedefect/error.hpp"
#include "adedefect/hodge/hodge.hpp"
#include "adedefect/numbers/rational.hpp"
#include "doctest.h"

using namespace ade;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

const ADEType kA1 = ADEType::make(Family::A, 1);
const ADEType kA2 = ADEType::make(Family::A, 2);
const ADEType kA3 = ADEType::make(Family::A, 3);

long c3(long n) { return binomial_ll(n, 3); }
long c4(long n) { return binomial_ll(n, 4); }

std::vector<NamedRank> ranks(std::initializer_list<long> rs) {
  std::vector<NamedRank> out;
  for (long r : rs) out.push_back({"r", 0, 0, 0, {r, Backend::Exact, true, 0}});
  return out;
}

// Monomials y0^a y1^b y2^c y3^e y4^f of weighted degree k, counted one by one.
long count_weighted(int k, int w) {
  long n = 0;
  for (int f = 0; f * w <= k; ++f)
    for (int a = 0; a <= k - f * w; ++a)
      for (int b = 0; a + b <= k - f * w; ++b)
        for (int c = 0; a + b + c <= k - f * w; ++c) ++n;
  return n;
}

}  // namespace

TEST_CASE("weighted_sections: brute-force monomial count") {
  for (int w = 1; w <= 5; ++w)
    for (int k = -3; k <= 20; ++k) CHECK(weighted_sections(k, w) == (k < 0 ? 0 : count_weighted(k, w)));
  CHECK(code_of([] { weighted_sections(3, 0); }) == ErrorCode::InvalidInput);
}

TEST_CASE("toric inputs for P4: the twisted one-forms match the Euler sequence count") {
  for (int d = 1; d <= 14; ++d) {
    CohomologyInputs c = toric_inputs_p4(d);
    CHECK(c.h4_Omega_minusY == 5 * c4(d) - c4(d - 1));
    CHECK(c.h0_2Y_K == c4(2 * d - 1));
    CHECK(c.h0_Y_K == c4(d - 1));
  }
}

TEST_CASE("hodge_big_general: examples") {
  HodgeReport smooth = hodge_big_general(toric_inputs_p4(5), 0, 0);
  REQUIRE(smooth.h12);
  CHECK(*smooth.h12 == c4(9) - 5 * c4(5));
  CHECK(*smooth.h12 == 101);
  CHECK(smooth.h11 == 1);

  CohomologyInputs bare;
  bare.h1_Omega = 1;
  CHECK(hodge_big_general(bare, 0, 0).h11 == 1);

  CohomologyInputs bad = bare;
  bad.h2_OX = 1;
  CHECK(code_of([&] { hodge_big_general(bad, 0, 0); }) == ErrorCode::AssumptionViolated);
  CHECK_FALSE(hodge_big_general(bad, 0, 0, false).h12);
  CHECK(code_of([&] { hodge_big_general(bare, -1, 0); }) == ErrorCode::InvalidInput);
  bad = bare;
  bad.h3_Omega = -2;
  CHECK(code_of([&] { hodge_big_general(bad, 0, 0); }) == ErrorCode::InvalidInput);
}

TEST_CASE("hodge_big_general: P4 hypersurfaces in terms of dim V") {
  // delta = dim V - C(2d-1, 4) + mu
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 3 + trial % 6;
    const long mu = std::uniform_int_distribution<long>(0, 40)(rng);
    const long rank = std::uniform_int_distribution<long>(0, std::min<long>(mu, c4(2 * d - 1)))(rng);
    const long dim_v = c4(2 * d - 1) - rank;
    const long delta = dim_v - c4(2 * d - 1) + mu;
    HodgeReport r = hodge_big_general(toric_inputs_p4(d), mu, delta);
    CHECK(r.h11 == 1 + 2 * mu + dim_v - c4(2 * d - 1));
    CHECK(*r.h12 == dim_v - 5 * c4(d));
  }
}

TEST_CASE("hodge_big_cover: smooth branch constants") {
  HodgeReport octic = hodge_big_cover(CoverSpec::from_inventory(8, 2, {}), 0);
  CHECK(*octic.h12 == c3(11) - 4 * c3(4));
  CHECK(*octic.h12 == 149);
  CHECK(octic.h11 == 1);
  CHECK(*octic.h3_O == 1);
  CHECK(octic.formula_id == "cover_smooth");

  HodgeReport sextic = hodge_big_cover(CoverSpec::from_inventory(6, 3, {}), 0);
  CHECK(*sextic.h12 == c3(7) + c3(9) - 4 * (c3(4) + c3(2)));
  CHECK(*sextic.h12 == 103);
  CHECK(*sextic.h3_O == 1);
}

TEST_CASE("hodge_big_cover: thirty cusps under the triple cover") {
  HodgeReport r = hodge_big_cover(CoverSpec::from_inventory(6, 3, {{kA2, 30}}), 40);
  CHECK(r.formula_id == "triple");
  CHECK(r.mu == 120);
  CHECK(r.h11 == 161);
  CHECK(*r.h12 == 103 - 120 + 40);
}

TEST_CASE("hodge_big_cover: errors") {
  CHECK(code_of([] { hodge_big_cover(CoverSpec::from_inventory(7, 2, {}), 0); }) == ErrorCode::DivisibilityError);
  CHECK(code_of([] { hodge_big_cover(CoverSpec::from_inventory(2, 2, {}), 0); }) == ErrorCode::DivisibilityError);
  CHECK(code_of([] { hodge_big_cover(CoverSpec::from_inventory(6, 1, {}), 0); }) == ErrorCode::UnsupportedCover);
  // cusps under a cover of degree other than 3
  CHECK(code_of([] { hodge_big_cover(CoverSpec::from_inventory(8, 4, {{kA2, 2}}), 0); }) ==
        ErrorCode::UnsupportedCover);
  CoverSpec flagless = CoverSpec::from_inventory(8, 2, {{kA3, 2}});
  flagless.branch_du_val = false;
  CHECK(code_of([&] { hodge_big_cover(flagless, 0); }) == ErrorCode::UnsupportedCover);
  CHECK(code_of([] { hodge_big_cover(CoverSpec::from_inventory(8, 2, {{kA1, -1}}), 0); }) ==
        ErrorCode::InvalidInput);
}

TEST_CASE("hodge_big_cover: the n-fold formula at n = 2 is the double solid formula") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 * std::uniform_int_distribution<int>(2, 8)(rng);
    const long a1 = std::uniform_int_distribution<long>(0, 200)(rng);
    const long delta = std::uniform_int_distribution<long>(0, 80)(rng);
    HodgeReport r = hodge_big_cover(CoverSpec::from_inventory(d, 2, {{kA1, a1}}), delta);
    CHECK(r.h11 == 1 + a1 + delta);
    CHECK(*r.h12 == c3(3 * d / 2 - 1) - 4 * c3(d / 2) - a1 + delta);
  }
}

TEST_CASE("hodge_big_cover: agrees with the general formula on the weighted ambient space") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const int w = std::uniform_int_distribution<int>(1, 5)(rng);
    const int d = n * w;
    if (d <= n) continue;
    const long a1 = std::uniform_int_distribution<long>(0, 60)(rng);
    const long delta = std::uniform_int_distribution<long>(0, 30)(rng);
    HodgeReport cover = hodge_big_cover(CoverSpec::from_inventory(d, n, {{kA1, a1}}), delta);
    HodgeReport general = hodge_big_general(toric_inputs_cover(d, n), cover.mu, delta);
    CHECK(general.h11 == cover.h11);
    CHECK(*general.h12 == *cover.h12);
  }
}

TEST_CASE("hodge_small: examples") {
  HodgeReport s30 = hodge_small(CoverSpec::from_inventory(6, 3, {{kA2, 30}}), ranks({25, 55}));
  CHECK(s30.h11 == 11);
  CHECK(*s30.h12 == 23);
  CHECK(*s30.euler == 2 * (11 - 23));
  CHECK(s30.resolution == Resolution::Small);

  HodgeReport row1 = hodge_small(CoverSpec::from_inventory(6, 3, {{kA2, 10}}), ranks({9, 19}));
  CHECK(row1.h11 == 3);
  CHECK(*row1.h12 == 75);

  HodgeReport octic = hodge_small(CoverSpec::from_inventory(8, 2, {{kA3, 64}}), ranks({122}));
  CHECK(octic.h11 == 7);
  CHECK(*octic.h12 == 27);

  CHECK(code_of([] { hodge_small(CoverSpec::from_inventory(8, 2, {{kA2, 1}}), ranks({1})); }) ==
        ErrorCode::UnsupportedCover);
  CHECK(code_of([] { hodge_small(CoverSpec::from_inventory(12, 3, {{kA2, 1}}), ranks({1, 1})); }) ==
        ErrorCode::UnsupportedCover);
  CHECK(code_of([] { hodge_small(CoverSpec::from_inventory(6, 3, {{kA2, 1}}), ranks({1})); }) ==
        ErrorCode::InvalidInput);
}

TEST_CASE("small and big resolutions: conversions") {
  CoverSpec s30 = CoverSpec::from_inventory(6, 3, {{kA2, 30}});
  HodgeReport small = hodge_small(s30, ranks({25, 55}));
  HodgeReport big = small_to_big(s30, small);
  CHECK(big.h11 == 161);
  CHECK(*big.h12 == 23);
  CHECK(big.resolution == Resolution::Big);
  CHECK(big_to_small(s30, big).h11 == 11);

  CoverSpec oct = CoverSpec::from_inventory(8, 2, {{kA3, 64}});
  CHECK(small_to_big(oct, hodge_small(oct, ranks({122}))).h11 == 135);

  CoverSpec smooth = CoverSpec::from_inventory(6, 3, {});
  HodgeReport s0 = hodge_small(smooth, ranks({0, 0}));
  CHECK(small_to_big(smooth, s0).h11 == s0.h11);

  CoverSpec d4 = CoverSpec::from_inventory(8, 2, {{ADEType::make(Family::D, 4), 1}});
  CHECK(code_of([&] { small_to_big(d4, s0); }) == ErrorCode::UnsupportedFiberTopology);
  CHECK(code_of([&] { big_to_small(d4, s0); }) == ErrorCode::UnsupportedFiberTopology);
}

TEST_CASE("euler_check: examples") {
  CoverSpec s30 = CoverSpec::from_inventory(6, 3, {{kA2, 30}});
  Check c = euler_check(hodge_small(s30, ranks({25, 55})), s30);
  CHECK(c.pass);
  CHECK(c.lhs == -24);
  CHECK(c.rhs == 6 * 30 - 204);

  CoverSpec oct = CoverSpec::from_inventory(8, 2, {{kA3, 64}});
  Check o = euler_check(hodge_small(oct, ranks({122})), oct);
  CHECK(o.pass);
  CHECK(o.lhs == -40);
  CHECK(o.rhs == 2 * 128 - 296);

  CoverSpec smooth = CoverSpec::from_inventory(6, 3, {});
  Check z = euler_check(hodge_small(smooth, ranks({0, 0})), smooth);
  CHECK(z.pass);
  CHECK(z.lhs == -204);

  HodgeReport wrong = hodge_small(s30, ranks({25, 55}));
  wrong.h11 += 1;
  CHECK_FALSE(euler_check(wrong, s30).pass);
}

TEST_CASE("path independence and the Euler remark on random cusp and A-chain data") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const long nu = std::uniform_int_distribution<long>(0, 37)(rng);
    const long r4 = std::uniform_int_distribution<long>(0, std::min<long>(nu, 35))(rng);
    const long r6 = std::uniform_int_distribution<long>(0, std::min<long>(2 * nu, 84))(rng);
    CoverSpec spec = CoverSpec::from_inventory(6, 3, {{kA2, nu}});
    HodgeReport small = hodge_small(spec, ranks({r4, r6}));
    HodgeReport big = hodge_big_cover(spec, 4 * nu - r4 - r6);
    CHECK(path_independence(big, small, spec).pass);
    CHECK(euler_check(small, spec).pass);
  }
  for (int trial = 0; trial < 200; ++trial) {
    Inventory inv;
    long weight = 0;
    for (int k = 0; k < 3; ++k) {
      const long count = std::uniform_int_distribution<long>(0, 20)(rng);
      inv[ADEType::make(Family::A, 2 * k + 1)] = count;
      weight += count * (k + 1);
    }
    const long r8 = std::uniform_int_distribution<long>(0, std::min<long>(weight, 165))(rng);
    CoverSpec spec = CoverSpec::from_inventory(8, 2, inv);
    HodgeReport small = hodge_small(spec, ranks({r8}));
    HodgeReport big = hodge_big_cover(spec, weight - r8);
    CHECK(big.mu == weight);
    CHECK(path_independence(big, small, spec).pass);
    CHECK(euler_check(small, spec).pass);
  }
}

TEST_CASE("big resolution Euler number") {
  HodgeReport r = hodge_big_cover(CoverSpec::from_inventory(8, 2, {{kA3, 64}}), 6);
  CHECK(*r.euler == 2 * (1 + r.h11 - *r.h3_O - *r.h12));
  CHECK(*r.euler == 2 * (135 - 27));
  HodgeReport quartic = hodge_big_cover(CoverSpec::from_inventory(12, 3, {}), 0);
  CHECK(*quartic.h3_O == weighted_sections(4, 4));
}
