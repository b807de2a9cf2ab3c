#include "adedefect/defect/defect.hpp"

#include "adedefect/error.hpp"
#include "adedefect/singular/ade.hpp"

namespace ade {

long DefectResult::component(const std::string& name) const {
  for (const auto& [k, v] : components)
    if (k == name) return v;
  throw Error(ErrorCode::InvalidInput, "no component '" + name + "'");
}

NamedRank named_rank(const std::string& name, const ConditionMatrix& m, const RankOptions& options) {
  return {name, m.degree(), m.rows(), m.cols(), rank(m, options.backend, options.precision)};
}

namespace {

void finish(DefectResult& r) {
  for (const auto& nr : r.ranks) r.certified = r.certified && nr.result.certified;
  if (r.delta < 0)
    throw Error(ErrorCode::AssumptionViolated, r.formula + " gave a negative defect " + std::to_string(r.delta));
}

std::vector<ProjectivePoint> points_of(const std::vector<SingularPointRecord>& records) {
  std::vector<ProjectivePoint> out;
  for (const auto& r : records) out.push_back(r.point);
  return out;
}

}  // namespace

DefectResult defect_triple(int d, const std::vector<SingularPointRecord>& cusps, const RankOptions& options) {
  if (d % 3 != 0) throw Error(ErrorCode::DivisibilityError, "triple cover needs 3 | d, got d = " + std::to_string(d));
  if (d < 6) throw Error(ErrorCode::InvalidInput, "triple cover needs d >= 6");
  const int low = 4 * d / 3 - 4, high = 5 * d / 3 - 4;
  DefectResult r;
  r.formula = "triple_cusp";
  r.ranks.push_back(named_rank("vanishing", build_vanishing_matrix(low, points_of(cusps)), options));
  ConditionMatrix m6 = build_condition_matrix(high, cusps, Specialization::TripleCusp);
  r.ranks.push_back(named_rank("triple_cusp", m6, options));
  const long a2 = static_cast<long>(cusps.size());
  const long r4 = r.ranks[0].result.rank, r6 = r.ranks[1].result.rank;

  // the long form, term by term
  const long dim_v = binomial_ll(high + 3, 3) - r6;
  const long h0_ideal = binomial_ll(low + 3, 3) - r4;
  r.delta = dim_v - binomial_ll(high + 3, 3) + h0_ideal - binomial_ll(low + 3, 3) + 4 * a2;
  r.components = {{"a2", a2},           {"mu", 4 * a2},          {"rank_low", r4},
                  {"rank_high", r6},    {"dim_V", dim_v},        {"h0_ideal", h0_ideal},
                  {"short_form", 4 * a2 - r4 - r6}};
  r.frame_dependent = m6.frame_dependent();
  finish(r);
  return r;
}

DefectResult defect_double(int d, const std::vector<SingularPointRecord>& records, const RankOptions& options) {
  if (d % 2 != 0) throw Error(ErrorCode::DivisibilityError, "double cover needs 2 | d, got d = " + std::to_string(d));
  if (d < 4) throw Error(ErrorCode::InvalidInput, "double cover needs d >= 4");
  bool chain = true;
  Inventory inv;
  for (const auto& rec : records) {
    chain = chain && rec.ade.family == Family::A;
    ++inv[rec.ade];
  }
  const Specialization spec = chain ? Specialization::DoubleAChain : Specialization::GeneralLinearFrame;
  const int degree = 3 * d / 2 - 4;
  ConditionMatrix m = build_condition_matrix(degree, records, spec);
  DefectResult r;
  r.formula = to_string(spec);
  r.ranks.push_back(named_rank(r.formula, m, options));
  const long mu = mu_and_near_points(inv).mu;
  const long rk = r.ranks[0].result.rank;
  const long dim_v = binomial_ll(degree + 3, 3) - rk;
  r.delta = dim_v - binomial_ll(degree + 3, 3) + mu;
  r.components = {{"mu", mu}, {"rank", rk}, {"dim_V", dim_v}, {"columns", static_cast<long>(m.cols())}};
  r.frame_dependent = m.frame_dependent();
  finish(r);
  return r;
}

DefectResult defect_nfold(int d, int n, const std::vector<ProjectivePoint>& nodes, const RankOptions& options) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "cover degree must be at least 2");
  if (d % n != 0)
    throw Error(ErrorCode::DivisibilityError,
                "n-fold cover needs n | d, got d = " + std::to_string(d) + ", n = " + std::to_string(n));
  if (d <= n) throw Error(ErrorCode::InvalidInput, "n-fold cover needs d > n");
  DefectResult r;
  r.formula = "nfold_nodal";
  const long a1 = static_cast<long>(nodes.size());
  long delta = (n / 2) * a1;  // ceil((n-1)/2) = floor(n/2)
  r.components.push_back({"a1", a1});
  for (int j = (n + 1) / 2; j <= n - 1; ++j) {
    const int degree = d + j * d / n - 4;
    r.ranks.push_back(named_rank("vanishing_j" + std::to_string(j), build_vanishing_matrix(degree, nodes), options));
    const long rk = r.ranks.back().result.rank;
    r.components.push_back({"rank_j" + std::to_string(j), rk});
    delta -= rk;
  }
  r.delta = delta;
  finish(r);
  return r;
}

}  // namespace ade
