#pragma once

#include <string>
#include <vector>

#include "adedefect/defect/condition.hpp"
#include "adedefect/defect/rank.hpp"

namespace ade {

struct NamedRank {
  std::string name;
  int degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  RankResult result;
};

struct DefectResult {
  long delta = 0;
  /// Intermediate dimensions by name, in the order they were computed.
  std::vector<std::pair<std::string, long>> components;
  std::string formula;
  std::vector<NamedRank> ranks;
  bool certified = true;
  bool frame_dependent = false;

  long component(const std::string& name) const;
};

struct RankOptions {
  Backend backend = Backend::Auto;
  long precision = 256;
};

/// Triple cover of P3 branched along a cuspidal surface of degree d (3 | d).
/// delta = 4 a2 - rank(values at degree 4d/3-4) - rank(value and v1 at degree 5d/3-4).
DefectResult defect_triple(int d, const std::vector<SingularPointRecord>& cusps, const RankOptions& options = {});

/// Double cover branched along a Du Val surface of even degree d.
/// delta = mu - rank(condition matrix at degree 3d/2-4).
DefectResult defect_double(int d, const std::vector<SingularPointRecord>& records, const RankOptions& options = {});

/// Cyclic n-fold cover branched along a nodal surface (n | d, d > n).
DefectResult defect_nfold(int d, int n, const std::vector<ProjectivePoint>& nodes, const RankOptions& options = {});

/// Rank with bookkeeping for DefectResult::ranks.
NamedRank named_rank(const std::string& name, const ConditionMatrix& m, const RankOptions& options);

}  // namespace ade
