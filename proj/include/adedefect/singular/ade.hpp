#pragma once

#include <map>
#include <string>
#include <vector>

namespace ade {

enum class Family { A, D, E };

/// A rational double point type. Construct through make() to get validation.
struct ADEType {
  Family family = Family::A;
  int index = 1;

  /// Throws InvalidIndex unless A_m (m >= 1), D_m (m >= 4) or E_6..E_8.
  static ADEType make(Family family, int index);
  /// Parses "A3", "D4", "E6".
  static ADEType parse(const std::string& text);
  std::string to_string() const;
  bool valid() const;

  /// Contribution to mu: the point itself plus its infinitely near singular points.
  int mu() const;
  int infinitely_near() const { return mu() - 1; }

  friend bool operator==(const ADEType& a, const ADEType& b) { return a.family == b.family && a.index == b.index; }
  friend bool operator!=(const ADEType& a, const ADEType& b) { return !(a == b); }
  friend bool operator<(const ADEType& a, const ADEType& b) {
    return a.family != b.family ? a.family < b.family : a.index < b.index;
  }
};

/// Counts of singular points per type.
using Inventory = std::map<ADEType, long>;

struct MuTerm {
  ADEType type;
  long count = 0;
  long mu = 0;
  long near_points = 0;
};

struct MuReport {
  long mu = 0;
  long near_points = 0;
  std::vector<MuTerm> terms;
};

MuReport mu_and_near_points(const Inventory& inventory);

/// Type of the n-fold cyclic cover singularity over a branch point of the given type.
ADEType lift_type(const ADEType& branch, int cover_degree);

}  // namespace ade
