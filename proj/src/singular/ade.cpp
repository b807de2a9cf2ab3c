#include "adedefect/singular/ade.hpp"

#include <cctype>

#include "adedefect/error.hpp"

namespace ade {

bool ADEType::valid() const {
  switch (family) {
    case Family::A: return index >= 1;
    case Family::D: return index >= 4;
    case Family::E: return index >= 6 && index <= 8;
  }
  return false;
}

ADEType ADEType::make(Family family, int index) {
  ADEType t{family, index};
  if (!t.valid()) throw Error(ErrorCode::InvalidIndex, "no singularity of type " + t.to_string());
  return t;
}

ADEType ADEType::parse(const std::string& text) {
  if (text.size() < 2) throw Error(ErrorCode::InvalidInput, "bad singularity type '" + text + "'");
  Family f;
  switch (text[0]) {
    case 'A': f = Family::A; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    default: throw Error(ErrorCode::InvalidInput, "bad singularity type '" + text + "'");
  }
  for (std::size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorCode::InvalidInput, "bad singularity type '" + text + "'");
  if (text.size() > 6) throw Error(ErrorCode::InvalidIndex, "index too large in '" + text + "'");
  return make(f, std::stoi(text.substr(1)));
}

std::string ADEType::to_string() const {
  const char* f = family == Family::A ? "A" : family == Family::D ? "D" : "E";
  return f + std::to_string(index);
}

int ADEType::mu() const {
  if (!valid()) throw Error(ErrorCode::InvalidIndex, "no singularity of type " + to_string());
  switch (family) {
    case Family::A: return (index + 1) / 2;
    case Family::D: return 2 * (index / 2);
    case Family::E: return index == 6 ? 4 : index;
  }
  return 0;
}

MuReport mu_and_near_points(const Inventory& inventory) {
  MuReport r;
  for (const auto& [type, count] : inventory) {
    if (!type.valid()) throw Error(ErrorCode::InvalidIndex, "no singularity of type " + type.to_string());
    if (count < 0) throw Error(ErrorCode::InvalidInput, "negative count for " + type.to_string());
    if (count == 0) continue;
    MuTerm t{type, count, count * type.mu(), count * type.infinitely_near()};
    r.mu += t.mu;
    r.near_points += t.near_points;
    r.terms.push_back(t);
  }
  return r;
}

ADEType lift_type(const ADEType& branch, int n) {
  if (!branch.valid()) throw Error(ErrorCode::InvalidIndex, "no singularity of type " + branch.to_string());
  if (n < 2) throw Error(ErrorCode::UnsupportedLift, "cover degree must be at least 2");
  if (n == 2) return branch;
  if (branch.family == Family::A && branch.index == 1) return ADEType::make(Family::A, n - 1);
  if (n == 3 && branch.family == Family::A && branch.index == 2) return ADEType::make(Family::D, 4);
  throw Error(ErrorCode::UnsupportedLift,
              "no lift of " + branch.to_string() + " to a degree " + std::to_string(n) + " cover");
}

}  // namespace ade
