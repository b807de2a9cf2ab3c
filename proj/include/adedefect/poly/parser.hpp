#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "adedefect/poly/multipoly.hpp"

namespace ade {

struct ParseOptions {
  /// Raise NonHomogeneous unless every term has the same total degree.
  bool require_homogeneous = false;
};

/// Grammar: sums and differences of products of factors; a factor is a
/// rational literal, a variable from `variables`, or a parenthesized
/// expression, optionally raised to a nonnegative integer power with '^'.
/// Division is accepted only by nonzero constants.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables,
                     ParseOptions options = {});

}  // namespace ade
