#pragma once

#include <string>
#include <vector>

#include "eqsing/family.hpp"
#include "eqsing/parse.hpp"

namespace testutil {

inline eqsing::Parametrization param(const std::vector<std::string>& exprs) {
  return eqsing::Parametrization::parse(exprs);
}

inline eqsing::BiPoly bp(const std::string& s) { return eqsing::parse_poly(s, {"a", "t"}); }

inline eqsing::Scalar c_sym() { return eqsing::Scalar::symbol(eqsing::kArcVar); }

}  // namespace testutil
