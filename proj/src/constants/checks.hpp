#pragma once

#include "normpow/error.hpp"

#include <string>

namespace normpow::detail {

inline void check_p_nu(int p, double nu) {
  if (p < 0) throw DomainError("p must be non-negative, got " + std::to_string(p));
  if (!(nu >= 0.0 && nu <= 1.0)) throw DomainError("nu must lie in [0, 1], got " + std::to_string(nu));
}

}  // namespace normpow::detail
