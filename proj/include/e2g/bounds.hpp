#pragma once

#include <cstddef>

namespace e2g {

/// Shared limits for the exhaustive checkers.
struct Bounds {
  int max_arity = 3;
  std::size_t max_order = 6;
  std::size_t cap = 1000000;  // instances per check
};

}  // namespace e2g
