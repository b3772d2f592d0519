#pragma once

#include <string>

namespace lrel {

/// One machine-checkable claim: `residual` was compared against `tolerance`.
struct Certificate {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

}  // namespace lrel
