#pragma once

#include "plateau/spectral.hpp"

#include <string>
#include <vector>

namespace plateau {

struct BatteryEntry {
    std::string name;
    PFunction f;
};

// Quadratic forms for p in {3,5}, n <= 6, every s with n-s >= 2 and both types, plus two-level quadratics
// with mismatched types (non-weakly regular, 0 < k < p^{n-s}).
std::vector<BatteryEntry> builtin_battery();
// Battery plus both worked examples.
std::vector<BatteryEntry> extended_battery();

}  // namespace plateau
