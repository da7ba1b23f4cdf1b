#pragma once

#include <cstddef>
#include <vector>

namespace fdg {

using Vector = std::vector<double>;
using IndexSet = std::vector<std::size_t>;

/// Machine precision of IEEE-754 binary64, 2^-52.
inline constexpr double kMachineEpsilon = 0x1.0p-52;

/// Estimation coefficient of the roundoff-error bound, eps / (1 - eps).
/// The DG2 convention 2*eps / (1 - 2*eps) differs only at the 1e-16 scale.
inline constexpr double kErrorCoefficient = kMachineEpsilon / (1.0 - kMachineEpsilon);

}  // namespace fdg
