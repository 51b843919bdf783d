#pragma once

namespace rabilimit {

// 2019 SI exact values.
inline constexpr double kPlanck = 6.62607015e-34;     // J s
inline constexpr double kSpeedOfLight = 299792458.0;  // m / s

// Poisson mass allowed to fall outside a truncation window unless the
// caller asks for something else.
inline constexpr double kDefaultTailTol = 1e-12;

}  // namespace rabilimit
