#pragma once

namespace geocoreset {

// Absolute tolerances used throughout the library. Instances are expected to
// live in a coordinate box of diameter ~1e3 (the generators normalize into
// [0,1000]^2), so an absolute distance tolerance is meaningful.
inline constexpr double kDistTol = 1e-9;   // distances / coordinates
inline constexpr double kAngleTol = 1e-12; // angles, radians

} // namespace geocoreset
