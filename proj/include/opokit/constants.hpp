#pragma once

namespace opokit {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;

// Gaussian FWHM = 2*sqrt(2*ln 2) * sigma
inline constexpr double kFwhmPerSigma = 2.3548200450309493;

}  // namespace opokit
