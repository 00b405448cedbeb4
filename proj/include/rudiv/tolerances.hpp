// tolerances.hpp — project-wide numeric tolerances

#pragma once

namespace rudiv {

inline constexpr double kPhaseTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kProbSumTol = 1e-10;
inline constexpr double kProbNonnegTol = 1e-10;
inline constexpr double kImagResidueTol = 1e-9;
inline constexpr double kSingularityFloor = 1e-12;
inline constexpr double kInequalityTol = 1e-10;
inline constexpr double kFalsifierThreshold = 1e-9;
inline constexpr double kFalsifierConvergence = 1e-10;
inline constexpr int kFalsifierMaxIterations = 50;

} // namespace rudiv
