#pragma once

#include <cstddef>

namespace ge::tol {

// Representation theory
inline constexpr double kUnitarity = 1e-12;
inline constexpr double kPeterWeyl = 1e-12;
inline constexpr double kCharacterClass = 1e-12;
inline constexpr double kHomomorphism = 1e-10;
inline constexpr double kMultiplicityRounding = 1e-9;
inline constexpr double kProjectorIdempotent = 1e-10;

// States and gauge structure
inline constexpr double kNorm = 1e-12;
inline constexpr double kGauss = 1e-10;

// Density matrices and entropies
inline constexpr double kDensityMatrix = 1e-8;
inline constexpr double kHermiticity = 1e-10;
inline constexpr double kEigenvalueFloor = 1e-12;
inline constexpr double kSectorProbabilityFloor = 1e-12;
inline constexpr double kProbabilitySum = 1e-9;
inline constexpr double kEntropySplit = 1e-8;
inline constexpr double kSpectrumGrouping = 1e-9;
inline constexpr double kSchmidtProduct = 1e-10;
inline constexpr double kFlatSpectrum = 1e-9;

// Gauging
inline constexpr double kGaugingEquality = 1e-8;
inline constexpr double kGaugingSpectrum = 1e-9;

// Solver
inline constexpr double kSolverTol = 1e-8;
inline constexpr double kDegenerateGap = 1e-6;
inline constexpr std::size_t kSolverMaxMatvec = 5000;

// Perturbative exactness
inline constexpr double kPerturbativeExact = 1e-10;
inline constexpr double kBinomialIdentity = 1e-12;

// Resource caps
inline constexpr std::size_t kDefaultMaxDim = 2000000;
inline constexpr std::size_t kMaxSectors = 100000;
inline constexpr std::size_t kMaxDenseSide = 4096;

} // namespace ge::tol
