#ifndef TRDMO_BENCH_TRANSFORMS_HPP
#define TRDMO_BENCH_TRANSFORMS_HPP

namespace trdmo::bench {

// Landscape transformations used by the _iso and _dec problem variants.
// Both map [0,1] onto [0,1]. Parameters follow the usual (A, B, C)
// convention: the variants fix B and C below and tie A to the moving
// optimum G(t).

inline constexpr double kIsoDecParamB = 0.001;
inline constexpr double kIsoDecParamC = 0.05;

/// Piecewise-linear ramp with a flat plateau of value a over [b, c].
double flat_region(double y, double a, double b, double c);

/// Deceptive well: 0 at y == a, value c at y in {0, 1}, walls reaching 1 at
/// y == a +- b. Requires b < a < 1 - b.
double deceptive(double y, double a, double b, double c);

}  // namespace trdmo::bench

#endif
