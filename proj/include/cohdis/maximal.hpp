#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "cohdis/density_matrix.hpp"
#include "cohdis/errors.hpp"

namespace cohdis {

/// Dispersion of the equal-amplitude rank-r pure state in dimension D:
/// (1 - 1/r) (1 - (r^2 - r) / (D^2 - D)). Vanishes at r = 1 and r = D.
inline double dispersion_at_rank(int dim, int rank) {
  if (dim < 2) throw DimensionTooSmall("dispersion_at_rank: dim must be >= 2");
  if (rank < 1 || rank > dim)
    throw RankOutOfRange("rank " + std::to_string(rank) + " outside [1, " + std::to_string(dim) +
                         "]");
  const double q = static_cast<double>(dim) * dim - dim;
  const double r = rank;
  return (1.0 - 1.0 / r) * (1.0 - (r * r - r) / q);
}

struct ContinuousRank {
  double s;   ///< real root of s^3 - s^2 = (D^2 - D)/2
  double xi;  ///< the cube-root intermediate of the closed form
};

/// Closed-form real root of the rank cubic, polished with one Newton step to
/// absorb the cube-root rounding (keeps the defining residual tight at large D).
inline ContinuousRank continuous_optimal_rank(int dim) {
  if (dim < 3) throw DimensionTooSmall("continuous_optimal_rank: dim must be >= 3");
  const double q = static_cast<double>(dim) * dim - dim;
  const double xi =
      std::cbrt(8.0 + 54.0 * q + 6.0 * std::sqrt(q * (15.0 + 81.0 * (dim - 0.5) * (dim - 0.5))));
  double s = (1.0 + xi / 2.0 + 2.0 / xi) / 3.0;
  const double f = s * s * s - s * s - q / 2.0;
  s -= f / (3.0 * s * s - 2.0 * s);
  return {s, xi};
}

struct OptimalRankResult {
  int dim;
  double s_continuous;
  double xi;
  int rank;
  double dispersion_at_rank;
};

/// The integer rank maximizing the dispersion, found by comparing the two
/// integers neighboring the continuous root. Ties resolve to the smaller rank.
inline OptimalRankResult optimal_rank(int dim) {
  const auto [s, xi] = continuous_optimal_rank(dim);
  const int lo = std::max(1, static_cast<int>(std::floor(s)));
  const int hi = std::min(dim, static_cast<int>(std::ceil(s)));
  int rank = lo;
  if (hi != lo && dispersion_at_rank(dim, hi) > dispersion_at_rank(dim, lo)) rank = hi;
  return {dim, s, xi, rank, dispersion_at_rank(dim, rank)};
}

/// The maximum-dispersion state: equal moduli 1/sqrt(r(D)) on the first r(D)
/// basis kets, optionally with per-ket phases (which leave the dispersion
/// unchanged).
inline PureState max_dispersion_state(int dim,
                                      std::optional<std::span<const double>> phases = {}) {
  const int r = optimal_rank(dim).rank;
  if (phases && static_cast<int>(phases->size()) < r)
    throw ParamOutOfRange("phases must cover at least r(D) = " + std::to_string(r) + " kets");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  const double a = 1.0 / std::sqrt(static_cast<double>(r));
  for (int j = 0; j < r; ++j) {
    const double phi = phases ? (*phases)[j] : 0.0;
    amps(j) = std::polar(a, phi);
  }
  return PureState::make(amps);
}

/// One-parameter family sliding from the basis ket |1> (x = 0) to the
/// maximally coherent state |f> (x = 1): amplitude 1 - t on the first ket and
/// sqrt(t (2 - t) / (D - 1)) on the rest, with x scaled so x = 1 lands
/// exactly on the point where all amplitudes coincide.
inline PureState interpolating_state(int dim, double x) {
  if (dim < 2) throw DimensionTooSmall("interpolating_state: dim must be >= 2");
  if (!(x >= 0.0 && x <= 1.0)) throw ParamOutOfRange("interpolating_state: x must be in [0, 1]");
  const double t = x * (1.0 - 1.0 / std::sqrt(static_cast<double>(dim)));
  const double a = 1.0 - t;
  const double b = std::sqrt(t * (2.0 - t) / (dim - 1));
  Eigen::VectorXcd amps(dim);
  amps(0) = a;
  for (int i = 1; i < dim; ++i) amps(i) = b;
  // a^2 + (D-1) b^2 = 1 holds analytically; renormalize away the rounding.
  amps /= amps.norm();
  return PureState::make(amps);
}

struct CurvePoint {
  double x;
  double rel_entropy;  ///< S_c of the interpolating state, nats
  double dispersion;
};

/// Dispersion against coherence entropy along the interpolating family; the
/// endpoints have zero dispersion and the curve peaks at one interior point.
inline std::vector<CurvePoint> complexity_entropy_curve(int dim, int grid_size) {
  if (grid_size < 2) throw ParamOutOfRange("complexity_entropy_curve: grid_size must be >= 2");
  std::vector<CurvePoint> curve;
  curve.reserve(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double x = static_cast<double>(i) / (grid_size - 1);
    const DensityMatrix rho = interpolating_state(dim, x).projector();
    curve.push_back({x, rel_entropy_coherence(rho), coherence_dispersion(rho)});
  }
  return curve;
}

}  // namespace cohdis
