#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "cohdis/errors.hpp"

namespace cohdis {

/// Validation tolerances. Double precision leaves several digits of headroom
/// at the dimensions this library targets (D up to ~1e3), so the defaults
/// are tight; loosen them through this struct if a caller needs to.
struct Tolerances {
  double hermiticity = 1e-12;      ///< per-entry |m(i,j) - conj(m(j,i))|
  double trace = 1e-12;            ///< |tr - 1|
  double diagonal = 1e-12;         ///< slack on Re(m(i,i)) in [0, 1]
  double psd = 1e-10;              ///< smallest eigenvalue >= -psd
  double complementarity = 1e-10;  ///< |C2 + P^2 - purity + 1/D|
};

namespace detail {

inline std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

/// -sum p ln p over nonnegative weights, with 0 ln 0 = 0. Values that are
/// only negative by rounding contribute nothing.
template <typename Seq>
double entropy_nats(const Seq& probs) {
  double s = 0.0;
  for (const double p : probs)
    if (p > 0.0) s -= p * std::log(p);
  return s;
}

}  // namespace detail

/// A validated D x D density matrix: Hermitian, unit trace, physical
/// diagonal, and (optionally checked) positive semidefinite. The storage
/// basis is the fixed incoherent/energy basis throughout.
class DensityMatrix {
 public:
  using Matrix = Eigen::MatrixXcd;

  /// Validates and wraps `entries`. The PSD check runs an eigenvalue
  /// decomposition and may be skipped for states that are PSD by
  /// construction (projectors, mixtures, tensor products).
  static DensityMatrix make(Matrix entries, bool check_psd = true,
                            const Tolerances& tol = Tolerances{}) {
    const auto rows = entries.rows();
    if (rows < 1 || entries.cols() != rows)
      throw ParamOutOfRange("density matrix entries must be square and non-empty");
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = i; j < rows; ++j) {
        const double dev = std::abs(entries(i, j) - std::conj(entries(j, i)));
        if (dev > tol.hermiticity)
          throw HermiticityViolation("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") deviates from the conjugate of its transpose by " +
                                     detail::fmt(dev));
      }
      const double d = entries(i, i).real();
      if (d < -tol.diagonal || d > 1.0 + tol.diagonal)
        throw ParamOutOfRange("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                              ") = " + detail::fmt(d) + " lies outside [0, 1]");
    }
    const double tr = entries.trace().real();
    if (std::abs(tr - 1.0) > tol.trace)
      throw TraceViolation("trace = " + detail::fmt(tr) + " deviates from 1 by " +
                           detail::fmt(std::abs(tr - 1.0)));
    if (check_psd) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(entries, Eigen::EigenvaluesOnly);
      const double lambda_min = es.eigenvalues().minCoeff();
      if (lambda_min < -tol.psd)
        throw NotPositiveSemidefinite("smallest eigenvalue " + detail::fmt(lambda_min) +
                                      " is below -" + detail::fmt(tol.psd));
    }
    return DensityMatrix(std::move(entries));
  }

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& matrix() const { return mat_; }
  std::complex<double> entry(int i, int j) const { return mat_(i, j); }
  double population(int i) const { return mat_(i, i).real(); }

 private:
  explicit DensityMatrix(Matrix m) : mat_(std::move(m)) {}
  Matrix mat_;
};

inline DensityMatrix make_density(const Eigen::MatrixXcd& entries, bool check_psd = true,
                                  const Tolerances& tol = Tolerances{}) {
  return DensityMatrix::make(entries, check_psd, tol);
}

/// A normalized pure state |psi>.
class PureState {
 public:
  using Vector = Eigen::VectorXcd;

  static PureState make(Vector amplitudes, const Tolerances& tol = Tolerances{}) {
    if (amplitudes.size() < 1) throw ParamOutOfRange("pure state needs at least one amplitude");
    const double norm2 = amplitudes.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol.trace)
      throw ParamOutOfRange("pure state norm^2 = " + detail::fmt(norm2) + " deviates from 1");
    return PureState(std::move(amplitudes));
  }

  int dim() const { return static_cast<int>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }

  /// |psi><psi|. PSD by construction, so the eigenvalue check is skipped.
  DensityMatrix projector() const {
    return DensityMatrix::make(amps_ * amps_.adjoint(), /*check_psd=*/false);
  }

 private:
  explicit PureState(Vector v) : amps_(std::move(v)) {}
  Vector amps_;
};

/// Scalar figures of merit of one state. The complementarity relation
/// c2 + predictability_sq - purity + 1/D = 0 ties the fields together.
struct CoherenceStats {
  double mean_population;        ///< always 1/D
  double predictability_sq;      ///< P^2 = sum_i rho_ii^2 - 1/D
  double c1;                     ///< sum_{i != j} |rho_ij|
  double c2;                     ///< sum_{i != j} |rho_ij|^2
  double purity;                 ///< tr(rho^2)
  double dispersion;             ///< c2 - c1^2 / (D^2 - D)
  double rel_entropy_coherence;  ///< S(rho_diag) - S(rho), natural log
};

/// P^2 = sum_i rho_ii^2 - 1/D. Equals D times the population variance.
inline double predictability_sq(const DensityMatrix& rho) {
  const int d = rho.dim();
  double s = 0.0;
  for (int i = 0; i < d; ++i) s += rho.population(i) * rho.population(i);
  const double v = s - 1.0 / d;
  return v > 0.0 ? v : 0.0;
}

/// l1 coherence: sum of the absolute values of all off-diagonal entries.
inline double l1_coherence(const DensityMatrix& rho) {
  const int d = rho.dim();
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) s += std::abs(rho.entry(i, j));
  return s;
}

/// l2 coherence: sum of the squared moduli of all off-diagonal entries.
inline double l2_coherence(const DensityMatrix& rho) {
  const int d = rho.dim();
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) s += std::norm(rho.entry(i, j));
  return s;
}

/// tr(rho^2), which for Hermitian rho is the squared Frobenius norm.
inline double purity(const DensityMatrix& rho) { return rho.matrix().squaredNorm(); }

/// Coherence dispersion: the spread of the off-diagonal moduli,
/// c2 - c1^2 / (D^2 - D). Zero for D = 2, for incoherent states, and for
/// states whose off-diagonal moduli are all equal.
inline double coherence_dispersion(const DensityMatrix& rho) {
  const int d = rho.dim();
  if (d < 2) return 0.0;
  const double q = static_cast<double>(d) * d - d;
  const double c1 = l1_coherence(rho);
  const double v = l2_coherence(rho) - c1 * c1 / q;
  return v > 0.0 ? v : 0.0;
}

/// Von Neumann entropy -tr(rho ln rho) in nats.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix(), Eigen::EigenvaluesOnly);
  return detail::entropy_nats(es.eigenvalues());
}

/// Relative entropy of coherence S(rho_diag) - S(rho) in nats; the entropy
/// cost of dephasing. Natural log throughout (ratios and the values tested
/// here are base-independent); divide by ln 2 for bits.
inline double rel_entropy_coherence(const DensityMatrix& rho) {
  std::vector<double> pops(rho.dim());
  for (int i = 0; i < rho.dim(); ++i) pops[i] = rho.population(i);
  const double v = detail::entropy_nats(pops) - von_neumann_entropy(rho);
  return v > 0.0 ? v : 0.0;
}

/// All scalar statistics of one state, with the complementarity residual
/// checked as a guard against numerical corruption upstream.
inline CoherenceStats stats(const DensityMatrix& rho, const Tolerances& tol = Tolerances{}) {
  CoherenceStats s{};
  const int d = rho.dim();
  s.mean_population = 1.0 / d;
  s.predictability_sq = predictability_sq(rho);
  s.c1 = l1_coherence(rho);
  s.c2 = l2_coherence(rho);
  s.purity = purity(rho);
  s.dispersion = coherence_dispersion(rho);
  s.rel_entropy_coherence = rel_entropy_coherence(rho);
  const double residual = s.c2 + s.predictability_sq - s.purity + 1.0 / d;
  if (std::abs(residual) > tol.complementarity)
    throw ComplementarityViolation("complementarity residual " + detail::fmt(residual) +
                                   " exceeds " + detail::fmt(tol.complementarity));
  return s;
}

}  // namespace cohdis
