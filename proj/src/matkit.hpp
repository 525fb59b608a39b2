#pragma once

// Complex-matrix kernel: Hermitian / anti-Hermitian value types, the ambient
// inner product 2 tr(AB), rank-1 spectral projection onto the projector model
// of CP^n, su(n+1) bases and deterministic random sampling.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hkm {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when the dominant eigenvalue of a retraction target is degenerate.
class RetractionError : public Error {
 public:
  using Error::Error;
};

// Thrown on malformed user-supplied specs (JSON inputs, configs).
class SpecError : public Error {
 public:
  using Error::Error;
};

namespace convention {
// |X|^2 = kNormFactor * Re tr(X^2).  Calibrated once against the Hamiltonian
// identity grad f_j = (I*,J*,K*) Gamma and frozen; 2.0 makes |X|^2 the
// restriction of the ambient metric.
inline constexpr double kNormFactor = 2.0;
// Curvature convention R(X,Y) = D_X D_Y - D_Y D_X - D_[X,Y]; the sign of the
// constant-curvature closed form relative to it, calibrated by the
// finite-difference commutator oracle.
inline constexpr int kCurvatureSign = +1;
// Hamiltonian convention df_u = omega(gamma_u, .) with omega(X,Y) = g(JX,Y).
inline constexpr int kOmegaSign = +1;
// T S^2 identification (A,X) = ((I + p.sigma)/2, kappa (e.sigma)/2).
inline constexpr double kS2Kappa = 1.0;
// Round metric on S^2 used by the T S^2 moment formulas, as a multiple of the
// Euclidean dot product.
inline constexpr double kS2MetricScale = 1.0;
// Coefficient c in f_2(p,e) = sqrt(1 + c |e|^2) g(b,p).
inline constexpr double kS2ESqCoef = 4.0;
// Minimal eigenvalue gap accepted by rank1_project.
inline constexpr double kEigenGapMin = 1e-10;
}  // namespace convention

// Hermitian matrix; symmetrized on construction so the invariant is exact.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Mat& raw);
  int dim() const { return static_cast<int>(m_.rows()); }
  const Mat& m() const { return m_; }

 private:
  Mat m_;
};

// Element of su(n+1): anti-Hermitian and traceless by construction.
class SuElement {
 public:
  explicit SuElement(const Mat& raw);
  int dim() const { return static_cast<int>(m_.rows()); }
  const Mat& m() const { return m_; }

 private:
  Mat m_;
};

// Point of CP^n in the projector model: A Hermitian, A^2 = A, tr A = 1.
class ProjPoint {
 public:
  // Validates the projector invariants (throws Error on violation).
  static ProjPoint from_projector(const Mat& a);
  int dim() const { return static_cast<int>(a_.rows()); }  // n + 1
  int n() const { return dim() - 1; }
  const Mat& a() const { return a_; }

 private:
  explicit ProjPoint(Mat a) : a_(std::move(a)) {}
  Mat a_;
};

// 2 Re tr(AB).  Both arguments must be Hermitian; the imaginary residue of the
// trace is asserted below machine-noise tolerance.
double ambient_inner(const Mat& a, const Mat& b);
double ambient_inner(const HermitianMatrix& a, const HermitianMatrix& b);

double frob_norm(const Mat& a);

// i * u, Hermitian whenever u is anti-Hermitian.
HermitianMatrix i_times(const SuElement& u);

// Generalized Gell-Mann style basis of su(n+1), size (n+1)^2 - 1.
std::vector<SuElement> su_basis(int n_plus_1);

// Nearest rank-1 projector in the dominant-eigenvector sense.  Requires a
// strictly dominant top eigenvalue (gap > convention::kEigenGapMin).
ProjPoint rank1_project(const HermitianMatrix& h);
ProjPoint rank1_project(const Mat& h_raw);

HermitianMatrix random_hermitian(int dim, std::uint64_t seed);
SuElement random_su(int dim, std::uint64_t seed);
CVec random_cvector(int dim, std::uint64_t seed);

// FNV-1a style deterministic seed derivation, stable across platforms.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                          std::uint64_t index);

}  // namespace hkm
