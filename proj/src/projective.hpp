#pragma once

// The projector model of CP^n: tangent spaces of the embedding into Hermitian
// matrices, Fubini-Study metric, complex structure J, constant-curvature
// tensor, Killing fields of the SU(n+1) action and their covariant
// derivatives.

#include "matkit.hpp"

#include <functional>
#include <optional>

namespace hkm {

// Tangent vector X at A: Hermitian, XA + AX = X, tr X = 0.
class TangentVec {
 public:
  TangentVec(const ProjPoint& base, const Mat& x);
  const ProjPoint& base() const { return base_; }
  const Mat& x() const { return x_; }
  int dim() const { return base_.dim(); }

 private:
  ProjPoint base_;
  Mat x_;
};

bool same_base(const ProjPoint& a, const ProjPoint& b, double tol = 1e-9);
void require_same_base(const TangentVec& x, const TangentVec& y);

TangentVec add(const TangentVec& x, const TangentVec& y);
TangentVec sub(const TangentVec& x, const TangentVec& y);
TangentVec scale(double s, const TangentVec& x);
TangentVec zero_tangent(const ProjPoint& a);

// A = z z^H / |z|^2.
ProjPoint point_from_vector(const CVec& z);

// Orthogonal projection of an ambient Hermitian matrix onto T_A:
// X = AH + HA - 2AHA.
TangentVec tangent_project(const ProjPoint& a, const Mat& h);
Mat tangent_project_mat(const Mat& a, const Mat& h);

// Induced Fubini-Study metric g(X,Y) = 2 tr(XY).
double fs_metric(const TangentVec& x, const TangentVec& y);
double fs_norm_sq(const TangentVec& x);

// JX = i (I - 2A) X.
TangentVec jmul(const TangentVec& x);

// Residuals of the matrix identities satisfied by tangent vectors.
// rel1 (n = 1 only): XY + YX = tr(XY) I.
// rel2: (XY + YX) A = tr(XY) A.
// rel3 (needs Y orthogonal to both X and JX; the input Y is orthogonalized
// against the complex line of X first): 2(XXY + YXX + 2XYX) = tr(XX) Y.
struct IdentityResiduals {
  std::optional<double> rel1;
  double rel2 = 0.0;
  std::optional<double> rel3;
  double max() const;
};
IdentityResiduals check_identities(const TangentVec& x, const TangentVec& y);

using TangentField = std::function<TangentVec(const ProjPoint&)>;

// Levi-Civita derivative of a tangent field along X at A: tangent projection
// of the central-difference derivative along t -> rank1_project(A + tX).
TangentVec nabla(const ProjPoint& a, const TangentVec& x,
                 const TangentField& field, double step);

// Constant-holomorphic-sectional-curvature-1 tensor of CP^n,
// R(X,Y)Z = (s/4)[g(Y,Z)X - g(X,Z)Y + g(JY,Z)JX - g(JX,Z)JY + 2g(JY,X)JZ],
// with sign s calibrated against the finite-difference commutator oracle.
TangentVec curvature(const TangentVec& x, const TangentVec& y,
                     const TangentVec& z,
                     int sign = convention::kCurvatureSign);

// gamma_u(A) = uA - Au.
TangentVec killing_field(const SuElement& u, const ProjPoint& a);

// nabla_X gamma_u = tangent projection of uX - Xu.
TangentVec killing_cov_deriv(const SuElement& u, const TangentVec& x);

// Hamiltonian of gamma_u on CP^n: 2 tr(A i u).
double linear_hamiltonian(const SuElement& u, const ProjPoint& a);

// g-orthonormal J-adapted frame (E_1, JE_1, E_2, JE_2, ...) of T_A CP^n.
// When lead is nonzero the first pair is lead/|lead|, J lead/|lead|.
// Completion runs Gram-Schmidt over a deterministic candidate list derived
// from the su(n+1) basis.
std::vector<TangentVec> adapted_frame(const ProjPoint& a,
                                      const TangentVec* lead = nullptr);

// Flow of the isometry generated by u: t -> e^{tu} A e^{-tu}, and the exact
// pushforward of tangent vectors along it.
Mat su_exp(const SuElement& u, double t);
ProjPoint flow_point(const SuElement& u, double t, const ProjPoint& a);
TangentVec flow_push(const SuElement& u, double t, const TangentVec& x);

}  // namespace hkm
