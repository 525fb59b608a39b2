#include "projective.hpp"

#include <cmath>

namespace hkm {

TangentVec::TangentVec(const ProjPoint& base, const Mat& x) : base_(base) {
  if (x.rows() != base.dim() || x.cols() != base.dim()) {
    throw Error("TangentVec: dimension mismatch with base point");
  }
  x_ = 0.5 * (x + x.adjoint());
  const double scale = std::max(1.0, frob_norm(x_));
  const Mat& a = base_.a();
  if (frob_norm(x_ * a + a * x_ - x_) > 1e-8 * scale ||
      std::abs(x_.trace()) > 1e-8 * scale) {
    throw Error("TangentVec: matrix is not tangent at the base point");
  }
}

bool same_base(const ProjPoint& a, const ProjPoint& b, double tol) {
  return a.dim() == b.dim() && frob_norm(a.a() - b.a()) <= tol;
}

void require_same_base(const TangentVec& x, const TangentVec& y) {
  if (!same_base(x.base(), y.base())) {
    throw Error("tangent vectors have different base points");
  }
}

TangentVec add(const TangentVec& x, const TangentVec& y) {
  require_same_base(x, y);
  return TangentVec(x.base(), x.x() + y.x());
}

TangentVec sub(const TangentVec& x, const TangentVec& y) {
  require_same_base(x, y);
  return TangentVec(x.base(), x.x() - y.x());
}

TangentVec scale(double s, const TangentVec& x) {
  return TangentVec(x.base(), s * x.x());
}

TangentVec zero_tangent(const ProjPoint& a) {
  return TangentVec(a, Mat::Zero(a.dim(), a.dim()));
}

ProjPoint point_from_vector(const CVec& z) {
  const double nrm2 = z.squaredNorm();
  if (!(nrm2 > 0.0)) throw Error("point_from_vector: zero vector");
  Mat a = (z * z.adjoint()) / nrm2;
  return ProjPoint::from_projector(a);
}

Mat tangent_project_mat(const Mat& a, const Mat& h) {
  Mat x = a * h + h * a - 2.0 * a * h * a;
  return 0.5 * (x + x.adjoint());
}

TangentVec tangent_project(const ProjPoint& a, const Mat& h) {
  const Mat hs = 0.5 * (h + h.adjoint());
  return TangentVec(a, tangent_project_mat(a.a(), hs));
}

double fs_metric(const TangentVec& x, const TangentVec& y) {
  require_same_base(x, y);
  return ambient_inner(x.x(), y.x());
}

double fs_norm_sq(const TangentVec& x) { return ambient_inner(x.x(), x.x()); }

TangentVec jmul(const TangentVec& x) {
  const Mat& a = x.base().a();
  const Mat jx = Complex(0.0, 1.0) *
                 (Mat::Identity(a.rows(), a.cols()) - 2.0 * a) * x.x();
  return TangentVec(x.base(), jx);
}

double IdentityResiduals::max() const {
  double m = rel2;
  if (rel1) m = std::max(m, *rel1);
  if (rel3) m = std::max(m, *rel3);
  return m;
}

IdentityResiduals check_identities(const TangentVec& x, const TangentVec& y) {
  require_same_base(x, y);
  const Mat& X = x.x();
  const Mat& Y = y.x();
  const Mat& A = x.base().a();
  const int d = x.dim();
  const Mat I = Mat::Identity(d, d);

  IdentityResiduals res;
  const Complex trXY = (X * Y).trace();
  if (d == 2) {
    res.rel1 = frob_norm(X * Y + Y * X - trXY * I);
  }
  res.rel2 = frob_norm((X * Y + Y * X) * A - trXY * A);

  // Orthogonalize Y against the complex line spanned by X (both X and JX);
  // the relation needs Y orthogonal to that line, not merely to X.
  const double xsq = fs_norm_sq(x);
  if (xsq > 1e-20) {
    const TangentVec jx = jmul(x);
    Mat yo = Y - (fs_metric(x, y) / xsq) * X - (fs_metric(jx, y) / xsq) * jx.x();
    if (frob_norm(yo) > 1e-12 * std::max(1.0, frob_norm(Y))) {
      const Complex trXX = (X * X).trace();
      res.rel3 = frob_norm(2.0 * (X * X * yo + yo * X * X + 2.0 * X * yo * X) -
                           trXX * yo);
    }
  }
  return res;
}

TangentVec nabla(const ProjPoint& a, const TangentVec& x,
                 const TangentField& field, double step) {
  if (!(step > 0.0) || step > 1e-2) {
    throw Error("nabla: step must lie in (0, 1e-2]");
  }
  const ProjPoint ap = rank1_project(Mat(a.a() + step * x.x()));
  const ProjPoint am = rank1_project(Mat(a.a() - step * x.x()));
  const Mat d = (field(ap).x() - field(am).x()) / (2.0 * step);
  return tangent_project(a, d);
}

TangentVec curvature(const TangentVec& x, const TangentVec& y,
                     const TangentVec& z, int sign) {
  require_same_base(x, y);
  require_same_base(x, z);
  const TangentVec jx = jmul(x);
  const TangentVec jy = jmul(y);
  const TangentVec jz = jmul(z);
  const Mat r = fs_metric(y, z) * x.x() - fs_metric(x, z) * y.x() +
                fs_metric(jy, z) * jx.x() - fs_metric(jx, z) * jy.x() +
                2.0 * fs_metric(jy, x) * jz.x();
  return TangentVec(x.base(), (sign * 0.25) * r);
}

TangentVec killing_field(const SuElement& u, const ProjPoint& a) {
  if (u.dim() != a.dim()) throw Error("killing_field: dimension mismatch");
  return TangentVec(a, u.m() * a.a() - a.a() * u.m());
}

TangentVec killing_cov_deriv(const SuElement& u, const TangentVec& x) {
  if (u.dim() != x.dim()) throw Error("killing_cov_deriv: dimension mismatch");
  return tangent_project(x.base(), Mat(u.m() * x.x() - x.x() * u.m()));
}

double linear_hamiltonian(const SuElement& u, const ProjPoint& a) {
  return ambient_inner(a.a(), i_times(u).m());
}

std::vector<TangentVec> adapted_frame(const ProjPoint& a,
                                      const TangentVec* lead) {
  const int n = a.n();
  const int dim = 2 * n;
  std::vector<TangentVec> frame;
  frame.reserve(dim);

  const auto try_append_pair = [&](const TangentVec& cand) {
    Mat v = cand.x();
    for (const TangentVec& e : frame) {
      v -= (fs_metric(e, TangentVec(a, v)) / fs_norm_sq(e)) * e.x();
    }
    TangentVec tv(a, v);
    const double nrm = std::sqrt(fs_norm_sq(tv));
    if (nrm < 1e-8) return;
    tv = scale(1.0 / nrm, tv);
    frame.push_back(tv);
    frame.push_back(jmul(tv));
  };

  if (lead != nullptr) {
    const double nrm = std::sqrt(fs_norm_sq(*lead));
    if (nrm > 1e-14) {
      if (!same_base(lead->base(), a)) {
        throw Error("adapted_frame: lead vector has a different base point");
      }
      try_append_pair(*lead);
    }
  }
  for (const SuElement& u : su_basis(a.dim())) {
    if (static_cast<int>(frame.size()) >= dim) break;
    try_append_pair(killing_field(u, a));
  }
  if (static_cast<int>(frame.size()) != dim) {
    throw Error("adapted_frame: failed to span the tangent space");
  }
  return frame;
}

Mat su_exp(const SuElement& u, double t) {
  // u = -i H with H Hermitian, so e^{tu} = V e^{-i t L} V^H.
  const Mat h = i_times(u).m();
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  if (es.info() != Eigen::Success) throw Error("su_exp: eigensolver failed");
  const int d = u.dim();
  CVec phases(d);
  for (int k = 0; k < d; ++k) {
    phases(k) = std::exp(Complex(0.0, -t * es.eigenvalues()(k)));
  }
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

ProjPoint flow_point(const SuElement& u, double t, const ProjPoint& a) {
  const Mat e = su_exp(u, t);
  return rank1_project(Mat(e * a.a() * e.adjoint()));
}

TangentVec flow_push(const SuElement& u, double t, const TangentVec& x) {
  const Mat e = su_exp(u, t);
  const ProjPoint a2 = flow_point(u, t, x.base());
  return tangent_project(a2, Mat(e * x.x() * e.adjoint()));
}

}  // namespace hkm
