#include "matkit.hpp"

#include <cmath>
#include <random>

namespace hkm {

namespace {

void require_square(const Mat& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 2) {
    throw Error(std::string(what) + ": matrix must be square with dim >= 2");
  }
}

void require_same_dim(const Mat& a, const Mat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(const Mat& raw) {
  require_square(raw, "HermitianMatrix");
  m_ = 0.5 * (raw + raw.adjoint());
}

SuElement::SuElement(const Mat& raw) {
  require_square(raw, "SuElement");
  m_ = 0.5 * (raw - raw.adjoint());
  const Complex tr = m_.trace() / static_cast<double>(m_.rows());
  m_ -= tr * Mat::Identity(m_.rows(), m_.cols());
}

ProjPoint ProjPoint::from_projector(const Mat& a) {
  require_square(a, "ProjPoint");
  const Mat h = 0.5 * (a + a.adjoint());
  const double scale = std::max(1.0, frob_norm(h));
  if (frob_norm(h * h - h) > 1e-10 * scale ||
      std::abs(h.trace() - Complex(1.0, 0.0)) > 1e-10 * scale) {
    throw Error("ProjPoint: matrix is not a rank-1 orthogonal projector");
  }
  return ProjPoint(h);
}

double frob_norm(const Mat& a) { return a.norm(); }

double ambient_inner(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "ambient_inner");
  const Complex tr = (a * b).trace();
  const double scale = std::max(1.0, frob_norm(a) * frob_norm(b));
  if (std::abs(tr.imag()) > 1e-12 * scale) {
    throw Error("ambient_inner: trace has non-negligible imaginary part; "
                "inputs are not Hermitian");
  }
  return 2.0 * tr.real();
}

double ambient_inner(const HermitianMatrix& a, const HermitianMatrix& b) {
  return ambient_inner(a.m(), b.m());
}

HermitianMatrix i_times(const SuElement& u) {
  return HermitianMatrix(Complex(0.0, 1.0) * u.m());
}

std::vector<SuElement> su_basis(int n_plus_1) {
  if (n_plus_1 < 2) throw Error("su_basis: dimension must be >= 2");
  const int d = n_plus_1;
  std::vector<SuElement> basis;
  basis.reserve(static_cast<std::size_t>(d) * d - 1);
  const Complex i(0.0, 1.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Mat sym = Mat::Zero(d, d);
      sym(j, k) = i;
      sym(k, j) = i;
      basis.emplace_back(sym);
      Mat asym = Mat::Zero(d, d);
      asym(j, k) = Complex(1.0, 0.0);
      asym(k, j) = Complex(-1.0, 0.0);
      basis.emplace_back(asym);
    }
  }
  for (int m = 1; m < d; ++m) {
    Mat diag = Mat::Zero(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(m) * (m + 1));
    for (int j = 0; j < m; ++j) diag(j, j) = i * norm;
    diag(m, m) = -i * static_cast<double>(m) * norm;
    basis.emplace_back(diag);
  }
  return basis;
}

ProjPoint rank1_project(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h.m());
  if (es.info() != Eigen::Success) {
    throw Error("rank1_project: eigendecomposition failed");
  }
  const auto& vals = es.eigenvalues();
  const int d = h.dim();
  const double gap = vals(d - 1) - vals(d - 2);
  if (gap <= convention::kEigenGapMin) {
    throw RetractionError(
        "rank1_project: top eigenvalue is degenerate (gap " +
        std::to_string(gap) + "); retraction is ambiguous");
  }
  const CVec v = es.eigenvectors().col(d - 1);
  Mat a = v * v.adjoint();
  a = 0.5 * (a + a.adjoint());
  return ProjPoint::from_projector(a);
}

ProjPoint rank1_project(const Mat& h_raw) {
  return rank1_project(HermitianMatrix(h_raw));
}

namespace {

Mat random_raw(int dim, std::uint64_t seed) {
  if (dim < 2) throw Error("random matrix: dimension must be >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

}  // namespace

HermitianMatrix random_hermitian(int dim, std::uint64_t seed) {
  return HermitianMatrix(random_raw(dim, seed));
}

SuElement random_su(int dim, std::uint64_t seed) {
  return SuElement(random_raw(dim, seed ^ 0x9e3779b97f4a7c15ull));
}

CVec random_cvector(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4full);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVec v(dim);
  for (int r = 0; r < dim; ++r) v(r) = Complex(gauss(rng), gauss(rng));
  return v;
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                          std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ base;
  const auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 0x100000001b3ull;
  };
  for (const char c : tag) mix(static_cast<unsigned char>(c));
  for (int i = 0; i < 8; ++i) mix((index >> (8 * i)) & 0xffu);
  for (int i = 0; i < 8; ++i) mix((base >> (8 * i)) & 0xffu);
  return h;
}

}  // namespace hkm
