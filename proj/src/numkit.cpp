#include "manirep/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

namespace manirep {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::RankAmbiguous: return "RankAmbiguous";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::ModuleNotPreserved: return "ModuleNotPreserved";
    case ErrorKind::OutOfLemmaRange: return "OutOfLemmaRange";
    case ErrorKind::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorKind::NoConstantFactor: return "NoConstantFactor";
    case ErrorKind::WitnessNotInModule: return "WitnessNotInModule";
    case ErrorKind::NotMinimalFamily: return "NotMinimalFamily";
  }
  return "Unknown";
}

double fro(const Mat& A) { return A.norm(); }

bool is_real(const Mat& A, double eps) {
  return A.size() == 0 || A.imag().cwiseAbs().maxCoeff() <= eps;
}

Mat eye(int n) { return Mat::Identity(n, n); }

Mat omega2() {
  Mat W(2, 2);
  W << 0, 1, -1, 0;
  return W;
}

Mat J(int n) {
  Mat M = Mat::Zero(2 * n, 2 * n);
  M.topRightCorner(n, n) = Mat::Identity(n, n);
  M.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
  return M;
}

Mat Ipq(int p, int q) {
  Mat M = Mat::Identity(p + q, p + q);
  for (int i = p; i < p + q; ++i) M(i, i) = -1.0;
  return M;
}

Mat blkdiag(const std::vector<Mat>& blocks) {
  Eigen::Index r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Mat M = Mat::Zero(r, c);
  Eigen::Index i = 0, j = 0;
  for (const auto& b : blocks) {
    M.block(i, j, b.rows(), b.cols()) = b;
    i += b.rows();
    j += b.cols();
  }
  return M;
}

Mat diag(const std::vector<cplx>& d) {
  Mat M = Mat::Zero(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) M(i, i) = d[i];
  return M;
}

Mat diag_real(const std::vector<double>& d) {
  Mat M = Mat::Zero(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) M(i, i) = d[i];
  return M;
}

std::vector<double> singular_values(const Mat& X) {
  if (X.size() == 0) return {};
  Eigen::BDCSVD<Mat> svd(X);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

double rank_cutoff(const std::vector<double>& sv, const Tolerance& tol) {
  double smax = sv.empty() ? 0.0 : *std::max_element(sv.begin(), sv.end());
  return std::max(tol.abs_eps, tol.rel_eps * smax);
}

int numerical_rank(const Mat& X, const Tolerance& tol) {
  auto sv = singular_values(X);
  double cut = rank_cutoff(sv, tol);
  return static_cast<int>(
      std::count_if(sv.begin(), sv.end(), [&](double s) { return s > cut; }));
}

int checked_rank(const Mat& X, const Tolerance& tol) {
  auto sv = singular_values(X);
  double cut = rank_cutoff(sv, tol);
  int r = 0;
  for (double s : sv) {
    if (std::abs(s - cut) <= tol.abs_eps && s > 0.0)
      fail(ErrorKind::RankAmbiguous, "singular value near rank cutoff");
    if (s > cut) ++r;
  }
  return r;
}

RMat realify_rows(const Mat& A) {
  RMat R(2 * A.rows(), A.cols());
  R.topRows(A.rows()) = A.real();
  R.bottomRows(A.rows()) = A.imag();
  return R;
}

int real_rank(const Mat& A, const Tolerance& tol) {
  if (A.size() == 0) return 0;
  return numerical_rank(realify_rows(A).cast<cplx>(), tol);
}

Mat null_space(const Mat& A, const Tolerance& tol) {
  const Eigen::Index n = A.cols();
  if (A.rows() == 0) return Mat::Identity(n, n);
  Eigen::BDCSVD<Mat> svd(A, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  std::vector<double> sv(s.data(), s.data() + s.size());
  double cut = rank_cutoff(sv, tol);
  Eigen::Index r = 0;
  for (double x : sv)
    if (x > cut) ++r;
  return svd.matrixV().rightCols(n - r);
}

RMat real_null_space(const RMat& A, const Tolerance& tol) {
  const Eigen::Index n = A.cols();
  if (A.rows() == 0) return RMat::Identity(n, n);
  Eigen::BDCSVD<RMat> svd(A, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  std::vector<double> sv(s.data(), s.data() + s.size());
  double cut = rank_cutoff(sv, tol);
  Eigen::Index r = 0;
  for (double x : sv)
    if (x > cut) ++r;
  return svd.matrixV().rightCols(n - r);
}

Mat expm(const Mat& A) { return A.exp(); }

namespace {

// Symmetric square root of a symmetric unitary matrix Z = P D P^T, P real orthogonal.
Mat symmetric_unitary_sqrt(Mat Z) {
  Z = (Z + Z.transpose()).eval() * 0.5;
  const int k = static_cast<int>(Z.rows());
  if (k == 1) return Mat::Constant(1, 1, std::sqrt(Z(0, 0) / std::abs(Z(0, 0))));
  // real and imaginary parts commute; a generic combination separates them
  RMat S = Z.real() + 0.6180339887498949 * Z.imag();
  Eigen::SelfAdjointEigenSolver<RMat> es(S);
  Mat P = es.eigenvectors().cast<cplx>();
  Mat D = P.transpose() * Z * P;
  Mat R = Mat::Zero(k, k);
  for (int i = 0; i < k; ++i) R(i, i) = std::sqrt(D(i, i) / std::abs(D(i, i)));
  return P * R * P.transpose();
}

}  // namespace

TakagiResult takagi(const Mat& X, const Tolerance& tol) {
  if (X.rows() != X.cols()) fail(ErrorKind::SizeMismatch, "takagi needs a square matrix");
  const int n = static_cast<int>(X.rows());
  if ((X - X.transpose()).norm() > tol.abs_eps * std::max(1.0, X.norm()))
    fail(ErrorKind::NotSymmetric, "matrix is not complex symmetric");
  TakagiResult out;
  if (n == 0) return out;
  if (X.norm() == 0.0) {
    out.U = Mat::Identity(n, n);
    out.sigma.assign(n, 0.0);
    return out;
  }
  Eigen::JacobiSVD<Mat> svd(X, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const Mat& W = svd.matrixU();
  const Mat& V = svd.matrixV();
  const double smax = s(0);
  const double zero_cut = 64.0 * n * std::numeric_limits<double>::epsilon() * smax;
  const double cluster_gap = 1e-6 * smax;

  Mat U = W;
  int i = 0;
  while (i < n) {
    if (s(i) <= zero_cut) break;  // remaining columns of W span the null part
    int j = i + 1;
    while (j < n && s(j) > zero_cut && s(j - 1) - s(j) <= cluster_gap) ++j;
    const int k = j - i;
    Mat Z = W.middleCols(i, k).adjoint() * V.middleCols(i, k).conjugate();
    U.middleCols(i, k) = W.middleCols(i, k) * symmetric_unitary_sqrt(Z);
    i = j;
  }
  // one Newton-Schulz pass back toward the unitary group
  U = U * (3.0 * Mat::Identity(n, n) - U.adjoint() * U) * 0.5;
  out.sigma.assign(s.data(), s.data() + n);
  out.U = U;
  Mat rec = U * diag_real(out.sigma) * U.transpose();
  if ((rec - X).norm() > std::max(tol.abs_eps, tol.rel_eps * X.norm()))
    fail(ErrorKind::ConvergenceFailure, "takagi refinement did not reach tolerance");
  return out;
}

namespace {

struct Block2 {
  double lambda;
  Eigen::Index col;  // first of the two columns
};

YoulaResult youla_real(const Mat& Xc, const Tolerance& tol) {
  const int n = static_cast<int>(Xc.rows());
  RMat X = Xc.real();
  X = (0.5 * (X - X.transpose())).eval();
  const int rank = checked_rank(Xc, tol);
  if (rank % 2 != 0) fail(ErrorKind::RankAmbiguous, "odd numerical rank for a skew matrix");
  Eigen::RealSchur<RMat> schur(X);
  const RMat& T = schur.matrixT();
  RMat Zs = schur.matrixU();
  std::vector<Block2> blocks;
  std::vector<Eigen::Index> zeros;
  double cut = rank_cutoff(singular_values(Xc), tol);
  Eigen::Index c = 0;
  while (c < n) {
    if (c + 1 < n && std::abs(T(c + 1, c)) > 0.0) {
      double l = 0.5 * (T(c, c + 1) - T(c + 1, c));
      if (l < 0) {
        Zs.col(c).swap(Zs.col(c + 1));
        l = -l;
      }
      if (l > cut) {
        blocks.push_back({l, c});
      } else {
        zeros.push_back(c);
        zeros.push_back(c + 1);
      }
      c += 2;
    } else {
      zeros.push_back(c);
      c += 1;
    }
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block2& a, const Block2& b) { return a.lambda > b.lambda; });
  if (2 * static_cast<int>(blocks.size()) != rank)
    fail(ErrorKind::RankAmbiguous, "Schur block count disagrees with numerical rank");
  RMat Q(n, n);
  Eigen::Index k = 0;
  YoulaResult out;
  for (const auto& b : blocks) {
    Q.col(k++) = Zs.col(b.col);
    Q.col(k++) = Zs.col(b.col + 1);
    out.lambda.push_back(b.lambda);
  }
  for (auto z : zeros) Q.col(k++) = Zs.col(z);
  out.Q = Q.cast<cplx>();
  out.r = static_cast<int>(blocks.size());
  return out;
}

YoulaResult youla_complex(const Mat& X, const Tolerance& tol) {
  const int n = static_cast<int>(X.rows());
  const int rank = checked_rank(X, tol);
  if (rank % 2 != 0) fail(ErrorKind::RankAmbiguous, "odd numerical rank for a skew matrix");
  Eigen::JacobiSVD<Mat> svd(X, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  const Mat& W = svd.matrixU();
  // singular values pair up; within each singular subspace pair q with -X conj(q)/l
  Mat Q = Mat::Zero(n, n);
  YoulaResult out;
  int filled = 0;
  int i = 0;
  while (i < rank) {
    int j = i + 1;
    while (j < rank && s(j - 1) - s(j) <= 1e-6 * s(0)) ++j;
    for (int c = i; c < j && filled < j; ++c) {
      Eigen::VectorXcd q = W.col(c);
      for (int t = 0; t < filled; ++t) q -= Q.col(t).dot(q) * Q.col(t);
      double nq = q.norm();
      if (nq < 1e-6) continue;
      q /= nq;
      double l = (X * q.conjugate()).norm();
      Eigen::VectorXcd q2 = -(X * q.conjugate()) / l;
      Q.col(filled) = q;
      Q.col(filled + 1) = q2;
      out.lambda.push_back(l);
      filled += 2;
    }
    if (filled != j) fail(ErrorKind::RankAmbiguous, "singular subspace failed to pair");
    i = j;
  }
  // complete with an orthonormal basis of the orthogonal complement
  if (filled < n) {
    Mat P = Mat::Identity(n, n) - Q.leftCols(filled) * Q.leftCols(filled).adjoint();
    Eigen::JacobiSVD<Mat> ps(P, Eigen::ComputeFullU);
    Q.rightCols(n - filled) = ps.matrixU().leftCols(n - filled);
  }
  std::vector<int> order(out.lambda.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return out.lambda[a] > out.lambda[b]; });
  Mat Qs = Q;
  std::vector<double> ls;
  for (size_t t = 0; t < order.size(); ++t) {
    Qs.col(2 * t) = Q.col(2 * order[t]);
    Qs.col(2 * t + 1) = Q.col(2 * order[t] + 1);
    ls.push_back(out.lambda[order[t]]);
  }
  out.Q = Qs;
  out.lambda = ls;
  out.r = static_cast<int>(ls.size());
  return out;
}

}  // namespace

YoulaResult youla_skew(const Mat& X, Field f, const Tolerance& tol) {
  if (X.rows() != X.cols()) fail(ErrorKind::SizeMismatch, "youla_skew needs a square matrix");
  if ((X + X.transpose()).norm() > tol.abs_eps * std::max(1.0, X.norm()))
    fail(ErrorKind::NotSkew, "matrix is not skew-symmetric");
  if (X.rows() == 0) return {};
  if (f == Field::R) {
    if (!is_real(X, tol.abs_eps)) fail(ErrorKind::NotSkew, "real field requested for a complex matrix");
    return youla_real(X, tol);
  }
  return youla_complex(X, tol);
}

}  // namespace manirep
