#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "manirep/error.hpp"

namespace manirep {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

enum class Field { R, C };

struct Tolerance {
  double abs_eps = 1e-10;
  double rel_eps = 1e-8;
};

struct TaggedMat {
  Mat value;
  Field field = Field::C;
};

struct TakagiResult {
  Mat U;
  std::vector<double> sigma;  // descending
};

struct YoulaResult {
  Mat Q;
  std::vector<double> lambda;  // one entry per 2x2 block, descending
  int r = 0;                   // number of blocks, rank = 2r
};

/// X = U diag(sigma) U^T for complex symmetric X.
TakagiResult takagi(const Mat& X, const Tolerance& tol = {});

/// X = Q diag(l1*W2, ..., lr*W2, 0) Q^T with W2 = [[0,1],[-1,0]].
/// Real Schur for F = R, paired singular vectors for F = C.
YoulaResult youla_skew(const Mat& X, Field f, const Tolerance& tol = {});

/// Count of singular values above max(abs_eps, rel_eps * smax).
int numerical_rank(const Mat& X, const Tolerance& tol = {});

/// Same count, but throws RankAmbiguous when a singular value sits
/// within abs_eps of the cutoff.
int checked_rank(const Mat& X, const Tolerance& tol = {});

double rank_cutoff(const std::vector<double>& sv, const Tolerance& tol);
std::vector<double> singular_values(const Mat& X);

/// Rank of A viewed as a real-linear map (columns realified as [Re; Im]).
int real_rank(const Mat& A, const Tolerance& tol = {});
RMat realify_rows(const Mat& A);

/// Orthonormal basis of ker A (complex), columns.
Mat null_space(const Mat& A, const Tolerance& tol = {});
/// Orthonormal basis of ker A over R, where A acts on real coefficient vectors.
RMat real_null_space(const RMat& A, const Tolerance& tol = {});

Mat expm(const Mat& A);

bool is_real(const Mat& A, double eps = 0.0);
double fro(const Mat& A);

Mat eye(int n);
Mat omega2();
/// J_{2n} = [[0, I_n], [-I_n, 0]].
Mat J(int n);
/// I_{p,q} = diag(I_p, -I_q).
Mat Ipq(int p, int q);
Mat blkdiag(const std::vector<Mat>& blocks);
Mat diag(const std::vector<cplx>& d);
Mat diag_real(const std::vector<double>& d);

}  // namespace manirep
