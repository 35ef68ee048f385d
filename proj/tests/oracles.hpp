#pragma once

// Reference computations used by the tests. None of these call into the
// library's own formulas; they recompute from first principles.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "manirep/embeddings.hpp"
#include "manirep/weyl.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using manirep::Mat;

// Rank of a rational matrix by fraction-exact Gaussian elimination.
inline int exact_rank(std::vector<std::vector<cpp_rational>> a) {
  const size_t rows = a.size();
  if (rows == 0) return 0;
  const size_t cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const cpp_rational f = a[i][c] / a[r][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

using IMat = std::vector<std::vector<long long>>;

inline IMat imat(int r, int c) { return IMat(r, std::vector<long long>(c, 0)); }

inline IMat imul(const IMat& a, const IMat& b) {
  IMat out = imat(static_cast<int>(a.size()), static_cast<int>(b[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline IMat itranspose(const IMat& a) {
  IMat out = imat(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

inline Mat to_mat(const IMat& a) {
  Mat m(a.size(), a[0].size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) m(i, j) = static_cast<double>(a[i][j]);
  return m;
}

enum class Lin { LeftMult, Congruence, Similarity };

// Nullity of Z -> ZX, ZX + XZ^T or ZX - XZ on gl_n, with X an integer matrix.
inline int gl_stabilizer_dim(const IMat& X, Lin kind) {
  const int n = static_cast<int>(X.size());
  const int k = static_cast<int>(X[0].size());
  const int unknowns = n * n;
  std::vector<std::vector<cpp_rational>> rows(static_cast<size_t>(n * k),
                                              std::vector<cpp_rational>(unknowns, 0));
  // Z(a, b) has index a * n + b; equation index (i, j) is i * k + j.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      auto& row = rows[static_cast<size_t>(i * k + j)];
      for (int b = 0; b < n; ++b) row[i * n + b] += X[b][j];  // (ZX)_{ij}
      if (kind == Lin::Congruence)
        for (int b = 0; b < n; ++b) row[j * n + b] += X[i][b];  // (X Z^T)_{ij}
      if (kind == Lin::Similarity)
        for (int a = 0; a < n; ++a) row[a * n + j] -= X[i][a];  // (XZ)_{ij}
    }
  return unknowns - exact_rank(rows);
}

// Random integer unimodular matrix: a product of elementary shears.
inline IMat unimodular(int n, std::mt19937_64& rng, int steps) {
  IMat S = imat(n, n);
  for (int i = 0; i < n; ++i) S[i][i] = 1;
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-1, 1);
  for (int t = 0; t < steps; ++t) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int c = coef(rng);
    for (int col = 0; col < n; ++col) S[i][col] += c * S[j][col];
  }
  return S;
}

// Inverse of a unimodular integer matrix over the integers (Gauss-Jordan).
inline IMat unimodular_inverse(const IMat& S) {
  const int n = static_cast<int>(S.size());
  std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = S[i][j];
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    const cpp_rational p = a[c][c];
    for (auto& v : a[c]) v /= p;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const cpp_rational f = a[i][c];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IMat inv = imat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = static_cast<long long>(boost::multiprecision::numerator(a[i][n + j]));
  return inv;
}

inline IMat random_int(int r, int c, std::mt19937_64& rng, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  IMat a = imat(r, c);
  for (auto& row : a)
    for (auto& v : row) v = d(rng);
  return a;
}

// n x k integer matrix of rank at most r.
inline IMat low_rank(int n, int k, int r, std::mt19937_64& rng) {
  if (r == 0) return imat(n, k);
  return imul(random_int(n, r, rng), random_int(r, k, rng));
}

inline IMat skew_with_rank(int n, int blocks, std::mt19937_64& rng) {
  IMat S = imat(n, n);
  std::uniform_int_distribution<int> scale(1, 3);
  for (int b = 0; b < blocks; ++b) {
    const int s = scale(rng);
    S[2 * b][2 * b + 1] = s;
    S[2 * b + 1][2 * b] = -s;
  }
  IMat M = unimodular(n, rng, 2 * n);
  return imul(itranspose(M), imul(S, M));
}

inline IMat sym_with_rank(int n, int r, std::mt19937_64& rng) {
  IMat D = imat(n, n);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int i = 0; i < r; ++i) {
    int v = 0;
    while (v == 0) v = val(rng);
    D[i][i] = v;
  }
  IMat M = unimodular(n, rng, 2 * n);
  return imul(itranspose(M), imul(D, M));
}

// S J S^{-1} with a random Jordan structure over small integer eigenvalues,
// optionally with real 2x2 rotation-type blocks for complex pairs.
inline IMat jordan_conjugate(int n, std::mt19937_64& rng, bool pairs) {
  IMat Jm = imat(n, n);
  std::uniform_int_distribution<int> eig(-1, 1), size(1, 3), coin(0, 3);
  int pos = 0;
  while (pos < n) {
    if (pairs && pos + 2 <= n && coin(rng) == 0) {
      const int a = eig(rng);
      Jm[pos][pos] = a;
      Jm[pos + 1][pos + 1] = a;
      Jm[pos][pos + 1] = -1;
      Jm[pos + 1][pos] = 1;
      pos += 2;
      continue;
    }
    const int lam = eig(rng);
    const int s = std::min(size(rng), n - pos);
    for (int i = 0; i < s; ++i) {
      Jm[pos + i][pos + i] = lam;
      if (i + 1 < s) Jm[pos + i][pos + i + 1] = 1;
    }
    pos += s;
  }
  IMat S = unimodular(n, rng, n);
  return imul(S, imul(Jm, unimodular_inverse(S)));
}

// Hook-content formula for sl_n: partition lambda_i = kappa_i + ... + kappa_{n-1}.
inline cpp_int hook_content_dim(int n, const std::vector<int>& kappa) {
  std::vector<int> lambda(n, 0);
  for (int i = n - 2; i >= 0; --i) lambda[i] = lambda[i + 1] + kappa[i];
  std::vector<int> conj(lambda.empty() ? 0 : lambda[0], 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < lambda[i]; ++j) ++conj[j];
  cpp_int num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      num *= n + j - i;
      den *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
  return num / den;
}

// Weyl dimension from a Cartan matrix: positive roots are generated by root
// strings in the simple-root basis, and the product runs over coroots.
// a[i][j] = <alpha_j, alpha_i^vee>; len2[i] = (alpha_i, alpha_i).
struct RootSystem {
  int r = 0;
  // Per positive root, the coroot coefficients w_i = c_i |alpha_i|^2 / |alpha|^2.
  std::vector<std::vector<cpp_rational>> coroots;

  RootSystem(const std::vector<std::vector<int>>& a, const std::vector<int>& len2) {
    r = static_cast<int>(a.size());
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < r; ++i) {
      std::vector<int> e(r, 0);
      e[i] = 1;
      roots.push_back(e);
    }
    auto is_root = [&](const std::vector<int>& v) {
      return std::find(roots.begin(), roots.end(), v) != roots.end();
    };
    for (size_t idx = 0; idx < roots.size(); ++idx) {
      const std::vector<int> beta = roots[idx];
      for (int i = 0; i < r; ++i) {
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!is_root(down)) break;
          ++p;
        }
        int pair = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < r; ++j) pair += beta[j] * a[i][j];
        if (p - pair > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!is_root(up)) roots.push_back(up);
        }
      }
    }
    for (const auto& alpha : roots) {
      // (alpha_i, alpha_j) = len2[i] * a[i][j] / 2.
      cpp_rational a2 = 0;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a2 += cpp_rational(alpha[i] * alpha[j] * len2[i] * a[i][j], 2);
      std::vector<cpp_rational> w(r);
      for (int i = 0; i < r; ++i) w[i] = cpp_rational(alpha[i] * len2[i]) / a2;
      coroots.push_back(w);
    }
  }

  size_t positive_roots() const { return coroots.size(); }

  cpp_int dim(const std::vector<int>& kappa) const {
    cpp_rational prod = 1;
    for (const auto& w : coroots) {
      cpp_rational top = 0, bottom = 0;
      for (int i = 0; i < r; ++i) {
        top += w[i] * (kappa[i] + 1);
        bottom += w[i];
      }
      prod *= top / bottom;
    }
    return boost::multiprecision::numerator(prod);
  }
};

// Bourbaki Cartan data for the algebra of manirep::Algebra at size n.
inline void cartan_data(manirep::Algebra alg, int n, std::vector<std::vector<int>>& a,
                        std::vector<int>& len2) {
  using manirep::Algebra;
  int r = alg == Algebra::SL ? n - 1 : (alg == Algebra::SO ? n / 2 : n);
  a.assign(r, std::vector<int>(r, 0));
  len2.assign(r, 2);
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {
    // a[i][j] = 2 (ai, aj) / (ai, ai) with (ai, aj) = -1 for adjacent nodes of
    // squared length 2, scaled below for the doubly laced ends.
    a[i][j] = -1;
    a[j][i] = -1;
  };
  if (alg == Algebra::SL) {
    for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
  } else if (alg == Algebra::SO && n % 2 == 1) {
    for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
    if (r >= 2) {
      len2[r - 1] = 1;
      a[r - 1][r - 2] = -2;
      a[r - 2][r - 1] = -1;
    } else if (r == 1) {
      len2[0] = 1;
    }
  } else if (alg == Algebra::SO) {
    for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
    if (r >= 3) link(r - 3, r - 1);
  } else {
    for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
    if (r >= 2) {
      len2[r - 1] = 4;
      a[r - 2][r - 1] = -2;
      a[r - 1][r - 2] = -1;
    }
  }
}

inline RootSystem root_system(manirep::Algebra alg, int n) {
  std::vector<std::vector<int>> a;
  std::vector<int> len2;
  cartan_data(alg, n, a, len2);
  return RootSystem(a, len2);
}

inline cpp_int weyl_dim_oracle(manirep::Algebra alg, int n, const std::vector<int>& kappa) {
  if (alg == manirep::Algebra::SL) return hook_content_dim(n, kappa);
  return root_system(alg, n).dim(kappa);
}

inline cpp_int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Rank of the finite-difference derivative of g -> embed(m, g) at the
// identity over a basis of Lie(G). This is the tangent dimension of the orbit.
inline int fd_tangent_rank(const manirep::ManifoldDescriptor& m) {
  using namespace manirep;
  const ManifoldData d = manifold_data(m);
  const auto basis = lie_algebra_basis(d.group).basis;
  if (basis.empty()) return 0;
  const double h = 1e-5;
  const Mat X0 = base_point(m).value;
  const Eigen::Index len = X0.size();
  const bool cplx_lin = is_complex_group(d.group);
  Eigen::MatrixXcd D(len, static_cast<Eigen::Index>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) {
    const Mat Z = basis[j];
    const Mat up = embed(m, expm(h * Z)).value, down = embed(m, expm(-h * Z)).value;
    const Mat col = (up - down) / (2 * h);
    D.col(static_cast<Eigen::Index>(j)) = Eigen::Map<const Eigen::VectorXcd>(col.data(), len);
  }
  Eigen::MatrixXd R;
  if (cplx_lin) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(D);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > 1e-6 * std::max(1.0, s(0))) ++rank;
    return rank;
  }
  R.resize(2 * len, D.cols());
  R << D.real(), D.imag();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(R);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > 1e-6 * std::max(1.0, s(0))) ++rank;
  return rank;
}

// Closed-form module dimensions in the row conventions of ManifoldDescriptor.
inline long long mp_closed_form(const manirep::ManifoldDescriptor& m) {
  using F = manirep::ManifoldFamily;
  const long long n = m.n, k = m.k;
  switch (m.family) {
    case F::GrReal:
    case F::GrComplexLocus:
    case F::FlReal: return (n + 2) * (n - 1) / 2;
    case F::GrComplex:
    case F::FlComplex: return n * n - 1;
    case F::GrQuaternionic:
    case F::GrSpReal:
    case F::GrSpComplex:
    case F::FlQuaternionic:
    case F::FlSpReal:
    case F::FlSpComplex: return (n - 1) * (2 * n + 1);
    case F::SLGr: return n * (n + 1) / 2;
    case F::LGrC:
    case F::LFl: return 2 * n * n + n;
    case F::SLGrStarH:
    case F::SOGrC:
    case F::IFlEven: return n * (2 * n - 1);
    case F::IGr: return n * (n - 1) / 2;
    case F::GrIndefinite: return (m.m + n + 2) * (m.m + n - 1) / 2;
    case F::IFlOdd: return (2 * n + m.p) * (2 * n + m.p - 1) / 2;
    case F::StNoncompactReal:
    case F::StNoncompactComplex:
    case F::StiefelReal:
    case F::StiefelComplex: return n * k;
    case F::StiefelQuaternionic: return 4 * n * k;
  }
  return -1;
}

}  // namespace oracle
