#include "manirep/stabilizers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "exact.hpp"

namespace manirep {

namespace exact {

Q to_rational(double x) {
  if (!std::isfinite(x)) fail(ErrorKind::InvalidDescriptor, "non-finite entry");
  // continued fraction convergents, accepted once they round-trip
  double y = x;
  boost::multiprecision::cpp_int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(y);
    if (std::abs(a) > 1e18) break;
    boost::multiprecision::cpp_int ai = static_cast<long long>(a);
    boost::multiprecision::cpp_int h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Q cand(h1, k1);
    if (static_cast<double>(cand) == x) return cand;
    if (k1 > boost::multiprecision::cpp_int(1000000000)) break;
    double frac = y - a;
    if (frac == 0.0) break;
    y = 1.0 / frac;
  }
  int e = 0;
  double m = std::frexp(x, &e);
  long long mi = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Q r = Q(mi);
  boost::multiprecision::cpp_int p = 1;
  p <<= std::abs(e);
  return e >= 0 ? r * Q(p) : r / Q(p);
}

}  // namespace exact

namespace {

std::optional<GroupDescriptor> gl_or_empty(int k, Field f) {
  if (k <= 0) return std::nullopt;
  return GroupDescriptor::gl(k, f);
}

double threshold(const Tolerance& tol, const Mat& X) {
  return std::max(tol.abs_eps, tol.rel_eps * std::max(1.0, X.norm()));
}

void require_square(const Mat& X) {
  if (X.rows() != X.cols()) fail(ErrorKind::SizeMismatch, "matrix must be square");
}

}  // namespace

int BlockParabolic::dim() const {
  int d = off_rows * off_cols;
  if (top) d += group_dim(*top);
  if (bottom) d += group_dim(*bottom);
  return d;
}

Mat sample(const BlockParabolic& P, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed ^ 0x5DEECE66DULL);
  std::normal_distribution<double> N(0.0, 1.0);
  const int n = P.n, p = P.top_size;
  Mat B = Mat::Zero(n, n);
  if (p > 0) B.topLeftCorner(p, p) = P.top ? sample(*P.top, seed + 1, scale) : eye(p);
  if (n - p > 0) {
    B.bottomRightCorner(n - p, n - p) = sample(*P.bottom, seed + 2, scale);
    for (int i = 0; i < p; ++i)
      for (int j = p; j < n; ++j)
        B(i, j) = scale * cplx(N(rng), P.field == Field::C ? N(rng) : 0.0);
  }
  return P.conjugator * B * P.conjugator.inverse();
}

BlockParabolic stabilizer_left_mult(const Mat& X, Field f, const Tolerance& tol) {
  const int n = static_cast<int>(X.rows());
  if (X.cols() > n) fail(ErrorKind::SizeMismatch, "left multiplication needs k <= n");
  BlockParabolic P;
  P.n = n;
  P.field = f;
  const int r = X.size() == 0 ? 0 : checked_rank(X, tol);
  if (r == 0) {
    P.conjugator = eye(n);
  } else {
    Eigen::ColPivHouseholderQR<Mat> qr(X);
    P.conjugator = qr.householderQ() * Mat::Identity(n, n);
    // a column span whose first r columns are exactly col(X); keep it real for real X
    if (f == Field::R) P.conjugator = P.conjugator.real().cast<cplx>();
  }
  P.top_size = r;
  P.bottom = gl_or_empty(n - r, f);
  P.off_rows = r;
  P.off_cols = n - r;
  return P;
}

BlockParabolic stabilizer_congruence_skew(const Mat& X, Field f, const Tolerance& tol) {
  require_square(X);
  if ((X + X.transpose()).norm() > threshold(tol, X))
    fail(ErrorKind::NotSkew, "matrix is not skew-symmetric");
  const int n = static_cast<int>(X.rows());
  YoulaResult y = youla_skew(X, f, tol);
  BlockParabolic P;
  P.n = n;
  P.field = f;
  P.conjugator = y.Q;
  const int p = 2 * y.r;
  P.top_size = p;
  if (p > 0) {
    std::vector<Mat> blocks;
    // T D T^T = D is the same as T^T D^{-1} T = D^{-1}
    for (int i = 0; i < y.r; ++i) blocks.push_back(-omega2() / y.lambda[i]);
    P.top = GroupDescriptor::with_form(Family::Sp, blkdiag(blocks), f);
  }
  P.bottom = gl_or_empty(n - p, f);
  P.off_rows = p;
  P.off_cols = n - p;
  return P;
}

BlockParabolic stabilizer_congruence_sym(const Mat& X, Field f, const Tolerance& tol) {
  require_square(X);
  if ((X - X.transpose()).norm() > threshold(tol, X))
    fail(ErrorKind::NotSymmetric, "matrix is not symmetric");
  const int n = static_cast<int>(X.rows());
  BlockParabolic P;
  P.n = n;
  P.field = f;
  const int r = checked_rank(X, tol);
  std::vector<double> ev;
  if (f == Field::R) {
    if (!is_real(X, threshold(tol, X))) fail(ErrorKind::InvalidDescriptor, "real field needs a real matrix");
    RMat S = X.real();
    S = (S + S.transpose()) / 2;
    Eigen::SelfAdjointEigenSolver<RMat> es(S);
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    const auto& w = es.eigenvalues();
    // the r eigenvalues of largest modulus, in descending order, then the zeros
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return std::abs(w(a)) > std::abs(w(b)); });
    std::sort(idx.begin(), idx.begin() + r, [&](int a, int b) { return w(a) > w(b); });
    RMat Q(n, n);
    for (int i = 0; i < n; ++i) Q.col(i) = es.eigenvectors().col(idx[i]);
    for (int i = 0; i < r; ++i) ev.push_back(w(idx[i]));
    // merge eigenvalues closer than the relative gap
    if (!ev.empty()) {
      const double spread = std::max(std::abs(ev.front()), std::abs(ev.back()));
      const double tau = 1e-7 * spread;
      size_t s = 0;
      while (s < ev.size()) {
        size_t e = s + 1;
        while (e < ev.size() && std::abs(ev[e] - ev[e - 1]) <= tau) ++e;
        double mean = std::accumulate(ev.begin() + s, ev.begin() + e, 0.0) / (e - s);
        for (size_t i = s; i < e; ++i) ev[i] = mean;
        s = e;
      }
    }
    P.conjugator = Q.cast<cplx>();
  } else {
    TakagiResult t = takagi(X, tol);
    P.conjugator = t.U;
    for (int i = 0; i < r; ++i) ev.push_back(t.sigma[i]);
  }
  P.top_size = r;
  if (r > 0) {
    std::vector<double> inv;
    for (double e : ev) inv.push_back(1.0 / e);
    P.top = GroupDescriptor::with_form(Family::O, diag_real(inv), f);
  }
  P.bottom = gl_or_empty(n - r, f);
  P.off_rows = r;
  P.off_cols = n - r;
  return P;
}

int commutant_dim(const std::vector<EigenClass>& classes) {
  int d = 0;
  for (const auto& c : classes) {
    int s = 0;
    for (int a : c.blocks)
      for (int b : c.blocks) s += std::min(a, b);
    d += (c.pair ? 2 : 1) * s;
  }
  return d;
}

namespace {

template <class K>
ToeplitzBlockDescriptor similarity_exact(const std::vector<std::vector<K>>& Xq, Field f, bool real_input) {
  using P = exact::Poly<K>;
  const int n = static_cast<int>(Xq.size());
  auto inv = exact::invariant_factors(Xq);
  std::vector<std::vector<std::pair<P, int>>> sqf;
  std::vector<P> pieces;
  for (const auto& d : inv) {
    sqf.push_back(exact::squarefree(d));
    for (const auto& [p, e] : sqf.back()) pieces.push_back(p);
  }
  auto basis = exact::coprime_basis(pieces);
  ToeplitzBlockDescriptor out;
  out.field = f;
  out.n = n;
  for (const auto& c : basis) {
    std::vector<int> blocks;
    for (const auto& fac : sqf)
      for (const auto& [p, e] : fac)
        if (exact::gcd(c, p).deg() >= 1) blocks.push_back(e);
    std::sort(blocks.rbegin(), blocks.rend());
    auto rts = exact::roots(c);
    std::sort(rts.begin(), rts.end(), [](cplx a, cplx b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    const double scale = 1.0 + std::accumulate(rts.begin(), rts.end(), 0.0,
                                               [](double s, cplx z) { return std::max(s, std::abs(z)); });
    for (cplx z : rts) {
      const bool realroot = std::abs(z.imag()) <= 1e-9 * scale;
      if (f == Field::R && real_input) {
        if (realroot) {
          out.classes.push_back({cplx(z.real(), 0.0), false, blocks});
        } else if (z.imag() > 0) {
          out.classes.push_back({z, true, blocks});
        }
      } else {
        out.classes.push_back({realroot && real_input ? cplx(z.real(), 0.0) : z, false, blocks});
      }
    }
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const EigenClass& a, const EigenClass& b) {
    if (a.eig.real() != b.eig.real()) return a.eig.real() < b.eig.real();
    return a.eig.imag() < b.eig.imag();
  });
  out.commutant_dim = commutant_dim(out.classes);
  return out;
}

int rank_at(const Mat& A, double cut) {
  auto sv = singular_values(A);
  int r = 0;
  for (double s : sv)
    if (s > cut) ++r;
  return r;
}

ToeplitzBlockDescriptor similarity_numeric(const Mat& X, Field f, const Tolerance& tol) {
  const int n = static_cast<int>(X.rows());
  const bool real_input = is_real(X, threshold(tol, X));
  const double scale = std::max(1.0, X.norm());
  Eigen::ComplexEigenSolver<Mat> es(X);
  std::vector<cplx> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = es.eigenvalues()(i);
  // single-linkage clusters; defective eigenvalues split like eps^(1/k)
  const double rho = std::sqrt(tol.rel_eps) * scale;
  std::vector<int> lab(n, -1);
  int nc = 0;
  for (int i = 0; i < n; ++i) {
    if (lab[i] >= 0) continue;
    lab[i] = nc;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b)
        if (lab[b] < 0 && std::abs(ev[a] - ev[b]) <= rho) {
          lab[b] = nc;
          stack.push_back(b);
        }
    }
    ++nc;
  }
  ToeplitzBlockDescriptor out;
  out.field = f;
  out.n = n;
  std::vector<std::pair<cplx, std::vector<int>>> found;
  for (int c = 0; c < nc; ++c) {
    cplx lam = 0;
    int m = 0;
    for (int i = 0; i < n; ++i)
      if (lab[i] == c) {
        lam += ev[i];
        ++m;
      }
    lam /= static_cast<double>(m);
    if (real_input && std::abs(lam.imag()) <= rho) lam = lam.real();
    Mat N = X - lam * eye(n);
    Mat Pw = eye(n);
    std::vector<int> nu{0};
    for (int j = 1; j <= m; ++j) {
      Pw = Pw * N;
      const double cut = std::max(tol.abs_eps, tol.rel_eps * std::pow(scale, j));
      const int lo = rank_at(Pw, cut * 1e-2), hi = rank_at(Pw, cut * 1e2);
      if (lo != hi) fail(ErrorKind::IllConditioned, "Jordan structure is ambiguous within the tolerance band");
      nu.push_back(n - lo);
    }
    if (nu.back() != m) fail(ErrorKind::IllConditioned, "eigenvalue cluster does not match its nullity");
    std::vector<int> atleast;
    for (int j = 1; j <= m; ++j) atleast.push_back(nu[j] - nu[j - 1]);
    for (size_t j = 1; j < atleast.size(); ++j)
      if (atleast[j] > atleast[j - 1]) fail(ErrorKind::IllConditioned, "inconsistent nullity sequence");
    std::vector<int> blocks;
    for (int j = 0; j < m; ++j) {
      const int cnt = atleast[j] - (j + 1 < m ? atleast[j + 1] : 0);
      for (int t = 0; t < cnt; ++t) blocks.push_back(j + 1);
    }
    std::sort(blocks.rbegin(), blocks.rend());
    found.push_back({lam, blocks});
  }
  for (auto& [lam, blocks] : found) {
    if (f == Field::R && real_input && lam.imag() != 0.0) {
      if (lam.imag() < 0) continue;
      out.classes.push_back({lam, true, blocks});
    } else {
      out.classes.push_back({lam, false, blocks});
    }
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const EigenClass& a, const EigenClass& b) {
    if (a.eig.real() != b.eig.real()) return a.eig.real() < b.eig.real();
    return a.eig.imag() < b.eig.imag();
  });
  out.commutant_dim = commutant_dim(out.classes);
  int total = 0;
  for (const auto& c : out.classes)
    total += (c.pair ? 2 : 1) * std::accumulate(c.blocks.begin(), c.blocks.end(), 0);
  if (total != n) fail(ErrorKind::IllConditioned, "eigenvalue pairing failed");
  return out;
}

}  // namespace

ToeplitzBlockDescriptor stabilizer_similarity(const Mat& X, SimilarityMode mode, Field f,
                                              const Tolerance& tol) {
  require_square(X);
  const bool real_input = is_real(X);
  if (f == Field::R && !real_input) fail(ErrorKind::InvalidDescriptor, "real field needs a real matrix");
  if (mode == SimilarityMode::Numeric) return similarity_numeric(X, f, tol);
  const int n = static_cast<int>(X.rows());
  if (real_input) {
    std::vector<std::vector<exact::Q>> Xq(n, std::vector<exact::Q>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Xq[i][j] = exact::to_rational(X(i, j).real());
    return similarity_exact(Xq, f, true);
  }
  std::vector<std::vector<exact::QI>> Xq(n, std::vector<exact::QI>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      Xq[i][j] = exact::QI(exact::to_rational(X(i, j).real()), exact::to_rational(X(i, j).imag()));
  return similarity_exact(Xq, f, false);
}

ToeplitzBlockDescriptor stabilizer_similarity(const Mat& X, SimilarityMode mode, const Tolerance& tol) {
  return stabilizer_similarity(X, mode, is_real(X) ? Field::R : Field::C, tol);
}

namespace {

void check_point(const GroupDescriptor& g, const ModulePoint& pt) {
  validate(pt.module);
  if (pt.X.rows() != module_rows(pt.module) || pt.X.cols() != module_cols(pt.module))
    fail(ErrorKind::SizeMismatch, "point does not match the module shape");
  const int need = pt.action == ActionKind::RightMultInv ? static_cast<int>(pt.X.cols())
                                                         : static_cast<int>(pt.X.rows());
  if (need != g.n) fail(ErrorKind::SizeMismatch, "group size does not match the module");
  if (pt.action != ActionKind::LeftMult && pt.action != ActionKind::RightMultInv &&
      pt.X.rows() != pt.X.cols())
    fail(ErrorKind::SizeMismatch, "action needs square matrices");
  if (is_complex_group(g) && pt.action == ActionKind::CongruenceStar)
    fail(ErrorKind::InvalidDescriptor, "conjugate congruence is not complex-linear");
}

Mat stacked_map(const GroupDescriptor& g, const std::vector<ModulePoint>& points,
                const std::vector<Mat>& basis) {
  Eigen::Index rows = 0;
  for (const auto& pt : points) rows += pt.X.size();
  Mat M(rows, static_cast<Eigen::Index>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) {
    Eigen::Index off = 0;
    for (const auto& pt : points) {
      Mat L = linearized_action(pt.action, basis[j], pt.X);
      M.block(off, j, L.size(), 1) = Eigen::Map<const Eigen::VectorXcd>(L.data(), L.size());
      off += L.size();
    }
  }
  (void)g;
  return M;
}

}  // namespace

RMat linearized_map_real(const GroupDescriptor& g, const std::vector<ModulePoint>& points) {
  for (const auto& pt : points) check_point(g, pt);
  auto basis = lie_algebra_basis(g).basis;
  return realify_rows(stacked_map(g, points, basis));
}

int intersect_stabilizer_dim(const GroupDescriptor& g, const std::vector<ModulePoint>& points) {
  validate(g);
  const int d = group_dim(g);
  if (points.empty()) return d;
  for (const auto& pt : points) check_point(g, pt);
  auto basis = lie_algebra_basis(g).basis;
  Mat M = stacked_map(g, points, basis);
  if (is_complex_group(g)) return d - numerical_rank(M);
  return d - real_rank(M);
}

int stabilizer_dim_in_group(const GroupDescriptor& g, const ModuleDescriptor& m, ActionKind a,
                            const Mat& X) {
  return intersect_stabilizer_dim(g, {ModulePoint{m, a, X}});
}

}  // namespace manirep
