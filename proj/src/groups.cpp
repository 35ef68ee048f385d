#include "manirep/groups.hpp"

#include <cmath>
#include <random>

namespace manirep {

namespace {

bool omitted(Family f) {
  return f == Family::SOStar || f == Family::SUpq || f == Family::Sppq || f == Family::SUStar;
}

Mat E(int n, int i, int j) {
  Mat M = Mat::Zero(n, n);
  M(i, j) = 1.0;
  return M;
}

double opnorm(const Mat& A) {
  auto sv = singular_values(A);
  return sv.empty() ? 0.0 : sv.front();
}

double thr(const Tolerance& tol, double scale) {
  return std::max(tol.abs_eps, tol.rel_eps * scale);
}

std::vector<Mat> skew_basis(int n) {
  std::vector<Mat> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(E(n, i, j) - E(n, j, i));
  return out;
}

std::vector<Mat> sym_basis(int n) {
  std::vector<Mat> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.push_back(i == j ? E(n, i, i) : Mat(E(n, i, j) + E(n, j, i)));
  return out;
}

std::vector<Mat> su_basis(int n, bool traceless) {
  const cplx I(0, 1);
  std::vector<Mat> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.push_back(E(n, i, j) - E(n, j, i));
      out.push_back(I * (E(n, i, j) + E(n, j, i)));
    }
  if (traceless) {
    for (int j = 0; j + 1 < n; ++j) out.push_back(I * (E(n, j, j) - E(n, n - 1, n - 1)));
  } else {
    for (int j = 0; j < n; ++j) out.push_back(I * E(n, j, j));
  }
  return out;
}

std::vector<Mat> sp_compact_basis(int m) {
  const cplx I(0, 1);
  std::vector<Mat> out;
  for (const Mat& C : su_basis(m, false)) out.push_back(blkdiag({C, C.conjugate()}));
  for (const Mat& S : sym_basis(m)) {
    for (cplx ph : {cplx(1, 0), I}) {
      Mat D = ph * S;
      Mat Z = Mat::Zero(2 * m, 2 * m);
      Z.topRightCorner(m, m) = D;
      Z.bottomLeftCorner(m, m) = -D.conjugate();
      out.push_back(Z);
    }
  }
  return out;
}

bool is_so_type(Family f) { return f == Family::SO || f == Family::O || f == Family::SOpq; }
bool is_sp_type(Family f) { return f == Family::Sp || f == Family::SpCompact; }

}  // namespace

GroupDescriptor GroupDescriptor::with_form(Family fam, const Mat& form, Field f) {
  GroupDescriptor g{fam, static_cast<int>(form.rows()), f, {}, form};
  return g;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::SL: return "SL";
    case Family::SO: return "SO";
    case Family::Sp: return "Sp";
    case Family::SU: return "SU";
    case Family::SOpq: return "SOpq";
    case Family::SpCompact: return "SpCompact";
    case Family::GL: return "GL";
    case Family::U: return "U";
    case Family::O: return "O";
    case Family::SOStar: return "SOstar";
    case Family::SUpq: return "SUpq";
    case Family::Sppq: return "Sppq";
    case Family::SUStar: return "SUstar";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  for (Family f : {Family::SL, Family::SO, Family::Sp, Family::SU, Family::SOpq, Family::SpCompact,
                   Family::GL, Family::U, Family::O, Family::SOStar, Family::SUpq, Family::Sppq,
                   Family::SUStar})
    if (family_name(f) == s) return f;
  if (s == "SP") return Family::Sp;
  fail(ErrorKind::InvalidDescriptor, "unknown group family '" + s + "'");
}

void validate(const GroupDescriptor& g) {
  if (omitted(g.family))
    fail(ErrorKind::UnsupportedGroup, family_name(g.family) + " is not a supported real form");
  if (g.n < 1) fail(ErrorKind::InvalidDescriptor, "group size must be positive");
  if (is_sp_type(g.family) && g.n % 2 != 0)
    fail(ErrorKind::InvalidDescriptor, "symplectic groups need even size");
  if ((g.family == Family::SOpq) != g.signature.has_value())
    fail(ErrorKind::InvalidDescriptor, "signature is present exactly for SOpq");
  if (g.signature) {
    auto [p, q] = *g.signature;
    if (p < 0 || q < 0 || p + q != g.n) fail(ErrorKind::InvalidDescriptor, "signature must sum to n");
  }
  if (g.form) {
    const Mat& B = *g.form;
    if (B.rows() != g.n || B.cols() != g.n) fail(ErrorKind::InvalidDescriptor, "form size mismatch");
    if (numerical_rank(B) != g.n) fail(ErrorKind::InvalidDescriptor, "form is degenerate");
    const double s = std::max(1.0, B.norm());
    if (g.family == Family::SO || g.family == Family::O) {
      if ((B - B.transpose()).norm() > 1e-10 * s)
        fail(ErrorKind::InvalidDescriptor, "orthogonal form must be symmetric");
    } else if (g.family == Family::Sp) {
      if ((B + B.transpose()).norm() > 1e-10 * s)
        fail(ErrorKind::InvalidDescriptor, "symplectic form must be skew");
    } else if (g.family == Family::SpCompact) {
      if ((B - J(g.n / 2)).norm() > 1e-12)
        fail(ErrorKind::InvalidDescriptor, "compact symplectic group uses the standard J");
    } else {
      fail(ErrorKind::InvalidDescriptor, family_name(g.family) + " takes no form");
    }
    const bool real_family =
        g.family == Family::SO || g.family == Family::O || g.family == Family::Sp;
    if (g.field == Field::R && real_family && !is_real(B, 1e-14))
      fail(ErrorKind::InvalidDescriptor, "real group with a complex form");
  }
}

bool is_complex_group(const GroupDescriptor& g) {
  switch (g.family) {
    case Family::SL:
    case Family::SO:
    case Family::Sp:
    case Family::GL:
    case Family::O: return g.field == Field::C;
    default: return false;
  }
}

bool has_complex_entries(const GroupDescriptor& g) {
  return is_complex_group(g) || g.family == Family::SU || g.family == Family::SpCompact ||
         g.family == Family::U;
}

Mat defining_form(const GroupDescriptor& g) {
  if (g.form) return *g.form;
  if (g.family == Family::SOpq) return Ipq(g.signature->first, g.signature->second);
  if (is_sp_type(g.family) || g.family == Family::Sppq) return J(g.n / 2);
  return eye(g.n);
}

int group_dim(const GroupDescriptor& g) {
  if (!omitted(g.family)) validate(g);
  const int n = g.n;
  const int m = n / 2;
  switch (g.family) {
    case Family::SL:
    case Family::SU:
    case Family::SUpq:
    case Family::SUStar: return n * n - 1;
    case Family::SO:
    case Family::SOpq:
    case Family::O:
    case Family::SOStar: return n * (n - 1) / 2;
    case Family::Sp:
    case Family::SpCompact:
    case Family::Sppq: return 2 * m * m + m;
    case Family::GL:
    case Family::U: return n * n;
  }
  return 0;
}

bool contains(const GroupDescriptor& g, const Mat& A, const Tolerance& tol) {
  validate(g);
  if (A.rows() != g.n || A.cols() != g.n) fail(ErrorKind::SizeMismatch, "element has wrong size");
  const int n = g.n;
  const double an = std::max(1.0, opnorm(A));
  if (!has_complex_entries(g) && !is_real(A, thr(tol, an))) return false;
  auto unitary = [&]() {
    return (A.adjoint() * A - eye(n)).norm() <= thr(tol, n);
  };
  auto preserves = [&](const Mat& B) {
    return (A.transpose() * B * A - B).norm() <= thr(tol, B.norm() * an * an);
  };
  const cplx det = A.determinant();
  switch (g.family) {
    case Family::GL: return numerical_rank(A, tol) == n;
    case Family::SL: return std::abs(det - 1.0) <= thr(tol, std::pow(an, n));
    case Family::SO:
    case Family::SOpq: return preserves(defining_form(g)) && std::abs(det - 1.0) < 0.5;
    case Family::O: return preserves(defining_form(g));
    case Family::Sp: return preserves(defining_form(g));
    case Family::SU: return unitary() && std::abs(det - 1.0) <= thr(tol, n);
    case Family::U: return unitary();
    case Family::SpCompact: return unitary() && preserves(defining_form(g));
    default: break;
  }
  fail(ErrorKind::UnsupportedGroup, "unsupported family");
}

bool algebra_contains(const GroupDescriptor& g, const Mat& Z, const Tolerance& tol) {
  validate(g);
  if (Z.rows() != g.n || Z.cols() != g.n) fail(ErrorKind::SizeMismatch, "algebra element has wrong size");
  const double zn = std::max(1.0, Z.norm());
  if (!has_complex_entries(g) && !is_real(Z, thr(tol, zn))) return false;
  auto skew_for = [&](const Mat& B) {
    return (Z.transpose() * B + B * Z).norm() <= thr(tol, zn * B.norm());
  };
  auto anti_herm = [&]() { return (Z + Z.adjoint()).norm() <= thr(tol, zn); };
  switch (g.family) {
    case Family::GL: return true;
    case Family::SL: return std::abs(Z.trace()) <= thr(tol, zn);
    case Family::SO:
    case Family::SOpq:
    case Family::O:
    case Family::Sp: return skew_for(defining_form(g));
    case Family::SU: return anti_herm() && std::abs(Z.trace()) <= thr(tol, zn);
    case Family::U: return anti_herm();
    case Family::SpCompact: return anti_herm() && skew_for(defining_form(g));
    default: break;
  }
  fail(ErrorKind::UnsupportedGroup, "unsupported family");
}

LieAlgebraBasis lie_algebra_basis(const GroupDescriptor& g) {
  validate(g);
  const int n = g.n;
  LieAlgebraBasis out{g, {}};
  auto& b = out.basis;
  switch (g.family) {
    case Family::GL:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.push_back(E(n, i, j));
      break;
    case Family::SL:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) b.push_back(E(n, i, j));
      for (int j = 0; j + 1 < n; ++j) b.push_back(E(n, j, j) - E(n, n - 1, n - 1));
      break;
    case Family::SO:
    case Family::SOpq:
    case Family::O: {
      Mat Binv = defining_form(g).inverse();
      for (const Mat& S : skew_basis(n)) b.push_back(Binv * S);
      break;
    }
    case Family::Sp: {
      Mat Winv = defining_form(g).inverse();
      for (const Mat& S : sym_basis(n)) b.push_back(Winv * S);
      break;
    }
    case Family::SU: b = su_basis(n, true); break;
    case Family::U: b = su_basis(n, false); break;
    case Family::SpCompact: b = sp_compact_basis(n / 2); break;
    default: fail(ErrorKind::UnsupportedGroup, "unsupported family");
  }
  return out;
}

Mat sample_algebra(const GroupDescriptor& g, std::uint64_t seed, double scale) {
  auto basis = lie_algebra_basis(g).basis;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N(0.0, 1.0);
  Mat Z = Mat::Zero(g.n, g.n);
  const bool cx = is_complex_group(g);
  for (const Mat& B : basis) {
    cplx c(N(rng), cx ? N(rng) : 0.0);
    Z += c * B;
  }
  double zn = Z.norm();
  if (zn > 0) Z *= scale / zn;
  return Z;
}

namespace {

Mat haar_like(int n, bool complex_entries, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  Mat G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = cplx(N(rng), complex_entries ? N(rng) : 0.0);
  Eigen::HouseholderQR<Mat> qr(G);
  Mat Q = qr.householderQ();
  Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    cplx d = R(j, j);
    cplx ph = std::abs(d) > 0 ? d / std::abs(d) : cplx(1, 0);
    Q.col(j) *= ph;
  }
  return Q;
}

}  // namespace

Mat sample(const GroupDescriptor& g, std::uint64_t seed, double scale) {
  validate(g);
  const int n = g.n;
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL);
  std::normal_distribution<double> N(0.0, 1.0);
  switch (g.family) {
    case Family::SO:
    case Family::O:
      if (g.field == Field::R && !g.form) {
        Mat Q = haar_like(n, false, rng);
        if (Q.determinant().real() < 0) Q.col(0) *= -1.0;
        return Q;
      }
      break;
    case Family::SU: {
      Mat Q = haar_like(n, true, rng);
      cplx d = Q.determinant();
      Q.col(0) *= std::conj(d) / std::abs(d);
      return Q;
    }
    case Family::U: return haar_like(n, true, rng);
    case Family::SL: {
      const bool cx = g.field == Field::C;
      Mat G(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = cplx(N(rng), cx ? N(rng) : 0.0);
      cplx d = G.determinant();
      if (!cx) {
        if (d.real() < 0) {
          G.row(0) *= -1.0;
          d = -d;
        }
        return G * std::pow(std::abs(d), -1.0 / n);
      }
      return G * std::pow(d, cplx(-1.0 / n, 0.0));
    }
    default: break;
  }
  return expm(sample_algebra(g, seed ^ 0xA5A5A5A5ULL, scale));
}

int special_subgroup_dim(const GroupDescriptor& g) {
  int d = group_dim(g);
  if (g.family == Family::GL || g.family == Family::U) return d - 1;
  return d;
}

int special_subgroup_dim(const ProductGroup& g) {
  if (g.factors.empty()) return 0;
  int total = 0;
  bool continuous_det = false;
  const bool cx = is_complex_group(g.factors.front());
  for (const auto& f : g.factors) {
    if (is_complex_group(f) != cx)
      fail(ErrorKind::InvalidDescriptor, "product mixes real and complex dimension counts");
    total += group_dim(f);
    if (f.family == Family::GL || f.family == Family::U) continuous_det = true;
  }
  return continuous_det ? total - 1 : total;
}

}  // namespace manirep
