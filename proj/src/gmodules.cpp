#include "manirep/gmodules.hpp"

#include <cmath>

namespace manirep {

namespace {

Mat E(int r, int c, int i, int j) {
  Mat M = Mat::Zero(r, c);
  M(i, j) = 1.0;
  return M;
}

bool form_is_skew(const Mat& B) { return (B + B.transpose()).norm() <= 1e-10 * std::max(1.0, B.norm()); }
bool form_is_sym(const Mat& B) { return (B - B.transpose()).norm() <= 1e-10 * std::max(1.0, B.norm()); }

std::vector<Mat> skew_mats(int n) {
  std::vector<Mat> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(E(n, n, i, j) - E(n, n, j, i));
  return out;
}

std::vector<Mat> sym_mats(int n) {
  std::vector<Mat> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.push_back(i == j ? E(n, n, i, i) : Mat(E(n, n, i, j) + E(n, n, j, i)));
  return out;
}

// Basis of the trace-zero subspace of span(basis), over R or C.
std::vector<Mat> traceless_part(const std::vector<Mat>& basis, bool real) {
  const int d = static_cast<int>(basis.size());
  std::vector<Mat> out;
  if (real) {
    RMat T(2, d);
    for (int i = 0; i < d; ++i) {
      T(0, i) = basis[i].trace().real();
      T(1, i) = basis[i].trace().imag();
    }
    RMat K = real_null_space(T);
    for (int c = 0; c < K.cols(); ++c) {
      Mat M = Mat::Zero(basis[0].rows(), basis[0].cols());
      for (int i = 0; i < d; ++i) M += K(i, c) * basis[i];
      out.push_back(M);
    }
  } else {
    Mat T(1, d);
    for (int i = 0; i < d; ++i) T(0, i) = basis[i].trace();
    Mat K = null_space(T);
    for (int c = 0; c < K.cols(); ++c) {
      Mat M = Mat::Zero(basis[0].rows(), basis[0].cols());
      for (int i = 0; i < d; ++i) M += K(i, c) * basis[i];
      out.push_back(M);
    }
  }
  return out;
}

Eigen::VectorXcd vec(const Mat& X) { return Eigen::Map<const Eigen::VectorXcd>(X.data(), X.size()); }

Mat unvec(const Eigen::VectorXcd& v, int r, int c) { return Eigen::Map<const Mat>(v.data(), r, c); }

}  // namespace

std::string module_kind_name(ModuleKind k) {
  switch (k) {
    case ModuleKind::RectNK: return "RectNK";
    case ModuleKind::Alt2: return "Alt2";
    case ModuleKind::Sym2: return "Sym2";
    case ModuleKind::Sym2Traceless: return "Sym2Traceless";
    case ModuleKind::SLnTraceless: return "SLnTraceless";
    case ModuleKind::SUAlgebra: return "SUAlgebra";
    case ModuleKind::UAlgebra: return "UAlgebra";
    case ModuleKind::HermTraceless: return "HermTraceless";
    case ModuleKind::Alt2Form: return "Alt2Form";
    case ModuleKind::Sym2TracelessForm: return "Sym2TracelessForm";
    case ModuleKind::SpAlgebra: return "SpAlgebra";
    case ModuleKind::SymTracelessCapSU: return "SymTracelessCapSU";
  }
  return "?";
}

ModuleKind module_kind_from_name(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(ModuleKind::SymTracelessCapSU); ++i) {
    auto k = static_cast<ModuleKind>(i);
    if (module_kind_name(k) == s) return k;
  }
  fail(ErrorKind::InvalidDescriptor, "unknown module kind '" + s + "'");
}

std::string action_name(ActionKind a) {
  switch (a) {
    case ActionKind::LeftMult: return "LeftMult";
    case ActionKind::RightMultInv: return "RightMultInv";
    case ActionKind::Equivalence: return "Equivalence";
    case ActionKind::Congruence: return "Congruence";
    case ActionKind::Similarity: return "Similarity";
    case ActionKind::CongruenceStar: return "CongruenceStar";
  }
  return "?";
}

ActionKind action_from_name(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(ActionKind::CongruenceStar); ++i) {
    auto a = static_cast<ActionKind>(i);
    if (action_name(a) == s) return a;
  }
  fail(ErrorKind::InvalidDescriptor, "unknown action '" + s + "'");
}

bool is_real_structure(ModuleKind k) {
  switch (k) {
    case ModuleKind::SUAlgebra:
    case ModuleKind::UAlgebra:
    case ModuleKind::HermTraceless:
    case ModuleKind::SpAlgebra:
    case ModuleKind::SymTracelessCapSU: return true;
    default: return false;
  }
}

bool is_real_space(const ModuleDescriptor& m) {
  return is_real_structure(m.kind) || m.field == Field::R;
}

void validate(const ModuleDescriptor& m) {
  if (m.n < 1) fail(ErrorKind::InvalidDescriptor, "module size must be positive");
  if (m.kind == ModuleKind::RectNK) {
    if (!m.k || *m.k < 0) fail(ErrorKind::InvalidDescriptor, "RectNK needs a width k");
  } else if (m.k) {
    fail(ErrorKind::InvalidDescriptor, "only RectNK takes a width");
  }
  const bool needs_form = m.kind == ModuleKind::Alt2Form || m.kind == ModuleKind::Sym2TracelessForm;
  if (needs_form != m.form.has_value()) {
    if (m.form && (m.kind == ModuleKind::SpAlgebra || m.kind == ModuleKind::SymTracelessCapSU)) {
      if ((*m.form - J(m.n / 2)).norm() > 1e-12)
        fail(ErrorKind::InvalidDescriptor, "compact symplectic spaces use the standard J");
    } else {
      fail(ErrorKind::InvalidDescriptor, needs_form ? "form-twisted module needs a form"
                                                    : "module takes no form");
    }
  }
  if (m.kind == ModuleKind::SpAlgebra || m.kind == ModuleKind::SymTracelessCapSU) {
    if (m.n % 2 != 0) fail(ErrorKind::InvalidDescriptor, "symplectic spaces need even size");
  }
  if (needs_form) {
    const Mat& B = *m.form;
    if (B.rows() != m.n || B.cols() != m.n) fail(ErrorKind::InvalidDescriptor, "form size mismatch");
    if (numerical_rank(B) != m.n) fail(ErrorKind::InvalidDescriptor, "form is degenerate");
    if (!form_is_sym(B) && !form_is_skew(B))
      fail(ErrorKind::InvalidDescriptor, "form must be symmetric or skew");
    if (m.field == Field::R && !is_real(B, 1e-14))
      fail(ErrorKind::InvalidDescriptor, "real module with a complex form");
  }
}

int module_rows(const ModuleDescriptor& m) { return m.n; }
int module_cols(const ModuleDescriptor& m) { return m.kind == ModuleKind::RectNK ? *m.k : m.n; }

int module_dim(const ModuleDescriptor& m) {
  validate(m);
  const int n = m.n;
  const int h = n / 2;
  switch (m.kind) {
    case ModuleKind::RectNK: return n * *m.k;
    case ModuleKind::Alt2: return n * (n - 1) / 2;
    case ModuleKind::Sym2: return n * (n + 1) / 2;
    case ModuleKind::Sym2Traceless: return (n + 2) * (n - 1) / 2;
    case ModuleKind::SLnTraceless:
    case ModuleKind::SUAlgebra:
    case ModuleKind::HermTraceless: return n * n - 1;
    case ModuleKind::UAlgebra: return n * n;
    case ModuleKind::Alt2Form:
      return form_is_sym(*m.form) ? n * (n - 1) / 2 : 2 * h * h + h;
    case ModuleKind::Sym2TracelessForm:
      return form_is_sym(*m.form) ? (n + 2) * (n - 1) / 2 : (h - 1) * (2 * h + 1);
    case ModuleKind::SpAlgebra: return 2 * h * h + h;
    case ModuleKind::SymTracelessCapSU: return (h - 1) * (2 * h + 1);
  }
  return 0;
}

long long alt_power_dim(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

std::vector<Mat> module_basis(const ModuleDescriptor& m) {
  validate(m);
  const int n = m.n;
  const int h = n / 2;
  const cplx I(0, 1);
  std::vector<Mat> b;
  switch (m.kind) {
    case ModuleKind::RectNK:
      for (int j = 0; j < *m.k; ++j)
        for (int i = 0; i < n; ++i) b.push_back(E(n, *m.k, i, j));
      break;
    case ModuleKind::Alt2: b = skew_mats(n); break;
    case ModuleKind::Sym2: b = sym_mats(n); break;
    case ModuleKind::Sym2Traceless:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.push_back(E(n, n, i, j) + E(n, n, j, i));
      for (int j = 0; j + 1 < n; ++j) b.push_back(E(n, n, j, j) - E(n, n, n - 1, n - 1));
      break;
    case ModuleKind::SLnTraceless:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) b.push_back(E(n, n, i, j));
      for (int j = 0; j + 1 < n; ++j) b.push_back(E(n, n, j, j) - E(n, n, n - 1, n - 1));
      break;
    case ModuleKind::SUAlgebra: b = lie_algebra_basis(GroupDescriptor::su(n)).basis; break;
    case ModuleKind::UAlgebra: b = lie_algebra_basis(GroupDescriptor::u(n)).basis; break;
    case ModuleKind::HermTraceless:
      for (const Mat& Z : lie_algebra_basis(GroupDescriptor::su(n)).basis) b.push_back(I * Z);
      break;
    case ModuleKind::Alt2Form: {
      const Mat& B = *m.form;
      Mat Binv = B.inverse();
      for (const Mat& S : form_is_sym(B) ? skew_mats(n) : sym_mats(n)) b.push_back(Binv * S);
      break;
    }
    case ModuleKind::Sym2TracelessForm: {
      const Mat& B = *m.form;
      Mat Binv = B.inverse();
      std::vector<Mat> full;
      for (const Mat& S : form_is_sym(B) ? sym_mats(n) : skew_mats(n)) full.push_back(Binv * S);
      b = traceless_part(full, m.field == Field::R);
      break;
    }
    case ModuleKind::SpAlgebra: b = lie_algebra_basis(GroupDescriptor::sp_compact(n)).basis; break;
    case ModuleKind::SymTracelessCapSU: {
      for (const Mat& C : lie_algebra_basis(GroupDescriptor::su(h)).basis)
        b.push_back(blkdiag({C, C.transpose()}));
      for (const Mat& S : skew_mats(h))
        for (cplx ph : {cplx(1, 0), I}) {
          Mat D = ph * S;
          Mat Z = Mat::Zero(n, n);
          Z.topRightCorner(h, h) = D;
          Z.bottomLeftCorner(h, h) = D.conjugate();
          b.push_back(Z);
        }
      break;
    }
  }
  return b;
}

bool contains(const ModuleDescriptor& m, const Mat& X, const Tolerance& tol) {
  validate(m);
  if (X.rows() != module_rows(m) || X.cols() != module_cols(m))
    fail(ErrorKind::SizeMismatch, "matrix does not fit the module");
  const double s = std::max(1.0, X.norm());
  const double t = std::max(tol.abs_eps, tol.rel_eps * s);
  if (m.field == Field::R && !is_real_structure(m.kind) && !is_real(X, t)) return false;
  auto tr0 = [&]() { return std::abs(X.trace()) <= t; };
  auto anti_herm = [&]() { return (X + X.adjoint()).norm() <= t; };
  switch (m.kind) {
    case ModuleKind::RectNK: return true;
    case ModuleKind::Alt2: return (X + X.transpose()).norm() <= t;
    case ModuleKind::Sym2: return (X - X.transpose()).norm() <= t;
    case ModuleKind::Sym2Traceless: return (X - X.transpose()).norm() <= t && tr0();
    case ModuleKind::SLnTraceless: return tr0();
    case ModuleKind::SUAlgebra: return anti_herm() && tr0();
    case ModuleKind::UAlgebra: return anti_herm();
    case ModuleKind::HermTraceless: return (X - X.adjoint()).norm() <= t && tr0();
    case ModuleKind::Alt2Form: {
      const Mat& B = *m.form;
      return (X.transpose() * B + B * X).norm() <= t * B.norm();
    }
    case ModuleKind::Sym2TracelessForm: {
      const Mat& B = *m.form;
      return (X.transpose() * B - B * X).norm() <= t * B.norm() && tr0();
    }
    case ModuleKind::SpAlgebra: {
      Mat Jn = J(m.n / 2);
      return (X.transpose() * Jn + Jn * X).norm() <= t && anti_herm();
    }
    case ModuleKind::SymTracelessCapSU: {
      Mat Jn = J(m.n / 2);
      return (X.transpose() * Jn - Jn * X).norm() <= t && anti_herm() && tr0();
    }
  }
  return false;
}

Mat project(const ModuleDescriptor& m, const Mat& X) {
  validate(m);
  const int r = module_rows(m), c = module_cols(m);
  if (X.rows() != r || X.cols() != c) fail(ErrorKind::SizeMismatch, "matrix does not fit the module");
  auto basis = module_basis(m);
  if (basis.empty()) return Mat::Zero(r, c);
  const int d = static_cast<int>(basis.size());
  Mat M(r * c, d);
  for (int i = 0; i < d; ++i) M.col(i) = vec(basis[i]);
  const Eigen::VectorXcd x = vec(X);
  if (is_real_space(m)) {
    RMat R = realify_rows(M);
    Eigen::HouseholderQR<RMat> qr(R);
    RMat Q = qr.householderQ() * RMat::Identity(R.rows(), d);
    Eigen::VectorXd xr(2 * x.size());
    xr << x.real(), x.imag();
    Eigen::VectorXd pr = Q * (Q.transpose() * xr);
    Eigen::VectorXcd p(x.size());
    p.real() = pr.head(x.size());
    p.imag() = pr.tail(x.size());
    return unvec(p, r, c);
  }
  Eigen::HouseholderQR<Mat> qr(M);
  Mat Q = qr.householderQ() * Mat::Identity(M.rows(), d);
  return unvec(Q * (Q.adjoint() * x), r, c);
}

Mat apply_action(ActionKind a, const Mat& A, const Mat& X) {
  switch (a) {
    case ActionKind::LeftMult: return A * X;
    case ActionKind::RightMultInv: return X * A.inverse();
    case ActionKind::Equivalence:
    case ActionKind::Similarity: return A * X * A.inverse();
    case ActionKind::Congruence: return A * X * A.transpose();
    case ActionKind::CongruenceStar: return A * X * A.adjoint();
  }
  return X;
}

Mat act(const GroupDescriptor& g, ActionKind a, const Mat& A, const Mat& X,
        const std::optional<ModuleDescriptor>& m, const Tolerance& tol) {
  if (!contains(g, A, tol)) fail(ErrorKind::NotInGroup, "acting matrix is not in the group");
  const bool square_action = a != ActionKind::LeftMult;
  if ((a == ActionKind::RightMultInv ? X.cols() : X.rows()) != A.rows() ||
      (square_action && a != ActionKind::RightMultInv && X.cols() != A.rows()))
    fail(ErrorKind::SizeMismatch, "matrix sizes do not match the action");
  Mat Y = apply_action(a, A, X);
  if (m) {
    double an = singular_values(A).front();
    Tolerance loose{tol.abs_eps, tol.rel_eps * std::max(1.0, an * an)};
    if (!contains(*m, Y, loose)) fail(ErrorKind::ModuleNotPreserved, "action left the module");
  }
  return Y;
}

Mat act_equivalence(const Mat& A1, const Mat& A2, const Mat& X) { return A1 * X * A2.inverse(); }

Mat linearized_action(ActionKind a, const Mat& Z, const Mat& X) {
  switch (a) {
    case ActionKind::LeftMult: return Z * X;
    case ActionKind::RightMultInv: return -X * Z;
    case ActionKind::Equivalence:
    case ActionKind::Similarity: return Z * X - X * Z;
    case ActionKind::Congruence: return Z * X + X * Z.transpose();
    case ActionKind::CongruenceStar: return Z * X + X * Z.adjoint();
  }
  return X;
}

}  // namespace manirep
