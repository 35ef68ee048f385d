#include "manirep/embeddings.hpp"

#include <algorithm>
#include <cmath>

#include "manirep/stabilizers.hpp"

namespace manirep {

namespace {

using MF = ManifoldFamily;

const char* const kNames[kManifoldFamilyCount] = {
    "GrReal",        "GrComplex",       "GrQuaternionic",  "GrSpReal",        "GrSpComplex",
    "GrComplexLocus", "SLGr",           "LGrC",            "SLGrStarH",       "SOGrC",
    "IGr",           "GrIndefinite",    "FlReal",          "FlComplex",       "FlQuaternionic",
    "IFlEven",       "IFlOdd",          "FlSpReal",        "FlSpComplex",     "LFl",
    "StNoncompactReal", "StNoncompactComplex", "StiefelReal", "StiefelComplex",
    "StiefelQuaternionic"};

bool is_grassmann(MF f) {
  switch (f) {
    case MF::GrReal:
    case MF::GrComplex:
    case MF::GrQuaternionic:
    case MF::GrSpReal:
    case MF::GrSpComplex:
    case MF::GrComplexLocus: return true;
    default: return false;
  }
}

bool is_flag(MF f) {
  switch (f) {
    case MF::FlReal:
    case MF::FlComplex:
    case MF::FlQuaternionic:
    case MF::IFlEven:
    case MF::IFlOdd:
    case MF::FlSpReal:
    case MF::FlSpComplex:
    case MF::LFl: return true;
    default: return false;
  }
}

bool is_stiefel(MF f) {
  switch (f) {
    case MF::StNoncompactReal:
    case MF::StNoncompactComplex:
    case MF::StiefelReal:
    case MF::StiefelComplex:
    case MF::StiefelQuaternionic: return true;
    default: return false;
  }
}

bool is_lagrangian_type(MF f) {
  return f == MF::SLGr || f == MF::LGrC || f == MF::SLGrStarH || f == MF::SOGrC;
}

std::vector<int> parts(const ManifoldDescriptor& m) {
  std::vector<int> out;
  int prev = 0;
  for (int k : m.flag) {
    out.push_back(k - prev);
    prev = k;
  }
  out.push_back(m.n - prev);
  return out;
}

double spectrum_scale(const std::vector<double>& s) {
  double x = 1.0;
  for (double v : s) x = std::max(x, std::abs(v));
  return x;
}

[[noreturn]] void bad_spectrum(const std::string& msg) { fail(ErrorKind::InvalidSpectrum, msg); }

std::vector<cplx> repeat(const std::vector<double>& vals, const std::vector<int>& counts, cplx factor) {
  std::vector<cplx> d;
  for (size_t i = 0; i < vals.size(); ++i)
    for (int t = 0; t < counts[i]; ++t) d.push_back(factor * vals[i]);
  return d;
}

}  // namespace

std::string manifold_family_name(ManifoldFamily f) { return kNames[static_cast<int>(f)]; }

ManifoldFamily manifold_family_from_name(const std::string& s) {
  for (int i = 0; i < kManifoldFamilyCount; ++i)
    if (s == kNames[i]) return static_cast<ManifoldFamily>(i);
  fail(ErrorKind::InvalidDescriptor, "unknown manifold family '" + s + "'");
}

std::vector<ManifoldFamily> all_manifold_families() {
  std::vector<ManifoldFamily> out;
  for (int i = 0; i < kManifoldFamilyCount; ++i) out.push_back(static_cast<ManifoldFamily>(i));
  return out;
}

ManifoldDescriptor smallest_manifold(ManifoldFamily f) {
  ManifoldDescriptor m;
  m.family = f;
  if (is_grassmann(f) || is_stiefel(f)) {
    m.n = 2;
    m.k = 1;
  } else if (is_flag(f)) {
    m.n = 3;
    m.flag = {1, 2};
    if (f == MF::IFlOdd) m.p = 1;
  } else if (is_lagrangian_type(f)) {
    m.n = 1;
  } else if (f == MF::IGr) {
    m.n = 2;
    m.k = 1;
  } else if (f == MF::GrIndefinite) {
    m.m = 1;
    m.n = 1;
    m.p = 1;
    m.q = 0;
  }
  return m;
}

std::vector<double> resolved_spectrum(const ManifoldDescriptor& m) {
  if (!m.spectrum.empty()) return m.spectrum;
  const MF f = m.family;
  if (is_grassmann(f)) return {static_cast<double>(m.n - m.k), static_cast<double>(-m.k)};
  if (f == MF::GrIndefinite) {
    const int s = m.p + m.q, t = m.m + m.n;
    return {static_cast<double>(t - s), static_cast<double>(-s)};
  }
  if (f == MF::IGr) return {1.0};
  if (is_flag(f)) {
    auto np = parts(m);
    std::vector<double> out;
    if (f == MF::IFlEven || f == MF::IFlOdd || f == MF::LFl) {
      for (size_t i = 0; i < np.size(); ++i) out.push_back(static_cast<double>(i + 1));
      return out;
    }
    // lambda_i = S - n i with S = sum n_i i, so that sum n_i lambda_i = 0
    long long S = 0;
    for (size_t i = 0; i < np.size(); ++i) S += static_cast<long long>(np[i]) * static_cast<long long>(i + 1);
    for (size_t i = 0; i < np.size(); ++i)
      out.push_back(static_cast<double>(S - static_cast<long long>(m.n) * static_cast<long long>(i + 1)));
    return out;
  }
  return {};
}

void validate(const ManifoldDescriptor& m) {
  const MF f = m.family;
  if (static_cast<int>(f) < 0 || static_cast<int>(f) >= kManifoldFamilyCount)
    fail(ErrorKind::InvalidDescriptor, "unknown manifold family");
  auto bad = [](const std::string& s) { fail(ErrorKind::InvalidDescriptor, s); };
  if (is_grassmann(f)) {
    if (m.n < 2 || m.k < 1 || m.k >= m.n) bad("Grassmannian needs 1 <= k < n");
  } else if (is_stiefel(f)) {
    if (m.n < 1 || m.k < 1 || m.k > m.n) bad("Stiefel manifold needs 1 <= k <= n");
  } else if (is_flag(f)) {
    if (m.flag.empty()) bad("flag signature is empty");
    int prev = 0;
    for (int k : m.flag) {
      if (k <= prev) bad("flag signature must be strictly increasing and positive");
      prev = k;
    }
    if (prev >= m.n) bad("flag signature must stay below n");
    if (f == MF::IFlOdd && m.p < 1) bad("IFlOdd needs p >= 1");
  } else if (is_lagrangian_type(f)) {
    if (m.n < 1) bad("size must be positive");
  } else if (f == MF::IGr) {
    if (m.k < 1 || 2 * m.k > m.n) bad("IGr needs 1 <= 2k <= n");
  } else if (f == MF::GrIndefinite) {
    if (m.m < 0 || m.n < 0 || m.m + m.n < 2) bad("SO_{m,n} needs m + n >= 2");
    if (m.p < 0 || m.p > m.m || m.q < 0 || m.q > m.n) bad("need 0 <= p <= m and 0 <= q <= n");
    if (m.p + m.q == 0 || m.p + m.q == m.m + m.n) bad("need 0 < p + q < m + n");
  }

  auto s = resolved_spectrum(m);
  const double eps = 1e-12 * spectrum_scale(s);
  if (is_grassmann(f) || f == MF::GrIndefinite) {
    if (s.size() != 2) bad_spectrum("expected two spectrum values");
    if (std::abs(s[0] - s[1]) <= eps) bad_spectrum("spectrum values must differ");
    const double a = f == MF::GrIndefinite ? m.p + m.q : m.k;
    const double b = f == MF::GrIndefinite ? m.m + m.n - m.p - m.q : m.n - m.k;
    if (std::abs(a * s[0] + b * s[1]) > eps * (a + b)) bad_spectrum("weighted trace must vanish");
  } else if (f == MF::IGr) {
    if (s.size() != 1 || std::abs(s[0]) <= eps) bad_spectrum("IGr needs one nonzero value");
  } else if (is_flag(f)) {
    auto np = parts(m);
    if (s.size() != np.size()) bad_spectrum("one spectrum value per flag part");
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j)
        if (std::abs(s[i] - s[j]) <= eps) bad_spectrum("spectrum values must be distinct");
    if (f == MF::IFlEven || f == MF::IFlOdd) {
      for (size_t i = 0; i < s.size(); ++i) {
        if (std::abs(s[i]) <= eps) bad_spectrum("isotropic flag values must be nonzero");
        for (size_t j = i + 1; j < s.size(); ++j)
          if (std::abs(std::abs(s[i]) - std::abs(s[j])) <= eps)
            bad_spectrum("isotropic flag values need distinct moduli");
      }
    } else if (f == MF::LFl) {
      for (size_t i = 0; i < s.size(); ++i) {
        if (std::abs(s[i]) <= eps) bad_spectrum("Lagrangian flag values must be nonzero");
        for (size_t j = i + 1; j < s.size(); ++j)
          if (std::abs(s[i] + s[j]) <= eps) bad_spectrum("Lagrangian flag values must not cancel");
      }
    } else {
      double tr = 0;
      for (size_t i = 0; i < s.size(); ++i) tr += np[i] * s[i];
      if (std::abs(tr) > eps * m.n) bad_spectrum("weighted trace must vanish");
    }
  } else if (!m.spectrum.empty()) {
    bad_spectrum("this family takes no spectrum");
  }
}

ManifoldData manifold_data(const ManifoldDescriptor& m) {
  validate(m);
  const int n = m.n;
  const Field R = Field::R, C = Field::C;
  switch (m.family) {
    case MF::GrReal:
    case MF::FlReal:
      return {GroupDescriptor::so(n, R), ActionKind::Congruence, ModuleDescriptor::of(ModuleKind::Sym2Traceless, n, R)};
    case MF::GrComplex:
    case MF::FlComplex:
      return {GroupDescriptor::su(n), ActionKind::CongruenceStar, ModuleDescriptor::of(ModuleKind::SUAlgebra, n, C)};
    case MF::GrQuaternionic:
    case MF::FlQuaternionic:
      return {GroupDescriptor::sp_compact(2 * n), ActionKind::CongruenceStar,
              ModuleDescriptor::of(ModuleKind::SymTracelessCapSU, 2 * n, C)};
    case MF::GrSpReal:
    case MF::FlSpReal:
      return {GroupDescriptor::sp(2 * n, R), ActionKind::Similarity,
              ModuleDescriptor::with_form(ModuleKind::Sym2TracelessForm, J(n), R)};
    case MF::GrSpComplex:
    case MF::FlSpComplex:
      return {GroupDescriptor::sp(2 * n, C), ActionKind::Similarity,
              ModuleDescriptor::with_form(ModuleKind::Sym2TracelessForm, J(n), C)};
    case MF::GrComplexLocus:
      return {GroupDescriptor::so(n, C), ActionKind::Congruence, ModuleDescriptor::of(ModuleKind::Sym2Traceless, n, C)};
    case MF::SLGr:
      return {GroupDescriptor::su(n), ActionKind::Congruence, ModuleDescriptor::of(ModuleKind::Sym2, n, C)};
    case MF::LGrC:
    case MF::LFl:
      return {GroupDescriptor::sp_compact(2 * n), ActionKind::CongruenceStar,
              ModuleDescriptor::of(ModuleKind::SpAlgebra, 2 * n, C)};
    case MF::SLGrStarH:
      return {GroupDescriptor::su(2 * n), ActionKind::Congruence, ModuleDescriptor::of(ModuleKind::Alt2, 2 * n, C)};
    case MF::SOGrC:
    case MF::IFlEven:
      return {GroupDescriptor::so(2 * n, R), ActionKind::Congruence, ModuleDescriptor::of(ModuleKind::Alt2, 2 * n, R)};
    case MF::IFlOdd:
      return {GroupDescriptor::so(2 * n + m.p, R), ActionKind::Congruence,
              ModuleDescriptor::of(ModuleKind::Alt2, 2 * n + m.p, R)};
    case MF::IGr:
      return {GroupDescriptor::so(n, R), ActionKind::Congruence, ModuleDescriptor::of(ModuleKind::Alt2, n, R)};
    case MF::GrIndefinite:
      return {GroupDescriptor::sopq(m.m, m.n), ActionKind::Similarity,
              ModuleDescriptor::with_form(ModuleKind::Sym2TracelessForm, Ipq(m.m, m.n), R)};
    case MF::StNoncompactReal:
      return {GroupDescriptor::sl(n, R), ActionKind::LeftMult, ModuleDescriptor::rect(n, m.k, R)};
    case MF::StNoncompactComplex:
      return {GroupDescriptor::sl(n, C), ActionKind::LeftMult, ModuleDescriptor::rect(n, m.k, C)};
    case MF::StiefelReal:
      return {GroupDescriptor::so(n, R), ActionKind::LeftMult, ModuleDescriptor::rect(n, m.k, R)};
    case MF::StiefelComplex:
      return {GroupDescriptor::su(n), ActionKind::LeftMult, ModuleDescriptor::rect(n, m.k, C)};
    case MF::StiefelQuaternionic:
      return {GroupDescriptor::sp_compact(2 * n), ActionKind::LeftMult, ModuleDescriptor::rect(2 * n, 2 * m.k, C)};
  }
  fail(ErrorKind::InvalidDescriptor, "unknown manifold family");
}

bool minimality_advisory(const ManifoldDescriptor& m) {
  const GroupDescriptor g = manifold_data(m).group;
  switch (g.family) {
    case Family::SL:
    case Family::SU: return g.n < 9;
    case Family::SO:
    case Family::SOpq: return g.n < 19;
    default: return g.n / 2 < 5;
  }
}

EmbeddedPoint base_point(const ManifoldDescriptor& m) {
  ManifoldData d = manifold_data(m);
  const auto s = resolved_spectrum(m);
  const int n = m.n;
  const cplx I(0.0, 1.0);
  Mat X;
  switch (m.family) {
    case MF::GrReal:
    case MF::GrComplexLocus: X = diag(repeat(s, {m.k, n - m.k}, 1.0)); break;
    case MF::GrComplex: X = diag(repeat(s, {m.k, n - m.k}, I)); break;
    case MF::GrQuaternionic: X = diag(repeat({s[0], s[1], s[0], s[1]}, {m.k, n - m.k, m.k, n - m.k}, I)); break;
    case MF::GrSpReal:
    case MF::GrSpComplex: X = diag(repeat({s[0], s[1], s[0], s[1]}, {m.k, n - m.k, m.k, n - m.k}, 1.0)); break;
    case MF::SLGr: X = eye(n); break;
    case MF::LGrC: X = I * Ipq(n, n); break;
    case MF::SLGrStarH:
    case MF::SOGrC: X = J(n); break;
    case MF::IGr:
      X = Mat::Zero(n, n);
      X.topLeftCorner(2 * m.k, 2 * m.k) = s[0] * J(m.k);
      break;
    case MF::GrIndefinite:
      X = diag(repeat({s[0], s[1], s[0], s[1]}, {m.p, m.m - m.p, m.q, m.n - m.q}, 1.0));
      break;
    case MF::FlReal: X = diag(repeat(s, parts(m), 1.0)); break;
    case MF::FlComplex: X = diag(repeat(s, parts(m), I)); break;
    case MF::FlQuaternionic:
    case MF::FlSpReal:
    case MF::FlSpComplex: {
      auto np = parts(m);
      auto L = repeat(s, np, m.family == MF::FlQuaternionic ? I : cplx(1.0));
      std::vector<cplx> d2 = L;
      d2.insert(d2.end(), L.begin(), L.end());
      X = diag(d2);
      break;
    }
    case MF::LFl: {
      auto L = repeat(s, parts(m), I);
      std::vector<cplx> d2 = L;
      for (cplx z : L) d2.push_back(-z);
      X = diag(d2);
      break;
    }
    case MF::IFlEven:
    case MF::IFlOdd: {
      std::vector<Mat> blocks;
      auto np = parts(m);
      for (size_t i = 0; i < np.size(); ++i) blocks.push_back(s[i] * J(np[i]));
      if (m.family == MF::IFlOdd) blocks.push_back(Mat::Zero(m.p, m.p));
      X = blkdiag(blocks);
      break;
    }
    case MF::StNoncompactReal:
    case MF::StNoncompactComplex:
    case MF::StiefelReal:
    case MF::StiefelComplex: X = Mat::Identity(n, m.k); break;
    case MF::StiefelQuaternionic:
      X = Mat::Zero(2 * n, 2 * m.k);
      // the J-paired coordinates {1..k} and {n+1..n+k}
      for (int i = 0; i < m.k; ++i) {
        X(i, i) = 1.0;
        X(n + i, m.k + i) = 1.0;
      }
      break;
  }
  if (!contains(d.module, X)) fail(ErrorKind::InvalidSpectrum, "base point is outside the module");
  return {m, X, d.module, minimality_advisory(m)};
}

EmbeddedPoint embed(const ManifoldDescriptor& m, const Mat& g) {
  EmbeddedPoint b = base_point(m);
  ManifoldData d = manifold_data(m);
  b.value = act(d.group, d.action, g, b.value, d.module);
  return b;
}

Mat lift_frame(const ManifoldDescriptor& m, const Mat& Y) {
  ManifoldData d = manifold_data(m);
  const int n = d.group.n;
  if (m.family != MF::GrReal && m.family != MF::GrComplex && m.family != MF::StiefelReal &&
      m.family != MF::StiefelComplex)
    fail(ErrorKind::InvalidDescriptor, "frames are only lifted for real and complex Grassmann/Stiefel rows");
  if (Y.rows() != n || Y.cols() != m.k) fail(ErrorKind::SizeMismatch, "frame has the wrong shape");
  if ((Y.adjoint() * Y - eye(m.k)).norm() > 1e-10) fail(ErrorKind::InvalidDescriptor, "frame is not orthonormal");
  if (d.group.family == Family::SO && !is_real(Y, 1e-12))
    fail(ErrorKind::InvalidDescriptor, "real row needs a real frame");
  Eigen::HouseholderQR<Mat> qr(Y);
  Mat Q = qr.householderQ() * Mat::Identity(n, n);
  Mat R = qr.matrixQR().topRows(m.k).triangularView<Eigen::Upper>();
  for (int j = 0; j < m.k; ++j) Q.col(j) *= R(j, j) / std::abs(R(j, j));
  if (d.group.family == Family::SO) Q = Q.real().cast<cplx>();
  cplx det = Q.determinant();
  if (m.k < n) {
    Q.col(n - 1) *= std::conj(det) / std::abs(det);
  } else if (std::abs(det - 1.0) > 1e-8) {
    fail(ErrorKind::NotInGroup, "a full frame must have determinant one");
  }
  return Q;
}

double check_equivariance(const ManifoldDescriptor& m, int trials, std::uint64_t seed) {
  ManifoldData d = manifold_data(m);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    Mat g1 = sample(d.group, seed + 2 * static_cast<std::uint64_t>(t), 0.5);
    Mat g2 = sample(d.group, seed + 2 * static_cast<std::uint64_t>(t) + 1, 0.5);
    Mat e2 = embed(m, g2).value;
    Mat lhs = embed(m, g1 * g2).value;
    Mat rhs = act(d.group, d.action, g1, e2, d.module);
    worst = std::max(worst, (lhs - rhs).norm() / std::max(e2.norm(), 1e-300));
  }
  return worst;
}

int tangent_dim(const ManifoldDescriptor& m) {
  ManifoldData d = manifold_data(m);
  Mat X = base_point(m).value;
  const int dg = group_dim(d.group);
  return dg - stabilizer_dim_in_group(d.group, d.module, d.action, X);
}

int mp_dimension(const ManifoldDescriptor& m) {
  validate(m);
  const int n = m.n, k = m.k;
  switch (m.family) {
    case MF::GrReal:
    case MF::GrComplexLocus:
    case MF::FlReal: return (n + 2) * (n - 1) / 2;
    case MF::GrComplex:
    case MF::FlComplex: return n * n - 1;
    case MF::GrQuaternionic:
    case MF::GrSpReal:
    case MF::GrSpComplex:
    case MF::FlQuaternionic:
    case MF::FlSpReal:
    case MF::FlSpComplex: return (n - 1) * (2 * n + 1);
    case MF::SLGr: return n * (n + 1) / 2;
    case MF::LGrC:
    case MF::LFl: return 2 * n * n + n;
    case MF::SLGrStarH:
    case MF::SOGrC:
    case MF::IFlEven: return n * (2 * n - 1);
    case MF::IGr: return n * (n - 1) / 2;
    case MF::GrIndefinite: return (m.m + n + 2) * (m.m + n - 1) / 2;
    case MF::IFlOdd: return (2 * n + m.p) * (2 * n + m.p - 1) / 2;
    case MF::StNoncompactReal:
    case MF::StNoncompactComplex:
    case MF::StiefelReal:
    case MF::StiefelComplex: return n * k;
    case MF::StiefelQuaternionic: return 4 * n * k;
  }
  return 0;
}

std::string cartan_type_name(CartanType t) {
  static const char* const names[] = {"AI", "AII", "AIII", "BDI", "DIII", "CI", "CII"};
  return names[static_cast<int>(t)];
}

CartanType cartan_type_from_name(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(CartanType::CII); ++i)
    if (cartan_type_name(static_cast<CartanType>(i)) == s) return static_cast<CartanType>(i);
  fail(ErrorKind::InvalidDescriptor, "unknown symmetric space type '" + s + "'");
}

CartanResult cartan_compare(CartanType t, int n, int k, int trials, std::uint64_t seed) {
  if (trials < 1) fail(ErrorKind::InvalidDescriptor, "need at least one trial");
  const cplx I(0.0, 1.0);
  ManifoldDescriptor md;
  md.n = n;
  md.k = k;
  Mat D, P;  // sign matrix for the Cartan formula; P relocates the base point
  switch (t) {
    case CartanType::AI: md.family = MF::SLGr; break;
    case CartanType::AII: md.family = MF::SLGrStarH; break;
    case CartanType::AIII:
      md.family = MF::GrComplex;
      D = Ipq(k, n - k);
      break;
    case CartanType::BDI:
      md.family = MF::GrReal;
      D = Ipq(k, n - k);
      break;
    case CartanType::DIII: md.family = MF::SOGrC; break;
    case CartanType::CI: {
      md.family = MF::LGrC;
      // P (iD) P^* = J with P in the compact symplectic group
      P = Mat(2 * n, 2 * n);
      P << eye(n), I * eye(n), I * eye(n), eye(n);
      P /= std::sqrt(2.0);
      break;
    }
    case CartanType::CII: {
      md.family = MF::GrQuaternionic;
      D = diag(repeat({1.0, -1.0, 1.0, -1.0}, {k, n - k, k, n - k}, 1.0));
      break;
    }
  }
  ManifoldData d = manifold_data(md);
  const auto s = resolved_spectrum(md);
  const int N = d.group.n;
  // affine normalization sending diag(lambda, mu) to diag(1, -1)
  auto normalized = [&](const Mat& X) -> Mat {
    switch (t) {
      case CartanType::AIII:
      case CartanType::CII: {
        const double c = (s[0] + s[1]) / 2, h = (s[0] - s[1]) / 2;
        return (X - I * c * eye(N)) / h;
      }
      case CartanType::BDI: {
        const double c = (s[0] + s[1]) / 2, h = (s[0] - s[1]) / 2;
        return (X - c * eye(N)) / h;
      }
      default: return X;
    }
  };
  auto cartan = [&](const Mat& Q) -> Mat {
    switch (t) {
      case CartanType::AI: return Q * Q.transpose();
      case CartanType::AII:
      case CartanType::DIII: return Q * J(n) * Q.transpose() * J(n).transpose();
      case CartanType::AIII: return Q * (I * D) * Q.adjoint() * D;
      case CartanType::BDI: return Q * D * Q.transpose() * D;
      case CartanType::CI: return Q * J(n) * Q.adjoint() * J(n).transpose();
      case CartanType::CII: return Q * D * Q.adjoint() * D;
    }
    return Q;
  };
  auto minimal = [&](const Mat& Q) -> Mat {
    Mat g = P.size() ? Mat(Q * P) : Q;
    return normalized(embed(md, g).value);
  };
  CartanResult res;
  res.trials = trials;
  Mat C;
  for (int tr = 0; tr < trials; ++tr) {
    Mat Q = sample(d.group, seed + static_cast<std::uint64_t>(tr));
    Mat A = minimal(Q), B = cartan(Q);
    if (tr == 0) C = A.fullPivLu().solve(B);
    res.residual = std::max(res.residual, (A * C - B).norm() / std::max(1.0, B.norm()));
  }
  if (res.residual > 1e-8) fail(ErrorKind::NoConstantFactor, "Cartan image is not a constant right multiple");
  Mat Cr = C;
  for (Eigen::Index i = 0; i < Cr.size(); ++i) {
    auto& z = Cr.data()[i];
    z = cplx(std::abs(z.real()) < 1e-10 ? 0.0 : z.real(), std::abs(z.imag()) < 1e-10 ? 0.0 : z.imag());
  }
  res.right_factor = Cr;
  res.identical = (Cr - eye(N)).norm() < 1e-8;
  return res;
}

}  // namespace manirep
