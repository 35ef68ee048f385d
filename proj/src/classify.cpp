#include "manirep/classify.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace manirep {

namespace {

enum class Kind { SL, SO, SOpq, Sp, SU, SpCompact };

Kind kind_of(const GroupDescriptor& g) {
  validate(g);
  switch (g.family) {
    case Family::SL: return Kind::SL;
    case Family::SO: return Kind::SO;
    case Family::SOpq: return Kind::SOpq;
    case Family::Sp: return Kind::Sp;
    case Family::SU: return Kind::SU;
    case Family::SpCompact: return Kind::SpCompact;
    default: break;
  }
  fail(ErrorKind::UnsupportedGroup, "no classification for " + family_name(g.family));
}

bool in_range(const TargetSpec& s) {
  const int n = s.group.n;
  auto nonneg = s.b >= 0 && s.c >= 0 && s.d >= 0 && s.e >= 0;
  if (!nonneg) return false;
  switch (kind_of(s.group)) {
    case Kind::SL: return s.b <= n && s.c <= 2 && s.d <= 1 && s.e <= 1;
    case Kind::SO:
    case Kind::SOpq: return s.b <= n && s.c <= 2 && s.d <= 2 && s.e == 0;
    case Kind::Sp: return s.b <= n && s.c <= 1 && s.d <= 1 && s.e == 0;
    case Kind::SU: return s.b == 0 && s.c == 0 && s.d == 0 && s.e == 1;
    case Kind::SpCompact:
      return s.b == 0 && s.e == 0 && s.c <= 1 && s.d <= 1 && s.c + s.d >= 1;
  }
  return false;
}

Field entry_field(const GroupDescriptor& g) {
  return has_complex_entries(g) ? Field::C : Field::R;
}

}  // namespace

TargetModules target_modules(const TargetSpec& s) {
  const GroupDescriptor& g = s.group;
  const int n = g.n;
  const Field F = g.field;
  TargetModules t;
  auto add = [&](const ModuleDescriptor& m, ActionKind a, int times) {
    for (int i = 0; i < times; ++i) {
      t.modules.push_back(m);
      t.actions.push_back(a);
    }
  };
  switch (kind_of(g)) {
    case Kind::SL:
      if (s.b > 0) add(ModuleDescriptor::rect(n, s.b, F), ActionKind::LeftMult, 1);
      add(ModuleDescriptor::of(ModuleKind::Alt2, n, F), ActionKind::Congruence, s.c);
      add(ModuleDescriptor::of(ModuleKind::Sym2, n, F), ActionKind::Congruence, s.d);
      add(ModuleDescriptor::of(ModuleKind::SLnTraceless, n, F), ActionKind::Similarity, s.e);
      break;
    case Kind::SO:
      if (s.b > 0) add(ModuleDescriptor::rect(n, s.b, F), ActionKind::LeftMult, 1);
      add(ModuleDescriptor::of(ModuleKind::Alt2, n, F), ActionKind::Congruence, s.c);
      add(ModuleDescriptor::of(ModuleKind::Sym2Traceless, n, F), ActionKind::Congruence, s.d);
      break;
    case Kind::SOpq: {
      // congruence does not keep the ordinary trace; use the B-twisted spaces
      const Mat B = defining_form(g);
      if (s.b > 0) add(ModuleDescriptor::rect(n, s.b, Field::R), ActionKind::LeftMult, 1);
      add(ModuleDescriptor::with_form(ModuleKind::Alt2Form, B, Field::R), ActionKind::Similarity, s.c);
      add(ModuleDescriptor::with_form(ModuleKind::Sym2TracelessForm, B, Field::R), ActionKind::Similarity, s.d);
      break;
    }
    case Kind::Sp: {
      const Mat Om = defining_form(g);
      if (s.b > 0) add(ModuleDescriptor::rect(n, s.b, F), ActionKind::LeftMult, 1);
      add(ModuleDescriptor::with_form(ModuleKind::Sym2TracelessForm, Om, F), ActionKind::Similarity, s.c);
      add(ModuleDescriptor::with_form(ModuleKind::Alt2Form, Om, F), ActionKind::Similarity, s.d);
      break;
    }
    case Kind::SU:
      add(ModuleDescriptor::of(ModuleKind::SUAlgebra, n, Field::C), ActionKind::CongruenceStar, s.e);
      break;
    case Kind::SpCompact:
      add(ModuleDescriptor::of(ModuleKind::SymTracelessCapSU, n, Field::C), ActionKind::CongruenceStar, s.c);
      add(ModuleDescriptor::of(ModuleKind::SpAlgebra, n, Field::C), ActionKind::CongruenceStar, s.d);
      break;
  }
  return t;
}

AdmissibilityReport admissible(const TargetSpec& s) {
  const Kind k = kind_of(s.group);
  AdmissibilityReport r;
  r.in_range = in_range(s);
  if (s.b < 0 || s.c < 0 || s.d < 0 || s.e < 0) return r;
  TargetModules t = target_modules(s);
  r.modules = t.modules;
  r.actions = t.actions;
  r.module_dim_total = 0;
  for (const auto& m : t.modules) r.module_dim_total += module_dim(m);
  const int n = s.group.n;
  // the inequalities are the dimension bounds n^2 and 4h^2 with h = n/2
  if (k == Kind::Sp || k == Kind::SpCompact) {
    const int h = n / 2;
    r.inequality_value = (Rational(r.module_dim_total) - 4 * h * h) / 2;
  } else {
    r.inequality_value = Rational(r.module_dim_total) - n * n;
  }
  r.admissible = r.in_range && r.inequality_value <= 0;
  return r;
}

std::vector<TargetSpec> enumerate_admissible(const GroupDescriptor& g) {
  const Kind k = kind_of(g);
  const int n = g.n;
  std::vector<std::pair<BigInt, TargetSpec>> found;
  const int bmax = (k == Kind::SU || k == Kind::SpCompact) ? 0 : n;
  for (int b = 0; b <= bmax; ++b)
    for (int c = 0; c <= 2; ++c)
      for (int d = 0; d <= 2; ++d)
        for (int e = 0; e <= 1; ++e) {
          TargetSpec s{g, b, c, d, e};
          if (!in_range(s)) continue;
          auto r = admissible(s);
          if (r.admissible) found.push_back({r.module_dim_total, s});
        }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return std::tie(x.second.b, x.second.c, x.second.d, x.second.e) <
           std::tie(y.second.b, y.second.c, y.second.d, y.second.e);
  });
  std::vector<TargetSpec> out;
  for (auto& f : found) out.push_back(f.second);
  return out;
}

StabilizerForm stabilizer_form(const TargetSpec& s, const std::vector<Mat>& witnesses) {
  TargetModules t = target_modules(s);
  if (witnesses.size() != t.modules.size())
    fail(ErrorKind::WitnessNotInModule, "need one witness per module factor");
  const GroupDescriptor& g = s.group;
  const Field F = entry_field(g);
  StabilizerForm out;
  std::vector<ModulePoint> points;
  for (size_t i = 0; i < t.modules.size(); ++i) {
    const auto& mod = t.modules[i];
    const Mat& W = witnesses[i];
    if (W.rows() != module_rows(mod) || W.cols() != module_cols(mod) || !contains(mod, W))
      fail(ErrorKind::WitnessNotInModule, "witness " + std::to_string(i) + " is not in " + module_kind_name(mod.kind));
    FactorStabilizer f{mod, t.actions[i], {}, {}, {}, 0};
    switch (t.actions[i]) {
      case ActionKind::LeftMult: f.parabolic = stabilizer_left_mult(W, F); break;
      case ActionKind::Congruence:
        if (mod.kind == ModuleKind::Alt2)
          f.parabolic = stabilizer_congruence_skew(W, F);
        else
          f.parabolic = stabilizer_congruence_sym(W, F);
        break;
      case ActionKind::Similarity:
        if (mod.kind == ModuleKind::SLnTraceless) {
          f.toeplitz = stabilizer_similarity(W, SimilarityMode::ExactRational, F);
        } else {
          Mat Y = *mod.form * W;
          if ((Y + Y.transpose()).norm() <= 1e-9 * std::max(1.0, Y.norm()))
            f.parabolic = stabilizer_congruence_skew(Y, F);
          else
            f.parabolic = stabilizer_congruence_sym(Y, F);
        }
        break;
      case ActionKind::CongruenceStar:
        if (mod.kind == ModuleKind::SUAlgebra) {
          Eigen::SelfAdjointEigenSolver<Mat> es(cplx(0.0, -1.0) * W);
          const auto& w = es.eigenvalues();
          const double tau = 1e-7 * std::max(1.0, std::max(std::abs(w(0)), std::abs(w(w.size() - 1))));
          ProductGroup pg;
          int start = 0;
          for (int j = 1; j <= w.size(); ++j)
            if (j == w.size() || w(j) - w(j - 1) > tau) {
              pg.factors.push_back(GroupDescriptor::u(j - start));
              start = j;
            }
          f.unitary_blocks = pg;
        }
        break;
      default: break;
    }
    f.dim_in_group = stabilizer_dim_in_group(g, mod, t.actions[i], W);
    points.push_back({mod, t.actions[i], W});
    out.factors.push_back(std::move(f));
  }
  out.dim = intersect_stabilizer_dim(g, points);
  return out;
}

namespace {

// Columns of an orthonormal basis for the space of coefficient vectors c with
// sum_j c_j E_j fixed by the given infinitesimal and discrete generators.
Mat fixed_coefficients(const ModuleDescriptor& mod, ActionKind a, const std::vector<Mat>& lie,
                       const std::vector<Mat>& discrete) {
  auto basis = module_basis(mod);
  const Eigen::Index cells = static_cast<Eigen::Index>(module_rows(mod)) * module_cols(mod);
  const Eigen::Index rows = cells * static_cast<Eigen::Index>(lie.size() + discrete.size());
  Mat M(rows, static_cast<Eigen::Index>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) {
    Eigen::Index off = 0;
    auto put = [&](const Mat& Y) {
      M.block(off, j, cells, 1) = Eigen::Map<const Eigen::VectorXcd>(Y.data(), cells);
      off += cells;
    };
    for (const auto& Z : lie) put(linearized_action(a, Z, basis[j]));
    for (const auto& D : discrete) put(apply_action(a, D, basis[j]) - basis[j]);
  }
  if (is_real_space(mod)) return real_null_space(realify_rows(M)).cast<cplx>();
  return null_space(M);
}

}  // namespace

MinimalityReport minimality_certificate(const ManifoldDescriptor& m, std::uint64_t seed) {
  ManifoldData md = manifold_data(m);
  const GroupDescriptor& G = md.group;
  Mat X = base_point(m).value;
  MinimalityReport rep;
  rep.module_dim = module_dim(md.module);
  rep.mp_dim = mp_dimension(m);
  rep.group_dim = group_dim(G);
  rep.advisory = minimality_advisory(m);
  if (rep.module_dim != rep.mp_dim)
    fail(ErrorKind::NotMinimalFamily, "module dimension differs from the Mostow-Palais dimension");
  rep.stabilizer_dim = stabilizer_dim_in_group(G, md.module, md.action, X);

  // Lie(H) at the base point
  auto gb = lie_algebra_basis(G).basis;
  Mat L(X.size(), static_cast<Eigen::Index>(gb.size()));
  for (size_t j = 0; j < gb.size(); ++j) {
    Mat Y = linearized_action(md.action, gb[j], X);
    L.col(j) = Eigen::Map<const Eigen::VectorXcd>(Y.data(), Y.size());
  }
  const bool cx = is_complex_group(G);
  Mat ker = cx ? null_space(L) : real_null_space(realify_rows(L)).cast<cplx>();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N(0.0, 1.0);
  std::vector<Mat> lie;
  if (ker.cols() > 0) {
    for (int t = 0; t < 6; ++t) {
      Mat Z = Mat::Zero(G.n, G.n);
      for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        cplx w(N(rng), cx ? N(rng) : 0.0);
        for (size_t j = 0; j < gb.size(); ++j) Z += w * ker(static_cast<Eigen::Index>(j), c) * gb[j];
      }
      lie.push_back(Z);
    }
  }
  // pairs of sign flips in G fixing the base point pick up components of H
  std::vector<Mat> discrete;
  for (int i = 0; i < G.n; ++i)
    for (int j = i + 1; j < G.n; ++j) {
      Mat D = eye(G.n);
      D(i, i) = -1.0;
      D(j, j) = -1.0;
      if (!contains(G, D)) continue;
      if ((apply_action(md.action, D, X) - X).norm() <= 1e-10 * std::max(1.0, X.norm()))
        discrete.push_back(D);
    }

  for (const auto& spec : enumerate_admissible(G)) {
    auto r = admissible(spec);
    if (r.module_dim_total >= rep.module_dim || r.modules.empty()) continue;
    std::vector<ModulePoint> points;
    for (size_t i = 0; i < r.modules.size(); ++i) {
      const auto& mod = r.modules[i];
      Mat Fc = fixed_coefficients(mod, r.actions[i], lie, discrete);
      auto basis = module_basis(mod);
      Mat W = Mat::Zero(module_rows(mod), module_cols(mod));
      const bool real_coeffs = is_real_space(mod);
      for (Eigen::Index c = 0; c < Fc.cols(); ++c) {
        cplx w(N(rng), real_coeffs ? 0.0 : N(rng));
        for (size_t j = 0; j < basis.size(); ++j) W += w * Fc(static_cast<Eigen::Index>(j), c) * basis[j];
      }
      points.push_back({mod, r.actions[i], W});
    }
    ++rep.candidates_checked;
    if (intersect_stabilizer_dim(G, points) == rep.stabilizer_dim)
      fail(ErrorKind::NotMinimalFamily, "a smaller admissible target has a witness with the same stabilizer dimension");
  }
  rep.certified = true;
  return rep;
}

}  // namespace manirep
