#include <random>

#include "doctest.h"
#include "manirep/embeddings.hpp"
#include "manirep/gmodules.hpp"

using namespace manirep;

namespace {

Mat gaussian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  Mat M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = cplx(N(rng), N(rng));
  return M;
}

Mat real_gaussian(int r, int c, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  Mat M(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M(i, j) = N(rng);
  return M;
}

struct DimCase {
  ModuleDescriptor m;
  long long expected;  // closed form
};

std::vector<DimCase> closed_form_cases() {
  std::vector<DimCase> out;
  for (int n = 2; n <= 8; ++n) {
    const long long N = n;
    for (Field f : {Field::R, Field::C}) {
      out.push_back({ModuleDescriptor::rect(n, 2, f), 2 * N});
      out.push_back({ModuleDescriptor::of(ModuleKind::Alt2, n, f), N * (N - 1) / 2});
      out.push_back({ModuleDescriptor::of(ModuleKind::Sym2, n, f), N * (N + 1) / 2});
      out.push_back({ModuleDescriptor::of(ModuleKind::Sym2Traceless, n, f), (N + 2) * (N - 1) / 2});
      out.push_back({ModuleDescriptor::of(ModuleKind::SLnTraceless, n, f), N * N - 1});
    }
    out.push_back({ModuleDescriptor::of(ModuleKind::SUAlgebra, n, Field::C), N * N - 1});
    out.push_back({ModuleDescriptor::of(ModuleKind::UAlgebra, n, Field::C), N * N});
    out.push_back({ModuleDescriptor::of(ModuleKind::HermTraceless, n, Field::C), N * N - 1});
    for (int p = 1; p < n; ++p) {
      out.push_back({ModuleDescriptor::with_form(ModuleKind::Alt2Form, Ipq(p, n - p), Field::R), N * (N - 1) / 2});
      out.push_back(
          {ModuleDescriptor::with_form(ModuleKind::Sym2TracelessForm, Ipq(p, n - p), Field::R), (N + 2) * (N - 1) / 2});
    }
    // Symplectic forms on F^{2n}.
    if (n <= 5) {
      for (Field f : {Field::R, Field::C}) {
        out.push_back({ModuleDescriptor::with_form(ModuleKind::Alt2Form, J(n), f), 2 * N * N + N});
        out.push_back({ModuleDescriptor::with_form(ModuleKind::Sym2TracelessForm, J(n), f), (N - 1) * (2 * N + 1)});
      }
      out.push_back({ModuleDescriptor::of(ModuleKind::SpAlgebra, 2 * n, Field::C), 2 * N * N + N});
      out.push_back({ModuleDescriptor::of(ModuleKind::SymTracelessCapSU, 2 * n, Field::C), (N - 1) * (2 * N + 1)});
    }
  }
  return out;
}

int span_dim(const std::vector<Mat>& basis, bool real_space) {
  if (basis.empty()) return 0;
  const Eigen::Index len = basis[0].size();
  Mat M(len, static_cast<Eigen::Index>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    M.col(static_cast<Eigen::Index>(j)) = Eigen::Map<const Eigen::VectorXcd>(basis[j].data(), len);
  return real_space ? real_rank(M) : numerical_rank(M);
}

Mat random_element(const ModuleDescriptor& m, std::mt19937_64& rng) {
  Mat X = gaussian(module_rows(m), rng);
  if (module_cols(m) != module_rows(m)) X = X.leftCols(module_cols(m)).eval();
  if (m.field == Field::R && !is_real_structure(m.kind)) X = X.real().cast<cplx>();
  return project(m, X);
}

}  // namespace

TEST_SUITE("gmodules") {
  TEST_CASE("dimension anchors") {
    CHECK(module_dim(ModuleDescriptor::of(ModuleKind::Alt2, 9, Field::R)) == 36);
    CHECK(module_dim(ModuleDescriptor::of(ModuleKind::Sym2Traceless, 19, Field::R)) == 189);
    CHECK(module_dim(ModuleDescriptor::with_form(ModuleKind::Sym2TracelessForm, J(5), Field::C)) == 44);
    CHECK(alt_power_dim(9, 3) == 84);
  }

  TEST_CASE("dimensions match closed forms and spanning sets") {
    for (const auto& c : closed_form_cases()) {
      INFO(module_kind_name(c.m.kind), " n=", c.m.n);
      CHECK(module_dim(c.m) == c.expected);
      CHECK(span_dim(module_basis(c.m), is_real_space(c.m)) == c.expected);
    }
  }

  TEST_CASE("membership anchors") {
    CHECK(contains(ModuleDescriptor::of(ModuleKind::Sym2Traceless, 9, Field::R),
                   diag_real({7, 7, -2, -2, -2, -2, -2, -2, -2})));
    CHECK_FALSE(contains(ModuleDescriptor::of(ModuleKind::Alt2, 9, Field::R), eye(9)));
    std::mt19937_64 rng(4);
    Mat M = gaussian(5, rng);
    Mat H = M + M.adjoint();
    H -= (H.trace() / 5.0) * eye(5);
    CHECK(contains(ModuleDescriptor::of(ModuleKind::SUAlgebra, 5, Field::C), cplx(0, 1) * H));
    CHECK_THROWS_AS(contains(ModuleDescriptor::of(ModuleKind::Alt2, 9, Field::R), eye(4)), Error);
  }

  TEST_CASE("projection anchors") {
    std::mt19937_64 rng(6);
    Mat X = real_gaussian(3, 3, rng);
    CHECK(fro(project(ModuleDescriptor::of(ModuleKind::Alt2, 3, Field::R), X) - (X - X.transpose()) / 2.0) < 1e-14);
    CHECK(fro(project(ModuleDescriptor::of(ModuleKind::Sym2Traceless, 3, Field::R), eye(3))) < 1e-14);
  }

  TEST_CASE("projection is idempotent, lands in the module and is orthogonal") {
    std::mt19937_64 rng(7);
    auto cases = closed_form_cases();
    for (int t = 0; t < 100; ++t) {
      const auto& m = cases[static_cast<size_t>(t * 7) % cases.size()].m;
      Mat X = gaussian(m.n, rng);
      if (module_cols(m) != m.n) X = X.leftCols(module_cols(m)).eval();
      if (m.field == Field::R && !is_real_structure(m.kind)) X = X.real().cast<cplx>();
      Mat P = project(m, X);
      INFO(module_kind_name(m.kind), " n=", m.n);
      CHECK(fro(project(m, P) - P) <= 1e-10 * (1 + fro(P)));
      CHECK(contains(m, P));
      for (const auto& b : module_basis(m)) {
        const cplx ip = (b.adjoint() * (X - P)).trace();
        CHECK(std::abs(ip.real()) <= 1e-9 * (1 + fro(X)));
        if (!is_real_space(m)) CHECK(std::abs(ip) <= 1e-9 * (1 + fro(X)));
      }
    }
  }

  TEST_CASE("traceless kinds have zero trace") {
    std::mt19937_64 rng(9);
    for (const auto& c : closed_form_cases()) {
      const auto k = c.m.kind;
      if (k != ModuleKind::Sym2Traceless && k != ModuleKind::SLnTraceless && k != ModuleKind::SUAlgebra &&
          k != ModuleKind::HermTraceless && k != ModuleKind::Sym2TracelessForm &&
          k != ModuleKind::SymTracelessCapSU)
        continue;
      CHECK(std::abs(random_element(c.m, rng).trace()) <= 1e-12);
    }
  }

  TEST_CASE("action anchors") {
    const auto so9 = GroupDescriptor::so(9, Field::R);
    const auto sym0 = ModuleDescriptor::of(ModuleKind::Sym2Traceless, 9, Field::R);
    Mat Q = sample(so9, 2);
    Mat X = diag_real({7, 7, -2, -2, -2, -2, -2, -2, -2});
    CHECK(contains(sym0, act(so9, ActionKind::Congruence, Q, X, sym0)));
    std::mt19937_64 rng(12);
    Mat Y = real_gaussian(9, 2, rng);
    CHECK(act(so9, ActionKind::LeftMult, eye(9), Y) == Y);

    const auto g = GroupDescriptor::sopq(2, 3);
    const auto m = ModuleDescriptor::with_form(ModuleKind::Sym2TracelessForm, Ipq(2, 3), Field::R);
    Mat Z = random_element(m, rng);
    Mat V = sample(g, 3, 0.5);
    Mat W = act(g, ActionKind::Similarity, V, Z, m, Tolerance{1e-9, 1e-9});
    CHECK(contains(m, W, Tolerance{1e-9, 1e-9}));
    CHECK_THROWS_AS(act(g, ActionKind::Similarity, 2.0 * eye(5), Z), Error);
  }

  TEST_CASE("action law over the embedding table") {
    std::mt19937_64 rng(21);
    for (ManifoldFamily f : all_manifold_families()) {
      ManifoldDescriptor md = smallest_manifold(f);
      md.n += 1;
      const ManifoldData d = manifold_data(md);
      for (int t = 0; t < 100; ++t) {
        Mat A1 = sample(d.group, 1000 + 2 * t, 0.5), A2 = sample(d.group, 1001 + 2 * t, 0.5);
        Mat X = random_element(d.module, rng);
        Mat lhs = act(d.group, d.action, A1, act(d.group, d.action, A2, X));
        Mat rhs = act(d.group, d.action, A1 * A2, X);
        INFO(manifold_family_name(f));
        CHECK(fro(lhs - rhs) <= 1e-9 * (1 + fro(rhs)));
      }
    }
  }

  TEST_CASE("equivalence with two factors") {
    std::mt19937_64 rng(2);
    Mat A1 = real_gaussian(3, 3, rng), A2 = real_gaussian(3, 3, rng) + 3.0 * eye(3), X = real_gaussian(3, 3, rng);
    CHECK(fro(act_equivalence(A1, A2, X) - A1 * X * A2.inverse()) < 1e-12);
  }

  TEST_CASE("linearized action matches finite differences") {
    std::mt19937_64 rng(30);
    for (ActionKind a : {ActionKind::LeftMult, ActionKind::RightMultInv, ActionKind::Equivalence,
                         ActionKind::Congruence, ActionKind::Similarity, ActionKind::CongruenceStar}) {
      Mat Z = gaussian(4, rng), X = gaussian(4, rng);
      const double h = 1e-6;
      Mat fd = (apply_action(a, expm(h * Z), X) - apply_action(a, expm(-h * Z), X)) / (2 * h);
      INFO(action_name(a));
      CHECK(fro(fd - linearized_action(a, Z, X)) <= 1e-6 * (1 + fro(fd)));
    }
  }
}
