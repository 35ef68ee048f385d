#include <set>

#include "doctest.h"
#include "manirep/weyl.hpp"
#include "oracles.hpp"

using namespace manirep;
using oracle::cpp_int;
using oracle::cpp_rational;

namespace {

std::vector<std::vector<int>> all_kappas(int len, int max_entry) {
  std::vector<std::vector<int>> out;
  std::vector<int> k(static_cast<size_t>(len), 0);
  while (true) {
    out.push_back(k);
    int i = 0;
    while (i < len && k[static_cast<size_t>(i)] == max_entry) k[static_cast<size_t>(i++)] = 0;
    if (i == len) break;
    ++k[static_cast<size_t>(i)];
  }
  return out;
}

std::vector<int> unit(int len, int i, int v = 1) {
  std::vector<int> k(static_cast<size_t>(len), 0);
  k[static_cast<size_t>(i)] = v;
  return k;
}

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("dimension anchors") {
    CHECK(weyl_dim({Algebra::SL, 9, unit(8, 1)}) == 36);
    std::vector<int> k(8, 0);
    k[0] = 2;
    k[7] = 1;
    CHECK(weyl_dim({Algebra::SL, 9, k}) == 396);
    CHECK(weyl_dim({Algebra::SO, 19, unit(9, 8)}) == 512);
    CHECK(weyl_dim({Algebra::SP, 1, {2}}) == 3);
    CHECK(weyl_dim({Algebra::SL, 7, std::vector<int>(6, 0)}) == 1);
    CHECK(weyl_dim({Algebra::SO, 8, std::vector<int>(4, 0)}) == 1);
    CHECK(weyl_dim({Algebra::SP, 4, std::vector<int>(4, 0)}) == 1);
  }

  TEST_CASE("weights are validated") {
    CHECK_THROWS_AS(validate(HighestWeight{Algebra::SL, 4, {1, 0}}), Error);
    CHECK_THROWS_AS(validate(HighestWeight{Algebra::SO, 9, {1, -1, 0, 0}}), Error);
  }

  TEST_CASE("closed forms for 3 <= n <= 25") {
    for (int n = 3; n <= 25; ++n) {
      const cpp_int N = n;
      INFO("n=", n);
      const int rl = n - 1;
      // sl_n: vector, dual, Alt2, Sym2, adjoint.
      CHECK(weyl_dim({Algebra::SL, n, unit(rl, 0)}) == N);
      CHECK(weyl_dim({Algebra::SL, n, unit(rl, rl - 1)}) == N);
      CHECK(weyl_dim({Algebra::SL, n, unit(rl, 1)}) == N * (N - 1) / 2);
      CHECK(weyl_dim({Algebra::SL, n, unit(rl, rl - 2)}) == N * (N - 1) / 2);
      CHECK(weyl_dim({Algebra::SL, n, unit(rl, 0, 2)}) == N * (N + 1) / 2);
      CHECK(weyl_dim({Algebra::SL, n, unit(rl, rl - 1, 2)}) == N * (N + 1) / 2);
      auto adj = unit(rl, 0);
      adj[static_cast<size_t>(rl - 1)] += 1;
      CHECK(weyl_dim({Algebra::SL, n, adj}) == N * N - 1);
      // so_n: vector, Alt2, Sym2_0 (Alt2 splits for n = 4 and is {0,1,1} for n = 6).
      const int ro = n / 2;
      cpp_int vec = 0;
      for (const auto& w : catalog_weights(Algebra::SO, n, Catalog::Vector)) vec += weyl_dim(w);
      CHECK(vec == N);
      if (n >= 5) {
        CHECK(weyl_dim({Algebra::SO, n, unit(ro, 0)}) == N);
        CHECK(weyl_dim({Algebra::SO, n, unit(ro, 0, 2)}) == (N + 2) * (N - 1) / 2);
      }
      cpp_int alt = 0;
      for (const auto& w : catalog_weights(Algebra::SO, n, Catalog::Alt2)) alt += weyl_dim(w);
      CHECK(alt == N * (N - 1) / 2);
      if (n >= 7) CHECK(weyl_dim({Algebra::SO, n, unit(ro, 1)}) == N * (N - 1) / 2);
      // sp_{2n} at half size n: vector, adjoint, Sym2_0(Omega).
      const cpp_int M = 2 * N;
      CHECK(weyl_dim({Algebra::SP, n, unit(n, 0)}) == M);
      CHECK(weyl_dim({Algebra::SP, n, unit(n, 0, 2)}) == 2 * N * N + N);
      CHECK(weyl_dim({Algebra::SP, n, unit(n, 1)}) == (N - 1) * (2 * N + 1));
    }
  }

  TEST_CASE("catalog dims sum to the closed forms") {
    for (int n = 3; n <= 25; ++n) {
      const cpp_int N = n;
      auto total = [&](Algebra a, Catalog c) {
        cpp_int s = 0;
        for (const auto& w : catalog_weights(a, n, c)) s += weyl_dim(w);
        return s;
      };
      CHECK(total(Algebra::SL, Catalog::Sym2) == N * (N + 1) / 2);
      CHECK(total(Algebra::SL, Catalog::Adjoint) == N * N - 1);
      CHECK(total(Algebra::SO, Catalog::Sym2Traceless) == (N + 2) * (N - 1) / 2);
      CHECK(total(Algebra::SP, Catalog::Alt2) == 2 * N * N + N);
      CHECK(total(Algebra::SP, Catalog::Sym2Traceless) == (N - 1) * (2 * N + 1));
    }
  }

  TEST_CASE("weyl dimension agrees with independent oracles") {
    for (Algebra a : {Algebra::SL, Algebra::SO, Algebra::SP})
      for (int n = (a == Algebra::SP ? 1 : 3); n <= 8; ++n) {
        const int r = weyl_rank(a, n);
        const auto rs = oracle::root_system(a, n);
        for (const auto& k : all_kappas(r, r <= 4 ? 3 : 2)) {
          INFO(algebra_name(a), " n=", n);
          CHECK(weyl_dim({a, n, k}) == (a == Algebra::SL ? oracle::hook_content_dim(n, k) : rs.dim(k)));
          if (a == Algebra::SL) CHECK(rs.dim(k) == oracle::hook_content_dim(n, k));
        }
      }
  }

  TEST_CASE("SL duality symmetry") {
    for (int n = 2; n <= 9; ++n)
      for (const auto& k : all_kappas(n - 1, n <= 6 ? 3 : 2)) {
        std::vector<int> rev(k.rbegin(), k.rend());
        CHECK(weyl_dim({Algebra::SL, n, k}) == weyl_dim({Algebra::SL, n, rev}));
      }
  }

  TEST_CASE("dimension grows with each coordinate") {
    for (Algebra a : {Algebra::SL, Algebra::SO, Algebra::SP})
      for (int n = (a == Algebra::SP ? 1 : 3); n <= 8; ++n)
        for (const auto& k : all_kappas(weyl_rank(a, n), 2))
          for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            auto lower = k;
            --lower[i];
            CHECK(weyl_dim({a, n, lower}) < weyl_dim({a, n, k}));
          }
  }

  TEST_CASE("lemma lists for SL at n = 9, 10, 11") {
    for (int n = 9; n <= 11; ++n) {
      auto ws = enumerate_irreps_below(Algebra::SL, n, n * n);
      REQUIRE(ws.size() == 8);
      std::set<std::vector<int>> got, want;
      for (const auto& w : ws) got.insert(w.weight.kappa);
      const int r = n - 1;
      want.insert(std::vector<int>(r, 0));
      want.insert(unit(r, 0));
      want.insert(unit(r, r - 1));
      want.insert(unit(r, 1));
      want.insert(unit(r, r - 2));
      want.insert(unit(r, 0, 2));
      want.insert(unit(r, r - 1, 2));
      auto adj = unit(r, 0);
      adj[static_cast<size_t>(r - 1)] = 1;
      want.insert(adj);
      CHECK(got == want);
    }
  }

  TEST_CASE("lemma dims for SO and SP") {
    std::set<cpp_int> so, sp;
    for (const auto& w : enumerate_irreps_below(Algebra::SO, 19, 361)) so.insert(w.dim);
    for (const auto& w : enumerate_irreps_below(Algebra::SP, 5, 100)) sp.insert(w.dim);
    CHECK(so == std::set<cpp_int>{1, 19, 171, 189});
    CHECK(sp == std::set<cpp_int>{1, 10, 44, 55});
  }

  TEST_CASE("small enumeration anchor") {
    auto ws = enumerate_irreps_below(Algebra::SL, 3, 3);
    std::set<std::vector<int>> got;
    for (const auto& w : ws) got.insert(w.weight.kappa);
    CHECK(got == std::set<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}});
  }

  TEST_CASE("pruned enumeration equals brute force for n <= 6") {
    for (Algebra a : {Algebra::SL, Algebra::SO, Algebra::SP})
      for (int n = (a == Algebra::SP ? 1 : 3); n <= 6; ++n) {
        const int r = weyl_rank(a, n);
        // A weight with an entry c has dimension above c, so entries below the
        // bound cover everything; the bound is kept small enough to sweep.
        int bound = n * n;
        while (r > 0 && std::pow(static_cast<double>(bound), r) > 6e4) --bound;
        const auto rs = oracle::root_system(a, n);
        std::vector<std::pair<cpp_int, std::vector<int>>> brute;
        for (const auto& k : all_kappas(r, bound - 1)) {
          const cpp_int d = a == Algebra::SL ? oracle::hook_content_dim(n, k) : rs.dim(k);
          if (d <= bound) brute.emplace_back(d, k);
        }
        std::sort(brute.begin(), brute.end());
        auto ws = enumerate_irreps_below(a, n, bound);
        INFO(algebra_name(a), " n=", n, " bound=", bound);
        REQUIRE(ws.size() == brute.size());
        for (size_t i = 0; i < ws.size(); ++i) {
          CHECK(ws[i].dim == brute[i].first);
          CHECK(ws[i].weight.kappa == brute[i].second);
        }
      }
  }

  TEST_CASE("low dimension classification") {
    auto sl = low_dim_classification(Algebra::SL, 9);
    CHECK(sl.cross_validated);
    CHECK_FALSE(sl.advisory);
    std::multiset<int> dims;
    for (const auto& m : sl.modules) dims.insert(module_dim(m));
    CHECK(dims == std::multiset<int>{1, 9, 36, 45, 80});
    auto so = low_dim_classification(Algebra::SO, 19);
    dims.clear();
    for (const auto& m : so.modules) dims.insert(module_dim(m));
    CHECK(dims == std::multiset<int>{1, 19, 171, 189});
    auto sp = low_dim_classification(Algebra::SP, 5);
    dims.clear();
    for (const auto& m : sp.modules) dims.insert(module_dim(m));
    CHECK(dims == std::multiset<int>{1, 10, 44, 55});
    CHECK(low_dim_classification(Algebra::SO, 9).advisory);
    CHECK(lemma_threshold(Algebra::SL) == 9);
    CHECK(lemma_threshold(Algebra::SO) == 19);
    CHECK(lemma_threshold(Algebra::SP) == 5);
  }

  TEST_CASE("real form admissibility") {
    std::vector<int> k(8, 0);
    k[0] = 1;
    k[7] = 1;
    CHECK(real_form_admissible(GroupDescriptor::su(9), {Algebra::SL, 9, k}));
    CHECK_FALSE(real_form_admissible(GroupDescriptor::su(10), {Algebra::SL, 10, unit(9, 4)}));
    CHECK_FALSE(real_form_admissible(GroupDescriptor::sp_compact(10), {Algebra::SP, 5, unit(5, 0)}));
    CHECK(real_form_admissible(GroupDescriptor::sp_compact(10), {Algebra::SP, 5, unit(5, 0, 2)}));
    CHECK(real_form_admissible(GroupDescriptor::sl(9, Field::R), {Algebra::SL, 9, unit(8, 0)}));
  }
}
