#include "manirep/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace manirep {

std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::SL: return "SL";
    case Algebra::SO: return "SO";
    case Algebra::SP: return "SP";
  }
  return "?";
}

Algebra algebra_from_name(const std::string& s) {
  if (s == "SL" || s == "sl") return Algebra::SL;
  if (s == "SO" || s == "so") return Algebra::SO;
  if (s == "SP" || s == "Sp" || s == "sp") return Algebra::SP;
  fail(ErrorKind::InvalidDescriptor, "unknown algebra '" + s + "'");
}

int weyl_rank(Algebra a, int n) {
  switch (a) {
    case Algebra::SL: return n - 1;
    case Algebra::SO: return n / 2;
    case Algebra::SP: return n;
  }
  return 0;
}

void validate(const HighestWeight& w) {
  if (w.n < 1) fail(ErrorKind::InvalidDescriptor, "size must be positive");
  if (static_cast<int>(w.kappa.size()) != weyl_rank(w.algebra, w.n))
    fail(ErrorKind::InvalidDescriptor, "kappa length does not match the rank");
  for (int k : w.kappa)
    if (k < 0) fail(ErrorKind::InvalidDescriptor, "kappa entries must be nonnegative");
}

namespace {

// lambda + rho and rho in epsilon coordinates, with the positive roots of the type.
struct RootData {
  std::vector<Rational> l, r;
  bool long_plus = false;  // e_i + e_j roots
  int short_coeff = 0;     // 1 for e_i (B), 2 for 2e_i (C), 0 for none
};

RootData root_data(const HighestWeight& w) {
  const auto& k = w.kappa;
  RootData d;
  const int m = static_cast<int>(k.size());
  switch (w.algebra) {
    case Algebra::SL: {
      const int n = w.n;
      d.l.assign(n, 0);
      d.r.assign(n, 0);
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int i = j; i < n - 1; ++i) s += k[i];
        d.r[j] = n - 1 - j;
        d.l[j] = s + d.r[j];
      }
      break;
    }
    case Algebra::SO: {
      d.long_plus = true;
      d.l.assign(m, 0);
      d.r.assign(m, 0);
      if (w.n % 2 == 1) {
        d.short_coeff = 1;
        for (int j = 0; j < m; ++j) {
          Rational s = Rational(k[m - 1], 2);
          for (int i = j; i < m - 1; ++i) s += k[i];
          d.r[j] = Rational(2 * (m - j) - 1, 2);
          d.l[j] = s + d.r[j];
        }
      } else {
        for (int j = 0; j < m; ++j) {
          Rational s;
          if (j < m - 1) {
            s = Rational(k[m - 2] + k[m - 1], 2);
            for (int i = j; i < m - 2; ++i) s += k[i];
          } else {
            s = m >= 2 ? Rational(k[m - 1] - k[m - 2], 2) : Rational(k[0]);
          }
          d.r[j] = m - 1 - j;
          d.l[j] = s + d.r[j];
        }
      }
      break;
    }
    case Algebra::SP: {
      d.long_plus = true;
      d.short_coeff = 2;
      d.l.assign(m, 0);
      d.r.assign(m, 0);
      for (int j = 0; j < m; ++j) {
        Rational s = 0;
        for (int i = j; i < m; ++i) s += k[i];
        d.r[j] = m - j;
        d.l[j] = s + d.r[j];
      }
      break;
    }
  }
  return d;
}

}  // namespace

BigInt weyl_dim(const HighestWeight& w) {
  validate(w);
  if (w.algebra == Algebra::SO && w.n == 2) return 1;  // so_2 is abelian
  RootData d = root_data(w);
  Rational num = 1, den = 1;
  const size_t m = d.l.size();
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      num *= d.l[i] - d.l[j];
      den *= d.r[i] - d.r[j];
      if (d.long_plus) {
        num *= d.l[i] + d.l[j];
        den *= d.r[i] + d.r[j];
      }
    }
    if (d.short_coeff) {
      num *= d.l[i];
      den *= d.r[i];
    }
  }
  Rational q = num / den;
  if (boost::multiprecision::denominator(q) != 1)
    fail(ErrorKind::ConvergenceFailure, "Weyl product is not integral");
  return boost::multiprecision::numerator(q);
}

std::vector<WeightDim> enumerate_irreps_below(Algebra a, int n, const BigInt& bound) {
  const int m = weyl_rank(a, n);
  if (m < 1 || (a == Algebra::SO && n < 3))
    fail(ErrorKind::InvalidDescriptor, "enumeration needs a semisimple algebra");
  std::vector<WeightDim> out;
  if (bound < 1) return out;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier{std::vector<int>(m, 0)};
  seen.insert(frontier.front());
  out.push_back({HighestWeight{a, n, frontier.front()}, 1});
  // raising one coordinate strictly increases the dimension, so anything
  // over the bound can be dropped together with everything above it
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& k : frontier) {
      for (int i = 0; i < m; ++i) {
        auto k2 = k;
        ++k2[i];
        if (!seen.insert(k2).second) continue;
        HighestWeight w{a, n, k2};
        BigInt d = weyl_dim(w);
        if (d <= bound) {
          out.push_back({w, d});
          next.push_back(k2);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const WeightDim& x, const WeightDim& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.weight.kappa < y.weight.kappa;
  });
  return out;
}

HighestWeight weight_from_epsilon(Algebra a, int n, const std::vector<int>& eps) {
  const int m = weyl_rank(a, n);
  HighestWeight w{a, n, std::vector<int>(m, 0)};
  auto e = [&](int i) { return i < static_cast<int>(eps.size()) ? eps[i] : 0; };
  switch (a) {
    case Algebra::SL:
      for (int i = 0; i < m; ++i) w.kappa[i] = e(i) - e(i + 1);
      break;
    case Algebra::SO:
      if (n % 2 == 1) {
        for (int i = 0; i + 1 < m; ++i) w.kappa[i] = e(i) - e(i + 1);
        w.kappa[m - 1] = 2 * e(m - 1);
      } else {
        if (m < 2) fail(ErrorKind::InvalidDescriptor, "so_2 has no simple roots");
        for (int i = 0; i + 1 < m; ++i) w.kappa[i] = e(i) - e(i + 1);
        w.kappa[m - 1] = e(m - 2) + e(m - 1);
      }
      break;
    case Algebra::SP:
      for (int i = 0; i + 1 < m; ++i) w.kappa[i] = e(i) - e(i + 1);
      w.kappa[m - 1] = e(m - 1);
      break;
  }
  validate(w);
  return w;
}

std::vector<HighestWeight> catalog_weights(Algebra a, int n, Catalog c) {
  const int m = weyl_rank(a, n);
  auto W = [&](std::vector<int> eps) { return weight_from_epsilon(a, n, eps); };
  HighestWeight zero{a, n, std::vector<int>(m, 0)};
  if (c == Catalog::Trivial) return {zero};
  if (c == Catalog::Vector) return {W({1})};
  switch (a) {
    case Algebra::SL:
      switch (c) {
        case Catalog::Alt2: return {W({1, 1})};
        case Catalog::Sym2: return {W({2})};
        case Catalog::Adjoint: {
          std::vector<int> eps(n, 0);
          eps[0] = 2;
          for (int i = 1; i < n - 1; ++i) eps[i] = 1;  // e1 - e_n shifted by the trace
          return {W(eps)};
        }
        default: break;
      }
      break;
    case Algebra::SO:
      switch (c) {
        case Catalog::Alt2:
        case Catalog::Adjoint:
          if (n == 4) return {HighestWeight{a, n, {2, 0}}, HighestWeight{a, n, {0, 2}}};
          return {W({1, 1})};
        case Catalog::Sym2Traceless: return {W({2})};
        case Catalog::Sym2: return {W({2}), zero};
        default: break;
      }
      break;
    case Algebra::SP:
      switch (c) {
        case Catalog::Alt2:
        case Catalog::Adjoint: return {W({2})};
        case Catalog::Sym2Traceless:
          if (n == 1) return {};
          return {W({1, 1})};
        default: break;
      }
      break;
  }
  fail(ErrorKind::InvalidDescriptor, "catalog module not defined for this algebra");
}

int lemma_threshold(Algebra a) {
  switch (a) {
    case Algebra::SL: return 9;
    case Algebra::SO: return 19;
    case Algebra::SP: return 5;
  }
  return 0;
}

LowDimResult low_dim_classification(Algebra a, int n) {
  LowDimResult res;
  res.advisory = n < lemma_threshold(a);
  const Field C = Field::C;
  ModuleDescriptor trivial = ModuleDescriptor::rect(1, 1, C);
  std::vector<Catalog> cats;
  BigInt bound;
  switch (a) {
    case Algebra::SL:
      res.modules = {trivial, ModuleDescriptor::rect(n, 1, C), ModuleDescriptor::of(ModuleKind::Alt2, n, C),
                     ModuleDescriptor::of(ModuleKind::Sym2, n, C),
                     ModuleDescriptor::of(ModuleKind::SLnTraceless, n, C)};
      cats = {Catalog::Trivial, Catalog::Vector, Catalog::Alt2, Catalog::Sym2, Catalog::Adjoint};
      bound = BigInt(n) * n;
      break;
    case Algebra::SO:
      res.modules = {trivial, ModuleDescriptor::rect(n, 1, C), ModuleDescriptor::of(ModuleKind::Alt2, n, C),
                     ModuleDescriptor::of(ModuleKind::Sym2Traceless, n, C)};
      cats = {Catalog::Trivial, Catalog::Vector, Catalog::Alt2, Catalog::Sym2Traceless};
      bound = BigInt(n) * n;
      break;
    case Algebra::SP:
      res.modules = {trivial, ModuleDescriptor::rect(2 * n, 1, C),
                     ModuleDescriptor::with_form(ModuleKind::Sym2TracelessForm, J(n), C),
                     ModuleDescriptor::with_form(ModuleKind::Alt2Form, J(n), C)};
      cats = {Catalog::Trivial, Catalog::Vector, Catalog::Sym2Traceless, Catalog::Alt2};
      bound = BigInt(4) * n * n;
      break;
  }
  // the irreducible weights under the bound, up to duality, against the catalog
  std::multiset<BigInt> from_enum, from_catalog;
  std::set<std::vector<int>> seen;
  for (const auto& wd : enumerate_irreps_below(a, n, bound)) {
    auto k = wd.weight.kappa;
    auto rk = k;
    if (a == Algebra::SL) std::reverse(rk.begin(), rk.end());
    if (seen.count(rk)) continue;
    seen.insert(k);
    from_enum.insert(wd.dim);
  }
  for (Catalog c : cats) {
    auto ws = catalog_weights(a, n, c);
    if (ws.size() != 1) continue;  // reducible at this size
    from_catalog.insert(weyl_dim(ws.front()));
  }
  res.cross_validated = from_enum == from_catalog;
  for (size_t i = 0; i < res.modules.size(); ++i) {
    BigInt md = module_dim(res.modules[i]);
    auto ws = catalog_weights(a, n, cats[i]);
    BigInt s = 0;
    for (const auto& w : ws) s += weyl_dim(w);
    if (s != md) res.cross_validated = false;
  }
  return res;
}

bool real_form_admissible(const GroupDescriptor& g, const HighestWeight& w) {
  validate(w);
  auto need = [&](Algebra a, int n) {
    if (w.algebra != a || w.n != n)
      fail(ErrorKind::InvalidDescriptor, "weight does not belong to the group's algebra");
  };
  const auto& k = w.kappa;
  switch (g.family) {
    case Family::SU: {
      need(Algebra::SL, g.n);
      const int n = g.n;
      for (int i = 0; i < n - 1; ++i)
        if (k[i] != k[n - 2 - i]) return false;
      if (n % 2 == 1 || n % 4 == 0) return true;
      return k[n / 2 - 1] % 2 == 0;
    }
    case Family::SpCompact: {
      need(Algebra::SP, g.n / 2);
      for (size_t i = 0; i < k.size(); i += 2)
        if (k[i] % 2 != 0) return false;
      return true;
    }
    case Family::SL:
      if (g.field != Field::R) break;
      need(Algebra::SL, g.n);
      return true;
    case Family::Sp:
      if (g.field != Field::R) break;
      need(Algebra::SP, g.n / 2);
      return true;
    case Family::SOpq:
    case Family::SO: {
      if (g.family == Family::SO && g.field != Field::R) break;
      need(Algebra::SO, g.n);
      const int m = static_cast<int>(k.size());
      bool spin = (g.n % 2 == 1) ? (k[m - 1] % 2 != 0)
                                 : (m >= 2 && (k[m - 2] + k[m - 1]) % 2 != 0);
      if (!spin) return true;
      fail(ErrorKind::UnsupportedGroup, "real structure of spin modules of SO_{p,q} is not covered");
    }
    default: break;
  }
  fail(ErrorKind::UnsupportedGroup, "real-form test is defined for SU, compact Sp, SL(R), Sp(R), SO_{p,q}");
}

}  // namespace manirep
