#pragma once

// Exact polynomial arithmetic over Q and Q(i), used for Jordan structure.

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "manirep/numkit.hpp"

namespace manirep::exact {

using Q = boost::multiprecision::cpp_rational;

struct QI {
  Q re, im;
  QI() = default;
  QI(Q r, Q i = 0) : re(std::move(r)), im(std::move(i)) {}
  QI(int r) : re(r), im(0) {}
  bool is_zero() const { return re == 0 && im == 0; }
  friend QI operator+(const QI& a, const QI& b) { return {a.re + b.re, a.im + b.im}; }
  friend QI operator-(const QI& a, const QI& b) { return {a.re - b.re, a.im - b.im}; }
  friend QI operator-(const QI& a) { return {-a.re, -a.im}; }
  friend QI operator*(const QI& a, const QI& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend QI operator/(const QI& a, const QI& b) {
    Q d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const QI& a, const QI& b) { return a.re == b.re && a.im == b.im; }
  cplx to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

inline bool is_zero(const Q& q) { return q == 0; }
inline bool is_zero(const QI& q) { return q.is_zero(); }
inline cplx to_complex(const Q& q) { return {static_cast<double>(q), 0.0}; }
inline cplx to_complex(const QI& q) { return q.to_complex(); }

/// Shortest rational reproducing x exactly as a double; falls back to the
/// binary expansion.
Q to_rational(double x);

template <class K>
struct Poly {
  std::vector<K> c;  // c[i] is the coefficient of x^i

  Poly() = default;
  explicit Poly(std::vector<K> v) : c(std::move(v)) { trim(); }
  static Poly constant(const K& k) { return Poly(std::vector<K>{k}); }
  static Poly x_minus(const K& k) { return Poly(std::vector<K>{K(0) - k, K(1)}); }

  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  const K& lead() const { return c.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<K> r(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return Poly(std::move(r));
  }
};

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r = a;
  if (r.deg() < b.deg()) return {Poly<K>{}, r};
  std::vector<K> q(r.deg() - b.deg() + 1, K(0));
  while (!r.zero() && r.deg() >= b.deg()) {
    const int s = r.deg() - b.deg();
    K f = r.lead() / b.lead();
    q[s] = f;
    for (int i = 0; i <= b.deg(); ++i) r.c[i + s] = r.c[i + s] - f * b.c[i];
    r.c.pop_back();
    r.trim();
  }
  return {Poly<K>(std::move(q)), r};
}

template <class K>
Poly<K> monic(const Poly<K>& a) {
  if (a.zero()) return a;
  Poly<K> r = a;
  K l = a.lead();
  for (auto& x : r.c) x = x / l;
  return r;
}

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class K>
Poly<K> derivative(const Poly<K>& a) {
  if (a.deg() < 1) return {};
  std::vector<K> r(a.c.size() - 1, K(0));
  for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * K(static_cast<int>(i));
  return Poly<K>(std::move(r));
}

template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).first;
}

/// Yun's algorithm: f = prod P_i^i with P_i squarefree and coprime.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree(const Poly<K>& f0) {
  std::vector<std::pair<Poly<K>, int>> out;
  Poly<K> f = monic(f0);
  if (f.deg() < 1) return out;
  Poly<K> fp = derivative(f);
  Poly<K> a = gcd(f, fp);
  Poly<K> b = exact_div(f, a);
  Poly<K> c = exact_div(fp, a);
  Poly<K> d = c - derivative(b);
  int i = 1;
  while (b.deg() >= 1) {
    Poly<K> g = gcd(b, d);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - derivative(b);
    if (g.deg() >= 1) out.push_back({g, i});
    ++i;
  }
  return out;
}

/// Refine squarefree polynomials into a pairwise coprime set with the same
/// products up to multiplicity.
template <class K>
std::vector<Poly<K>> coprime_basis(const std::vector<Poly<K>>& in) {
  std::vector<Poly<K>> basis;
  for (Poly<K> p : in) {
    p = monic(p);
    std::vector<Poly<K>> next;
    for (auto& b : basis) {
      Poly<K> g = gcd(p, b);
      if (g.deg() >= 1) {
        next.push_back(g);
        Poly<K> rest = monic(exact_div(b, g));
        if (rest.deg() >= 1) next.push_back(rest);
        p = monic(exact_div(p, g));
      } else {
        next.push_back(b);
      }
    }
    if (p.deg() >= 1) next.push_back(p);
    basis = std::move(next);
  }
  return basis;
}

/// Invariant factors (monic, nonconstant) of xI - X via the Smith form.
template <class K>
std::vector<Poly<K>> invariant_factors(const std::vector<std::vector<K>>& X) {
  const int n = static_cast<int>(X.size());
  std::vector<std::vector<Poly<K>>> M(n, std::vector<Poly<K>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      M[i][j] = Poly<K>::constant(K(0) - X[i][j]);
      if (i == j) M[i][j] = M[i][j] + Poly<K>(std::vector<K>{K(0), K(1)});
    }
  std::vector<Poly<K>> out;
  for (int k = 0; k < n; ++k) {
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j)
          if (!M[i][j].zero() && (bi < 0 || M[i][j].deg() < M[bi][bj].deg())) {
            bi = i;
            bj = j;
          }
      if (bi < 0) return out;
      std::swap(M[k], M[bi]);
      for (int i = 0; i < n; ++i) std::swap(M[i][k], M[i][bj]);
      bool clean = true;
      for (int i = k + 1; i < n; ++i) {
        if (M[i][k].zero()) continue;
        auto [q, r] = divmod(M[i][k], M[k][k]);
        for (int j = k; j < n; ++j) M[i][j] = M[i][j] - q * M[k][j];
        if (!M[i][k].zero()) clean = false;
      }
      for (int j = k + 1; j < n; ++j) {
        if (M[k][j].zero()) continue;
        auto [q, r] = divmod(M[k][j], M[k][k]);
        for (int i = k; i < n; ++i) M[i][j] = M[i][j] - q * M[i][k];
        if (!M[k][j].zero()) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = k + 1; i < n && bad < 0; ++i)
        for (int j = k + 1; j < n; ++j)
          if (!divmod(M[i][j], M[k][k]).second.zero()) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = k; j < n; ++j) M[k][j] = M[k][j] + M[bad][j];
    }
    Poly<K> d = monic(M[k][k]);
    if (d.deg() >= 1) out.push_back(d);
  }
  return out;
}

/// Numeric roots of a squarefree polynomial via the companion matrix.
template <class K>
std::vector<cplx> roots(const Poly<K>& p) {
  const int d = p.deg();
  std::vector<cplx> out;
  if (d < 1) return out;
  Poly<K> m = monic(p);
  Mat C = Mat::Zero(d, d);
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) C(i, d - 1) = -to_complex(m.c[i]);
  Eigen::ComplexEigenSolver<Mat> es(C);
  for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

}  // namespace manirep::exact
