#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssb/errors.hpp"
#include "ssb/linalg.hpp"

namespace ssb {

// Monomial in up to 8 variables, 8 bits per exponent, variable 0 in the
// highest byte so the natural uint64 order is lexicographic.
using Mono = uint64_t;
constexpr int kMaxVars = 8;

inline int mono_exp(Mono m, int i) { return (int)((m >> (8 * (7 - i))) & 0xff); }
inline Mono mono_shift(int i) { return (Mono)1 << (8 * (7 - i)); }
inline Mono mono_of_var(int i) { return mono_shift(i); }
inline Mono mono_mul(Mono a, Mono b) { return a + b; }

inline int mono_total(Mono m, int n) {
  int t = 0;
  for (int i = 0; i < n; i++) t += mono_exp(m, i);
  return t;
}

// Canonical list of all monomials of total degree d in n variables,
// lexicographic descending (x1^d first); cached per (n, d).
const std::vector<Mono>& monomials(int n, int d);
int monomial_index(int n, int d, Mono m);
inline int monomial_count(int n, int d) { return (int)monomials(n, d).size(); }

// Sparse multivariate polynomial over a field scalar; deg(V) = 1 here
// (the paper's doubled grading lives in the section layer).
template <class K>
struct MPoly {
  int n = 0;
  std::map<Mono, K> t;  // no zero coefficients

  MPoly() = default;
  explicit MPoly(int nvars) : n(nvars) {}
  static MPoly constant(int nvars, const K& c) {
    MPoly f(nvars);
    if (!c.is_zero()) f.t[0] = c;
    return f;
  }
  static MPoly variable(int nvars, int i, const K& c) {
    MPoly f(nvars);
    if (!c.is_zero()) f.t[mono_of_var(i)] = c;
    return f;
  }

  bool is_zero() const { return t.empty(); }

  void add_term(Mono m, const K& c) {
    if (c.is_zero()) return;
    auto it = t.find(m);
    if (it == t.end()) {
      t[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.t) add_term(m, c);
    return *this;
  }
  MPoly operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
  }
  MPoly operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.t) r.add_term(m, -c);
    return r;
  }
  MPoly operator*(const MPoly& o) const {
    MPoly r(n);
    for (const auto& [m1, c1] : t)
      for (const auto& [m2, c2] : o.t) r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
  }
  MPoly scaled(const K& c) const {
    MPoly r(n);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : t) r.t[m] = a * c;
    return r;
  }
  MPoly times_mono(Mono m) const {
    MPoly r(n);
    for (const auto& [m1, c] : t) r.t[mono_mul(m1, m)] = c;
    return r;
  }
  bool operator==(const MPoly& o) const { return t == o.t; }
  bool operator!=(const MPoly& o) const { return t != o.t; }

  int total_degree() const {  // max total degree; -1 for zero
    int d = -1;
    for (const auto& [m, c] : t) d = std::max(d, mono_total(m, n));
    return d;
  }
  bool homogeneous_of(int d) const {
    for (const auto& [m, c] : t)
      if (mono_total(m, n) != d) return false;
    return true;
  }

  std::string str(const std::vector<std::string>& vars = {}) const;
};

// Substitute variables by linear forms: x_i -> sum_j S(j, i) x_j.
template <class K>
MPoly<K> apply_linear(const Mat<K>& S, const MPoly<K>& f) {
  MPoly<K> r(f.n);
  for (const auto& [m, c] : f.t) {
    MPoly<K> term = MPoly<K>::constant(f.n, c);
    for (int i = 0; i < f.n; i++) {
      int e = mono_exp(m, i);
      if (e == 0) continue;
      MPoly<K> img(f.n);
      for (int j = 0; j < f.n; j++) img.add_term(mono_of_var(j), S.at(j, i));
      for (int k = 0; k < e; k++) term = term * img;
    }
    r += term;
  }
  return r;
}

// Exact division of f by a linear form; nullopt if not divisible.
template <class K>
std::optional<MPoly<K>> divide_exact_linear(const MPoly<K>& f,
                                            const MPoly<K>& alpha) {
  if (alpha.is_zero()) throw InternalError("division by zero polynomial");
  int j = -1;
  K cj(0);
  for (const auto& [m, c] : alpha.t) {
    if (mono_total(m, alpha.n) != 1)
      throw InternalError("divide_exact_linear: divisor is not linear");
    for (int i = 0; i < alpha.n; i++)
      if (mono_exp(m, i) == 1) {
        if (j < 0 || i < j) {
          j = i;
          cj = c;
        }
        break;
      }
  }
  // divide as a univariate polynomial in x_j
  MPoly<K> q(f.n), rem = f;
  K cj_inv = cj.inv();
  while (true) {
    int top = 0;
    for (const auto& [m, c] : rem.t) top = std::max(top, mono_exp(m, j));
    if (top == 0) break;
    MPoly<K> tau(f.n);
    for (const auto& [m, c] : rem.t)
      if (mono_exp(m, j) == top)
        tau.add_term(m - mono_shift(j), c * cj_inv);
    q += tau;
    rem = rem - alpha * tau;
  }
  if (!rem.is_zero()) return std::nullopt;
  return q;
}

// Coefficient vector of a homogeneous polynomial of total degree d in the
// canonical monomial basis.
template <class K>
void append_poly_coords(const MPoly<K>& f, int d, std::vector<K>& out) {
  size_t base = out.size();
  out.resize(base + monomial_count(f.n, d), K(0));
  for (const auto& [m, c] : f.t) {
    if (mono_total(m, f.n) != d)
      throw InternalError("append_poly_coords: not homogeneous");
    out[base + monomial_index(f.n, d, m)] = c;
  }
}

template <class K>
MPoly<K> poly_from_coords(int n, int d, const K* v) {
  MPoly<K> f(n);
  const auto& ms = monomials(n, d);
  for (int i = 0; i < (int)ms.size(); i++)
    if (!v[i].is_zero()) f.t[ms[i]] = v[i];
  return f;
}

template <class K>
std::string MPoly<K>::str(const std::vector<std::string>& vars) const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int i = 0; i < n; i++) {
      int e = mono_exp(m, i);
      if (e == 0) continue;
      os << "*" << (i < (int)vars.size() ? vars[i] : "x" + std::to_string(i + 1));
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace ssb
