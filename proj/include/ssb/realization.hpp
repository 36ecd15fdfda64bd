#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "ssb/coxeter.hpp"
#include "ssb/errors.hpp"
#include "ssb/linalg.hpp"
#include "ssb/mpoly.hpp"

namespace ssb {

// A realization (V, {alpha_s}, {alpha_s^vee}) over an exact field K,
// with the W-action on V and on R = Sym(V).  deg V = 2 in the paper's
// grading; polynomial total degree d here corresponds to paper degree 2d.
// Immutable after validate(); the invariants table is a write-once cache.
template <class K>
class Realization {
 public:
  Realization(const CoxeterSystem& W, int dim_v,
              std::vector<std::vector<K>> alpha,
              std::vector<std::vector<K>> alpha_check)
      : W_(&W), n_(dim_v), alpha_(std::move(alpha)),
        alpha_check_(std::move(alpha_check)) {
    validate();
  }

  const CoxeterSystem& system() const { return *W_; }
  int dim_v() const { return n_; }

  // pairing <lambda, alpha_s^vee> for lambda in coordinates
  K pair_check(Gen s, const std::vector<K>& lam) const {
    K r(0);
    for (int i = 0; i < n_; i++) r += alpha_check_[s][i] * lam[i];
    return r;
  }

  const Mat<K>& gen_matrix(Gen s) const { return act_v_[s]; }
  Mat<K> elem_matrix(Elem w) const;

  MPoly<K> alpha_poly(Gen s) const;
  MPoly<K> act_gen(Gen s, const MPoly<K>& f) const {
    return apply_linear(act_v_[s], f);
  }
  MPoly<K> act_word(const Word& w, const MPoly<K>& f) const;
  MPoly<K> act(Elem w, const MPoly<K>& f) const {
    return act_word(W_->word(w), f);
  }
  MPoly<K> act_inverse(Elem w, const MPoly<K>& f) const;

  // Demazure operator (f - s f)/alpha_s; exact by construction, throws
  // InternalError if the division fails (broken realization).
  MPoly<K> demazure(Gen s, const MPoly<K>& f) const;

  struct ReflectionRoot {
    Elem t;         // the reflection w s w^{-1}
    MPoly<K> root;  // chosen representative alpha_t = w(alpha_s)
    Elem w;         // the recorded choice (w, s)
    Gen s;
  };
  // One root per reflection of W_{S0}, from the first (length, ShortLex)
  // pair (w, s); W_{S0} must be finite.
  std::vector<ReflectionRoot> reflection_roots(const std::vector<Gen>& S0) const;

  struct GkmWitness {
    bool ok = true;
    Elem t1 = -1, t2 = -1;  // offending pair when !ok
  };
  GkmWitness gkm_check(const std::vector<Gen>& S0) const;

  bool faithful_on(const std::vector<Gen>& S0) const;

  // Basis of the W_{S0}-invariants of polynomial total degree d, as
  // coefficient rows in the canonical monomial basis (RREF rows).
  const Mat<K>& invariants_basis(const std::vector<Gen>& S0, int d) const;

  // Degreewise Hilbert consequence of R = (+)_{w in W_{S0}} R^{W_{S0}}(-2l(w)),
  // verified for paper degrees <= D (i.e. total degrees <= D/2).
  bool freeness_check(const std::vector<Gen>& S0, int paper_degree_bound) const;

 private:
  void validate();
  const CoxeterSystem* W_;
  int n_;
  std::vector<std::vector<K>> alpha_, alpha_check_;
  std::vector<Mat<K>> act_v_;  // per generator, action on V
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::vector<Gen>, int>, Mat<K>> inv_cache_;
};

template <class K>
void Realization<K>::validate() {
  int r = W_->rank();
  if (n_ < 1 || n_ > kMaxVars)
    throw ConfigError("realization: dim_V out of supported range [1,8]");
  if ((int)alpha_.size() != r || (int)alpha_check_.size() != r)
    throw ConfigError("realization: need alpha/alpha_check per generator");
  for (Gen s = 0; s < r; s++) {
    if ((int)alpha_[s].size() != n_ || (int)alpha_check_[s].size() != n_)
      throw ConfigError("realization: alpha vectors must have dim_V entries");
    bool a_zero = true, c_zero = true;
    for (const K& x : alpha_[s]) a_zero = a_zero && x.is_zero();
    for (const K& x : alpha_check_[s]) c_zero = c_zero && x.is_zero();
    if (a_zero)
      throw ConfigError("realization axiom violated: alpha_" +
                        std::to_string(s + 1) + " = 0");
    if (c_zero)
      throw ConfigError("realization axiom violated: alpha_" +
                        std::to_string(s + 1) + "^vee not surjective");
    if (pair_check(s, alpha_[s]) != K(2))
      throw ConfigError("realization axiom violated: <alpha_s, alpha_s^vee> != 2 at s" +
                        std::to_string(s + 1));
  }
  // s(lambda) = lambda - <lambda, alpha_s^vee> alpha_s, on the basis
  act_v_.clear();
  for (Gen s = 0; s < r; s++) {
    Mat<K> m(n_, n_);
    for (int i = 0; i < n_; i++) {
      for (int j = 0; j < n_; j++)
        m.at(j, i) = (i == j ? K(1) : K(0)) - alpha_check_[s][i] * alpha_[s][j];
    }
    act_v_.push_back(std::move(m));
  }
  // braid relations on V for every finite m(s,t)
  for (Gen s = 0; s < r; s++)
    for (Gen t = s; t < r; t++) {
      int m = W_->coxeter_m(s, t);
      if (m == 0) continue;
      Mat<K> prod(n_, n_);
      for (int i = 0; i < n_; i++)
        for (int j = 0; j < n_; j++) prod.at(i, j) = (i == j) ? K(1) : K(0);
      for (int k = 0; k < 2 * m; k++) {
        const Mat<K>& g = act_v_[k % 2 == 0 ? s : t];
        Mat<K> next(n_, n_);
        for (int i = 0; i < n_; i++)
          for (int j = 0; j < n_; j++) {
            K acc(0);
            for (int l = 0; l < n_; l++) acc += g.at(i, l) * prod.at(l, j);
            next.at(i, j) = acc;
          }
        prod = std::move(next);
      }
      for (int i = 0; i < n_; i++)
        for (int j = 0; j < n_; j++)
          if (prod.at(i, j) != ((i == j) ? K(1) : K(0)))
            throw ConfigError(
                "realization axiom violated: braid relation fails on V at (s" +
                std::to_string(s + 1) + ", s" + std::to_string(t + 1) + ")");
    }
}

template <class K>
Mat<K> Realization<K>::elem_matrix(Elem w) const {
  Mat<K> m(n_, n_);
  for (int i = 0; i < n_; i++) m.at(i, i) = K(1);
  // left-to-right: w = s_1 ... s_k acts as s_1 o ... o s_k
  const Word& word = W_->word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const Mat<K>& g = act_v_[*it];
    Mat<K> next(n_, n_);
    for (int i = 0; i < n_; i++)
      for (int j = 0; j < n_; j++) {
        K acc(0);
        for (int l = 0; l < n_; l++) acc += g.at(i, l) * m.at(l, j);
        next.at(i, j) = acc;
      }
    m = std::move(next);
  }
  return m;
}

template <class K>
MPoly<K> Realization<K>::alpha_poly(Gen s) const {
  MPoly<K> f(n_);
  for (int i = 0; i < n_; i++) f.add_term(mono_of_var(i), alpha_[s][i]);
  return f;
}

template <class K>
MPoly<K> Realization<K>::act_word(const Word& w, const MPoly<K>& f) const {
  MPoly<K> r = f;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = act_gen(*it, r);
  return r;
}

template <class K>
MPoly<K> Realization<K>::act_inverse(Elem w, const MPoly<K>& f) const {
  Word rev(W_->word(w).rbegin(), W_->word(w).rend());
  return act_word(rev, f);
}

template <class K>
MPoly<K> Realization<K>::demazure(Gen s, const MPoly<K>& f) const {
  MPoly<K> num = f - act_gen(s, f);
  auto q = divide_exact_linear(num, alpha_poly(s));
  if (!q)
    throw InternalError("demazure: f - s(f) not divisible by alpha_s");
  return *q;
}

template <class K>
std::vector<typename Realization<K>::ReflectionRoot>
Realization<K>::reflection_roots(const std::vector<Gen>& S0) const {
  std::vector<Gen> gens = S0;
  std::sort(gens.begin(), gens.end());
  std::vector<ReflectionRoot> out;
  std::map<Elem, bool> seen;
  // (length, ShortLex) on w = id order; generators in index order
  for (Elem w : W_->parabolic_elements(gens)) {
    for (Gen s : gens) {
      Elem t = W_->mult(W_->mult_gen(w, s), W_->inverse(w));
      if (seen.count(t)) continue;
      seen[t] = true;
      out.push_back({t, act(w, alpha_poly(s)), w, s});
    }
  }
  // parabolic_elements is sorted by id, so the recorded (w, s) is the
  // first in (length, ShortLex, generator) order; sort output by t
  std::sort(out.begin(), out.end(),
            [](const ReflectionRoot& a, const ReflectionRoot& b) {
              return a.t < b.t;
            });
  return out;
}

template <class K>
typename Realization<K>::GkmWitness Realization<K>::gkm_check(
    const std::vector<Gen>& S0) const {
  auto roots = reflection_roots(S0);
  for (size_t i = 0; i < roots.size(); i++)
    for (size_t j = i + 1; j < roots.size(); j++) {
      // proportionality of two nonzero linear forms
      Mat<K> m(2, n_);
      for (int k = 0; k < n_; k++) {
        m.at(0, k) = roots[i].root.t.count(mono_of_var(k))
                         ? roots[i].root.t.at(mono_of_var(k))
                         : K(0);
        m.at(1, k) = roots[j].root.t.count(mono_of_var(k))
                         ? roots[j].root.t.at(mono_of_var(k))
                         : K(0);
      }
      Mat<K> r = m;
      if (rref(r).size() < 2) return {false, roots[i].t, roots[j].t};
    }
  return {};
}

template <class K>
bool Realization<K>::faithful_on(const std::vector<Gen>& S0) const {
  auto elems = W_->parabolic_elements(S0);
  for (size_t i = 0; i < elems.size(); i++) {
    Mat<K> mi = elem_matrix(elems[i]);
    for (size_t j = i + 1; j < elems.size(); j++) {
      Mat<K> mj = elem_matrix(elems[j]);
      bool equal = true;
      for (int r = 0; r < n_ && equal; r++)
        for (int c = 0; c < n_ && equal; c++)
          if (mi.at(r, c) != mj.at(r, c)) equal = false;
      if (equal) return false;
    }
  }
  return true;
}

template <class K>
const Mat<K>& Realization<K>::invariants_basis(const std::vector<Gen>& S0,
                                               int d) const {
  std::vector<Gen> key = S0;
  std::sort(key.begin(), key.end());
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = inv_cache_.find({key, d});
    if (it != inv_cache_.end()) return it->second;
  }
  int dim = monomial_count(n_, d);
  // joint kernel of (s - id) acting on R_d over s in S0
  Mat<K> stack((int)key.size() * dim, dim);
  int row = 0;
  for (Gen s : key) {
    for (int i = 0; i < dim; i++) {
      MPoly<K> f(n_);
      f.t[monomials(n_, d)[i]] = K(1);
      MPoly<K> g = act_gen(s, f) - f;
      std::vector<K> coords;
      append_poly_coords(g, d, coords);
      for (int j = 0; j < dim; j++) stack.at(row + j, i) = coords[j];
    }
    row += dim;
  }
  Mat<K> b = row_basis(kernel_basis(stack));
  std::lock_guard<std::mutex> lk(mu_);
  auto [it, inserted] = inv_cache_.emplace(std::make_pair(key, d), std::move(b));
  return it->second;
}

template <class K>
bool Realization<K>::freeness_check(const std::vector<Gen>& S0,
                                    int paper_degree_bound) const {
  auto elems = W_->parabolic_elements(S0);
  for (int d2 = 0; d2 <= paper_degree_bound; d2 += 2) {
    int d = d2 / 2;
    long lhs = monomial_count(n_, d);
    long rhs = 0;
    for (Elem w : elems) {
      int dd = d - W_->length(w);  // paper shift 2 l(w) = total degree l(w)
      if (dd >= 0) rhs += invariants_basis(S0, dd).rows;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace ssb
