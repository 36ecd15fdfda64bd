#include "ssb/hecke.hpp"

#include "ssb/errors.hpp"

namespace ssb {

void HeckeElt::add_term(Elem w, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = t.find(w);
  if (it == t.end()) {
    t[w] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [w, c] : o.t) add_term(w, c);
  return *this;
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  HeckeElt r = *this;
  r += o;
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  HeckeElt r = *this;
  for (const auto& [w, c] : o.t) r.add_term(w, -c);
  return r;
}

HeckeElt HeckeElt::scaled(const Laurent& c) const {
  HeckeElt r;
  if (c.is_zero()) return r;
  for (const auto& [w, a] : t) r.t[w] = a * c;
  return r;
}

Laurent HeckeElt::coeff(Elem w) const {
  auto it = t.find(w);
  return it == t.end() ? Laurent() : it->second;
}

HeckeAlgebra::HeckeAlgebra(const CoxeterSystem& W) : W_(W) {
  bar_cache_.resize(W.size());
  kl_cache_.resize(W.size());
}

HeckeElt HeckeAlgebra::std_basis(Elem w) const {
  HeckeElt h;
  h.t[w] = Laurent(1);
  return h;
}

HeckeElt HeckeAlgebra::mul_gen(const HeckeElt& h, Gen s) const {
  // H_w H_s = H_{ws} if l up, else H_{ws} + (v^{-1} - v) H_w.
  HeckeElt r;
  Laurent vdiff = Laurent::v_pow(-1) - Laurent::v_pow(1);
  for (const auto& [w, c] : h.t) {
    Elem ws = W_.mult_gen(w, s);
    r.add_term(ws, c);
    if (W_.length(ws) < W_.length(w)) r.add_term(w, c * vdiff);
  }
  return r;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt r;
  for (const auto& [x, c] : b.t) {
    HeckeElt ax = a;
    for (Gen s : W_.word(x)) ax = mul_gen(ax, s);
    r += ax.scaled(c);
  }
  return r;
}

const HeckeElt& HeckeAlgebra::bar_std(Elem w) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (bar_cache_[w]) return *bar_cache_[w];
  }
  // bar is a ring involution, so bar(H_w) = bar(H_{s_1}) ... bar(H_{s_k})
  // along a reduced word, with bar(H_s) = H_s + v - v^{-1}.
  HeckeElt r = unit();
  Laurent vdiff = Laurent::v_pow(1) - Laurent::v_pow(-1);
  for (Gen s : W_.word(w)) {
    HeckeElt next = mul_gen(r, s);
    next += r.scaled(vdiff);
    r = std::move(next);
  }
  std::lock_guard<std::mutex> lk(mu_);
  if (!bar_cache_[w]) bar_cache_[w] = std::move(r);
  return *bar_cache_[w];
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
  HeckeElt r;
  for (const auto& [w, c] : h.t) r += bar_std(w).scaled(c.bar());
  return r;
}

HeckeElt HeckeAlgebra::omega(const HeckeElt& h) const {
  // omega(sum a_x H_x) = sum bar(a_x) H_x^{-1}, and H_x^{-1} = bar(H_{x^{-1}}).
  HeckeElt r;
  for (const auto& [w, c] : h.t)
    r += bar_std(W_.inverse(w)).scaled(c.bar());
  return r;
}

HeckeElt HeckeAlgebra::kl_basis(Elem w) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (kl_cache_[w]) return *kl_cache_[w];
  }
  HeckeElt b;
  if (w == CoxeterSystem::kIdentity) {
    b = unit();
  } else {
    Gen s = W_.word(w).back();
    Elem w1 = W_.mult_gen(w, s);  // shorter
    HeckeElt c = kl_basis(w1);
    c = mul_gen(c, s) + c.scaled(Laurent::v_pow(1));  // b_{w1} * b_s
    // subtract mu-corrections from the top down; the product has
    // coefficients in Z[v], so constants are the only obstruction
    for (Elem y = w - 1; y >= 0; y--) {
      Laurent cy = c.coeff(y);
      if (cy.is_zero()) continue;
      Int mu = cy.constant_term();
      if (mu != 0) c = c - kl_basis(y).scaled(Laurent(mu));
    }
    b = std::move(c);
  }
  std::lock_guard<std::mutex> lk(mu_);
  if (!kl_cache_[w]) kl_cache_[w] = std::move(b);
  return *kl_cache_[w];
}

Laurent HeckeAlgebra::triv(const HeckeElt& h) const {
  Laurent r;
  for (const auto& [w, c] : h.t) r += c.shifted(-W_.length(w));
  return r;
}

Laurent HeckeAlgebra::pairing(const HeckeElt& m, const HeckeElt& n) const {
  HeckeElt nb = bar(n);
  Laurent r;
  for (const auto& [w, a] : m.t) {
    Laurent b = nb.coeff(w);
    if (!b.is_zero()) r += (a * b).bar();
  }
  return r;
}

}  // namespace ssb
