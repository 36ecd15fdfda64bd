#include "ssb/parabolic.hpp"

#include "ssb/errors.hpp"

namespace ssb {

void ParElt::add_term(int coset, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = t.find(coset);
  if (it == t.end()) {
    t[coset] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

ParElt& ParElt::operator+=(const ParElt& o) {
  for (const auto& [w, c] : o.t) add_term(w, c);
  return *this;
}

ParElt ParElt::operator+(const ParElt& o) const {
  ParElt r = *this;
  r += o;
  return r;
}

ParElt ParElt::operator-(const ParElt& o) const {
  ParElt r = *this;
  for (const auto& [w, c] : o.t) r.add_term(w, -c);
  return r;
}

ParElt ParElt::scaled(const Laurent& c) const {
  ParElt r;
  if (c.is_zero()) return r;
  for (const auto& [w, a] : t) r.t[w] = a * c;
  return r;
}

Laurent ParElt::coeff(int coset) const {
  auto it = t.find(coset);
  return it == t.end() ? Laurent() : it->second;
}

ParabolicModule::ParabolicModule(const HeckeAlgebra& H, const CosetTable& C)
    : H_(H), C_(C) {
  kl_cache_.resize(C.size());
  for (Elem u : H.system().parabolic_elements(C.S0()))
    sum_over_parabolic_ +=
        H.std_basis(u).scaled(Laurent::v_pow(-H.system().length(u)));
}

ParElt ParabolicModule::basis(int coset) const {
  ParElt m;
  m.t[coset] = Laurent(1);
  return m;
}

ParElt ParabolicModule::act_gen(const ParElt& m, Gen s) const {
  ParElt r;
  Laurent vdiff = Laurent::v_pow(-1) - Laurent::v_pow(1);
  for (const auto& [c, a] : m.t) {
    auto action = C_.act_gen(c, s);
    switch (action.kind) {
      case CosetTable::Case::UpAcross:
        r.add_term(action.target, a);
        break;
      case CosetTable::Case::DownAcross:
        r.add_term(action.target, a);
        r.add_term(c, a * vdiff);
        break;
      case CosetTable::Case::Stay:
        r.add_term(c, a * Laurent::v_pow(-1));
        break;
    }
  }
  return r;
}

ParElt ParabolicModule::act(const ParElt& m, const HeckeElt& h) const {
  ParElt r;
  for (const auto& [x, c] : h.t) {
    ParElt mx = m;
    for (Gen s : H_.system().word(x)) mx = act_gen(mx, s);
    r += mx.scaled(c);
  }
  return r;
}

ParElt ParabolicModule::p_map(const HeckeElt& h) const {
  ParElt r;
  for (const auto& [w, c] : h.t) {
    auto [u, wmin] = H_.system().coset_decompose(C_.S0(), w);
    r.add_term(C_.coset_of(wmin),
               c.shifted(-H_.system().length(u)));
  }
  return r;
}

HeckeElt ParabolicModule::i_map(const ParElt& m) const {
  HeckeElt r;
  for (const auto& [c, a] : m.t)
    r += H_.mul(sum_over_parabolic_, H_.std_basis(C_.min_rep(c))).scaled(a);
  return r;
}

ParElt ParabolicModule::bar(const ParElt& m) const {
  // bar(a (x) H_{w_-}) = bar(a) p(bar(H_{w_-}))
  ParElt r;
  for (const auto& [c, a] : m.t)
    r += p_map(H_.bar(H_.std_basis(C_.min_rep(c)))).scaled(a.bar());
  return r;
}

Laurent ParabolicModule::pairing(const ParElt& m, const ParElt& n) const {
  ParElt nb = bar(n);
  Laurent r;
  for (const auto& [c, a] : m.t) {
    Laurent b = nb.coeff(c);
    if (!b.is_zero()) r += (a * b).bar();
  }
  return r;
}

ParElt ParabolicModule::kl_basis(int coset) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (kl_cache_[coset]) return *kl_cache_[coset];
  }
  ParElt b;
  if (coset == 0) {
    b = unit();
  } else {
    Elem wm = C_.min_rep(coset);
    Gen s = H_.system().word(wm).back();
    int below = C_.coset_of(H_.system().mult_gen(wm, s));
    ParElt c = kl_basis(below);
    c = act_gen(c, s) + c.scaled(Laurent::v_pow(1));  // * b_s
    for (int y = coset - 1; y >= 0; y--) {
      Laurent cy = c.coeff(y);
      if (cy.is_zero()) continue;
      Int mu = cy.constant_term();
      if (mu != 0) c = c - kl_basis(y).scaled(Laurent(mu));
    }
    b = std::move(c);
  }
  std::lock_guard<std::mutex> lk(mu_);
  if (!kl_cache_[coset]) kl_cache_[coset] = std::move(b);
  return *kl_cache_[coset];
}

std::map<int, Laurent> ParabolicModule::decompose(
    const ParElt& m, const std::map<int, ParElt>& basis) const {
  std::map<int, Laurent> out;
  ParElt rest = m;
  // back-substitute from the maximal cosets (largest index first)
  while (!rest.is_zero()) {
    auto top = std::prev(rest.t.end());
    int c = top->first;
    auto bit = basis.find(c);
    if (bit == basis.end())
      throw InternalError("decompose: no basis element at coset " +
                          std::to_string(c));
    Laurent lead = bit->second.coeff(c);
    if (!(lead == Laurent(1)) || std::prev(bit->second.t.end())->first != c)
      throw InternalError("decompose: basis not unitriangular");
    Laurent coeff = top->second;
    out[c] = coeff;
    rest = rest - bit->second.scaled(coeff);
    if (!rest.coeff(c).is_zero())
      throw InternalError("decompose: elimination failed");
  }
  return out;
}

}  // namespace ssb
