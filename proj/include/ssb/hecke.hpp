#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "ssb/coxeter.hpp"
#include "ssb/laurent.hpp"

namespace ssb {

// Element of the Hecke algebra in the standard basis {H_w}; finitely
// supported map w -> Laurent, no zero terms, ordered by element id
// ((length, ShortLex)).
struct HeckeElt {
  std::map<Elem, Laurent> t;

  bool is_zero() const { return t.empty(); }
  void add_term(Elem w, const Laurent& c);
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt scaled(const Laurent& c) const;
  Laurent coeff(Elem w) const;
  bool operator==(const HeckeElt& o) const { return t == o.t; }
  bool operator!=(const HeckeElt& o) const { return t != o.t; }
};

// The Hecke algebra over Z[v, v^{-1}] attached to a Coxeter system,
// with the relations (H_s - v^{-1})(H_s + v) = 0 and H_{w1 w2} =
// H_{w1} H_{w2} when lengths add.  Memo tables for bar and the
// Kazhdan-Lusztig basis are write-once caches behind a mutex.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const CoxeterSystem& W);

  const CoxeterSystem& system() const { return W_; }

  HeckeElt unit() const { return std_basis(CoxeterSystem::kIdentity); }
  HeckeElt std_basis(Elem w) const;

  HeckeElt mul_gen(const HeckeElt& h, Gen s) const;  // h * H_s
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

  HeckeElt bar(const HeckeElt& h) const;
  HeckeElt omega(const HeckeElt& h) const;
  HeckeElt kl_basis(Elem w) const;  // b_w

  Laurent triv(const HeckeElt& h) const;  // triv(H_w) = v^{-l(w)}
  // <m, n> = sum_x bar(a_x b_x) with m = sum a_x H_x, bar(n) = sum b_x H_x.
  Laurent pairing(const HeckeElt& m, const HeckeElt& n) const;

 private:
  const HeckeElt& bar_std(Elem w) const;  // bar(H_w), memoized
  const CoxeterSystem& W_;
  mutable std::mutex mu_;
  mutable std::vector<std::optional<HeckeElt>> bar_cache_;
  mutable std::vector<std::optional<HeckeElt>> kl_cache_;
};

}  // namespace ssb
