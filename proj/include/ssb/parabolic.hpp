#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "ssb/coxeter.hpp"
#include "ssb/hecke.hpp"
#include "ssb/laurent.hpp"

namespace ssb {

// Element of triv_{S0} (x)_{H_{S0}} H in the basis {1 (x) H_{w_-}};
// finitely supported map coset -> Laurent, no zero terms.
struct ParElt {
  std::map<int, Laurent> t;

  bool is_zero() const { return t.empty(); }
  void add_term(int coset, const Laurent& c);
  ParElt& operator+=(const ParElt& o);
  ParElt operator+(const ParElt& o) const;
  ParElt operator-(const ParElt& o) const;
  ParElt scaled(const Laurent& c) const;
  Laurent coeff(int coset) const;
  bool operator==(const ParElt& o) const { return t == o.t; }
  bool operator!=(const ParElt& o) const { return t != o.t; }
};

// The right H-module triv_{S0} (x)_{H_{S0}} H over a coset table.
// The action on basis vectors is the Deodhar case split; p and i
// relate it to the Hecke algebra.
class ParabolicModule {
 public:
  ParabolicModule(const HeckeAlgebra& H, const CosetTable& cosets);

  const CosetTable& cosets() const { return C_; }
  const HeckeAlgebra& hecke() const { return H_; }

  ParElt unit() const { return basis(0); }  // 1 (x) H_e
  ParElt basis(int coset) const;

  ParElt act_gen(const ParElt& m, Gen s) const;  // m * H_s
  ParElt act(const ParElt& m, const HeckeElt& h) const;

  ParElt p_map(const HeckeElt& h) const;  // H_{u w_-} -> v^{-l(u)} 1(x)H_{w_-}
  HeckeElt i_map(const ParElt& m) const;

  ParElt bar(const ParElt& m) const;
  Laurent pairing(const ParElt& m, const ParElt& n) const;

  ParElt kl_basis(int coset) const;  // bar-invariant unitriangular basis

  // Exact coefficients of m in a unitriangular basis indexed by coset;
  // throws InternalError if the residual is nonzero.
  std::map<int, Laurent> decompose(const ParElt& m,
                                   const std::map<int, ParElt>& basis) const;

 private:
  const HeckeAlgebra& H_;
  const CosetTable& C_;
  HeckeElt sum_over_parabolic_;  // sum_u v^{-l(u)} H_u over W_{S0}
  mutable std::mutex mu_;
  mutable std::vector<std::optional<ParElt>> kl_cache_;
};

}  // namespace ssb
