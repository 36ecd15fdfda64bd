#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ssb {

using Gen = int;                 // generator index, 0-based
using Word = std::vector<Gen>;   // sequence of generator indices
using Elem = int;                // id inside the enumerated window

// Coxeter matrix; off-diagonal entry 0 encodes m(s,t) = infinity.
struct CoxeterMatrix {
  std::vector<std::vector<int>> m;
  int rank() const { return (int)m.size(); }
  void validate() const;  // throws ConfigError
  bool is_infinite_entry(int i, int j) const { return m[i][j] == 0; }
};

// A Coxeter system with the Cayley graph enumerated up to a length cap.
// Elements are stored by their ShortLex-minimal reduced word; ids are
// assigned in (length, ShortLex) order, so id order is a linear extension
// of the Bruhat order.  Immutable after construction; all queries are
// read-only and safe to use concurrently.
class CoxeterSystem {
 public:
  CoxeterSystem(CoxeterMatrix matrix, int length_cap);

  int rank() const { return matrix_.rank(); }
  int length_cap() const { return cap_; }
  bool full_group() const { return full_group_; }  // closed before the cap
  int size() const { return (int)words_.size(); }
  int coxeter_m(Gen s, Gen t) const { return matrix_.m[s][t]; }
  const CoxeterMatrix& matrix() const { return matrix_; }

  static constexpr Elem kIdentity = 0;

  const Word& word(Elem w) const { return words_[w]; }
  int length(Elem w) const { return (int)words_[w].size(); }
  std::string name(Elem w) const;          // "e", "s1s2s1"

  Elem mult_gen(Elem w, Gen s) const;      // throws WindowError on escape
  Elem mult(Elem a, Elem b) const;
  Elem left_mult_gen(Gen s, Elem w) const;
  Elem inverse(Elem w) const { return inverse_[w]; }
  Elem from_word(const Word& w) const;     // canonicalizes

  bool right_descent(Elem w, Gen s) const;  // l(ws) < l(w)
  bool left_descent(Elem w, Gen s) const;   // l(sw) < l(w)

  bool bruhat_leq(Elem x, Elem y) const { return bruhat_[y][x]; }

  // Elements of the standard parabolic W_{S0}, sorted by id.  Throws
  // WindowError if W_{S0} does not close inside the window.
  std::vector<Elem> parabolic_elements(const std::vector<Gen>& S0) const;
  Elem longest_element(const std::vector<Gen>& S0) const;

  // w = u * wmin with u in W_{S0}, l(w) = l(u) + l(wmin), wmin minimal
  // in its coset W_{S0} w.
  std::pair<Elem, Elem> coset_decompose(const std::vector<Gen>& S0,
                                        Elem w) const;
  bool is_min_coset_rep(const std::vector<Gen>& S0, Elem w) const;

  // All reduced words of an element (used by tests as a subword oracle).
  std::vector<Word> reduced_words(Elem w) const;

 private:
  Word canonical_word(const Word& w) const;  // rewriting closure
  CoxeterMatrix matrix_;
  int cap_;
  bool full_group_ = false;
  std::vector<Word> words_;                  // id -> canonical word
  std::vector<std::vector<Elem>> right_;     // id x gen -> id (-1 = escape)
  std::vector<Elem> inverse_;
  std::vector<std::vector<bool>> bruhat_;    // bruhat_[y][x] : x <= y
};

// Cosets W_{S0}\W with minimal representatives inside the window, ordered
// by (length, ShortLex) of the representative.
class CosetTable {
 public:
  CosetTable(const CoxeterSystem& W, std::vector<Gen> S0);

  const CoxeterSystem& system() const { return *W_; }
  const std::vector<Gen>& S0() const { return S0_; }
  bool parabolic_is_all() const;

  int size() const { return (int)min_reps_.size(); }
  Elem min_rep(int c) const { return min_reps_[c]; }
  int coset_of(Elem w) const;             // index of the coset W_{S0} w
  int rep_length(int c) const { return W_->length(min_reps_[c]); }
  bool leq(int a, int b) const {          // coset Bruhat order
    return W_->bruhat_leq(min_reps_[a], min_reps_[b]);
  }

  // Deodhar trichotomy for (coset, s).
  enum class Case { UpAcross, DownAcross, Stay };
  struct GenAction {
    Case kind;
    int target;  // coset of (wmin * s); equals source for Stay
  };
  GenAction act_gen(int coset, Gen s) const;

  // Topology on the quotient: open = up-closed in the coset order.
  bool is_closed(const std::vector<int>& I) const;
  bool is_open(const std::vector<int>& I) const;

 private:
  const CoxeterSystem* W_;
  std::vector<Gen> S0_;
  std::vector<Elem> min_reps_;
  std::vector<int> coset_of_elem_;  // elem -> coset index
};

}  // namespace ssb
