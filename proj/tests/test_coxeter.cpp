#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ssb/coxeter.hpp"
#include "ssb/errors.hpp"

using namespace ssb;

namespace {

CoxeterMatrix mat(std::vector<std::vector<int>> m) { return CoxeterMatrix{std::move(m)}; }

CoxeterSystem a2() { return CoxeterSystem(mat({{1, 3}, {3, 1}}), 10); }
CoxeterSystem b2() { return CoxeterSystem(mat({{1, 4}, {4, 1}}), 10); }
CoxeterSystem a1a1() { return CoxeterSystem(mat({{1, 2}, {2, 1}}), 10); }
CoxeterSystem a3() {
  return CoxeterSystem(mat({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}), 12);
}

// independent Bruhat oracle: x <= y iff some subsequence of the canonical
// word of y is a reduced word of x (subword property)
bool bruhat_oracle(const CoxeterSystem& W, Elem x, Elem y) {
  const Word& wy = W.word(y);
  int n = (int)wy.size();
  std::set<Word> reduced_of_x;
  for (const Word& u : W.reduced_words(x)) reduced_of_x.insert(u);
  for (int mask = 0; mask < (1 << n); mask++) {
    Word sub;
    for (int i = 0; i < n; i++)
      if (mask & (1 << i)) sub.push_back(wy[i]);
    if ((int)sub.size() != W.length(x)) continue;
    if (reduced_of_x.count(sub)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("group sizes and longest lengths") {
  auto A2 = a2();
  CHECK(A2.size() == 6);
  CHECK(A2.full_group());
  CHECK(A2.length(A2.longest_element({0, 1})) == 3);

  auto A11 = a1a1();
  CHECK(A11.size() == 4);

  auto B2 = b2();
  CHECK(B2.size() == 8);
  CHECK(B2.length(B2.longest_element({0, 1})) == 4);

  auto A3 = a3();
  CHECK(A3.size() == 24);
  CHECK(A3.length(A3.longest_element({0, 1, 2})) == 6);
}

TEST_CASE("affine A1 window enumeration") {
  // [DERIVED oracle]: words alternate s1/s2, two per positive length
  CoxeterSystem W(mat({{1, 0}, {0, 1}}), 5);
  CHECK(W.size() == 11);
  CHECK_FALSE(W.full_group());
  Elem w = W.from_word({0, 1, 0, 1, 0});
  CHECK(W.length(w) == 5);
  CHECK_THROWS_AS((void)W.mult_gen(w, 1), WindowError);
}

TEST_CASE("canonical forms respect braid relations") {
  auto A2 = a2();
  CHECK(A2.from_word({0, 1, 0}) == A2.from_word({1, 0, 1}));
  auto B2 = b2();
  CHECK(B2.from_word({0, 1, 0, 1}) == B2.from_word({1, 0, 1, 0}));
  // w * w^{-1} = e, exhaustively
  for (Elem w = 0; w < A2.size(); w++)
    CHECK(A2.mult(w, A2.inverse(w)) == CoxeterSystem::kIdentity);
  // B2: (s1 s2)(s1 s2) has length 4
  Elem s1s2 = B2.from_word({0, 1});
  CHECK(B2.length(B2.mult(s1s2, s1s2)) == 4);
}

TEST_CASE("canonical word is ShortLex-least among all reduced words") {
  auto A3 = a3();
  for (Elem w = 0; w < A3.size(); w++) {
    auto words = A3.reduced_words(w);
    Word least = *std::min_element(words.begin(), words.end());
    CHECK(A3.word(w) == least);
    for (const Word& u : words) CHECK(A3.from_word(u) == w);
  }
}

TEST_CASE("length changes by one under a generator") {
  auto A3 = a3();
  for (Elem w = 0; w < A3.size(); w++)
    for (Gen s = 0; s < A3.rank(); s++) {
      int d = A3.length(A3.mult_gen(w, s)) - A3.length(w);
      CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("Bruhat order against the subword oracle") {
  auto A2 = a2();
  Elem s1 = A2.from_word({0}), s2 = A2.from_word({1});
  CHECK(A2.bruhat_leq(CoxeterSystem::kIdentity, A2.from_word({0, 1, 0})));
  CHECK_FALSE(A2.bruhat_leq(s1, s2));
  CHECK(A2.bruhat_leq(s1, A2.from_word({0, 1, 0})));

  for (const CoxeterSystem& W : {a2(), b2(), a3()})
    for (Elem x = 0; x < W.size(); x++)
      for (Elem y = 0; y < W.size(); y++)
        CHECK(W.bruhat_leq(x, y) == bruhat_oracle(W, x, y));
}

TEST_CASE("Bruhat order is a partial order respecting length") {
  auto B2 = b2();
  for (Elem x = 0; x < B2.size(); x++)
    for (Elem y = 0; y < B2.size(); y++) {
      if (B2.bruhat_leq(x, y) && x != y) CHECK(B2.length(x) < B2.length(y));
      if (B2.bruhat_leq(x, y) && B2.bruhat_leq(y, x)) CHECK(x == y);
      for (Elem z = 0; z < B2.size(); z++)
        if (B2.bruhat_leq(x, y) && B2.bruhat_leq(y, z))
          CHECK(B2.bruhat_leq(x, z));
    }
}

TEST_CASE("coset decomposition") {
  auto A2 = a2();
  std::vector<Gen> S0 = {0};  // {s1}
  // A2, S0={s1}, w = s1s2 -> (s1, s2)
  auto [u, wm] = A2.coset_decompose(S0, A2.from_word({0, 1}));
  CHECK(u == A2.from_word({0}));
  CHECK(wm == A2.from_word({1}));
  // w in W_{S0} -> (w, e)
  auto [u2, wm2] = A2.coset_decompose(S0, A2.from_word({0}));
  CHECK(u2 == A2.from_word({0}));
  CHECK(wm2 == CoxeterSystem::kIdentity);
  // s2s1 is already minimal
  auto [u3, wm3] = A2.coset_decompose(S0, A2.from_word({1, 0}));
  CHECK(u3 == CoxeterSystem::kIdentity);
  CHECK(wm3 == A2.from_word({1, 0}));
  // lengths add, exhaustively
  for (Elem w = 0; w < A2.size(); w++) {
    auto [a, b] = A2.coset_decompose(S0, w);
    CHECK(A2.length(w) == A2.length(a) + A2.length(b));
    CHECK(A2.mult(a, b) == w);
    CHECK(A2.is_min_coset_rep(S0, b));
  }
}

TEST_CASE("coset enumeration and order") {
  auto A2 = a2();
  CosetTable C(A2, {0});
  REQUIRE(C.size() == 3);
  CHECK(C.min_rep(0) == CoxeterSystem::kIdentity);
  CHECK(C.min_rep(1) == A2.from_word({1}));
  CHECK(C.min_rep(2) == A2.from_word({1, 0}));

  CosetTable Cfull(A2, {0, 1});
  CHECK(Cfull.size() == 1);

  CosetTable Cempty(A2, {});
  CHECK(Cempty.size() == A2.size());

  // coset order matches element-level Bruhat on minimal reps
  for (int a = 0; a < C.size(); a++)
    for (int b = 0; b < C.size(); b++)
      CHECK(C.leq(a, b) == A2.bruhat_leq(C.min_rep(a), C.min_rep(b)));
}

TEST_CASE("Deodhar trichotomy exhaustively") {
  for (const CoxeterSystem& W : {a2(), b2(), a3()}) {
    for (int mask = 1; mask < (1 << W.rank()) - 1; mask++) {
      std::vector<Gen> S0;
      for (Gen s = 0; s < W.rank(); s++)
        if (mask & (1 << s)) S0.push_back(s);
      CosetTable C(W, S0);
      for (int c = 0; c < C.size(); c++)
        for (Gen s = 0; s < W.rank(); s++) {
          Elem wm = C.min_rep(c);
          Elem x = W.mult_gen(wm, s);
          auto act = C.act_gen(c, s);
          if (act.kind == CosetTable::Case::Stay) {
            // x = t * wm with t in S0 and length goes up
            CHECK(W.length(x) == W.length(wm) + 1);
            auto [t, m2] = W.coset_decompose(S0, x);
            CHECK(m2 == wm);
            CHECK(W.length(t) == 1);
            CHECK(act.target == c);
          } else {
            CHECK(W.is_min_coset_rep(S0, x));
            CHECK(act.target == C.coset_of(x));
            if (act.kind == CosetTable::Case::UpAcross)
              CHECK(W.length(x) == W.length(wm) + 1);
            else
              CHECK(W.length(x) == W.length(wm) - 1);
          }
        }
    }
  }
}

TEST_CASE("malformed matrices are rejected") {
  CHECK_THROWS_AS(CoxeterSystem(mat({{1, 3}, {2, 1}}), 4), ConfigError);
  CHECK_THROWS_AS(CoxeterSystem(mat({{2, 3}, {3, 1}}), 4), ConfigError);
  CHECK_THROWS_AS(CoxeterSystem(mat({{1, 1}, {1, 1}}), 4), ConfigError);
}

TEST_CASE("parabolic closure detection in a window") {
  CoxeterSystem W(mat({{1, 0}, {0, 1}}), 4);
  CHECK_THROWS_AS((void)W.parabolic_elements({0, 1}), WindowError);
  CHECK(W.parabolic_elements({0}).size() == 2);
}
