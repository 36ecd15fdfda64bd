#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ssb/field.hpp"
#include "ssb/linalg.hpp"

using namespace ssb;

namespace {

Mat<Rat> from_ints(std::vector<std::vector<long>> rows) {
  Mat<Rat> m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) m.at(i, j) = Rat(rows[i][j]);
  return m;
}

// plain rational elimination as the oracle for the fraction-free path
int rank_oracle(Mat<Rat> A) { return (int)rref(A).size(); }

}  // namespace

TEST_CASE("rref canonical form") {
  // columns 0 and 1 are proportional, so the pivots are {0, 2}
  Mat<Rat> A = from_ints({{2, 4, 6}, {1, 2, 4}, {0, 0, 2}});
  auto p = rref(A);
  CHECK(p == std::vector<int>{0, 2});
  CHECK(A.at(0, 0) == Rat(1));
  CHECK(A.at(0, 1) == Rat(2));
  CHECK(A.at(0, 2) == Rat(0));
}

TEST_CASE("fraction-free pivots match rational elimination") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; trial++) {
    int r = 1 + (int)(rng() % 8), c = 1 + (int)(rng() % 8);
    Mat<Rat> A(r, c);
    for (int i = 0; i < r; i++)
      for (int j = 0; j < c; j++)
        A.at(i, j) = Rat((long)(rng() % 7) - 3) / Rat((long)(rng() % 3) + 1);
    Mat<Rat> B = A;
    auto piv_ff = ref_pivots(A);
    auto piv_rr = rref(B);
    CHECK(piv_ff == piv_rr);
  }
}

TEST_CASE("fraction-free survives int64 overflow via GMP fallback") {
  // Hilbert-like ill-conditioned integer matrix with huge Bareiss growth
  int n = 12;
  Mat<Rat> A(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      A.at(i, j) = Rat(1) / Rat((long)(i + j + 1));
  CHECK((int)ref_pivots(A).size() == n);
}

TEST_CASE("kernel basis") {
  Mat<Rat> A = from_ints({{1, 1, 0}, {0, 1, 1}});
  Mat<Rat> Kb = kernel_basis(A);
  REQUIRE(Kb.rows == 1);
  // A x = 0
  for (int i = 0; i < A.rows; i++) {
    Rat s(0);
    for (int j = 0; j < 3; j++) s += A.at(i, j) * Kb.at(0, j);
    CHECK(s.is_zero());
  }
}

TEST_CASE("row space membership and coordinates") {
  Mat<Rat> B = from_ints({{1, 0, 2}, {0, 1, 3}});
  auto piv = rref(B);
  std::vector<Rat> v = {Rat(2), Rat(-1), Rat(1)};
  std::vector<Rat> coords;
  CHECK(reduce_against_rref(B, piv, v, &coords));
  CHECK(coords[0] == Rat(2));
  CHECK(coords[1] == Rat(-1));
  std::vector<Rat> w = {Rat(0), Rat(0), Rat(1)};
  CHECK_FALSE(reduce_against_rref(B, piv, w, (std::vector<Rat>*)nullptr));
}

TEST_CASE("rows vanishing on prescribed columns") {
  Mat<Rat> B = from_ints({{1, 0, 1}, {0, 1, 1}});
  Mat<Rat> Z = rows_vanishing_on(B, {2});
  REQUIRE(Z.rows == 1);
  CHECK(Z.at(0, 2).is_zero());
  CHECK(Z.at(0, 0) == Rat(1));
  CHECK(Z.at(0, 1) == -Rat(1));
}

TEST_CASE("REF pivot-block counting equals stratified kernel dims") {
  // random matrices: #pivots in a column suffix == dim of sections
  // vanishing on the complementary prefix
  std::mt19937 rng(999);
  for (int trial = 0; trial < 40; trial++) {
    int r = 2 + (int)(rng() % 6), c = 3 + (int)(rng() % 6);
    Mat<Rat> A(r, c);
    for (int i = 0; i < r; i++)
      for (int j = 0; j < c; j++) A.at(i, j) = Rat((long)(rng() % 5) - 2);
    auto piv = ref_pivots(A);
    for (int cut = 0; cut <= c; cut++) {
      std::vector<int> kill;
      for (int j = 0; j < cut; j++) kill.push_back(j);
      int dim_vanish = rows_vanishing_on(row_basis(A), kill).rows;
      int pivots_after = 0;
      for (int p : piv)
        if (p >= cut) pivots_after++;
      CHECK(dim_vanish == pivots_after);
    }
  }
}

TEST_CASE("Fp elimination") {
  Fp::set_modulus(5);
  Mat<Fp> A(2, 3);
  A.at(0, 0) = Fp(2);
  A.at(0, 1) = Fp(4);
  A.at(0, 2) = Fp(1);
  A.at(1, 0) = Fp(4);
  A.at(1, 1) = Fp(3);
  A.at(1, 2) = Fp(3);  // not a multiple of the first row mod 5
  CHECK(rank_of(A) == 2);
  Mat<Fp> B(2, 2);
  B.at(0, 0) = Fp(2);
  B.at(0, 1) = Fp(3);
  B.at(1, 0) = Fp(4);
  B.at(1, 1) = Fp(6);  // = Fp(1), proportional row
  CHECK(rank_of(B) == 1);
  CHECK((Fp(2) / Fp(3)) * Fp(3) == Fp(2));
}
