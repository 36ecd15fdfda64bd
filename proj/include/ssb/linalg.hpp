#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "ssb/errors.hpp"
#include "ssb/field.hpp"

namespace ssb {

// Dense row-major matrix over an exact field scalar.
template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

  K& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const K& at(int r, int c) const { return a[(size_t)r * cols + c]; }
  void append_row(const std::vector<K>& v) {
    a.insert(a.end(), v.begin(), v.end());
    rows++;
  }
  std::vector<K> row(int r) const {
    return std::vector<K>(a.begin() + (size_t)r * cols,
                          a.begin() + (size_t)(r + 1) * cols);
  }
};

// Canonical reduced row echelon form in place; returns pivot columns.
// Deterministic: first nonzero pivot in column order, leading ones,
// full back-substitution.
template <class K>
std::vector<int> rref(Mat<K>& A) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; c++) {
    int pr = -1;
    for (int i = r; i < A.rows; i++)
      if (!A.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < A.cols; j++) std::swap(A.at(pr, j), A.at(r, j));
    K inv = A.at(r, c).inv();
    for (int j = c; j < A.cols; j++) A.at(r, j) = A.at(r, j) * inv;
    for (int i = 0; i < A.rows; i++) {
      if (i == r || A.at(i, c).is_zero()) continue;
      K f = A.at(i, c);
      for (int j = c; j < A.cols; j++)
        A.at(i, j) = A.at(i, j) - f * A.at(r, j);
    }
    pivots.push_back(c);
    r++;
  }
  return pivots;
}

// Row-space basis: RREF rows with zero rows dropped.
template <class K>
Mat<K> row_basis(Mat<K> A) {
  std::vector<int> p = rref(A);
  Mat<K> B((int)p.size(), A.cols);
  for (int i = 0; i < (int)p.size(); i++)
    for (int j = 0; j < A.cols; j++) B.at(i, j) = A.at(i, j);
  return B;
}

namespace detail {

// Fraction-free one-step Bareiss row echelon with a fixed column order
// (row swaps only).  Generic over the integer type.
template <class I>
std::vector<int> bareiss_pivots(std::vector<I>& a, int rows, int cols) {
  std::vector<int> pivots;
  auto at = [&](int r, int c) -> I& { return a[(size_t)r * cols + c]; };
  I prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; c++) {
    int pr = -1;
    for (int i = r; i < rows; i++)
      if (at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols; j++) std::swap(at(pr, j), at(r, j));
    for (int i = r + 1; i < rows; i++) {
      for (int j = c + 1; j < cols; j++)
        at(i, j) = (at(r, c) * at(i, j) - at(i, c) * at(r, j)) / prev;
      at(i, c) = 0;
    }
    prev = at(r, c);
    pivots.push_back(c);
    r++;
  }
  return pivots;
}

struct Int64Overflow {};

// Checked int64: throws Int64Overflow instead of wrapping.
struct CheckedI64 {
  long long v = 0;
  CheckedI64() = default;
  CheckedI64(long long x) : v(x) {}
  CheckedI64 operator*(CheckedI64 o) const {
    long long r;
    if (__builtin_mul_overflow(v, o.v, &r)) throw Int64Overflow{};
    return r;
  }
  CheckedI64 operator-(CheckedI64 o) const {
    long long r;
    if (__builtin_sub_overflow(v, o.v, &r)) throw Int64Overflow{};
    return r;
  }
  CheckedI64 operator/(CheckedI64 o) const { return v / o.v; }
  bool operator!=(long long x) const { return v != x; }
  CheckedI64& operator=(long long x) {
    v = x;
    return *this;
  }
};

// Integer row image of a rational matrix: each row scaled by the lcm of
// its denominators.  Row scaling does not change pivots or rank.
bool to_scaled_int64(const Mat<Rat>& A, std::vector<long long>& out);
void to_scaled_mpz(const Mat<Rat>& A, std::vector<mpz_class>& out);

}  // namespace detail

// Pivot columns of a row echelon form with the natural column order.
// Works over the field; for Rat a fraction-free integer fast path is
// used (int64 first, GMP integers if entries overflow).
std::vector<int> ref_pivots(const Mat<Rat>& A);
std::vector<int> ref_pivots(const Mat<Fp>& A);

template <class K>
int rank_of(const Mat<K>& A) {
  return (int)ref_pivots(A).size();
}

// Right kernel basis (canonical w.r.t. the RREF of A): rows x of X with
// A x^T = 0 ... returned as a matrix whose rows span {x : A x = 0}.
template <class K>
Mat<K> kernel_basis(Mat<K> A) {
  std::vector<int> piv = rref(A);
  std::vector<bool> is_piv(A.cols, false);
  std::vector<int> piv_row(A.cols, -1);
  for (int i = 0; i < (int)piv.size(); i++) {
    is_piv[piv[i]] = true;
    piv_row[piv[i]] = i;
  }
  Mat<K> X(0, A.cols);
  for (int c = 0; c < A.cols; c++) {
    if (is_piv[c]) continue;
    std::vector<K> x(A.cols, K(0));
    x[c] = K(1);
    for (int j = 0; j < A.cols; j++)
      if (is_piv[j]) x[j] = -A.at(piv_row[j], c);
    X.append_row(x);
  }
  return X;
}

// Membership of v in the row space of an RREF matrix R; if coords is
// non-null and v lies in the row space, *coords receives the (unique)
// coefficients of v over the rows of R.
template <class K>
bool reduce_against_rref(const Mat<K>& R, const std::vector<int>& pivots,
                         std::vector<K> v, std::vector<K>* coords) {
  if (coords) coords->assign(R.rows, K(0));
  for (int i = 0; i < (int)pivots.size(); i++) {
    K f = v[pivots[i]];
    if (f.is_zero()) continue;
    if (coords) (*coords)[i] = f;
    for (int j = 0; j < R.cols; j++) v[j] -= f * R.at(i, j);
  }
  for (const K& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Basis of {x in rowspace(B) : x[c] = 0 for all c in kill}.
template <class K>
Mat<K> rows_vanishing_on(const Mat<K>& B, const std::vector<int>& kill) {
  // lambda . B restricted to the kill columns must vanish
  Mat<K> Kc((int)kill.size(), B.rows);
  for (int k = 0; k < (int)kill.size(); k++)
    for (int i = 0; i < B.rows; i++) Kc.at(k, i) = B.at(i, kill[k]);
  Mat<K> L = kernel_basis(Kc);  // rows: lambda with Kc lambda = 0
  Mat<K> out(L.rows, B.cols);
  for (int i = 0; i < L.rows; i++)
    for (int j = 0; j < B.cols; j++) {
      K s(0);
      for (int t = 0; t < B.rows; t++) s += L.at(i, t) * B.at(t, j);
      out.at(i, j) = s;
    }
  return row_basis(std::move(out));
}

template <class K>
bool same_row_space(const Mat<K>& A, const Mat<K>& B) {
  Mat<K> RA = A, RB = B;
  auto pa = rref(RA);
  auto pb = rref(RB);
  if (pa.size() != pb.size()) return false;
  for (int i = 0; i < B.rows; i++)
    if (!reduce_against_rref(RA, pa, B.row(i), (std::vector<K>*)nullptr))
      return false;
  return true;
}

}  // namespace ssb
