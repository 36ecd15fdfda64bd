#include "ssb/linalg.hpp"

namespace ssb {

namespace detail {

bool to_scaled_int64(const Mat<Rat>& A, std::vector<long long>& out) {
  out.assign((size_t)A.rows * A.cols, 0);
  for (int i = 0; i < A.rows; i++) {
    mpz_class l = 1;
    for (int j = 0; j < A.cols; j++) {
      const mpq_class& q = A.at(i, j).q;
      if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
    for (int j = 0; j < A.cols; j++) {
      mpz_class z = A.at(i, j).q.get_num() * (l / A.at(i, j).q.get_den());
      if (!z.fits_slong_p()) return false;
      out[(size_t)i * A.cols + j] = z.get_si();
    }
  }
  return true;
}

void to_scaled_mpz(const Mat<Rat>& A, std::vector<mpz_class>& out) {
  out.assign((size_t)A.rows * A.cols, mpz_class(0));
  for (int i = 0; i < A.rows; i++) {
    mpz_class l = 1;
    for (int j = 0; j < A.cols; j++) {
      const mpq_class& q = A.at(i, j).q;
      if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
    for (int j = 0; j < A.cols; j++)
      out[(size_t)i * A.cols + j] =
          A.at(i, j).q.get_num() * (l / A.at(i, j).q.get_den());
  }
}

}  // namespace detail

std::vector<int> ref_pivots(const Mat<Rat>& A) {
  std::vector<long long> ia;
  if (detail::to_scaled_int64(A, ia)) {
    std::vector<detail::CheckedI64> ca(ia.begin(), ia.end());
    try {
      return detail::bareiss_pivots(ca, A.rows, A.cols);
    } catch (const detail::Int64Overflow&) {
      // fall through to exact big-integer elimination
    }
  }
  std::vector<mpz_class> za;
  detail::to_scaled_mpz(A, za);
  return detail::bareiss_pivots(za, A.rows, A.cols);
}

std::vector<int> ref_pivots(const Mat<Fp>& A) {
  Mat<Fp> B = A;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < B.cols && r < B.rows; c++) {
    int pr = -1;
    for (int i = r; i < B.rows; i++)
      if (!B.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = c; j < B.cols; j++) std::swap(B.at(pr, j), B.at(r, j));
    Fp inv = B.at(r, c).inv();
    for (int i = r + 1; i < B.rows; i++) {
      if (B.at(i, c).is_zero()) continue;
      Fp f = B.at(i, c) * inv;
      for (int j = c; j < B.cols; j++) B.at(i, j) -= f * B.at(r, j);
    }
    pivots.push_back(c);
    r++;
  }
  return pivots;
}

}  // namespace ssb
