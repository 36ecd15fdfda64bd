#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace ssb {

using Int = mpz_class;

// Laurent polynomial in v with arbitrary-precision integer coefficients.
// The carrier for graded ranks and all Hecke coefficients.  Zero
// coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long n) { if (n != 0) c_[0] = n; }
  explicit Laurent(const Int& n) { if (n != 0) c_[0] = n; }
  static Laurent v_pow(int k, Int coeff = 1);

  bool is_zero() const { return c_.empty(); }
  int lo() const;  // smallest exponent (requires nonzero)
  int hi() const;  // largest exponent (requires nonzero)
  Int coeff(int k) const;
  Int constant_term() const { return coeff(0); }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o);

  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return c_ != o.c_; }

  Laurent bar() const;              // v -> v^{-1}
  Laurent shifted(int k) const;     // * v^k
  bool nonneg_coeffs() const;
  bool supported_in(int lo, int hi) const;  // all exponents in [lo,hi]

  const std::map<int, Int>& terms() const { return c_; }
  void set(int k, const Int& val);

  std::string str() const;  // human-readable, canonical ascending order

 private:
  std::map<int, Int> c_;
};

inline Laurent operator*(const Int& a, const Laurent& f) {
  return Laurent(a) * f;
}

}  // namespace ssb
