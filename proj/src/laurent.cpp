#include "ssb/laurent.hpp"

#include <sstream>

#include "ssb/errors.hpp"

namespace ssb {

Laurent Laurent::v_pow(int k, Int coeff) {
  Laurent f;
  if (coeff != 0) f.c_[k] = std::move(coeff);
  return f;
}

int Laurent::lo() const {
  if (c_.empty()) throw InternalError("Laurent::lo of zero");
  return c_.begin()->first;
}

int Laurent::hi() const {
  if (c_.empty()) throw InternalError("Laurent::hi of zero");
  return c_.rbegin()->first;
}

Int Laurent::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Int(0) : it->second;
}

void Laurent::set(int k, const Int& val) {
  if (val == 0)
    c_.erase(k);
  else
    c_[k] = val;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, a] : o.c_) {
    auto it = c_.find(k);
    if (it == c_.end()) {
      c_[k] = a;
    } else {
      it->second += a;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, a] : o.c_) {
    auto it = c_.find(k);
    if (it == c_.end()) {
      c_[k] = -a;
    } else {
      it->second -= a;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [k, a] : c_) r.c_[k] = -a;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [k, a] : c_)
    for (const auto& [l, b] : o.c_) {
      Int& t = r.c_[k + l];
      t += a * b;
    }
  for (auto it = r.c_.begin(); it != r.c_.end();)
    it = (it->second == 0) ? r.c_.erase(it) : std::next(it);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [k, a] : c_) r.c_[-k] = a;
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r;
  for (const auto& [e, a] : c_) r.c_[e + k] = a;
  return r;
}

bool Laurent::nonneg_coeffs() const {
  for (const auto& [k, a] : c_)
    if (a < 0) return false;
  return true;
}

bool Laurent::supported_in(int lo_, int hi_) const {
  if (c_.empty()) return true;
  return lo() >= lo_ && hi() <= hi_;
}

std::string Laurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, a] : c_) {
    if (!first) os << (a > 0 ? " + " : " - ");
    Int abs_a = a > 0 ? a : Int(-a);
    if (first && a < 0) os << "-";
    first = false;
    if (abs_a != 1 || k == 0) os << abs_a.get_str();
    if (k != 0) {
      if (abs_a != 1) os << "*";
      os << "v";
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace ssb
