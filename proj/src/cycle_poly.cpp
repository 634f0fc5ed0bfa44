#include "cbn/cycle_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cbn {

namespace mp = boost::multiprecision;

CyclePolynomial CyclePolynomial::term(Int length, Int count) {
  if (length <= 0) {
    throw std::invalid_argument("cycle length must be positive");
  }
  CyclePolynomial p;
  if (count != 0) {
    p.terms_.emplace(std::move(length), std::move(count));
  }
  return p;
}

Int CyclePolynomial::coefficient(const Int& length) const {
  auto it = terms_.find(length);
  return it == terms_.end() ? Int(0) : it->second;
}

bool CyclePolynomial::is_nonnegative() const {
  for (const auto& [len, count] : terms_) {
    if (count < 0) return false;
  }
  return true;
}

CyclePolynomial& CyclePolynomial::operator+=(const CyclePolynomial& rhs) {
  for (const auto& [len, count] : rhs.terms_) {
    Int& c = terms_[len];
    c += count;
    if (c == 0) terms_.erase(len);
  }
  return *this;
}

CyclePolynomial& CyclePolynomial::operator-=(const CyclePolynomial& rhs) {
  for (const auto& [len, count] : rhs.terms_) {
    Int& c = terms_[len];
    c -= count;
    if (c == 0) terms_.erase(len);
  }
  return *this;
}

CyclePolynomial operator*(const CyclePolynomial& a, const CyclePolynomial& b) {
  CyclePolynomial out;
  for (const auto& [s, cs] : a.terms_) {
    for (const auto& [t, ct] : b.terms_) {
      Int g = mp::gcd(s, t);
      Int l = (s / g) * t;
      Int& c = out.terms_[l];
      c += g * cs * ct;
      if (c == 0) out.terms_.erase(l);
    }
  }
  return out;
}

CyclePolynomial& CyclePolynomial::operator*=(const CyclePolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

CyclePolynomial& CyclePolynomial::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [len, count] : terms_) count *= scalar;
  return *this;
}

Int CyclePolynomial::total_cycles() const {
  Int sum = 0;
  for (const auto& [len, count] : terms_) sum += count;
  return sum;
}

Int CyclePolynomial::total_states() const {
  Int sum = 0;
  for (const auto& [len, count] : terms_) sum += len * count;
  return sum;
}

Int CyclePolynomial::period() const {
  Int p = 1;
  for (const auto& [len, count] : terms_) p = mp::lcm(p, len);
  return p;
}

std::string CyclePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [len, count] : terms_) {
    if (!first) os << " + ";
    os << count << "*C" << len;
    first = false;
  }
  return os.str();
}

bool leq_componentwise(const CyclePolynomial& a, const CyclePolynomial& b) {
  for (const auto& [len, count] : a.terms()) {
    if (count > b.coefficient(len)) return false;
  }
  for (const auto& [len, count] : b.terms()) {
    if (a.coefficient(len) > count) return false;
  }
  return true;
}

}  // namespace cbn
