#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace cbn {

// All counts are arbitrary precision: the number of periodic points of
// period m grows like 2^m and overflows machine words quickly. Cycle
// lengths are arbitrary precision too, since the least common multiple of
// component loop numbers is unbounded in the node count.
using Int = boost::multiprecision::cpp_int;

// Generating function sum(a_m * C_m) counting limit cycles by length.
//
// Multiplication follows the product rule for the cycles of a product
// system: C_s * C_t = gcd(s,t) * C_{lcm(s,t)}, extended bilinearly. The
// multiplicative identity is 1*C_1 (a single fixed point).
//
// Coefficients may be negative inside inclusion-exclusion intermediates;
// user-facing results are non-negative.
class CyclePolynomial {
 public:
  CyclePolynomial() = default;

  static CyclePolynomial zero() { return CyclePolynomial(); }
  static CyclePolynomial one() { return term(1, 1); }
  static CyclePolynomial term(Int length, Int count);

  const std::map<Int, Int>& terms() const { return terms_; }
  Int coefficient(const Int& length) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_nonnegative() const;

  CyclePolynomial& operator+=(const CyclePolynomial& rhs);
  CyclePolynomial& operator-=(const CyclePolynomial& rhs);
  CyclePolynomial& operator*=(const CyclePolynomial& rhs);
  CyclePolynomial& operator*=(const Int& scalar);

  friend CyclePolynomial operator+(CyclePolynomial a, const CyclePolynomial& b) {
    return a += b;
  }
  friend CyclePolynomial operator-(CyclePolynomial a, const CyclePolynomial& b) {
    return a -= b;
  }
  friend CyclePolynomial operator*(const CyclePolynomial& a, const CyclePolynomial& b);
  friend CyclePolynomial operator*(CyclePolynomial a, const Int& s) { return a *= s; }

  bool operator==(const CyclePolynomial&) const = default;

  // Total number of limit cycles, sum over all lengths.
  Int total_cycles() const;
  // Total number of periodic states, sum of m * a_m.
  Int total_states() const;
  // lcm of all lengths with non-zero coefficient; 1 for the zero polynomial.
  Int period() const;

  // "4*C1 + 1*C2"; "0" when empty. Terms sorted by length.
  std::string to_string() const;

 private:
  std::map<Int, Int> terms_;  // length -> count, no explicit zeros
};

// a <= b coefficient by coefficient (missing coefficients are zero).
bool leq_componentwise(const CyclePolynomial& a, const CyclePolynomial& b);

}  // namespace cbn
