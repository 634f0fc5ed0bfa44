#include "cbn/cycle_formulas.hpp"

#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

namespace cbn {

namespace {

// Beyond this, 2^m no longer fits in memory comfortably; the exact
// structure of such a component is out of desk scale anyway.
constexpr std::uint64_t kMaxExactLoopNumber = 1u << 20;

std::uint64_t to_small(const Int& v, const char* what) {
  if (v < 0 || v > Int(kMaxExactLoopNumber)) {
    throw CapError(std::string(what) + " too large for exact counting");
  }
  return v.convert_to<std::uint64_t>();
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t m) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

}  // namespace

Int count_periodic_states(const Int& m) {
  if (m < 1) throw std::invalid_argument("count_periodic: m must be >= 1");
  if (m == 1) return 2;
  std::uint64_t mv = to_small(m, "cycle length");
  auto primes = distinct_primes(mv);
  const std::size_t r = primes.size();
  Int total = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << r); ++sub) {
    std::uint64_t divisor = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if ((sub >> i) & 1) divisor *= primes[i];
    }
    Int power = Int(1) << static_cast<unsigned>(mv / divisor);
    if (std::popcount(sub) % 2 == 0) {
      total += power;
    } else {
      total -= power;
    }
  }
  return total;
}

PeriodicPointCount count_periodic(const Int& m, const Int& c) {
  if (m < 1 || c < 1) {
    throw std::invalid_argument("count_periodic: m and c must be >= 1");
  }
  if (c % m != 0) {
    throw std::invalid_argument("count_periodic: m does not divide c");
  }
  Int count = count_periodic_states(m);
  if (count % m != 0) {
    throw std::logic_error("periodic point count not divisible by the period");
  }
  return {m, count};
}

CyclePolynomial scc_cycle_structure(const Int& c) {
  if (c == 0) {
    throw TrivialComponentError(
        "cycle structure undefined for a trivial component (loop number 0)");
  }
  if (c < 0) throw std::invalid_argument("loop number must be non-negative");
  std::uint64_t cv = to_small(c, "loop number");
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t m = 1; m * m <= cv; ++m) {
    if (cv % m != 0) continue;
    divisors.push_back(m);
    if (m != cv / m) divisors.push_back(cv / m);
  }
  CyclePolynomial out;
  for (std::uint64_t d : divisors) {
    Int a = count_periodic_states(Int(d));
    out += CyclePolynomial::term(Int(d), a / d);
  }
  return out;
}

std::vector<CyclePolynomial> component_structures(const SccDecomposition& d) {
  std::vector<CyclePolynomial> out;
  out.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.loop_numbers[i] == 0) {
      throw TrivialComponentError(
          "component " + std::to_string(i + 1) +
          " is trivial (single vertex, no self-loop); bound formulas "
          "require every component to carry a cycle");
    }
    out.push_back(scc_cycle_structure(Int(d.loop_numbers[i])));
  }
  return out;
}

CyclePolynomial disjoint_union_structure(
    const std::vector<CyclePolynomial>& structures) {
  CyclePolynomial out = CyclePolynomial::one();
  for (const auto& s : structures) out *= s;
  return out;
}

namespace {

std::vector<std::uint64_t> comparability_masks(const CondensationPoset& p) {
  std::vector<std::uint64_t> mask(p.size, 0);
  for (std::size_t i = 0; i < p.size; ++i) {
    for (std::size_t j = 0; j < p.size; ++j) {
      if (p.comparable(static_cast<int>(i), static_cast<int>(j))) {
        mask[i] |= std::uint64_t(1) << j;
      }
    }
  }
  return mask;
}

void require_cap(const CondensationPoset& p, std::size_t cap,
                 const char* what) {
  if (p.size > cap) {
    throw CapError(std::string(what) + ": too many components (" +
                   std::to_string(p.size) + " > cap " + std::to_string(cap) +
                   ")");
  }
}

}  // namespace

CyclePolynomial lower_bound(const CondensationPoset& p,
                            const std::vector<CyclePolynomial>& structures,
                            std::size_t cap) {
  require_cap(p, cap, "lower_bound");
  if (structures.size() != p.size) {
    throw std::invalid_argument("lower_bound: one structure per component");
  }
  const std::size_t t = p.size;
  const auto comparable = comparability_masks(p);
  std::vector<CyclePolynomial> reduced;
  reduced.reserve(t);
  for (const auto& s : structures) {
    reduced.push_back(s - CyclePolynomial::one());
  }

  CyclePolynomial total;
  std::function<void(std::size_t, std::uint64_t, const CyclePolynomial&)> walk =
      [&](std::size_t start, std::uint64_t chosen, const CyclePolynomial& prod) {
        total += prod;
        for (std::size_t j = start; j < t; ++j) {
          if ((comparable[j] & chosen) == 0) {
            walk(j + 1, chosen | (std::uint64_t(1) << j), prod * reduced[j]);
          }
        }
      };
  walk(0, 0, CyclePolynomial::one());

  if (!total.is_nonnegative()) {
    throw std::logic_error("lower_bound produced a negative coefficient");
  }
  return total;
}

Int fixed_point_count(const CondensationPoset& p, std::size_t cap) {
  require_cap(p, cap, "fixed_point_count");
  const std::size_t t = p.size;
  const auto comparable = comparability_masks(p);
  Int count = 0;
  std::function<void(std::size_t, std::uint64_t)> walk =
      [&](std::size_t start, std::uint64_t chosen) {
        ++count;
        for (std::size_t j = start; j < t; ++j) {
          if ((comparable[j] & chosen) == 0) {
            walk(j + 1, chosen | (std::uint64_t(1) << j));
          }
        }
      };
  walk(0, 0);
  return count;
}

namespace {

// closure_by_set[S] = union of per-element closures over the bits of S.
std::vector<std::uint64_t> subset_closures(
    const std::vector<std::uint64_t>& single) {
  const std::size_t t = single.size();
  std::vector<std::uint64_t> closure(std::size_t(1) << t, 0);
  for (std::uint64_t s = 1; s < closure.size(); ++s) {
    std::uint64_t low = s & (~s + 1);
    closure[s] = closure[s & (s - 1)] | single[std::countr_zero(low)];
  }
  return closure;
}

// tally[K] = sum over pairs inner <= outer with closure(inner) u outer = K
// of (-1)^(|inner| + |outer|).
std::vector<long long> sign_tally(const std::vector<std::uint64_t>& closure_by_set,
                                  std::size_t t) {
  std::vector<long long> tally(std::size_t(1) << t, 0);
  const std::uint64_t full = (std::uint64_t(1) << t) - 1;
  for (std::uint64_t inner = 0; inner <= full; ++inner) {
    const std::uint64_t base = closure_by_set[inner];
    const int sign_inner = std::popcount(inner);
    const std::uint64_t space = full & ~inner;
    std::uint64_t rest = space;
    while (true) {
      const std::uint64_t outer = inner | rest;
      const std::uint64_t key = base | outer;
      tally[key] += ((sign_inner + std::popcount(outer)) % 2 == 0) ? 1 : -1;
      if (rest == 0) break;
      rest = (rest - 1) & space;
    }
  }
  return tally;
}

}  // namespace

CyclePolynomial upper_bound(const CondensationPoset& p,
                            const std::vector<CyclePolynomial>& structures,
                            std::size_t cap) {
  require_cap(p, cap, "upper_bound");
  if (structures.size() != p.size) {
    throw std::invalid_argument("upper_bound: one structure per component");
  }
  const std::size_t t = p.size;
  const std::uint64_t full = (std::uint64_t(1) << t) - 1;

  std::vector<std::uint64_t> down(t, 0), up(t, 0);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t k = 0; k < t; ++k) {
      if (p.leq[k][i]) down[i] |= std::uint64_t(1) << k;
      if (p.leq[i][k]) up[i] |= std::uint64_t(1) << k;
    }
  }
  const auto zero_tally = sign_tally(subset_closures(down), t);
  const auto one_tally = sign_tally(subset_closures(up), t);

  // Combine the zero-side and one-side masks; only disjoint pairs carry a
  // non-zero phi.
  std::vector<long long> coefficient(std::size_t(1) << t, 0);
  for (std::uint64_t k = 0; k <= full; ++k) {
    if (zero_tally[k] == 0) continue;
    const std::uint64_t space = full & ~k;
    std::uint64_t l = space;
    while (true) {
      if (one_tally[l] != 0) {
        coefficient[k | l] += zero_tally[k] * one_tally[l];
      }
      if (l == 0) break;
      l = (l - 1) & space;
    }
  }

  CyclePolynomial total;
  for (std::uint64_t used = 0; used <= full; ++used) {
    if (coefficient[used] == 0) continue;
    CyclePolynomial prod = CyclePolynomial::one();
    for (std::size_t j = 0; j < t; ++j) {
      if (!((used >> j) & 1)) prod *= structures[j];
    }
    total += prod * Int(coefficient[used]);
  }

  if (!total.is_nonnegative()) {
    throw std::logic_error("upper_bound produced a negative coefficient");
  }
  return total;
}

Int height_upper_bound(std::uint64_t n, const Int& c, bool strongly_connected) {
  if (n == 0) throw std::invalid_argument("height_upper_bound: n must be >= 1");
  const Int nn = Int(n) * n;
  if (!strongly_connected) {
    return 2 * nn - 3 * Int(n) + 2;
  }
  if (c < 1) {
    throw std::invalid_argument(
        "height_upper_bound: loop number must be >= 1 for a strongly "
        "connected graph");
  }
  if (c == 1) {
    return (Int(n) - 1) * (Int(n) - 1) + 1;
  }
  // floor((c(n^2-1) + 2n^2 - 6nc + 4c^2) / (2c)), then max with n-1. Heights
  // are integers, so flooring keeps the bound valid.
  Int numerator = c * (nn - 1) + 2 * nn - 6 * Int(n) * c + 4 * c * c;
  Int denominator = 2 * c;
  Int q = numerator / denominator;
  if (numerator % denominator != 0 && numerator < 0) q -= 1;
  Int floor_term = q;
  Int alt = Int(n) - 1;
  return floor_term > alt ? floor_term : alt;
}

}  // namespace cbn
