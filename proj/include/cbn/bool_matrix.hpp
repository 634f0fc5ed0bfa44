#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cbn {

// Square Boolean matrix under the (OR, AND) semiring. Rows are packed into
// 64-bit words so the semiring product reduces to word-wise ORs.
//
// For a conjunctive/disjunctive network the convention is the variable
// matrix: entry (i, j) = 1 iff x_{j+1} is an input of node i+1. In graph
// terms entry (i, j) encodes the dependency edge j -> i.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n)
      : n_(n), words_(n == 0 ? 0 : (n + 63) / 64), bits_(n_ * words_, 0) {}

  static BoolMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    std::uint64_t& w = bits_[i * words_ + j / 64];
    std::uint64_t mask = std::uint64_t(1) << (j % 64);
    if (value) {
      w |= mask;
    } else {
      w &= ~mask;
    }
  }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }

  bool row_empty(std::size_t i) const;

  bool operator==(const BoolMatrix&) const = default;

  // n lines of n characters '0'/'1', row-major.
  std::string to_text() const;
  static BoolMatrix from_text(const std::string& text);

 private:
  friend BoolMatrix otimes(const BoolMatrix& a, const BoolMatrix& b);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Semiring product: (a (x) b)[i][j] = OR_k (a[i][k] AND b[k][j]).
BoolMatrix otimes(const BoolMatrix& a, const BoolMatrix& b);

// s-fold semiring power by repeated squaring, s >= 1.
BoolMatrix matrix_power(const BoolMatrix& a, std::uint64_t s);

// Minimal (k, c), both >= 1, with A^{k+c} = A^k, plus the witness A^k.
// For the variable matrix of a network with no constant coordinate this is
// exactly (height, period) of the network.
struct PowerTrajectory {
  std::uint64_t transient = 0;
  std::uint64_t period = 0;
  BoolMatrix witness;
};

PowerTrajectory power_trajectory(const BoolMatrix& a);

}  // namespace cbn
