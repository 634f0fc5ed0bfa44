#include "cbn/bool_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cbn {

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

bool BoolMatrix::row_empty(std::size_t i) const {
  for (std::size_t w = 0; w < words_; ++w) {
    if (bits_[i * words_ + w] != 0) return false;
  }
  return true;
}

std::string BoolMatrix::to_text() const {
  std::string out;
  out.reserve(n_ * (n_ + 1));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out.push_back(get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BoolMatrix BoolMatrix::from_text(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  BoolMatrix m(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != lines.size()) {
      throw std::invalid_argument("matrix text is not square");
    }
    for (std::size_t j = 0; j < lines[i].size(); ++j) {
      char c = lines[i][j];
      if (c != '0' && c != '1') {
        throw std::invalid_argument("matrix text contains non-binary digit");
      }
      if (c == '1') m.set(i, j);
    }
  }
  return m;
}

BoolMatrix otimes(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("otimes: dimension mismatch");
  }
  const std::size_t n = a.size();
  const std::size_t words = a.words_;
  BoolMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t* dst = out.bits_.data() + i * words;
    for (std::size_t k = 0; k < n; ++k) {
      if (!a.get(i, k)) continue;
      const std::uint64_t* src = b.bits_.data() + k * words;
      for (std::size_t w = 0; w < words; ++w) dst[w] |= src[w];
    }
  }
  return out;
}

BoolMatrix matrix_power(const BoolMatrix& a, std::uint64_t s) {
  if (s == 0) throw std::invalid_argument("matrix_power: exponent must be >= 1");
  BoolMatrix base = a;
  BoolMatrix result;
  bool have_result = false;
  while (s > 0) {
    if (s & 1) {
      result = have_result ? otimes(result, base) : base;
      have_result = true;
    }
    s >>= 1;
    if (s > 0) base = otimes(base, base);
  }
  return result;
}

namespace {

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    // FNV-1a over the packed words.
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : v) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::uint64_t> encode(const BoolMatrix& m) {
  std::vector<std::uint64_t> key;
  key.reserve(m.size() * ((m.size() + 63) / 64));
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto r = m.row(i);
    key.insert(key.end(), r.begin(), r.end());
  }
  return key;
}

}  // namespace

PowerTrajectory power_trajectory(const BoolMatrix& a) {
  // The sequence A, A^2, ... lives in a finite set, so it must repeat; the
  // first collision A^{k+c} = A^k yields the minimal transient and period.
  std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, WordsHash> seen;
  BoolMatrix power = a;
  std::uint64_t index = 1;
  while (true) {
    auto [it, inserted] = seen.emplace(encode(power), index);
    if (!inserted) {
      PowerTrajectory t;
      t.transient = it->second;
      t.period = index - it->second;
      t.witness = matrix_power(a, t.transient);
      return t;
    }
    power = otimes(power, a);
    ++index;
  }
}

}  // namespace cbn
