#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace homalg {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

namespace bits {

inline bool test(std::span<const Word> w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1u;
}
inline void set(std::span<Word> w, std::size_t i) { w[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> w, std::size_t i) {
  w[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t count(std::span<const Word> w) {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline bool any(std::span<const Word> w) {
  for (Word x : w)
    if (x) return true;
  return false;
}

/// dst = a & b; returns whether the result is non-empty.
inline bool assign_and(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  Word acc = 0;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = a[i] & b[i];
    acc |= dst[i];
  }
  return acc != 0;
}

inline bool and_into(std::span<Word> dst, std::span<const Word> src) {
  Word acc = 0;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] &= src[i];
    acc |= dst[i];
  }
  return acc != 0;
}

/// Sets bits [0, n).
inline void fill(std::span<Word> w, std::size_t n) {
  for (auto& x : w) x = 0;
  for (std::size_t i = 0; i < n / kWordBits; ++i) w[i] = ~Word{0};
  if (n % kWordBits) w[n / kWordBits] = (Word{1} << (n % kWordBits)) - 1;
}

template <class F>
void for_each(std::span<const Word> w, F&& f) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word x = w[i];
    while (x) {
      const auto b = static_cast<std::size_t>(std::countr_zero(x));
      f(i * kWordBits + b);
      x &= x - 1;
    }
  }
}

inline std::vector<std::size_t> to_indices(std::span<const Word> w) {
  std::vector<std::size_t> out;
  for_each(w, [&](std::size_t i) { out.push_back(i); });
  return out;
}

}  // namespace bits
}  // namespace homalg
