#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flip {

// Fixed-length vector over GF(2), packed 64 coordinates per word. Coordinate
// 0 lives in bit 0 of word 0. Unused high bits of the last word stay zero.
class BitVec {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  // Low `size` bits of `w` (size <= 64).
  static BitVec from_word(std::size_t size, word_type w);
  static BitVec unit(std::size_t size, std::size_t i) {
    BitVec v(size);
    v.set(i);
    return v;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept {
    const word_type bit = word_type{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= bit;
    else
      words_[i / kWordBits] &= ~bit;
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

  BitVec& operator^=(const BitVec& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
  }
  friend BitVec operator^(BitVec lhs, const BitVec& rhs) noexcept { return lhs ^= rhs; }

  BitVec& operator&=(const BitVec& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  friend BitVec operator&(BitVec lhs, const BitVec& rhs) noexcept { return lhs &= rhs; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (word_type w : words_)
      if (w) return false;
    return true;
  }

  // Standard dot product over GF(2).
  bool dot(const BitVec& other) const noexcept {
    word_type acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) & 1;
  }

  // Index of the lowest set coordinate at or after `from`, or size().
  std::size_t find_next(std::size_t from) const noexcept;
  std::vector<std::size_t> ones() const;

  // Packed value; requires size() <= 64.
  word_type word() const noexcept { return words_.empty() ? 0 : words_[0]; }
  std::span<const word_type> words() const noexcept { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) noexcept;

  // Bitstring, leftmost character = coordinate 0.
  std::string to_string() const;
  // Strict: only '0'/'1'; returns nullopt on any other character.
  static std::optional<BitVec> parse(std::string_view text);

 private:
  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

// Square matrix over GF(2) stored as rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : rows_(n, BitVec(n)) {}

  static BitMatrix identity(std::size_t n);
  // Matrix whose j-th column is columns[j].
  static BitMatrix from_columns(std::span<const BitVec> columns);

  std::size_t size() const noexcept { return rows_.size(); }
  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) noexcept { rows_[r].set(c, v); }
  const BitVec& row(std::size_t r) const noexcept { return rows_[r]; }
  BitVec column(std::size_t c) const;

  BitMatrix transpose() const;
  BitVec operator*(const BitVec& v) const;
  BitMatrix operator*(const BitMatrix& rhs) const;
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  std::size_t rank() const;
  // Gauss-Jordan inverse; nullopt when singular.
  std::optional<BitMatrix> inverse() const;

 private:
  std::vector<BitVec> rows_;
};

}  // namespace flip
