#include "flip/bitvec.hpp"

#include <algorithm>
#include <utility>

namespace flip {

BitVec BitVec::from_word(std::size_t size, word_type w) {
  BitVec v(size);
  if (size == 0) return v;
  if (size < kWordBits) w &= (word_type{1} << size) - 1;
  v.words_[0] = w;
  return v;
}

std::size_t BitVec::find_next(std::size_t from) const noexcept {
  if (from >= size_) return size_;
  std::size_t k = from / kWordBits;
  word_type w = words_[k] & (~word_type{0} << (from % kWordBits));
  while (true) {
    if (w) return std::min(size_, k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
    if (++k == words_.size()) return size_;
    w = words_[k];
  }
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = find_next(0); i < size_; i = find_next(i + 1)) out.push_back(i);
  return out;
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) noexcept {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Integer order with coordinate 0 as the least significant bit.
  for (std::size_t k = a.words_.size(); k-- > 0;)
    if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

std::optional<BitVec> BitVec::parse(std::string_view text) {
  BitVec v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      v.set(i);
    else if (text[i] != '0')
      return std::nullopt;
  }
  return v;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_columns(std::span<const BitVec> columns) {
  const std::size_t n = columns.size();
  BitMatrix m(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r : columns[c].ones()) m.set(r, c);
  return m;
}

BitVec BitMatrix::column(std::size_t c) const {
  BitVec v(size());
  for (std::size_t r = 0; r < size(); ++r)
    if (get(r, c)) v.set(r);
  return v;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(size());
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c : rows_[r].ones()) t.set(c, r);
  return t;
}

BitVec BitMatrix::operator*(const BitVec& v) const {
  BitVec out(size());
  for (std::size_t r = 0; r < size(); ++r)
    if (rows_[r].dot(v)) out.set(r);
  return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  BitMatrix out(size());
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t k : rows_[r].ones()) out.rows_[r] ^= rhs.rows_[k];
  return out;
}

std::size_t BitMatrix::rank() const {
  std::vector<BitVec> rows = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (rows[r].test(col)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
  const std::size_t n = size();
  std::vector<BitVec> a = rows_;
  BitMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !a[pivot].test(col)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(inv.rows_[col], inv.rows_[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && a[r].test(col)) {
        a[r] ^= a[col];
        inv.rows_[r] ^= inv.rows_[col];
      }
    }
  }
  return inv;
}

}  // namespace flip
