#pragma once

// Dense linear algebra over the two-element field.
//
// Vectors are packed little-endian: bit i lives in word i / 64 at position
// i % 64. Bits past dim() are always zero, so word-wise comparison and
// popcount are exact.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace spinext {

class F2Vec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  F2Vec() = default;
  explicit F2Vec(std::size_t dim);

  /// Parses a '0'/'1' string, index 0 leftmost. Throws ParseError.
  static F2Vec from_string(std::string_view bits);
  /// Unit vector e_index.
  static F2Vec unit(std::size_t dim, std::size_t index);
  /// Low `dim` bits of `word` (dim <= 64).
  static F2Vec from_word(std::size_t dim, Word word);

  std::size_t dim() const { return dim_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  bool is_zero() const;
  std::size_t popcount() const;
  /// Index of the lowest set bit, or dim() if zero.
  std::size_t lowest_set() const;

  std::span<const Word> words() const { return {words_.data(), words_.size()}; }
  /// First word; the whole vector when dim() <= 64.
  Word low_word() const { return words_.empty() ? 0 : words_[0]; }

  std::string to_string() const;

  F2Vec& operator^=(const F2Vec& other);
  friend F2Vec operator+(F2Vec lhs, const F2Vec& rhs) { return lhs ^= rhs; }
  friend bool operator==(const F2Vec&, const F2Vec&) = default;

  /// Lexicographic on the bit-string text form (index 0 most significant).
  friend bool operator<(const F2Vec& lhs, const F2Vec& rhs);

 private:
  std::size_t dim_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

F2Vec vec_add(const F2Vec& u, const F2Vec& v);
bool dot(const F2Vec& u, const F2Vec& v);

class F2Mat {
 public:
  F2Mat() = default;
  F2Mat(std::size_t rows, std::size_t cols);

  static F2Mat identity(std::size_t n);
  /// Builds a matrix from row bit-strings. An empty list gives a 0x0 matrix.
  static F2Mat from_strings(std::span<const std::string> rows);
  static F2Mat from_rows(std::vector<F2Vec> rows);
  /// Matrix whose k-th column is columns[k]; all columns must share a dim.
  static F2Mat from_columns(std::span<const F2Vec> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value) { data_[r].set(c, value); }
  const F2Vec& row(std::size_t r) const { return data_[r]; }
  F2Vec column(std::size_t c) const;

  F2Mat transpose() const;
  std::size_t rank() const;
  bool is_identity() const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const F2Mat&, const F2Mat&) = default;
  friend bool operator<(const F2Mat& lhs, const F2Mat& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F2Vec> data_;
};

F2Vec mat_vec(const F2Mat& m, const F2Vec& v);
F2Mat mat_mul(const F2Mat& a, const F2Mat& b);
/// Gauss-Jordan inverse. Throws SingularMatrix.
F2Mat mat_inverse(const F2Mat& m);

}  // namespace spinext

template <>
struct std::hash<spinext::F2Vec> {
  std::size_t operator()(const spinext::F2Vec& v) const noexcept;
};
