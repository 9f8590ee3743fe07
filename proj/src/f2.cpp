#include "spinext/f2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "spinext/errors.hpp"

namespace spinext {

namespace {

std::size_t word_count(std::size_t dim) {
  return (dim + F2Vec::kWordBits - 1) / F2Vec::kWordBits;
}

void require_same_dim(const F2Vec& u, const F2Vec& v, const char* op) {
  if (u.dim() != v.dim()) {
    throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(u.dim()) +
                            " and " + std::to_string(v.dim()));
  }
}

}  // namespace

F2Vec::F2Vec(std::size_t dim) : dim_(dim), words_(word_count(dim), 0) {}

F2Vec F2Vec::from_string(std::string_view bits) {
  F2Vec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw ParseError("bit string may contain only '0' and '1': \"" + std::string(bits) + "\"");
    }
  }
  return v;
}

F2Vec F2Vec::unit(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidArgument("unit vector index out of range");
  F2Vec v(dim);
  v.set(index, true);
  return v;
}

F2Vec F2Vec::from_word(std::size_t dim, Word word) {
  if (dim > kWordBits) throw InvalidArgument("from_word: dim exceeds one word");
  F2Vec v(dim);
  if (dim > 0) {
    v.words_[0] = dim == kWordBits ? word : word & ((Word{1} << dim) - 1);
  }
  return v;
}

bool F2Vec::get(std::size_t i) const {
  if (i >= dim_) throw InvalidArgument("bit index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void F2Vec::set(std::size_t i, bool value) {
  if (i >= dim_) throw InvalidArgument("bit index out of range");
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void F2Vec::flip(std::size_t i) {
  if (i >= dim_) throw InvalidArgument("bit index out of range");
  words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

bool F2Vec::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t F2Vec::popcount() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t F2Vec::lowest_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return dim_;
}

std::string F2Vec::to_string() const {
  std::string out(dim_, '0');
  for (std::size_t i = 0; i < dim_; ++i) {
    if ((words_[i / kWordBits] >> (i % kWordBits)) & 1u) out[i] = '1';
  }
  return out;
}

F2Vec& F2Vec::operator^=(const F2Vec& other) {
  require_same_dim(*this, other, "vec_add");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

bool operator<(const F2Vec& lhs, const F2Vec& rhs) {
  if (lhs.dim_ != rhs.dim_) return lhs.dim_ < rhs.dim_;
  for (std::size_t k = 0; k < lhs.words_.size(); ++k) {
    const F2Vec::Word diff = lhs.words_[k] ^ rhs.words_[k];
    if (diff != 0) {
      // First differing index; the side holding 0 there sorts first.
      const F2Vec::Word low = diff & (~diff + 1);
      return (lhs.words_[k] & low) == 0;
    }
  }
  return false;
}

F2Vec vec_add(const F2Vec& u, const F2Vec& v) { return u + v; }

bool dot(const F2Vec& u, const F2Vec& v) {
  require_same_dim(u, v, "dot");
  F2Vec::Word acc = 0;
  const auto uw = u.words();
  const auto vw = v.words();
  for (std::size_t k = 0; k < uw.size(); ++k) acc ^= uw[k] & vw[k];
  return std::popcount(acc) & 1;
}

F2Mat::F2Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, F2Vec(cols)) {}

F2Mat F2Mat::identity(std::size_t n) {
  F2Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Mat F2Mat::from_strings(std::span<const std::string> rows) {
  std::vector<F2Vec> data;
  data.reserve(rows.size());
  for (const auto& r : rows) data.push_back(F2Vec::from_string(r));
  return from_rows(std::move(data));
}

F2Mat F2Mat::from_rows(std::vector<F2Vec> rows) {
  F2Mat m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().dim();
  for (const auto& r : rows) {
    if (r.dim() != m.cols_) throw DimensionMismatch("matrix rows must have equal length");
  }
  m.data_ = std::move(rows);
  return m;
}

F2Mat F2Mat::from_columns(std::span<const F2Vec> columns) {
  const std::size_t n = columns.empty() ? 0 : columns.front().dim();
  F2Mat m(n, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != n) throw DimensionMismatch("matrix columns must have equal length");
    for (std::size_t r = 0; r < n; ++r) {
      if (columns[c].get(r)) m.set(r, c, true);
    }
  }
  return m;
}

F2Vec F2Mat::column(std::size_t c) const {
  if (c >= cols_) throw InvalidArgument("column index out of range");
  F2Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].get(c)) v.set(r, true);
  }
  return v;
}

F2Mat F2Mat::transpose() const {
  F2Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

std::size_t F2Mat::rank() const {
  std::vector<F2Vec> work = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && !work[pivot].get(c)) ++pivot;
    if (pivot == rows_) continue;
    std::swap(work[rank], work[pivot]);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (work[r].get(c)) work[r] ^= work[rank];
    }
    ++rank;
  }
  return rank;
}

bool F2Mat::is_identity() const { return is_square() && *this == identity(rows_); }

std::vector<std::string> F2Mat::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (const auto& r : data_) out.push_back(r.to_string());
  return out;
}

bool operator<(const F2Mat& lhs, const F2Mat& rhs) {
  if (lhs.rows_ != rhs.rows_) return lhs.rows_ < rhs.rows_;
  if (lhs.cols_ != rhs.cols_) return lhs.cols_ < rhs.cols_;
  return std::lexicographical_compare(lhs.data_.begin(), lhs.data_.end(), rhs.data_.begin(),
                                      rhs.data_.end());
}

F2Vec mat_vec(const F2Mat& m, const F2Vec& v) {
  if (m.cols() != v.dim()) throw DimensionMismatch("mat_vec: matrix cols != vector dim");
  F2Vec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (dot(m.row(r), v)) out.set(r, true);
  }
  return out;
}

F2Mat mat_mul(const F2Mat& a, const F2Mat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
  // Row r of AB is the XOR of the rows of B selected by row r of A.
  std::vector<F2Vec> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    F2Vec acc(b.cols());
    const F2Vec& sel = a.row(r);
    for (std::size_t k = sel.lowest_set(); k < sel.dim(); ++k) {
      if (sel.get(k)) acc ^= b.row(k);
    }
    rows.push_back(std::move(acc));
  }
  F2Mat out = F2Mat::from_rows(std::move(rows));
  if (a.rows() == 0) out = F2Mat(0, b.cols());
  return out;
}

F2Mat mat_inverse(const F2Mat& m) {
  if (!m.is_square()) throw DimensionMismatch("mat_inverse: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<F2Vec> left;
  std::vector<F2Vec> right;
  for (std::size_t r = 0; r < n; ++r) {
    left.push_back(m.row(r));
    right.push_back(F2Vec::unit(n, r));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && !left[pivot].get(c)) ++pivot;
    if (pivot == n) throw SingularMatrix("mat_inverse: matrix is singular");
    std::swap(left[c], left[pivot]);
    std::swap(right[c], right[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && left[r].get(c)) {
        left[r] ^= left[c];
        right[r] ^= right[c];
      }
    }
  }
  return F2Mat::from_rows(std::move(right));
}

}  // namespace spinext

std::size_t std::hash<spinext::F2Vec>::operator()(const spinext::F2Vec& v) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(v.dim());
  for (auto w : v.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
