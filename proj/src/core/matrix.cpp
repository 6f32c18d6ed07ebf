#include "toric/core.hpp"

namespace toric {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix of shape " + std::to_string(rows_) + "x" +
                                                  std::to_string(cols_) + " given " +
                                                  std::to_string(entries_.size()) + " entries");
  }
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Int> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return IntegerMatrix(rows.size(), cols, std::move(entries));
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<Int>> rows) {
  std::vector<std::vector<Int>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

IntegerMatrix IntegerMatrix::from_columns(std::size_t rows, const std::vector<LatticeVector>& columns) {
  IntegerMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::stack(const IntegerMatrix& top, const IntegerMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "cannot stack matrices with " + std::to_string(top.cols()) + " and " +
                                                  std::to_string(bottom.cols()) + " columns");
  }
  std::vector<Int> entries = top.entries_;
  entries.insert(entries.end(), bottom.entries_.begin(), bottom.entries_.end());
  return IntegerMatrix(top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

LatticeVector IntegerMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return LatticeVector(std::vector<Int>(r.begin(), r.end()));
}

LatticeVector IntegerMatrix::column(std::size_t j) const {
  LatticeVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

LatticeVector IntegerMatrix::apply(const LatticeVector& v) const {
  if (v.size() != cols_) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " against " + std::to_string(cols_) + " columns");
  }
  LatticeVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s = checked::add(s, checked::mul((*this)(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) = checked::add(out(i, j), checked::mul(a, other(k, j)));
    }
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

}  // namespace toric
