#pragma once

// Exact integer primitives shared by every module: checked 64-bit arithmetic,
// lattice vectors with their sign decomposition, canonical vector sets,
// integer matrices and saturated kernel lattices.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Int = std::int64_t;

enum class ErrorKind {
  Overflow,
  DimensionMismatch,
  InvalidArgument,
  NonPositiveLattice,
  NotLatticeMember,
  Parse,
};

/// Stable upper-case identifier for an error kind, e.g. "NON_POSITIVE_LATTICE".
std::string_view error_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace checked {

Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);
Int abs(Int a);
/// Floor division; throws on division by zero or overflow.
Int floor_div(Int a, Int b);

}  // namespace checked

Int gcd(Int a, Int b);

/// Integer vector u with u = u+ - u-.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : coords_(n, 0) {}
  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<Int> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Int> coords() const noexcept { return coords_; }
  std::span<Int> coords() noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  LatticeVector positive_part() const;
  LatticeVector negative_part() const;
  std::vector<std::size_t> support() const;

  bool is_zero() const noexcept;
  bool is_nonnegative() const noexcept;

  /// Representative of {u, -u} whose first nonzero coordinate is positive.
  LatticeVector canonical() const;

  Int norm1() const;
  Int norm_inf() const;
  /// gcd of the coordinates; 0 for the zero vector.
  Int content() const;

  LatticeVector operator-() const;
  LatticeVector scaled(Int factor) const;
  /// Exact division of every coordinate; throws InvalidArgument if not exact.
  LatticeVector divided(Int divisor) const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Int> coords_;
};

/// Space-separated coordinates, e.g. "1 -1 0".
std::string to_string(const LatticeVector& v);

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

/// g is below u in the conformal order: g+ <= u+ and g- <= u- componentwise.
bool conforms(const LatticeVector& g, const LatticeVector& u);

/// Sign-normalized, lexicographically sorted, duplicate-free set of vectors.
/// Zero vectors are dropped.
class VectorSet {
 public:
  VectorSet() = default;
  explicit VectorSet(std::vector<LatticeVector> vectors);

  std::size_t size() const noexcept { return vectors_.size(); }
  bool empty() const noexcept { return vectors_.empty(); }
  const LatticeVector& operator[](std::size_t i) const { return vectors_[i]; }
  auto begin() const noexcept { return vectors_.begin(); }
  auto end() const noexcept { return vectors_.end(); }
  const std::vector<LatticeVector>& vectors() const noexcept { return vectors_; }

  /// Membership up to sign.
  bool contains(const LatticeVector& v) const;
  bool is_subset_of(const VectorSet& other) const;

  /// Both signs of every element, in set order (v0, -v0, v1, -v1, ...).
  std::vector<LatticeVector> symmetric() const;

  friend bool operator==(const VectorSet&, const VectorSet&) = default;

 private:
  std::vector<LatticeVector> vectors_;
};

/// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<Int>> rows);
  /// Matrix whose j-th column is columns[j]; every column must have `rows` entries.
  static IntegerMatrix from_columns(std::size_t rows, const std::vector<LatticeVector>& columns);
  static IntegerMatrix identity(std::size_t n);
  /// [top; bottom]; column counts must agree.
  static IntegerMatrix stack(const IntegerMatrix& top, const IntegerMatrix& bottom);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const Int> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  LatticeVector row_vector(std::size_t i) const;
  LatticeVector column(std::size_t j) const;
  const std::vector<Int>& entries() const noexcept { return entries_; }

  /// A * v with overflow checking.
  LatticeVector apply(const LatticeVector& v) const;
  IntegerMatrix operator*(const IntegerMatrix& other) const;
  IntegerMatrix transposed() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// Sublattice of Z^n given by linearly independent generators.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  /// Generators are taken as given; they must be independent.
  LatticeBasis(std::size_t ambient_dimension, std::vector<LatticeVector> generators);

  /// Basis (in Hermite normal form) of the lattice generated by arbitrary vectors.
  static LatticeBasis spanned_by(std::size_t ambient_dimension, const std::vector<LatticeVector>& vectors);

  std::size_t ambient_dimension() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<LatticeVector>& generators() const noexcept { return generators_; }

 private:
  std::size_t ambient_ = 0;
  std::vector<LatticeVector> generators_;
};

/// Row Hermite normal form: nonzero rows only, pivots positive and strictly
/// increasing, entries above each pivot reduced into [0, pivot).
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

/// Saturated basis of ker_Z(A), in Hermite normal form.
LatticeBasis integer_kernel(const IntegerMatrix& a);

bool lattice_member(const LatticeVector& v, const LatticeBasis& basis);

/// Equal rank and mutual inclusion of generators.
bool same_lattice(const LatticeBasis& a, const LatticeBasis& b);

}  // namespace toric
