#include "toric/core.hpp"
#include "toric/simd.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace toric {

std::string_view error_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Overflow: return "INTEGER_OVERFLOW";
    case ErrorKind::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorKind::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorKind::NonPositiveLattice: return "NON_POSITIVE_LATTICE";
    case ErrorKind::NotLatticeMember: return "NOT_LATTICE_MEMBER";
    case ErrorKind::Parse: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

namespace checked {

namespace {
[[noreturn]] void overflow(const char* op) {
  throw Error(ErrorKind::Overflow, std::string("64-bit integer overflow in ") + op);
}
}  // namespace

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

Int neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) overflow("negation");
  return -a;
}

Int abs(Int a) { return a < 0 ? neg(a) : a; }

Int floor_div(Int a, Int b) {
  if (b == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (a == std::numeric_limits<Int>::min() && b == -1) overflow("division");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace checked

Int gcd(Int a, Int b) {
  a = checked::abs(a);
  b = checked::abs(b);
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

LatticeVector LatticeVector::positive_part() const {
  LatticeVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = coords_[i] > 0 ? coords_[i] : 0;
  return r;
}

LatticeVector LatticeVector::negative_part() const {
  LatticeVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = coords_[i] < 0 ? checked::neg(coords_[i]) : 0;
  return r;
}

std::vector<std::size_t> LatticeVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < size(); ++i)
    if (coords_[i] != 0) s.push_back(i);
  return s;
}

bool LatticeVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x == 0; });
}

bool LatticeVector::is_nonnegative() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x >= 0; });
}

LatticeVector LatticeVector::canonical() const {
  for (Int x : coords_) {
    if (x > 0) return *this;
    if (x < 0) return -*this;
  }
  return *this;
}

Int LatticeVector::norm1() const {
  Int s = 0;
  for (Int x : coords_) s = checked::add(s, checked::abs(x));
  return s;
}

Int LatticeVector::norm_inf() const {
  Int m = 0;
  for (Int x : coords_) m = std::max(m, checked::abs(x));
  return m;
}

Int LatticeVector::content() const {
  Int g = 0;
  for (Int x : coords_) g = gcd(g, x);
  return g;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked::neg(coords_[i]);
  return r;
}

LatticeVector LatticeVector::scaled(Int factor) const {
  LatticeVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked::mul(coords_[i], factor);
  return r;
}

LatticeVector LatticeVector::divided(Int divisor) const {
  if (divisor == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  LatticeVector r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (coords_[i] % divisor != 0) throw Error(ErrorKind::InvalidArgument, "inexact vector division");
    r[i] = coords_[i] / divisor;
  }
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  require_same_size(size(), other.size(), "vector addition");
  if (!simd::kernels().add(coords_, other.coords_, coords_))
    throw Error(ErrorKind::Overflow, "64-bit integer overflow in vector addition");
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  require_same_size(size(), other.size(), "vector subtraction");
  if (!simd::kernels().sub(coords_, other.coords_, coords_))
    throw Error(ErrorKind::Overflow, "64-bit integer overflow in vector subtraction");
  return *this;
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  return out.str();
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool conforms(const LatticeVector& g, const LatticeVector& u) {
  require_same_size(g.size(), u.size(), "conformal comparison");
  return simd::kernels().conforms(g.coords(), u.coords());
}

VectorSet::VectorSet(std::vector<LatticeVector> vectors) {
  vectors_.reserve(vectors.size());
  for (auto& v : vectors) {
    if (!vectors_.empty() && v.size() != vectors_.front().size())
      throw Error(ErrorKind::DimensionMismatch, "vector set elements have different lengths");
    if (!v.is_zero()) vectors_.push_back(v.canonical());
  }
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
}

bool VectorSet::contains(const LatticeVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v.canonical());
}

bool VectorSet::is_subset_of(const VectorSet& other) const {
  return std::includes(other.vectors_.begin(), other.vectors_.end(), vectors_.begin(), vectors_.end());
}

std::vector<LatticeVector> VectorSet::symmetric() const {
  std::vector<LatticeVector> out;
  out.reserve(2 * vectors_.size());
  for (const auto& v : vectors_) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

}  // namespace toric
