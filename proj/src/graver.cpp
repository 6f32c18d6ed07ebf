// Graver bases by project-and-lift completion.
//
// Coordinates are added one at a time. With S the Graver basis of the lattice
// projected onto the first j coordinates, lifted back to full lattice vectors,
// plus the echelon basis vector whose pivot is coordinate j (if any), every
// Graver element of the projection onto j+1 coordinates is a sum of elements
// of S that is conformal except possibly at coordinate j. Such a sum can be
// made conformal by completing only the pairs with opposite signs at j that
// are sign-compatible before j. Conformality is always measured on the active
// prefix, and the set is cut down to its minimal elements after each step.
//
// The working set is sign-symmetric; one representative of each ±pair is
// stored and reducers are tried with both signs.

#include "toric/graver.hpp"
#include "toric/simd.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>

namespace toric {

namespace {

int sign_slot(Int x) { return x > 0 ? 1 : (x < 0 ? 2 : 0); }

// Ternary trie on coordinate signs. Finding g with g ⊑ x only visits the
// branches whose sign pattern fits inside the one of x.
class SignTrie {
 public:
  explicit SignTrie(std::size_t depth) : depth_(depth) { nodes_.emplace_back(); }

  void insert(std::span<const Int> v, std::uint32_t id) {
    std::uint32_t node = 0;
    for (std::size_t k = 0; k < depth_; ++k) {
      const int s = sign_slot(v[k]);
      if (nodes_[node].child[s] == kNone) {
        nodes_[node].child[s] = static_cast<std::uint32_t>(nodes_.size());
        nodes_.emplace_back();
      }
      node = nodes_[node].child[s];
    }
    nodes_[node].items.push_back(id);
  }

  // First id (in DFS order) whose sign pattern fits x and for which accept(id) holds.
  template <class Accept>
  std::optional<std::uint32_t> find(std::span<const Int> x, Accept&& accept) const {
    stack_.clear();
    stack_.push_back({0, 0});
    while (!stack_.empty()) {
      const auto [node, depth] = stack_.back();
      stack_.pop_back();
      const Node& nd = nodes_[node];
      if (depth == depth_) {
        for (std::uint32_t id : nd.items)
          if (accept(id)) return id;
        continue;
      }
      const int s = sign_slot(x[depth]);
      if (s != 0 && nd.child[s] != kNone) stack_.push_back({nd.child[s], depth + 1});
      if (nd.child[0] != kNone) stack_.push_back({nd.child[0], depth + 1});
    }
    return std::nullopt;
  }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;
  struct Node {
    std::uint32_t child[3] = {kNone, kNone, kNone};
    std::vector<std::uint32_t> items;
  };
  struct Frame {
    std::uint32_t node;
    std::size_t depth;
  };
  std::size_t depth_;
  std::vector<Node> nodes_;
  mutable std::vector<Frame> stack_;
};

// Sign-symmetric set of full-length vectors stored as one representative per
// ±pair; ⊑ is taken on the first `active` coordinates.
class WorkingSet {
 public:
  WorkingSet(std::size_t n, std::size_t active) : n_(n), active_(active), trie_(active) {}

  std::size_t size() const noexcept { return count_; }
  std::size_t active() const noexcept { return active_; }
  std::span<const Int> at(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  void add(std::span<const Int> v) {
    data_.insert(data_.end(), v.begin(), v.end());
    const auto id = static_cast<std::uint32_t>(count_++);
    trie_.insert(v, id);
  }

  // Some stored ±g with ±g ⊑ x, other than `skip`; returns the reducer's id and sign.
  std::optional<std::pair<std::uint32_t, bool>> reducer(std::span<const Int> x, std::size_t skip = SIZE_MAX) const {
    const auto& k = simd::kernels();
    const auto head = x.first(active_);
    auto plus = trie_.find(head, [&](std::uint32_t id) { return id != skip && k.conforms(at(id).first(active_), head); });
    if (plus) return std::pair{*plus, true};
    // -g ⊑ x exactly when g ⊑ -x
    negated_.assign(head.begin(), head.end());
    for (Int& c : negated_) c = -c;
    auto minus = trie_.find(negated_, [&](std::uint32_t id) { return id != skip && k.conforms(at(id).first(active_), negated_); });
    if (minus) return std::pair{*minus, false};
    return std::nullopt;
  }

  // Conformal normal form of x, in place.
  void reduce(std::vector<Int>& x) const {
    const auto& k = simd::kernels();
    for (;;) {
      const auto hit = reducer(x);
      if (!hit) return;
      const auto g = at(hit->first);
      const bool ok = hit->second ? k.sub(x, g, x) : k.add(x, g, x);
      if (!ok) throw Error(ErrorKind::Overflow, "64-bit integer overflow during conformal reduction");
    }
  }

 private:
  std::size_t n_;
  std::size_t active_;
  std::size_t count_ = 0;
  std::vector<Int> data_;
  SignTrie trie_;
  mutable std::vector<Int> negated_;
};

bool is_zero(std::span<const Int> v) {
  return std::all_of(v.begin(), v.end(), [](Int c) { return c == 0; });
}

void canonicalize(std::vector<Int>& v) {
  const auto first = std::find_if(v.begin(), v.end(), [](Int c) { return c != 0; });
  if (first != v.end() && *first < 0)
    for (Int& c : v) c = checked::neg(c);
}

int sign(Int x) { return (x > 0) - (x < 0); }

// Whether a + b (or a - b) has to be completed when coordinate j is lifted:
// the two summands disagree in sign at j and agree everywhere before it.
bool critical(std::span<const Int> a, std::span<const Int> b, bool sum, std::size_t j) {
  const int flip = sum ? 1 : -1;
  if (sign(a[j]) * sign(b[j]) * flip >= 0) return false;
  for (std::size_t i = 0; i < j; ++i)
    if (sign(a[i]) * sign(b[i]) * flip < 0) return false;
  return true;
}

std::vector<bool> minimal_flags(const WorkingSet& set) {
  std::vector<bool> minimal(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) minimal[i] = !set.reducer(set.at(i), i);
  return minimal;
}

WorkingSet minimal_elements(const WorkingSet& set, std::size_t active) {
  const auto minimal = minimal_flags(set);
  WorkingSet kept(set.at(0).size(), active);
  for (std::size_t i = 0; i < set.size(); ++i)
    if (minimal[i]) kept.add(set.at(i));
  return kept;
}

// Keeps the minimal elements and appends the residues of the others; every
// dropped element stays a conformal sum of the result. Kept elements stay in
// their old order; `position` is mapped to the index of the first kept
// element at or after it.
WorkingSet interreduce(const WorkingSet& set, std::size_t& position) {
  const auto minimal = minimal_flags(set);
  const std::size_t n = set.at(0).size();
  WorkingSet kept(n, set.active());
  std::size_t mapped = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!minimal[i]) continue;
    if (i < position) ++mapped;
    kept.add(set.at(i));
  }
  position = mapped;
  std::vector<Int> r;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (minimal[i]) continue;
    r.assign(set.at(i).begin(), set.at(i).end());
    kept.reduce(r);
    if (is_zero(r)) continue;
    canonicalize(r);
    kept.add(r);
  }
  return kept;
}

VectorSet to_vector_set(const WorkingSet& set, const std::vector<bool>& keep) {
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < set.size(); ++i)
    if (keep[i]) out.emplace_back(std::vector<Int>(set.at(i).begin(), set.at(i).end()));
  return VectorSet(std::move(out));
}

// Completes `set` for coordinate j = set.active() - 1.
void lift_coordinate(WorkingSet& set, std::size_t interreduce_every) {
  const std::size_t j = set.active() - 1;
  const auto& k = simd::kernels();
  std::vector<Int> s(set.at(0).size());
  std::size_t since_interreduce = 0;
  // A pair sum that reduced to zero stays a conformal sum of the set after
  // inter-reduction, so the scan resumes where it was.
  std::size_t i = 1;
  while (i < set.size()) {
    bool resumed = false;
    for (std::size_t p = 0; p < i && !resumed; ++p) {
      // f + g and f - g; the sums with -f are their negatives
      for (const bool sum : {true, false}) {
        if (!critical(set.at(i), set.at(p), sum, j)) continue;
        const bool ok = sum ? k.add(set.at(i), set.at(p), s) : k.sub(set.at(i), set.at(p), s);
        if (!ok) throw Error(ErrorKind::Overflow, "64-bit integer overflow in a pair sum");
        set.reduce(s);
        if (is_zero(s)) continue;
        canonicalize(s);
        set.add(s);
        if (++since_interreduce >= interreduce_every) {
          set = interreduce(set, i);
          since_interreduce = 0;
          resumed = true;
          break;
        }
      }
    }
    if (!resumed) ++i;
  }
}

}  // namespace

LatticeVector conformal_normal_form(LatticeVector v, std::span<const LatticeVector> reducers) {
  WorkingSet set(v.size(), v.size());
  for (const auto& g : reducers) {
    if (g.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "reducer length differs from vector length");
    if (!g.is_zero()) set.add(g.coords());
  }
  std::vector<Int> x(v.begin(), v.end());
  set.reduce(x);
  return LatticeVector(std::move(x));
}

VectorSet graver_completion(const LatticeBasis& lattice, std::size_t interreduce_every) {
  if (interreduce_every == 0) throw Error(ErrorKind::InvalidArgument, "inter-reduction period must be positive");
  const std::size_t n = lattice.ambient_dimension();
  // echelon basis: the vectors vanishing on the first j coordinates are
  // spanned by the rows whose pivot is at or after j
  const LatticeBasis echelon = LatticeBasis::spanned_by(n, lattice.generators());
  if (echelon.rank() == 0) return {};

  std::vector<std::optional<std::size_t>> row_with_pivot(n);
  for (std::size_t r = 0; r < echelon.rank(); ++r) {
    const auto& g = echelon.generators()[r];
    const auto pivot = static_cast<std::size_t>(std::find_if(g.begin(), g.end(), [](Int c) { return c != 0; }) - g.begin());
    row_with_pivot[pivot] = r;
  }

  WorkingSet set(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    WorkingSet next = set.size() == 0 ? WorkingSet(n, j + 1) : minimal_elements(set, j + 1);
    if (row_with_pivot[j]) next.add(echelon.generators()[*row_with_pivot[j]].coords());
    lift_coordinate(next, interreduce_every);
    set = std::move(next);
  }
  return to_vector_set(set, minimal_flags(set));
}

GraverBasis graver_basis(const IntegerMatrix& a) { return {a, graver_completion(integer_kernel(a))}; }

namespace {

using boost::multiprecision::cpp_int;

// Kernel parametrization: rows d·x_pivot + Σ c_f·x_f = 0 over the free columns.
struct Parametrization {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free;
  std::vector<Int> pivot_coefficient;        // d per pivot row
  std::vector<std::vector<Int>> free_coeffs;  // c per pivot row, indexed like `free`
};

Parametrization parametrize(const IntegerMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<std::vector<cpp_int>> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.emplace_back(a.row(i).begin(), a.row(i).end());

  Parametrization p;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) {
      p.free.push_back(c);
      continue;
    }
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const cpp_int f = rows[i][c];
      const cpp_int g = rows[r][c];
      cpp_int content = 0;
      for (std::size_t j = 0; j < n; ++j) {
        rows[i][j] = g * rows[i][j] - f * rows[r][j];
        content = gcd(content, abs(rows[i][j]));
      }
      if (content > 1)
        for (auto& x : rows[i]) x /= content;
    }
    p.pivots.push_back(c);
    ++r;
  }

  auto narrow = [](const cpp_int& x) {
    if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
      throw Error(ErrorKind::Overflow, "64-bit integer overflow in kernel parametrization");
    return static_cast<Int>(x);
  };
  for (std::size_t i = 0; i < p.pivots.size(); ++i) {
    p.pivot_coefficient.push_back(narrow(rows[i][p.pivots[i]]));
    std::vector<Int> coeffs;
    for (std::size_t f : p.free) coeffs.push_back(narrow(rows[i][f]));
    p.free_coeffs.push_back(std::move(coeffs));
  }
  return p;
}

}  // namespace

VectorSet graver_bruteforce(const IntegerMatrix& a, Int box) {
  if (box < 1) throw Error(ErrorKind::InvalidArgument, "box bound must be at least 1");
  const std::size_t n = a.cols();
  if (n == 0) return {};

  // Every kernel vector in the box is found by running the free coordinates
  // over [-box, box] and solving for the pivot coordinates.
  const Parametrization p = parametrize(a);
  const std::size_t nf = p.free.size();
  if (nf == 0) return {};

  Int bound = 0;
  for (const auto& row : p.free_coeffs)
    for (Int c : row) bound = std::max(bound, checked::abs(c));
  (void)checked::mul(checked::mul(checked::mul(bound, box), static_cast<Int>(nf)), 4);

  std::vector<Int> t(nf, -box);
  std::vector<Int> sums(p.pivots.size(), 0);  // Σ c_f·t_f per pivot row
  for (std::size_t i = 0; i < p.pivots.size(); ++i)
    for (std::size_t f = 0; f < nf; ++f) sums[i] += p.free_coeffs[i][f] * t[f];

  std::vector<LatticeVector> kernel;
  LatticeVector v(n);
  for (;;) {
    bool fits = true;
    for (std::size_t i = 0; i < p.pivots.size() && fits; ++i) {
      const Int d = p.pivot_coefficient[i];
      if (sums[i] % d != 0) {
        fits = false;
        break;
      }
      const Int x = -sums[i] / d;
      if (x < -box || x > box) fits = false;
      else v[p.pivots[i]] = x;
    }
    if (fits) {
      for (std::size_t f = 0; f < nf; ++f) v[p.free[f]] = t[f];
      if (!v.is_zero()) kernel.push_back(v);
    }
    std::size_t f = 0;
    while (f < nf && t[f] == box) {
      for (std::size_t i = 0; i < p.pivots.size(); ++i) sums[i] -= 2 * box * p.free_coeffs[i][f];
      t[f] = -box;
      ++f;
    }
    if (f == nf) break;
    ++t[f];
    for (std::size_t i = 0; i < p.pivots.size(); ++i) sums[i] += p.free_coeffs[i][f];
  }

  // a non-minimal vector has a minimal one of smaller 1-norm below it
  std::stable_sort(kernel.begin(), kernel.end(),
                   [](const LatticeVector& x, const LatticeVector& y) { return x.norm1() < y.norm1(); });
  WorkingSet minimal(n, n);
  std::vector<bool> keep;
  for (const auto& x : kernel) {
    if (x != x.canonical() || minimal.reducer(x.coords())) continue;
    minimal.add(x.coords());
    keep.push_back(true);
  }
  return to_vector_set(minimal, keep);
}

}  // namespace toric
