// Feasibility of small rational systems by Fourier–Motzkin elimination.
//
// Equalities are solved away first. Inequalities are kept as primitive
// integer rows a·x >= b together with the set of original inequalities they
// were combined from; after k eliminations a row built from more than k + 1
// originals is redundant and dropped (Chernikov's rule). The rows that touched
// each eliminated variable are kept so a witness can be rebuilt by
// back-substitution.

#include "toric/geometry.hpp"
#include "toric/analysis.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <optional>

namespace toric {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

struct Inequality {
  std::vector<cpp_int> a;
  cpp_int b;
  boost::dynamic_bitset<> history;
};

// x_var = constant + Σ coeffs[j] x_j, over variables that are never substituted
struct Substitution {
  std::size_t var;
  std::vector<Rational> coeffs;
  Rational constant;
};

struct Level {
  std::size_t var;
  std::vector<Inequality> rows;
};

cpp_int abs_int(const cpp_int& x) { return x < 0 ? cpp_int(-x) : x; }

// Divides by the content of (a, b). Returns false for a contradiction
// 0 >= b > 0; sets `trivial` for 0 >= b <= 0.
bool normalize(Inequality& row, bool& trivial) {
  cpp_int g = 0;
  for (const auto& x : row.a) g = boost::multiprecision::gcd(g, abs_int(x));
  trivial = false;
  if (g == 0) {
    if (row.b > 0) return false;
    trivial = true;
    return true;
  }
  g = boost::multiprecision::gcd(g, abs_int(row.b));
  if (g > 1) {
    for (auto& x : row.a) x /= g;
    row.b /= g;
  }
  return true;
}

Inequality to_integer_row(const std::vector<Rational>& a, const Rational& b, std::size_t index, std::size_t total) {
  cpp_int scale = denominator(b);
  for (const auto& x : a) scale = boost::multiprecision::lcm(scale, cpp_int(denominator(x)));
  Inequality row;
  row.a.reserve(a.size());
  for (const auto& x : a) row.a.push_back(numerator(x) * (scale / denominator(x)));
  row.b = numerator(b) * (scale / denominator(b));
  row.history.resize(total);
  row.history.set(index);
  return row;
}

Rational ceil_of(const Rational& x) {
  const cpp_int num = numerator(x);
  const cpp_int den = denominator(x);
  cpp_int q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return Rational(q);
}

Rational floor_of(const Rational& x) {
  const cpp_int num = numerator(x);
  const cpp_int den = denominator(x);
  cpp_int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return Rational(q);
}

// Prefers 0, then the integer closest to 0, inside [lower, upper].
Rational pick_value(const std::optional<Rational>& lower, const std::optional<Rational>& upper) {
  if ((!lower || *lower <= 0) && (!upper || *upper >= 0)) return Rational(0);
  if (lower && *lower > 0) {
    const Rational v = ceil_of(*lower);
    return (upper && v > *upper) ? *lower : v;
  }
  const Rational v = floor_of(*upper);
  return (lower && v < *lower) ? *upper : v;
}

}  // namespace

Feasibility linear_feasible(const RationalConstraintSystem& system) {
  const std::size_t n = system.dimension;
  for (const auto& e : system.equalities)
    if (e.normal.size() != n) throw Error(ErrorKind::DimensionMismatch, "equality normal has wrong length");
  for (const auto& a : system.inequalities)
    if (a.size() != n) throw Error(ErrorKind::DimensionMismatch, "inequality normal has wrong length");

  // rows a·x >= b
  std::vector<std::pair<std::vector<Rational>, Rational>> rational_rows;
  for (const auto& a : system.inequalities) rational_rows.emplace_back(a, Rational(1));
  std::vector<LinearEquality> equalities = system.equalities;
  std::vector<Substitution> substitutions;

  // replaces x_var in a·x (op) rhs; the constant term moves to the right
  const auto substitute_row = [](std::vector<Rational>& a, Rational& rhs, const Substitution& s) {
    const Rational factor = a[s.var];
    if (factor == 0) return;
    a[s.var] = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != s.var) a[j] += factor * s.coeffs[j];
    rhs -= factor * s.constant;
  };
  const auto substitute_expression = [](Substitution& e, const Substitution& s) {
    const Rational factor = e.coeffs[s.var];
    if (factor == 0) return;
    e.coeffs[s.var] = 0;
    for (std::size_t j = 0; j < e.coeffs.size(); ++j)
      if (j != s.var) e.coeffs[j] += factor * s.coeffs[j];
    e.constant += factor * s.constant;
  };

  for (std::size_t e = 0; e < equalities.size(); ++e) {
    const auto& eq = equalities[e];
    const auto pivot = std::find_if(eq.normal.begin(), eq.normal.end(), [](const Rational& x) { return x != 0; });
    if (pivot == eq.normal.end()) {
      if (eq.offset != 0) return {};
      continue;
    }
    Substitution s;
    s.var = static_cast<std::size_t>(pivot - eq.normal.begin());
    const Rational lead = *pivot;
    s.coeffs.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
      if (j != s.var) s.coeffs[j] = -eq.normal[j] / lead;
    s.constant = eq.offset / lead;
    for (std::size_t f = e + 1; f < equalities.size(); ++f) substitute_row(equalities[f].normal, equalities[f].offset, s);
    for (auto& [a, b] : rational_rows) substitute_row(a, b, s);
    for (auto& earlier : substitutions) substitute_expression(earlier, s);
    substitutions.push_back(std::move(s));
  }

  std::vector<Inequality> rows;
  for (std::size_t i = 0; i < rational_rows.size(); ++i) {
    Inequality row = to_integer_row(rational_rows[i].first, rational_rows[i].second, i, rational_rows.size());
    bool trivial = false;
    if (!normalize(row, trivial)) return {};
    if (!trivial) rows.push_back(std::move(row));
  }

  std::vector<Level> levels;
  std::size_t eliminated = 0;
  for (;;) {
    // the variable producing the fewest combined rows
    std::size_t best = n;
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t pos = 0;
      std::size_t neg = 0;
      for (const auto& r : rows) {
        if (r.a[v] > 0) ++pos;
        else if (r.a[v] < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      if (best == n || pos * neg < best_cost) {
        best = v;
        best_cost = pos * neg;
      }
    }
    if (best == n) break;
    ++eliminated;

    std::vector<Inequality> next;
    std::vector<const Inequality*> pos_rows;
    std::vector<const Inequality*> neg_rows;
    for (const auto& r : rows) {
      if (r.a[best] > 0) pos_rows.push_back(&r);
      else if (r.a[best] < 0) neg_rows.push_back(&r);
      else next.push_back(r);
    }
    std::map<std::pair<std::vector<cpp_int>, cpp_int>, std::size_t> seen;
    for (std::size_t i = 0; i < next.size(); ++i) seen.emplace(std::make_pair(next[i].a, next[i].b), i);

    for (const auto* p : pos_rows) {
      for (const auto* q : neg_rows) {
        Inequality combo;
        combo.history = p->history | q->history;
        if (combo.history.count() > eliminated + 1) continue;
        const cpp_int wp = -q->a[best];
        const cpp_int wq = p->a[best];
        combo.a.resize(n);
        for (std::size_t j = 0; j < n; ++j) combo.a[j] = wp * p->a[j] + wq * q->a[j];
        combo.b = wp * p->b + wq * q->b;
        bool trivial = false;
        if (!normalize(combo, trivial)) return {};
        if (trivial) continue;
        auto key = std::make_pair(combo.a, combo.b);
        const auto it = seen.find(key);
        if (it == seen.end()) {
          seen.emplace(std::move(key), next.size());
          next.push_back(std::move(combo));
        } else if (combo.history.count() < next[it->second].history.count()) {
          next[it->second].history = combo.history;
        }
      }
    }

    Level level{best, {}};
    for (const auto* p : pos_rows) level.rows.push_back(*p);
    for (const auto* q : neg_rows) level.rows.push_back(*q);
    levels.push_back(std::move(level));
    rows = std::move(next);
  }

  std::vector<Rational> x(n, Rational(0));
  for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    for (const auto& r : level->rows) {
      Rational rest(r.b);
      for (std::size_t j = 0; j < n; ++j)
        if (j != level->var && r.a[j] != 0) rest -= Rational(r.a[j]) * x[j];
      const Rational bound = rest / Rational(r.a[level->var]);
      if (r.a[level->var] > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else if (!upper || bound < *upper) {
        upper = bound;
      }
    }
    x[level->var] = pick_value(lower, upper);
  }
  for (const auto& s : substitutions) {
    Rational value = s.constant;
    for (std::size_t j = 0; j < n; ++j)
      if (s.coeffs[j] != 0) value += s.coeffs[j] * x[j];
    x[s.var] = value;
  }
  return {true, std::move(x)};
}

bool satisfies(const RationalConstraintSystem& system, std::span<const Rational> witness) {
  if (witness.size() != system.dimension) return false;
  const auto dot = [&](const std::vector<Rational>& a) {
    Rational s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * witness[j];
    return s;
  };
  for (const auto& e : system.equalities)
    if (dot(e.normal) != e.offset) return false;
  for (const auto& a : system.inequalities)
    if (dot(a) < 1) return false;
  return true;
}

namespace {

std::vector<Rational> difference(const LatticeVector& a, const LatticeVector& b) {
  std::vector<Rational> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = Rational(a[i]) - Rational(b[i]);
  return d;
}

void require_point(const LatticeVector& p, std::span<const LatticeVector> points) {
  for (const auto& q : points)
    if (q.size() != p.size()) throw Error(ErrorKind::DimensionMismatch, "points of different dimensions");
  if (std::find(points.begin(), points.end(), p) == points.end())
    throw Error(ErrorKind::InvalidArgument, "point (" + to_string(p) + ") is not in the point set");
}

}  // namespace

bool is_vertex(const LatticeVector& p, std::span<const LatticeVector> points) {
  require_point(p, points);
  RationalConstraintSystem system{p.size(), {}, {}};
  for (const auto& q : points)
    if (q != p) system.inequalities.push_back(difference(q, p));
  return linear_feasible(system).feasible;
}

bool is_edge(const LatticeVector& p, const LatticeVector& q, std::span<const LatticeVector> points) {
  require_point(p, points);
  require_point(q, points);
  if (p == q) throw Error(ErrorKind::InvalidArgument, "edge endpoints coincide");
  RationalConstraintSystem system{p.size(), {}, {}};
  system.equalities.push_back({difference(p, q), Rational(0)});
  for (const auto& t : points)
    if (t != p && t != q) system.inequalities.push_back(difference(t, p));
  return linear_feasible(system).feasible;
}

UgbCriterion universal_gb_verdict(const GraverBasis& graver, const LatticeVector& u) {
  if (u.size() != graver.configuration.cols())
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from the number of columns");
  if (!graver.configuration.apply(u).is_zero())
    throw Error(ErrorKind::NotLatticeMember, "vector (" + to_string(u) + ") is not in ker(A)");
  if (u.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero vector is never in a Gröbner basis");
  require_positive(graver);
  if (u.content() != 1) return UgbCriterion::GcdNotOne;
  const FiberGraph f = fiber(graver, u);
  return is_edge(u.positive_part(), u.negative_part(), f.members) ? UgbCriterion::Member : UgbCriterion::NotAnEdge;
}

bool in_universal_gb(const GraverBasis& graver, const LatticeVector& u) {
  return universal_gb_verdict(graver, u) == UgbCriterion::Member;
}

bool in_universal_gb(const IntegerMatrix& a, const LatticeVector& u) {
  if (u.size() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from the number of columns");
  return in_universal_gb(graver_basis(a), u);
}

VectorSet universal_gb(const GraverBasis& graver) {
  require_positive(graver);
  std::vector<LatticeVector> out;
  for (const auto& g : graver.elements)
    if (in_universal_gb(graver, g)) out.push_back(g);
  return VectorSet(std::move(out));
}

VectorSet universal_gb(const IntegerMatrix& a) { return universal_gb(graver_basis(a)); }

std::vector<std::vector<LatticeVector>> markov_polytope_vertices(const FiberGraph& fiber) {
  std::vector<std::vector<LatticeVector>> out;
  for (std::size_t c = 0; c < fiber.components.size(); ++c) {
    const auto points = fiber.component_points(c);
    std::vector<LatticeVector> vertices;
    for (const auto& p : points)
      if (is_vertex(p, points)) vertices.push_back(p);
    out.push_back(std::move(vertices));
  }
  return out;
}

std::vector<std::vector<LatticeVector>> markov_polytope_vertices(const IntegerMatrix& a, const FiberGraph& fiber) {
  require_positive(graver_basis(a));
  return markov_polytope_vertices(fiber);
}

}  // namespace toric
