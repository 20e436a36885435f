#pragma once
/**
 * Exact truncated multivariate Laurent series over the fixed variable
 * alphabet {u, v, x, y, z, a, c, q} with arbitrary-precision integer
 * coefficients.
 *
 * A Grading assigns every variable a nonnegative integer weight and fixes a
 * truncation bound D.  The grade of an exponent vector is the weighted sum of
 * its entries; a GradedSeries stores exactly the terms whose grade lies in
 * [0, D].  Negative exponents are legal only on weight-zero variables, so
 * each stored term has a well-defined nonnegative grade and truncation at the
 * bound is meaningful.  All arithmetic is exact: no floating point, no
 * modular shortcuts.
 */

#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qhall {

/** Arbitrary-precision signed integer used for all coefficients. */
using Int = boost::multiprecision::cpp_int;

inline constexpr int kNumVars = 8;

/** The fixed variable alphabet, in canonical display/comparison order. */
enum class Var : int { u = 0, v = 1, x = 2, y = 3, z = 4, a = 5, c = 6, q = 7 };

inline constexpr std::array<char, kNumVars> kVarName{'u', 'v', 'x', 'y',
                                                     'z', 'a', 'c', 'q'};

/** Look up a variable by its single-letter name; throws on unknown names. */
Var var_from_name(char name);

/** Exponent vector indexed by Var, compared lexicographically. */
using Exps = std::array<int, kNumVars>;

inline int exp_of(const Exps& e, Var v) { return e[static_cast<int>(v)]; }

/**
 * A monomial: an integer coefficient times a signed power product of the
 * variables.  Monomials are the only values substituted for variables inside
 * closed-form constructors, scaled onto series, and inverted by the
 * geometric-series expansion; a monomial by itself is not graded.
 */
struct Monomial {
  Int coeff{1};
  Exps e{};  // value-initialized: all exponents zero

  Monomial() = default;
  explicit Monomial(Int c) : coeff(std::move(c)) {}
  Monomial(Int c, Exps exps) : coeff(std::move(c)), e(exps) {}

  /** The monomial for a single variable power, with optional coefficient. */
  static Monomial var(Var v, int exp = 1, Int c = 1);

  /** Build coeff * prod(var^exp) from a list of (variable, exponent) pairs. */
  static Monomial product(std::initializer_list<std::pair<Var, int>> powers,
                          Int c = 1);

  /** The multiplicative unit. */
  static Monomial one() { return Monomial(); }

  bool is_one() const;
  bool is_constant() const;

  Monomial times(const Monomial& o) const;

  /** Negated copy. */
  Monomial negate() const;

  /**
   * Integer power.  Negative powers require an invertible coefficient
   * (|coeff| == 1); otherwise std::invalid_argument is thrown.
   */
  Monomial pow(long long n) const;

  /** Reciprocal; requires |coeff| == 1. */
  Monomial inverse() const;

  bool operator==(const Monomial& o) const = default;
};

/**
 * A grading: per-variable nonnegative weights plus a truncation bound.
 * Two series may be combined arithmetically only when their gradings are
 * identical (same weights and same bound).
 */
struct Grading {
  std::array<int, kNumVars> weight{};  // all zero by default
  long long bound{0};

  long long grade(const Exps& e) const {
    long long g = 0;
    for (int i = 0; i < kNumVars; ++i) g += static_cast<long long>(weight[i]) * e[i];
    return g;
  }
  long long grade(const Monomial& m) const { return grade(m.e); }

  bool operator==(const Grading& o) const = default;

  /** Weight 1 on q, weight 0 elsewhere. */
  static Grading q_grading(long long bound);
  /** Weight 1 on x and y, weight 0 elsewhere. */
  static Grading xy_grading(long long bound);
  /** Weight 1 on each listed variable, weight 0 elsewhere. */
  static Grading weighted(std::initializer_list<Var> ones, long long bound);
};

/**
 * A truncated series: a canonical map from exponent vectors to nonzero
 * coefficients, every stored term having grade within [0, bound].  Inserting
 * a term whose grade exceeds the bound silently truncates it; inserting a
 * term with a negative exponent on a positively weighted variable throws.
 */
class GradedSeries {
 public:
  explicit GradedSeries(Grading g) : g_(std::move(g)) {}

  static GradedSeries zero(const Grading& g) { return GradedSeries(g); }
  static GradedSeries one(const Grading& g);
  /** Series with the single given term (subject to truncation rules). */
  static GradedSeries from_monomial(const Monomial& m, const Grading& g);

  const Grading& grading() const { return g_; }
  const std::map<Exps, Int>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  /** Accumulate c into the term at exponent e, enforcing the invariants. */
  void add_term(const Exps& e, const Int& c);
  void add_term(const Monomial& m) { add_term(m.e, m.coeff); }

  /** Exact term-by-term equality of series carrying identical gradings. */
  bool operator==(const GradedSeries& o) const {
    return g_ == o.g_ && t_ == o.t_;
  }

  /** Terms sorted by (grade, exponent vector), the canonical output order. */
  std::vector<std::pair<Exps, Int>> sorted_terms() const;

 private:
  Grading g_;
  std::map<Exps, Int> t_;
};

}  // namespace qhall
