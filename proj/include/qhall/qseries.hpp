#pragma once
/**
 * Arithmetic on truncated graded series: ring operations, geometric-series
 * inversion of (1 - monomial), finite and unbounded Pochhammer products,
 * Gaussian binomial and q-multinomial coefficients, coefficient queries and
 * monomial scaling.  Division never happens at expansion time: reciprocals of
 * binomial factors expand through geometric series, and Gaussian binomials
 * are produced by exact univariate polynomial division over the integers.
 */

#include <optional>
#include <vector>

#include "qhall/series.hpp"

namespace qhall {

enum class RingOp { add, sub, mul };

/** Combine two series with identical gradings; throws on a grading mismatch. */
GradedSeries ring_op(RingOp op, const GradedSeries& a, const GradedSeries& b);

inline GradedSeries add(const GradedSeries& a, const GradedSeries& b) {
  return ring_op(RingOp::add, a, b);
}
inline GradedSeries sub(const GradedSeries& a, const GradedSeries& b) {
  return ring_op(RingOp::sub, a, b);
}
inline GradedSeries mul(const GradedSeries& a, const GradedSeries& b) {
  return ring_op(RingOp::mul, a, b);
}

/**
 * 1/(1 - m) = sum of m^j for j >= 0, truncated at the grading bound.
 * Requires |coeff(m)| == 1 and grade(m) >= 1.
 */
GradedSeries geom_inverse(const Monomial& m, const Grading& g);

/**
 * Finite Pochhammer product: prod over 0 <= i < n of (1 - start * step^i).
 * The step may lower the grade (signed exponents are allowed); every factor
 * monomial must have nonnegative grade, factors whose grade exceeds the bound
 * multiply as 1 and are skipped.  Pass n == std::nullopt for the unbounded
 * product, which requires grade(start) >= 1 and grade(step) >= 1 and
 * multiplies exactly the factors whose grade lies within the bound.
 */
GradedSeries pochhammer(const Monomial& start, const Monomial& step,
                        std::optional<long long> n, const Grading& g);

/**
 * Reciprocal Pochhammer: prod over 0 <= i < n of 1/(1 - start * step^i),
 * each factor expanded by geom_inverse.  Same unbounded convention as
 * pochhammer.
 */
GradedSeries pochhammer_inverse(const Monomial& start, const Monomial& step,
                                std::optional<long long> n, const Grading& g);

/**
 * Gaussian binomial coefficient [n choose m] in the given base monomial,
 * computed as the exact polynomial quotient
 * (base^{n-m+1};base)_m / (base;base)_m.  Conventions: the result is 1 when
 * m == 0 (for every n) and 0 when m < 0 or m > n.  Requires coeff(base) == 1
 * and grade(base) >= 1.
 */
GradedSeries gaussian_binomial(long long n, long long m, const Monomial& base,
                               const Grading& g);

/**
 * q-multinomial coefficient [n; parts] in the given base monomial, i.e.
 * (b;b)_n / prod_i (b;b)_{parts[i]}, computed division-free as a telescoping
 * product of Gaussian binomials.  The parts must be nonnegative and sum to n.
 */
GradedSeries q_multinomial(long long n, const std::vector<long long>& parts,
                           const Monomial& base, const Grading& g);

/**
 * The coefficient stored at the exponent vector e (zero when absent).
 * Queries beyond the truncation bound throw std::domain_error, because the
 * series carries no information there.
 */
Int coefficient(const GradedSeries& s, const Exps& e);

/**
 * Multiply every term by the monomial m (grade(m) >= 0 required); terms
 * pushed beyond the bound are truncated away.
 */
GradedSeries scale_monomial(const GradedSeries& s, const Monomial& m);

}  // namespace qhall
