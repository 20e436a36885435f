#pragma once
/**
 * Assembly of products of monomial factors into truncated series.
 *
 * A FactorProduct is a formal product
 *
 *   pre * prod (1 - w_i) * prod 1/(1 - w_j) * prod (w0; step)_inf^-1 * polys
 *
 * collected symbolically and expanded exactly under a grading.  Factors whose
 * argument has negative grade are normalized first using
 *
 *   1 - w = -w * (1 - w^-1),
 *
 * which moves a monomial into the prefactor and flips the argument, so
 * products such as rising factorials with negative exponents expand without
 * any ad hoc case analysis at the call sites.
 */

#include <utility>
#include <vector>

#include "qhall/series.hpp"

namespace qhall {

struct FactorProduct {
  Monomial pre = Monomial::one();
  std::vector<Monomial> one_minus;      // polynomial factors (1 - w)
  std::vector<Monomial> inv_one_minus;  // factors 1/(1 - w)
  std::vector<std::pair<Monomial, Monomial>> inv_poch_unbounded;  // 1/(w0; step)
  std::vector<GradedSeries> poly;  // explicit polynomial factors

  FactorProduct& times(const Monomial& m);
  /** Append (1 - start * step^i) for i = 0..count-1 to the numerator. */
  FactorProduct& numer_poch(const Monomial& start, const Monomial& step, long long count);
  /** Append 1/(1 - start * step^i) for i = 0..count-1 to the denominator. */
  FactorProduct& denom_poch(const Monomial& start, const Monomial& step, long long count);
  /** Append the full inverse product 1/(start; step): all i >= 0. */
  FactorProduct& denom_poch_unbounded(const Monomial& start, const Monomial& step);
  FactorProduct& times_poly(GradedSeries p);

  /**
   * Expand exactly under g.  Throws std::domain_error when a denominator
   * factor has a grade-zero argument (not invertible as a graded series) or
   * when the normalized prefactor has negative grade.
   */
  GradedSeries expand(const Grading& g) const;
};

}  // namespace qhall
