#pragma once
/**
 * Catalog of exact product/sum formulas for the generating functions of the
 * enumerated families, expanded under a grading with optional monomial
 * substitution for each variable.
 *
 * Naming: lhp_ prefixes full lecture hall generating functions, tlh_ their
 * length-truncated versions (a _bar suffix restricts to exactly k positive
 * entries), and alh_ and talh_ the anti lecture hall counterparts; the
 * variable suffix names the statistics carried (q = weight; u, v =
 * ceiling/floor image weight and odd count; x, y = index sums).  r_nk, r_exact_t
 * and lbar_nk_q are odd-part partition counts, l_mu/a_mu/a_mu_k refine by
 * the ceiling/floor image, and fin3_rhs is a two-variable product whose
 * first factor group is bounded (len_k) or unbounded.
 */

#include <array>
#include <string>
#include <vector>

#include "qhall/series.hpp"

namespace qhall {

enum class ClosedFormId {
  lhp_q,
  lhp_xy,
  lhp_uvq,
  alh_uvq,
  tlh_uvq,
  tlh_uvq_bar,
  talh_uvq,
  tlh_xy,
  tlh_xy_bar,
  talh_xy,
  r_nk,
  r_exact_t,
  lbar_nk_q,
  l_mu,
  a_mu,
  a_mu_k,
  fin3_rhs,
};

std::string closed_form_name(ClosedFormId id);
ClosedFormId closed_form_from_name(const std::string& name);

/** The identity substitution: every variable maps to itself. */
std::array<Monomial, 8> identity_subst();

/** coeff * prod subst[v]^{e_v}; negative exponents need a unit coefficient. */
Monomial apply_subst(const Monomial& m, const std::array<Monomial, 8>& subst);

struct ClosedForm {
  ClosedFormId id = ClosedFormId::lhp_q;
  long long n = 0, k = 0, t = 0, j = 0, l = 0;
  std::vector<int> mu;   // image parameter for l_mu / a_mu / a_mu_k
  bool len_k = false;    // fin3_rhs: bound the first factor group at k
  std::array<Monomial, 8> subst = identity_subst();

  /** "tlh_xy_bar(n=3,k=2;x->x^2*y,y->x^-1)", "l_mu(mu=(2,1),n=2)", ... */
  static ClosedForm parse(const std::string& text);
  std::string to_text() const;
};

/**
 * Expand the formula exactly under g.  Throws std::domain_error when the
 * parameters are outside the formula's domain.
 */
GradedSeries closed_form(const ClosedForm& cf, const Grading& g);

}  // namespace qhall
