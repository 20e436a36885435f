#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhall/series.hpp"

namespace qhall {

/**
 * Machine verification of the identity catalog.  Every check compares two or
 * more independently computed graded series coefficient-by-coefficient in
 * exact integer arithmetic; a check passes only when all of its sides agree
 * on every exponent vector up to the truncation order.
 */

/** The first exponent vector (in (grade, lex) order) where two sides differ,
 *  together with the two coefficients found there. */
struct Witness {
  Exps exps{};
  Int lhs{0};
  Int rhs{0};
};

struct CheckReport {
  std::string check_id;
  /** Parameter echo in a fixed per-check order, e.g. {{"n",3},{"k",2}}. */
  std::vector<std::pair<std::string, long long>> params;
  long long order = 0;
  bool pass = false;
  std::optional<Witness> witness;  // present exactly when pass is false
  std::string note;                // side names that disagreed, sweep sizes, ...
  double elapsed_ms = 0.0;         // wall time; for stderr diagnostics only
};

/** First coefficient disagreement between two series sharing a grading,
 *  scanning exponents in (grade, lexicographic) order. */
std::optional<Witness> first_difference(const GradedSeries& lhs,
                                        const GradedSeries& rhs);

/**
 * Generating-function theorems.  Ids and parameters:
 *
 *   EQ1(n)        weight GF of L(n,n) vs the odd-part product lhp_q
 *   EQ2(n)        (x,y) index-sum GF of L(n,n) vs lhp_xy
 *   EQ3(n)        (u,v,q) ceiling-image GF of L(n,n) vs lhp_uvq
 *   EQ4(n)        (u,v,q) floor-image GF of A(n,n) vs alh_uvq
 *   EQ5(n)        weight GF of A(n,n) vs alh_uvq at u=v=1
 *   EQ6(n,k)      (u,v,q) GF of L(n,k) vs the tlh_uvq sum
 *   EQ7(n,k)      (u,v,q) GF of A(n,k), k <= n, vs talh_uvq
 *   EQ8(n,k)      (x,y) GF of L(n,k) vs tlh_xy
 *   EQ9(n,k)      (x,y) GF of A(n,k), k <= n+1, vs talh_xy
 *   EQ10(n)       (x,y) GF of A(n,n) vs talh_xy(n,n)
 *   RTLH_BAR(n,k)  (u,v,q) GF of Lbar(n,k) vs tlh_uvq_bar
 *   OETLH_BAR(n,k) (x,y) GF of Lbar(n,k) vs tlh_xy_bar
 *   COMBI(n,k)    weight GFs of L(n,k) and R(n,k) vs tlh_uvq at u=v=1
 *   DIFF(n,k)     weight GF of Lbar(n,k) vs lbar_nk_q and L(n,k)-L(n,k-1)
 *   IDENT1(n,k)   tlh_uvq at u=v=1 vs r_nk
 *   IDENT2(n,k)   tlh_uvq_bar at u=v=1 vs lbar_nk_q
 *   IDENT2LIM(k)  q^(k(k+1)/2)/(q;q)_k in staircase vs split-parity form
 *                 vs the distinct-k-parts oracle D(k)
 *   FIN3(k)       z-refined GF of D(2k-1) u D(2k) vs the fin3_rhs closed
 *                 form vs the odd-part Durfee-square-style oracle; the
 *                 optional parameter unbounded=1 switches the closed form to
 *                 its unbounded first product, a reading that fails
 *   REF1(k)       staircase sum over m <= k vs sum of D(m) oracles vs the
 *                 R(n,k) oracle and r_nk closed form at stable n
 *   REF2(k)       D(k) oracle vs shifted exact-t oracle Rt and r_exact_t
 *                 at stable n vs the staircase closed form
 *   REF2PLUS(n,k) weight GF of Lbar(n,k) vs lbar_nk_q vs a shifted
 *                 odd-part oracle with interval count constraints
 *   TRANSPOSE(k)  alternating-sum GF of length-k partitions vs a closed
 *                 product vs the odd-part-count GF of max-part-k partitions
 *   AIDENT(n,k)   talh_uvq at u=v=1 vs talh_xy at x=y=q, k <= n
 *   CONCL1(n)     tlh_xy(n,n) vs lhp_xy(n)
 *   CONCL2(n)     tlh_xy(n,n) under x->a, y->q/a vs 1/(a;q)_n
 *
 * Unknown ids throw std::invalid_argument; parameters outside a check's
 * domain throw std::domain_error (propagated from the formula layer).
 */
CheckReport check_theorem(const std::string& id,
                          const std::map<std::string, long long>& params,
                          long long order);

/**
 * Recurrences and transfer identities.  Ids and parameters:
 *
 *   LU3(n)          lhp_uvq(n) as a Gaussian-weighted sum of shifted
 *                   lhp_uvq(m) under u -> u q^(n-m), v -> 1/v
 *   PROP2(n)        alh_uvq(n) analog, u unshifted
 *   LNREC(n)        lhp_xy(n) = 1/(1-x) lhp_xy(n-1) under x->x^2 y, y->1/x
 *   MAP1(n,k)       tlh_xy_bar(n,2k+1) = x/(1-x) tlh_xy_bar(n-1,2k)[S]
 *   MAP2(n,k)       talh_xy(n,2k+1) = 1/(1-x) talh_xy(n,2k)[S]
 *   L2KRECURR(n,k)  tlh_xy_bar(n,2k) two-term recurrence under S
 *   A2KRECURR(n,k)  talh_xy(n,2k) two-term recurrence (swap form at n=2k-1)
 *   ODDEQ(n,k)      (1-x) talh_xy(n,2k+1) = talh_xy(n-1,2k)
 *                   - x/(1-x) talh_xy(n-1,2k-1)[S]
 *   IRECURR(n,k,i)  last-entry refinement of Lbar(n,2k+1) at last = i,
 *                   from last-entry classes of Lbar(n,2k+1) and Lbar(n,2k)
 *   NEED(n,m)       per-image transfer for l_mu: every mu with exactly m
 *                   positive parts reduces to mu - 1 over m rows
 *   AU3(n,m)        a_mu analog of NEED
 *   LU2(n,m)        weight-only specialization of NEED
 *   AU2(n,m)        weight-only specialization of AU3
 *   AUN(n,k)        every floor-image bucket of A(n,k) matches a_mu_k
 *
 * where S is the substitution x -> x^2 y, y -> 1/x.
 */
CheckReport check_recurrence(const std::string& id,
                             const std::map<std::string, long long>& params,
                             long long order);

/**
 * The two q-Chu-Vandermonde transformations, checked as formal series in q
 * whose coefficients are Laurent monomials in u, v.
 *
 *   QCHU_I(n):  (c/a;q)_n / (c;q)_n
 *                 = sum_m [n,m]_q (a;q)_m/(c;q)_m (-c/a)^m q^(m(m-1)/2)
 *   QCHU_II(n): a^n (c/a;q)_n / (c;q)_n
 *                 = sum_m [n,m]_q (a;q)_m/(c;q)_m (-1)^m q^(m(m+1)/2 - nm)
 *
 * Defaults: QCHU_I  a = -u q / v, c = u^2 q^2  (the tlh_uvq specialization)
 *           QCHU_II a = -v q^-n / u, c = q^-2n / u^2 (its dual).
 * Custom a, c must have coefficient +-1 so that exact inversion is defined.
 * When individual summands carry Laurent tails in q, both sides are scaled
 * by a common q power (recorded in the note) so the comparison stays within
 * power series; the compared window still covers q^0 .. q^order.
 */
CheckReport check_qchu(const std::string& id, long long n, long long order,
                       std::optional<Monomial> a = std::nullopt,
                       std::optional<Monomial> c = std::nullopt);

/** All check ids in catalog order, including the bijection sweeps
 *  BIJ_BME(n), BIJ_BME_NK(n,k), BIJ_THETA(n,k). */
const std::vector<std::string>& all_check_ids();

/** Dispatch any catalogued id.  For BIJ_* the order is the image weight
 *  bound of the sweep. */
CheckReport run_check(const std::string& id,
                      const std::map<std::string, long long>& params,
                      long long order);

struct SuiteConfig {
  long long nmax = 5;             // largest n in every parameter grid
  long long order = 15;           // truncation order for series checks
  long long bijection_weight = 8; // image weight bound for BIJ_* sweeps
  long long irecurr_imax = 6;     // largest last-entry value for IRECURR
  std::string only;               // run a single check id, empty = all
};

/** Run the whole catalog (or one id) over its parameter grid. */
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);

}  // namespace qhall
