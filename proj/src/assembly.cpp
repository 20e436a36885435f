#include "qhall/assembly.hpp"

#include <stdexcept>

#include "qhall/qseries.hpp"

namespace qhall {

FactorProduct& FactorProduct::times(const Monomial& m) {
  pre = pre.times(m);
  return *this;
}

FactorProduct& FactorProduct::numer_poch(const Monomial& start, const Monomial& step,
                                         long long count) {
  Monomial w = start;
  for (long long i = 0; i < count; ++i) {
    one_minus.push_back(w);
    w = w.times(step);
  }
  return *this;
}

FactorProduct& FactorProduct::denom_poch(const Monomial& start, const Monomial& step,
                                         long long count) {
  Monomial w = start;
  for (long long i = 0; i < count; ++i) {
    inv_one_minus.push_back(w);
    w = w.times(step);
  }
  return *this;
}

FactorProduct& FactorProduct::denom_poch_unbounded(const Monomial& start, const Monomial& step) {
  inv_poch_unbounded.emplace_back(start, step);
  return *this;
}

FactorProduct& FactorProduct::times_poly(GradedSeries p) {
  poly.push_back(std::move(p));
  return *this;
}

GradedSeries FactorProduct::expand(const Grading& g) const {
  Monomial head = pre;
  std::vector<Monomial> num, den;

  for (Monomial w : one_minus) {
    if (g.grade(w.e) < 0) {  // 1 - w = -w (1 - 1/w)
      head = head.times(w.negate());
      w = w.inverse();
    }
    num.push_back(w);
  }
  for (Monomial w : inv_one_minus) {
    long long gr = g.grade(w.e);
    if (gr == 0)
      throw std::domain_error("FactorProduct: denominator factor with grade-zero argument");
    if (gr < 0) {  // 1/(1 - w) = -w^-1 / (1 - w^-1)
      w = w.inverse();
      head = head.times(w.negate());
    }
    den.push_back(w);
  }
  if (g.grade(head.e) < 0)
    throw std::domain_error("FactorProduct: normalized prefactor has negative grade");

  GradedSeries s = GradedSeries::from_monomial(head, g);
  for (const Monomial& w : num) {
    GradedSeries f = GradedSeries::one(g);
    f.add_term(w.negate());
    s = mul(s, f);
  }
  for (const GradedSeries& p : poly) s = mul(s, p);
  for (const Monomial& w : den) s = mul(s, geom_inverse(w, g));
  for (const auto& [start, step] : inv_poch_unbounded)
    s = mul(s, pochhammer_inverse(start, step, std::nullopt, g));
  return s;
}

}  // namespace qhall
