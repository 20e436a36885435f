#include "qhall/qseries.hpp"

#include <algorithm>

namespace qhall {

namespace {

struct FlatTerm {
  Exps e;
  Int c;
  long long g;
};

std::vector<FlatTerm> flatten(const GradedSeries& s) {
  std::vector<FlatTerm> v;
  v.reserve(s.terms().size());
  for (const auto& [e, c] : s.terms()) v.push_back({e, c, s.grading().grade(e)});
  return v;
}

}  // namespace

GradedSeries ring_op(RingOp op, const GradedSeries& a, const GradedSeries& b) {
  if (!(a.grading() == b.grading()))
    throw std::invalid_argument("ring_op requires identical gradings");
  const Grading& g = a.grading();
  GradedSeries r(g);
  switch (op) {
    case RingOp::add:
    case RingOp::sub: {
      for (const auto& [e, c] : a.terms()) r.add_term(e, c);
      for (const auto& [e, c] : b.terms())
        r.add_term(e, op == RingOp::add ? c : Int(-c));
      break;
    }
    case RingOp::mul: {
      auto fa = flatten(a);
      auto fb = flatten(b);
      for (const auto& ta : fa) {
        for (const auto& tb : fb) {
          if (ta.g + tb.g > g.bound) continue;
          Exps e;
          for (int i = 0; i < kNumVars; ++i) e[i] = ta.e[i] + tb.e[i];
          r.add_term(e, ta.c * tb.c);
        }
      }
      break;
    }
  }
  return r;
}

GradedSeries geom_inverse(const Monomial& m, const Grading& g) {
  if (m.coeff != 1 && m.coeff != -1)
    throw std::invalid_argument("geom_inverse requires coefficient +1 or -1");
  long long gm = g.grade(m);
  if (gm < 1)
    throw std::invalid_argument("geom_inverse requires grade(m) >= 1");
  GradedSeries r(g);
  Monomial p = Monomial::one();
  for (long long j = 0; j * gm <= g.bound; ++j) {
    r.add_term(p);
    p = p.times(m);
  }
  return r;
}

GradedSeries pochhammer(const Monomial& start, const Monomial& step,
                        std::optional<long long> n, const Grading& g) {
  long long gstep = g.grade(step);
  if (!n.has_value()) {
    if (g.grade(start) < 1 || gstep < 1)
      throw std::invalid_argument(
          "unbounded pochhammer requires grade(start) >= 1 and grade(step) >= "
          "1");
  } else if (*n < 0) {
    throw std::invalid_argument("pochhammer length must be >= 0");
  }
  GradedSeries r = GradedSeries::one(g);
  Monomial f = start;
  for (long long i = 0; !n.has_value() || i < *n; ++i) {
    if (i > 0) f = f.times(step);
    long long gf = g.grade(f);
    if (gf < 0)
      throw std::invalid_argument("pochhammer factor has negative grade");
    if (gf > g.bound) {
      if (!n.has_value()) break;  // grades only increase from here
      continue;                   // this factor is 1 after truncation
    }
    GradedSeries factor = GradedSeries::one(g);
    factor.add_term(f.negate());
    r = mul(r, factor);
  }
  return r;
}

GradedSeries pochhammer_inverse(const Monomial& start, const Monomial& step,
                                std::optional<long long> n, const Grading& g) {
  long long gstep = g.grade(step);
  if (!n.has_value()) {
    if (g.grade(start) < 1 || gstep < 1)
      throw std::invalid_argument(
          "unbounded pochhammer_inverse requires grade(start) >= 1 and "
          "grade(step) >= 1");
  } else if (*n < 0) {
    throw std::invalid_argument("pochhammer length must be >= 0");
  }
  GradedSeries r = GradedSeries::one(g);
  Monomial f = start;
  for (long long i = 0; !n.has_value() || i < *n; ++i) {
    if (i > 0) f = f.times(step);
    long long gf = g.grade(f);
    if (gf < 1)
      throw std::invalid_argument(
          "pochhammer_inverse factor must have grade >= 1");
    if (gf > g.bound) {
      if (!n.has_value()) break;
      continue;
    }
    r = mul(r, geom_inverse(f, g));
  }
  return r;
}

namespace {

/** Dense univariate polynomial (ascending powers) product. */
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

/**
 * Exact quotient of univariate integer polynomials with den[0] == 1,
 * ascending powers; throws std::logic_error if the division leaves a
 * remainder.
 */
std::vector<Int> poly_div_exact(std::vector<Int> num,
                                const std::vector<Int>& den) {
  if (den.empty() || den[0] != 1)
    throw std::logic_error("poly_div_exact requires unit constant term");
  if (num.size() < den.size())
    throw std::logic_error("poly_div_exact: quotient would not be polynomial");
  std::size_t qdeg = num.size() - den.size();
  std::vector<Int> quot(qdeg + 1, Int(0));
  for (std::size_t j = 0; j <= qdeg; ++j) {
    Int qj = num[j];
    quot[j] = qj;
    if (qj == 0) continue;
    for (std::size_t i = 0; i < den.size() && j + i < num.size(); ++i)
      num[j + i] -= qj * den[i];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

/** 1 - T^p as a dense polynomial. */
std::vector<Int> one_minus_power(long long p) {
  std::vector<Int> f(static_cast<std::size_t>(p) + 1, Int(0));
  f[0] = 1;
  f[static_cast<std::size_t>(p)] = -1;
  return f;
}

}  // namespace

GradedSeries gaussian_binomial(long long n, long long m, const Monomial& base,
                               const Grading& g) {
  if (base.coeff != 1)
    throw std::invalid_argument("gaussian_binomial base must have coefficient 1");
  long long gb = g.grade(base);
  if (gb < 1)
    throw std::invalid_argument("gaussian_binomial base must have grade >= 1");
  if (m == 0) return GradedSeries::one(g);
  if (m < 0 || m > n) return GradedSeries::zero(g);

  std::vector<Int> num{Int(1)}, den{Int(1)};
  for (long long i = 0; i < m; ++i)
    num = poly_mul(num, one_minus_power(n - m + 1 + i));
  for (long long i = 1; i <= m; ++i) den = poly_mul(den, one_minus_power(i));
  std::vector<Int> quot = poly_div_exact(std::move(num), den);

  GradedSeries r(g);
  for (std::size_t j = 0; j < quot.size(); ++j) {
    if (quot[j] == 0) continue;
    if (static_cast<long long>(j) * gb > g.bound) break;
    Monomial t = base.pow(static_cast<long long>(j));
    t.coeff = quot[j];
    r.add_term(t);
  }
  return r;
}

GradedSeries q_multinomial(long long n, const std::vector<long long>& parts,
                           const Monomial& base, const Grading& g) {
  long long total = 0;
  for (long long p : parts) {
    if (p < 0)
      throw std::invalid_argument("q_multinomial parts must be nonnegative");
    total += p;
  }
  if (total != n)
    throw std::invalid_argument("q_multinomial parts must sum to n");
  GradedSeries r = GradedSeries::one(g);
  long long partial = 0;
  for (long long p : parts) {
    partial += p;
    if (p == 0) continue;
    r = mul(r, gaussian_binomial(partial, p, base, g));
  }
  return r;
}

Int coefficient(const GradedSeries& s, const Exps& e) {
  if (s.grading().grade(e) > s.grading().bound)
    throw std::domain_error("coefficient query beyond the truncation bound");
  auto it = s.terms().find(e);
  return it == s.terms().end() ? Int(0) : it->second;
}

GradedSeries scale_monomial(const GradedSeries& s, const Monomial& m) {
  if (s.grading().grade(m) < 0)
    throw std::invalid_argument("scale_monomial requires grade(m) >= 0");
  GradedSeries r(s.grading());
  for (const auto& [e, c] : s.terms()) {
    Exps ne;
    for (int i = 0; i < kNumVars; ++i) ne[i] = e[i] + m.e[i];
    r.add_term(ne, c * m.coeff);
  }
  return r;
}

}  // namespace qhall
