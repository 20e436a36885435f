#include "qhall/series.hpp"

#include <algorithm>

namespace qhall {

Var var_from_name(char name) {
  for (int i = 0; i < kNumVars; ++i)
    if (kVarName[i] == name) return static_cast<Var>(i);
  throw std::invalid_argument(std::string("unknown variable name '") + name +
                              "'");
}

Monomial Monomial::var(Var v, int exp, Int c) {
  Monomial m(std::move(c));
  m.e[static_cast<int>(v)] = exp;
  return m;
}

Monomial Monomial::product(std::initializer_list<std::pair<Var, int>> powers,
                           Int c) {
  Monomial m(std::move(c));
  for (const auto& [v, p] : powers) m.e[static_cast<int>(v)] += p;
  return m;
}

bool Monomial::is_one() const {
  return coeff == 1 && is_constant();
}

bool Monomial::is_constant() const {
  return std::all_of(e.begin(), e.end(), [](int p) { return p == 0; });
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r(coeff * o.coeff);
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

Monomial Monomial::negate() const {
  Monomial r = *this;
  r.coeff = -r.coeff;
  return r;
}

Monomial Monomial::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) {
    long long p = static_cast<long long>(e[i]) * n;
    r.e[i] = static_cast<int>(p);
  }
  r.coeff = 1;
  if (coeff == 1) {
    // nothing
  } else if (coeff == -1) {
    if (n % 2 != 0) r.coeff = -1;
  } else {
    Int c = 1;
    for (long long i = 0; i < n; ++i) c *= coeff;
    r.coeff = c;
  }
  return r;
}

Monomial Monomial::inverse() const {
  if (coeff != 1 && coeff != -1)
    throw std::invalid_argument(
        "monomial inverse requires coefficient +1 or -1");
  Monomial r(coeff);  // 1/(±1) == ±1
  for (int i = 0; i < kNumVars; ++i) r.e[i] = -e[i];
  return r;
}

Grading Grading::q_grading(long long bound) {
  return weighted({Var::q}, bound);
}

Grading Grading::xy_grading(long long bound) {
  return weighted({Var::x, Var::y}, bound);
}

Grading Grading::weighted(std::initializer_list<Var> ones, long long bound) {
  if (bound < 0) throw std::invalid_argument("grading bound must be >= 0");
  Grading g;
  g.bound = bound;
  for (Var v : ones) g.weight[static_cast<int>(v)] = 1;
  return g;
}

GradedSeries GradedSeries::one(const Grading& g) {
  GradedSeries s(g);
  s.add_term(Exps{}, 1);
  return s;
}

GradedSeries GradedSeries::from_monomial(const Monomial& m, const Grading& g) {
  GradedSeries s(g);
  s.add_term(m.e, m.coeff);
  return s;
}

void GradedSeries::add_term(const Exps& e, const Int& c) {
  if (c == 0) return;
  for (int i = 0; i < kNumVars; ++i)
    if (e[i] < 0 && g_.weight[i] > 0)
      throw std::invalid_argument(
          std::string("negative exponent on positively weighted variable '") +
          kVarName[i] + "'");
  if (g_.grade(e) > g_.bound) return;  // truncated away
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

std::vector<std::pair<Exps, Int>> GradedSeries::sorted_terms() const {
  std::vector<std::pair<Exps, Int>> v(t_.begin(), t_.end());
  std::stable_sort(v.begin(), v.end(),
                   [this](const auto& a, const auto& b) {
                     long long ga = g_.grade(a.first), gb = g_.grade(b.first);
                     if (ga != gb) return ga < gb;
                     return a.first < b.first;
                   });
  return v;
}

}  // namespace qhall
