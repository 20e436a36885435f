#include "qhall/closedform.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qhall/assembly.hpp"
#include "qhall/enumerate.hpp"
#include "qhall/qseries.hpp"
#include "qhall/text_io.hpp"

namespace qhall {

namespace {

const std::map<std::string, ClosedFormId> kNames = {
    {"lhp_q", ClosedFormId::lhp_q},
    {"lhp_xy", ClosedFormId::lhp_xy},
    {"lhp_uvq", ClosedFormId::lhp_uvq},
    {"alh_uvq", ClosedFormId::alh_uvq},
    {"tlh_uvq", ClosedFormId::tlh_uvq},
    {"tlh_uvq_bar", ClosedFormId::tlh_uvq_bar},
    {"talh_uvq", ClosedFormId::talh_uvq},
    {"tlh_xy", ClosedFormId::tlh_xy},
    {"tlh_xy_bar", ClosedFormId::tlh_xy_bar},
    {"talh_xy", ClosedFormId::talh_xy},
    {"r_nk", ClosedFormId::r_nk},
    {"r_exact_t", ClosedFormId::r_exact_t},
    {"lbar_nk_q", ClosedFormId::lbar_nk_q},
    {"l_mu", ClosedFormId::l_mu},
    {"a_mu", ClosedFormId::a_mu},
    {"a_mu_k", ClosedFormId::a_mu_k},
    {"fin3_rhs", ClosedFormId::fin3_rhs},
};

Monomial qp(long long e) { return Monomial::var(Var::q, static_cast<int>(e)); }

/** One summand: prefactor times rising-factorial blocks times binomial polys. */
struct Term {
  Monomial pre = Monomial::one();
  std::vector<std::tuple<Monomial, Monomial, long long>> num_poch, den_poch;
  std::vector<std::pair<Monomial, Monomial>> den_poch_unbounded;
  std::vector<std::tuple<long long, long long, Monomial>> gauss;
  std::vector<std::pair<std::vector<long long>, Monomial>> multinom;
};

GradedSeries expand_terms(const std::vector<Term>& terms, const std::array<Monomial, 8>& sub,
                          const Grading& g) {
  GradedSeries acc = GradedSeries::zero(g);
  for (const Term& t : terms) {
    FactorProduct fp;
    fp.times(apply_subst(t.pre, sub));
    for (const auto& [a, s, c] : t.num_poch)
      fp.numer_poch(apply_subst(a, sub), apply_subst(s, sub), c);
    for (const auto& [a, s, c] : t.den_poch)
      fp.denom_poch(apply_subst(a, sub), apply_subst(s, sub), c);
    for (const auto& [a, s] : t.den_poch_unbounded)
      fp.denom_poch_unbounded(apply_subst(a, sub), apply_subst(s, sub));
    for (const auto& [nn, mm, base] : t.gauss)
      fp.times_poly(gaussian_binomial(nn, mm, apply_subst(base, sub), g));
    for (const auto& [parts, base] : t.multinom) {
      long long total = 0;
      for (long long p : parts) total += p;
      fp.times_poly(q_multinomial(total, parts, apply_subst(base, sub), g));
    }
    acc = add(acc, fp.expand(g));
  }
  return acc;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error("closed_form: " + what);
}

/** Pad mu with zeros to length len; validate it is a nonincreasing
 *  nonnegative sequence of at most len entries. */
std::vector<int> padded_image(const std::vector<int>& mu, long long len, const char* name) {
  require(static_cast<long long>(mu.size()) <= len,
          std::string(name) + ": image longer than the available positions");
  for (size_t i = 0; i < mu.size(); ++i) {
    require(mu[i] >= 0, std::string(name) + ": negative image entry");
    require(i == 0 || mu[i - 1] >= mu[i], std::string(name) + ": image must be nonincreasing");
  }
  std::vector<int> p(mu);
  p.resize(static_cast<size_t>(len), 0);
  return p;
}

std::vector<long long> value_multiplicities(const std::vector<int>& padded) {
  int top = 0;
  for (int v : padded) top = std::max(top, v);
  std::vector<long long> m(static_cast<size_t>(top) + 1, 0);
  for (int v : padded) ++m[static_cast<size_t>(v)];
  return m;
}

Term tlh_uvq_term(long long n, long long m) {
  Term t;
  t.pre = Monomial::product({{Var::u, static_cast<int>(m)},
                             {Var::v, static_cast<int>(m)},
                             {Var::q, static_cast<int>(m * (m + 1) / 2)}});
  t.gauss.emplace_back(n, m, qp(1));
  t.num_poch.emplace_back(
      Monomial::product({{Var::u, 1}, {Var::v, -1}, {Var::q, static_cast<int>(n - m + 1)}},
                        Int(-1)),
      qp(1), m);
  t.den_poch.emplace_back(Monomial::product({{Var::u, 2}, {Var::q, static_cast<int>(2 * n - m + 1)}}),
                          qp(1), m);
  return t;
}

Term tlh_xy_bar_term(long long n, long long k) {
  long long hu = (k + 1) / 2, hd = k / 2;
  Term t;
  t.pre = Monomial::product(
      {{Var::x, static_cast<int>(hu * (hd + 1))}, {Var::y, static_cast<int>(hu * hd)}});
  t.gauss.emplace_back(n - hu, hd, Monomial::product({{Var::x, 1}, {Var::y, 1}}));
  t.den_poch.emplace_back(Monomial::var(Var::x), Monomial::product({{Var::x, 1}, {Var::y, 1}}),
                          hu);
  t.den_poch.emplace_back(
      Monomial::product({{Var::x, static_cast<int>(n)}, {Var::y, static_cast<int>(n - 1)}}),
      Monomial::product({{Var::x, -1}, {Var::y, -1}}), hd);
  return t;
}

}  // namespace

std::string closed_form_name(ClosedFormId id) {
  for (const auto& [name, v] : kNames)
    if (v == id) return name;
  throw std::logic_error("closed_form_name: unknown id");
}

ClosedFormId closed_form_from_name(const std::string& name) {
  auto it = kNames.find(name);
  if (it == kNames.end())
    throw std::invalid_argument("closed_form_from_name: unknown formula '" + name + "'");
  return it->second;
}

std::array<Monomial, 8> identity_subst() {
  std::array<Monomial, 8> s{};
  for (size_t v = 0; v < 8; ++v) s[v] = Monomial::var(static_cast<Var>(v));
  return s;
}

Monomial apply_subst(const Monomial& m, const std::array<Monomial, 8>& subst) {
  Monomial out{m.coeff, Exps{}};
  for (size_t v = 0; v < 8; ++v)
    if (m.e[v] != 0) out = out.times(subst[v].pow(m.e[v]));
  return out;
}

ClosedForm ClosedForm::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  size_t open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw std::invalid_argument("ClosedForm: expected name(params) in '" + text + "'");
  ClosedForm cf;
  cf.id = closed_form_from_name(s.substr(0, open));
  std::string body = s.substr(open + 1, s.size() - open - 2);

  std::string params = body, substs;
  size_t semi = body.find(';');
  if (semi != std::string::npos) {
    params = body.substr(0, semi);
    substs = body.substr(semi + 1);
  }

  // split on commas at parenthesis depth zero
  auto split_top = [](const std::string& v) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : v) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  };

  for (const std::string& p : split_top(params)) {
    size_t eq = p.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("ClosedForm: expected key=value, got '" + p + "'");
    std::string key = p.substr(0, eq), value = p.substr(eq + 1);
    if (key == "mu") {
      cf.mu = parse_parts(value);
    } else if (key == "len_k") {
      cf.len_k = value == "1" || value == "true";
    } else {
      long long v = std::stoll(value);
      if (key == "n")
        cf.n = v;
      else if (key == "k")
        cf.k = v;
      else if (key == "t")
        cf.t = v;
      else if (key == "j")
        cf.j = v;
      else if (key == "l")
        cf.l = v;
      else
        throw std::invalid_argument("ClosedForm: unknown parameter '" + key + "'");
    }
  }

  if (!substs.empty()) {
    for (const std::string& p : split_top(substs)) {
      size_t arrow = p.find("->");
      if (arrow == std::string::npos || arrow != 1)
        throw std::invalid_argument("ClosedForm: expected v->monomial, got '" + p + "'");
      Var v = var_from_name(p[0]);
      cf.subst[static_cast<size_t>(v)] = parse_monomial(p.substr(arrow + 2));
    }
  }
  return cf;
}

std::string ClosedForm::to_text() const {
  std::ostringstream os;
  os << closed_form_name(id) << '(';
  auto mu_text = [&] {
    std::ostringstream m;
    m << "mu=(";
    for (size_t i = 0; i < mu.size(); ++i) {
      if (i) m << ',';
      m << mu[i];
    }
    m << ')';
    return m.str();
  };
  switch (id) {
    case ClosedFormId::lhp_q:
    case ClosedFormId::lhp_xy:
    case ClosedFormId::lhp_uvq:
    case ClosedFormId::alh_uvq:
      os << "n=" << n;
      break;
    case ClosedFormId::tlh_uvq:
    case ClosedFormId::tlh_uvq_bar:
    case ClosedFormId::talh_uvq:
    case ClosedFormId::tlh_xy:
    case ClosedFormId::tlh_xy_bar:
    case ClosedFormId::talh_xy:
    case ClosedFormId::r_nk:
    case ClosedFormId::lbar_nk_q:
      os << "n=" << n << ",k=" << k;
      break;
    case ClosedFormId::r_exact_t:
      os << "n=" << n << ",t=" << t << ",j=" << j << ",l=" << l;
      break;
    case ClosedFormId::l_mu:
    case ClosedFormId::a_mu:
      os << mu_text() << ",n=" << n;
      break;
    case ClosedFormId::a_mu_k:
      os << mu_text() << ",n=" << n << ",k=" << k;
      break;
    case ClosedFormId::fin3_rhs:
      os << "k=" << k << ",len_k=" << (len_k ? 1 : 0);
      break;
  }
  std::array<Monomial, 8> id_subst = identity_subst();
  std::string tail;
  for (size_t v = 0; v < 8; ++v) {
    if (subst[v] == id_subst[v]) continue;
    if (!tail.empty()) tail += ',';
    tail += std::string(1, kVarName[v]) + "->" + monomial_to_text(subst[v]);
  }
  if (!tail.empty()) os << ';' << tail;
  os << ')';
  return os.str();
}

GradedSeries closed_form(const ClosedForm& cf, const Grading& g) {
  std::vector<Term> terms;
  const long long n = cf.n, k = cf.k;

  switch (cf.id) {
    case ClosedFormId::lhp_q: {
      require(n >= 0, "lhp_q: need n >= 0");
      Term t;
      t.den_poch.emplace_back(qp(1), qp(2), n);
      terms.push_back(t);
      break;
    }
    case ClosedFormId::lhp_xy: {
      require(n >= 0, "lhp_xy: need n >= 0");
      Term t;
      t.den_poch.emplace_back(Monomial::var(Var::x),
                              Monomial::product({{Var::x, 1}, {Var::y, 1}}), n);
      terms.push_back(t);
      break;
    }
    case ClosedFormId::lhp_uvq:
    case ClosedFormId::alh_uvq: {
      require(n >= 0, "need n >= 0");
      Term t;
      t.num_poch.emplace_back(Monomial::product({{Var::u, 1}, {Var::v, 1}, {Var::q, 1}}, Int(-1)),
                              qp(1), n);
      long long start = cf.id == ClosedFormId::lhp_uvq ? n + 1 : 2;
      t.den_poch.emplace_back(Monomial::product({{Var::u, 2}, {Var::q, static_cast<int>(start)}}),
                              qp(1), n);
      terms.push_back(t);
      break;
    }
    case ClosedFormId::tlh_uvq: {
      require(0 <= k && k <= n, "tlh_uvq: need 0 <= k <= n");
      for (long long m = 0; m <= k; ++m) terms.push_back(tlh_uvq_term(n, m));
      break;
    }
    case ClosedFormId::tlh_uvq_bar: {
      require(0 <= k && k <= n, "tlh_uvq_bar: need 0 <= k <= n");
      terms.push_back(tlh_uvq_term(n, k));
      break;
    }
    case ClosedFormId::talh_uvq: {
      require(0 <= k && k <= n, "talh_uvq: need 0 <= k <= n");
      Term t;
      t.gauss.emplace_back(n, k, qp(1));
      t.num_poch.emplace_back(
          Monomial::product({{Var::u, 1}, {Var::v, 1}, {Var::q, static_cast<int>(n - k + 1)}},
                            Int(-1)),
          qp(1), k);
      t.den_poch.emplace_back(
          Monomial::product({{Var::u, 2}, {Var::q, static_cast<int>(2 * (n - k + 1))}}), qp(1),
          k);
      terms.push_back(t);
      break;
    }
    case ClosedFormId::tlh_xy: {
      require(0 <= k && k <= n, "tlh_xy: need 0 <= k <= n");
      for (long long m = 0; m <= k; ++m) terms.push_back(tlh_xy_bar_term(n, m));
      break;
    }
    case ClosedFormId::tlh_xy_bar: {
      require(0 <= k && k <= n, "tlh_xy_bar: need 0 <= k <= n");
      terms.push_back(tlh_xy_bar_term(n, k));
      break;
    }
    case ClosedFormId::talh_xy: {
      require(0 <= k && k <= n + 1, "talh_xy: need 0 <= k <= n+1");
      long long hu = (k + 1) / 2, hd = k / 2;
      Term t;
      t.gauss.emplace_back(n, hd, Monomial::product({{Var::x, 1}, {Var::y, 1}}));
      t.den_poch.emplace_back(Monomial::var(Var::x),
                              Monomial::product({{Var::x, 1}, {Var::y, 1}}), hu);
      t.den_poch.emplace_back(Monomial::product({{Var::x, static_cast<int>(n - k + 1)},
                                                 {Var::y, static_cast<int>(n - k + 2)}}),
                              Monomial::product({{Var::x, 1}, {Var::y, 1}}), hd);
      terms.push_back(t);
      break;
    }
    case ClosedFormId::r_nk: {
      require(0 <= k && k <= n, "r_nk: need 0 <= k <= n");
      long long hu = (k + 1) / 2, hd = k / 2;
      for (long long i = 0; i <= hd; ++i) {
        Term t;
        t.pre = qp(i * (2 * hu + 1));
        t.gauss.emplace_back(n - k - 1 + i, i, qp(2));
        t.den_poch.emplace_back(qp(1), qp(2), hu);
        t.den_poch.emplace_back(qp(2 * n - 1), qp(-2), hd);
        terms.push_back(t);
      }
      break;
    }
    case ClosedFormId::r_exact_t: {
      require(cf.t >= 0, "r_exact_t: need t >= 0");
      require(0 <= cf.j && cf.j <= cf.l && cf.l <= n, "r_exact_t: need 0 <= j <= l <= n");
      Term t;
      t.pre = qp(cf.t * (2 * cf.j + 1));
      t.gauss.emplace_back(cf.l - cf.j - 1 + cf.t, cf.t, qp(2));
      t.den_poch.emplace_back(qp(1), qp(2), cf.j);
      t.den_poch.emplace_back(qp(2 * n - 1), qp(-2), n - cf.l);
      terms.push_back(t);
      break;
    }
    case ClosedFormId::lbar_nk_q: {
      require(0 <= k && k <= n, "lbar_nk_q: need 0 <= k <= n");
      long long hu = (k + 1) / 2, hd = k / 2;
      Term t;
      t.pre = qp(k * (k + 1) / 2);
      t.gauss.emplace_back(n - hu, hd, qp(2));
      t.den_poch.emplace_back(qp(1), qp(2), hu);
      t.den_poch.emplace_back(qp(2 * n - 1), qp(-2), hd);
      terms.push_back(t);
      break;
    }
    case ClosedFormId::l_mu: {
      std::vector<int> p = padded_image(cf.mu, n, "l_mu");
      std::vector<long long> m = value_multiplicities(p);
      long long e0 = 0;
      for (long long i = 1; i <= n; ++i) e0 += (n - i + 1) * p[static_cast<size_t>(i - 1)];
      long long e = n * (n + 1) / 2;
      for (long long mj : m) e -= mj * (mj + 1) / 2;
      Term t;
      t.pre = qp(e0 - e);
      t.multinom.emplace_back(m, qp(1));
      terms.push_back(t);
      break;
    }
    case ClosedFormId::a_mu: {
      std::vector<int> p = padded_image(cf.mu, n, "a_mu");
      long long e0 = 0;
      for (long long i = 1; i <= n; ++i) e0 += i * p[static_cast<size_t>(i - 1)];
      Term t;
      t.pre = qp(e0);
      t.multinom.emplace_back(value_multiplicities(p), qp(1));
      terms.push_back(t);
      break;
    }
    case ClosedFormId::a_mu_k: {
      require(0 <= k && k <= n, "a_mu_k: need 0 <= k <= n");
      std::vector<int> p = padded_image(cf.mu, k, "a_mu_k");
      long long wt = 0, e0 = 0;
      for (long long i = 1; i <= k; ++i) {
        wt += p[static_cast<size_t>(i - 1)];
        e0 += i * p[static_cast<size_t>(i - 1)];
      }
      Term t;
      t.pre = qp((n - k) * wt + e0);
      t.gauss.emplace_back(n, k, qp(1));
      t.multinom.emplace_back(value_multiplicities(p), qp(1));
      terms.push_back(t);
      break;
    }
    case ClosedFormId::fin3_rhs: {
      require(k >= 0, "fin3_rhs: need k >= 0");
      Term t;
      t.pre = Monomial::product(
          {{Var::z, static_cast<int>(k)}, {Var::q, static_cast<int>(k * (2 * k - 1))}});
      Monomial zq = Monomial::product({{Var::z, 1}, {Var::q, 1}});
      if (cf.len_k)
        t.den_poch.emplace_back(zq, qp(2), k);
      else
        t.den_poch_unbounded.emplace_back(zq, qp(2));
      t.den_poch.emplace_back(qp(2), qp(2), k);
      terms.push_back(t);
      break;
    }
  }
  return expand_terms(terms, cf.subst, g);
}

}  // namespace qhall
