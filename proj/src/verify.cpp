#include "qhall/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qhall/assembly.hpp"
#include "qhall/bijections.hpp"
#include "qhall/closedform.hpp"
#include "qhall/enumerate.hpp"
#include "qhall/qseries.hpp"
#include "qhall/text_io.hpp"

namespace qhall {

namespace {

using Params = std::map<std::string, long long>;
using Assign = std::vector<std::pair<std::string, Var>>;
using Echo = std::vector<std::pair<std::string, long long>>;

const Assign kWq = {{"weight", Var::q}};
const Assign kXy = {{"odd_index_sum", Var::x}, {"even_index_sum", Var::y}};
const Assign kCeilUvq = {{"weight", Var::q},
                         {"ceil_weight", Var::u},
                         {"ceil_odd_count", Var::v}};
const Assign kFloorUvq = {{"weight", Var::q},
                          {"floor_weight", Var::u},
                          {"floor_odd_count", Var::v}};

long long need(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter '" + key + "'");
  return it->second;
}

long long need_or(const Params& p, const std::string& key, long long dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : it->second;
}

Grading gq(long long order) { return Grading::weighted({Var::q}, order); }

int ii(long long v) { return static_cast<int>(v); }

FamilySpec fam_of(FamilySpec::Kind kind, long long n, long long k) {
  FamilySpec f;
  f.kind = kind;
  f.n = ii(n);
  f.k = ii(k);
  return f;
}
FamilySpec famL(long long n, long long k) { return fam_of(FamilySpec::Kind::L, n, k); }
FamilySpec famLbar(long long n, long long k, long long last = -1) {
  FamilySpec f = fam_of(FamilySpec::Kind::Lbar, n, k);
  f.last = ii(last);
  return f;
}
FamilySpec famA(long long n, long long k) { return fam_of(FamilySpec::Kind::A, n, k); }
FamilySpec famR(long long n, long long k) { return fam_of(FamilySpec::Kind::R, n, k); }
FamilySpec famD(long long k) { return fam_of(FamilySpec::Kind::D, 0, k); }
FamilySpec famPlen(long long k) { return fam_of(FamilySpec::Kind::P_len, 0, k); }
FamilySpec famPmax(long long k) { return fam_of(FamilySpec::Kind::Pmax, 0, k); }

std::array<Monomial, 8> subst_of(
    std::initializer_list<std::pair<Var, Monomial>> entries) {
  auto s = identity_subst();
  for (const auto& [v, m] : entries) s[static_cast<std::size_t>(v)] = m;
  return s;
}

std::array<Monomial, 8> subst_u1v1() {
  return subst_of({{Var::u, Monomial::one()}, {Var::v, Monomial::one()}});
}

/** x -> x^2 y, y -> 1/x: the index-shift substitution of the recurrences. */
std::array<Monomial, 8> subst_shift_xy() {
  return subst_of({{Var::x, Monomial::product({{Var::x, 2}, {Var::y, 1}})},
                   {Var::y, Monomial::var(Var::x, -1)}});
}

GradedSeries closed(ClosedFormId id, long long n, long long k, const Grading& g,
                    const std::array<Monomial, 8>& subst = identity_subst()) {
  ClosedForm c;
  c.id = id;
  c.n = n;
  c.k = k;
  c.subst = subst;
  return closed_form(c, g);
}

struct Side {
  std::string name;
  GradedSeries s;
};

/** Compare side 0 against every other side; fail on the first mismatch. */
CheckReport settle(const std::string& id, Echo echo, long long order,
                   const std::vector<Side>& sides, std::string note = "") {
  CheckReport r;
  r.check_id = id;
  r.params = std::move(echo);
  r.order = order;
  r.note = std::move(note);
  r.pass = true;
  for (std::size_t i = 1; i < sides.size(); ++i) {
    auto w = first_difference(sides[0].s, sides[i].s);
    if (!w) continue;
    r.pass = false;
    r.witness = *w;
    std::string d = sides[0].name + " vs " + sides[i].name + " disagree";
    r.note = r.note.empty() ? d : r.note + "; " + d;
    break;
  }
  return r;
}

std::string parts_text(const std::vector<int>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::string exps_text(const Exps& e) {
  return monomial_to_text(Monomial(Int(1), e));
}

template <typename F>
CheckReport timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport r = f();
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

// ---------------------------------------------------------------------------
// Theorem checks
// ---------------------------------------------------------------------------

CheckReport theorem_impl(const std::string& id, const Params& p, long long order) {
  if (id == "EQ1") {
    long long n = need(p, "n");
    Grading g = gq(order);
    return settle(id, {{"n", n}}, order,
                  {{"enumeration", gf_oracle(famL(n, n), kWq, g)},
                   {"closed form", closed(ClosedFormId::lhp_q, n, 0, g)}});
  }
  if (id == "EQ2") {
    long long n = need(p, "n");
    Grading g = Grading::xy_grading(order);
    return settle(id, {{"n", n}}, order,
                  {{"enumeration", gf_oracle(famL(n, n), kXy, g)},
                   {"closed form", closed(ClosedFormId::lhp_xy, n, 0, g)}});
  }
  if (id == "EQ3") {
    long long n = need(p, "n");
    Grading g = gq(order);
    return settle(id, {{"n", n}}, order,
                  {{"enumeration", gf_oracle(famL(n, n), kCeilUvq, g)},
                   {"closed form", closed(ClosedFormId::lhp_uvq, n, 0, g)}});
  }
  if (id == "EQ4") {
    long long n = need(p, "n");
    Grading g = gq(order);
    return settle(id, {{"n", n}}, order,
                  {{"enumeration", gf_oracle(famA(n, n), kFloorUvq, g)},
                   {"closed form", closed(ClosedFormId::alh_uvq, n, 0, g)}});
  }
  if (id == "EQ5") {
    long long n = need(p, "n");
    Grading g = gq(order);
    return settle(id, {{"n", n}}, order,
                  {{"enumeration", gf_oracle(famA(n, n), kWq, g)},
                   {"closed form at u=v=1",
                    closed(ClosedFormId::alh_uvq, n, 0, g, subst_u1v1())}});
  }
  if (id == "EQ6") {
    long long n = need(p, "n"), k = need(p, "k");
    Grading g = gq(order);
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"enumeration", gf_oracle(famL(n, k), kCeilUvq, g)},
                   {"closed sum", closed(ClosedFormId::tlh_uvq, n, k, g)}});
  }
  if (id == "EQ7") {
    long long n = need(p, "n"), k = need(p, "k");
    Grading g = gq(order);
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"enumeration", gf_oracle(famA(n, k), kFloorUvq, g)},
                   {"closed form", closed(ClosedFormId::talh_uvq, n, k, g)}});
  }
  if (id == "EQ8") {
    long long n = need(p, "n"), k = need(p, "k");
    Grading g = Grading::xy_grading(order);
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"enumeration", gf_oracle(famL(n, k), kXy, g)},
                   {"closed sum", closed(ClosedFormId::tlh_xy, n, k, g)}});
  }
  if (id == "EQ9") {
    long long n = need(p, "n"), k = need(p, "k");
    Grading g = Grading::xy_grading(order);
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"enumeration", gf_oracle(famA(n, k), kXy, g)},
                   {"closed form", closed(ClosedFormId::talh_xy, n, k, g)}});
  }
  if (id == "EQ10") {
    long long n = need(p, "n");
    Grading g = Grading::xy_grading(order);
    return settle(id, {{"n", n}}, order,
                  {{"enumeration", gf_oracle(famA(n, n), kXy, g)},
                   {"closed form", closed(ClosedFormId::talh_xy, n, n, g)}});
  }
  if (id == "RTLH_BAR") {
    long long n = need(p, "n"), k = need(p, "k");
    Grading g = gq(order);
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"enumeration", gf_oracle(famLbar(n, k), kCeilUvq, g)},
                   {"closed form", closed(ClosedFormId::tlh_uvq_bar, n, k, g)}});
  }
  if (id == "OETLH_BAR") {
    long long n = need(p, "n"), k = need(p, "k");
    Grading g = Grading::xy_grading(order);
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"enumeration", gf_oracle(famLbar(n, k), kXy, g)},
                   {"closed form", closed(ClosedFormId::tlh_xy_bar, n, k, g)}});
  }
  if (id == "COMBI") {
    long long n = need(p, "n"), k = need(p, "k");
    Grading g = gq(order);
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"truncated family", gf_oracle(famL(n, k), kWq, g)},
                   {"odd-interval family", gf_oracle(famR(n, k), kWq, g)},
                   {"closed sum at u=v=1",
                    closed(ClosedFormId::tlh_uvq, n, k, g, subst_u1v1())}});
  }
  if (id == "DIFF") {
    long long n = need(p, "n"), k = need(p, "k");
    if (k < 1) throw std::domain_error("DIFF needs k >= 1");
    Grading g = gq(order);
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"exact-length enumeration", gf_oracle(famLbar(n, k), kWq, g)},
                   {"closed form", closed(ClosedFormId::lbar_nk_q, n, k, g)},
                   {"difference of truncations",
                    sub(gf_oracle(famL(n, k), kWq, g),
                        gf_oracle(famL(n, k - 1), kWq, g))}});
  }
  if (id == "IDENT1") {
    long long n = need(p, "n"), k = need(p, "k");
    Grading g = gq(order);
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"closed sum at u=v=1",
                    closed(ClosedFormId::tlh_uvq, n, k, g, subst_u1v1())},
                   {"odd-interval closed form", closed(ClosedFormId::r_nk, n, k, g)}});
  }
  if (id == "IDENT2") {
    long long n = need(p, "n"), k = need(p, "k");
    Grading g = gq(order);
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"closed term at u=v=1",
                    closed(ClosedFormId::tlh_uvq_bar, n, k, g, subst_u1v1())},
                   {"exact-length closed form",
                    closed(ClosedFormId::lbar_nk_q, n, k, g)}});
  }
  if (id == "IDENT2LIM") {
    long long k = need(p, "k");
    if (k < 0) throw std::domain_error("IDENT2LIM needs k >= 0");
    Grading g = gq(order);
    Monomial stair = Monomial::var(Var::q, ii(k * (k + 1) / 2));
    FactorProduct f1;
    f1.times(stair).denom_poch(Monomial::var(Var::q), Monomial::var(Var::q), k);
    FactorProduct f2;
    f2.times(stair)
        .denom_poch(Monomial::var(Var::q), Monomial::var(Var::q, 2), (k + 1) / 2)
        .denom_poch(Monomial::var(Var::q, 2), Monomial::var(Var::q, 2), k / 2);
    return settle(id, {{"k", k}}, order,
                  {{"staircase form", f1.expand(g)},
                   {"split-parity form", f2.expand(g)},
                   {"distinct-parts enumeration", gf_oracle(famD(k), kWq, g)}});
  }
  if (id == "FIN3") {
    long long k = need(p, "k");
    long long unbounded = need_or(p, "unbounded", 0);
    if (k < 1) throw std::domain_error("FIN3 needs k >= 1");
    Grading g = gq(order);
    Assign zdiff = {{"weight", Var::q}, {"odd_even_diff", Var::z}};
    GradedSeries lhs = add(gf_oracle(famD(2 * k - 1), zdiff, g),
                           gf_oracle(famD(2 * k), zdiff, g));
    ClosedForm c;
    c.id = ClosedFormId::fin3_rhs;
    c.k = k;
    c.len_k = (unbounded == 0);
    GradedSeries rhs = closed_form(c, g);
    // Independent oracle: odd-part partitions whose largest staircase-fitting
    // prefix has exactly k rows, refined by the number of parts.
    GradedSeries square = GradedSeries::zero(g);
    for (const auto& seq : gen_odd_parts(ii(order), order)) {
      long long t = 0;
      long long len = static_cast<long long>(seq.parts.size());
      while (t < len && seq.parts[static_cast<std::size_t>(t)] >= 2 * (t + 1) - 1) ++t;
      if (t != k) continue;
      Exps e{};
      e[static_cast<std::size_t>(Var::z)] = ii(len);
      e[static_cast<std::size_t>(Var::q)] = ii(statistics(seq).weight);
      square.add_term(e, Int(1));
    }
    std::string note;
    if (unbounded == 0) {
      ClosedForm cu = c;
      cu.len_k = false;
      if (auto w = first_difference(lhs, closed_form(cu, g)))
        note = "unbounded first product differs first at " + exps_text(w->exps);
      else
        note = "unbounded first product agrees within this order";
    }
    return settle(id, {{"k", k}, {"unbounded", unbounded}}, order,
                  {{"distinct-length enumeration", lhs},
                   {"closed form", rhs},
                   {"staircase-prefix enumeration", square}},
                  note);
  }
  if (id == "REF1") {
    long long k = need(p, "k");
    if (k < 0) throw std::domain_error("REF1 needs k >= 0");
    long long nsur = order + k + 1;
    Grading g = gq(order);
    GradedSeries stair_sum = GradedSeries::zero(g);
    GradedSeries oracle_sum = GradedSeries::zero(g);
    for (long long m = 0; m <= k; ++m) {
      FactorProduct f;
      f.times(Monomial::var(Var::q, ii(m * (m + 1) / 2)))
          .denom_poch(Monomial::var(Var::q), Monomial::var(Var::q), m);
      stair_sum = add(stair_sum, f.expand(g));
      oracle_sum = add(oracle_sum, gf_oracle(famD(m), kWq, g));
    }
    return settle(id, {{"k", k}}, order,
                  {{"staircase sum", stair_sum},
                   {"distinct-parts sum", oracle_sum},
                   {"odd-interval enumeration", gf_oracle(famR(nsur, k), kWq, g)},
                   {"odd-interval closed form",
                    closed(ClosedFormId::r_nk, nsur, k, g)}},
                  "stable regime n=" + std::to_string(nsur));
  }
  if (id == "REF2") {
    long long k = need(p, "k");
    if (k < 0) throw std::domain_error("REF2 needs k >= 0");
    long long hu = (k + 1) / 2, hd = k / 2, shift = hu - hd;
    long long nsur = order + k + 1;
    Grading g = gq(order);
    Monomial qshift = Monomial::var(Var::q, ii(shift));
    FactorProduct f;
    f.times(Monomial::var(Var::q, ii(k * (k + 1) / 2)))
        .denom_poch(Monomial::var(Var::q), Monomial::var(Var::q), k);
    FamilySpec rt = fam_of(FamilySpec::Kind::Rt, nsur, 0);
    rt.t = ii(hd);
    rt.j = ii(hu);
    rt.l = ii(nsur);
    ClosedForm ce;
    ce.id = ClosedFormId::r_exact_t;
    ce.n = nsur;
    ce.t = hd;
    ce.j = hu;
    ce.l = nsur;
    return settle(id, {{"k", k}}, order,
                  {{"distinct-parts enumeration", gf_oracle(famD(k), kWq, g)},
                   {"shifted exact-t enumeration",
                    scale_monomial(gf_oracle(rt, kWq, g), qshift)},
                   {"staircase form", f.expand(g)},
                   {"shifted exact-t closed form",
                    scale_monomial(closed_form(ce, g), qshift)}},
                  "stable regime n=" + std::to_string(nsur));
  }
  if (id == "REF2PLUS") {
    long long n = need(p, "n"), k = need(p, "k");
    long long hu = (k + 1) / 2, hd = k / 2, shift = hu - hd;
    Grading g = gq(order);
    GradedSeries odd_gf = GradedSeries::zero(g);
    if (2 * n - 1 >= 1) {
      long long big_lo = 2 * hu + 1;
      long long big_hi = std::min(2 * n - 2 * hd + 1, 2 * n - 1);
      long long small_hi = 2 * n - 2 * hd - 1;
      for (const auto& seq : gen_odd_parts(ii(2 * n - 1), order)) {
        long long in_big = 0, in_small = 0;
        for (int v : seq.parts) {
          if (v >= big_lo && v <= big_hi) ++in_big;
          if (v >= big_lo && v <= small_hi) ++in_small;
        }
        if (in_big >= hd && in_small <= hd)
          odd_gf.add_term(Monomial::var(Var::q, ii(statistics(seq).weight)));
      }
    } else if (k == 0) {
      odd_gf = GradedSeries::one(g);
    }
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"exact-length enumeration", gf_oracle(famLbar(n, k), kWq, g)},
                   {"closed form", closed(ClosedFormId::lbar_nk_q, n, k, g)},
                   {"shifted odd-interval enumeration",
                    scale_monomial(odd_gf, Monomial::var(Var::q, ii(shift)))}});
  }
  if (id == "TRANSPOSE") {
    long long k = need(p, "k");
    if (k < 0) throw std::domain_error("TRANSPOSE needs k >= 0");
    Grading g = gq(order);
    Assign zdiff = {{"weight", Var::q}, {"odd_even_diff", Var::z}};
    Assign zodd = {{"weight", Var::q}, {"odd_parts", Var::z}};
    FactorProduct f;
    f.denom_poch(Monomial::product({{Var::z, 1}, {Var::q, 1}}),
                 Monomial::var(Var::q, 2), (k + 1) / 2)
        .denom_poch(Monomial::var(Var::q, 2), Monomial::var(Var::q, 2), k / 2);
    return settle(id, {{"k", k}}, order,
                  {{"fixed-length enumeration", gf_oracle(famPlen(k), zdiff, g)},
                   {"closed product", f.expand(g)},
                   {"bounded-part enumeration", gf_oracle(famPmax(k), zodd, g)}});
  }
  if (id == "AIDENT") {
    long long n = need(p, "n"), k = need(p, "k");
    if (k > n) throw std::domain_error("AIDENT needs k <= n");
    Grading g = gq(order);
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"(u,v,q) form at u=v=1",
                    closed(ClosedFormId::talh_uvq, n, k, g, subst_u1v1())},
                   {"(x,y) form at x=y=q",
                    closed(ClosedFormId::talh_xy, n, k, g,
                           subst_of({{Var::x, Monomial::var(Var::q)},
                                     {Var::y, Monomial::var(Var::q)}}))}});
  }
  if (id == "CONCL1") {
    long long n = need(p, "n");
    Grading g = Grading::xy_grading(order);
    return settle(id, {{"n", n}}, order,
                  {{"full-length sum", closed(ClosedFormId::tlh_xy, n, n, g)},
                   {"closed product", closed(ClosedFormId::lhp_xy, n, 0, g)}});
  }
  if (id == "CONCL2") {
    long long n = need(p, "n");
    Grading g = Grading::weighted({Var::a, Var::q}, order);
    auto sub = subst_of({{Var::x, Monomial::var(Var::a)},
                         {Var::y, Monomial::product({{Var::q, 1}, {Var::a, -1}})}});
    FactorProduct f;
    f.denom_poch(Monomial::var(Var::a), Monomial::var(Var::q), n);
    return settle(id, {{"n", n}}, order,
                  {{"full-length sum under x->a, y->q/a",
                    closed(ClosedFormId::tlh_xy, n, n, g, sub)},
                   {"rising-factorial inverse", f.expand(g)}});
  }
  throw std::invalid_argument("unknown theorem check id: " + id);
}

// ---------------------------------------------------------------------------
// Recurrence checks
// ---------------------------------------------------------------------------

enum class TransferKind { lh_uvq, anti_uvq, lh_q, anti_q };

/**
 * Per-image transfer: for every nonincreasing image mu with exactly m
 * positive parts and weight at most the order, the n-row generating function
 * above mu reduces to the m-row one above mu lowered by one in every part.
 */
CheckReport transfer_check(const std::string& id, TransferKind kind, long long n,
                           long long m, long long order) {
  if (m < 0 || m > n)
    throw std::domain_error(id + " needs 0 <= m <= n");
  const bool lh = kind == TransferKind::lh_uvq || kind == TransferKind::lh_q;
  const bool uvq = kind == TransferKind::lh_uvq || kind == TransferKind::anti_uvq;
  Grading g = gq(order);
  CheckReport r;
  r.check_id = id;
  r.params = {{"n", n}, {"m", m}};
  r.order = order;
  r.pass = true;
  long long count = 0;
  for (const auto& seq : gen_plain_exact_positive(ii(m), ii(m), order)) {
    const std::vector<int>& mu = seq.parts;
    std::vector<int> lowered;
    long long wmu = 0, omu = 0, wlow = 0, olow = 0;
    for (int v : mu) {
      wmu += v;
      omu += v % 2;
      lowered.push_back(v - 1);
      wlow += v - 1;
      olow += (v - 1) % 2;
    }
    ClosedForm tall;
    tall.id = lh ? ClosedFormId::l_mu : ClosedFormId::a_mu;
    tall.n = n;
    tall.mu = mu;
    ClosedForm low;
    low.id = tall.id;
    low.n = m;
    low.mu = lowered;
    GradedSeries lhs = closed_form(tall, g);
    GradedSeries rhs = closed_form(low, g);
    long long qexp = m * (m + 1) / 2 + (lh ? (n - m) * wlow : 0);
    if (uvq) {
      lhs = scale_monomial(lhs, Monomial::product({{Var::u, ii(wmu)}, {Var::v, ii(omu)}}));
      rhs = scale_monomial(rhs, Monomial::product({{Var::u, ii(m + wlow)},
                                                   {Var::v, ii(m - olow)},
                                                   {Var::q, ii(qexp)}}));
    } else {
      rhs = scale_monomial(rhs, Monomial::var(Var::q, ii(qexp)));
    }
    rhs = mul(gaussian_binomial(n, m, Monomial::var(Var::q), g), rhs);
    ++count;
    if (auto w = first_difference(lhs, rhs)) {
      r.pass = false;
      r.witness = *w;
      r.note = "first failing image mu=" + parts_text(mu);
      return r;
    }
  }
  r.note = "images checked: " + std::to_string(count);
  return r;
}

CheckReport recurrence_impl(const std::string& id, const Params& p, long long order) {
  if (id == "LU3" || id == "PROP2") {
    long long n = need(p, "n");
    if (n < 0) throw std::domain_error(id + " needs n >= 0");
    const bool lh = id == "LU3";
    ClosedFormId form = lh ? ClosedFormId::lhp_uvq : ClosedFormId::alh_uvq;
    Grading g = gq(order);
    GradedSeries lhs = closed(form, n, 0, g);
    GradedSeries rhs = GradedSeries::zero(g);
    for (long long m = 0; m <= n; ++m) {
      Monomial pre = Monomial::product(
          {{Var::u, ii(m)}, {Var::v, ii(m)}, {Var::q, ii(m * (m + 1) / 2)}});
      auto sub = lh ? subst_of({{Var::u, Monomial::product({{Var::u, 1},
                                                            {Var::q, ii(n - m)}})},
                                {Var::v, Monomial::var(Var::v, -1)}})
                    : subst_of({{Var::v, Monomial::var(Var::v, -1)}});
      GradedSeries term = scale_monomial(closed(form, m, 0, g, sub), pre);
      rhs = add(rhs, mul(gaussian_binomial(n, m, Monomial::var(Var::q), g), term));
    }
    return settle(id, {{"n", n}}, order,
                  {{"closed form", lhs}, {"Gaussian sum", rhs}});
  }
  if (id == "LNREC") {
    long long n = need(p, "n");
    if (n < 1) throw std::domain_error("LNREC needs n >= 1");
    Grading g = Grading::xy_grading(order);
    GradedSeries rhs = mul(geom_inverse(Monomial::var(Var::x), g),
                           closed(ClosedFormId::lhp_xy, n - 1, 0, g, subst_shift_xy()));
    return settle(id, {{"n", n}}, order,
                  {{"closed form", closed(ClosedFormId::lhp_xy, n, 0, g)},
                   {"shifted recurrence side", rhs}});
  }
  if (id == "MAP1") {
    long long n = need(p, "n"), k = need(p, "k");
    if (k < 0 || n < 2 * k + 1) throw std::domain_error("MAP1 needs n >= 2k+1 >= 1");
    Grading g = Grading::xy_grading(order);
    GradedSeries rhs = scale_monomial(
        mul(geom_inverse(Monomial::var(Var::x), g),
            closed(ClosedFormId::tlh_xy_bar, n - 1, 2 * k, g, subst_shift_xy())),
        Monomial::var(Var::x));
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"closed form", closed(ClosedFormId::tlh_xy_bar, n, 2 * k + 1, g)},
                   {"shifted recurrence side", rhs}});
  }
  if (id == "MAP2") {
    long long n = need(p, "n"), k = need(p, "k");
    if (k < 0 || n < 2 * k) throw std::domain_error("MAP2 needs n >= 2k >= 0");
    Grading g = Grading::xy_grading(order);
    GradedSeries rhs = mul(geom_inverse(Monomial::var(Var::x), g),
                           closed(ClosedFormId::talh_xy, n, 2 * k, g, subst_shift_xy()));
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"closed form", closed(ClosedFormId::talh_xy, n, 2 * k + 1, g)},
                   {"shifted recurrence side", rhs}});
  }
  if (id == "L2KRECURR") {
    long long n = need(p, "n"), k = need(p, "k");
    if (k < 1 || n < 2 * k) throw std::domain_error("L2KRECURR needs n >= 2k >= 2");
    Grading g = Grading::xy_grading(order);
    GradedSeries rhs =
        mul(geom_inverse(Monomial::var(Var::x), g),
            closed(ClosedFormId::tlh_xy_bar, n - 1, 2 * k - 1, g, subst_shift_xy()));
    if (n > 2 * k)
      rhs = add(rhs, closed(ClosedFormId::tlh_xy_bar, n - 1, 2 * k, g, subst_shift_xy()));
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"closed form", closed(ClosedFormId::tlh_xy_bar, n, 2 * k, g)},
                   {"shifted recurrence side", rhs}},
                  n > 2 * k ? "two-term case" : "boundary case n=2k");
  }
  if (id == "A2KRECURR") {
    long long n = need(p, "n"), k = need(p, "k");
    if (k < 1 || n < 2 * k - 1)
      throw std::domain_error("A2KRECURR needs n >= 2k-1 >= 1");
    Grading g = Grading::xy_grading(order);
    GradedSeries lhs = closed(ClosedFormId::talh_xy, n, 2 * k, g);
    if (n == 2 * k - 1) {
      GradedSeries rhs =
          mul(geom_inverse(Monomial::var(Var::x), g),
              closed(ClosedFormId::talh_xy, n, 2 * k - 1, g,
                     subst_of({{Var::x, Monomial::var(Var::y)},
                               {Var::y, Monomial::var(Var::x)}})));
      return settle(id, {{"n", n}, {"k", k}}, order,
                    {{"closed form", lhs}, {"swapped recurrence side", rhs}},
                    "swap case n=2k-1");
    }
    auto sub = subst_of({{Var::x, Monomial::var(Var::y, -1)},
                         {Var::y, Monomial::product({{Var::x, 1}, {Var::y, 2}})}});
    GradedSeries rhs = add(closed(ClosedFormId::talh_xy, n - 1, 2 * k, g, sub),
                           mul(geom_inverse(Monomial::var(Var::y), g),
                               closed(ClosedFormId::talh_xy, n - 1, 2 * k - 1, g)));
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"closed form", lhs}, {"two-term recurrence side", rhs}});
  }
  if (id == "ODDEQ") {
    long long n = need(p, "n"), k = need(p, "k");
    if (k < 1 || n < 2 * k) throw std::domain_error("ODDEQ needs n >= 2k >= 2");
    Grading g = Grading::xy_grading(order);
    GradedSeries one_minus_x = GradedSeries::one(g);
    one_minus_x.add_term(Monomial::var(Var::x, 1, Int(-1)));
    GradedSeries lhs = mul(one_minus_x, closed(ClosedFormId::talh_xy, n, 2 * k + 1, g));
    GradedSeries rhs =
        sub(closed(ClosedFormId::talh_xy, n - 1, 2 * k, g),
            scale_monomial(mul(geom_inverse(Monomial::var(Var::x), g),
                               closed(ClosedFormId::talh_xy, n - 1, 2 * k - 1, g,
                                      subst_shift_xy())),
                           Monomial::var(Var::x)));
    return settle(id, {{"n", n}, {"k", k}}, order,
                  {{"(1-x)-scaled closed form", lhs}, {"two-term side", rhs}});
  }
  if (id == "IRECURR") {
    long long n = need(p, "n"), k = need(p, "k"), i = need(p, "i");
    if (k < 1 || n <= 2 * k) throw std::domain_error("IRECURR needs n > 2k >= 2");
    if (i < 1) throw std::domain_error("IRECURR needs i >= 1");
    Grading g = Grading::xy_grading(order);
    auto S = [&](long long j) {
      return j == 0 ? gf_oracle(famLbar(n, 2 * k), kXy, g)
                    : gf_oracle(famLbar(n, 2 * k + 1, j), kXy, g);
    };
    auto T = [&](long long j) {
      return j == 0 ? gf_oracle(famLbar(n, 2 * k - 1), kXy, g)
                    : gf_oracle(famLbar(n, 2 * k, j), kXy, g);
    };
    long long span = n - 2 * k;
    long long l = (i - 1) / span;
    long long rr = i - l * span;
    GradedSeries lhs = gf_oracle(famLbar(n, 2 * k + 1, i), kXy, g);
    GradedSeries rhs = sub(scale_monomial(S(i - 1), Monomial::var(Var::x)),
                           scale_monomial(T(i + l), Monomial::var(Var::x, ii(i))));
    bool boundary = (rr == 1 && i != 1);
    if (boundary)
      rhs = sub(rhs, scale_monomial(T(i + l - 1), Monomial::var(Var::x, ii(i))));
    std::ostringstream os;
    os << "i = " << l << "*(n-2k)+" << rr << (boundary ? ", boundary term present" : "");
    return settle(id, {{"n", n}, {"k", k}, {"i", i}}, order,
                  {{"last-entry class", lhs}, {"recurrence side", rhs}}, os.str());
  }
  if (id == "NEED")
    return transfer_check(id, TransferKind::lh_uvq, need(p, "n"), need(p, "m"), order);
  if (id == "AU3")
    return transfer_check(id, TransferKind::anti_uvq, need(p, "n"), need(p, "m"), order);
  if (id == "LU2")
    return transfer_check(id, TransferKind::lh_q, need(p, "n"), need(p, "m"), order);
  if (id == "AU2")
    return transfer_check(id, TransferKind::anti_q, need(p, "n"), need(p, "m"), order);
  if (id == "AUN") {
    long long n = need(p, "n"), k = need(p, "k");
    if (k < 0 || k > n) throw std::domain_error("AUN needs 0 <= k <= n");
    Grading g = gq(order);
    std::map<std::vector<int>, GradedSeries> buckets;
    for (const auto& seq : generate(famA(n, k), order)) {
      auto st = statistics(seq);
      auto it = buckets.try_emplace(st.floor_image, GradedSeries::zero(g)).first;
      it->second.add_term(Monomial::var(Var::q, ii(st.weight)));
    }
    CheckReport r;
    r.check_id = id;
    r.params = {{"n", n}, {"k", k}};
    r.order = order;
    r.pass = true;
    long long count = 0;
    for (const auto& mu : gen_plain_fixed(ii(k), order)) {
      ClosedForm c;
      c.id = ClosedFormId::a_mu_k;
      c.n = n;
      c.k = k;
      c.mu = mu.parts;
      GradedSeries expected = closed_form(c, g);
      auto it = buckets.find(mu.parts);
      GradedSeries got = it == buckets.end() ? GradedSeries::zero(g) : it->second;
      ++count;
      if (auto w = first_difference(got, expected)) {
        r.pass = false;
        r.witness = *w;
        r.note = "first failing floor image mu=" + parts_text(mu.parts);
        return r;
      }
    }
    r.note = "floor-image buckets checked: " + std::to_string(count);
    return r;
  }
  throw std::invalid_argument("unknown recurrence check id: " + id);
}

// ---------------------------------------------------------------------------
// q-Chu-Vandermonde checks
// ---------------------------------------------------------------------------

CheckReport qchu_impl(const std::string& id, long long n, long long order,
                      std::optional<Monomial> a_opt, std::optional<Monomial> c_opt) {
  if (id != "QCHU_I" && id != "QCHU_II")
    throw std::invalid_argument("unknown q-Chu check id: " + id);
  if (n < 0) throw std::domain_error("q-Chu checks need n >= 0");
  const bool second = id == "QCHU_II";
  Monomial a = a_opt ? *a_opt
               : second
                   ? Monomial::product({{Var::v, 1}, {Var::u, -1}, {Var::q, ii(-n)}},
                                       Int(-1))
                   : Monomial::product({{Var::u, 1}, {Var::v, -1}, {Var::q, 1}},
                                       Int(-1));
  Monomial c = c_opt ? *c_opt
               : second ? Monomial::product({{Var::u, -2}, {Var::q, ii(-2 * n)}})
                        : Monomial::product({{Var::u, 2}, {Var::q, 2}});
  if (!(a.coeff == 1 || a.coeff == -1) || !(c.coeff == 1 || c.coeff == -1))
    throw std::domain_error("q-Chu parameters need unit coefficients");
  Monomial qv = Monomial::var(Var::q);
  Monomial ca = c.times(a.inverse());

  // Individual summands may carry Laurent tails in q that cancel only in the
  // total.  Compute each side's leading q-degree symbolically (flipped
  // rising-factorial factors shift the head) and scale everything by a common
  // q power so every side expands as a genuine power series.
  Grading probe = gq(order);
  long long ga = probe.grade(a.e), gc = probe.grade(c.e), gca = probe.grade(ca.e);
  auto flip_drop = [](long long gstart, long long count) {
    long long d = 0;
    for (long long j = 0; j < count; ++j)
      if (gstart + j < 0) d += gstart + j;
    return d;
  };
  long long min_head = (second ? n * ga : 0) + flip_drop(gca, n) - flip_drop(gc, n);
  for (long long m = 0; m <= n; ++m) {
    long long pre = second ? m * (m + 1) / 2 - n * m : m * gca + m * (m - 1) / 2;
    min_head = std::min(min_head, pre + flip_drop(ga, m) - flip_drop(gc, m));
  }
  long long shift = std::max(0LL, -min_head);
  Monomial qshift = Monomial::var(Var::q, ii(shift));
  Grading g = gq(order + shift);

  FactorProduct lhsf;
  lhsf.times(qshift);
  if (second) lhsf.times(a.pow(n));
  lhsf.numer_poch(ca, qv, n).denom_poch(c, qv, n);
  GradedSeries lhs = lhsf.expand(g);
  GradedSeries rhs = GradedSeries::zero(g);
  for (long long m = 0; m <= n; ++m) {
    FactorProduct t;
    t.times(qshift);
    if (second) {
      Monomial pre = Monomial::var(Var::q, ii(m * (m + 1) / 2 - n * m));
      if (m % 2 != 0) pre.coeff = -pre.coeff;
      t.times(pre);
    } else {
      t.times(ca.negate().pow(m)).times(Monomial::var(Var::q, ii(m * (m - 1) / 2)));
    }
    t.numer_poch(a, qv, m).denom_poch(c, qv, m);
    t.times_poly(gaussian_binomial(n, m, qv, g));
    rhs = add(rhs, t.expand(g));
  }
  CheckReport r = settle(id, {{"n", n}}, order,
                         {{"product side", lhs}, {"Gaussian sum", rhs}});
  std::string spec = "a = " + monomial_to_text(a) + ", c = " + monomial_to_text(c);
  if (shift > 0) spec += ", sides scaled by q^" + std::to_string(shift);
  r.note = r.note.empty() ? spec : spec + "; " + r.note;
  return r;
}

// ---------------------------------------------------------------------------
// Bijection sweeps as reports
// ---------------------------------------------------------------------------

CheckReport bijection_impl(const std::string& id, const Params& p, long long maxw) {
  MapInstance m;
  Echo echo;
  if (id == "BIJ_BME") {
    m.id = MapId::bme;
    m.n = ii(need(p, "n"));
    echo = {{"n", m.n}};
  } else if (id == "BIJ_BME_NK") {
    m.id = MapId::bme_nk;
    m.n = ii(need(p, "n"));
    m.k = ii(need(p, "k"));
    echo = {{"n", m.n}, {"k", m.k}};
  } else if (id == "BIJ_THETA") {
    m.id = MapId::theta_nk;
    m.n = ii(need(p, "n"));
    m.k = ii(need(p, "k"));
    echo = {{"n", m.n}, {"k", m.k}};
  } else {
    throw std::invalid_argument("unknown bijection check id: " + id);
  }
  BijectionReport rep = verify_bijection(m, maxw);
  CheckReport r;
  r.check_id = id;
  r.params = std::move(echo);
  r.order = maxw;
  r.pass = rep.pass;
  std::ostringstream os;
  os << "pairs=" << rep.pairs_checked << ", codomain=" << rep.codomain_size;
  if (!rep.pass) os << "; " << rep.failure;
  r.note = os.str();
  return r;
}

const std::vector<std::string> kTheoremIds = {
    "EQ1",  "EQ2",       "EQ3",   "EQ4",  "EQ5",      "EQ6",       "EQ7",
    "EQ8",  "EQ9",       "EQ10",  "RTLH_BAR", "OETLH_BAR", "COMBI", "DIFF",
    "IDENT1", "IDENT2",  "IDENT2LIM", "FIN3", "REF1", "REF2", "REF2PLUS",
    "TRANSPOSE", "AIDENT", "CONCL1", "CONCL2"};

const std::vector<std::string> kRecurrenceIds = {
    "LU3", "PROP2", "LNREC", "MAP1",    "MAP2", "L2KRECURR", "A2KRECURR",
    "ODDEQ", "IRECURR", "NEED", "AU3", "LU2", "AU2", "AUN"};

const std::vector<std::string> kQchuIds = {"QCHU_I", "QCHU_II"};

const std::vector<std::string> kBijectionIds = {"BIJ_BME", "BIJ_BME_NK",
                                                "BIJ_THETA"};

bool contains(const std::vector<std::string>& v, const std::string& id) {
  return std::find(v.begin(), v.end(), id) != v.end();
}

}  // namespace

std::optional<Witness> first_difference(const GradedSeries& lhs,
                                        const GradedSeries& rhs) {
  if (!(lhs.grading() == rhs.grading()))
    throw std::invalid_argument("first_difference: gradings differ");
  const Grading& g = lhs.grading();
  std::vector<Exps> keys;
  keys.reserve(lhs.terms().size() + rhs.terms().size());
  for (const auto& [e, c] : lhs.terms()) keys.push_back(e);
  for (const auto& [e, c] : rhs.terms()) keys.push_back(e);
  std::sort(keys.begin(), keys.end(), [&](const Exps& x, const Exps& y) {
    long long gx = g.grade(x), gy = g.grade(y);
    if (gx != gy) return gx < gy;
    return x < y;
  });
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const Exps& e : keys) {
    auto il = lhs.terms().find(e);
    auto ir = rhs.terms().find(e);
    Int cl = il == lhs.terms().end() ? Int(0) : il->second;
    Int cr = ir == rhs.terms().end() ? Int(0) : ir->second;
    if (cl != cr) return Witness{e, cl, cr};
  }
  return std::nullopt;
}

CheckReport check_theorem(const std::string& id, const Params& p, long long order) {
  return timed([&] { return theorem_impl(id, p, order); });
}

CheckReport check_recurrence(const std::string& id, const Params& p,
                             long long order) {
  return timed([&] { return recurrence_impl(id, p, order); });
}

CheckReport check_qchu(const std::string& id, long long n, long long order,
                       std::optional<Monomial> a, std::optional<Monomial> c) {
  return timed([&] { return qchu_impl(id, n, order, std::move(a), std::move(c)); });
}

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    v.insert(v.end(), kTheoremIds.begin(), kTheoremIds.end());
    v.insert(v.end(), kRecurrenceIds.begin(), kRecurrenceIds.end());
    v.insert(v.end(), kQchuIds.begin(), kQchuIds.end());
    v.insert(v.end(), kBijectionIds.begin(), kBijectionIds.end());
    return v;
  }();
  return ids;
}

CheckReport run_check(const std::string& id, const Params& p, long long order) {
  if (contains(kTheoremIds, id)) return check_theorem(id, p, order);
  if (contains(kRecurrenceIds, id)) return check_recurrence(id, p, order);
  if (contains(kQchuIds, id)) return check_qchu(id, need(p, "n"), order);
  if (contains(kBijectionIds, id))
    return timed([&] { return bijection_impl(id, p, order); });
  throw std::invalid_argument("unknown check id: " + id);
}

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  if (!cfg.only.empty() && !contains(all_check_ids(), cfg.only))
    throw std::invalid_argument("unknown check id: " + cfg.only);
  std::vector<CheckReport> out;
  const long long N = cfg.nmax, W = cfg.order;
  auto push = [&](const std::string& id, Params p, long long order) {
    out.push_back(run_check(id, std::move(p), order));
  };
  for (const std::string& id : all_check_ids()) {
    if (!cfg.only.empty() && cfg.only != id) continue;
    if (id == "EQ1" || id == "EQ2" || id == "EQ3" || id == "EQ4" || id == "EQ5" ||
        id == "EQ10" || id == "CONCL1" || id == "CONCL2" || id == "LU3" ||
        id == "PROP2" || id == "QCHU_I" || id == "QCHU_II") {
      for (long long n = 0; n <= N; ++n) push(id, {{"n", n}}, W);
    } else if (id == "LNREC") {
      for (long long n = 1; n <= N; ++n) push(id, {{"n", n}}, W);
    } else if (id == "EQ6" || id == "EQ7" || id == "EQ8" || id == "RTLH_BAR" ||
               id == "OETLH_BAR" || id == "COMBI" || id == "IDENT1" ||
               id == "IDENT2" || id == "AIDENT" || id == "AUN") {
      for (long long n = 0; n <= N; ++n)
        for (long long k = 0; k <= n; ++k) push(id, {{"n", n}, {"k", k}}, W);
    } else if (id == "EQ9") {
      for (long long n = 0; n <= N; ++n)
        for (long long k = 0; k <= n + 1; ++k) push(id, {{"n", n}, {"k", k}}, W);
    } else if (id == "DIFF") {
      for (long long n = 1; n <= N; ++n)
        for (long long k = 1; k <= n; ++k) push(id, {{"n", n}, {"k", k}}, W);
    } else if (id == "REF2PLUS") {
      for (long long n = 0; n <= N; ++n)
        for (long long k = 0; k <= n; ++k) push(id, {{"n", n}, {"k", k}}, W);
    } else if (id == "IDENT2LIM" || id == "REF1" || id == "REF2" ||
               id == "TRANSPOSE") {
      for (long long k = 0; k <= N; ++k) push(id, {{"k", k}}, W);
    } else if (id == "FIN3") {
      for (long long k = 1; k <= N; ++k) push(id, {{"k", k}}, W);
    } else if (id == "MAP1") {
      for (long long k = 0; 2 * k + 1 <= N; ++k)
        for (long long n = 2 * k + 1; n <= N; ++n)
          push(id, {{"n", n}, {"k", k}}, W);
    } else if (id == "MAP2") {
      for (long long k = 0; 2 * k <= N; ++k)
        for (long long n = std::max(2 * k, 0LL); n <= N; ++n)
          push(id, {{"n", n}, {"k", k}}, W);
    } else if (id == "L2KRECURR" || id == "ODDEQ") {
      for (long long k = 1; 2 * k <= N; ++k)
        for (long long n = 2 * k; n <= N; ++n) push(id, {{"n", n}, {"k", k}}, W);
    } else if (id == "A2KRECURR") {
      for (long long k = 1; 2 * k - 1 <= N; ++k)
        for (long long n = 2 * k - 1; n <= N; ++n)
          push(id, {{"n", n}, {"k", k}}, W);
    } else if (id == "IRECURR") {
      for (long long k = 1; 2 * k + 1 <= N; ++k)
        for (long long n = 2 * k + 1; n <= N; ++n)
          for (long long i = 1; i <= cfg.irecurr_imax; ++i)
            push(id, {{"n", n}, {"k", k}, {"i", i}}, W);
    } else if (id == "NEED" || id == "AU3" || id == "LU2" || id == "AU2") {
      for (long long n = 0; n <= N; ++n)
        for (long long m = 0; m <= n; ++m) push(id, {{"n", n}, {"m", m}}, W);
    } else if (id == "BIJ_BME") {
      for (long long n = 1; n <= N; ++n)
        push(id, {{"n", n}}, cfg.bijection_weight);
    } else if (id == "BIJ_BME_NK") {
      for (long long n = 1; n <= N; ++n)
        for (long long k = 1; k <= n; ++k)
          push(id, {{"n", n}, {"k", k}}, cfg.bijection_weight);
    } else if (id == "BIJ_THETA") {
      for (long long n = 1; n <= N; ++n)
        for (long long k = 1; k <= n + 1; ++k)
          push(id, {{"n", n}, {"k", k}}, cfg.bijection_weight);
    } else {
      throw std::logic_error("run_suite: no grid for " + id);
    }
  }
  return out;
}

}  // namespace qhall
