#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhall/assembly.hpp"
#include "qhall/closedform.hpp"
#include "qhall/enumerate.hpp"
#include "qhall/qseries.hpp"
#include "qhall/text_io.hpp"

using namespace qhall;

namespace {

GradedSeries cf(const std::string& text, const Grading& g) {
  return closed_form(ClosedForm::parse(text), g);
}

GradedSeries oracle(const std::string& fam,
                    const std::vector<std::pair<std::string, Var>>& assign, const Grading& g) {
  return gf_oracle(FamilySpec::parse(fam), assign, g);
}

const std::vector<std::pair<std::string, Var>> kWq = {{"weight", Var::q}};
const std::vector<std::pair<std::string, Var>> kXy = {{"odd_index_sum", Var::x},
                                                      {"even_index_sum", Var::y}};
const std::vector<std::pair<std::string, Var>> kCeil = {
    {"weight", Var::q}, {"ceil_weight", Var::u}, {"ceil_odd_count", Var::v}};
const std::vector<std::pair<std::string, Var>> kFloor = {
    {"weight", Var::q}, {"floor_weight", Var::u}, {"floor_odd_count", Var::v}};

}  // namespace

TEST_CASE("factor products normalize negative-grade arguments") {
  Grading g = Grading::q_grading(6);
  // 1/(1 - q^-1) has no series expansion on its own, but q^2 * (1 - q^-1)
  // = q^2 - q does, via the flip (1 - w) = -w (1 - 1/w).
  FactorProduct fp;
  fp.times(Monomial::var(Var::q, 2));
  fp.numer_poch(Monomial::var(Var::q, -1), Monomial::one(), 1);
  CHECK(fp.expand(g) == parse_series("-q + q^2", g));

  // 1/(1 - q^-1) = -q/(1 - q) expands after the flip
  FactorProduct flipped;
  flipped.denom_poch(Monomial::var(Var::q, -1), Monomial::one(), 1);
  CHECK(flipped.expand(g) ==
        parse_series("-q - q^2 - q^3 - q^4 - q^5 - q^6", g));

  // a bare (1 - q^-2) leaves the prefactor at grade -2, which cannot embed
  FactorProduct bad;
  bad.numer_poch(Monomial::var(Var::q, -2), Monomial::one(), 1);
  CHECK_THROWS_AS(bad.expand(g), std::domain_error);

  FactorProduct zero_grade;
  zero_grade.denom_poch(Monomial::var(Var::u), Monomial::one(), 1);
  Grading gz = Grading::q_grading(4);
  CHECK_THROWS_AS(zero_grade.expand(gz), std::domain_error);
}

TEST_CASE("factor products expand flipped denominators") {
  // q^3 / (1 - q^-1) = -q^4 / (1 - q)
  Grading g = Grading::q_grading(8);
  FactorProduct fp;
  fp.times(Monomial::var(Var::q, 3));
  fp.denom_poch(Monomial::var(Var::q, -1), Monomial::one(), 1);
  FactorProduct alt;
  alt.times(Monomial::var(Var::q, 4, Int(-1)));
  alt.denom_poch(Monomial::var(Var::q), Monomial::one(), 1);
  CHECK(fp.expand(g) == alt.expand(g));
}

TEST_CASE("full lecture hall products match enumeration") {
  Grading q4 = Grading::q_grading(4);
  CHECK(cf("lhp_q(n=2)", q4) == parse_series("1 + q + q^2 + 2*q^3 + 2*q^4", q4));
  CHECK(cf("lhp_q(n=2)", q4) == oracle("L(2,2)", kWq, q4));

  Grading xy3 = Grading::xy_grading(3);
  CHECK(cf("lhp_xy(n=2)", xy3) == oracle("L(2,2)", kXy, xy3));
  CHECK(cf("lhp_xy(n=2)", xy3) == parse_series("1 + x + x^2 + x^3 + x^2*y", xy3));

  Grading q3 = Grading::weighted({Var::q}, 3);
  GradedSeries expect = parse_series("1 + u*v*q + u^2*q^2 + u^3*v*q^3", q3);
  CHECK(cf("lhp_uvq(n=1)", q3) == expect);
  CHECK(cf("lhp_uvq(n=1)", q3) == oracle("L(1,1)", kCeil, q3));
  CHECK(cf("alh_uvq(n=1)", q3) == oracle("A(1,1)", kFloor, q3));
}

TEST_CASE("truncated lecture hall sums match enumeration") {
  Grading q4 = Grading::weighted({Var::q}, 4);
  CHECK(cf("tlh_uvq(n=2,k=1)", q4) ==
        parse_series("1 + u*v*q + u*v*q^2 + u^2*q^3 + u^2*q^4", q4));
  CHECK(cf("tlh_uvq(n=2,k=1)", q4) == oracle("L(2,1)", kCeil, q4));
  CHECK(cf("tlh_uvq_bar(n=2,k=1)", q4) == oracle("Lbar(2,1)", kCeil, q4));

  Grading q6 = Grading::weighted({Var::q}, 6);
  CHECK(cf("tlh_uvq(n=3,k=2)", q6) == oracle("L(3,2)", kCeil, q6));
  CHECK(cf("tlh_uvq_bar(n=3,k=2)", q6) == oracle("Lbar(3,2)", kCeil, q6));
  // the m-indexed summands stack up to the full truncated sum
  GradedSeries sum = GradedSeries::zero(q6);
  for (int m = 0; m <= 2; ++m)
    sum = add(sum, cf("tlh_uvq_bar(n=3,k=" + std::to_string(m) + ")", q6));
  CHECK(sum == cf("tlh_uvq(n=3,k=2)", q6));
}

TEST_CASE("truncated anti lecture hall products match enumeration") {
  Grading q2 = Grading::weighted({Var::q}, 2);
  CHECK(cf("talh_uvq(n=2,k=2)", q2) == parse_series("1 + u*v*q + u^2*q^2 + u*v*q^2", q2));
  Grading q5 = Grading::weighted({Var::q}, 5);
  CHECK(cf("talh_uvq(n=2,k=2)", q5) == oracle("A(2,2)", kFloor, q5));
  CHECK(cf("talh_uvq(n=3,k=2)", q5) == oracle("A(3,2)", kFloor, q5));
  CHECK(cf("talh_uvq(n=3,k=3)", q5) == cf("alh_uvq(n=3)", q5));
}

TEST_CASE("index-sum products match enumeration") {
  Grading xy3 = Grading::xy_grading(3);
  CHECK(cf("tlh_xy_bar(n=2,k=1)", xy3) == parse_series("x + x^2 + x^3", xy3));
  CHECK(cf("tlh_xy_bar(n=2,k=1)", xy3) == oracle("Lbar(2,1)", kXy, xy3));

  Grading xy2 = Grading::xy_grading(2);
  CHECK(cf("talh_xy(n=2,k=2)", xy2) == parse_series("1 + x + x^2 + x*y", xy2));
  CHECK(cf("talh_xy(n=2,k=2)", xy2) == oracle("A(2,2)", kXy, xy2));
  CHECK(cf("talh_xy(n=1,k=2)", xy2) ==
        parse_series("1 + x + y + x^2 + x*y + y^2", xy2));
  CHECK(cf("talh_xy(n=1,k=2)", xy2) == oracle("A(1,2)", kXy, xy2));

  Grading xy5 = Grading::xy_grading(5);
  CHECK(cf("tlh_xy(n=3,k=2)", xy5) == oracle("L(3,2)", kXy, xy5));
  CHECK(cf("tlh_xy_bar(n=3,k=3)", xy5) == oracle("Lbar(3,3)", kXy, xy5));
  CHECK(cf("talh_xy(n=3,k=4)", xy5) == oracle("A(3,4)", kXy, xy5));
}

TEST_CASE("odd-part partition counts match enumeration") {
  Grading q3 = Grading::q_grading(3);
  CHECK(cf("r_nk(n=2,k=1)", q3) == oracle("R(2,1)", kWq, q3));
  CHECK(cf("r_nk(n=2,k=1)", q3) == parse_series("1 + q + q^2 + q^3", q3));

  // k = n exercises the [-1, 0] = 1 convention in the leading summand
  Grading q6 = Grading::q_grading(6);
  CHECK(cf("r_nk(n=1,k=1)", q6) == oracle("R(1,1)", kWq, q6));
  CHECK(cf("r_nk(n=3,k=3)", q6) == oracle("R(3,3)", kWq, q6));
  CHECK(cf("r_nk(n=3,k=2)", q6) == oracle("R(3,2)", kWq, q6));

  Grading q4 = Grading::q_grading(4);
  CHECK(cf("r_exact_t(n=2,t=1,j=1,l=2)", q4) == parse_series("q^3 + q^4", q4));
  CHECK(cf("r_exact_t(n=2,t=1,j=1,l=2)", q4) == oracle("Rt(2,1,1,2)", kWq, q4));
  CHECK(cf("r_exact_t(n=3,t=1,j=1,l=2)", q6) == oracle("Rt(3,1,1,2)", kWq, q6));

  CHECK(cf("lbar_nk_q(n=2,k=1)", q4) == oracle("Lbar(2,1)", kWq, q4));
  CHECK(cf("lbar_nk_q(n=3,k=2)", q6) == oracle("Lbar(3,2)", kWq, q6));
  CHECK(cf("lbar_nk_q(n=3,k=3)", q6) == oracle("Lbar(3,3)", kWq, q6));
}

TEST_CASE("image-refined formulas match hand expansions") {
  Grading q5 = Grading::q_grading(5);
  CHECK(cf("l_mu(mu=(2,1),n=2)", q5) == parse_series("q^4 + q^5", q5));
  CHECK(cf("a_mu(mu=(1,1),n=2)", q5) == parse_series("q^3", q5));
  CHECK(cf("a_mu_k(mu=(1),n=2,k=1)", q5) == parse_series("q^2 + q^3", q5));

  // bucket check: members of L(2,2) with ceiling image (2,1) are exactly
  // those counted by l_mu(mu=(2,1),n=2)
  GradedSeries bucket = GradedSeries::zero(q5);
  for (const PartSequence& s : generate(FamilySpec::parse("L(2,2)"), 5)) {
    StatVector st = statistics(s);
    if (st.ceil_image == std::vector<int>{2, 1})
      bucket.add_term(Monomial::var(Var::q, static_cast<int>(st.weight)));
  }
  CHECK(bucket == cf("l_mu(mu=(2,1),n=2)", q5));

  // and the anti bucket for floor image (1) inside A(2,1)
  GradedSeries abucket = GradedSeries::zero(q5);
  for (const PartSequence& s : generate(FamilySpec::parse("A(2,1)"), 5)) {
    StatVector st = statistics(s);
    if (st.floor_image == std::vector<int>{1})
      abucket.add_term(Monomial::var(Var::q, static_cast<int>(st.weight)));
  }
  CHECK(abucket == cf("a_mu_k(mu=(1),n=2,k=1)", q5));
}

TEST_CASE("two-variable distinct-part product") {
  Grading g = Grading::weighted({Var::q}, 4);
  GradedSeries bounded = cf("fin3_rhs(k=1,len_k=1)", g);
  GradedSeries expect = GradedSeries::zero(g);
  // D(1) u D(2) with z tracking the alternating index sum:
  // (a): z^a q^a; (a,b), a>b>=1: z^(a-b) q^(a+b)
  for (int a2 = 1; a2 <= 4; ++a2) expect.add_term(Monomial::product({{Var::z, a2}, {Var::q, a2}}));
  expect.add_term(Monomial::product({{Var::z, 1}, {Var::q, 3}}));   // (2,1)
  expect.add_term(Monomial::product({{Var::z, 2}, {Var::q, 4}}));   // (3,1)
  CHECK(bounded == expect);

  // the unbounded reading differs at z^2 q^4
  GradedSeries unbounded = cf("fin3_rhs(k=1,len_k=0)", g);
  Exps e{};
  e[static_cast<size_t>(Var::z)] = 2;
  e[static_cast<size_t>(Var::q)] = 4;
  CHECK(coefficient(bounded, e) == 1);
  CHECK(coefficient(unbounded, e) == 2);
}

TEST_CASE("substitution rewrites a formula's variables") {
  // under x -> a, y -> q/a the length-n truncation collapses to a simple
  // two-variable product; check the n = 1 case against 1/(1-a)
  Grading g = Grading::weighted({Var::a, Var::q}, 6);
  GradedSeries lhs = cf("tlh_xy(n=1,k=1;x->a,y->q*a^-1)", g);
  CHECK(lhs == geom_inverse(Monomial::var(Var::a), g));

  // substitution applies to every factor, including binomial bases
  Grading xy6 = Grading::xy_grading(6);
  GradedSeries swapped = cf("talh_xy(n=2,k=2;x->y,y->x)", xy6);
  GradedSeries direct = GradedSeries::zero(xy6);
  for (const PartSequence& s : generate(FamilySpec::parse("A(2,2)"), 6)) {
    StatVector st = statistics(s);
    direct.add_term(Monomial::product({{Var::y, static_cast<int>(st.odd_index_sum)},
                                       {Var::x, static_cast<int>(st.even_index_sum)}}));
  }
  CHECK(swapped == direct);
}

TEST_CASE("formula designators parse and render") {
  for (const char* t :
       {"lhp_q(n=2)", "tlh_uvq(n=3,k=2)", "r_exact_t(n=2,t=1,j=1,l=2)",
        "l_mu(mu=(2,1),n=2)", "a_mu_k(mu=(1),n=2,k=1)", "fin3_rhs(k=1,len_k=1)",
        "tlh_xy_bar(n=3,k=2;x->x^2*y,y->x^-1)"}) {
    CHECK(ClosedForm::parse(t).to_text() == t);
  }
  CHECK(ClosedForm::parse("tlh_uvq(n=3, k=2)").to_text() == "tlh_uvq(n=3,k=2)");
  CHECK_THROWS_AS(ClosedForm::parse("no_such_form(n=1)"), std::invalid_argument);
  CHECK_THROWS_AS(ClosedForm::parse("lhp_q(n"), std::invalid_argument);
  CHECK_THROWS_AS(ClosedForm::parse("lhp_q(m=1)"), std::invalid_argument);
}

TEST_CASE("formulas reject parameters outside their domain") {
  Grading g = Grading::q_grading(4);
  CHECK_THROWS_AS(cf("talh_uvq(n=1,k=3)", g), std::domain_error);
  CHECK_THROWS_AS(cf("tlh_uvq(n=2,k=3)", g), std::domain_error);
  CHECK_THROWS_AS(cf("talh_xy(n=1,k=3)", Grading::xy_grading(4)), std::domain_error);
  CHECK_THROWS_AS(cf("lhp_q(n=-1)", g), std::domain_error);
  CHECK_THROWS_AS(cf("r_exact_t(n=2,t=1,j=2,l=1)", g), std::domain_error);
  CHECK_THROWS_AS(cf("l_mu(mu=(1,2),n=2)", g), std::domain_error);
  CHECK_THROWS_AS(cf("l_mu(mu=(2,1),n=1)", g), std::domain_error);
  CHECK_THROWS_AS(cf("a_mu_k(mu=(1),n=1,k=2)", g), std::domain_error);
}
