#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "qhall/enumerate.hpp"
#include "qhall/qseries.hpp"
#include "qhall/text_io.hpp"

using namespace qhall;

namespace {

std::vector<std::vector<int>> part_lists(const std::vector<PartSequence>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& s : v) out.push_back(s.parts);
  return out;
}

GradedSeries from_text(const std::string& t, const Grading& g) { return parse_series(t, g); }

}  // namespace

TEST_CASE("lecture hall enumeration matches hand-checked sets") {
  auto l22 = part_lists(gen_lecture_hall(2, 2, false, 3));
  CHECK(l22 == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {2, 1}});

  auto l32_bar = part_lists(gen_lecture_hall(3, 2, true, 3));
  CHECK(l32_bar == std::vector<std::vector<int>>{{2, 1}});

  // last-entry classes: lambda_2 = 1 forces 2*lambda_1 >= 3
  auto l32_last1 = part_lists(gen_lecture_hall(3, 2, true, 6, 1));
  CHECK(l32_last1 == std::vector<std::vector<int>>{{2, 1}, {3, 1}, {4, 1}, {5, 1}});

  CHECK(gen_lecture_hall(4, 0, false, 5).size() == 1);  // just ()
  CHECK(gen_lecture_hall(4, 0, true, 5).size() == 1);
  CHECK_THROWS_AS(gen_lecture_hall(2, 3, false, 5), std::invalid_argument);
  CHECK_THROWS_AS(gen_lecture_hall(2, 2, false, -1), std::invalid_argument);
}

TEST_CASE("anti lecture hall enumeration matches hand-checked sets") {
  auto a12 = part_lists(gen_anti_lecture_hall(1, 2, 2));
  CHECK(a12 == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});

  auto a22 = part_lists(gen_anti_lecture_hall(2, 2, 2));
  CHECK(a22 == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {2, 0}, {1, 1}});

  auto a22_last1 = part_lists(gen_anti_lecture_hall(2, 2, 3, 1));
  CHECK(a22_last1 == std::vector<std::vector<int>>{{1, 1}, {2, 1}});

  CHECK_THROWS_AS(gen_anti_lecture_hall(1, 3, 4), std::invalid_argument);
}

TEST_CASE("odd-part enumerations match hand-checked sets") {
  auto r21 = part_lists(gen_restricted_odd(2, 1, 3));
  CHECK(r21 == std::vector<std::vector<int>>{{}, {1}, {1, 1}, {1, 1, 1}});

  auto rt = part_lists(gen_restricted_odd_exact_t(2, 1, 1, 2, 4));
  CHECK(rt == std::vector<std::vector<int>>{{3}, {3, 1}});

  // no restriction beyond oddness and the cap
  auto odd3 = part_lists(gen_odd_parts(3, 4));
  CHECK(odd3 == std::vector<std::vector<int>>{
                    {}, {1}, {1, 1}, {3}, {1, 1, 1}, {3, 1}, {1, 1, 1, 1}});
}

TEST_CASE("plain shape enumerations match hand-checked sets") {
  auto p2 = part_lists(gen_plain_fixed(2, 2));
  CHECK(p2 == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {2, 0}, {1, 1}});

  auto p21 = part_lists(gen_plain_exact_positive(2, 1, 2));
  CHECK(p21 == std::vector<std::vector<int>>{{1, 0}, {2, 0}});

  auto d2 = part_lists(gen_distinct(2, 3));
  CHECK(d2 == std::vector<std::vector<int>>{{2, 1}});

  auto pm2 = part_lists(gen_max_part(2, 3));
  CHECK(pm2 == std::vector<std::vector<int>>{{}, {1}, {2}, {1, 1}, {2, 1}, {1, 1, 1}});

  CHECK_THROWS_AS(gen_plain_exact_positive(2, 3, 5), std::invalid_argument);
}

TEST_CASE("membership tests agree with the ratio chain definition") {
  CHECK(in_lecture_hall({3, 1}, 2));
  CHECK_FALSE(in_lecture_hall({1, 1}, 2));
  CHECK(in_anti_lecture_hall({1, 2}, 2, 2));
  CHECK_FALSE(in_anti_lecture_hall({0, 1}, 2, 2));
  CHECK(in_anti_lecture_hall({0, 5}, 1, 2));  // zero first ramp entry: vacuous
  CHECK_THROWS_AS(in_lecture_hall({1, 1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(in_anti_lecture_hall({1}, 2, 2), std::invalid_argument);
}

TEST_CASE("generated sets are exactly the members within the weight budget") {
  const long long W = 9;
  for (int len = 0; len <= 3; ++len) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur(len);
    std::function<void(int)> fill = [&](int i) {
      if (i == len) {
        all.push_back(cur);
        return;
      }
      for (int v = 0; v <= 6; ++v) {
        cur[i] = v;
        fill(i + 1);
      }
    };
    fill(0);

    for (int n = len; n <= len + 2; ++n) {
      std::set<std::vector<int>> expect;
      for (const auto& p : all) {
        long long w = 0;
        for (int v : p) w += v;
        if (w <= W && in_lecture_hall(p, n)) expect.insert(p);
      }
      // generation may exceed the part cap 6 used above; drop those
      std::set<std::vector<int>> got;
      for (const auto& s : gen_lecture_hall(n, len, false, W)) {
        bool ok = true;
        for (int v : s.parts) ok = ok && v <= 6;
        if (ok) got.insert(s.parts);
      }
      CHECK(got == expect);
    }

    for (int n = std::max(0, len - 1); n <= len + 2; ++n) {
      std::set<std::vector<int>> expect;
      for (const auto& p : all) {
        long long w = 0;
        for (int v : p) w += v;
        if (w <= W && in_anti_lecture_hall(p, n, len)) expect.insert(p);
      }
      std::set<std::vector<int>> got;
      for (const auto& s : gen_anti_lecture_hall(n, len, W)) {
        bool ok = true;
        for (int v : s.parts) ok = ok && v <= 6;
        if (ok) got.insert(s.parts);
      }
      CHECK(got == expect);
    }
  }
}

TEST_CASE("ramp-image statistics on a frozen example") {
  PartSequence s{SeqFamily::lecture_hall, 3, 2, {2, 1}};
  StatVector st = statistics(s);
  CHECK(st.weight == 3);
  CHECK(st.odd_index_sum == 2);
  CHECK(st.even_index_sum == 1);
  CHECK(st.positive_parts == 2);
  CHECK(st.last_part == 1);
  CHECK(st.odd_parts == 1);
  CHECK(st.has_ramp_images);
  CHECK(st.ceil_image == std::vector<int>{1, 1});
  CHECK(st.ceil_weight == 2);
  CHECK(st.ceil_odd_count == 2);
  CHECK(st.stat("odd_even_diff") == 1);
  CHECK_THROWS_AS(st.stat("no_such_statistic"), std::invalid_argument);

  PartSequence plain{SeqFamily::plain_partition, 0, 2, {2, 1}};
  CHECK_THROWS_AS(statistics(plain).stat("ceil_weight"), std::domain_error);

  PartSequence degenerate{SeqFamily::anti_lecture_hall, 1, 2, {0, 1}};
  StatVector dst = statistics(degenerate);
  CHECK_FALSE(dst.has_ramp_images);
  CHECK_THROWS_AS(dst.stat("floor_weight"), std::domain_error);
}

TEST_CASE("ceiling/floor decomposition on frozen examples") {
  PartSequence l{SeqFamily::lecture_hall, 2, 2, {3, 1}};
  MuRDecomposition dl = mu_r_decompose(l);
  CHECK(dl.mu == std::vector<int>{2, 1});
  CHECK(dl.r == std::vector<int>{1, 0});
  CHECK(dl.valid);
  CHECK(dl.multiplicity == std::vector<long long>{0, 1, 1});
  CHECK(dl.ell == std::vector<long long>{0, 1, 2});

  PartSequence a{SeqFamily::anti_lecture_hall, 2, 2, {1, 2}};
  MuRDecomposition da = mu_r_decompose(a);
  CHECK(da.mu == std::vector<int>{1, 1});
  CHECK(da.r == std::vector<int>{0, 0});
  CHECK(da.valid);
  CHECK(da.multiplicity == std::vector<long long>{0, 2});
  CHECK(da.ell == std::vector<long long>{2, 2});

  PartSequence bad{SeqFamily::lecture_hall, 2, 2, {1, 1}};
  CHECK_FALSE(mu_r_decompose(bad).valid);

  PartSequence zero_ramp{SeqFamily::anti_lecture_hall, 1, 2, {0, 1}};
  CHECK_THROWS_AS(mu_r_decompose(zero_ramp), std::domain_error);
  PartSequence plain{SeqFamily::plain_partition, 0, 2, {1, 1}};
  CHECK_THROWS_AS(mu_r_decompose(plain), std::domain_error);
}

TEST_CASE("decomposition validity characterizes membership") {
  std::vector<int> cur;
  for (int len = 1; len <= 4; ++len) {
    cur.assign(len, 0);
    std::function<void(int)> fill = [&](int i) {
      if (i == len) {
        for (int n = len; n <= len + 2; ++n) {
          PartSequence s{SeqFamily::lecture_hall, n, len, cur};
          CHECK(mu_r_decompose(s).valid == in_lecture_hall(cur, n));
        }
        for (int n = len; n <= len + 2; ++n) {
          PartSequence s{SeqFamily::anti_lecture_hall, n, len, cur};
          CHECK(mu_r_decompose(s).valid == in_anti_lecture_hall(cur, n, len));
        }
        return;
      }
      for (int v = 0; v <= 8; ++v) {
        cur[i] = v;
        fill(i + 1);
      }
    };
    fill(0);
  }
}

TEST_CASE("family designators parse and render") {
  for (const char* t : {"L(3,2)", "Lbar(4,2;last=1)", "A(2,2)", "A(3,2;last=0)", "R(3,1)",
                        "Rt(2,1,1,2)", "P(4)", "P(4,2)", "Pmax(3)", "D(2)"}) {
    CHECK(FamilySpec::parse(t).to_text() == t);
  }
  CHECK(FamilySpec::parse("L(3, 2)").to_text() == "L(3,2)");
  CHECK_THROWS_AS(FamilySpec::parse("Q(1,2)"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("L(1)"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("L(1,1"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("D(2;last=1)"), std::invalid_argument);

  FamilySpec f = FamilySpec::parse("Rt(5,2,1,3)");
  CHECK(f.n == 5);
  CHECK(f.t == 2);
  CHECK(f.j == 1);
  CHECK(f.l == 3);
}

TEST_CASE("generate dispatches on the designator") {
  CHECK(generate(FamilySpec::parse("L(2,2)"), 3).size() == 5);
  CHECK(generate(FamilySpec::parse("Lbar(3,2)"), 3).size() == 1);
  CHECK(generate(FamilySpec::parse("A(1,2)"), 2).size() == 6);
  CHECK(generate(FamilySpec::parse("R(2,1)"), 3).size() == 4);
  CHECK(generate(FamilySpec::parse("Rt(2,1,1,2)"), 4).size() == 2);
  CHECK(generate(FamilySpec::parse("P(2)"), 2).size() == 4);
  CHECK(generate(FamilySpec::parse("P(2,1)"), 2).size() == 2);
  CHECK(generate(FamilySpec::parse("Pmax(2)"), 3).size() == 6);
  CHECK(generate(FamilySpec::parse("D(2)"), 3).size() == 1);
}

TEST_CASE("weight generating functions from enumeration") {
  Grading q4 = Grading::q_grading(4);
  GradedSeries l2 = gf_oracle(FamilySpec::parse("L(2,2)"), {{"weight", Var::q}}, q4);
  CHECK(l2 == from_text("1 + q + q^2 + 2*q^3 + 2*q^4", q4));

  Grading q2 = Grading::q_grading(2);
  GradedSeries a2 = gf_oracle(FamilySpec::parse("A(2,2)"), {{"weight", Var::q}}, q2);
  CHECK(a2 == from_text("1 + q + 2*q^2", q2));
}

TEST_CASE("index-sum generating functions from enumeration") {
  Grading xy3 = Grading::xy_grading(3);
  std::vector<std::pair<std::string, Var>> xy = {{"odd_index_sum", Var::x},
                                                 {"even_index_sum", Var::y}};
  CHECK(gf_oracle(FamilySpec::parse("L(2,1)"), xy, xy3) ==
        from_text("1 + x + x^2 + x^3", xy3));
  CHECK(gf_oracle(FamilySpec::parse("L(2,2)"), xy, xy3) ==
        from_text("1 + x + x^2 + x^3 + x^2*y", xy3));
}

TEST_CASE("multi-statistic generating functions from enumeration") {
  // weight with the ceiling-image statistics on u and v
  Grading g = Grading::weighted({Var::q}, 3);
  GradedSeries s = gf_oracle(
      FamilySpec::parse("L(2,2)"),
      {{"weight", Var::q}, {"ceil_weight", Var::u}, {"ceil_odd_count", Var::v}}, g);
  // members: () -> 1, (1,0) -> u*v*q, (2,0) -> u*v*q^2, (3,0) -> u^2*q^3,
  //          (2,1) -> u^2*q^3 * (uv)... ceil((2,1)/(2,1)) = (1,1): u^2*v^2*q^3
  GradedSeries expect = GradedSeries::zero(g);
  expect.add_term(Monomial::one());
  expect.add_term(Monomial::product({{Var::u, 1}, {Var::v, 1}, {Var::q, 1}}));
  expect.add_term(Monomial::product({{Var::u, 1}, {Var::v, 1}, {Var::q, 2}}));
  expect.add_term(Monomial::product({{Var::u, 2}, {Var::q, 3}}));
  expect.add_term(Monomial::product({{Var::u, 2}, {Var::v, 2}, {Var::q, 3}}));
  CHECK(s == expect);

  // an assignment that cannot bound the weight is rejected
  CHECK_THROWS_AS(
      gf_oracle(FamilySpec::parse("L(2,2)"), {{"positive_parts", Var::z}}, g),
      std::invalid_argument);
}

TEST_CASE("exact-positive classes partition the truncated family") {
  Grading q8 = Grading::q_grading(8);
  std::vector<std::pair<std::string, Var>> wq = {{"weight", Var::q}};
  GradedSeries whole = gf_oracle(FamilySpec::parse("L(3,2)"), wq, q8);
  GradedSeries sum = GradedSeries::zero(q8);
  for (int m = 0; m <= 2; ++m) {
    FamilySpec f = FamilySpec::parse("Lbar(3," + std::to_string(m) + ")");
    sum = qhall::add(sum, gf_oracle(f, wq, q8));
  }
  CHECK(whole == sum);

  GradedSeries a_whole = gf_oracle(FamilySpec::parse("A(3,2)"), wq, q8);
  GradedSeries a_sum = GradedSeries::zero(q8);
  for (int i = 0; i <= 8; ++i) {
    FamilySpec f = FamilySpec::parse("A(3,2;last=" + std::to_string(i) + ")");
    a_sum = qhall::add(a_sum, gf_oracle(f, wq, q8));
  }
  CHECK(a_whole == a_sum);
}

TEST_CASE("sequence text rendering and parsing") {
  PartSequence s{SeqFamily::lecture_hall, 3, 2, {2, 1}};
  CHECK(sequence_to_text(s) == "(2,1)");
  PartSequence z{SeqFamily::lecture_hall, 3, 2, {0, 0}};
  CHECK(sequence_to_text(z) == "()");
  PartSequence e{SeqFamily::plain_partition, 0, 0, {}};
  CHECK(sequence_to_text(e) == "()");

  CHECK(parse_parts("(2,1)") == std::vector<int>{2, 1});
  CHECK(parse_parts("2,1") == std::vector<int>{2, 1});
  CHECK(parse_parts("()") == std::vector<int>{});
  CHECK(parse_parts("5") == std::vector<int>{5});
  CHECK_THROWS_AS(parse_parts("(2,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_parts("2,x"), std::invalid_argument);
}

TEST_CASE("ramp values") {
  CHECK(family_ramp(SeqFamily::lecture_hall, 4, 3, 1) == 4);
  CHECK(family_ramp(SeqFamily::lecture_hall, 4, 3, 3) == 2);
  CHECK(family_ramp(SeqFamily::anti_lecture_hall, 4, 3, 1) == 2);
  CHECK(family_ramp(SeqFamily::anti_lecture_hall, 4, 3, 3) == 4);
  CHECK(family_ramp(SeqFamily::anti_lecture_hall, 1, 2, 1) == 0);
  CHECK_THROWS_AS(family_ramp(SeqFamily::plain_partition, 4, 3, 1), std::domain_error);
  CHECK_THROWS_AS(family_ramp(SeqFamily::lecture_hall, 4, 3, 4), std::domain_error);
}
