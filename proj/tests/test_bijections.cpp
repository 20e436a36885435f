#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhall/bijections.hpp"

using namespace qhall;

TEST_CASE("insertion maps reproduce hand-computed images") {
  CHECK(apply_map({MapId::bme, 2, 0}, {3}, 1).parts == std::vector<int>{7, 3});
  CHECK(apply_map({MapId::bme, 3, 0}, {2, 1}, 0).parts == std::vector<int>{3, 2, 0});
  CHECK(apply_map({MapId::bme, 1, 0}, {}, 4).parts == std::vector<int>{4});

  CHECK(apply_map({MapId::bme_nk, 3, 3}, {2, 1}, 0).parts == std::vector<int>{3, 2, 1});
  CHECK(apply_map({MapId::bme_nk, 2, 1}, {}, 3).parts == std::vector<int>{4});
  CHECK(apply_map({MapId::bme_nk, 2, 2}, {5}, 1).parts == std::vector<int>{11, 5});

  CHECK(apply_map({MapId::theta_nk, 2, 2}, {3}, 0).parts == std::vector<int>{2, 3});
  CHECK(apply_map({MapId::theta_nk, 2, 1}, {}, 2).parts == std::vector<int>{2});
  CHECK(apply_map({MapId::theta_nk, 1, 2}, {3}, 2).parts == std::vector<int>{2, 3});
  CHECK(apply_map({MapId::theta_nk, 2, 3}, {1, 1}, 4).parts == std::vector<int>{4, 1, 1});
}

TEST_CASE("insertion maps validate their inputs") {
  CHECK_THROWS_AS(apply_map({MapId::bme, 2, 0}, {1, 1}, 0), std::domain_error);  // wrong length
  CHECK_THROWS_AS(apply_map({MapId::bme_nk, 3, 3}, {1, 1}, 0), std::domain_error);  // not a member
  CHECK_THROWS_AS(apply_map({MapId::bme_nk, 3, 3}, {2, 0}, 0), std::domain_error);  // zero entry
  CHECK_THROWS_AS(apply_map({MapId::bme, 2, 0}, {3}, -1), std::domain_error);
  CHECK_THROWS_AS(apply_map({MapId::bme, 0, 0}, {}, 0), std::domain_error);
  CHECK_THROWS_AS(apply_map({MapId::bme_nk, 2, 3}, {1, 1}, 0), std::domain_error);
  CHECK_THROWS_AS(apply_map({MapId::theta_nk, 1, 3}, {1, 1}, 0), std::domain_error);
}

TEST_CASE("domain and codomain designators") {
  CHECK(map_domain({MapId::bme, 3, 0}).to_text() == "L(2,2)");
  CHECK(map_codomain({MapId::bme, 3, 0}).to_text() == "L(3,3)");
  CHECK(map_domain({MapId::bme_nk, 4, 2}).to_text() == "Lbar(3,1)");
  CHECK(map_codomain({MapId::bme_nk, 4, 2}).to_text() == "Lbar(4,2)");
  CHECK(map_domain({MapId::theta_nk, 3, 2}).to_text() == "A(3,1)");
  CHECK(map_codomain({MapId::theta_nk, 3, 2}).to_text() == "A(3,2)");
  CHECK(map_from_name("theta_nk") == MapId::theta_nk);
  CHECK(map_name(MapId::bme_nk) == "bme_nk");
  CHECK_THROWS_AS(map_from_name("nope"), std::invalid_argument);
}

TEST_CASE("index-sum laws hold on the frozen images") {
  // bme: |mu_odd| = 2|lambda_odd| - |lambda_even| + s
  PartSequence mu = apply_map({MapId::bme, 2, 0}, {3}, 1);
  StatVector st = statistics(mu);
  CHECK(st.even_index_sum == 3);
  CHECK(st.odd_index_sum == 2 * 3 - 0 + 1 + law_correction({MapId::bme, 2, 0}, mu));

  // bme_nk, odd k: correction +1
  MapInstance b33{MapId::bme_nk, 3, 3};
  PartSequence mu2 = apply_map(b33, {2, 1}, 0);
  CHECK(law_correction(b33, mu2) == 1);
  CHECK(statistics(mu2).odd_index_sum == 2 * 2 - 1 + 0 + 1);

  // theta_nk, even k: correction -i - floor(i/n) with i the last image entry
  MapInstance t22{MapId::theta_nk, 2, 2};
  PartSequence mu3 = apply_map(t22, {3}, 0);
  CHECK(law_correction(t22, mu3) == -3 - 1);
  CHECK(statistics(mu3).odd_index_sum == 2 * 3 - 0 + 0 + (-3 - 1));
}

TEST_CASE("bme verifies as a weight bijection") {
  for (int n = 1; n <= 4; ++n) {
    BijectionReport rep = verify_bijection({MapId::bme, n, 0}, 8);
    INFO("bme n=", n, " failure: ", rep.failure);
    CHECK(rep.pass);
    CHECK(rep.pairs_checked >= rep.codomain_size);
    CHECK(rep.codomain_size > 0);
  }
}

TEST_CASE("bme_nk verifies as a weight bijection") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      BijectionReport rep = verify_bijection({MapId::bme_nk, n, k}, 8);
      INFO("bme_nk n=", n, " k=", k, " failure: ", rep.failure);
      CHECK(rep.pass);
    }
}

TEST_CASE("theta_nk verifies as a weight bijection") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n + 1; ++k) {
      BijectionReport rep = verify_bijection({MapId::theta_nk, n, k}, 8);
      INFO("theta_nk n=", n, " k=", k, " failure: ", rep.failure);
      CHECK(rep.pass);
    }
}

TEST_CASE("pair enumeration matches the image count exactly") {
  // injectivity plus surjectivity onto the bound means the counts agree
  BijectionReport rep = verify_bijection({MapId::bme_nk, 3, 2}, 10);
  CHECK(rep.pass);
  CHECK(rep.pairs_checked == rep.codomain_size);
}

TEST_CASE("trace rendering") {
  CHECK(trace_map({MapId::bme, 2, 0}, {3}, 1) ==
        "((3); s=1) -> (7,3) [weight=10 odd_index_sum=7 even_index_sum=3]");
  CHECK(trace_map({MapId::theta_nk, 2, 1}, {}, 2) ==
        "((); s=2) -> (2) [weight=2 odd_index_sum=2 even_index_sum=0]");
}
