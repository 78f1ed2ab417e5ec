#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qdl/checkers.hpp"
#include "qdl/errors.hpp"
#include "qdl/qcat.hpp"
#include "qdl/quantale.hpp"
#include "support.hpp"

using namespace qdl;
using test::poset_category;
using test::self_enriched;

namespace {

template <class F>
std::optional<ErrorKind> kind_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.kind;
  } catch (...) {
  }
  return std::nullopt;
}

QCategory bool_chain(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    for (int j = 0; j < n; ++j) le[i][j] = i <= j;
  }
  return poset_category(names, le);
}

QCategory bool_cube8() {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> le(8, std::vector<bool>(8));
  for (int i = 0; i < 8; ++i) {
    names.push_back("s" + std::to_string(i));
    for (int j = 0; j < 8; ++j) le[i][j] = (i & ~j) == 0;
  }
  return poset_category(names, le);
}

QCategory bool_m3() {
  auto up = [](int i, int j) {
    return i == j || i == 0 || j == 4;  // 0 below all, 4 above all
  };
  std::vector<std::vector<bool>> le(5, std::vector<bool>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) le[i][j] = up(i, j);
  return poset_category({"0", "a", "b", "c", "1"}, le);
}

QCategory bool_n5() {
  // 0 < a < c < 1 and 0 < b < 1, with b incomparable to a and c.
  std::vector<std::vector<bool>> le(5, std::vector<bool>(5, false));
  auto set = [&](int i, int j) { le[i][j] = true; };
  for (int i = 0; i < 5; ++i) set(i, i);
  for (int j = 0; j < 5; ++j) set(0, j);
  for (int i = 0; i < 5; ++i) set(i, 4);
  set(1, 2);  // a <= c
  return poset_category({"0", "a", "b", "c", "1"}, le);
}

QCategory antichain2() {
  return poset_category({"a", "b"}, {{true, false}, {false, true}});
}

QCategory indiscrete2() {
  return poset_category({"a", "b"}, {{true, true}, {true, true}});
}

}  // namespace

TEST_CASE("completeness verdicts on small Boolean orders") {
  for (int n = 2; n <= 5; ++n) {
    auto c = bool_chain(n);
    auto co = is_cocomplete(c);
    CHECK(co.verdict);
    CHECK(co.method == CheckMethod::both_agree);
    auto cm = is_complete(c);
    CHECK(cm.verdict);
    CHECK(cm.method == CheckMethod::both_agree);
  }
  for (auto make : {bool_cube8, bool_m3, bool_n5}) {
    auto a = make();
    CHECK(is_cocomplete(a).verdict);
    CHECK(is_complete(a).verdict);
  }
  auto anti = is_cocomplete(antichain2());
  CHECK(!anti.verdict);
  CHECK(anti.method == CheckMethod::both_agree);
  REQUIRE(anti.witness.has_value());
  CHECK(!anti.witness->what.empty());
  CHECK(!is_complete(antichain2()).verdict);
  // A vee a <= c >= b has binary joins but no bottom.
  auto vee = poset_category(
      {"a", "b", "c"}, {{true, false, true}, {false, true, true}, {false, false, true}});
  CHECK(!is_cocomplete(vee).verdict);
  CHECK(!is_complete(vee).verdict);
}

TEST_CASE("complete iff cocomplete at finite scale") {
  std::vector<QCategory> pool = {bool_chain(2),
                                 bool_chain(4),
                                 bool_cube8(),
                                 bool_m3(),
                                 bool_n5(),
                                 antichain2(),
                                 indiscrete2(),
                                 self_enriched(FiniteQuantale::standard_godel_chain(3)),
                                 self_enriched(FiniteQuantale::standard_lukasiewicz_chain(4)),
                                 self_enriched(test::diamond_frame()),
                                 self_enriched(test::nonintegral_chain3())};
  for (const auto& a : pool) CHECK(is_cocomplete(a).verdict == is_complete(a).verdict);
}

TEST_CASE("enumeration cap: forced brute throws, default falls back to criteria") {
  auto g4 = self_enriched(FiniteQuantale::standard_godel_chain(4));
  CheckOptions tiny;
  tiny.cap = 16;  // 4^4 = 256 candidate vectors > 16
  tiny.force_brute = true;
  CHECK(kind_of([&] { is_cocomplete(g4, tiny); }) == ErrorKind::CapExceeded);
  CheckOptions fallback;
  fallback.cap = 16;
  auto rep = is_cocomplete(g4, fallback);
  CHECK(rep.verdict);
  CHECK(rep.method == CheckMethod::criteria);
}

TEST_CASE("complete distributivity on Boolean orders") {
  for (int n = 2; n <= 5; ++n) {
    auto rep = is_completely_distributive(bool_chain(n));
    CHECK(rep.verdict);
    CHECK(rep.method == CheckMethod::both_agree);
    CHECK(is_completely_codistributive(bool_chain(n)).verdict);
  }
  auto cube = is_completely_distributive(bool_cube8());
  CHECK(cube.verdict);
  CHECK(cube.method == CheckMethod::both_agree);
  CHECK(is_completely_codistributive(bool_cube8()).verdict);

  auto m3 = is_completely_distributive(bool_m3());
  CHECK(!m3.verdict);
  CHECK(m3.method == CheckMethod::both_agree);
  REQUIRE(m3.witness.has_value());
  CHECK(!m3.witness->what.empty());
  CHECK(!is_completely_codistributive(bool_m3()).verdict);
  CHECK(!is_completely_distributive(bool_n5()).verdict);
  CHECK(!is_completely_codistributive(bool_n5()).verdict);

  // Not even cocomplete: verdict false rather than an error.
  CHECK(!is_completely_distributive(antichain2()).verdict);
  // Not separated: refused.
  CHECK(kind_of([&] { is_completely_distributive(indiscrete2()); }) == ErrorKind::NotSeparated);
  CHECK(kind_of([&] { is_completely_codistributive(indiscrete2()); }) == ErrorKind::NotSeparated);
}

TEST_CASE("distributivity and codistributivity are independent: Godel vs Lukasiewicz") {
  // Self-enriched Godel chains are completely distributive but not
  // codistributively so: the empty coweight needs a left-adjoint image that
  // the two-valued Godel negation cannot provide. Lukasiewicz chains have an
  // involutive negation and pass both.
  for (int n = 3; n <= 4; ++n) {
    auto g = self_enriched(FiniteQuantale::standard_godel_chain(n));
    auto cd = is_completely_distributive(g);
    CHECK(cd.verdict);
    CHECK(cd.method == CheckMethod::both_agree);
    auto cocd = is_completely_codistributive(g);
    CHECK(!cocd.verdict);
    CHECK(cocd.method == CheckMethod::both_agree);
    REQUIRE(cocd.witness.has_value());

    auto l = self_enriched(FiniteQuantale::standard_lukasiewicz_chain(n));
    CHECK(is_completely_distributive(l).verdict);
    CHECK(is_completely_codistributive(l).verdict);
  }
}

TEST_CASE("forward-Cauchy weights are exactly the representables at finite scale") {
  std::vector<QCategory> pool = {bool_chain(3), bool_m3(), antichain2(),
                                 self_enriched(FiniteQuantale::standard_godel_chain(3)),
                                 self_enriched(FiniteQuantale::standard_lukasiewicz_chain(4)),
                                 self_enriched(test::diamond_frame())};
  for (const auto& a : pool) {
    auto fc = forward_cauchy_weights(a);
    std::set<Weight> reps;
    for (int x = 0; x < a.size(); ++x) reps.insert(yoneda(a, x));
    CHECK(std::set<Weight>(fc.begin(), fc.end()) == reps);
    CHECK(fc.size() == reps.size());  // deduplicated
  }
  CHECK(kind_of([&] { forward_cauchy_weights(self_enriched(test::nonintegral_chain3())); }) ==
        ErrorKind::NotIntegral);
}

TEST_CASE("weights of directed sets and their level sets") {
  auto c = bool_chain(3);
  CHECK(weight_of_directed_set(c, {0, 2}) == yoneda(c, 2));
  CHECK(weight_of_directed_set(c, {1}) == yoneda(c, 1));
  CHECK(kind_of([&] { weight_of_directed_set(c, {}); }) == ErrorKind::NotDirected);
  CHECK(kind_of([&] { weight_of_directed_set(antichain2(), {0, 1}); }) ==
        ErrorKind::NotDirected);

  auto g = self_enriched(FiniteQuantale::standard_godel_chain(3));
  // Hand-derived: level set of (1, 1, 1/2): unit dominates the first two entries.
  CHECK(ideal_of_weight(g, Weight{2, 2, 1}) == std::vector<int>{0, 1});
  for (int x = 0; x < g.size(); ++x) {
    std::vector<int> down;
    for (int y = 0; y <= x; ++y) down.push_back(y);
    CHECK(ideal_of_weight(g, yoneda(g, x)) == down);
  }
}

TEST_CASE("the directed-set / level-set correspondence checker") {
  for (auto a : {bool_chain(2), bool_chain(4), bool_cube8(), bool_m3()}) {
    auto rep = check_lambda_gamma(a);
    CHECK(rep.verdict);
    CHECK(rep.method == CheckMethod::brute_force);
  }
  for (int n = 3; n <= 4; ++n) {
    CHECK(check_lambda_gamma(self_enriched(FiniteQuantale::standard_godel_chain(n))).verdict);
    CHECK(
        check_lambda_gamma(self_enriched(FiniteQuantale::standard_lukasiewicz_chain(n))).verdict);
  }
  CHECK(kind_of([&] { check_lambda_gamma(antichain2()); }) == ErrorKind::NotComplete);
  CHECK(kind_of([&] { check_lambda_gamma(indiscrete2()); }) == ErrorKind::NotSeparated);
  CHECK(kind_of([&] { check_lambda_gamma(self_enriched(test::nonintegral_chain3())); }) ==
        ErrorKind::NotIntegral);
}

TEST_CASE("continuity of separated categories over integral quantales") {
  for (auto a : {bool_chain(2), bool_chain(5), bool_cube8(), bool_m3(), bool_n5(), antichain2()}) {
    auto rep = is_continuous_qcat(a);
    CHECK(rep.verdict);
    CHECK(rep.method == CheckMethod::both_agree);
  }
  for (int n = 3; n <= 4; ++n) {
    CHECK(is_continuous_qcat(self_enriched(FiniteQuantale::standard_godel_chain(n))).verdict);
    CHECK(
        is_continuous_qcat(self_enriched(FiniteQuantale::standard_lukasiewicz_chain(n))).verdict);
  }
  CHECK(kind_of([&] { is_continuous_qcat(indiscrete2()); }) == ErrorKind::NotSeparated);
  CHECK(kind_of([&] { is_continuous_qcat(self_enriched(test::nonintegral_chain3())); }) ==
        ErrorKind::NotIntegral);
}

TEST_CASE("distributivity implies continuity on separated integral instances") {
  std::vector<QCategory> pool = {bool_chain(2),
                                 bool_chain(4),
                                 bool_cube8(),
                                 bool_m3(),
                                 bool_n5(),
                                 antichain2(),
                                 self_enriched(FiniteQuantale::standard_godel_chain(4)),
                                 self_enriched(FiniteQuantale::standard_lukasiewicz_chain(4)),
                                 self_enriched(test::diamond_frame())};
  for (const auto& a : pool) {
    if (!is_separated(a) || !a.q->is_integral()) continue;
    if (!is_cocomplete(a).verdict) continue;
    if (is_completely_distributive(a).verdict) CHECK(is_continuous_qcat(a).verdict);
  }
}

TEST_CASE("net condition evaluation") {
  auto c = bool_chain(3);
  SUBCASE("constant and eventually-constant nets are forward Cauchy") {
    auto one = check_net(c, {{true}}, {1});
    CHECK(one.forward_cauchy);
    CHECK(one.condition_value == c.q->top());
    CHECK(one.weight == yoneda(c, 1));
    auto inc = check_net(c, {{true, true}, {false, true}}, {0, 2});
    CHECK(inc.forward_cauchy);
    CHECK(inc.weight == yoneda(c, 2));
    // Alternating values over a chain index: the literal condition only sees
    // the tail at the top index, so it still holds.
    std::vector<std::vector<bool>> chain4(4, std::vector<bool>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) chain4[i][j] = i <= j;
    auto alt = check_net(c, chain4, {2, 0, 2, 0});
    CHECK(alt.forward_cauchy);
    CHECK(alt.weight == yoneda(c, 0));
  }
  SUBCASE("a two-element top cluster with clashing values fails") {
    auto a = antichain2();
    auto rep = check_net(a, {{true, true}, {true, true}}, {0, 1});
    CHECK(!rep.forward_cauchy);
    CHECK(rep.condition_value == a.q->bottom());
  }
  SUBCASE("index validation") {
    // Directed sets are nonempty by definition, so an empty index is a
    // directedness failure rather than a shape failure.
    CHECK(kind_of([&] { check_net(c, {}, {}); }) == ErrorKind::NotDirected);
    CHECK(kind_of([&] { check_net(c, {{true, true}, {true}}, {0, 1}); }) ==
          ErrorKind::ShapeError);
    CHECK(kind_of([&] { check_net(c, {{false}}, {0}); }) == ErrorKind::ShapeError);
    CHECK(kind_of([&] {
            check_net(c,
                      {{true, true, false}, {false, true, true}, {false, false, true}},
                      {0, 1, 2});
          }) == ErrorKind::ShapeError);
    CHECK(kind_of([&] { check_net(c, {{true, false}, {false, true}}, {0, 1}); }) ==
          ErrorKind::NotDirected);
    CHECK(kind_of([&] { check_net(c, {{true}}, {0, 1}); }) == ErrorKind::ShapeError);
    // A net value that names no object is reported like any other bad
    // element reference.
    CHECK(kind_of([&] { check_net(c, {{true}}, {7}); }) == ErrorKind::UnknownElement);
  }
}

TEST_CASE("reflection of weights onto forward-Cauchy weights") {
  for (auto a : {bool_chain(2), bool_chain(4), bool_cube8(), bool_m3()}) {
    auto rep = check_inclusion_left_adjoint(a);
    CHECK(rep.verdict);
  }
  CHECK(check_inclusion_left_adjoint(self_enriched(FiniteQuantale::standard_godel_chain(3)))
            .verdict);
  CHECK(
      check_inclusion_left_adjoint(self_enriched(FiniteQuantale::standard_lukasiewicz_chain(4)))
          .verdict);
  CHECK(kind_of([&] { check_inclusion_left_adjoint(antichain2()); }) == ErrorKind::NotComplete);
  CHECK(kind_of([&] { check_inclusion_left_adjoint(indiscrete2()); }) ==
        ErrorKind::NotSeparated);
  CHECK(kind_of([&] {
          check_inclusion_left_adjoint(self_enriched(test::nonintegral_chain3()));
        }) == ErrorKind::NotIntegral);
}

TEST_CASE("cotensors commute with directed joins in complete categories") {
  for (auto a : {bool_chain(3), bool_cube8(), bool_m3(), bool_n5()}) {
    CHECK(check_cotensor_scott_continuity(a).verdict);
  }
  CHECK(check_cotensor_scott_continuity(self_enriched(FiniteQuantale::standard_godel_chain(4)))
            .verdict);
  CHECK(check_cotensor_scott_continuity(self_enriched(test::nonintegral_chain3())).verdict);
  CHECK(kind_of([&] { check_cotensor_scott_continuity(antichain2()); }) ==
        ErrorKind::NotComplete);
}

TEST_CASE("random closed subcategories are complete and pass every checker") {
  std::vector<QuantalePtr> pool = {FiniteQuantale::standard_boolean(),
                                   FiniteQuantale::standard_godel_chain(3),
                                   FiniteQuantale::standard_godel_chain(4),
                                   FiniteQuantale::standard_lukasiewicz_chain(3),
                                   FiniteQuantale::standard_lukasiewicz_chain(4),
                                   test::diamond_frame()};
  std::mt19937 rng(991);
  int built = 0;
  for (const auto& q : pool)
    for (int trial = 0; trial < 4; ++trial) {
      std::set<int> seed;
      std::uniform_int_distribution<int> pick(0, q->size() - 1);
      const int extras = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < extras; ++i) seed.insert(pick(rng));
      auto a = test::closed_subcategory(q, seed);
      ++built;
      CAPTURE(q->size());
      CAPTURE(a.size());
      CHECK(validate_category(a).empty());
      CHECK(is_separated(a));
      auto co = is_cocomplete(a);
      auto cm = is_complete(a);
      CHECK(co.verdict);
      CHECK(cm.verdict);
      CHECK(co.method == CheckMethod::both_agree);
      CHECK(cm.method == CheckMethod::both_agree);
      CHECK(check_lambda_gamma(a).verdict);
      CHECK(is_continuous_qcat(a).verdict);
      CHECK(check_inclusion_left_adjoint(a).verdict);
      CHECK(check_cotensor_scott_continuity(a).verdict);
      if (is_completely_distributive(a).verdict) CHECK(is_continuous_qcat(a).verdict);

      // Cross-check every colimit against the closed form join(phi(x) & x).
      for (const auto& phi : enumerate_weights(a)) {
        auto s = sup_weight(a, phi);
        REQUIRE(s.found());
        std::vector<int> terms;
        for (int x = 0; x < a.size(); ++x)
          terms.push_back(q->tensor(phi[x], q->index_of(a.objects[x])));
        CHECK(a.objects[*s.object] == q->label(q->join_of(terms)));
      }
    }
  CHECK(built >= 20);
}
