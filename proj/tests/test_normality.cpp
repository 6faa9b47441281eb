#include <doctest.h>

#include "oracles.hpp"
#include "rlat/error.hpp"
#include "rlat/normality.hpp"
#include "rlat/spectra.hpp"
#include "support.hpp"

using namespace rlat;
using rlat::test::a6;
using rlat::test::filter;

namespace {
  bool all_conditions(EquivalenceVerdict const& v, bool value) {
    for (auto const& [label, b] : v.conditions) {
      if (b != value) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("n-prime filters") {
  auto const& s = a6();
  Filter const F2 = filter(s, "d,1");
  auto const three = is_n_prime(s, F2, 3);
  CHECK(three.agree);
  CHECK(three.condition("prime_cover"));
  auto const two = is_n_prime(s, F2, 2);
  CHECK(two.agree);
  CHECK_FALSE(two.condition("prime_cover"));
  for (auto const& P : spectrum(s).primes) {
    CHECK(is_n_prime(s, P, 2).condition("prime_cover"));
  }
  CHECK_THROWS_AS(is_n_prime(s, F2, 1), Error);
  CHECK_THROWS_AS(is_n_prime(s, full_filter(s), 2), Error);
  CHECK(prime_cover_size(s, spectrum(s).primes, F2) == 2);
}

TEST_CASE("normality index") {
  auto const& s = a6();
  auto const r1 = normality_report(s, trivial_filter(s));
  CHECK(r1.index == 1);
  REQUIRE(r1.per_prime.size() == 3);
  for (auto const& [P, k] : r1.per_prime) {
    CHECK(k == 1);
  }
  auto const r2 = normality_report(s, filter(s, "d,1"));
  CHECK(r2.index == 1);
  CHECK(r2.per_prime.size() == 2);
  for (auto const owner = all_filters(s); auto const& F : owner.filters()) {
    if (F.is_proper()) {
      CHECK(normality_report(s, F).index == 1);
    }
  }
  CHECK(normality_report(test::chain2(), trivial_filter(test::chain2())).index == 1);
  CHECK_THROWS_AS(normality_report(s, full_filter(s)), Error);

  auto const& nn = test::non_normal();
  REQUIRE(nn.size() == 5);
  CHECK(normality_report(nn, trivial_filter(nn)).index == 2);
}

TEST_CASE("normality index matches the containment scan on the census") {
  for (auto const& s : test::census(5)) {
    for (auto const owner = all_filters(s); auto const& F : owner.filters()) {
      if (F.is_proper()) {
        CHECK(normality_report(s, F).index
              == oracle::normality_index(s, F.mask().bits()));
      }
    }
  }
}

TEST_CASE("separating elements") {
  auto const& s = a6();
  Filter const F2 = filter(s, "d,1"), F3 = filter(s, "a,b,d,1"), F4 = filter(s, "c,d,1");
  auto const w = separating_elements(s, F2, {F3, F4});
  REQUIRE(w.a.size() == 2);
  CHECK(w.postconditions_hold());
  CHECK(F2.contains(s.join(w.a[0], w.a[1])));
  CHECK_FALSE(F3.contains(w.a[0]));
  CHECK_FALSE(F4.contains(w.a[1]));
  // the lexicographically first tuple; (c, b) is another valid one
  CHECK(w.a == std::vector<Elem>{*s.find("c"), *s.find("a")});
  CHECK(w.b == std::vector<Elem>{*s.find("a"), *s.find("c")});

  auto const& g3 = test::godel3();
  try {
    separating_elements(g3, trivial_filter(g3), {trivial_filter(g3)});
    FAIL("expected bad_n");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::bad_n);
  }
  try {
    separating_elements(s, F2, {F3, F2});
    FAIL("expected not_minimal_prime");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_minimal_prime);
  }
}

TEST_CASE("n-normality conditions") {
  auto const& s = a6();
  auto const v1 = check_n_normality(s, trivial_filter(s), 1);
  CHECK(v1.agree);
  CHECK(v1.conditions.size() == 7);
  CHECK(all_conditions(v1, true));
  auto const v2 = check_n_normality(s, filter(s, "d,1"), 1);
  CHECK(v2.agree);
  CHECK(all_conditions(v2, true));
  auto const v3 = check_n_normality(s, filter(s, "d,1"), 2);
  CHECK(v3.agree);
  CHECK(all_conditions(v3, true));
  CHECK_THROWS_AS(check_n_normality(s, trivial_filter(s), 0), Error);

  auto const& nn = test::non_normal();
  auto const w1 = check_n_normality(nn, trivial_filter(nn), 1);
  CHECK(w1.agree);
  CHECK(all_conditions(w1, false));
  auto const w2 = check_n_normality(nn, trivial_filter(nn), 2);
  CHECK(w2.agree);
  CHECK(all_conditions(w2, true));
}

TEST_CASE("normality and omega sublattice conditions") {
  for (auto const* s : {&a6(), &test::chain2(), &test::godel3(), &test::luk3()}) {
    CAPTURE(s->name);
    auto const v = check_normality(*s);
    CHECK(v.agree);
    CHECK(all_conditions(v, true));
    auto const w = check_omega_sublattice(*s);
    CHECK(w.agree);
    CHECK(all_conditions(w, true));
  }
  auto const& nn = test::non_normal();
  auto const v = check_normality(nn);
  CHECK(v.agree);
  CHECK(all_conditions(v, false));
  auto const w = check_omega_sublattice(nn);
  CHECK(w.agree);
  CHECK_FALSE(w.condition("normal"));
}

TEST_CASE("sigma is the greatest omega-filter below") {
  auto const& s = a6();
  for (auto const owner = all_filters(s); auto const& F : owner.filters()) {
    auto const r = check_greatest_omega_filter(s, F);
    CHECK(r.applicable);
    CHECK(r.holds);
  }
  auto const& nn = test::non_normal();
  CHECK_FALSE(check_greatest_omega_filter(nn, trivial_filter(nn)).applicable);
}
