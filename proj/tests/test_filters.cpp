#include <doctest.h>

#include "oracles.hpp"
#include "rlat/error.hpp"
#include "rlat/filters.hpp"
#include "support.hpp"

using namespace rlat;
using rlat::test::a6;
using rlat::test::filter;
using rlat::test::set;

TEST_CASE("filter membership") {
  auto const& s = a6();
  CHECK(is_filter(s, set(s, "c,d,1")));
  CHECK(is_filter(s, set(s, "d,1")));
  CHECK(is_filter(s, set(s, "1")));
  CHECK_FALSE(is_filter(s, set(s, "b,d,1")));
  CHECK_FALSE(is_filter(s, SubsetMask(s.size())));
  CHECK_THROWS_AS(make_filter(s, set(s, "b,d,1")), Error);
}

TEST_CASE("generated filters") {
  auto const& s = a6();
  CHECK(generated_filter(s, set(s, "c")) == filter(s, "c,d,1"));
  CHECK(generated_filter(s, set(s, "1")) == filter(s, "1"));
  CHECK(generated_filter(s, set(s, "0")) == full_filter(s));
  CHECK(generated_filter(s, SubsetMask(s.size())) == trivial_filter(s));
  CHECK(generated_filter(s, filter(s, "d,1"), *s.find("c")) == filter(s, "c,d,1"));
}

TEST_CASE("filter enumeration") {
  auto const& s = a6();
  auto const lat = all_filters(s);
  std::vector<Filter> expected = {filter(s, "1"), filter(s, "d,1"), filter(s, "c,d,1"),
                                  filter(s, "a,b,d,1"), full_filter(s)};
  CHECK(lat.filters() == expected);
  CHECK(lat[lat.bottom()] == trivial_filter(s));
  CHECK(lat[lat.top()] == full_filter(s));

  auto const& c2 = test::chain2();
  CHECK(all_filters(c2).filters()
        == std::vector<Filter>{trivial_filter(c2), full_filter(c2)});

  auto const& g3 = test::godel3();
  CHECK(all_filters(g3).filters()
        == std::vector<Filter>{filter(g3, "1"), filter(g3, "m,1"), full_filter(g3)});
}

TEST_CASE("filter enumeration matches the subset scan on fixtures") {
  for (auto const* s : {&a6(), &test::chain2(), &test::godel3(), &test::luk3()}) {
    std::vector<oracle::Bits> got;
    for (auto const owner = all_filters(*s); auto const& F : owner.filters()) {
      got.push_back(F.mask().bits());
    }
    auto want = oracle::all_filters(*s);
    std::sort(got.begin(), got.end());
    CHECK(got == want);
  }
}

TEST_CASE("filter lattice operations") {
  auto const& s = a6();
  auto const lat = all_filters(s);
  Filter const F2 = filter(s, "d,1"), F3 = filter(s, "a,b,d,1"), F4 = filter(s, "c,d,1");
  CHECK(filter_join(lat, F3, F4) == full_filter(s));
  CHECK(filter_join(lat, F3, F3) == F3);
  CHECK(filter_meet(lat, F3, F4) == F2);
  CHECK(filter_join(s, F3, F4) == full_filter(s));
  CHECK_THROWS_AS(filter_join(lat, F3, Filter(set(s, "b,d,1"))), Error);
}

TEST_CASE("ideals") {
  auto const& s = a6();
  CHECK(generated_ideal(s, set(s, "b")).mask() == set(s, "0,a,b"));
  CHECK(generated_ideal(s, set(s, "1")).mask() == SubsetMask::full(s.size()));
  CHECK(generated_ideal(s, set(s, "a,c")).mask() == set(s, "0,a,b,c,d"));
  CHECK(generated_ideal(s, SubsetMask(s.size())).mask() == set(s, "0"));
  std::vector<oracle::Bits> got;
  for (auto const& I : all_ideals(s)) {
    got.push_back(I.mask().bits());
  }
  std::sort(got.begin(), got.end());
  CHECK(got == oracle::all_ideals(s));
}

TEST_CASE("set formatting") {
  auto const& s = a6();
  CHECK(format_set(s, set(s, "1,c,d")) == "{c,d,1}");
  CHECK(format_set(s, SubsetMask(s.size())) == "{}");
}
