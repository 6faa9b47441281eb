#include <doctest.h>

#include "oracles.hpp"
#include "rlat/coann.hpp"
#include "rlat/error.hpp"
#include "support.hpp"

using namespace rlat;
using rlat::test::a6;
using rlat::test::filter;
using rlat::test::set;

TEST_CASE("coannulets of the fixture") {
  auto const& s  = a6();
  Filter const F4 = filter(s, "c,d,1");
  for (char const* x : {"0", "a", "b"}) {
    CHECK(coannulet(s, F4, *s.find(x)) == F4);
  }
  for (char const* x : {"c", "d", "1"}) {
    CHECK(coannulet(s, F4, *s.find(x)) == full_filter(s));
  }
  CHECK(coannulet(s, trivial_filter(s), *s.find("d")) == trivial_filter(s));
  CHECK(coannulet(s, trivial_filter(s), *s.find("0")) == trivial_filter(s));
  CHECK(coannihilator(s, F4, SubsetMask(s.size())) == full_filter(s));
  CHECK(coannihilator(s, F4, set(s, "d,1")) == full_filter(s));
}

TEST_CASE("coannihilator families") {
  auto const& s = a6();
  Filter const F4 = filter(s, "c,d,1");
  auto const fam4 = coann_family(s, F4);
  CHECK(fam4.members() == std::vector<Filter>{F4, full_filter(s)});
  CHECK(fam4.coannulets() == std::vector<Filter>{F4, full_filter(s)});

  auto const fam1 = coann_family(s, trivial_filter(s));
  CHECK(fam1.members() == std::vector<Filter>{trivial_filter(s), full_filter(s)});

  auto const famA = coann_family(s, full_filter(s));
  CHECK(famA.members() == std::vector<Filter>{full_filter(s)});
}

TEST_CASE("join and complement of coannihilators") {
  auto const& s = a6();
  Filter const F2 = filter(s, "d,1");
  auto const fam = coann_family(s, F2);
  Filter const Gb = coannulet(s, F2, *s.find("b"));
  Filter const Gc = coannulet(s, F2, *s.find("c"));
  CHECK(Gb == filter(s, "c,d,1"));
  CHECK(Gc == filter(s, "a,b,d,1"));
  CHECK(gamma_join(fam, Gb, Gc) == full_filter(s));
  CHECK(gamma_join(fam, Gb, F2) == Gb);
  CHECK(gamma_join(fam, Gb, Gb) == Gb);
  CHECK(gamma_complement(fam, Gb) == Gc);
  CHECK(gamma_complement(fam, F2) == full_filter(s));
  CHECK(gamma_complement(fam, full_filter(s)) == F2);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    CHECK(fam.complement(fam.complement(i)) == i);
    CHECK(fam.meet(i, fam.complement(i)) == *fam.find(F2));
    CHECK(fam[fam.join(i, fam.complement(i))] == full_filter(s));
  }
  CHECK_THROWS_AS(gamma_join(fam, filter(s, "1"), Gb), Error);
}

TEST_CASE("intersection closure matches the all-subsets scan on the census") {
  for (auto const& s : test::census(5)) {
    CAPTURE(s.name);
    for (auto const owner = all_filters(s); auto const& F : owner.filters()) {
      std::vector<oracle::Bits> got;
      for (auto const owner = coann_family(s, F); auto const& G : owner.members()) {
        got.push_back(G.mask().bits());
      }
      std::sort(got.begin(), got.end());
      CHECK(got == oracle::gamma(s, F.mask().bits()));
    }
  }
}
