// Randomised checks over census structures and products of them. Seeds
// are fixed so failures reproduce.
#include <doctest.h>

#include "oracles.hpp"
#include "rlat/coann.hpp"
#include "rlat/io.hpp"
#include "rlat/modelgen.hpp"
#include "rlat/omega.hpp"
#include "rlat/spectra.hpp"
#include "support.hpp"

using namespace rlat;

namespace {
  constexpr int kRounds = 200;
}

TEST_CASE("relabelling keeps the canonical key") {
  test::Gen gen(1);
  for (int i = 0; i < kRounds; ++i) {
    Structure const s = gen.pick(test::census(5));
    Structure const t = test::permuted(s, gen.permutation(s.size()));
    REQUIRE(validate_structure(t).valid());
    CHECK(canonical_key(t) == canonical_key(s));
  }
}

TEST_CASE("products are residuated lattices") {
  test::Gen gen(2);
  for (int i = 0; i < 40; ++i) {
    Structure const p = test::product(gen.pick(test::census(4)), gen.pick(test::census(4)));
    CAPTURE(p.name);
    CHECK(validate_structure(p).valid());
    CHECK(oracle::satisfies_axioms(p));
  }
}

TEST_CASE("generated filter agrees with the fixpoint oracle") {
  test::Gen gen(3);
  for (int i = 0; i < kRounds; ++i) {
    Structure const s = gen.structure();
    SubsetMask const X = gen.subset(s);
    Filter const F = generated_filter(s, X);
    CHECK(F.mask().bits() == oracle::generated_filter(s, X.bits()));
    CHECK(generated_filter(s, F.mask()) == F);
  }
}

TEST_CASE("generated filter is the intersection of minimal primes over it") {
  test::Gen gen(4);
  for (int i = 0; i < kRounds; ++i) {
    Structure const s = gen.structure();
    SubsetMask const X = gen.subset(s);
    auto const mins = minimal_primes_over(s, X);
    CHECK(intersection_of(s.size(), mins.filters) == generated_filter(s, X).mask());
  }
}

TEST_CASE("coannihilator is a Galois connection") {
  test::Gen gen(5);
  for (int i = 0; i < kRounds; ++i) {
    Structure const s = gen.structure();
    auto const lat = all_filters(s);
    Filter const& F = gen.pick(lat.filters());
    SubsetMask const X = gen.subset(s), Y = gen.subset(s);
    Filter const FX = coannihilator(s, F, X);
    CHECK(FX.mask().bits() == oracle::coann(s, F.mask().bits(), X.bits()));
    CHECK(F.subset_of(FX));
    if (Y.subset_of(FX.mask())) {
      CHECK(X.subset_of(coannihilator(s, F, Y).mask()));
    }
    CHECK(FX.mask().is_full() == X.subset_of(F.mask()));
  }
}

TEST_CASE("omega of a join-closed set") {
  test::Gen gen(6);
  for (int i = 0; i < kRounds; ++i) {
    Structure const s = gen.structure();
    auto const lat = all_filters(s);
    Filter const& F = gen.pick(lat.filters());
    SubsetMask const C = join_closure(s, gen.nonempty_subset(s));
    SubsetMask const w = omega(s, F, C);
    CHECK(w.bits() == oracle::omega(s, F.mask().bits(), C.bits()));
    CHECK(is_filter(s, w));
    bool const disjoint = !F.mask().intersects(C);
    CHECK(disjoint == !w.is_full());
    CHECK(disjoint == !w.intersects(C));
  }
}

TEST_CASE("minimal primes are their own divisors") {
  test::Gen gen(7);
  for (int i = 0; i < kRounds; ++i) {
    Structure const s = gen.structure();
    auto const lat = all_filters(s);
    Filter const& F = gen.pick(lat.filters());
    if (!F.is_proper()) {
      continue;
    }
    for (auto const& m : minimal_primes_over(s, F.mask()).filters) {
      CHECK(divisor(s, F, m) == m.mask());
    }
  }
}

TEST_CASE("structure files round-trip") {
  test::Gen gen(8);
  for (int i = 0; i < 50; ++i) {
    Structure const s = gen.structure();
    Structure const t = structure_from_json(Json::parse(structure_to_json(s).dump()));
    CHECK(t == s);
  }
}
