// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rlat/cli.hpp"
#include "rlat/coann.hpp"
#include "rlat/io.hpp"
#include "rlat/modelgen.hpp"
#include "rlat/normality.hpp"
#include "rlat/omega.hpp"
#include "rlat/spectra.hpp"
#include "rlat/verify.hpp"
#include "support.hpp"

using namespace rlat;

namespace {

  // Time limits in seconds.
  constexpr double kFixtureLimit       = 1.0;
  constexpr double kSpectralLimit      = 1.0;
  constexpr double kBatteryLimit       = 5.0;
  constexpr double kSmallCensusLimit   = 60.0;   // sizes 2..4
  constexpr double kSize5CensusLimit   = 900.0;  // size 5
  constexpr std::size_t kOracleMaxSize = 5;

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  struct Criterion {
    int         id;
    std::string title;
    bool        ok = true;
    std::string detail;

    void require(bool cond, std::string const& what) {
      if (!cond && ok) {
        ok     = false;
        detail = what;
      }
    }
  };

  int failures = 0;

  void report(Criterion const& c, double secs) {
    std::printf("%s %d %s (%.3f s)%s%s\n", c.ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                secs, c.ok ? "" : ": ", c.detail.c_str());
    failures += c.ok ? 0 : 1;
  }

  std::string run_cli(std::vector<std::string> const& args, int& code) {
    std::ostringstream out, err;
    code = run(args, out, err);
    return out.str();
  }

  std::vector<oracle::Bits> bits_of(std::vector<Filter> const& fs) {
    std::vector<oracle::Bits> out;
    for (auto const& F : fs) {
      out.push_back(F.mask().bits());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void fixture_fidelity() {
    Criterion  c{1, "fixture fidelity"};
    auto const t0   = Clock::now();
    std::string const path = test::fixture_path("a6.json");
    Structure const   s    = load_structure(path);
    c.require(validate_structure(s).valid(), "a6.json does not validate");

    int code = 0;
    std::string const filters = run_cli({"filters", path}, code);
    c.require(code == kExitOk, "filters exit code");
    c.require(filters
                  == "A6: 5 filters\n{1}\n{d,1}\n{c,d,1}\n{a,b,d,1}\n{0,a,b,c,d,1}\n",
              "filters output differs");

    std::string const coann = run_cli({"coann", path, "--base", "c,d,1"}, code);
    c.require(code == kExitOk, "coann exit code");
    for (char const* line : {"  0: {c,d,1}\n", "  a: {c,d,1}\n", "  b: {c,d,1}\n",
                             "  c: {0,a,b,c,d,1}\n", "  d: {0,a,b,c,d,1}\n",
                             "  1: {0,a,b,c,d,1}\n"}) {
      c.require(coann.find(line) != std::string::npos,
                std::string("missing coannulet line ") + line);
    }
    double const secs = seconds_since(t0);
    c.require(secs < kFixtureLimit, "too slow");
    report(c, secs);
  }

  void spectral_values() {
    Criterion  c{2, "spectral golden values"};
    auto const t0 = Clock::now();
    Structure const s = test::a6();
    auto f = [&](char const* list) { return test::filter(s, list); };
    Filter const F1 = f("1"), F2 = f("d,1"), F3 = f("a,b,d,1"), F4 = f("c,d,1");
    Filter const A  = full_filter(s);

    auto const sp = spectrum(s);
    c.require(bits_of(sp.primes) == bits_of({F1, F3, F4}), "Spec");
    c.require(bits_of(sp.maximals) == bits_of({F3, F4}), "Max");
    c.require(bits_of(sp.minimal_primes) == bits_of({F1}), "Min");
    c.require(bits_of(sp.primes) == oracle::primes(s), "Spec vs oracle");
    c.require(bits_of(sp.maximals) == oracle::maximal_filters(s), "Max vs oracle");

    for (auto const owner = all_filters(s); auto const& F : owner.filters()) {
      if (F.is_proper()) {
        c.require(normality_report(s, F).index == 1, "index " + format_set(s, F.mask()));
        c.require(oracle::normality_index(s, F.mask().bits()) == 1, "oracle index");
      }
    }
    c.require(sigma(s, F3) == F1, "sigma(F3)");
    c.require(oracle::sigma(s, F3.mask().bits()) == F1.mask().bits(), "oracle sigma(F3)");
    c.require(bits_of(omega_family(s, F1).members()) == bits_of({F1, A}), "Omega");
    c.require(bits_of(omega_family(s, F2).members()) == bits_of({F2, F3, F4, A}),
              "Omega over F2");
    c.require(oracle::omega_filters(s, F2.mask().bits()) == bits_of({F2, F3, F4, A}),
              "oracle Omega over F2");
    double const secs = seconds_since(t0);
    c.require(secs < kSpectralLimit, "too slow");
    report(c, secs);
  }

  void fixture_battery() {
    Criterion  c{3, "invariant battery on the fixture"};
    auto const t0 = Clock::now();
    auto const r  = verify(test::a6(), Battery::all);
    for (auto const& chk : r.checks) {
      c.require(chk.passed(), chk.group + "." + chk.name);
    }
    c.require(!r.checks.empty(), "no checks ran");
    double const secs = seconds_since(t0);
    c.require(secs < kBatteryLimit, "too slow");
    report(c, secs);
    std::printf("     %zu checks\n", r.checks.size());
  }

  void census_battery() {
    Criterion  c{4, "census battery, sizes 2..5"};
    auto const t0 = Clock::now();
    double     small_secs = 0;
    for (std::size_t n = kMinSearchSize; n <= kOracleMaxSize; ++n) {
      SearchSpec spec;
      spec.size     = n;
      auto const rs = enumerate_residuated(spec);
      std::size_t failing = 0;
      for (auto const& r : rs) {
        c.require(validate_structure(r.structure).valid(), r.structure.name + " invalid");
        failing += verify(r.structure, Battery::all).passed() ? 0 : 1;
      }
      c.require(failing == 0, std::to_string(failing) + " failing at size " + std::to_string(n));
      if (n == 3) {
        c.require(rs.size() == 2, "3-chain count");
        c.require(oracle::count_chain3_structures() == 2, "unpruned 3-chain count");
      }
      std::printf("     size %zu: %zu structures\n", n, rs.size());
      if (n == 4) {
        small_secs = seconds_since(t0);
      }
    }
    double const secs = seconds_since(t0);
    c.require(small_secs < kSmallCensusLimit, "sizes 2..4 too slow");
    c.require(secs - small_secs < kSize5CensusLimit, "size 5 too slow");
    report(c, secs);
  }

  void oracle_equivalences() {
    Criterion  c{5, "oracle equivalences on the census"};
    auto const t0 = Clock::now();
    for (auto const& s : test::census(kOracleMaxSize)) {
      auto const lat = all_filters(s);
      c.require(bits_of(lat.filters()) == oracle::all_filters(s), s.name + " filters");
      auto const ideals = all_ideals(s);
      for (auto const& F : lat.filters()) {
        auto const Fb = F.mask().bits();
        c.require(bits_of(coann_family(s, F).members()) == oracle::gamma(s, Fb),
                  s.name + " coannihilators");
        c.require(bits_of(omega_family(s, F, ideals).members())
                      == oracle::omega_filters(s, Fb),
                  s.name + " omega-filters");
      }
    }
    report(c, seconds_since(t0));
  }

  void fixture_in_census() {
    Criterion  c{6, "fixture found in the census over its lattice"};
    auto const t0 = Clock::now();
    Structure const s = test::a6();
    SearchSpec      spec;
    spec.size         = s.size();
    spec.base_lattice = order_matrix(s);
    auto const key    = canonical_key(s);
    bool       found  = false;
    for (auto const& r : enumerate_residuated(spec)) {
      found = found || r.canonical_key == key;
    }
    c.require(found, "no canonical key match");
    report(c, seconds_since(t0));
  }

}  // namespace

int main() {
  fixture_fidelity();
  spectral_values();
  fixture_battery();
  census_battery();
  oracle_equivalences();
  fixture_in_census();
  std::printf("%d of 6 criteria failed\n", failures);
  return failures;
}
