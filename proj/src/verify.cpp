#include "rlat/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "combinatorics.hpp"
#include "rlat/coann.hpp"
#include "rlat/error.hpp"
#include "rlat/filters.hpp"
#include "rlat/normality.hpp"
#include "rlat/omega.hpp"
#include "rlat/spectra.hpp"

namespace rlat {

  namespace {

    constexpr std::array<std::pair<Battery, std::string_view>, 7> kBatteryNames{{
        {Battery::all, "all"},
        {Battery::structure, "structure"},
        {Battery::filters, "filters"},
        {Battery::spectra, "spectra"},
        {Battery::coann, "coann"},
        {Battery::omega, "omega"},
        {Battery::normality, "normality"},
    }};

    // Shared, precomputed view of one structure.
    struct Context {
      Structure const&        s;
      Elem                    n;
      FilterLattice           lat;
      std::vector<Filter>     primes;
      std::vector<Filter>     maximals;
      std::vector<Ideal>      ideals;
      std::vector<SubsetMask> pool;         // nonempty subsets to scan
      std::vector<SubsetMask> joins_closed;  // join-closed members of pool

      std::vector<Filter> const& filters() const {
        return lat.filters();
      }
      std::string set(SubsetMask const& m) const {
        return format_set(s, m);
      }
      std::string set(Filter const& F) const {
        return format_set(s, F.mask());
      }
      std::string el(Elem x) const {
        return s.names[x];
      }
    };

    // Appends one check to the report; cases are counted in place so the
    // report keeps declaration order.
    class Tally {
     public:
      Tally(VerificationReport& r, std::string group, std::string name)
          : _r(r), _i(r.checks.size()) {
        r.checks.push_back(CheckResult{std::move(group), std::move(name), 0, 0,
                                       std::nullopt});
      }
      Tally(Tally const&)            = delete;
      Tally& operator=(Tally const&) = delete;

      template <typename Witness>
      void expect(bool ok, Witness&& witness) {
        CheckResult& c = _r.checks[_i];
        ++c.cases;
        if (!ok && c.failures++ == 0) {
          c.witness = witness();
        }
      }

     private:
      VerificationReport& _r;
      std::size_t         _i;
    };

    std::vector<SubsetMask> subset_pool(Structure const& s,
                                        FilterLattice const& lat) {
      std::size_t const       n = s.size();
      std::vector<SubsetMask> out;
      if (n <= kFullSubsetScan) {
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
          out.emplace_back(n, b);
        }
        return out;
      }
      for (Elem x = 0; x < n; ++x) {
        out.push_back(SubsetMask::single(n, x));
        for (Elem y = x + 1; y < n; ++y) {
          out.push_back(SubsetMask::of(n, {x, y}));
        }
      }
      for (auto const& F : lat.filters()) {
        out.push_back(F.mask());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    Context make_context(Structure const& s) {
      Context c{s, static_cast<Elem>(s.size()), all_filters(s), {}, {}, {},
                {}, {}};
      auto const spec = spectrum(c.lat, s, trivial_filter(s));
      c.primes        = spec.primes;
      c.maximals      = spec.maximals;
      c.ideals        = all_ideals(s);
      c.pool          = subset_pool(s, c.lat);
      for (auto const& X : c.pool) {
        if (is_join_closed(s, X)) {
          c.joins_closed.push_back(X);
        }
      }
      return c;
    }

    std::vector<Filter> proper_filters(Context const& c) {
      std::vector<Filter> out;
      for (auto const& F : c.filters()) {
        if (F.is_proper()) {
          out.push_back(F);
        }
      }
      return out;
    }

    std::vector<Filter> primes_over(Context const& c, SubsetMask const& X) {
      std::vector<Filter> out;
      for (auto const& P : c.primes) {
        if (X.subset_of(P.mask())) {
          out.push_back(P);
        }
      }
      return out;
    }

    // ------------------------------------------------------------------
    void structure_checks(Context const& c, VerificationReport& r) {
      Structure const& s = c.s;
      {
        Tally      t(r, "structure", "axioms_hold");
        auto const rep = validate_structure(s);
        t.expect(rep.valid(), [&] { return rep.violations.front().axiom; });
      }
      {
        Tally t(r, "structure", "times_distributes_over_join");
        for (Elem x = 0; x < c.n; ++x) {
          for (Elem y = 0; y < c.n; ++y) {
            for (Elem z = 0; z < c.n; ++z) {
              t.expect(s.times(x, s.join(y, z))
                           == s.join(s.times(x, y), s.times(x, z)),
                       [&] { return c.el(x) + "," + c.el(y) + "," + c.el(z); });
            }
          }
        }
      }
      {
        Tally t(r, "structure", "join_bounds_product_of_joins");
        for (Elem x = 0; x < c.n; ++x) {
          for (Elem y = 0; y < c.n; ++y) {
            for (Elem z = 0; z < c.n; ++z) {
              t.expect(s.leq(s.times(s.join(x, y), s.join(x, z)),
                             s.join(x, s.times(y, z))),
                       [&] { return c.el(x) + "," + c.el(y) + "," + c.el(z); });
            }
          }
        }
      }
      {
        Tally t(r, "structure", "order_matches_residuum");
        for (Elem x = 0; x < c.n; ++x) {
          for (Elem y = 0; y < c.n; ++y) {
            t.expect(s.leq(x, y) == (s.residuum(x, y) == s.top),
                     [&] { return c.el(x) + "," + c.el(y); });
          }
        }
      }
      {
        Tally t(r, "structure", "times_monotone");
        for (Elem x = 0; x < c.n; ++x) {
          for (Elem y = 0; y < c.n; ++y) {
            if (!s.leq(x, y)) {
              continue;
            }
            for (Elem z = 0; z < c.n; ++z) {
              t.expect(s.leq(s.times(x, z), s.times(y, z)),
                       [&] { return c.el(x) + "," + c.el(y) + "," + c.el(z); });
            }
          }
        }
      }
      {
        Tally t(r, "structure", "validation_deterministic");
        auto  a = validate_structure(s);
        auto  b = validate_structure(s);
        t.expect(a.violations.size() == b.violations.size()
                     && std::equal(a.violations.begin(), a.violations.end(),
                                   b.violations.begin(),
                                   [](Violation const& u, Violation const& v) {
                                     return u.axiom == v.axiom
                                            && u.witness == v.witness
                                            && u.arity == v.arity;
                                   }),
                 [] { return std::string("reports differ"); });
      }
    }

    // ------------------------------------------------------------------
    void filter_checks(Context const& c, VerificationReport& r) {
      Structure const& s = c.s;
      {
        Tally t(r, "filters", "enumeration_yields_filters");
        for (auto const& F : c.filters()) {
          t.expect(is_filter(s, F.mask()), [&] { return c.set(F); });
        }
        t.expect(c.lat[c.lat.bottom()] == trivial_filter(s)
                     && c.lat[c.lat.top()] == full_filter(s),
                 [] { return std::string("bounds"); });
      }
      {
        Tally t(r, "filters", "extension_antitone");
        for (auto const& F : c.filters()) {
          for (Elem x = 0; x < c.n; ++x) {
            for (Elem y = 0; y < c.n; ++y) {
              if (s.leq(x, y)) {
                t.expect(generated_filter(s, F, y)
                             .subset_of(generated_filter(s, F, x)),
                         [&] { return c.set(F) + "," + c.el(x) + "," + c.el(y); });
              }
            }
          }
        }
      }
      {
        Tally t(r, "filters", "extension_meet_is_join_extension");
        Tally u(r, "filters", "extension_join_is_product_extension");
        for (auto const& F : c.filters()) {
          for (Elem x = 0; x < c.n; ++x) {
            for (Elem y = 0; y < c.n; ++y) {
              Filter const fx = generated_filter(s, F, x);
              Filter const fy = generated_filter(s, F, y);
              auto         w  = [&] {
                return c.set(F) + "," + c.el(x) + "," + c.el(y);
              };
              t.expect(filter_meet(fx, fy)
                           == generated_filter(s, F, s.join(x, y)),
                       w);
              u.expect(filter_join(s, fx, fy)
                           == generated_filter(s, F, s.times(x, y)),
                       w);
            }
          }
        }
      }
      {
        Tally t(r, "filters", "principal_filters_closed");
        std::vector<Filter> principal;
        for (Elem x = 0; x < c.n; ++x) {
          principal.push_back(principal_filter(s, x));
        }
        auto is_principal = [&](Filter const& G) {
          return std::find(principal.begin(), principal.end(), G)
                 != principal.end();
        };
        for (Elem x = 0; x < c.n; ++x) {
          for (Elem y = 0; y < c.n; ++y) {
            t.expect(is_principal(filter_join(s, principal[x], principal[y]))
                         && is_principal(
                             filter_meet(principal[x], principal[y])),
                     [&] { return c.el(x) + "," + c.el(y); });
          }
        }
      }
      {
        Tally      t(r, "filters", "filter_lattice_distributive");
        auto const k = c.lat.size();
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t l = 0; l < k; ++l) {
              t.expect(c.lat.meet(i, c.lat.join(j, l))
                           == c.lat.join(c.lat.meet(i, j), c.lat.meet(i, l)),
                       [&] {
                         return c.set(c.lat[i]) + "," + c.set(c.lat[j]) + ","
                                + c.set(c.lat[l]);
                       });
            }
          }
        }
      }
      {
        Tally t(r, "filters", "generation_idempotent");
        for (auto const& X : c.pool) {
          Filter const G = generated_filter(s, X);
          t.expect(generated_filter(s, G.mask()) == G && X.subset_of(G.mask())
                       && is_filter(s, G.mask()),
                   [&] { return c.set(X); });
        }
      }
      {
        Tally t(r, "filters", "principal_ideal_is_downset");
        Tally u(r, "filters", "principal_ideal_meet");
        Tally v(r, "filters", "principal_ideal_join");
        for (Elem x = 0; x < c.n; ++x) {
          SubsetMask down(c.n);
          for (Elem a = 0; a < c.n; ++a) {
            if (s.leq(a, x)) {
              down.insert(a);
            }
          }
          t.expect(principal_ideal(s, x).mask() == down
                       && generated_ideal(s, SubsetMask::single(c.n, x))
                              == principal_ideal(s, x),
                   [&] { return c.el(x); });
          for (Elem y = 0; y < c.n; ++y) {
            Ideal const ix = principal_ideal(s, x);
            Ideal const iy = principal_ideal(s, y);
            auto        w  = [&] { return c.el(x) + "," + c.el(y); };
            u.expect(Ideal(ix.mask() & iy.mask())
                         == principal_ideal(s, s.meet(x, y)),
                     w);
            v.expect(ideal_join(s, ix, iy) == principal_ideal(s, s.join(x, y)),
                     w);
          }
        }
      }
      {
        // Ideals of a non-distributive lattice do not form a frame; this is
        // reported, not checked.
        Tally t(r, "filters", "ideals_enumerated");
        std::optional<std::string> witness;
        for (auto const& I : c.ideals) {
          t.expect(is_ideal(s, I.mask()), [&] { return c.set(I.mask()); });
          for (auto const& J : c.ideals) {
            for (auto const& K : c.ideals) {
              Ideal const lhs(I.mask() & ideal_join(s, J, K).mask());
              Ideal const rhs = ideal_join(s, Ideal(I.mask() & J.mask()),
                                           Ideal(I.mask() & K.mask()));
              if (lhs != rhs && !witness) {
                witness = c.set(I.mask()) + " " + c.set(J.mask()) + " "
                          + c.set(K.mask());
              }
            }
          }
        }
        if (witness) {
          r.notes.push_back("ideal lattice is not distributive: " + *witness);
        }
      }
    }

    // ------------------------------------------------------------------
    void spectra_checks(Context const& c, VerificationReport& r) {
      Structure const& s = c.s;
      {
        Tally t(r, "spectra", "prime_iff_complement_join_closed");
        for (auto const& F : proper_filters(c)) {
          t.expect(is_prime(s, F)
                       == is_join_closed(s, F.mask().complement()),
                   [&] { return c.set(F); });
        }
      }
      {
        Tally t(r, "spectra", "maximal_filters_prime");
        for (auto const& M : c.maximals) {
          t.expect(is_prime(s, M), [&] { return c.set(M); });
        }
      }
      {
        Tally t(r, "spectra", "prime_separation");
        for (auto const& F : c.filters()) {
          for (auto const& C : c.joins_closed) {
            if (C.intersects(F.mask())) {
              continue;
            }
            bool found = std::any_of(
                c.primes.begin(), c.primes.end(), [&](Filter const& P) {
                  return F.subset_of(P) && !P.mask().intersects(C);
                });
            t.expect(found, [&] { return c.set(F) + " " + c.set(C); });
          }
        }
      }
      {
        Tally t(r, "spectra", "generated_filter_is_prime_intersection");
        Tally u(r, "spectra", "generated_filter_is_minimal_prime_intersection");
        Tally v(r, "spectra", "primes_contain_a_minimal_prime");
        for (auto const& X : c.pool) {
          SubsetMask const gen  = generated_filter(s, X).mask();
          auto const       over = primes_over(c, X);
          auto const       mins = minimal_primes_over(s, c.primes, X).filters;
          auto             w    = [&] { return c.set(X); };
          t.expect(intersection_of(c.n, over) == gen, w);
          u.expect(intersection_of(c.n, mins) == gen, w);
          for (auto const& P : over) {
            v.expect(std::any_of(mins.begin(), mins.end(),
                                 [&](Filter const& m) { return m.subset_of(P); }),
                     [&] { return c.set(X) + " " + c.set(P); });
          }
        }
      }
      {
        Tally t(r, "spectra", "minimal_prime_iff_maximal_join_closed_complement");
        for (auto const& F : c.filters()) {
          auto const mins = minimal_primes_over(s, c.primes, F.mask()).filters;
          for (auto const& P : c.primes) {
            bool const minimal =
                std::find(mins.begin(), mins.end(), P) != mins.end();
            t.expect(minimal
                         == is_maximal_join_closed_avoiding(
                             s, F, P.mask().complement()),
                     [&] { return c.set(F) + " " + c.set(P); });
          }
        }
      }
      {
        Tally t(r, "spectra", "greedy_extension_gives_minimal_prime");
        for (auto const& F : c.filters()) {
          auto const mins = minimal_primes_over(s, c.primes, F.mask()).filters;
          for (auto const& C : c.joins_closed) {
            if (C.intersects(F.mask())) {
              continue;
            }
            SubsetMask const M = maximal_join_closed_avoiding(s, F, C);
            Filter const     P(M.complement());
            t.expect(C.subset_of(M) && is_maximal_join_closed_avoiding(s, F, M)
                         && std::find(mins.begin(), mins.end(), P)
                                != mins.end(),
                     [&] { return c.set(F) + " " + c.set(C); });
          }
        }
      }
    }

    // ------------------------------------------------------------------
    void coann_checks(Context const& c, VerificationReport& r) {
      Structure const& s = c.s;
      // (F : X) over the pool, per filter
      std::vector<std::vector<Filter>> ann(c.filters().size());
      for (std::size_t f = 0; f < c.filters().size(); ++f) {
        for (auto const& X : c.pool) {
          ann[f].push_back(coannihilator(s, c.filters()[f], X));
        }
      }
      {
        Tally t(r, "coann", "galois_connection");
        for (std::size_t f = 0; f < c.filters().size(); ++f) {
          for (std::size_t i = 0; i < c.pool.size(); ++i) {
            for (std::size_t j = 0; j < c.pool.size(); ++j) {
              if (c.pool[i].subset_of(ann[f][j].mask())) {
                t.expect(c.pool[j].subset_of(ann[f][i].mask()), [&] {
                  return c.set(c.filters()[f]) + " " + c.set(c.pool[i]) + " "
                         + c.set(c.pool[j]);
                });
              }
            }
          }
        }
      }
      {
        Tally t(r, "coann", "full_iff_inside");
        for (std::size_t f = 0; f < c.filters().size(); ++f) {
          Filter const& F = c.filters()[f];
          for (std::size_t i = 0; i < c.pool.size(); ++i) {
            t.expect(ann[f][i].is_proper() != c.pool[i].subset_of(F.mask()),
                     [&] { return c.set(F) + " " + c.set(c.pool[i]); });
          }
        }
      }
      {
        Tally t(r, "coann", "relative_pseudocomplement");
        for (std::size_t f = 0; f < c.filters().size(); ++f) {
          Filter const& F = c.filters()[f];
          for (std::size_t i = 0; i < c.pool.size(); ++i) {
            Filter const gen = generated_filter(s, c.pool[i]);
            std::optional<Filter> best;
            for (auto const& G : c.filters()) {
              if (filter_meet(G, gen).subset_of(F)
                  && (!best || best->subset_of(G))) {
                best = G;
              }
            }
            // `best` is the greatest such G only if every candidate is below it
            bool greatest = best.has_value();
            for (auto const& G : c.filters()) {
              if (filter_meet(G, gen).subset_of(F) && best) {
                greatest = greatest && G.subset_of(*best);
              }
            }
            t.expect(greatest && *best == ann[f][i],
                     [&] { return c.set(F) + " " + c.set(c.pool[i]); });
          }
        }
      }
      Tally mono(r, "coann", "coannulet_monotone");
      Tally meet(r, "coann", "coannulet_meet_is_product");
      Tally dbl(r, "coann", "double_coannulet_meet");
      Tally join(r, "coann", "coannulet_join");
      Tally boolean(r, "coann", "coannihilators_boolean");
      Tally sub(r, "coann", "coannulets_sublattice");
      for (auto const& F : c.filters()) {
        CoannFamily const fam(s, F);
        auto co = [&](Elem x) { return coannulet(s, F, x); };
        for (Elem x = 0; x < c.n; ++x) {
          for (Elem y = 0; y < c.n; ++y) {
            auto w = [&] { return c.set(F) + "," + c.el(x) + "," + c.el(y); };
            if (s.leq(x, y)) {
              mono.expect(co(x).subset_of(co(y)), w);
            }
            meet.expect(filter_meet(co(x), co(y)) == co(s.times(x, y)), w);
            dbl.expect(filter_meet(coannihilator(s, F, co(x).mask()),
                                   coannihilator(s, F, co(y).mask()))
                           == coannihilator(s, F, co(s.join(x, y)).mask()),
                       w);
            join.expect(filter_join(s, co(x), co(y)).subset_of(co(s.join(x, y)))
                            && gamma_join(fam, co(x), co(y))
                                   == co(s.join(x, y)),
                        w);
            sub.expect(std::find(fam.coannulets().begin(),
                                 fam.coannulets().end(),
                                 filter_meet(co(x), co(y)))
                               != fam.coannulets().end()
                           && std::find(fam.coannulets().begin(),
                                        fam.coannulets().end(),
                                        gamma_join(fam, co(x), co(y)))
                                  != fam.coannulets().end(),
                       w);
          }
        }
        auto const k = fam.size();
        for (std::size_t i = 0; i < k; ++i) {
          auto wi = [&] { return c.set(F) + " " + c.set(fam[i]); };
          boolean.expect(F.subset_of(fam[i]) && fam.find(F).has_value()
                             && fam.find(full_filter(s)).has_value(),
                         wi);
          std::size_t const ci = fam.complement(i);
          boolean.expect(fam.meet(i, ci) == fam.index_of(F)
                             && fam[fam.join(i, ci)] == full_filter(s)
                             && fam.complement(ci) == i,
                         wi);
          for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t l = 0; l < k; ++l) {
              boolean.expect(fam.meet(i, fam.join(j, l))
                                 == fam.join(fam.meet(i, j), fam.meet(i, l)),
                             [&] {
                               return c.set(F) + " " + c.set(fam[i]) + " "
                                      + c.set(fam[j]) + " " + c.set(fam[l]);
                             });
            }
          }
        }
      }
    }

    // ------------------------------------------------------------------
    void omega_checks(Context const& c, VerificationReport& r) {
      Structure const& s = c.s;
      {
        Tally t1(r, "omega", "union_of_coannulets");
        Tally t2(r, "omega", "coannulet_meets_argument");
        Tally t3(r, "omega", "contains_base");
        Tally t4(r, "omega", "monotone_in_argument");
        Tally t5(r, "omega", "monotone_in_base");
        Tally t6(r, "omega", "full_iff_base_meets_argument");
        Tally t7(r, "omega", "base_iff_argument_dense");
        for (auto const& F : c.filters()) {
          SubsetMask const dense = dense_set(s, F).mask;
          for (auto const& X : c.pool) {
            SubsetMask const w = omega(s, F, X);
            auto wit = [&] { return c.set(F) + " " + c.set(X); };
            SubsetMask def(c.n), via(c.n);
            for (Elem a = 0; a < c.n; ++a) {
              bool exists = false;
              for_each_element(X, [&](Elem x) {
                exists = exists || F.contains(s.join(x, a));
              });
              if (exists) {
                def.insert(a);
              }
              if (coannulet(s, F, a).mask().intersects(X)) {
                via.insert(a);
              }
            }
            t1.expect(w == def, wit);
            t2.expect(w == via, wit);
            t3.expect(F.mask().subset_of(w), wit);
            t6.expect(w.is_full() == X.intersects(F.mask()), wit);
            t7.expect((w == F.mask()) == X.subset_of(dense), wit);
            for (auto const& G : c.filters()) {
              if (F.subset_of(G)) {
                t5.expect(w.subset_of(omega(s, G, X)),
                          [&] { return wit() + " " + c.set(G); });
              }
            }
          }
          for (std::size_t i = 0; i < c.pool.size(); ++i) {
            SubsetMask const wi = omega(s, F, c.pool[i]);
            for (std::size_t j = 0; j < c.pool.size(); ++j) {
              if (c.pool[i].subset_of(c.pool[j])) {
                t4.expect(wi.subset_of(omega(s, F, c.pool[j])), [&] {
                  return c.set(F) + " " + c.set(c.pool[i]) + " "
                         + c.set(c.pool[j]);
                });
              }
            }
          }
        }
      }
      {
        Tally t(r, "omega", "dense_set_is_ideal");
        for (auto const& F : c.filters()) {
          t.expect(is_ideal(s, dense_set(s, F).mask), [&] { return c.set(F); });
        }
      }
      {
        Tally t(r, "omega", "join_closed_image_is_filter");
        Tally u(r, "omega", "properness_conditions_agree");
        for (auto const& F : c.filters()) {
          for (auto const& C : c.joins_closed) {
            SubsetMask const w   = omega(s, F, C);
            auto             wit = [&] { return c.set(F) + " " + c.set(C); };
            t.expect(is_filter(s, w), wit);
            bool const a = !F.mask().intersects(C);
            bool const b = !w.is_full();
            bool const d = !w.intersects(C);
            u.expect(a == b && b == d, wit);
          }
        }
      }
      Tally fam_bounds(r, "omega", "family_bounded");
      Tally fam_meet(r, "omega", "family_closed_under_meet");
      Tally fam_dist(r, "omega", "family_distributive");
      Tally fam_lub(r, "omega", "family_join_is_least_upper_bound");
      Tally fam_formula(r, "omega", "family_join_matches_ideal_formula");
      Tally fam_indep(r, "omega", "family_join_independent_of_ideals");
      Tally small(r, "omega", "coannulets_bounded_sublattice");
      Tally comax(r, "omega", "join_inside_base_gives_full_join");
      Tally div_def(r, "omega", "divisor_definitions_agree");
      Tally div_full(r, "omega", "divisor_full_iff_base_outside");
      Tally div_prime(r, "omega", "prime_divisor_is_omega_filter");
      Tally min_fix(r, "omega", "minimal_prime_is_own_divisor");
      Tally min_char(r, "omega", "minimal_prime_characterisations_agree");
      Tally min_comax(r, "omega", "minimal_primes_omega_comaximal");
      Tally miss(r, "omega", "image_minimal_primes_miss_argument");
      Tally below(r, "omega", "divisor_minimal_primes_below_prime");
      Tally min_set(r, "omega", "image_minimal_primes_are_base_minimal");
      Tally inter(r, "omega", "image_is_minimal_prime_intersection");
      Tally div_inter(r, "omega", "divisor_is_minimal_prime_intersection");
      for (auto const& F : c.filters()) {
        OmegaFamily const fam(s, F, c.ideals);
        auto const        k  = fam.size();
        auto const        fs = [&] { return c.set(F); };
        auto const& diag = fam.diagnostics();
        fam_bounds.expect(fam.find(F).has_value()
                              && fam.find(full_filter(s)).has_value(),
                          fs);
        fam_lub.expect(diag.has_least_upper_bounds, fs);
        fam_formula.expect(diag.formula_mismatches.empty(), [&] {
          auto [i, j] = diag.formula_mismatches.front();
          return c.set(F) + " " + c.set(fam[i]) + " " + c.set(fam[j]);
        });
        for (std::size_t i = 0; i < k; ++i) {
          fam_bounds.expect(F.subset_of(fam[i]), fs);
          for (std::size_t j = 0; j < k; ++j) {
            auto wij = [&] {
              return c.set(F) + " " + c.set(fam[i]) + " " + c.set(fam[j]);
            };
            fam_meet.expect(fam.find(filter_meet(fam[i], fam[j])).has_value(),
                            wij);
            for (std::size_t l = 0; l < k; ++l) {
              auto m = [&](std::size_t a, std::size_t b) {
                return fam.index_of(filter_meet(fam[a], fam[b]));
              };
              fam_dist.expect(m(i, fam.join(j, l))
                                  == fam.join(m(i, j), m(i, l)),
                              [&] { return wij() + " " + c.set(fam[l]); });
            }
          }
        }
        // every ideal pair, not just the stored witnesses
        for (auto const& I : c.ideals) {
          auto const gi = fam.index_of(Filter(omega(s, F, I.mask())));
          for (auto const& J : c.ideals) {
            auto const gj = fam.index_of(Filter(omega(s, F, J.mask())));
            fam_indep.expect(
                Filter(omega(s, F, ideal_join(s, I, J).mask()))
                    == fam[fam.join(gi, gj)],
                [&] { return fs() + " " + c.set(I.mask()) + " " + c.set(J.mask()); });
          }
        }
        for (Elem x = 0; x < c.n; ++x) {
          for (Elem y = 0; y < c.n; ++y) {
            Filter const cx = coannulet(s, F, x);
            Filter const cy = coannulet(s, F, y);
            auto w = [&] { return fs() + "," + c.el(x) + "," + c.el(y); };
            bool const in = fam.find(cx).has_value() && fam.find(cy).has_value();
            small.expect(in && omega_join(fam, cx, cy)
                                   == coannulet(s, F, s.join(x, y)),
                         w);
            if (in && F.contains(s.join(x, y))) {
              comax.expect(omega_join(fam, cx, cy) == full_filter(s), w);
            }
          }
        }
        for (auto const& H : proper_filters(c)) {
          SubsetMask const D = divisor(s, F, H);
          SubsetMask       def(c.n);
          for (Elem a = 0; a < c.n; ++a) {
            if (!coannulet(s, F, a).subset_of(H)) {
              def.insert(a);
            }
          }
          auto w = [&] { return fs() + " " + c.set(H); };
          div_def.expect(D == def && F.mask().subset_of(D)
                             && D == omega(s, F, H.mask().complement()),
                         w);
          div_full.expect(D.is_full() == !F.subset_of(H), w);
        }
        auto const mins = minimal_primes_over(s, c.primes, F.mask()).filters;
        for (auto const& P : c.primes) {
          Filter const D(divisor(s, F, P));
          auto w = [&] { return fs() + " " + c.set(P); };
          div_prime.expect(fam.find(D).has_value()
                               && (!F.subset_of(P) || D.subset_of(P)),
                           w);
          std::vector<Filter> inside;
          for (auto const& m : mins) {
            if (m.subset_of(P)) {
              inside.push_back(m);
            }
          }
          div_inter.expect(intersection_of(c.n, inside) == D.mask(), w);
          auto const dmins =
              minimal_primes_over(s, c.primes, D.mask()).filters;
          for (auto const& q : dmins) {
            below.expect(q.subset_of(P),
                         [&] { return w() + " " + c.set(q); });
          }
          if (F.subset_of(P)) {
            bool const minimal =
                std::find(mins.begin(), mins.end(), P) != mins.end();
            bool const fixed = D == P;
            bool       exactly_one = true;
            for (Elem x = 0; x < c.n; ++x) {
              exactly_one = exactly_one
                            && (P.contains(x)
                                != coannulet(s, F, x).subset_of(P));
            }
            min_char.expect(minimal == fixed && fixed == exactly_one, w);
          }
        }
        for (auto const& m : mins) {
          auto w = [&] { return fs() + " " + c.set(m); };
          min_fix.expect(Filter(divisor(s, F, m)) == m
                             && m.mask().subset_of(divisor(s, F, F)),
                         w);
          for (auto const& m2 : mins) {
            if (m2 != m) {
              min_comax.expect(omega_join(fam, m, m2) == full_filter(s),
                               [&] { return w() + " " + c.set(m2); });
            }
          }
        }
        for (auto const& C : c.joins_closed) {
          Filter const W(omega(s, F, C));
          auto const   wmins =
              minimal_primes_over(s, c.primes, W.mask()).filters;
          auto w = [&] { return fs() + " " + c.set(C); };
          std::vector<Filter> avoiding;
          for (auto const& m : mins) {
            if (!m.mask().intersects(C)) {
              avoiding.push_back(m);
            }
          }
          for (auto const& m : wmins) {
            miss.expect(!m.mask().intersects(C), w);
          }
          min_set.expect(wmins == avoiding, w);
          inter.expect(intersection_of(c.n, avoiding) == W.mask(), w);
        }
      }
    }

    // ------------------------------------------------------------------
    void normality_checks(Context const& c, VerificationReport& r) {
      Structure const& s = c.s;
      auto verdict_text = [](EquivalenceVerdict const& v) {
        std::string out = v.proposition + ":";
        for (auto const& [label, value] : v.conditions) {
          out += " " + label + "=" + (value ? "T" : "F");
        }
        if (v.witness) {
          out += " [" + *v.witness + "]";
        }
        return out;
      };
      {
        Tally t(r, "normality", "n_prime_conditions_agree");
        for (auto const& F : proper_filters(c)) {
          for (std::size_t n = 2; n <= c.primes.size() + 1; ++n) {
            auto const v = is_n_prime(s, F, n);
            t.expect(v.agree, [&] { return c.set(F) + " " + verdict_text(v); });
          }
        }
      }
      {
        Tally       t(r, "normality", "n_normality_conditions_agree");
        std::size_t printed_differs = 0;
        for (auto const& F : proper_filters(c)) {
          auto const mins = minimal_primes_over(s, c.primes, F.mask()).filters;
          for (std::size_t n = 1; n <= mins.size() + 1; ++n) {
            auto const v = check_n_normality(s, F, n);
            t.expect(v.agree, [&] { return c.set(F) + " " + verdict_text(v); });
            if (v.diagnostics.front().second
                != v.condition("minimal_primes_comaximal")) {
              ++printed_differs;
            }
          }
        }
        if (printed_differs > 0) {
          r.notes.push_back(
              "n_normality: joining only n of the n+1 minimal primes gives a "
              "different answer in "
              + std::to_string(printed_differs) + " (F, n) case(s)");
        }
      }
      {
        Tally      t(r, "normality", "index_is_max_count");
        for (auto const& F : proper_filters(c)) {
          auto const rep = normality_report(s, c.primes, F);
          std::size_t m  = 0;
          for (auto const& pc : rep.per_prime) {
            m = std::max(m, pc.second);
          }
          t.expect(rep.index == m && rep.index >= 1,
                   [&] { return c.set(F); });
        }
      }
      {
        Tally t(r, "normality", "separating_elements_postconditions");
        for (auto const& F : proper_filters(c)) {
          auto const mins = minimal_primes_over(s, c.primes, F.mask()).filters;
          for (std::size_t k = 2; k <= mins.size(); ++k) {
            detail::for_each_combination(
                mins.size(), k, [&](std::vector<std::size_t> const& pick) {
                  std::vector<Filter> ms;
                  for (std::size_t i : pick) {
                    ms.push_back(mins[i]);
                  }
                  std::string what = c.set(F);
                  for (auto const& m : ms) {
                    what += " " + c.set(m);
                  }
                  try {
                    auto const sep = separating_elements(s, F, ms);
                    t.expect(sep.postconditions_hold(), [&] { return what; });
                  } catch (Error const& e) {
                    t.expect(false, [&] { return what + " " + e.what(); });
                  }
                  return true;
                });
          }
        }
      }
      bool normal = false;
      {
        Tally      t(r, "normality", "normality_conditions_agree");
        auto const v = check_normality(s);
        normal       = v.condition("normal");
        t.expect(v.agree, [&] { return verdict_text(v); });
      }
      {
        Tally      t(r, "normality", "omega_sublattice_conditions_agree");
        auto const v = check_omega_sublattice(s);
        t.expect(v.agree, [&] { return verdict_text(v); });
      }
      {
        Tally             t(r, "normality", "sigma_is_omega_filter_inside");
        Tally             u(r, "normality", "sigma_is_greatest_omega_filter");
        OmegaFamily const om(s, trivial_filter(s), c.ideals);
        std::size_t       coincidental = 0;
        for (auto const& F : c.filters()) {
          Filter const sg = sigma(s, F);
          auto         w  = [&] { return c.set(F); };
          t.expect(om.find(sg).has_value() && sg.subset_of(F)
                       && sg.mask() == omega(s, trivial_filter(s),
                                             sigma_ideal(s, F)),
                   w);
          auto const g = check_greatest_omega_filter(s, F);
          if (normal) {
            u.expect(g.applicable && g.holds, w);
          } else if (g.holds) {
            ++coincidental;
          }
        }
        if (!normal) {
          r.notes.push_back("sigma: structure is not normal; greatest "
                            "omega-filter identity held for "
                            + std::to_string(coincidental) + " of "
                            + std::to_string(c.filters().size())
                            + " filters");
        }
      }
    }

  }  // namespace

  Battery parse_battery(std::string_view name) {
    for (auto const& [b, text] : kBatteryNames) {
      if (text == name) {
        return b;
      }
    }
    throw Error(ErrorKind::parse,
                "unknown battery '" + std::string(name)
                    + "' (expected all|structure|filters|spectra|coann|omega|"
                      "normality)");
  }

  std::string_view to_string(Battery b) {
    for (auto const& [v, text] : kBatteryNames) {
      if (v == b) {
        return text;
      }
    }
    return "?";
  }

  std::size_t VerificationReport::failures() const noexcept {
    return std::accumulate(
        checks.begin(), checks.end(), std::size_t{0},
        [](std::size_t acc, CheckResult const& c) { return acc + c.failures; });
  }

  VerificationReport verify(Structure const& s, Battery battery) {
    VerificationReport r;
    r.structure = s.name;
    auto const axioms = validate_structure(s);
    if (!axioms.valid()) {
      Context const c{s, static_cast<Elem>(s.size()), {}, {}, {}, {}, {}, {}};
      structure_checks(c, r);
      return r;  // the remaining groups assume a residuated lattice
    }
    Context const c = make_context(s);
    auto want = [&](Battery b) { return battery == Battery::all || battery == b; };
    if (want(Battery::structure)) {
      structure_checks(c, r);
    }
    if (want(Battery::filters)) {
      filter_checks(c, r);
    }
    if (want(Battery::spectra)) {
      spectra_checks(c, r);
    }
    if (want(Battery::coann)) {
      coann_checks(c, r);
    }
    if (want(Battery::omega)) {
      omega_checks(c, r);
    }
    if (want(Battery::normality)) {
      normality_checks(c, r);
    }
    return r;
  }

}  // namespace rlat
