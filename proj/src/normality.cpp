#include "rlat/normality.hpp"

#include <algorithm>
#include <limits>

#include "combinatorics.hpp"
#include "rlat/coann.hpp"
#include "rlat/error.hpp"
#include "rlat/omega.hpp"
#include "rlat/spectra.hpp"

namespace rlat {

  namespace {

    void require_proper(Filter const& F) {
      if (!F.is_proper()) {
        throw Error(ErrorKind::improper_f, "filter must be proper");
      }
    }

    std::string format_elems(Structure const&               s,
                             std::vector<Elem> const&       xs) {
      std::string out = "(";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ",") + s.names[xs[i]];
      }
      return out + ")";
    }

    std::string format_filters(Structure const&           s,
                               std::vector<Filter> const& fs) {
      std::string out;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        out += (i == 0 ? "" : " ") + format_set(s, fs[i].mask());
      }
      return out;
    }

    // Accumulates labelled conditions and the first counterexample of each.
    class VerdictBuilder {
     public:
      explicit VerdictBuilder(std::string proposition) {
        _v.proposition = std::move(proposition);
      }

      void add(std::string label, bool value, std::string counterexample = {}) {
        if (!value && !counterexample.empty()) {
          _counterexamples.push_back(label + ": " + counterexample);
        }
        _v.conditions.emplace_back(std::move(label), value);
      }

      void diagnostic(std::string label, bool value) {
        _v.diagnostics.emplace_back(std::move(label), value);
      }

      EquivalenceVerdict finish() {
        settle(_v);
        if (!_v.agree) {
          std::string w;
          for (auto const& c : _counterexamples) {
            w += (w.empty() ? "" : "; ") + c;
          }
          _v.witness = w;
        }
        return std::move(_v);
      }

     private:
      EquivalenceVerdict       _v;
      std::vector<std::string> _counterexamples;
    };

    Elem join_all(Structure const& s, std::vector<Elem> const& xs,
                  std::size_t skip = std::numeric_limits<std::size_t>::max()) {
      Elem acc = s.bot;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != skip) {
          acc = s.join(acc, xs[i]);
        }
      }
      return acc;
    }

    Elem times_all(Structure const& s, std::vector<Elem> const& xs,
                   std::size_t skip = std::numeric_limits<std::size_t>::max()) {
      Elem acc = s.top;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != skip) {
          acc = s.times(acc, xs[i]);
        }
      }
      return acc;
    }

    // Exists a_i in sets[i] with the product of all a_i equal to 0?
    bool product_reaches_bot(Structure const&               s,
                             std::vector<SubsetMask> const& sets,
                             std::size_t i, Elem acc) {
      if (acc == s.bot) {
        return true;  // 0 absorbs, so any completion works
      }
      if (i == sets.size()) {
        return false;
      }
      bool found = false;
      for_each_element(sets[i], [&](Elem a) {
        found = found || product_reaches_bot(s, sets, i + 1, s.times(acc, a));
      });
      return found;
    }

    std::vector<Elem> outside(Filter const& F) {
      return F.mask().complement().elements();
    }

  }  // namespace

  bool EquivalenceVerdict::condition(std::string const& label) const {
    for (auto const& [l, v] : conditions) {
      if (l == label) {
        return v;
      }
    }
    throw Error(ErrorKind::unknown_member, "no condition labelled " + label);
  }

  void settle(EquivalenceVerdict& v) {
    v.agree = std::all_of(v.conditions.begin(), v.conditions.end(),
                          [&](auto const& c) {
                            return c.second == v.conditions.front().second;
                          });
  }

  std::size_t prime_cover_size(Structure const&           s,
                               std::vector<Filter> const& primes,
                               Filter const&              F) {
    std::vector<Filter> over;
    for (auto const& P : primes) {
      if (F.subset_of(P)) {
        over.push_back(P);
      }
    }
    for (std::size_t k = 1; k <= over.size(); ++k) {
      bool found = false;
      detail::for_each_combination(
          over.size(), k, [&](std::vector<std::size_t> const& pick) {
            SubsetMask m = SubsetMask::full(s.size());
            for (std::size_t i : pick) {
              m &= over[i].mask();
            }
            found = m == F.mask();
            return !found;
          });
      if (found) {
        return k;
      }
    }
    return std::numeric_limits<std::size_t>::max();
  }

  EquivalenceVerdict is_n_prime(Structure const& s, Filter const& F,
                                std::size_t n) {
    if (n < 2) {
      throw Error(ErrorKind::bad_n, "n-prime requires n >= 2");
    }
    require_proper(F);
    FilterLattice const lat    = all_filters(s);
    auto const          primes = prime_filters(s, lat);
    VerdictBuilder      vb("n_prime(n=" + std::to_string(n) + ")");

    // Counterexamples to the first three conditions consist of n distinct
    // objects, so they are n-cliques in a compatibility graph.
    {
      std::vector<Filter> cand;
      for (auto const& G : lat.filters()) {
        if (F.subset_of(G) && G != F) {
          cand.push_back(G);
        }
      }
      std::vector<Filter> bad;
      detail::for_each_clique(
          cand.size(), n,
          [&](std::size_t i, std::size_t j) {
            return filter_meet(cand[i], cand[j]) == F;
          },
          [&](std::vector<std::size_t> const& c) {
            for (std::size_t i : c) {
              bad.push_back(cand[i]);
            }
            return false;
          });
      vb.add("filters_meet", bad.empty(), format_filters(s, bad));
    }
    {
      std::vector<Filter> cand;
      for (auto const& G : lat.filters()) {
        if (!G.subset_of(F)) {
          cand.push_back(G);
        }
      }
      std::vector<Filter> bad;
      detail::for_each_clique(
          cand.size(), n,
          [&](std::size_t i, std::size_t j) {
            return filter_meet(cand[i], cand[j]).subset_of(F);
          },
          [&](std::vector<std::size_t> const& c) {
            for (std::size_t i : c) {
              bad.push_back(cand[i]);
            }
            return false;
          });
      vb.add("filters_below", bad.empty(), format_filters(s, bad));
    }
    {
      auto const        cand = outside(F);
      std::vector<Elem> bad;
      detail::for_each_clique(
          cand.size(), n,
          [&](std::size_t i, std::size_t j) {
            return F.contains(s.join(cand[i], cand[j]));
          },
          [&](std::vector<std::size_t> const& c) {
            for (std::size_t i : c) {
              bad.push_back(cand[i]);
            }
            return false;
          });
      vb.add("elements", bad.empty(), format_elems(s, bad));
    }
    std::size_t const cover = prime_cover_size(s, primes, F);
    vb.add("prime_cover", cover <= n - 1,
           "needs " + std::to_string(cover) + " primes");
    return vb.finish();
  }

  NormalityReport normality_report(Structure const&           s,
                                   std::vector<Filter> const& primes,
                                   Filter const&              F) {
    require_proper(F);
    NormalityReport out;
    out.base = F;
    auto const mins = minimal_primes_over(s, primes, F.mask()).filters;
    for (auto const& P : primes) {
      if (!F.subset_of(P)) {
        continue;
      }
      auto const count = static_cast<std::size_t>(
          std::count_if(mins.begin(), mins.end(),
                        [&](Filter const& m) { return m.subset_of(P); }));
      out.per_prime.emplace_back(P, count);
      out.index = std::max(out.index, count);
    }
    return out;
  }

  NormalityReport normality_report(Structure const& s, Filter const& F) {
    return normality_report(s, prime_filters(s), F);
  }

  SeparatingElements separating_elements(Structure const&           s,
                                         Filter const&              F,
                                         std::vector<Filter> const& ms) {
    std::size_t const n = ms.size();
    if (n < 2) {
      throw Error(ErrorKind::bad_n, "need at least two minimal primes");
    }
    for (std::size_t i = 0; i < n; ++i) {
      Filter const& m = ms[i];
      if (!is_prime(s, m) || !F.subset_of(m)
          || divisor(s, F, m) != m.mask()) {
        throw Error(ErrorKind::not_minimal_prime,
                    format_set(s, m.mask()) + " is not an F-minimal prime");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (ms[j] == m) {
          throw Error(ErrorKind::not_minimal_prime,
                      "minimal primes must be distinct");
        }
      }
    }

    auto const        size = static_cast<Elem>(s.size());
    std::vector<Elem> a;
    auto              search = [&](auto&& self) -> bool {
      std::size_t const i = a.size();
      if (i == n) {
        return true;
      }
      for (Elem x = 0; x < size; ++x) {
        if (ms[i].contains(x)) {
          continue;
        }
        bool ok = std::all_of(a.begin(), a.end(), [&](Elem y) {
          return F.contains(s.join(x, y));
        });
        if (ok) {
          a.push_back(x);
          if (self(self)) {
            return true;
          }
          a.pop_back();
        }
      }
      return false;
    };
    if (!search(search)) {
      throw Error(ErrorKind::search_exhausted,
                  "no separating elements for the given minimal primes");
    }

    SeparatingElements out;
    out.a = a;
    for (std::size_t i = 0; i < n; ++i) {
      out.b.push_back(times_all(s, a, i));
    }
    out.b_in_own_prime = true;
    out.coann_in_own_prime = true;
    for (std::size_t i = 0; i < n; ++i) {
      out.b_in_own_prime = out.b_in_own_prime && ms[i].contains(out.b[i]);
      Filter const c     = coannulet(s, F, join_all(s, out.b, i));
      out.coann_in_own_prime = out.coann_in_own_prime && c.subset_of(ms[i]);
    }
    out.join_of_b_in_f = F.contains(join_all(s, out.b));
    return out;
  }

  EquivalenceVerdict check_n_normality(Structure const& s, Filter const& F,
                                       std::size_t n) {
    if (n < 1) {
      throw Error(ErrorKind::bad_n, "n-normality requires n >= 1");
    }
    require_proper(F);
    auto const     primes = prime_filters(s);
    auto const     mins = minimal_primes_over(s, primes, F.mask()).filters;
    auto const     A    = full_filter(s);
    auto const     size = static_cast<Elem>(s.size());
    VerdictBuilder vb("n_normality(n=" + std::to_string(n) + ")");

    {
      std::string bad;
      bool        printed = true;
      detail::for_each_combination(
          mins.size(), n + 1, [&](std::vector<std::size_t> const& pick) {
            std::vector<Filter> group;
            for (std::size_t i : pick) {
              group.push_back(mins[i]);
            }
            for (std::size_t skip = 0; skip < group.size() && printed; ++skip) {
              auto rest = group;
              rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(skip));
              printed = filter_join(s, rest) == A;
            }
            if (filter_join(s, group) != A) {
              bad = format_filters(s, group);
              return false;
            }
            return true;
          });
      vb.add("minimal_primes_comaximal", bad.empty(), bad);
      vb.diagnostic("printed_index_reading", printed);
    }
    {
      auto const report = normality_report(s, primes, F);
      vb.add("n_normal", report.index <= n,
             "index " + std::to_string(report.index));
    }
    {
      std::string bad;
      for (auto const& P : primes) {
        if (!F.subset_of(P)) {
          continue;
        }
        Filter const D(divisor(s, F, P));
        if (prime_cover_size(s, primes, D) > n) {
          bad = "D_F" + format_set(s, P.mask());
          break;
        }
      }
      vb.add("divisors_n_plus_1_prime", bad.empty(), bad);
    }

    // Tuples pairwise in F either contain an element of F, which makes the
    // next two conditions trivial, or consist of n + 1 distinct elements
    // outside F.
    auto const cand = outside(F);
    {
      std::string bad_join, bad_product;
      detail::for_each_clique(
          cand.size(), n + 1,
          [&](std::size_t i, std::size_t j) {
            return F.contains(s.join(cand[i], cand[j]));
          },
          [&](std::vector<std::size_t> const& c) {
            std::vector<Elem>       xs;
            std::vector<Filter>     coanns;
            std::vector<SubsetMask> sets;
            for (std::size_t i : c) {
              xs.push_back(cand[i]);
              coanns.push_back(coannulet(s, F, cand[i]));
              sets.push_back(coanns.back().mask());
            }
            if (bad_join.empty() && filter_join(s, coanns) != A) {
              bad_join = format_elems(s, xs);
            }
            if (bad_product.empty() && !product_reaches_bot(s, sets, 0, s.top)) {
              bad_product = format_elems(s, xs);
            }
            return true;
          });
      vb.add("coannulets_join_to_a", bad_join.empty(), bad_join);
      vb.add("product_reaches_zero", bad_product.empty(), bad_product);
    }
    {
      std::string bad_identity, bad_implication;
      detail::for_each_multiset(
          size, n + 1, [&](std::vector<std::size_t> const& idx) {
            std::vector<Elem> xs(idx.begin(), idx.end());
            std::vector<Filter> parts;
            for (std::size_t i = 0; i < xs.size(); ++i) {
              parts.push_back(coannulet(s, F, join_all(s, xs, i)));
            }
            Filter const rhs = filter_join(s, parts);
            Elem const   all = join_all(s, xs);
            if (bad_identity.empty() && coannulet(s, F, all) != rhs) {
              bad_identity = format_elems(s, xs);
            }
            if (bad_implication.empty() && F.contains(all) && rhs != A) {
              bad_implication = format_elems(s, xs);
            }
            return true;
          });
      vb.add("coannihilator_identity", bad_identity.empty(), bad_identity);
      vb.add("coannihilator_implication", bad_implication.empty(),
             bad_implication);
    }
    return vb.finish();
  }

  EquivalenceVerdict check_normality(Structure const& s) {
    auto const     primes = prime_filters(s);
    Filter const   unit   = trivial_filter(s);
    Filter const   A      = full_filter(s);
    auto const     mins = minimal_primes_over(s, primes, unit.mask()).filters;
    auto const     n    = static_cast<Elem>(s.size());
    VerdictBuilder vb("normality");

    std::vector<Filter> perp;
    for (Elem x = 0; x < n; ++x) {
      perp.push_back(coannulet(s, unit, x));
    }
    auto pair_text = [&](Elem x, Elem y) {
      return format_elems(s, std::vector<Elem>{x, y});
    };

    {
      std::string bad;
      for (std::size_t i = 0; i < mins.size() && bad.empty(); ++i) {
        for (std::size_t j = i + 1; j < mins.size() && bad.empty(); ++j) {
          if (filter_join(s, mins[i], mins[j]) != A) {
            bad = format_filters(s, {mins[i], mins[j]});
          }
        }
      }
      vb.add("minimal_primes_comaximal", bad.empty(), bad);
    }
    {
      auto const report = normality_report(s, primes, unit);
      vb.add("normal", report.index <= 1,
             "index " + std::to_string(report.index));
    }
    {
      std::string bad;
      for (auto const& P : primes) {
        if (!is_prime(s, Filter(divisor(s, unit, P)))) {
          bad = "D" + format_set(s, P.mask());
          break;
        }
      }
      vb.add("divisors_prime", bad.empty(), bad);
    }
    std::string bad4, bad5, bad6, bad7;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Filter const joined = filter_join(s, perp[x], perp[y]);
        Filter const of_join = perp[s.join(x, y)];
        if (s.join(x, y) == s.top) {
          if (bad4.empty() && joined != A) {
            bad4 = pair_text(x, y);
          }
          bool found = false;
          for_each_element(perp[x].mask(), [&](Elem u) {
            for_each_element(perp[y].mask(), [&](Elem v) {
              found = found || s.times(u, v) == s.bot;
            });
          });
          if (bad5.empty() && !found) {
            bad5 = pair_text(x, y);
          }
        }
        if (bad6.empty() && of_join != joined) {
          bad6 = pair_text(x, y);
        }
        if (bad7.empty() && of_join == A && joined != A) {
          bad7 = pair_text(x, y);
        }
      }
    }
    vb.add("perp_join_to_a", bad4.empty(), bad4);
    vb.add("perp_product_zero", bad5.empty(), bad5);
    vb.add("perp_of_join", bad6.empty(), bad6);
    vb.add("perp_implication", bad7.empty(), bad7);
    return vb.finish();
  }

  EquivalenceVerdict check_omega_sublattice(Structure const& s) {
    Filter const      unit = trivial_filter(s);
    Filter const      A    = full_filter(s);
    OmegaFamily const om   = omega_family(s, unit);
    auto const        n    = static_cast<Elem>(s.size());
    VerdictBuilder    vb("omega_sublattice");

    {
      std::string bad;
      for (std::size_t i = 0; i < om.size() && bad.empty(); ++i) {
        for (std::size_t j = 0; j < om.size() && bad.empty(); ++j) {
          if (om[om.join(i, j)] == A && filter_join(s, om[i], om[j]) != A) {
            bad = format_filters(s, {om[i], om[j]});
          }
        }
      }
      vb.add("omega_comaximal_implies_comaximal", bad.empty(), bad);
    }
    {
      auto const report = normality_report(s, unit);
      vb.add("normal", report.index <= 1,
             "index " + std::to_string(report.index));
    }
    {
      // Subfamily joins; past 16 members the closure under binary joins
      // (plus the empty join {1}, always a member) decides the same thing.
      std::string bad;
      if (om.size() <= 16) {
        for (std::uint32_t pick = 0; pick < (1U << om.size()) && bad.empty();
             ++pick) {
          std::vector<Filter> fam;
          for (std::size_t i = 0; i < om.size(); ++i) {
            if ((pick >> i) & 1U) {
              fam.push_back(om[i]);
            }
          }
          if (!om.find(filter_join(s, fam))) {
            bad = format_filters(s, fam);
          }
        }
      } else {
        for (std::size_t i = 0; i < om.size() && bad.empty(); ++i) {
          for (std::size_t j = 0; j < om.size() && bad.empty(); ++j) {
            if (!om.find(filter_join(s, om[i], om[j]))) {
              bad = format_filters(s, {om[i], om[j]});
            }
          }
        }
      }
      vb.add("joins_of_omega_families", bad.empty(), bad);
    }
    {
      std::string bad;
      for (std::size_t i = 0; i < om.size() && bad.empty(); ++i) {
        for (std::size_t j = 0; j < om.size() && bad.empty(); ++j) {
          if (!om.find(filter_join(s, om[i], om[j]))) {
            bad = format_filters(s, {om[i], om[j]});
          }
        }
      }
      vb.add("omega_sublattice", bad.empty(), bad);
    }
    {
      std::vector<Filter> gamma;
      for (Elem x = 0; x < n; ++x) {
        gamma.push_back(coannulet(s, unit, x));
      }
      auto in_gamma = [&](Filter const& G) {
        return std::find(gamma.begin(), gamma.end(), G) != gamma.end();
      };
      std::string bad;
      for (Elem x = 0; x < n && bad.empty(); ++x) {
        for (Elem y = 0; y < n && bad.empty(); ++y) {
          if (!in_gamma(filter_join(s, gamma[x], gamma[y]))) {
            bad = format_elems(s, std::vector<Elem>{x, y});
          }
        }
      }
      vb.add("coannulet_sublattice", bad.empty(), bad);
    }
    return vb.finish();
  }

  GreatestOmegaResult check_greatest_omega_filter(Structure const& s,
                                                  Filter const&    F) {
    GreatestOmegaResult out;
    out.applicable = check_normality(s).condition("normal");
    OmegaFamily const om = omega_family(s, trivial_filter(s));
    std::vector<Filter> inside;
    for (auto const& G : om.members()) {
      if (G.subset_of(F)) {
        inside.push_back(G);
      }
    }
    auto greatest = std::find_if(inside.begin(), inside.end(),
                                 [&](Filter const& G) {
                                   return std::all_of(
                                       inside.begin(), inside.end(),
                                       [&](Filter const& H) {
                                         return H.subset_of(G);
                                       });
                                 });
    out.holds = greatest != inside.end() && *greatest == sigma(s, F);
    return out;
  }

}  // namespace rlat
