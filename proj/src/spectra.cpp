#include "rlat/spectra.hpp"

#include <algorithm>

#include "rlat/error.hpp"

namespace rlat {

  namespace {

    std::vector<Filter> minimal_elements(std::vector<Filter> const& family) {
      std::vector<Filter> out;
      for (auto const& P : family) {
        bool minimal = std::none_of(family.begin(), family.end(),
                                    [&](Filter const& Q) {
                                      return Q != P && Q.subset_of(P);
                                    });
        if (minimal) {
          out.push_back(P);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace

  bool is_prime(Structure const& s, Filter const& F) {
    if (!F.is_proper()) {
      return false;
    }
    auto const n = static_cast<Elem>(s.size());
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x; y < n; ++y) {
        if (F.contains(s.join(x, y)) && !F.contains(x) && !F.contains(y)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Filter> prime_filters(Structure const&     s,
                                    FilterLattice const& lat) {
    std::vector<Filter> out;
    for (auto const& F : lat.filters()) {
      if (is_prime(s, F)) {
        out.push_back(F);
      }
    }
    return out;
  }

  std::vector<Filter> prime_filters(Structure const& s) {
    return prime_filters(s, all_filters(s));
  }

  SpectrumReport spectrum(FilterLattice const& lat, Structure const& s,
                          Filter const& base) {
    SpectrumReport out;
    out.base   = base;
    out.primes = prime_filters(s, lat);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (!lat[i].is_proper()) {
        continue;
      }
      bool maximal = true;
      for (std::size_t j = 0; j < lat.size() && maximal; ++j) {
        maximal = !(j != i && lat[j].is_proper() && lat.leq(i, j));
      }
      if (maximal) {
        out.maximals.push_back(lat[i]);
      }
    }
    out.minimal_primes
        = minimal_primes_over(s, out.primes, base.mask()).filters;
    return out;
  }

  SpectrumReport spectrum(Structure const& s, Filter const& base) {
    return spectrum(all_filters(s), s, base);
  }

  SpectrumReport spectrum(Structure const& s) {
    return spectrum(s, trivial_filter(s));
  }

  MinimalPrimes minimal_primes_over(Structure const&           s,
                                    std::vector<Filter> const& primes,
                                    SubsetMask const&          X) {
    MinimalPrimes out;
    if (!generated_filter(s, X).is_proper()) {
      out.generates_all = true;
      return out;
    }
    std::vector<Filter> over;
    for (auto const& P : primes) {
      if (X.subset_of(P.mask())) {
        over.push_back(P);
      }
    }
    out.filters = minimal_elements(over);
    return out;
  }

  MinimalPrimes minimal_primes_over(Structure const& s, SubsetMask const& X) {
    return minimal_primes_over(s, prime_filters(s), X);
  }

  bool is_join_closed(Structure const& s, SubsetMask const& C) {
    if (C.empty()) {
      return false;
    }
    bool ok = true;
    for_each_element(C, [&](Elem x) {
      for_each_element(C, [&](Elem y) { ok = ok && C.contains(s.join(x, y)); });
    });
    return ok;
  }

  SubsetMask join_closure(Structure const& s, SubsetMask const& C) {
    SubsetMask out = C;
    for (bool grew = true; grew;) {
      grew                    = false;
      SubsetMask const before = out;
      for_each_element(before, [&](Elem x) {
        for_each_element(before, [&](Elem y) {
          Elem const z = s.join(x, y);
          if (!out.contains(z)) {
            out.insert(z);
            grew = true;
          }
        });
      });
    }
    return out;
  }

  SubsetMask maximal_join_closed_avoiding(Structure const& s, Filter const& F,
                                          SubsetMask const& C) {
    if (C.intersects(F.mask())) {
      throw Error(ErrorKind::overlap, "join-closed set meets the filter");
    }
    if (!is_join_closed(s, C)) {
      throw Error(ErrorKind::not_join_closed, "set is not join-closed");
    }
    // One pass suffices: a candidate rejected against a smaller set is also
    // rejected against any superset of it.
    SubsetMask current = C;
    auto const n       = static_cast<Elem>(s.size());
    for (Elem x = 0; x < n; ++x) {
      if (current.contains(x) || F.contains(x)) {
        continue;
      }
      SubsetMask candidate = current;
      candidate            = join_closure(s, candidate.insert(x));
      if (!candidate.intersects(F.mask())) {
        current = candidate;
      }
    }
    return current;
  }

  bool is_maximal_join_closed_avoiding(Structure const& s, Filter const& F,
                                       SubsetMask const& C) {
    if (!is_join_closed(s, C) || C.intersects(F.mask())) {
      return false;
    }
    auto const n = static_cast<Elem>(s.size());
    for (Elem x = 0; x < n; ++x) {
      if (C.contains(x)) {
        continue;
      }
      SubsetMask bigger = C;
      if (!join_closure(s, bigger.insert(x)).intersects(F.mask())) {
        return false;
      }
    }
    return true;
  }

}  // namespace rlat
