#ifndef RLAT_SPECTRA_HPP_
#define RLAT_SPECTRA_HPP_

#include <vector>

#include "rlat/filters.hpp"
#include "rlat/structure.hpp"
#include "rlat/subset_mask.hpp"

namespace rlat {

  // Proper filter P such that x v y in P implies x in P or y in P.
  bool is_prime(Structure const& s, Filter const& F);

  struct SpectrumReport {
    Filter              base;
    std::vector<Filter> primes;
    std::vector<Filter> maximals;
    std::vector<Filter> minimal_primes;  // minimal primes containing base
  };

  SpectrumReport spectrum(Structure const& s);
  SpectrumReport spectrum(Structure const& s, Filter const& base);
  SpectrumReport spectrum(FilterLattice const& lat, Structure const& s,
                          Filter const& base);

  std::vector<Filter> prime_filters(Structure const& s);
  std::vector<Filter> prime_filters(Structure const& s,
                                    FilterLattice const& lat);

  struct MinimalPrimes {
    std::vector<Filter> filters;
    // set when X generates the whole carrier, so no prime contains it
    bool generates_all = false;
  };

  // Minimal elements of {P prime | X subset of P}, canonically sorted.
  MinimalPrimes minimal_primes_over(Structure const& s, SubsetMask const& X);
  MinimalPrimes minimal_primes_over(Structure const&           s,
                                    std::vector<Filter> const& primes,
                                    SubsetMask const&          X);

  // Nonempty and closed under join.
  bool       is_join_closed(Structure const& s, SubsetMask const& C);
  SubsetMask join_closure(Structure const& s, SubsetMask const& C);

  // Greedily extends C (in ascending element order) to a join-closed set
  // disjoint from F that is maximal under inclusion. Throws Error{overlap}
  // if C meets F and Error{not_join_closed} if C is not join-closed.
  SubsetMask maximal_join_closed_avoiding(Structure const& s, Filter const& F,
                                          SubsetMask const& C);

  // C is join-closed, disjoint from F, and no join-closed proper superset of
  // C is disjoint from F.
  bool is_maximal_join_closed_avoiding(Structure const& s, Filter const& F,
                                       SubsetMask const& C);

}  // namespace rlat

#endif  // RLAT_SPECTRA_HPP_
