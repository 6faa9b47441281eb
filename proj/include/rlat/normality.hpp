#ifndef RLAT_NORMALITY_HPP_
#define RLAT_NORMALITY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlat/filters.hpp"
#include "rlat/structure.hpp"

namespace rlat {

  // Outcome of evaluating several conditions that a theorem claims are
  // equivalent. Disagreement is a finding, not an error.
  struct EquivalenceVerdict {
    std::string                               proposition;
    std::vector<std::pair<std::string, bool>> conditions;
    // evaluated but not part of the equivalence
    std::vector<std::pair<std::string, bool>> diagnostics;
    bool                                      agree = true;
    std::optional<std::string>                witness;

    bool condition(std::string const& label) const;
  };

  // Sets `agree` from the condition values.
  void settle(EquivalenceVerdict& v);

  // n-prime filters. Conditions:
  //   filters_meet:   n filters with pairwise meet F force one equal to F
  //   filters_below:  n filters with pairwise meet inside F force one inside F
  //   elements:       n elements pairwise in F force one into F
  //   prime_cover:    F is an intersection of at most n - 1 distinct primes
  // The n-prime answer is `prime_cover`. Throws Error{bad_n} for n < 2 and
  // Error{improper_f} for F = A.
  EquivalenceVerdict is_n_prime(Structure const& s, Filter const& F,
                                std::size_t n);

  // Least number of distinct primes whose intersection is F.
  std::size_t prime_cover_size(Structure const&           s,
                               std::vector<Filter> const& primes,
                               Filter const&              F);

  struct NormalityReport {
    Filter base;
    // smallest n such that the structure is n-normal w.r.t. base
    std::size_t index = 0;
    // (prime P containing base, number of base-minimal primes inside P)
    std::vector<std::pair<Filter, std::size_t>> per_prime;
  };

  // Throws Error{improper_f} for F = A.
  NormalityReport normality_report(Structure const& s, Filter const& F);
  NormalityReport normality_report(Structure const&           s,
                                   std::vector<Filter> const& primes,
                                   Filter const&              F);

  struct SeparatingElements {
    std::vector<Elem> a;  // pairwise in F, a[i] not in ms[i]
    std::vector<Elem> b;  // b[i] = product of the a[j], j != i
    bool              b_in_own_prime   = false;  // b[i] in ms[i]
    bool              join_of_b_in_f   = false;  // v b[i] in F
    bool              coann_in_own_prime = false;  // (F : v_{j!=i} b[j]) in ms[i]

    bool postconditions_hold() const noexcept {
      return b_in_own_prime && join_of_b_in_f && coann_in_own_prime;
    }
  };

  // Lexicographically first witness tuple for distinct F-minimal primes ms.
  // Throws Error{bad_n} if fewer than 2 are given, Error{not_minimal_prime}
  // if one fails the minimality test or they are not distinct, and
  // Error{search_exhausted} if no tuple exists.
  SeparatingElements separating_elements(Structure const&           s,
                                         Filter const&              F,
                                         std::vector<Filter> const& ms);

  // Seven characterisations of n-normality with respect to F, each evaluated
  // directly (n + 1 objects indexed 0..n). Labels:
  //   minimal_primes_comaximal, n_normal, divisors_n_plus_1_prime,
  //   coannulets_join_to_a, product_reaches_zero, coannihilator_identity,
  //   coannihilator_implication
  // The diagnostic `printed_index_reading` evaluates the first condition
  // with the join over n of the n + 1 minimal primes.
  // Throws Error{bad_n} for n < 1 and Error{improper_f} for F = A.
  EquivalenceVerdict check_n_normality(Structure const& s, Filter const& F,
                                       std::size_t n);

  // The normality conditions with F = {1} stated over pairs of elements.
  EquivalenceVerdict check_normality(Structure const& s);

  // Normality via omega-filters: omega-join vs filter-join, closure of
  // omega-filters and coannulets under filter joins.
  EquivalenceVerdict check_omega_sublattice(Structure const& s);

  struct GreatestOmegaResult {
    bool applicable = false;  // structure is normal
    bool holds      = false;  // sigma(F) is the greatest omega-filter inside F
  };

  GreatestOmegaResult check_greatest_omega_filter(Structure const& s,
                                                  Filter const&    F);

}  // namespace rlat

#endif  // RLAT_NORMALITY_HPP_
