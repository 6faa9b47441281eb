#ifndef RLAT_OMEGA_HPP_
#define RLAT_OMEGA_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rlat/filters.hpp"
#include "rlat/structure.hpp"
#include "rlat/subset_mask.hpp"

namespace rlat {

  // omega_F(X) = {a | x v a in F for some x in X}, the union of the
  // coannulets (F : x) over X. Only a filter when X is join-closed, hence the
  // raw mask. Throws Error{empty_argument} for X = {}.
  SubsetMask omega(Structure const& s, Filter const& F, SubsetMask const& X);

  // The F-dense elements {x | (F : x) = F}; an ideal of the lattice reduct.
  struct DenseSet {
    Filter     base;
    SubsetMask mask;
  };

  DenseSet dense_set(Structure const& s, Filter const& F);

  // Things that should never happen in a residuated lattice, recorded
  // instead of thrown so that the verification battery can report them.
  struct OmegaDiagnostics {
    // the union of all ideals with the same image is again an ideal
    bool witness_unions_are_ideals = true;
    // every pair of members has a least member above it
    bool has_least_upper_bounds = true;
    // member index pairs (i, j) where omega_F(I_i v I_j) differs from the
    // least member above both
    std::vector<std::pair<std::size_t, std::size_t>> formula_mismatches;
  };

  // The lattice of omega_F-filters: filters of the form omega_F(I) for an
  // ideal I of the lattice reduct. Members are found by iterating every
  // ideal.
  class OmegaFamily {
   public:
    OmegaFamily(Structure const& s, Filter base,
                std::vector<Ideal> const& ideals);

    Filter const& base() const noexcept {
      return _base;
    }
    std::vector<Filter> const& members() const noexcept {
      return _members;
    }
    // largest ideal I with omega_F(I) equal to the member
    std::vector<Ideal> const& witness_ideals() const noexcept {
      return _witnesses;
    }
    std::size_t size() const noexcept {
      return _members.size();
    }
    Filter const& operator[](std::size_t i) const {
      return _members[i];
    }
    OmegaDiagnostics const& diagnostics() const noexcept {
      return _diag;
    }

    std::optional<std::size_t> find(Filter const& G) const;
    // Throws Error{unknown_member}.
    std::size_t index_of(Filter const& G) const;

    // least member containing both
    std::size_t join(std::size_t i, std::size_t j) const {
      return _join[i * size() + j];
    }

   private:
    Filter                   _base;
    std::vector<Filter>      _members;
    std::vector<Ideal>       _witnesses;
    std::vector<std::size_t> _join;
    OmegaDiagnostics         _diag;
  };

  OmegaFamily omega_family(Structure const& s, Filter const& F);
  OmegaFamily omega_family(Structure const& s, Filter const& F,
                           std::vector<Ideal> const& ideals);

  Filter omega_join(OmegaFamily const& fam, Filter const& G, Filter const& H);

  // D_F(H) = omega_F(H^c). A filter whenever H is prime. Throws
  // Error{improper_h} when H = A.
  SubsetMask divisor(Structure const& s, Filter const& F, Filter const& H);

  // sigma(F) = {a | a^perp v F = A}, with v the filter-lattice join.
  Filter sigma(Structure const& s, Filter const& F);
  // {a | a^perp^perp v F = A}; omega of this ideal is sigma(F).
  SubsetMask sigma_ideal(Structure const& s, Filter const& F);

  // {x | (F : x) subset of H}. Diagnostic only: nothing guarantees it is an
  // ideal.
  SubsetMask canonical_witness(Structure const& s, Filter const& F,
                               Filter const& H);

}  // namespace rlat

#endif  // RLAT_OMEGA_HPP_
