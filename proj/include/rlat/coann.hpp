#ifndef RLAT_COANN_HPP_
#define RLAT_COANN_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "rlat/filters.hpp"
#include "rlat/structure.hpp"
#include "rlat/subset_mask.hpp"

namespace rlat {

  // (F : X) = {a | x v a in F for all x in X}; (F : {}) = A.
  Filter coannihilator(Structure const& s, Filter const& F, SubsetMask const& X);
  // (F : x)
  Filter coannulet(Structure const& s, Filter const& F, Elem x);

  // The Boolean algebra of F-coannihilators, with its coannulets.
  //
  // Members are built by closing the coannulets under intersection (which
  // also covers the empty intersection A), since (F : X) is the intersection
  // of the (F : x) for x in X. Join and complement are tabulated by index.
  class CoannFamily {
   public:
    CoannFamily(Structure const& s, Filter base);

    Filter const& base() const noexcept {
      return _base;
    }
    std::vector<Filter> const& members() const noexcept {
      return _members;
    }
    std::vector<Filter> const& coannulets() const noexcept {
      return _coannulets;
    }
    std::size_t size() const noexcept {
      return _members.size();
    }
    Filter const& operator[](std::size_t i) const {
      return _members[i];
    }

    std::optional<std::size_t> find(Filter const& G) const;
    // Throws Error{unknown_member}.
    std::size_t index_of(Filter const& G) const;

    // (F : (F : G u H))
    std::size_t join(std::size_t i, std::size_t j) const {
      return _join[i * size() + j];
    }
    std::size_t meet(std::size_t i, std::size_t j) const {
      return _meet[i * size() + j];
    }
    // (F : G)
    std::size_t complement(std::size_t i) const {
      return _complement[i];
    }

   private:
    Filter                   _base;
    std::vector<Filter>      _members;
    std::vector<Filter>      _coannulets;
    std::vector<std::size_t> _join;
    std::vector<std::size_t> _meet;
    std::vector<std::size_t> _complement;
  };

  CoannFamily coann_family(Structure const& s, Filter const& F);

  Filter gamma_join(CoannFamily const& fam, Filter const& G, Filter const& H);
  Filter gamma_complement(CoannFamily const& fam, Filter const& G);

}  // namespace rlat

#endif  // RLAT_COANN_HPP_
