#ifndef RLAT_FILTERS_HPP_
#define RLAT_FILTERS_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rlat/structure.hpp"
#include "rlat/subset_mask.hpp"

namespace rlat {

  // A filter: nonempty, closed under times, upward closed. The constructor
  // does not check this; use make_filter for untrusted masks.
  class Filter {
   public:
    Filter() = default;
    explicit Filter(SubsetMask mask) : _mask(mask) {}

    SubsetMask const& mask() const noexcept {
      return _mask;
    }
    bool contains(Elem x) const noexcept {
      return _mask.contains(x);
    }
    bool subset_of(Filter const& other) const noexcept {
      return _mask.subset_of(other._mask);
    }
    bool is_proper() const noexcept {
      return !_mask.is_full();
    }

    friend bool operator==(Filter const&, Filter const&) = default;
    friend auto operator<=>(Filter const&, Filter const&) = default;

   private:
    SubsetMask _mask;
  };

  // An ideal of the lattice reduct: nonempty, downward closed, join-closed.
  class Ideal {
   public:
    Ideal() = default;
    explicit Ideal(SubsetMask mask) : _mask(mask) {}

    SubsetMask const& mask() const noexcept {
      return _mask;
    }
    bool contains(Elem x) const noexcept {
      return _mask.contains(x);
    }

    friend bool operator==(Ideal const&, Ideal const&) = default;
    friend auto operator<=>(Ideal const&, Ideal const&) = default;

   private:
    SubsetMask _mask;
  };

  bool is_filter(Structure const& s, SubsetMask const& m);
  bool is_ideal(Structure const& s, SubsetMask const& m);

  // Throws Error{not_a_filter} unless is_filter(s, m).
  Filter make_filter(Structure const& s, SubsetMask const& m);

  // Smallest filter containing X: upward closure of the times-closure.
  // The empty set generates {1}.
  Filter generated_filter(Structure const& s, SubsetMask const& X);

  // F(F, x) = F v F(x)
  Filter generated_filter(Structure const& s, Filter const& F, Elem x);

  Filter principal_filter(Structure const& s, Elem x);
  Filter trivial_filter(Structure const& s);  // {1}
  Filter full_filter(Structure const& s);     // A

  // Filter-lattice join and meet computed from the structure.
  Filter filter_join(Structure const& s, Filter const& F, Filter const& G);
  Filter filter_meet(Filter const& F, Filter const& G);
  Filter filter_join(Structure const& s, std::vector<Filter> const& family);

  // All filters of a structure with the frame operations tabulated.
  class FilterLattice {
   public:
    FilterLattice() = default;
    FilterLattice(Structure const& s, std::vector<Filter> filters);

    std::size_t size() const noexcept {
      return _filters.size();
    }
    std::vector<Filter> const& filters() const noexcept {
      return _filters;
    }
    Filter const& operator[](std::size_t i) const {
      return _filters[i];
    }

    std::optional<std::size_t> find(Filter const& F) const;
    // Throws Error{unknown_filter}.
    std::size_t index_of(Filter const& F) const;

    bool leq(std::size_t i, std::size_t j) const {
      return _leq[i * size() + j];
    }
    std::size_t join(std::size_t i, std::size_t j) const {
      return _join[i * size() + j];
    }
    std::size_t meet(std::size_t i, std::size_t j) const {
      return _meet[i * size() + j];
    }

    // {1} and A sit at the two ends of the canonical order
    std::size_t bottom() const noexcept {
      return 0;
    }
    std::size_t top() const noexcept {
      return size() - 1;
    }

   private:
    std::vector<Filter>      _filters;
    std::vector<bool>        _leq;
    std::vector<std::size_t> _join;
    std::vector<std::size_t> _meet;
  };

  // Enumerates upsets of the lattice order and keeps the times-closed ones.
  // Filters come out in canonical order (cardinality, then bits).
  FilterLattice all_filters(Structure const& s);

  Filter filter_join(FilterLattice const& lat, Filter const& F,
                     Filter const& G);
  Filter filter_meet(FilterLattice const& lat, Filter const& F,
                     Filter const& G);

  // Downward closure of the join-closure; the empty set generates {0}.
  Ideal generated_ideal(Structure const& s, SubsetMask const& X);
  Ideal principal_ideal(Structure const& s, Elem x);
  // I(I u J)
  Ideal ideal_join(Structure const& s, Ideal const& I, Ideal const& J);
  std::vector<Ideal> all_ideals(Structure const& s);

  // Upward closure {y | x <= y for some x in X}.
  SubsetMask up_closure(Structure const& s, SubsetMask const& X);
  SubsetMask down_closure(Structure const& s, SubsetMask const& X);

  // Intersection of a family of subsets of the carrier; the empty family
  // gives the whole carrier.
  SubsetMask intersection_of(std::size_t n, std::vector<Filter> const& family);

  // "{c,d,1}": element names in index order.
  std::string format_set(Structure const& s, SubsetMask const& m);

}  // namespace rlat

#endif  // RLAT_FILTERS_HPP_
