#ifndef RLAT_SUBSET_MASK_HPP_
#define RLAT_SUBSET_MASK_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rlat/structure.hpp"

namespace rlat {

  // Characteristic bit vector of a subset of a carrier of size n <= 64.
  // Bits at positions >= n are always zero.
  class SubsetMask {
   public:
    static constexpr std::size_t max_size = 64;

    SubsetMask() = default;
    explicit SubsetMask(std::size_t n, std::uint64_t bits = 0);

    static SubsetMask full(std::size_t n) {
      return SubsetMask(n, universe_bits(n));
    }
    static SubsetMask single(std::size_t n, Elem x) {
      return SubsetMask(n, std::uint64_t(1) << x);
    }
    static SubsetMask of(std::size_t n, std::initializer_list<Elem> xs);
    static SubsetMask of(std::size_t n, std::vector<Elem> const& xs);

    std::size_t size() const noexcept {
      return _n;
    }
    std::uint64_t bits() const noexcept {
      return _bits;
    }
    std::size_t count() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }
    bool empty() const noexcept {
      return _bits == 0;
    }
    bool is_full() const noexcept {
      return _bits == universe_bits(_n);
    }
    bool contains(Elem x) const noexcept {
      return (_bits >> x) & 1U;
    }

    SubsetMask& insert(Elem x) noexcept {
      _bits |= std::uint64_t(1) << x;
      return *this;
    }
    SubsetMask& erase(Elem x) noexcept {
      _bits &= ~(std::uint64_t(1) << x);
      return *this;
    }

    SubsetMask complement() const noexcept {
      return SubsetMask(_n, ~_bits & universe_bits(_n), raw_tag{});
    }
    bool subset_of(SubsetMask const& other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    bool intersects(SubsetMask const& other) const noexcept {
      return (_bits & other._bits) != 0;
    }

    std::vector<Elem> elements() const;

    SubsetMask& operator|=(SubsetMask const& o) noexcept {
      _bits |= o._bits;
      return *this;
    }
    SubsetMask& operator&=(SubsetMask const& o) noexcept {
      _bits &= o._bits;
      return *this;
    }

    friend SubsetMask operator|(SubsetMask a, SubsetMask const& b) noexcept {
      return a |= b;
    }
    friend SubsetMask operator&(SubsetMask a, SubsetMask const& b) noexcept {
      return a &= b;
    }
    // set difference
    friend SubsetMask operator-(SubsetMask a, SubsetMask const& b) noexcept {
      a._bits &= ~b._bits;
      return a;
    }

    friend bool operator==(SubsetMask const& a, SubsetMask const& b) noexcept {
      return a._n == b._n && a._bits == b._bits;
    }

    // Canonical order: ascending cardinality, ties by bit-vector value.
    friend std::strong_ordering operator<=>(SubsetMask const& a,
                                            SubsetMask const& b) noexcept {
      if (auto c = a.count() <=> b.count(); c != 0) {
        return c;
      }
      if (auto c = a._bits <=> b._bits; c != 0) {
        return c;
      }
      return a._n <=> b._n;
    }

    static std::uint64_t universe_bits(std::size_t n) noexcept {
      return n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    }

   private:
    struct raw_tag {};
    SubsetMask(std::size_t n, std::uint64_t bits, raw_tag) noexcept
        : _n(n), _bits(bits) {}

    std::size_t   _n    = 0;
    std::uint64_t _bits = 0;
  };

  // Calls f(x) for each element of m in ascending index order.
  template <typename Fn>
  void for_each_element(SubsetMask const& m, Fn&& f) {
    for (std::uint64_t b = m.bits(); b != 0; b &= b - 1) {
      f(static_cast<Elem>(std::countr_zero(b)));
    }
  }

}  // namespace rlat

#endif  // RLAT_SUBSET_MASK_HPP_
