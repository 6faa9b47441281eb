#ifndef RLAT_MODELGEN_HPP_
#define RLAT_MODELGEN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlat/structure.hpp"

namespace rlat {

  inline constexpr std::size_t kMinSearchSize = 2;
  inline constexpr std::size_t kMaxSearchSize = 6;

  struct SearchSpec {
    std::size_t size = 2;
    // Fixes the lattice reduct. Any labelling is accepted; it is relabelled
    // so that bottom is 0, top is size - 1 and the order is a linear
    // extension of the index order.
    std::optional<OrderMatrix> base_lattice;
    std::optional<std::size_t> limit;
    bool                       canonical_only = true;
  };

  struct CensusStats {
    std::size_t filters          = 0;
    std::size_t primes           = 0;
    std::size_t minimal_primes   = 0;
    std::size_t normality_index  = 0;  // w.r.t. {1}
    bool        mtl              = false;
  };

  struct CensusRecord {
    Structure                 structure;
    std::vector<std::uint8_t> canonical_key;
    CensusStats               stats;
  };

  // Bounded lattices of the given size up to isomorphism, each as an order
  // on 0..size-1 with bottom 0, top size-1 and i <= j whenever i is below j.
  // Throws Error{size_out_of_range}.
  std::vector<OrderMatrix> enumerate_lattices(std::size_t size);

  // Residuated lattices on the requested lattice(s); times is searched, the
  // residuum is derived. Records are sorted by canonical key. Throws
  // Error{size_out_of_range} and Error{invalid_base_lattice}.
  std::vector<CensusRecord> enumerate_residuated(SearchSpec const& spec);

  // Lexicographically least encoding (size byte, then join, meet, times and
  // residuum tables) over relabellings that send bottom to 0, top to n - 1
  // and keep the order a linear extension of the index order.
  std::vector<std::uint8_t> canonical_key(Structure const& s);

  // The structure relabelled into the form that realises canonical_key,
  // with generated element names.
  Structure canonical_form(Structure const& s);

  CensusStats census_stats(Structure const& s);

  // "0", "a", "b", ..., "1"
  std::vector<std::string> generated_names(std::size_t n);

  std::string to_hex(std::vector<std::uint8_t> const& bytes);

}  // namespace rlat

#endif  // RLAT_MODELGEN_HPP_
