#ifndef RLAT_STRUCTURE_HPP_
#define RLAT_STRUCTURE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rlat {

  // Index of a carrier element, in [0, n). The order of indices is the input
  // order of the element names, not the lattice order.
  using Elem = std::uint32_t;

  // Row-major n x n table of a binary operation.
  class OpTable {
   public:
    OpTable() = default;
    explicit OpTable(std::size_t n, Elem fill = 0)
        : _n(n), _entries(n * n, fill) {}
    OpTable(std::size_t n, std::vector<Elem> entries);

    std::size_t size() const noexcept {
      return _n;
    }

    Elem operator()(Elem x, Elem y) const noexcept {
      return _entries[x * _n + y];
    }

    Elem& at(Elem x, Elem y) noexcept {
      return _entries[x * _n + y];
    }

    std::vector<Elem> const& entries() const noexcept {
      return _entries;
    }

    friend bool operator==(OpTable const&, OpTable const&) = default;

   private:
    std::size_t       _n = 0;
    std::vector<Elem> _entries;
  };

  // A finite (commutative, bounded) residuated lattice given by its four
  // operation tables. Immutable by convention once validated.
  struct Structure {
    std::string              name;
    std::vector<std::string> names;
    OpTable                  join;
    OpTable                  meet;
    OpTable                  times;
    OpTable                  residuum;
    Elem                     bot = 0;
    Elem                     top = 0;

    std::size_t size() const noexcept {
      return names.size();
    }

    bool leq(Elem x, Elem y) const noexcept {
      return join(x, y) == y;
    }

    std::optional<Elem> find(std::string_view element_name) const;

    friend bool operator==(Structure const&, Structure const&) = default;
  };

  struct Violation {
    std::string         axiom;
    std::array<Elem, 3> witness{};
    std::size_t         arity = 0;  // number of meaningful witness entries
  };

  struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const noexcept {
      return violations.empty();
    }
  };

  // Throws Error{malformed_tables} when dimensions disagree, an entry is out
  // of range, n < 2, or bot == top. Otherwise reports every failing axiom
  // with the lexicographically first witness.
  ValidationReport validate_structure(Structure const& s);

  bool leq(Structure const& s, Elem x, Elem y) noexcept;

  // Prelinearity: (x -> y) v (y -> x) = 1 for all x, y.
  bool is_mtl(Structure const& s);
  std::optional<std::array<Elem, 2>> mtl_witness(Structure const& s);

  // a -> 0
  Elem negate(Structure const& s, Elem a) noexcept;

  // Order matrix as rows of booleans: order[x][y] == (x <= y).
  using OrderMatrix = std::vector<std::vector<bool>>;

  OrderMatrix order_matrix(Structure const& s);

  // Reflexive-transitive closure of the given pairs.
  OrderMatrix order_from_pairs(std::size_t                                 n,
                               std::vector<std::array<Elem, 2>> const& pairs);

  struct LatticeTables {
    OpTable join;
    OpTable meet;
  };

  // Derives join and meet from a partial order. Throws
  // Error{malformed_tables} if the relation is not a partial order or some
  // pair lacks a least upper bound or a greatest lower bound.
  LatticeTables lattice_from_order(OrderMatrix const& order);

  // Covering pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::array<Elem, 2>> covers(Structure const& s);

  // Length of the longest chain from bot to x.
  std::vector<std::size_t> heights(Structure const& s);

  // The residual y -> z = max{x | x * y <= z} computed from times and the
  // lattice order; std::nullopt when some maximum does not exist.
  std::optional<OpTable> residuum_from_times(OpTable const& times,
                                             OpTable const& join);

}  // namespace rlat

#endif  // RLAT_STRUCTURE_HPP_
