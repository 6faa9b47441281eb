#include "rlat/structure.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "rlat/error.hpp"

namespace rlat {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::malformed_tables:
        return "MalformedTables";
      case ErrorKind::not_a_filter:
        return "NotAFilter";
      case ErrorKind::empty_argument:
        return "EmptyArgument";
      case ErrorKind::unknown_filter:
        return "UnknownFilter";
      case ErrorKind::unknown_member:
        return "UnknownMember";
      case ErrorKind::overlap:
        return "Overlap";
      case ErrorKind::not_join_closed:
        return "NotJoinClosed";
      case ErrorKind::improper_h:
        return "ImproperH";
      case ErrorKind::improper_f:
        return "ImproperF";
      case ErrorKind::bad_n:
        return "BadN";
      case ErrorKind::not_minimal_prime:
        return "NotMinimalPrime";
      case ErrorKind::search_exhausted:
        return "SearchExhausted";
      case ErrorKind::size_out_of_range:
        return "SizeOutOfRange";
      case ErrorKind::invalid_base_lattice:
        return "InvalidBaseLattice";
      case ErrorKind::parse:
        return "ParseError";
    }
    return "Error";
  }

  OpTable::OpTable(std::size_t n, std::vector<Elem> entries)
      : _n(n), _entries(std::move(entries)) {
    if (_entries.size() != n * n) {
      throw Error(ErrorKind::malformed_tables,
                  "table has " + std::to_string(_entries.size())
                      + " entries, expected " + std::to_string(n * n));
    }
  }

  std::optional<Elem> Structure::find(std::string_view element_name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == element_name) {
        return static_cast<Elem>(i);
      }
    }
    return std::nullopt;
  }

  namespace {

    void check_table(OpTable const& t, std::size_t n, char const* label) {
      if (t.size() != n || t.entries().size() != n * n) {
        throw Error(ErrorKind::malformed_tables,
                    std::string(label) + " table is not " + std::to_string(n)
                        + "x" + std::to_string(n));
      }
      for (Elem e : t.entries()) {
        if (e >= n) {
          throw Error(ErrorKind::malformed_tables,
                      std::string(label) + " table entry "
                          + std::to_string(e) + " out of range");
        }
      }
    }

    void check_shape(Structure const& s) {
      std::size_t const n = s.size();
      if (n < 2) {
        throw Error(ErrorKind::malformed_tables,
                    "carrier must have at least 2 elements");
      }
      check_table(s.join, n, "join");
      check_table(s.meet, n, "meet");
      check_table(s.times, n, "times");
      check_table(s.residuum, n, "residuum");
      if (s.bot >= n || s.top >= n) {
        throw Error(ErrorKind::malformed_tables, "constant out of range");
      }
      if (s.bot == s.top) {
        throw Error(ErrorKind::malformed_tables, "0 and 1 coincide");
      }
    }

    // Records the first witness of each failing axiom, scanning elements in
    // index order.
    class AxiomScan {
     public:
      explicit AxiomScan(std::size_t n) : _n(static_cast<Elem>(n)) {}

      template <typename Pred>
      void unary(char const* axiom, Pred&& holds) {
        for (Elem x = 0; x < _n; ++x) {
          if (!holds(x)) {
            _out.push_back({axiom, {x, 0, 0}, 1});
            return;
          }
        }
      }

      template <typename Pred>
      void binary(char const* axiom, Pred&& holds) {
        for (Elem x = 0; x < _n; ++x) {
          for (Elem y = 0; y < _n; ++y) {
            if (!holds(x, y)) {
              _out.push_back({axiom, {x, y, 0}, 2});
              return;
            }
          }
        }
      }

      template <typename Pred>
      void ternary(char const* axiom, Pred&& holds) {
        for (Elem x = 0; x < _n; ++x) {
          for (Elem y = 0; y < _n; ++y) {
            for (Elem z = 0; z < _n; ++z) {
              if (!holds(x, y, z)) {
                _out.push_back({axiom, {x, y, z}, 3});
                return;
              }
            }
          }
        }
      }

      std::vector<Violation>& violations() {
        return _out;
      }

     private:
      Elem                   _n;
      std::vector<Violation> _out;
    };

  }  // namespace

  ValidationReport validate_structure(Structure const& s) {
    check_shape(s);
    auto const& J = s.join;
    auto const& M = s.meet;
    auto const& T = s.times;
    auto const& R = s.residuum;
    auto le = [&](Elem x, Elem y) { return J(x, y) == y; };

    AxiomScan scan(s.size());
    // bounded lattice
    scan.binary("join_commutative",
                [&](Elem x, Elem y) { return J(x, y) == J(y, x); });
    scan.ternary("join_associative", [&](Elem x, Elem y, Elem z) {
      return J(J(x, y), z) == J(x, J(y, z));
    });
    scan.unary("join_idempotent", [&](Elem x) { return J(x, x) == x; });
    scan.binary("meet_commutative",
                [&](Elem x, Elem y) { return M(x, y) == M(y, x); });
    scan.ternary("meet_associative", [&](Elem x, Elem y, Elem z) {
      return M(M(x, y), z) == M(x, M(y, z));
    });
    scan.unary("meet_idempotent", [&](Elem x) { return M(x, x) == x; });
    scan.binary("absorption_join_meet",
                [&](Elem x, Elem y) { return J(x, M(x, y)) == x; });
    scan.binary("absorption_meet_join",
                [&](Elem x, Elem y) { return M(x, J(x, y)) == x; });
    scan.unary("bot_least", [&](Elem x) { return le(s.bot, x); });
    scan.unary("top_greatest", [&](Elem x) { return le(x, s.top); });
    // commutative monoid
    scan.binary("times_commutative",
                [&](Elem x, Elem y) { return T(x, y) == T(y, x); });
    scan.ternary("times_associative", [&](Elem x, Elem y, Elem z) {
      return T(T(x, y), z) == T(x, T(y, z));
    });
    scan.unary("times_identity", [&](Elem x) {
      return T(x, s.top) == x && T(s.top, x) == x;
    });
    // adjoint pair
    scan.ternary("adjointness", [&](Elem x, Elem y, Elem z) {
      return le(T(x, y), z) == le(x, R(y, z));
    });
    scan.binary("order_residuum_consistency", [&](Elem x, Elem y) {
      return le(x, y) == (R(x, y) == s.top);
    });
    scan.ternary("times_monotone", [&](Elem x, Elem y, Elem z) {
      return !le(x, y) || le(T(x, z), T(y, z));
    });

    ValidationReport report;
    report.violations = std::move(scan.violations());
    if (report.valid()) {
      // Both laws follow from the axioms; a failure here means the checks
      // above are wrong.
      AxiomScan derived(s.size());
      derived.ternary("internal_consistency_r1", [&](Elem x, Elem y, Elem z) {
        return T(x, J(y, z)) == J(T(x, y), T(x, z));
      });
      derived.ternary("internal_consistency_r2", [&](Elem x, Elem y, Elem z) {
        return le(T(J(x, y), J(x, z)), J(x, T(y, z)));
      });
      report.violations = std::move(derived.violations());
    }
    return report;
  }

  bool leq(Structure const& s, Elem x, Elem y) noexcept {
    return s.leq(x, y);
  }

  std::optional<std::array<Elem, 2>> mtl_witness(Structure const& s) {
    auto const n = static_cast<Elem>(s.size());
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (s.join(s.residuum(x, y), s.residuum(y, x)) != s.top) {
          return std::array<Elem, 2>{x, y};
        }
      }
    }
    return std::nullopt;
  }

  bool is_mtl(Structure const& s) {
    return !mtl_witness(s).has_value();
  }

  Elem negate(Structure const& s, Elem a) noexcept {
    return s.residuum(a, s.bot);
  }

  OrderMatrix order_matrix(Structure const& s) {
    std::size_t const n = s.size();
    OrderMatrix       out(n, std::vector<bool>(n));
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        out[x][y] = s.leq(x, y);
      }
    }
    return out;
  }

  OrderMatrix order_from_pairs(std::size_t                             n,
                               std::vector<std::array<Elem, 2>> const& pairs) {
    OrderMatrix le(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      le[i][i] = true;
    }
    for (auto const& [x, y] : pairs) {
      if (x >= n || y >= n) {
        throw Error(ErrorKind::malformed_tables, "order pair out of range");
      }
      le[x][y] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!le[i][k]) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (le[k][j]) {
            le[i][j] = true;
          }
        }
      }
    }
    return le;
  }

  LatticeTables lattice_from_order(OrderMatrix const& le) {
    std::size_t const n = le.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (le[i].size() != n || !le[i][i]) {
        throw Error(ErrorKind::malformed_tables, "order is not reflexive");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && le[i][j] && le[j][i]) {
          throw Error(ErrorKind::malformed_tables,
                      "order is not antisymmetric");
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (le[i][j] && le[j][k] && !le[i][k]) {
            throw Error(ErrorKind::malformed_tables,
                        "order is not transitive");
          }
        }
      }
    }
    LatticeTables out{OpTable(n), OpTable(n)};
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        std::optional<Elem> lub, glb;
        for (Elem z = 0; z < n; ++z) {
          if (le[x][z] && le[y][z] && (!lub || le[z][*lub])) {
            lub = z;
          }
          if (le[z][x] && le[z][y] && (!glb || le[*glb][z])) {
            glb = z;
          }
        }
        // the candidate must dominate every upper (lower) bound
        for (Elem z = 0; z < n && lub; ++z) {
          if (le[x][z] && le[y][z] && !le[*lub][z]) {
            lub.reset();
          }
        }
        for (Elem z = 0; z < n && glb; ++z) {
          if (le[z][x] && le[z][y] && !le[z][*glb]) {
            glb.reset();
          }
        }
        if (!lub || !glb) {
          throw Error(ErrorKind::malformed_tables,
                      "order is not a lattice: elements "
                          + std::to_string(x) + " and " + std::to_string(y)
                          + " lack a " + (lub ? "meet" : "join"));
        }
        out.join.at(x, y) = *lub;
        out.meet.at(x, y) = *glb;
      }
    }
    return out;
  }

  std::vector<std::array<Elem, 2>> covers(Structure const& s) {
    auto const                       n = static_cast<Elem>(s.size());
    std::vector<std::array<Elem, 2>> out;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (x == y || !s.leq(x, y)) {
          continue;
        }
        bool between = false;
        for (Elem z = 0; z < n && !between; ++z) {
          between = z != x && z != y && s.leq(x, z) && s.leq(z, y);
        }
        if (!between) {
          out.push_back({x, y});
        }
      }
    }
    return out;
  }

  std::vector<std::size_t> heights(Structure const& s) {
    std::size_t const        n = s.size();
    std::vector<std::size_t> h(n, 0);
    // relax n times; longest chains in a finite poset have < n edges
    auto const cov = covers(s);
    for (std::size_t round = 0; round < n; ++round) {
      for (auto const& [x, y] : cov) {
        h[y] = std::max(h[y], h[x] + 1);
      }
    }
    return h;
  }

  std::optional<OpTable> residuum_from_times(OpTable const& times,
                                             OpTable const& join) {
    std::size_t const n  = times.size();
    auto              le = [&](Elem x, Elem y) { return join(x, y) == y; };
    OpTable           out(n);
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        std::optional<Elem> best;
        for (Elem x = 0; x < n; ++x) {
          if (le(times(x, y), z)) {
            best = best ? join(*best, x) : x;
          }
        }
        if (!best || !le(times(*best, y), z)) {
          return std::nullopt;
        }
        out.at(y, z) = *best;
      }
    }
    return out;
  }

}  // namespace rlat
