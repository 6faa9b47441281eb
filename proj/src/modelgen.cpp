#include "rlat/modelgen.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rlat/error.hpp"
#include "rlat/filters.hpp"
#include "rlat/normality.hpp"
#include "rlat/spectra.hpp"

namespace rlat {

  namespace {

    using Perm = std::vector<Elem>;  // old index -> new index

    void check_size(std::size_t n) {
      if (n < kMinSearchSize || n > kMaxSearchSize) {
        throw Error(ErrorKind::size_out_of_range,
                    "size " + std::to_string(n) + " outside "
                        + std::to_string(kMinSearchSize) + ".."
                        + std::to_string(kMaxSearchSize));
      }
    }

    // Calls f with every relabelling that lists elements in a linear
    // extension of `order` (so bottom gets 0 and top gets n - 1).
    void for_each_linear_extension(OrderMatrix const&                order,
                                   std::function<void(Perm const&)> const& f) {
      std::size_t const n = order.size();
      Perm              perm(n, 0);
      std::vector<bool> placed(n, false);
      std::function<void(Elem)> rec = [&](Elem next) {
        if (next == n) {
          f(perm);
          return;
        }
        for (Elem x = 0; x < n; ++x) {
          if (placed[x]) {
            continue;
          }
          bool ready = true;
          for (Elem y = 0; y < n && ready; ++y) {
            ready = placed[y] || y == x || !order[y][x];
          }
          if (!ready) {
            continue;
          }
          placed[x] = true;
          perm[x]   = next;
          rec(next + 1);
          placed[x] = false;
        }
      };
      rec(0);
    }

    OpTable relabel(OpTable const& t, Perm const& p) {
      OpTable out(t.size());
      for (Elem x = 0; x < t.size(); ++x) {
        for (Elem y = 0; y < t.size(); ++y) {
          out.at(p[x], p[y]) = p[t(x, y)];
        }
      }
      return out;
    }

    OrderMatrix relabel(OrderMatrix const& order, Perm const& p) {
      OrderMatrix out(order.size(), std::vector<bool>(order.size(), false));
      for (std::size_t x = 0; x < order.size(); ++x) {
        for (std::size_t y = 0; y < order.size(); ++y) {
          out[p[x]][p[y]] = order[x][y];
        }
      }
      return out;
    }

    std::vector<std::uint8_t> encode(Structure const& s, Perm const& p) {
      std::vector<std::uint8_t> key;
      std::size_t const         n = s.size();
      key.reserve(1 + 4 * n * n);
      key.push_back(static_cast<std::uint8_t>(n));
      for (OpTable const* t : {&s.join, &s.meet, &s.times, &s.residuum}) {
        OpTable const r = relabel(*t, p);
        for (auto v : r.entries()) {
          key.push_back(static_cast<std::uint8_t>(v));
        }
      }
      return key;
    }

    std::vector<std::uint8_t> encode(OrderMatrix const& order) {
      std::vector<std::uint8_t> key;
      for (auto const& row : order) {
        for (bool b : row) {
          key.push_back(b ? 1 : 0);
        }
      }
      return key;
    }

    std::pair<std::vector<std::uint8_t>, Perm> best_relabelling(
        Structure const& s) {
      std::vector<std::uint8_t> best;
      Perm                      arg;
      for_each_linear_extension(order_matrix(s), [&](Perm const& p) {
        auto key = encode(s, p);
        if (best.empty() || key < best) {
          best = std::move(key);
          arg  = p;
        }
      });
      return {best, arg};
    }

    // Relabels an arbitrary bounded lattice order into index-compatible form.
    OrderMatrix normalise_base(OrderMatrix const& order, std::size_t size) {
      if (order.size() != size) {
        throw Error(ErrorKind::invalid_base_lattice,
                    "base lattice has " + std::to_string(order.size())
                        + " elements, expected " + std::to_string(size));
      }
      try {
        lattice_from_order(order);
      } catch (Error const& e) {
        throw Error(ErrorKind::invalid_base_lattice, e.what());
      }
      std::optional<Perm> first;
      for_each_linear_extension(order, [&](Perm const& p) {
        if (!first) {
          first = p;
        }
      });
      return relabel(order, *first);
    }

    // Backtracking search for times on a lattice in normal form.
    class TimesSearch {
     public:
      TimesSearch(LatticeTables const& lt, std::function<void(OpTable const&)> emit)
          : _n(lt.join.size()), _lt(lt), _emit(std::move(emit)),
            _t(_n * _n, kUnknown) {
        Elem const top = static_cast<Elem>(_n - 1);
        for (Elem x = 0; x < _n; ++x) {
          set(0, x, 0);
          set(top, x, x);
        }
        for (Elem x = 1; x + 1 < _n; ++x) {
          for (Elem y = x; y + 1 < _n; ++y) {
            _free.push_back({x, y});
          }
        }
      }

      void run() {
        rec(0);
      }

     private:
      static constexpr int kUnknown = -1;

      bool leq(Elem x, Elem y) const {
        return _lt.join(x, y) == y;
      }
      int get(Elem x, Elem y) const {
        return _t[x * _n + y];
      }
      void set(Elem x, Elem y, int v) {
        _t[x * _n + y] = v;
        _t[y * _n + x] = v;
      }

      bool monotone_at(Elem x, Elem y) const {
        auto const v = static_cast<Elem>(get(x, y));
        for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
          for (Elem u = 0; u < _n; ++u) {
            int const w = get(u, b);
            if (w == kUnknown) {
              continue;
            }
            if (leq(a, u) && !leq(v, static_cast<Elem>(w))) {
              return false;
            }
            if (leq(u, a) && !leq(static_cast<Elem>(w), v)) {
              return false;
            }
          }
        }
        return true;
      }

      // Associativity and distributivity over joins on all triples whose
      // entries are known.
      bool consistent() const {
        for (Elem a = 0; a < _n; ++a) {
          for (Elem b = 0; b < _n; ++b) {
            int const ab = get(a, b);
            for (Elem c = 0; c < _n; ++c) {
              int const bc = get(b, c);
              if (ab != kUnknown && bc != kUnknown) {
                int const l = get(static_cast<Elem>(ab), c);
                int const r = get(a, static_cast<Elem>(bc));
                if (l != kUnknown && r != kUnknown && l != r) {
                  return false;
                }
              }
              int const ac  = get(a, c);
              int const abc = get(a, _lt.join(b, c));
              if (ab != kUnknown && ac != kUnknown && abc != kUnknown
                  && static_cast<Elem>(abc)
                         != _lt.join(static_cast<Elem>(ab),
                                     static_cast<Elem>(ac))) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void rec(std::size_t i) {
        if (i == _free.size()) {
          OpTable times(_n);
          for (Elem x = 0; x < _n; ++x) {
            for (Elem y = 0; y < _n; ++y) {
              times.at(x, y) = static_cast<Elem>(get(x, y));
            }
          }
          _emit(times);
          return;
        }
        auto const [x, y] = _free[i];
        Elem const bound  = _lt.meet(x, y);
        for (Elem v = 0; v < _n; ++v) {
          if (!leq(v, bound)) {
            continue;
          }
          set(x, y, static_cast<int>(v));
          if (monotone_at(x, y) && consistent()) {
            rec(i + 1);
          }
        }
        set(x, y, kUnknown);
      }

      std::size_t                           _n;
      LatticeTables const&                  _lt;
      std::function<void(OpTable const&)>   _emit;
      std::vector<int>                      _t;
      std::vector<std::pair<Elem, Elem>>    _free;
    };

    std::vector<Structure> residuated_on(OrderMatrix const& order) {
      LatticeTables const    lt = lattice_from_order(order);
      std::size_t const      n  = order.size();
      std::vector<Structure> out;
      TimesSearch search(lt, [&](OpTable const& times) {
        auto res = residuum_from_times(times, lt.join);
        if (!res) {
          return;
        }
        Structure s;
        s.names    = generated_names(n);
        s.join     = lt.join;
        s.meet     = lt.meet;
        s.times    = times;
        s.residuum = *res;
        s.bot      = 0;
        s.top      = static_cast<Elem>(n - 1);
        if (validate_structure(s).valid()) {
          out.push_back(std::move(s));
        }
      });
      search.run();
      return out;
    }

  }  // namespace

  std::vector<std::string> generated_names(std::size_t n) {
    std::vector<std::string> names{"0"};
    for (std::size_t i = 1; i + 1 < n; ++i) {
      names.emplace_back(1, static_cast<char>('a' + i - 1));
    }
    names.emplace_back("1");
    return names;
  }

  std::string to_hex(std::vector<std::uint8_t> const& bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string           out;
    for (auto b : bytes) {
      out += kDigits[b >> 4];
      out += kDigits[b & 15];
    }
    return out;
  }

  std::vector<OrderMatrix> enumerate_lattices(std::size_t size) {
    check_size(size);
    std::size_t const                n = size;
    std::vector<std::array<Elem, 2>> slots;
    for (Elem i = 1; i + 1 < n; ++i) {
      for (Elem j = i + 1; j + 1 < n; ++j) {
        slots.push_back({i, j});
      }
    }
    std::map<std::vector<std::uint8_t>, OrderMatrix> found;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << slots.size());
         ++pick) {
      OrderMatrix order(n, std::vector<bool>(n, false));
      for (Elem x = 0; x < n; ++x) {
        order[0][x] = order[x][x] = order[x][n - 1] = true;
      }
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if ((pick >> k) & 1U) {
          order[slots[k][0]][slots[k][1]] = true;
        }
      }
      bool transitive = true;
      for (Elem a = 0; a < n && transitive; ++a) {
        for (Elem b = 0; b < n && transitive; ++b) {
          for (Elem c = 0; c < n && transitive; ++c) {
            transitive = !(order[a][b] && order[b][c]) || order[a][c];
          }
        }
      }
      if (!transitive) {
        continue;
      }
      try {
        lattice_from_order(order);
      } catch (Error const&) {
        continue;
      }
      std::vector<std::uint8_t> best;
      OrderMatrix               rep;
      for_each_linear_extension(order, [&](Perm const& p) {
        auto relabelled = relabel(order, p);
        auto key        = encode(relabelled);
        if (best.empty() || key < best) {
          best = std::move(key);
          rep  = std::move(relabelled);
        }
      });
      found.emplace(std::move(best), std::move(rep));
    }
    std::vector<OrderMatrix> out;
    for (auto& [key, order] : found) {
      out.push_back(std::move(order));
    }
    return out;
  }

  std::vector<std::uint8_t> canonical_key(Structure const& s) {
    return best_relabelling(s).first;
  }

  Structure canonical_form(Structure const& s) {
    auto const [key, p] = best_relabelling(s);
    Structure out;
    out.name     = s.name;
    out.names    = generated_names(s.size());
    out.join     = relabel(s.join, p);
    out.meet     = relabel(s.meet, p);
    out.times    = relabel(s.times, p);
    out.residuum = relabel(s.residuum, p);
    out.bot      = p[s.bot];
    out.top      = p[s.top];
    return out;
  }

  CensusStats census_stats(Structure const& s) {
    CensusStats   st;
    auto const    lat    = all_filters(s);
    auto const    primes = prime_filters(s, lat);
    Filter const  unit   = trivial_filter(s);
    st.filters           = lat.size();
    st.primes            = primes.size();
    st.minimal_primes = minimal_primes_over(s, primes, unit.mask()).filters.size();
    st.normality_index = normality_report(s, primes, unit).index;
    st.mtl             = is_mtl(s);
    return st;
  }

  std::vector<CensusRecord> enumerate_residuated(SearchSpec const& spec) {
    check_size(spec.size);
    std::vector<OrderMatrix> lattices;
    if (spec.base_lattice) {
      lattices.push_back(normalise_base(*spec.base_lattice, spec.size));
    } else {
      lattices = enumerate_lattices(spec.size);
    }

    std::vector<CensusRecord> out;
    for (auto const& order : lattices) {
      for (auto& s : residuated_on(order)) {
        CensusRecord rec;
        rec.canonical_key = canonical_key(s);
        rec.structure     = spec.canonical_only ? canonical_form(s) : std::move(s);
        out.push_back(std::move(rec));
      }
    }
    auto by_key = [](CensusRecord const& a, CensusRecord const& b) {
      if (a.canonical_key != b.canonical_key) {
        return a.canonical_key < b.canonical_key;
      }
      return a.structure.times.entries() < b.structure.times.entries();
    };
    std::sort(out.begin(), out.end(), by_key);
    if (spec.canonical_only) {
      out.erase(std::unique(out.begin(), out.end(),
                            [](CensusRecord const& a, CensusRecord const& b) {
                              return a.canonical_key == b.canonical_key;
                            }),
                out.end());
    }
    if (spec.limit && out.size() > *spec.limit) {
      out.resize(*spec.limit);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      auto& s = out[i].structure;
      s.name  = "rl" + std::to_string(spec.size) + "-" + std::to_string(i + 1);
      out[i].stats = census_stats(s);
    }
    return out;
  }

}  // namespace rlat
