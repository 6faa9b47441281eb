#include "rlat/filters.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "rlat/error.hpp"

namespace rlat {

  SubsetMask::SubsetMask(std::size_t n, std::uint64_t bits) : _n(n), _bits(bits) {
    if (n > max_size) {
      throw Error(ErrorKind::malformed_tables,
                  "carrier of size " + std::to_string(n)
                      + " exceeds the supported maximum of 64");
    }
    if ((bits & ~universe_bits(n)) != 0) {
      throw Error(ErrorKind::malformed_tables, "subset bit beyond carrier");
    }
  }

  SubsetMask SubsetMask::of(std::size_t n, std::initializer_list<Elem> xs) {
    return of(n, std::vector<Elem>(xs));
  }

  SubsetMask SubsetMask::of(std::size_t n, std::vector<Elem> const& xs) {
    SubsetMask m(n);
    for (Elem x : xs) {
      if (x >= n) {
        throw Error(ErrorKind::malformed_tables,
                    "element " + std::to_string(x) + " out of range");
      }
      m.insert(x);
    }
    return m;
  }

  std::vector<Elem> SubsetMask::elements() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each_element(*this, [&](Elem x) { out.push_back(x); });
    return out;
  }

  namespace {

    std::vector<SubsetMask> strictly_above(Structure const& s) {
      auto const              n = static_cast<Elem>(s.size());
      std::vector<SubsetMask> out(n, SubsetMask(n));
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (x != y && s.leq(x, y)) {
            out[x].insert(y);
          }
        }
      }
      return out;
    }

    std::vector<SubsetMask> strictly_below(Structure const& s) {
      auto const              n = static_cast<Elem>(s.size());
      std::vector<SubsetMask> out(n, SubsetMask(n));
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (x != y && s.leq(y, x)) {
            out[x].insert(y);
          }
        }
      }
      return out;
    }

    bool closed_under(OpTable const& op, SubsetMask const& m) {
      bool ok = true;
      for_each_element(m, [&](Elem x) {
        for_each_element(m, [&](Elem y) { ok = ok && m.contains(op(x, y)); });
      });
      return ok;
    }

    SubsetMask op_closure(OpTable const& op, SubsetMask m) {
      for (bool grew = true; grew;) {
        grew = false;
        SubsetMask const snapshot = m;
        for_each_element(snapshot, [&](Elem x) {
          for_each_element(snapshot, [&](Elem y) {
            Elem const z = op(x, y);
            if (!m.contains(z)) {
              m.insert(z);
              grew = true;
            }
          });
        });
      }
      return m;
    }

    // Enumerates all sets S with: x in S implies blockers[x] is a subset of
    // S. `order` must list each element after all of its blockers.
    void enumerate_closed_sets(std::size_t                    n,
                               std::vector<Elem> const&       order,
                               std::vector<SubsetMask> const& blockers,
                               std::function<void(SubsetMask const&)> const& f) {
      SubsetMask current(n);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == order.size()) {
          f(current);
          return;
        }
        Elem const x = order[i];
        rec(i + 1);
        if (blockers[x].subset_of(current)) {
          current.insert(x);
          rec(i + 1);
          current.erase(x);
        }
      };
      rec(0);
    }

    std::vector<Elem> by_height(Structure const& s, bool descending) {
      auto const        h = heights(s);
      std::vector<Elem> order(s.size());
      for (Elem x = 0; x < order.size(); ++x) {
        order[x] = x;
      }
      std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
        return descending ? h[a] > h[b] : h[a] < h[b];
      });
      return order;
    }

  }  // namespace

  SubsetMask up_closure(Structure const& s, SubsetMask const& X) {
    auto const n = static_cast<Elem>(s.size());
    SubsetMask out(n);
    for (Elem y = 0; y < n; ++y) {
      for_each_element(X, [&](Elem x) {
        if (s.leq(x, y)) {
          out.insert(y);
        }
      });
    }
    return out;
  }

  SubsetMask down_closure(Structure const& s, SubsetMask const& X) {
    auto const n = static_cast<Elem>(s.size());
    SubsetMask out(n);
    for (Elem y = 0; y < n; ++y) {
      for_each_element(X, [&](Elem x) {
        if (s.leq(y, x)) {
          out.insert(y);
        }
      });
    }
    return out;
  }

  bool is_filter(Structure const& s, SubsetMask const& m) {
    return !m.empty() && m.size() == s.size() && closed_under(s.times, m)
           && up_closure(s, m) == m;
  }

  bool is_ideal(Structure const& s, SubsetMask const& m) {
    return !m.empty() && m.size() == s.size() && closed_under(s.join, m)
           && down_closure(s, m) == m;
  }

  Filter make_filter(Structure const& s, SubsetMask const& m) {
    if (!is_filter(s, m)) {
      throw Error(ErrorKind::not_a_filter, "subset is not a filter");
    }
    return Filter(m);
  }

  Filter generated_filter(Structure const& s, SubsetMask const& X) {
    if (X.empty()) {
      return trivial_filter(s);
    }
    return Filter(up_closure(s, op_closure(s.times, X)));
  }

  Filter generated_filter(Structure const& s, Filter const& F, Elem x) {
    SubsetMask X = F.mask();
    return generated_filter(s, X.insert(x));
  }

  Filter principal_filter(Structure const& s, Elem x) {
    return generated_filter(s, SubsetMask::single(s.size(), x));
  }

  Filter trivial_filter(Structure const& s) {
    return Filter(SubsetMask::single(s.size(), s.top));
  }

  Filter full_filter(Structure const& s) {
    return Filter(SubsetMask::full(s.size()));
  }

  Filter filter_join(Structure const& s, Filter const& F, Filter const& G) {
    return generated_filter(s, F.mask() | G.mask());
  }

  Filter filter_meet(Filter const& F, Filter const& G) {
    return Filter(F.mask() & G.mask());
  }

  Filter filter_join(Structure const& s, std::vector<Filter> const& family) {
    SubsetMask u(s.size());
    for (auto const& F : family) {
      u |= F.mask();
    }
    return generated_filter(s, u);
  }

  FilterLattice::FilterLattice(Structure const& s, std::vector<Filter> filters)
      : _filters(std::move(filters)) {
    std::sort(_filters.begin(), _filters.end());
    _filters.erase(std::unique(_filters.begin(), _filters.end()),
                   _filters.end());
    std::size_t const k = _filters.size();
    _leq.assign(k * k, false);
    _join.assign(k * k, 0);
    _meet.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        _leq[i * k + j] = _filters[i].subset_of(_filters[j]);
        if (j < i) {
          _join[i * k + j] = _join[j * k + i];
          _meet[i * k + j] = _meet[j * k + i];
          continue;
        }
        auto jn = find(filter_join(s, _filters[i], _filters[j]));
        auto mt = find(filter_meet(_filters[i], _filters[j]));
        if (!jn || !mt) {
          throw Error(ErrorKind::unknown_filter,
                      "filter family is not closed under join and meet");
        }
        _join[i * k + j] = *jn;
        _meet[i * k + j] = *mt;
      }
    }
  }

  std::optional<std::size_t> FilterLattice::find(Filter const& F) const {
    auto it = std::lower_bound(_filters.begin(), _filters.end(), F);
    if (it == _filters.end() || *it != F) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _filters.begin());
  }

  std::size_t FilterLattice::index_of(Filter const& F) const {
    if (auto i = find(F)) {
      return *i;
    }
    throw Error(ErrorKind::unknown_filter, "filter is not in the lattice");
  }

  FilterLattice all_filters(Structure const& s) {
    std::vector<Filter> found;
    auto const          above = strictly_above(s);
    enumerate_closed_sets(s.size(), by_height(s, true), above,
                          [&](SubsetMask const& m) {
                            if (!m.empty() && closed_under(s.times, m)) {
                              found.emplace_back(m);
                            }
                          });
    return FilterLattice(s, std::move(found));
  }

  Filter filter_join(FilterLattice const& lat, Filter const& F,
                     Filter const& G) {
    return lat[lat.join(lat.index_of(F), lat.index_of(G))];
  }

  Filter filter_meet(FilterLattice const& lat, Filter const& F,
                     Filter const& G) {
    return lat[lat.meet(lat.index_of(F), lat.index_of(G))];
  }

  Ideal generated_ideal(Structure const& s, SubsetMask const& X) {
    if (X.empty()) {
      return Ideal(SubsetMask::single(s.size(), s.bot));
    }
    return Ideal(down_closure(s, op_closure(s.join, X)));
  }

  Ideal principal_ideal(Structure const& s, Elem x) {
    return Ideal(down_closure(s, SubsetMask::single(s.size(), x)));
  }

  Ideal ideal_join(Structure const& s, Ideal const& I, Ideal const& J) {
    return generated_ideal(s, I.mask() | J.mask());
  }

  std::vector<Ideal> all_ideals(Structure const& s) {
    std::vector<Ideal> found;
    auto const         below = strictly_below(s);
    enumerate_closed_sets(s.size(), by_height(s, false), below,
                          [&](SubsetMask const& m) {
                            if (!m.empty() && closed_under(s.join, m)) {
                              found.emplace_back(m);
                            }
                          });
    std::sort(found.begin(), found.end());
    return found;
  }

  SubsetMask intersection_of(std::size_t n, std::vector<Filter> const& family) {
    SubsetMask out = SubsetMask::full(n);
    for (auto const& F : family) {
      out &= F.mask();
    }
    return out;
  }

  std::string format_set(Structure const& s, SubsetMask const& m) {
    std::string out = "{";
    bool        first = true;
    for_each_element(m, [&](Elem x) {
      if (!first) {
        out += ',';
      }
      out += s.names[x];
      first = false;
    });
    return out + "}";
  }

}  // namespace rlat
