#include "rlat/coann.hpp"

#include <algorithm>

#include "rlat/error.hpp"

namespace rlat {

  Filter coannihilator(Structure const& s, Filter const& F,
                       SubsetMask const& X) {
    auto const n = static_cast<Elem>(s.size());
    SubsetMask out(n);
    for (Elem a = 0; a < n; ++a) {
      bool all = true;
      for_each_element(X, [&](Elem x) { all = all && F.contains(s.join(x, a)); });
      if (all) {
        out.insert(a);
      }
    }
    return Filter(out);
  }

  Filter coannulet(Structure const& s, Filter const& F, Elem x) {
    return coannihilator(s, F, SubsetMask::single(s.size(), x));
  }

  CoannFamily::CoannFamily(Structure const& s, Filter base)
      : _base(std::move(base)) {
    auto const n = static_cast<Elem>(s.size());
    for (Elem x = 0; x < n; ++x) {
      _coannulets.push_back(coannulet(s, _base, x));
    }
    std::sort(_coannulets.begin(), _coannulets.end());
    _coannulets.erase(std::unique(_coannulets.begin(), _coannulets.end()),
                      _coannulets.end());

    _members = _coannulets;
    _members.push_back(full_filter(s));
    for (bool grew = true; grew;) {
      grew         = false;
      auto current = _members;
      for (std::size_t i = 0; i < current.size(); ++i) {
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          Filter G = filter_meet(current[i], current[j]);
          if (std::find(_members.begin(), _members.end(), G)
              == _members.end()) {
            _members.push_back(G);
            grew = true;
          }
        }
      }
    }
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()),
                   _members.end());

    std::size_t const k = _members.size();
    _join.assign(k * k, 0);
    _meet.assign(k * k, 0);
    _complement.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      _complement[i] = index_of(coannihilator(s, _base, _members[i].mask()));
      for (std::size_t j = 0; j < k; ++j) {
        SubsetMask const u = _members[i].mask() | _members[j].mask();
        Filter const     inner = coannihilator(s, _base, u);
        _join[i * k + j] = index_of(coannihilator(s, _base, inner.mask()));
        _meet[i * k + j] = index_of(filter_meet(_members[i], _members[j]));
      }
    }
  }

  std::optional<std::size_t> CoannFamily::find(Filter const& G) const {
    auto it = std::lower_bound(_members.begin(), _members.end(), G);
    if (it == _members.end() || *it != G) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _members.begin());
  }

  std::size_t CoannFamily::index_of(Filter const& G) const {
    if (auto i = find(G)) {
      return *i;
    }
    throw Error(ErrorKind::unknown_member,
                "filter is not a coannihilator of the base");
  }

  CoannFamily coann_family(Structure const& s, Filter const& F) {
    return CoannFamily(s, F);
  }

  Filter gamma_join(CoannFamily const& fam, Filter const& G, Filter const& H) {
    return fam[fam.join(fam.index_of(G), fam.index_of(H))];
  }

  Filter gamma_complement(CoannFamily const& fam, Filter const& G) {
    return fam[fam.complement(fam.index_of(G))];
  }

}  // namespace rlat
