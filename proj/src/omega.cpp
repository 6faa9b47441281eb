#include "rlat/omega.hpp"

#include <algorithm>
#include <map>

#include "rlat/coann.hpp"
#include "rlat/error.hpp"

namespace rlat {

  SubsetMask omega(Structure const& s, Filter const& F, SubsetMask const& X) {
    if (X.empty()) {
      throw Error(ErrorKind::empty_argument, "omega of the empty set");
    }
    SubsetMask out(s.size());
    for_each_element(X, [&](Elem x) { out |= coannulet(s, F, x).mask(); });
    return out;
  }

  DenseSet dense_set(Structure const& s, Filter const& F) {
    auto const n = static_cast<Elem>(s.size());
    DenseSet   out{F, SubsetMask(n)};
    for (Elem x = 0; x < n; ++x) {
      if (coannulet(s, F, x) == F) {
        out.mask.insert(x);
      }
    }
    return out;
  }

  OmegaFamily::OmegaFamily(Structure const& s, Filter base,
                           std::vector<Ideal> const& ideals)
      : _base(std::move(base)) {
    std::map<Filter, std::vector<Ideal>> by_image;
    for (auto const& I : ideals) {
      SubsetMask const image = omega(s, _base, I.mask());
      if (is_filter(s, image)) {
        by_image[Filter(image)].push_back(I);
      }
    }
    for (auto const& [G, preimages] : by_image) {
      SubsetMask u(s.size());
      for (auto const& I : preimages) {
        u |= I.mask();
      }
      _members.push_back(G);
      if (is_ideal(s, u) && omega(s, _base, u) == G.mask()) {
        _witnesses.emplace_back(u);
      } else {
        _diag.witness_unions_are_ideals = false;
        _witnesses.push_back(preimages.front());
      }
    }

    std::size_t const k = _members.size();
    _join.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        SubsetMask const both = _members[i].mask() | _members[j].mask();
        SubsetMask       least = SubsetMask::full(s.size());
        for (auto const& G : _members) {
          if (both.subset_of(G.mask())) {
            least &= G.mask();
          }
        }
        auto idx = find(Filter(least));
        if (!idx) {
          _diag.has_least_upper_bounds = false;
          idx                          = k - 1;
        }
        _join[i * k + j] = *idx;
        Ideal const     IJ      = ideal_join(s, _witnesses[i], _witnesses[j]);
        SubsetMask const formula = omega(s, _base, IJ.mask());
        if (formula != _members[*idx].mask()) {
          _diag.formula_mismatches.emplace_back(i, j);
        }
      }
    }
  }

  std::optional<std::size_t> OmegaFamily::find(Filter const& G) const {
    auto it = std::lower_bound(_members.begin(), _members.end(), G);
    if (it == _members.end() || *it != G) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _members.begin());
  }

  std::size_t OmegaFamily::index_of(Filter const& G) const {
    if (auto i = find(G)) {
      return *i;
    }
    throw Error(ErrorKind::unknown_member, "filter is not an omega-filter");
  }

  OmegaFamily omega_family(Structure const& s, Filter const& F,
                           std::vector<Ideal> const& ideals) {
    return OmegaFamily(s, F, ideals);
  }

  OmegaFamily omega_family(Structure const& s, Filter const& F) {
    return OmegaFamily(s, F, all_ideals(s));
  }

  Filter omega_join(OmegaFamily const& fam, Filter const& G, Filter const& H) {
    return fam[fam.join(fam.index_of(G), fam.index_of(H))];
  }

  SubsetMask divisor(Structure const& s, Filter const& F, Filter const& H) {
    if (!H.is_proper()) {
      throw Error(ErrorKind::improper_h, "divisor of the whole carrier");
    }
    return omega(s, F, H.mask().complement());
  }

  Filter sigma(Structure const& s, Filter const& F) {
    auto const   n    = static_cast<Elem>(s.size());
    Filter const unit = trivial_filter(s);
    SubsetMask   out(n);
    for (Elem a = 0; a < n; ++a) {
      if (!filter_join(s, coannulet(s, unit, a), F).is_proper()) {
        out.insert(a);
      }
    }
    return Filter(out);
  }

  SubsetMask sigma_ideal(Structure const& s, Filter const& F) {
    auto const   n    = static_cast<Elem>(s.size());
    Filter const unit = trivial_filter(s);
    SubsetMask   out(n);
    for (Elem a = 0; a < n; ++a) {
      Filter const perp2 = coannihilator(s, unit, coannulet(s, unit, a).mask());
      if (!filter_join(s, perp2, F).is_proper()) {
        out.insert(a);
      }
    }
    return out;
  }

  SubsetMask canonical_witness(Structure const& s, Filter const& F,
                               Filter const& H) {
    auto const n = static_cast<Elem>(s.size());
    SubsetMask out(n);
    for (Elem x = 0; x < n; ++x) {
      if (coannulet(s, F, x).subset_of(H)) {
        out.insert(x);
      }
    }
    return out;
  }

}  // namespace rlat
