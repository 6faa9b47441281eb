#ifndef RLAT_TESTS_SUPPORT_HPP_
#define RLAT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rlat/filters.hpp"
#include "rlat/io.hpp"
#include "rlat/modelgen.hpp"
#include "rlat/structure.hpp"

namespace rlat::test {

  inline std::string fixture_path(std::string const& name) {
    return std::string(RLAT_FIXTURE_DIR) + "/" + name;
  }

  inline Structure const& a6() {
    static Structure const s = load_structure(fixture_path("a6.json"));
    return s;
  }
  inline Structure const& chain2() {
    static Structure const s = load_structure(fixture_path("chain2.json"));
    return s;
  }
  inline Structure const& godel3() {
    static Structure const s = load_structure(fixture_path("chain3-godel.json"));
    return s;
  }
  inline Structure const& luk3() {
    static Structure const s = load_structure(fixture_path("chain3-luk.json"));
    return s;
  }

  inline SubsetMask set(Structure const& s, std::string_view list) {
    return parse_elements(s, list);
  }
  inline Filter filter(Structure const& s, std::string_view list) {
    return Filter(parse_elements(s, list));
  }

  // Every residuated lattice of size 2..max_size up to isomorphism.
  inline std::vector<Structure> const& census(std::size_t max_size = 5) {
    static std::vector<std::vector<Structure>> cache(kMaxSearchSize + 1);
    static std::vector<bool>                   done(kMaxSearchSize + 1, false);
    if (!done[max_size]) {
      for (std::size_t n = kMinSearchSize; n <= max_size; ++n) {
        SearchSpec spec;
        spec.size = n;
        for (auto& r : enumerate_residuated(spec)) {
          cache[max_size].push_back(std::move(r.structure));
        }
      }
      done[max_size] = true;
    }
    return cache[max_size];
  }

  // The first census structure whose normality index w.r.t. {1} exceeds 1.
  inline Structure const& non_normal() {
    static Structure const s = [] {
      SearchSpec spec;
      spec.size = 5;
      for (auto& r : enumerate_residuated(spec)) {
        if (r.stats.normality_index > 1) {
          return r.structure;
        }
      }
      return Structure{};
    }();
    return s;
  }

  // Direct product with componentwise operations; element (x, y) has index
  // x * |B| + y.
  inline Structure product(Structure const& a, Structure const& b) {
    std::size_t const na = a.size(), nb = b.size(), n = na * nb;
    Structure         p;
    p.name = a.name + "x" + b.name;
    for (std::size_t i = 0; i < n; ++i) {
      p.names.push_back(a.names[i / nb] + b.names[i % nb]);
    }
    auto lift = [&](OpTable const& s, OpTable const& t) {
      OpTable out(n);
      for (Elem i = 0; i < n; ++i) {
        for (Elem j = 0; j < n; ++j) {
          out.at(i, j) = static_cast<Elem>(s(i / nb, j / nb) * nb + t(i % nb, j % nb));
        }
      }
      return out;
    };
    p.join     = lift(a.join, b.join);
    p.meet     = lift(a.meet, b.meet);
    p.times    = lift(a.times, b.times);
    p.residuum = lift(a.residuum, b.residuum);
    p.bot      = static_cast<Elem>(a.bot * nb + b.bot);
    p.top      = static_cast<Elem>(a.top * nb + b.top);
    return p;
  }

  // Relabels s by perm (old index -> new index), names included.
  inline Structure permuted(Structure const& s, std::vector<Elem> const& perm) {
    std::size_t const n = s.size();
    Structure         out;
    out.name = s.name;
    out.names.resize(n);
    auto move = [&](OpTable const& t) {
      OpTable r(n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          r.at(perm[x], perm[y]) = perm[t(x, y)];
        }
      }
      return r;
    };
    for (Elem x = 0; x < n; ++x) {
      out.names[perm[x]] = s.names[x];
    }
    out.join     = move(s.join);
    out.meet     = move(s.meet);
    out.times    = move(s.times);
    out.residuum = move(s.residuum);
    out.bot      = perm[s.bot];
    out.top      = perm[s.top];
    return out;
  }

  // Small deterministic generator for property tests.
  class Gen {
   public:
    explicit Gen(std::uint64_t seed) : _rng(seed) {}

    std::size_t below(std::size_t k) {
      return std::uniform_int_distribution<std::size_t>(0, k - 1)(_rng);
    }
    bool coin() {
      return below(2) == 1;
    }
    template <typename T>
    T const& pick(std::vector<T> const& xs) {
      return xs[below(xs.size())];
    }
    Elem element(Structure const& s) {
      return static_cast<Elem>(below(s.size()));
    }
    SubsetMask subset(Structure const& s) {
      std::uint64_t const bits = _rng() & SubsetMask::universe_bits(s.size());
      return SubsetMask(s.size(), bits);
    }
    SubsetMask nonempty_subset(Structure const& s) {
      SubsetMask m = subset(s);
      return m.empty() ? SubsetMask::single(s.size(), element(s)) : m;
    }
    std::vector<Elem> permutation(std::size_t n) {
      std::vector<Elem> p(n);
      for (Elem i = 0; i < n; ++i) {
        p[i] = i;
      }
      std::shuffle(p.begin(), p.end(), _rng);
      return p;
    }
    // A census structure, or the product of two small ones.
    Structure structure() {
      auto const& c = census(4);
      if (below(3) == 0) {
        return product(pick(c), pick(c));
      }
      return pick(census(5));
    }

   private:
    std::mt19937_64 _rng;
  };

}  // namespace rlat::test

#endif  // RLAT_TESTS_SUPPORT_HPP_
