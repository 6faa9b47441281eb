#ifndef RLAT_SRC_COMBINATORICS_HPP_
#define RLAT_SRC_COMBINATORICS_HPP_

#include <cstddef>
#include <utility>
#include <vector>

namespace rlat::detail {

  // Visits every k-subset {v_0 < ... < v_{k-1}} of [0, vertices) whose
  // members are pairwise adjacent, in lexicographic order. The visitor
  // returns false to stop; the function returns false if it was stopped.
  template <typename Adjacent, typename Visit>
  bool for_each_clique(std::size_t vertices, std::size_t k,
                       Adjacent&& adjacent, Visit&& visit) {
    std::vector<std::size_t> chosen;
    chosen.reserve(k);
    auto rec = [&](auto&& self, std::size_t next) -> bool {
      if (chosen.size() == k) {
        return visit(static_cast<std::vector<std::size_t> const&>(chosen));
      }
      for (std::size_t v = next; v + (k - chosen.size()) <= vertices; ++v) {
        bool ok = true;
        for (std::size_t u : chosen) {
          if (!adjacent(u, v)) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          continue;
        }
        chosen.push_back(v);
        if (!self(self, v + 1)) {
          return false;
        }
        chosen.pop_back();
      }
      return true;
    };
    return rec(rec, 0);
  }

  template <typename Visit>
  bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
    return for_each_clique(
        n, k, [](std::size_t, std::size_t) { return true; },
        std::forward<Visit>(visit));
  }

  // Non-decreasing sequences of length k over [0, n).
  template <typename Visit>
  bool for_each_multiset(std::size_t n, std::size_t k, Visit&& visit) {
    std::vector<std::size_t> chosen;
    chosen.reserve(k);
    auto rec = [&](auto&& self, std::size_t from) -> bool {
      if (chosen.size() == k) {
        return visit(static_cast<std::vector<std::size_t> const&>(chosen));
      }
      for (std::size_t v = from; v < n; ++v) {
        chosen.push_back(v);
        if (!self(self, v)) {
          return false;
        }
        chosen.pop_back();
      }
      return true;
    };
    return rec(rec, 0);
  }

}  // namespace rlat::detail

#endif  // RLAT_SRC_COMBINATORICS_HPP_
