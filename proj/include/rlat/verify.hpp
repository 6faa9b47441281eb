#ifndef RLAT_VERIFY_HPP_
#define RLAT_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlat/structure.hpp"

namespace rlat {

  enum class Battery { all, structure, filters, spectra, coann, omega, normality };

  // Throws Error{parse} for an unknown group name.
  Battery parse_battery(std::string_view name);
  std::string_view to_string(Battery b);

  struct CheckResult {
    std::string                group;
    std::string                name;
    std::size_t                cases    = 0;
    std::size_t                failures = 0;
    std::optional<std::string> witness;  // first failing case

    bool passed() const noexcept {
      return failures == 0;
    }
  };

  struct VerificationReport {
    std::string              structure;
    std::vector<CheckResult> checks;
    // Evaluated alternatives that are not claimed to hold; informational.
    std::vector<std::string> notes;

    std::size_t failures() const noexcept;
    bool        passed() const noexcept {
      return failures() == 0;
    }
  };

  // Runs every invariant of the selected group(s) over all filters, elements
  // and, for carriers up to kFullSubsetScan elements, all subsets. Larger
  // carriers use subsets of at most two elements plus all filters.
  VerificationReport verify(Structure const& s, Battery battery = Battery::all);

  inline constexpr std::size_t kFullSubsetScan = 6;

}  // namespace rlat

#endif  // RLAT_VERIFY_HPP_
