#ifndef RLAT_ERROR_HPP_
#define RLAT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rlat {

  enum class ErrorKind {
    malformed_tables,
    not_a_filter,
    empty_argument,
    unknown_filter,
    unknown_member,
    overlap,
    not_join_closed,
    improper_h,
    improper_f,
    bad_n,
    not_minimal_prime,
    search_exhausted,
    size_out_of_range,
    invalid_base_lattice,
    parse,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Single exception type for the library; the kind identifies the contract
  // that was violated.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace rlat

#endif  // RLAT_ERROR_HPP_
