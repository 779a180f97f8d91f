#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncat {

  enum class ErrorKind {
    // graph validation
    section_violation,
    globularity_violation,
    zero_type_violation,
    index_out_of_range,
    bad_tail_size,
    // queries
    dimension_mismatch,
    bad_level,
    dimension_too_high,
    // composition
    not_composable,
    not_defined,
    no_table_at_level,
    missing_tables,
    units_required,
    // enumeration / search
    limit_exceeded,
    level_unavailable,
    space_too_large,
    not_skeletal,
    // morphisms
    unsupported,
    // cobordism
    boundary_mismatch,
    // io
    syntax_error,
    unknown_version,
    dangling_reference,
    schema_error,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

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

}  // namespace ncat
