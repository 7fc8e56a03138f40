#pragma once

#include <stdexcept>
#include <string>

namespace qlat {

/// Base class for all qlattice errors.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

#define QLAT_DEFINE_ERROR(Name)                                 \
  class Name : public error {                                   \
  public:                                                       \
    explicit Name(const std::string& what) : error(what) {}     \
  }

QLAT_DEFINE_ERROR(unsupported_field);
QLAT_DEFINE_ERROR(division_by_zero);
QLAT_DEFINE_ERROR(domain_error);
QLAT_DEFINE_ERROR(too_large);
QLAT_DEFINE_ERROR(mismatched_ambient);
QLAT_DEFINE_ERROR(mixed_levels);
QLAT_DEFINE_ERROR(bad_level);
QLAT_DEFINE_ERROR(not_comparable);
QLAT_DEFINE_ERROR(lattice_mismatch);
QLAT_DEFINE_ERROR(not_member);
QLAT_DEFINE_ERROR(level_violation);
QLAT_DEFINE_ERROR(precondition_ratio);
QLAT_DEFINE_ERROR(matching_failure);
QLAT_DEFINE_ERROR(bad_structure);
QLAT_DEFINE_ERROR(not_y_free);
QLAT_DEFINE_ERROR(not_two_level);
QLAT_DEFINE_ERROR(bad_dims);
QLAT_DEFINE_ERROR(bad_pattern);
QLAT_DEFINE_ERROR(io_error);

#undef QLAT_DEFINE_ERROR

}  // namespace qlat
