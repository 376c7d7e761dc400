#ifndef GPD_ERRORS_HPP
#define GPD_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpd {

enum class errc {
  missing_composite,
  non_associative,
  no_unit,
  no_inverse,
  ill_typed_composite,
  empty_restriction,
  not_a_group,
  invalid_action,
  domain_mismatch,
  codomain_mismatch,
  mismatched_inputs,
  wiring_mismatch,
  not_an_equivalence,
  base_mismatch,
  mode_mismatch,
  not_composable,
  internal_no_splitting,
  internal_no_lift,
  not_full_mode,
  not_automorphism,
  nontrivial_center,
  not_automorphism_slice,
  not_homomorphism,
  desk_scale_exceeded,
  format_error,
};

std::string_view errc_name(errc c);

// Single exception type; `kind()` carries the machine-readable code that the
// CLI emits on its diagnostics stream.
class groupoid_error : public std::runtime_error {
 public:
  groupoid_error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what),
        kind_(kind) {}

  errc kind() const noexcept { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) {
  throw groupoid_error(kind, what);
}

}  // namespace gpd

#endif
