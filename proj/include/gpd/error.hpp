#pragma once

#include <stdexcept>
#include <string>

namespace gpd {

// Error codes for operation-contract violations.  Axiom checking on whole
// structures does not throw; it returns reports (see ValidationReport).
enum class errc {
  unknown_object,
  unknown_arrow,
  not_surjective,
  invalid_action,
  boundary_mismatch,
  middle_mismatch,
  endpoint_mismatch,
  different_fibers,
  not_principal,
  not_left_principal,
  not_a_section,
  isotropy_too_large,
  bound_exceeded,
  not_inverted,
  not_a_path,
  mismatch,
  not_subgraph,
  arc_cover_undefined,
  cocycle_failure,
  parse_error,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void require(bool cond, errc c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace gpd
