#pragma once

#include <string_view>

namespace hypmass {

/// Numerical tolerance profile shared by quadrature and ODE integration.
struct Tolerances {
  double quad_abs = 1e-12;
  double quad_rel = 1e-10;
  double ode_abs = 1e-14;
  double ode_rel = 1e-12;
};

/// Named profiles: "default", "strict", "fast". Throws ConfigError otherwise.
[[nodiscard]] Tolerances tolerance_profile(std::string_view name);

/// Profile selected by the HYPMASS_TOLERANCE_PROFILE environment variable,
/// or the default profile when the variable is unset.
[[nodiscard]] Tolerances tolerance_profile_from_env();

}  // namespace hypmass
