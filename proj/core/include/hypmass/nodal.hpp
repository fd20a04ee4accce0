#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypmass/collar_field.hpp"

namespace hypmass {

enum class ComponentSign { positive, negative, ambient, unspecified };

[[nodiscard]] const char* to_string(ComponentSign sign) noexcept;

/// A complementary component of the nodal set; `ambient` marks the component F
/// that contains the separating curve.
struct NodalComponent {
  ComponentSign sign = ComponentSign::unspecified;
  long chi = 0;
};

struct NodalGraph {
  long vertices = 0;
  long edges = 0;

  [[nodiscard]] long chi() const noexcept { return vertices - edges; }
};

/// Cell decomposition of a surface by the nodal set of a function.
struct NodalDecomposition {
  NodalGraph graph;
  std::vector<NodalComponent> components;
  long surface_chi = 1;
  /// Hypothesis flags of the crossing argument; absent when not asserted.
  std::optional<bool> punctures_in_t1;
  std::optional<bool> essential_nodal_set;
};

struct EulerSum {
  long sum = 0;
  long surface_chi = 0;

  [[nodiscard]] bool consistent() const noexcept { return sum == surface_chi; }
};

/// chi(F) + chi(C+) + chi(C-) + chi(Z). Throws DomainError on an unsigned
/// component.
[[nodiscard]] EulerSum euler_sum(const NodalDecomposition& decomp);

enum class CrossingVerdict { crossing_forced, consistent };

[[nodiscard]] const char* to_string(CrossingVerdict verdict) noexcept;

/// crossing_forced when the hypotheses hold (punctures in T1, essential nodal
/// set, every signed domain with chi < 0, chi(F) <= 0, chi(Z) <= 0) and the Euler
/// sum cannot match the surface. Throws DomainError when a hypothesis flag is
/// missing or there is no signed domain.
[[nodiscard]] CrossingVerdict crossing_verdict(const NodalDecomposition& decomp);

/// Decomposition of the disjoint union of two surfaces.
[[nodiscard]] NodalDecomposition disjoint_union(const NodalDecomposition& a,
                                                const NodalDecomposition& b);

/// Plain-text form:
///   surface_chi N
///   graph V E
///   component F|+|-|? chi
///   hypothesis punctures_in_t1|essential_nodal_set true|false
/// Lines starting with '#' are ignored.
void write_decomposition(std::ostream& out, const NodalDecomposition& decomp);
[[nodiscard]] NodalDecomposition read_decomposition(std::istream& in);

/// Signs of the field along the parallel curve r = const.
struct SignTrace {
  double r = 0.0;
  std::vector<int> signs;
  bool constant_sign = false;
  double zero_mode_abs = 0.0;    ///< |[f]_0|(r)
  double first_mode_sup = 0.0;   ///< sup over theta of |[f]_1|(r, theta)
  /// |[f]_0|(r) > sup |[f]_1|(r, .), which forces a constant sign.
  bool dominant_zero_mode = false;
};

[[nodiscard]] std::vector<SignTrace> sign_scan(const CollarField& field,
                                               const std::vector<double>& r_values);

/// Nodal set of a collar field on the open cylinder (-L_1, L_1) x S^1.
///
/// Each grid cell is split into four triangles around its centre (value = mean
/// of the corners); the zero set is linear on each triangle. Euler
/// characteristics are those of the open cylinder (surface_chi = 0): a nodal
/// arc running between the two boundary circles counts -1, a closed nodal loop 0.
/// Exact zeros take the sign of the first nonzero neighbour; a zero plateau
/// throws DomainError.
[[nodiscard]] NodalDecomposition nodal_graph_extract(const CollarField& field);

/// Same extraction on a raw periodic-in-theta grid (values[i * n_theta + k]).
[[nodiscard]] NodalDecomposition nodal_graph_extract(const std::vector<double>& values,
                                                     std::size_t n_r, std::size_t n_theta);

}  // namespace hypmass
