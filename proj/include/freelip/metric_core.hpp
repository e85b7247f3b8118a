#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace freelip {

// Shared numeric tolerances. Every downstream check inherits these.
inline constexpr double kMetricTol = 1e-9;       // triangle-inequality slack
inline constexpr double kMinSeparation = 1e-12;  // distinct points must be at least this far apart

/// A finite metric space with a distinguished base point.
///
/// Point identifiers are opaque strings; indices are stable by insertion
/// order. Distances are stored as a dense symmetric matrix. Instances are
/// treated as immutable after construction; all operations on them are pure
/// functions and safe for concurrent use on shared instances.
struct PointedMetricSpace {
  std::vector<std::string> names;
  std::size_t base = 0;
  std::vector<double> dist;  // row-major n*n

  PointedMetricSpace() = default;
  PointedMetricSpace(std::vector<std::string> point_names, std::size_t base_index,
                     std::vector<double> full_matrix);

  /// Build from the n*(n-1)/2 upper-triangular entries in row-major order.
  static PointedMetricSpace from_upper(std::vector<std::string> point_names,
                                       std::size_t base_index,
                                       const std::vector<double>& upper);

  std::size_t size() const { return names.size(); }
  double d(std::size_t i, std::size_t j) const { return dist[i * names.size() + j]; }
  std::size_t index_of(const std::string& name) const;  // throws if unknown
};

/// Real values on the points of a space, vanishing at the base.
struct LipFunction {
  std::vector<double> values;
};

/// A finitely supported element of the free space, as coefficients on points.
/// Canonical form stores coefficient 0 at the base (delta_0 = 0).
struct Molecule {
  std::vector<double> coeffs;
};

LipFunction make_lip_function(std::vector<double> values, const PointedMetricSpace& space);
Molecule make_molecule(std::vector<double> coeffs, const PointedMetricSpace& space);
Molecule delta(std::size_t p, const PointedMetricSpace& space);

enum class MetricAxiom { BaseIndex, ZeroDiagonal, Separation, Symmetry, Triangle, NonFinite };

struct MetricViolation {
  MetricAxiom axiom;
  std::size_t p = 0, q = 0, r = 0;  // witnesses; r only used by Triangle
  double detail = 0.0;              // offending value (or triangle excess)
};

struct ValidationReport {
  std::vector<MetricViolation> violations;
  bool pass() const { return violations.empty(); }
};

ValidationReport validate_space(const PointedMetricSpace& space);
std::string describe(const MetricViolation& v, const PointedMetricSpace& space);

/// Throws std::invalid_argument describing the first violation, if any.
void require_valid(const PointedMetricSpace& space);

/// Smallest Lipschitz constant: max over pairs x != y of |f(x)-f(y)| / d(x,y).
double lip_norm(const LipFunction& f, const PointedMetricSpace& space);

/// Pairing <f, mu> = sum over points of coeffs(x) * f(x); the base coefficient
/// contributes nothing regardless of its stored value.
double molecule_eval(const LipFunction& f, const Molecule& mu, const PointedMetricSpace& space);

}  // namespace freelip
