#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <ostream>
#include <vector>

#include "phkit/quadric_forms.hpp"
#include "phkit/quadric_surface.hpp"

namespace phkit {

inline constexpr std::size_t kMaxGridPoints = std::size_t{1} << 24;

struct GridSpec {
  Vec3 min = Vec3::Constant(-3.0);
  Vec3 max = Vec3::Constant(3.0);
  std::array<int, 3> resolution{64, 64, 64};

  /// Throws Error(InvalidInput) for min >= max or resolution < 2, and
  /// Error(GridOverflow) above kMaxGridPoints nodes.
  void validate() const;
  std::size_t point_count() const;
  Vec3 spacing() const;
  Vec3 node(int i, int j, int k) const;
};

/// Values on the grid nodes, x-major: index ((i * ny) + j) * nz + k.
struct ScalarField {
  GridSpec grid;
  std::vector<double> values;
  double level = 0.0;  // default level for extraction

  std::size_t index(int i, int j, int k) const;
  Vec3 point(std::size_t index) const;
  double at(int i, int j, int k) const { return values[index(i, j, k)]; }
};

using FieldFunction = std::function<double(const Vec3&)>;

/// Evaluates f on every node; slabs of constant x run in parallel.
ScalarField sample_scalar_field(const FieldFunction& f, const GridSpec& grid);
ScalarField sample_scalar_field(const QuadraticSurface& s, const GridSpec& grid);
/// f = v^T A v; `level` is stored on the field.
ScalarField sample_scalar_field(const DetForm& form, double level, const GridSpec& grid);

/// One point per grid edge whose endpoints straddle `level` (an endpoint equal to
/// the level counts as above), placed by linear interpolation. Node-then-axis order.
std::vector<Vec3> extract_isosurface_points(const ScalarField& field, double level);

void write_field_csv(std::ostream& out, const ScalarField& field);
void write_points_csv(std::ostream& out, const std::vector<Vec3>& points);

}  // namespace phkit
