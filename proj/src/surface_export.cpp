#include "phkit/surface_export.hpp"

#include <algorithm>
#include <cstdio>
#include <thread>

#include "phkit/errors.hpp"

namespace phkit {

namespace {

void write_number(std::ostream& out, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out << buf;
}

}  // namespace

void GridSpec::validate() const {
  for (int a = 0; a < 3; ++a) {
    if (!(min[a] < max[a]) || !std::isfinite(min[a]) || !std::isfinite(max[a]))
      throw Error(ErrorKind::InvalidInput, "grid needs finite min < max on every axis");
    if (resolution[static_cast<std::size_t>(a)] < 2)
      throw Error(ErrorKind::InvalidInput, "grid resolution must be at least 2");
  }
  std::size_t n = 1;
  for (int r : resolution) {
    if (static_cast<std::size_t>(r) > kMaxGridPoints / n)
      throw Error(ErrorKind::GridOverflow, "grid exceeds 2^24 points");
    n *= static_cast<std::size_t>(r);
  }
}

std::size_t GridSpec::point_count() const {
  return static_cast<std::size_t>(resolution[0]) * static_cast<std::size_t>(resolution[1]) *
         static_cast<std::size_t>(resolution[2]);
}

Vec3 GridSpec::spacing() const {
  Vec3 h;
  for (int a = 0; a < 3; ++a) h[a] = (max[a] - min[a]) / (resolution[static_cast<std::size_t>(a)] - 1);
  return h;
}

Vec3 GridSpec::node(int i, int j, int k) const {
  const Vec3 h = spacing();
  return {min[0] + i * h[0], min[1] + j * h[1], min[2] + k * h[2]};
}

std::size_t ScalarField::index(int i, int j, int k) const {
  return (static_cast<std::size_t>(i) * static_cast<std::size_t>(grid.resolution[1]) +
          static_cast<std::size_t>(j)) *
             static_cast<std::size_t>(grid.resolution[2]) +
         static_cast<std::size_t>(k);
}

Vec3 ScalarField::point(std::size_t idx) const {
  const auto ny = static_cast<std::size_t>(grid.resolution[1]);
  const auto nz = static_cast<std::size_t>(grid.resolution[2]);
  const auto k = static_cast<int>(idx % nz);
  const auto j = static_cast<int>((idx / nz) % ny);
  const auto i = static_cast<int>(idx / (ny * nz));
  return grid.node(i, j, k);
}

ScalarField sample_scalar_field(const FieldFunction& f, const GridSpec& grid) {
  grid.validate();
  ScalarField field;
  field.grid = grid;
  field.values.assign(grid.point_count(), 0.0);

  const int nx = grid.resolution[0], ny = grid.resolution[1], nz = grid.resolution[2];
  auto slab = [&](int i) {
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < nz; ++k) field.values[field.index(i, j, k)] = f(grid.node(i, j, k));
  };
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, nx);
  if (workers == 1 || grid.point_count() < 4096) {
    for (int i = 0; i < nx; ++i) slab(i);
    return field;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < nx; i += workers) slab(i);
    });
  for (auto& t : pool) t.join();
  return field;
}

ScalarField sample_scalar_field(const QuadraticSurface& s, const GridSpec& grid) {
  return sample_scalar_field([&s](const Vec3& v) { return s.evaluate(v); }, grid);
}

ScalarField sample_scalar_field(const DetForm& form, double level, const GridSpec& grid) {
  ScalarField field = sample_scalar_field([&form](const Vec3& v) { return form.evaluate(v); }, grid);
  field.level = level;
  return field;
}

std::vector<Vec3> extract_isosurface_points(const ScalarField& field, double level) {
  const auto& res = field.grid.resolution;
  std::vector<Vec3> points;
  constexpr std::array<std::array<int, 3>, 3> steps{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int i = 0; i < res[0]; ++i) {
    for (int j = 0; j < res[1]; ++j) {
      for (int k = 0; k < res[2]; ++k) {
        const double fa = field.at(i, j, k);
        const bool above = fa >= level;
        for (const auto& s : steps) {
          const int i2 = i + s[0], j2 = j + s[1], k2 = k + s[2];
          if (i2 >= res[0] || j2 >= res[1] || k2 >= res[2]) continue;
          const double fb = field.at(i2, j2, k2);
          if ((fb >= level) == above) continue;
          const double t = (level - fa) / (fb - fa);
          const Vec3 a = field.grid.node(i, j, k);
          const Vec3 b = field.grid.node(i2, j2, k2);
          points.push_back(a + t * (b - a));
        }
      }
    }
  }
  return points;
}

void write_field_csv(std::ostream& out, const ScalarField& field) {
  out << "x,y,z,f\n";
  for (std::size_t n = 0; n < field.values.size(); ++n) {
    const Vec3 p = field.point(n);
    for (int a = 0; a < 3; ++a) {
      write_number(out, p[a]);
      out << ',';
    }
    write_number(out, field.values[n]);
    out << '\n';
  }
}

void write_points_csv(std::ostream& out, const std::vector<Vec3>& points) {
  out << "x,y,z\n";
  for (const Vec3& p : points) {
    write_number(out, p[0]);
    out << ',';
    write_number(out, p[1]);
    out << ',';
    write_number(out, p[2]);
    out << '\n';
  }
}

}  // namespace phkit
