#include "homog/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "homog/errors.hpp"

namespace homog {

LatticeFamily family_from_string(const std::string& name) {
  if (name == "primitive") return LatticeFamily::primitive;
  if (name == "gyroid") return LatticeFamily::gyroid;
  if (name == "diamond") return LatticeFamily::diamond;
  if (name == "iwp") return LatticeFamily::iwp;
  if (name == "bcc") return LatticeFamily::bcc;
  throw std::invalid_argument("unknown lattice family: " + name);
}

std::string to_string(LatticeFamily family) {
  switch (family) {
    case LatticeFamily::primitive: return "primitive";
    case LatticeFamily::gyroid: return "gyroid";
    case LatticeFamily::diamond: return "diamond";
    case LatticeFamily::iwp: return "iwp";
    case LatticeFamily::bcc: return "bcc";
  }
  throw std::invalid_argument("unknown lattice family enum value");
}

void LatticeSpec::validate() const {
  if (resolution < 4) throw std::invalid_argument("lattice resolution must be >= 4");
  if (!(relative_density > 0.01 && relative_density < 0.99))
    throw std::invalid_argument("relative density must lie in (0.01, 0.99)");
  for (int c : cells)
    if (c < 1) throw std::invalid_argument("cell counts must be positive");
}

std::vector<double> tpms_level_set(LatticeFamily family, int resolution) {
  if (resolution < 1) throw std::invalid_argument("resolution must be positive");
  const std::size_t res = static_cast<std::size_t>(resolution);
  std::vector<double> coord(res);
  for (std::size_t i = 0; i < res; ++i)
    coord[i] = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(res);

  std::vector<double> field(res * res * res);
  std::size_t n = 0;
  for (std::size_t ix = 0; ix < res; ++ix) {
    const double x = coord[ix];
    for (std::size_t iy = 0; iy < res; ++iy) {
      const double y = coord[iy];
      for (std::size_t iz = 0; iz < res; ++iz, ++n) {
        const double z = coord[iz];
        double phi = 0.0;
        switch (family) {
          case LatticeFamily::primitive:
            phi = std::cos(x) + std::cos(y) + std::cos(z);
            break;
          case LatticeFamily::gyroid:
            phi = std::sin(x) * std::cos(y) + std::sin(y) * std::cos(z) +
                  std::sin(z) * std::cos(x);
            break;
          case LatticeFamily::diamond:
            phi = std::sin(x) * std::sin(y) * std::sin(z) +
                  std::sin(x) * std::cos(y) * std::cos(z) +
                  std::cos(x) * std::sin(y) * std::cos(z) +
                  std::cos(x) * std::cos(y) * std::sin(z);
            break;
          case LatticeFamily::iwp:
            phi = 2.0 * (std::cos(x) * std::cos(y) + std::cos(y) * std::cos(z) +
                         std::cos(z) * std::cos(x)) -
                  (std::cos(2.0 * x) + std::cos(2.0 * y) + std::cos(2.0 * z));
            break;
          case LatticeFamily::bcc:
            throw std::invalid_argument("bcc is not a level-set family");
        }
        field[n] = phi;
      }
    }
  }
  return field;
}

std::vector<double> bcc_strut_distance(int resolution) {
  if (resolution < 1) throw std::invalid_argument("resolution must be positive");
  const std::size_t res = static_cast<std::size_t>(resolution);

  // Strut segments run from every cell corner to the cell center; neighbor
  // cells contribute the periodic images that can reach into this cell.
  struct Segment {
    double ax, ay, az, dx, dy, dz, inv_len2;
  };
  std::vector<Segment> segments;
  segments.reserve(27 * 8);
  for (int ox = -1; ox <= 1; ++ox)
    for (int oy = -1; oy <= 1; ++oy)
      for (int oz = -1; oz <= 1; ++oz)
        for (int cx = 0; cx <= 1; ++cx)
          for (int cy = 0; cy <= 1; ++cy)
            for (int cz = 0; cz <= 1; ++cz) {
              Segment s;
              s.ax = ox + cx;
              s.ay = oy + cy;
              s.az = oz + cz;
              s.dx = ox + 0.5 - s.ax;
              s.dy = oy + 0.5 - s.ay;
              s.dz = oz + 0.5 - s.az;
              s.inv_len2 = 1.0 / (s.dx * s.dx + s.dy * s.dy + s.dz * s.dz);
              segments.push_back(s);
            }

  std::vector<double> field(res * res * res);
  std::size_t n = 0;
  for (std::size_t ix = 0; ix < res; ++ix) {
    const double px = (static_cast<double>(ix) + 0.5) / static_cast<double>(res);
    for (std::size_t iy = 0; iy < res; ++iy) {
      const double py = (static_cast<double>(iy) + 0.5) / static_cast<double>(res);
      for (std::size_t iz = 0; iz < res; ++iz, ++n) {
        const double pz = (static_cast<double>(iz) + 0.5) / static_cast<double>(res);
        double best = std::numeric_limits<double>::infinity();
        for (const Segment& s : segments) {
          const double rx = px - s.ax, ry = py - s.ay, rz = pz - s.az;
          double t = (rx * s.dx + ry * s.dy + rz * s.dz) * s.inv_len2;
          t = std::clamp(t, 0.0, 1.0);
          const double ex = rx - t * s.dx, ey = ry - t * s.dy, ez = rz - t * s.dz;
          const double d2 = ex * ex + ey * ey + ez * ez;
          if (d2 < best) best = d2;
        }
        field[n] = std::sqrt(best);
      }
    }
  }
  return field;
}

double density_threshold(const std::vector<double>& field, double target) {
  if (field.empty()) throw std::invalid_argument("empty field");
  std::vector<double> sorted(field);
  std::sort(sorted.begin(), sorted.end());
  const double count = static_cast<double>(sorted.size());
  auto fraction = [&](double t) {
    return static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), t) -
                               sorted.begin()) / count;
  };

  double lo = sorted.front(), hi = sorted.back();
  for (int it = 0; it < 60 && hi - lo >= 1e-9; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (fraction(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  const double flo = fraction(lo), fhi = fraction(hi);
  const double t = std::abs(flo - target) <= std::abs(fhi - target) ? lo : hi;
  const double achieved = fraction(t);
  if (std::abs(achieved - target) > 0.005)
    throw generation_error("density unattainable: closest achievable fraction " +
                           std::to_string(achieved) + " vs target " + std::to_string(target));
  return t;
}

namespace {

// Threshold one cell's field and tile the resulting pattern over all cells.
VoxelGrid tile_thresholded(const std::vector<double>& cell_field, double threshold,
                           int resolution, const std::array<int, 3>& cells) {
  const std::size_t res = static_cast<std::size_t>(resolution);
  std::vector<std::uint8_t> cell(res * res * res);
  for (std::size_t i = 0; i < cell.size(); ++i)
    cell[i] = cell_field[i] <= threshold ? 1 : 0;

  const std::size_t cx = static_cast<std::size_t>(cells[0]);
  const std::size_t cy = static_cast<std::size_t>(cells[1]);
  const std::size_t cz = static_cast<std::size_t>(cells[2]);
  VoxelGrid grid(cx * res, cy * res, cz * res);
  for (std::size_t ix = 0; ix < grid.nx; ++ix) {
    const std::size_t lx = ix % res;
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      const std::size_t ly = iy % res;
      const std::uint8_t* src = &cell[(lx * res + ly) * res];
      std::uint8_t* dst = &grid.data[(ix * grid.ny + iy) * grid.nz];
      for (std::size_t iz = 0; iz < grid.nz; ++iz) dst[iz] = src[iz % res];
    }
  }
  return grid;
}

}  // namespace

VoxelGrid generate_tpms(const LatticeSpec& spec) {
  spec.validate();
  if (spec.family == LatticeFamily::bcc)
    throw std::invalid_argument("bcc requires generate_bcc, not generate_tpms");

  std::vector<double> field = tpms_level_set(spec.family, spec.resolution);
  if (spec.sheet)
    for (double& v : field) v = std::abs(v);
  const double t = density_threshold(field, spec.relative_density);
  return tile_thresholded(field, t, spec.resolution, spec.cells);
}

VoxelGrid generate_bcc(const LatticeSpec& spec) {
  spec.validate();
  if (spec.family != LatticeFamily::bcc)
    throw std::invalid_argument("generate_bcc requires the bcc family");

  const std::vector<double> field = bcc_strut_distance(spec.resolution);
  const double r = density_threshold(field, spec.relative_density);
  return tile_thresholded(field, r, spec.resolution, spec.cells);
}

VoxelGrid add_skins(const VoxelGrid& grid, int layers_bottom, int layers_top,
                    std::uint8_t material_id) {
  if (layers_bottom < 0 || layers_top < 0)
    throw std::invalid_argument("skin layer counts must be nonnegative");
  if (material_id < 1) throw std::invalid_argument("skin material ID must be >= 1");

  const std::size_t lb = static_cast<std::size_t>(layers_bottom);
  const std::size_t lt = static_cast<std::size_t>(layers_top);
  VoxelGrid out(grid.nx, grid.ny, grid.nz + lb + lt);
  for (std::size_t ix = 0; ix < grid.nx; ++ix)
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      std::uint8_t* col = &out.data[(ix * out.ny + iy) * out.nz];
      std::fill(col, col + lb, material_id);
      const std::uint8_t* src = &grid.data[(ix * grid.ny + iy) * grid.nz];
      std::copy(src, src + grid.nz, col + lb);
      std::fill(col + lb + grid.nz, col + out.nz, material_id);
    }
  return out;
}

}  // namespace homog
