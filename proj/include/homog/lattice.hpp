#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "homog/voxel_grid.hpp"

namespace homog {

enum class LatticeFamily { primitive, gyroid, diamond, iwp, bcc };

LatticeFamily family_from_string(const std::string& name);
std::string to_string(LatticeFamily family);

// One repeating cell is sampled at voxel centers and thresholded to the target
// solid fraction; the cell pattern tiles exactly across the requested cell
// counts, so density and periodicity are identical in every cell.
struct LatticeSpec {
  LatticeFamily family = LatticeFamily::primitive;
  std::array<int, 3> cells = {1, 1, 1};
  int resolution = 0;          // voxels per cell edge, >= 4
  double relative_density = 0.0;  // target solid fraction, in (0.01, 0.99)
  bool sheet = true;           // sheet keeps |phi| <= t, network keeps phi <= t

  void validate() const;  // throws std::invalid_argument
};

VoxelGrid generate_tpms(const LatticeSpec& spec);
VoxelGrid generate_bcc(const LatticeSpec& spec);

// Appends fully solid z-layers below and above; interior voxels are untouched.
VoxelGrid add_skins(const VoxelGrid& grid, int layers_bottom, int layers_top,
                    std::uint8_t material_id = 1);

// Building blocks, exposed for direct testing.
//
// Level-set / distance field over a single cell at voxel centers
// X = 2*pi*(i + 0.5)/res, in VoxelGrid storage order.
std::vector<double> tpms_level_set(LatticeFamily family, int resolution);
// Distance from each voxel center to the nearest corner-to-center strut
// segment, periodic neighbor cells included, in cell-edge units.
std::vector<double> bcc_strut_distance(int resolution);
// Bisection for a threshold t with fraction(field <= t) within 0.005 of
// target: 60 iterations or interval width < 1e-9, whichever first. Throws
// generation_error when no threshold lands inside the tolerance.
double density_threshold(const std::vector<double>& field, double target);

}  // namespace homog
