// Acceptance harness: runs the numbered end-to-end criteria from README.md
// and prints one [PASS]/[FAIL] line each. Heavyweight reference cases check
// the engine against frozen validation values for the shipped lattice
// configurations; the rest are closed-form or property checks.
//
// Usage: acceptance [N ...]  (run only the listed criteria)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "homog/assembly.hpp"
#include "homog/dof_map.hpp"
#include "homog/element.hpp"
#include "homog/json_out.hpp"
#include "homog/lattice.hpp"
#include "homog/material.hpp"
#include "homog/plate_homog.hpp"
#include "homog/solver.hpp"
#include "homog/thermal_homog.hpp"
#include "homog/volume_homog.hpp"
#include "homog/voxel_grid.hpp"

namespace {

using namespace homog;

constexpr double kE = 1215.0;
constexpr double kNu = 0.35;
constexpr double kThickness = 10.0;
constexpr double kDensity = 0.15;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  bool ok = true;
  std::ostringstream msg;

  // target within rel_tol, appends "name=value (ref target +-tol%)".
  void within(const std::string& name, double value, double target, double rel_tol) {
    bool hit = std::abs(value - target) <= rel_tol * std::abs(target);
    msg << name << "=" << value << " (ref " << target << " +-" << rel_tol * 100 << "%"
        << (hit ? "" : " MISS") << ") ";
    ok = ok && hit;
  }
  void require(const std::string& name, bool cond) {
    msg << name << (cond ? " ok " : " FAILED ");
    ok = ok && cond;
  }
};

VoxelGrid full_solid(int nx, int ny, int nz) {
  VoxelGrid g(nx, ny, nz);
  for (auto& v : g.data) v = 1;
  return g;
}

VoxelGrid tpms_grid(LatticeFamily family, int res, double density, std::array<int, 3> cells) {
  LatticeSpec spec;
  spec.family = family;
  spec.cells = cells;
  spec.resolution = res;
  spec.relative_density = density;
  spec.sheet = true;
  return generate_tpms(spec);
}

const VoxelGrid& primitive96() {
  static VoxelGrid g = tpms_grid(LatticeFamily::primitive, 96, kDensity, {1, 1, 1});
  return g;
}

const VoxelGrid& gyroid96() {
  static VoxelGrid g = tpms_grid(LatticeFamily::gyroid, 96, kDensity, {1, 1, 1});
  return g;
}

const VoxelGrid& bcc96() {
  LatticeSpec spec;
  spec.family = LatticeFamily::bcc;
  spec.resolution = 96;
  spec.relative_density = kDensity;
  static VoxelGrid g = generate_bcc(spec);
  return g;
}

MaterialField base_material() { return MaterialField::homogeneous(isotropic_elasticity(kE, kNu)); }

SolverOptions opts_with(double tol) {
  SolverOptions o;
  o.tol = tol;
  return o;
}

PlateResult run_plate(const VoxelGrid& grid, const MaterialField& field, double thickness,
                      std::array<int, 3> cells, double tol = 1e-6) {
  return homogenize_plate(grid, field, PlateGeometry{thickness, cells}, opts_with(tol));
}

// 1. Full-solid membrane closed form: A = q h with the plane-stress reduced
// stiffness; the coupling block vanishes.
Outcome criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  const double e = 1.0, nu = 0.3, h = 10.0;
  PlateResult res = run_plate(full_solid(16, 16, 8),
                              MaterialField::homogeneous(isotropic_elasticity(e, nu)), h,
                              {1, 1, 1}, 1e-8);
  const double q00 = e / (1.0 - nu * nu);

  Check c;
  Eigen::Matrix3d a = res.abd.a();
  c.within("A00", a(0, 0), h * q00, 1e-5);
  c.within("A11", a(1, 1), h * q00, 1e-5);
  c.within("A01", a(0, 1), h * nu * q00, 1e-5);
  c.within("A22", a(2, 2), h * e / (2.0 * (1.0 + nu)), 1e-5);
  double b_norm = res.abd.b().cwiseAbs().maxCoeff();
  double a_norm = a.cwiseAbs().maxCoeff();
  c.require("B<=1e-8*A", b_norm <= 1e-8 * a_norm);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require("runtime<10s", wall < 10.0);
  return {c.ok, c.msg.str()};
}

// 2. Full-solid bending: the voxelized moment sum converges to E h^3 / (12
// (1 - nu^2)) from below, monotonically in the layer count.
Outcome criterion_2() {
  auto t0 = std::chrono::steady_clock::now();
  const double e = 1.0, nu = 0.3, h = 10.0;
  const double d_exact = e * h * h * h / 12.0 / (1.0 - nu * nu);
  auto field = MaterialField::homogeneous(isotropic_elasticity(e, nu));

  Check c;
  double prev_err = 1e30;
  for (int nz : {4, 8, 16}) {
    PlateResult res = run_plate(full_solid(8, 8, nz), field, h, {1, 1, 1}, 1e-8);
    double err = std::abs(res.abd.d()(0, 0) - d_exact) / d_exact;
    c.msg << "err(nz=" << nz << ")=" << err << " ";
    c.require("monotone", err < prev_err);
    if (nz == 16) c.require("<=1%", err <= 0.01);
    prev_err = err;
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require("runtime<60s", wall < 60.0);
  return {c.ok, c.msg.str()};
}

// 3. Primitive sheet reference case.
Outcome criterion_3() {
  PlateResult res = run_plate(primitive96(), base_material(), kThickness, {1, 1, 1});
  Check c;
  c.within("A00", res.abd.a()(0, 0), 356.12, 0.01);
  c.within("A01", res.abd.a()(0, 1), 202.24, 0.01);
  c.within("D00", res.abd.d()(0, 0), 2229.51, 0.015);
  c.require("max|B|<=0.5", res.abd.b().cwiseAbs().maxCoeff() <= 0.5);
  return {c.ok, c.msg.str()};
}

// 4. Primitive sheet with two solid skin layers on each face; the skins
// occupy the outer voxel layers of the same plate thickness.
Outcome criterion_4() {
  const VoxelGrid& lattice = primitive96();
  VoxelGrid skinned = add_skins(lattice, 2, 2);
  PlateResult res = run_plate(skinned, base_material(), kThickness, {1, 1, 1});
  PlateResult base = run_plate(lattice, base_material(), kThickness, {1, 1, 1});

  Check c;
  c.within("A00", res.abd.a()(0, 0), 973.08, 0.01);
  c.within("D00", res.abd.d()(0, 0), 16538.85, 0.015);
  double gain_a = res.abd.a()(0, 0) / base.abd.a()(0, 0) - 1.0;
  double gain_d = res.abd.d()(0, 0) / base.abd.d()(0, 0) - 1.0;
  c.msg << "gainA=" << gain_a * 100 << "% gainD=" << gain_d * 100 << "% ";
  c.require("gainA~+170%", gain_a > 1.5 && gain_a < 1.9);
  c.require("gainD~+640%", gain_d > 5.8 && gain_d < 7.0);
  return {c.ok, c.msg.str()};
}

// 5. BCC strut lattice, unskinned and skinned. The widened band reflects the
// geometric sensitivity of thin-strut sampling. Shear dominance A22 > A00 is
// the unskinned signature.
Outcome criterion_5() {
  const VoxelGrid& lattice = bcc96();
  PlateResult res = run_plate(lattice, base_material(), kThickness, {1, 1, 1});

  Check c;
  c.within("A00", res.abd.a()(0, 0), 68.84, 0.10);
  c.within("A22", res.abd.a()(2, 2), 256.47, 0.10);
  c.within("D00", res.abd.d()(0, 0), 625.52, 0.10);
  c.within("D22", res.abd.d()(2, 2), 1674.86, 0.10);
  c.require("A22>A00", res.abd.a()(2, 2) > res.abd.a()(0, 0));

  VoxelGrid skinned = add_skins(lattice, 2, 2);
  PlateResult skin = run_plate(skinned, base_material(), kThickness, {1, 1, 1});
  c.within("skinned A00", skin.abd.a()(0, 0), 667.89, 0.10);
  c.within("skinned D00", skin.abd.d()(0, 0), 14513.15, 0.10);
  return {c.ok, c.msg.str()};
}

// 6. Volume pipeline closed forms: uniform recovery, plane-stress reduction,
// analytic plate block structure.
Outcome criterion_6() {
  Check c;
  ElasticTensor6 cc = isotropic_elasticity(1.0, 0.3);
  auto field = MaterialField::homogeneous(cc);
  VolumeResult vol = homogenize_volume(full_solid(4, 4, 4), field, 1.0, 1.0, 1.0, opts_with(1e-8));
  double err = (vol.c_h.c - cc.c).cwiseAbs().maxCoeff() / cc.c.cwiseAbs().maxCoeff();
  c.require("C_H=C to 1e-6", err <= 1e-6);

  ReducedStiffness3 q = static_condensation(cc);
  c.require("Q00", std::abs(q.q(0, 0) - 1.098901) <= 1e-6);

  AbdMatrix abd = analytic_abd(q, kThickness);
  double dd = (abd.d() - abd.a() * kThickness * kThickness / 12.0).cwiseAbs().maxCoeff();
  c.require("D=A*h^2/12", dd <= 1e-12 * abd.d().cwiseAbs().maxCoeff());
  c.require("B=0", abd.b().cwiseAbs().maxCoeff() == 0.0);
  return {c.ok, c.msg.str()};
}

// 7. Plate vs volume on the gyroid sheet: the plate run resolves the
// truncation-induced orthotropy and the volume run overestimates bending.
Outcome criterion_7() {
  PlateResult plate = run_plate(gyroid96(), base_material(), kThickness, {1, 1, 1});
  auto resolved = PlateGeometry{kThickness, {1, 1, 1}}.resolve(gyroid96());
  VolumeResult vol = homogenize_volume(gyroid96(), base_material(), resolved.dx, resolved.dy,
                                       resolved.dz, opts_with(1e-6));
  AbdMatrix analytic = analytic_abd(static_condensation(vol.c_h), kThickness);

  Check c;
  double ratio = plate.abd.a()(0, 0) / plate.abd.a()(1, 1);
  c.msg << "plate A00=" << plate.abd.a()(0, 0) << " A11=" << plate.abd.a()(1, 1) << " ";
  c.within("anisotropy A00/A11", ratio, 448.68 / 627.66, 0.05);
  double va0 = analytic.a()(0, 0), va1 = analytic.a()(1, 1);
  c.msg << "volume A00=" << va0 << " A11=" << va1 << " ";
  c.require("volume isotropy 0.5%", std::abs(va0 - va1) <= 0.005 * std::abs(va1));
  double factor = analytic.d()(0, 0) / plate.abd.d()(0, 0);
  c.msg << "D-overestimate factor=" << factor << " ";
  c.require("factor in [2.5,4.0]", factor >= 2.5 && factor <= 4.0);
  return {c.ok, c.msg.str()};
}

// 8. Thickness size effect on the gyroid sheet: plate stiffness normalized by
// the volume-derived prediction rises monotonically toward 1.
Outcome criterion_8() {
  auto field = base_material();
  VoxelGrid cell = tpms_grid(LatticeFamily::gyroid, 32, kDensity, {1, 1, 1});
  const double voxel = kThickness / 32.0;
  VolumeResult vol = homogenize_volume(cell, field, voxel, voxel, voxel, opts_with(1e-6));
  ReducedStiffness3 q = static_condensation(vol.c_h);

  Check c;
  std::vector<std::array<double, 6>> ratios;
  for (int nz = 1; nz <= 8; ++nz) {
    VoxelGrid grid = tpms_grid(LatticeFamily::gyroid, 32, kDensity, {1, 1, nz});
    PlateResult plate = run_plate(grid, field, kThickness * nz, {1, 1, nz});
    AbdMatrix analytic = analytic_abd(q, kThickness * nz);
    std::array<double, 6> r{};
    for (int d = 0; d < 3; ++d) {
      r[d] = plate.abd.a()(d, d) / analytic.a()(d, d);
      r[3 + d] = plate.abd.d()(d, d) / analytic.d()(d, d);
    }
    ratios.push_back(r);
  }
  c.msg << "Nz=1: A00n=" << ratios[0][0] << " A11n=" << ratios[0][1] << " D00n=" << ratios[0][3]
        << " D11n=" << ratios[0][4] << " ";
  bool monotone = true;
  for (std::size_t i = 1; i < ratios.size(); ++i)
    for (int d = 0; d < 6; ++d) monotone = monotone && ratios[i][d] >= ratios[i - 1][d] - 1e-9;
  c.require("monotone nondecreasing", monotone);
  bool a_at_4 = true;
  for (int d = 0; d < 3; ++d) a_at_4 = a_at_4 && ratios[3][d] >= 0.90 - 0.03;
  c.msg << "A diag at Nz=4: " << ratios[3][0] << " " << ratios[3][1] << " " << ratios[3][2]
        << " ";
  c.require("A>=0.90 (+-0.03) at Nz=4", a_at_4);
  return {c.ok, c.msg.str()};
}

// 9. Bimaterial stack split at the mid-surface: stiff below, compliant above
// pulls the coupling block negative.
Outcome criterion_9() {
  const VoxelGrid& grid = primitive96();
  PlateGeometry geom{kThickness, {1, 1, 1}};
  auto resolved = geom.resolve(grid);
  DofMap map = build_dof_map(grid, resolved.dz, resolved.lz);
  ElasticTensor6 below = isotropic_elasticity(1215.0, kNu);
  ElasticTensor6 above = isotropic_elasticity(500.0, kNu);
  std::vector<ElasticTensor6> tensors;
  tensors.reserve(map.z_active.size());
  for (double z : map.z_active) tensors.push_back(z < 0.0 ? below : above);

  PlateResult res = homogenize_plate(grid, MaterialField::per_element(std::move(tensors)), geom,
                                     opts_with(1e-6));
  Check c;
  c.within("B00", res.abd.b()(0, 0), -229.85, 0.02);
  c.within("B01", res.abd.b()(0, 1), -176.77, 0.02);
  c.within("A00", res.abd.a()(0, 0), 245.86, 0.01);
  return {c.ok, c.msg.str()};
}

// 10. Thermal conductance: uniform closed form and the lattice reference.
Outcome criterion_10() {
  Check c;
  ConductionResult solid =
      homogenize_thermal(full_solid(16, 16, 8), 60.5, PlateGeometry{kThickness, {1, 1, 1}},
                         opts_with(1e-8));
  Eigen::Matrix2d expect = 605.0 * Eigen::Matrix2d::Identity();
  double err = (solid.k_hom - expect).cwiseAbs().maxCoeff() / 605.0;
  c.require("solid k=605*I to 1e-8", err <= 1e-8);

  ConductionResult lat =
      homogenize_thermal(primitive96(), 60.5, PlateGeometry{kThickness, {1, 1, 1}},
                         opts_with(1e-6));
  c.within("k00", lat.k_hom(0, 0), 60.19, 0.01);
  c.within("k11", lat.k_hom(1, 1), 60.19, 0.01);
  c.require("|off-diag|<=0.05", std::abs(lat.k_hom(0, 1)) <= 0.05);
  return {c.ok, c.msg.str()};
}

// 11. Fast property suite: symmetry, mirror coupling, linearity, rigid modes,
// determinism.
Outcome criterion_11() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  VoxelGrid grid = tpms_grid(LatticeFamily::primitive, 16, 0.25, {1, 1, 1});
  auto f1 = MaterialField::homogeneous(isotropic_elasticity(1.0, 0.3));
  auto f2 = MaterialField::homogeneous(isotropic_elasticity(2.0, 0.3));

  PlateResult r1 = run_plate(grid, f1, kThickness, {1, 1, 1});
  c.require("ABD symmetric exactly",
            (r1.abd.m - r1.abd.m.transpose()).cwiseAbs().maxCoeff() == 0.0);
  c.require("mirror B<=1e-3*A", r1.abd.b().cwiseAbs().maxCoeff() <=
                                    1e-3 * r1.abd.a().cwiseAbs().maxCoeff());

  PlateResult r2 = run_plate(grid, f2, kThickness, {1, 1, 1});
  double lin = (r2.abd.m - 2.0 * r1.abd.m).cwiseAbs().maxCoeff() / r1.abd.m.cwiseAbs().maxCoeff();
  c.require("linearity to 1e-9", lin <= 1e-9);

  // Rigid x-translation lies in the nullspace of the unanchored operator.
  PlateGeometry geom{kThickness, {1, 1, 1}};
  auto resolved = geom.resolve(grid);
  DofMap map = build_dof_map(grid, resolved.dz, resolved.lz);
  ElementKinematics kin =
      element_stiffness(isotropic_elasticity(1.0, 0.3), resolved.dx, resolved.dy, resolved.dz);
  CsrMatrix k = assemble_stiffness(kin, f1, map);
  std::vector<double> t(std::size_t(k.rows), 0.0), y(std::size_t(k.rows), 0.0);
  for (std::size_t i = 0; i < t.size(); i += 3) t[i] = 1.0;
  k.multiply_block(t.data(), y.data(), 1);
  double ymax = 0.0, dmax = 0.0;
  for (double v : y) ymax = std::max(ymax, std::abs(v));
  for (double v : k.diagonal()) dmax = std::max(dmax, std::abs(v));
  c.require("rigid translation nullvector", ymax <= 1e-10 * dmax);

  Eigen::SelfAdjointEigenSolver<Matrix24> eig(kin.ke);
  double lmax = eig.eigenvalues().maxCoeff();
  bool six_zero = true;
  for (int i = 0; i < 6; ++i) six_zero = six_zero && std::abs(eig.eigenvalues()(i)) <= 1e-9 * lmax;
  c.require("element Ke: six zero eigenvalues", six_zero && eig.eigenvalues()(6) > 1e-6 * lmax);

  PlateResult r3 = run_plate(grid, f1, kThickness, {1, 1, 1});
  PlateMeta meta;
  meta.resolution = int(grid.nz);
  meta.density_achieved = r1.density;
  meta.wall_time_s = 0.0;
  c.require("deterministic JSON", plate_json(r1, meta) == plate_json(r3, meta));

  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require("runtime<30s", wall < 30.0);
  return {c.ok, c.msg.str()};
}

// 12. Mesh convergence of the primitive sheet: consecutive-resolution changes
// fall under 2% once the cell resolution reaches 60.
Outcome criterion_12() {
  Check c;
  std::vector<int> ns = {40, 50, 60, 70, 80};
  std::vector<double> a00, d00;
  for (int n : ns) {
    VoxelGrid grid = tpms_grid(LatticeFamily::primitive, n, kDensity, {1, 1, 1});
    PlateResult res = run_plate(grid, base_material(), kThickness, {1, 1, 1});
    a00.push_back(res.abd.a()(0, 0));
    d00.push_back(res.abd.d()(0, 0));
    c.msg << "N=" << n << ": A00=" << a00.back() << " D00=" << d00.back() << " ";
  }
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (ns[i - 1] < 60) continue;
    double da = std::abs(a00[i] - a00[i - 1]) / std::abs(a00[i - 1]);
    double dd = std::abs(d00[i] - d00[i - 1]) / std::abs(d00[i - 1]);
    std::ostringstream name;
    name << "N" << ns[i - 1] << "->" << ns[i] << "<2%";
    c.require(name.str(), da < 0.02 && dd < 0.02);
  }
  return {c.ok, c.msg.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion_1}, {2, criterion_2}, {3, criterion_3},  {4, criterion_4},
      {5, criterion_5}, {6, criterion_6}, {7, criterion_7},  {8, criterion_8},
      {9, criterion_9}, {10, criterion_10}, {11, criterion_11}, {12, criterion_12}};

  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (auto& [num, fn] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), num) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << out.detail
              << "(" << wall << " s)" << std::endl;
    if (!out.pass) ++failures;
  }
  if (failures) std::cout << failures << " criteria failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
