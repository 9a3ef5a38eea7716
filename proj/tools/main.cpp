// Command-line front end: lattice generation, plate / volume / thermal
// homogenization, pipeline comparison, and the two parameter sweeps.
// Exit codes: 0 ok, 2 invalid arguments, 3 generation failure, 4 solver
// failure, 5 I/O failure.

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "homog/errors.hpp"
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

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --threads wins; HOMOG_THREADS is the fallback; 0 leaves OpenMP defaults.
int resolve_threads(int cli_value, bool cli_given) {
  if (cli_given) return cli_value;
  const char* env = std::getenv("HOMOG_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0)
    throw std::invalid_argument("HOMOG_THREADS must be a nonnegative integer, got \"" +
                                std::string(env) + "\"");
  return int(v);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open output file: " + path);
  out << text;
  if (!out) throw io_error("write failed: " + path);
}

// Emits to stdout unless an output path was given.
void deliver(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text << "\n";
  else
    write_text(path, text);
}

void print_table(const std::string& label, const Eigen::MatrixXd& m) {
  std::cerr << label << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      std::cerr << std::setw(14) << std::setprecision(4) << std::fixed << m(i, j);
    std::cerr << "\n";
  }
  std::cerr.unsetf(std::ios::fixed);
  std::cerr << std::setprecision(6);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Shared analysis flags.
struct AnalysisArgs {
  std::string input;
  std::string output;
  std::string csv;
  double e_mod = 0.0;
  double nu = 0.0;
  double thickness = 0.0;
  std::vector<int> cells = {1, 1, 1};
  double cg_tol = 1e-6;
  int cg_maxiter = 5000;
  int threads = 0;
  bool threads_given = false;
  bool no_timing = false;
};

void add_solver_flags(CLI::App* sub, AnalysisArgs& a) {
  sub->add_option("--cg-tol", a.cg_tol, "relative residual tolerance")->capture_default_str();
  sub->add_option("--cg-maxiter", a.cg_maxiter, "iteration cap per load case")
      ->capture_default_str();
  auto* t = sub->add_option("--threads", a.threads, "worker threads (0 = library default)");
  sub->parse_complete_callback([&a, t] { a.threads_given = t->count() > 0; });
  sub->add_flag("--no-timing", a.no_timing, "report wall_time_s as 0 for reproducible output");
}

void add_analysis_flags(CLI::App* sub, AnalysisArgs& a, bool need_material) {
  sub->add_option("-i,--input", a.input, "VXL1 voxel file")->required();
  sub->add_option("-o,--output", a.output, "result JSON path (default: stdout)");
  sub->add_option("--csv", a.csv, "also write the matrix as CSV");
  if (need_material) {
    sub->add_option("--E", a.e_mod, "Young's modulus");
    sub->add_option("--nu", a.nu, "Poisson's ratio");
  }
  sub->add_option("--thickness", a.thickness, "plate thickness of the lattice stack")->required();
  sub->add_option("--cells", a.cells, "lattice cell counts Nx Ny Nz")->expected(3);
  add_solver_flags(sub, a);
}

SolverOptions solver_options(const AnalysisArgs& a) {
  SolverOptions opts;
  opts.tol = a.cg_tol;
  opts.maxiter = a.cg_maxiter;
  opts.threads = resolve_threads(a.threads, a.threads_given);
  return opts;
}

PlateGeometry geometry_of(const AnalysisArgs& a) {
  return PlateGeometry{a.thickness, {a.cells[0], a.cells[1], a.cells[2]}};
}

void require_isotropic(const AnalysisArgs& a, const CLI::App* sub) {
  if (sub->count("--E") == 0 || sub->count("--nu") == 0)
    throw CLI::RequiredError("--E and --nu");
}

// generate ------------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::string family = "primitive";
  int res = 0;
  double density = 0.0;
  bool sheet = false;
  bool network = false;
  std::vector<int> cells = {1, 1, 1};
  std::string output;
};

int run_generate(const GenerateArgs& g) {
  if (g.sheet && g.network)
    throw std::invalid_argument("--sheet and --network are mutually exclusive");

  LatticeSpec spec;
  spec.cells = {g.cells[0], g.cells[1], g.cells[2]};
  spec.resolution = g.res;
  spec.relative_density = g.density;
  spec.sheet = !g.network;

  VoxelGrid grid;
  if (g.kind == "tpms") {
    spec.family = family_from_string(g.family);
    grid = generate_tpms(spec);
  } else if (g.kind == "bcc") {
    spec.family = LatticeFamily::bcc;
    grid = generate_bcc(spec);
  } else {
    throw std::invalid_argument("unknown generator kind: " + g.kind + " (expected tpms or bcc)");
  }

  save_vxl(grid, g.output);
  std::cerr << "[generate] " << g.kind << " " << grid.nx << "x" << grid.ny << "x" << grid.nz
            << " -> " << g.output << "\n";
  std::cout << format_number(grid.solid_fraction()) << "\n";
  return 0;
}

// plate ---------------------------------------------------------------------

struct PlateArgs {
  AnalysisArgs base;
  std::vector<int> skin;       // layers below, above
  std::vector<double> split_z; // E below, E above the mid-surface
  std::string materials;       // ID -> material JSON table
  int skin_material = 1;
};

MaterialField plate_field(const PlateArgs& p, const VoxelGrid& grid, const PlateGeometry& geom) {
  if (!p.materials.empty()) {
    auto table = parse_material_table(read_file(p.materials));
    auto resolved = geom.resolve(grid);
    DofMap map = build_dof_map(grid, resolved.dz, resolved.lz);
    return multi_material_field(active_values(grid, map), table);
  }
  if (!p.split_z.empty()) {
    auto resolved = geom.resolve(grid);
    DofMap map = build_dof_map(grid, resolved.dz, resolved.lz);
    ElasticTensor6 below = isotropic_elasticity(p.split_z[0], p.base.nu);
    ElasticTensor6 above = isotropic_elasticity(p.split_z[1], p.base.nu);
    std::vector<ElasticTensor6> tensors;
    tensors.reserve(map.z_active.size());
    for (double z : map.z_active) tensors.push_back(z < 0.0 ? below : above);
    return MaterialField::per_element(std::move(tensors));
  }
  return MaterialField::homogeneous(isotropic_elasticity(p.base.e_mod, p.base.nu));
}

int run_plate(const PlateArgs& p) {
  auto t0 = std::chrono::steady_clock::now();
  VoxelGrid grid = load_vxl(p.base.input);

  if (!p.skin.empty()) {
    // Skins occupy the outer voxel layers of the same plate thickness: the
    // voxel height shrinks from h/nz to h/(nz + B + T).
    grid = add_skins(grid, p.skin[0], p.skin[1], std::uint8_t(p.skin_material));
  }

  PlateGeometry geom{p.base.thickness, {p.base.cells[0], p.base.cells[1], p.base.cells[2]}};
  MaterialField field = plate_field(p, grid, geom);
  std::cerr << "[plate] " << grid.nx << "x" << grid.ny << "x" << grid.nz << ", "
            << grid.solid_count() << " solid voxels, 6 load cases\n";

  PlateResult result = homogenize_plate(grid, field, geom, solver_options(p.base));

  PlateMeta meta;
  meta.resolution = int(grid.nz);
  meta.density_achieved = result.density;
  meta.wall_time_s = p.base.no_timing ? 0.0 : seconds_since(t0);

  deliver(p.base.output, plate_json(result, meta));
  if (!p.base.csv.empty()) write_text(p.base.csv, csv_matrix(result.abd.m));
  print_table("ABD:", result.abd.m);
  std::cerr << "[plate] done in " << seconds_since(t0) << " s, asymmetry " << result.asymmetry
            << "\n";
  return 0;
}

// volume --------------------------------------------------------------------

int run_volume(const AnalysisArgs& a) {
  auto t0 = std::chrono::steady_clock::now();
  VoxelGrid grid = load_vxl(a.input);
  auto resolved = geometry_of(a).resolve(grid);
  auto field = MaterialField::homogeneous(isotropic_elasticity(a.e_mod, a.nu));
  std::cerr << "[volume] " << grid.nx << "x" << grid.ny << "x" << grid.nz << ", "
            << grid.solid_count() << " solid voxels, 6 load cases\n";

  VolumeResult result =
      homogenize_volume(grid, field, resolved.dx, resolved.dy, resolved.dz, solver_options(a));
  ReducedStiffness3 q = static_condensation(result.c_h);
  AbdMatrix abd = analytic_abd(q, a.thickness);

  deliver(a.output, volume_json(result.c_h, q, abd));
  if (!a.csv.empty()) write_text(a.csv, csv_matrix(result.c_h.c));
  print_table("C_H:", result.c_h.c);
  std::cerr << "[volume] done in " << seconds_since(t0) << " s\n";
  return 0;
}

// thermal -------------------------------------------------------------------

struct ThermalArgs {
  AnalysisArgs base;
  double k_s = 0.0;
};

int run_thermal(const ThermalArgs& t) {
  auto t0 = std::chrono::steady_clock::now();
  VoxelGrid grid = load_vxl(t.base.input);
  std::cerr << "[thermal] " << grid.nx << "x" << grid.ny << "x" << grid.nz << ", "
            << grid.solid_count() << " solid voxels, 2 load cases\n";

  ConductionResult result =
      homogenize_thermal(grid, t.k_s, geometry_of(t.base), solver_options(t.base));

  deliver(t.base.output, thermal_json(result));
  if (!t.base.csv.empty()) write_text(t.base.csv, csv_matrix(result.k_hom));
  print_table("k_hom:", result.k_hom);
  std::cerr << "[thermal] done in " << seconds_since(t0) << " s\n";
  return 0;
}

// compare -------------------------------------------------------------------

int run_compare(const AnalysisArgs& a) {
  auto t0 = std::chrono::steady_clock::now();
  VoxelGrid grid = load_vxl(a.input);
  PlateGeometry geom = geometry_of(a);
  auto resolved = geom.resolve(grid);
  auto field = MaterialField::homogeneous(isotropic_elasticity(a.e_mod, a.nu));
  SolverOptions opts = solver_options(a);

  std::cerr << "[compare] plate pipeline\n";
  PlateResult plate = homogenize_plate(grid, field, geom, opts);
  std::cerr << "[compare] volume pipeline\n";
  VolumeResult volume =
      homogenize_volume(grid, field, resolved.dx, resolved.dy, resolved.dz, opts);
  AbdMatrix analytic = analytic_abd(static_condensation(volume.c_h), a.thickness);

  deliver(a.output, compare_json(plate.abd.m, analytic.m));
  print_table("plate ABD:", plate.abd.m);
  print_table("volume ABD:", analytic.m);
  std::cerr << "[compare] done in " << seconds_since(t0) << " s\n";
  return 0;
}

// sweeps --------------------------------------------------------------------

struct SweepArgs {
  std::string family = "primitive";
  double density = 0.0;
  bool network = false;
  bool sheet = false;
  double e_mod = 1.0;
  double nu = 0.3;
  double thickness = 10.0;
  std::string output;
  double cg_tol = 1e-6;
  int cg_maxiter = 5000;
  int threads = 0;
  bool threads_given = false;
  bool no_timing = false;
  int min = 0, max = 0, step = 5;   // convergence: resolution range
  int res = 32, nz_min = 1, nz_max = 8;  // size effect
};

SolverOptions sweep_solver_options(const SweepArgs& s) {
  SolverOptions opts;
  opts.tol = s.cg_tol;
  opts.maxiter = s.cg_maxiter;
  opts.threads = resolve_threads(s.threads, s.threads_given);
  return opts;
}

LatticeSpec sweep_spec(const SweepArgs& s) {
  if (s.sheet && s.network)
    throw std::invalid_argument("--sheet and --network are mutually exclusive");
  LatticeSpec spec;
  spec.family = family_from_string(s.family);
  spec.relative_density = s.density;
  spec.sheet = !s.network;
  return spec;
}

int run_sweep_convergence(const SweepArgs& s) {
  if (s.max < s.min) throw std::invalid_argument("descending resolution range");
  if (s.step <= 0) throw std::invalid_argument("step must be positive");
  LatticeSpec spec = sweep_spec(s);
  auto field = MaterialField::homogeneous(isotropic_elasticity(s.e_mod, s.nu));
  SolverOptions opts = sweep_solver_options(s);

  std::ostringstream csv;
  csv << "N,A00,D00,wall_time\n";
  for (int n = s.min; n <= s.max; n += s.step) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      spec.resolution = n;
      VoxelGrid grid = (spec.family == LatticeFamily::bcc) ? generate_bcc(spec)
                                                           : generate_tpms(spec);
      PlateResult res = homogenize_plate(grid, field, {s.thickness, {1, 1, 1}}, opts);
      double wall = s.no_timing ? 0.0 : seconds_since(t0);
      csv << n << "," << format_number(res.abd.a()(0, 0)) << ","
          << format_number(res.abd.d()(0, 0)) << "," << format_number(wall) << "\n";
      std::cerr << "[sweep] N=" << n << " done in " << seconds_since(t0) << " s\n";
    } catch (const std::exception& e) {
      csv << n << ",ERROR,ERROR,ERROR\n";
      std::cerr << "[sweep] N=" << n << " failed: " << e.what() << "\n";
    }
  }
  deliver(s.output, csv.str());
  return 0;
}

int run_sweep_size_effect(const SweepArgs& s) {
  if (s.nz_min < 1) throw std::invalid_argument("nz range must start at 1 or above");
  if (s.nz_max < s.nz_min) throw std::invalid_argument("descending nz range");
  LatticeSpec spec = sweep_spec(s);
  spec.resolution = s.res;
  auto field = MaterialField::homogeneous(isotropic_elasticity(s.e_mod, s.nu));
  SolverOptions opts = sweep_solver_options(s);

  // Volume baseline on one cell of unit edge; the ratio is scale-free.
  spec.cells = {1, 1, 1};
  VoxelGrid cell = (spec.family == LatticeFamily::bcc) ? generate_bcc(spec)
                                                       : generate_tpms(spec);
  const double voxel = 1.0 / double(s.res);
  std::cerr << "[sweep] volume baseline\n";
  VolumeResult volume = homogenize_volume(cell, field, voxel, voxel, voxel, opts);
  ReducedStiffness3 q = static_condensation(volume.c_h);

  std::ostringstream csv;
  csv << "Nz,A00,A11,A22,D00,D11,D22\n";
  for (int nz = s.nz_min; nz <= s.nz_max; ++nz) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      spec.cells = {1, 1, nz};
      VoxelGrid grid = (spec.family == LatticeFamily::bcc) ? generate_bcc(spec)
                                                           : generate_tpms(spec);
      PlateResult plate = homogenize_plate(grid, field, {double(nz), {1, 1, nz}}, opts);
      AbdMatrix analytic = analytic_abd(q, double(nz));
      csv << nz;
      for (int d = 0; d < 3; ++d)
        csv << "," << format_number(plate.abd.a()(d, d) / analytic.a()(d, d));
      for (int d = 0; d < 3; ++d)
        csv << "," << format_number(plate.abd.d()(d, d) / analytic.d()(d, d));
      csv << "\n";
      std::cerr << "[sweep] Nz=" << nz << " done in " << seconds_since(t0) << " s\n";
    } catch (const std::exception& e) {
      csv << nz << ",ERROR,ERROR,ERROR,ERROR,ERROR,ERROR\n";
      std::cerr << "[sweep] Nz=" << nz << " failed: " << e.what() << "\n";
    }
  }
  deliver(s.output, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Voxel homogenization of lattice plates: effective ABD plate stiffness "
               "(in-plane periodic, out-of-plane free), 3D-periodic volume baseline, and "
               "in-plane thermal conductance."};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* sub_gen = app.add_subcommand("generate", "sample a lattice cell into a VXL1 voxel file");
  sub_gen->add_option("kind", gen.kind, "generator: tpms or bcc")->required();
  sub_gen->add_option("--family", gen.family, "tpms family: primitive, gyroid, diamond, iwp")
      ->capture_default_str();
  sub_gen->add_option("--res", gen.res, "voxels per cell edge")->required();
  sub_gen->add_option("--density", gen.density, "target solid fraction")->required();
  sub_gen->add_flag("--sheet", gen.sheet, "sheet solid (|phi| <= t), the default");
  sub_gen->add_flag("--network", gen.network, "network solid (phi <= t)");
  sub_gen->add_option("--cells", gen.cells, "cell counts Nx Ny Nz")->expected(3);
  sub_gen->add_option("-o,--output", gen.output, "output voxel file")->required();

  PlateArgs plate;
  auto* sub_plate =
      app.add_subcommand("plate", "plate homogenization: effective ABD of the voxel stack");
  add_analysis_flags(sub_plate, plate.base, true);
  sub_plate->add_option("--skin", plate.skin, "solid skin layers: below above")->expected(2);
  sub_plate
      ->add_option("--split-z", plate.split_z,
                   "bimaterial split at the mid-surface: E below, E above")
      ->expected(2);
  auto* opt_materials = sub_plate->add_option(
      "--materials", plate.materials, "JSON table mapping voxel material IDs to {E, nu}");
  opt_materials->excludes("--split-z");
  sub_plate->add_option("--skin-material", plate.skin_material, "material ID for --skin layers")
      ->capture_default_str();

  AnalysisArgs volume;
  auto* sub_volume =
      app.add_subcommand("volume", "fully periodic volume homogenization of one cell");
  add_analysis_flags(sub_volume, volume, true);

  ThermalArgs thermal;
  auto* sub_thermal =
      app.add_subcommand("thermal", "in-plane thermal conductance of the voxel stack");
  add_analysis_flags(sub_thermal, thermal.base, false);
  sub_thermal->add_option("--k", thermal.k_s, "solid-phase conductivity")->required();

  AnalysisArgs compare;
  auto* sub_compare =
      app.add_subcommand("compare", "plate vs volume-derived ABD with relative errors");
  add_analysis_flags(sub_compare, compare, true);

  SweepArgs conv;
  auto* sub_conv = app.add_subcommand(
      "sweep-convergence", "resolution sweep: CSV of N, A00, D00, wall_time");
  sub_conv->add_option("--family", conv.family, "lattice family (tpms names or bcc)")
      ->capture_default_str();
  sub_conv->add_option("--density", conv.density, "target solid fraction")->required();
  sub_conv->add_flag("--sheet", conv.sheet, "sheet solid, the default");
  sub_conv->add_flag("--network", conv.network, "network solid");
  sub_conv->add_option("--E", conv.e_mod, "Young's modulus")->capture_default_str();
  sub_conv->add_option("--nu", conv.nu, "Poisson's ratio")->capture_default_str();
  sub_conv->add_option("--thickness", conv.thickness, "plate thickness")->capture_default_str();
  sub_conv->add_option("--min", conv.min, "first resolution")->required();
  sub_conv->add_option("--max", conv.max, "last resolution")->required();
  sub_conv->add_option("--step", conv.step, "resolution increment")->capture_default_str();
  sub_conv->add_option("-o,--output", conv.output, "CSV path (default: stdout)");
  sub_conv->add_option("--cg-tol", conv.cg_tol, "relative residual tolerance")
      ->capture_default_str();
  sub_conv->add_option("--cg-maxiter", conv.cg_maxiter, "iteration cap")->capture_default_str();
  auto* conv_threads = sub_conv->add_option("--threads", conv.threads, "worker threads");
  sub_conv->parse_complete_callback(
      [&conv, conv_threads] { conv.threads_given = conv_threads->count() > 0; });
  sub_conv->add_flag("--no-timing", conv.no_timing, "report wall_time as 0");

  SweepArgs size;
  auto* sub_size = app.add_subcommand(
      "sweep-size-effect",
      "thickness sweep: CSV of Nz and diagonal A, D normalized by the volume baseline");
  sub_size->add_option("--family", size.family, "lattice family (tpms names or bcc)")
      ->capture_default_str();
  sub_size->add_option("--density", size.density, "target solid fraction")->required();
  sub_size->add_flag("--sheet", size.sheet, "sheet solid, the default");
  sub_size->add_flag("--network", size.network, "network solid");
  sub_size->add_option("--E", size.e_mod, "Young's modulus")->capture_default_str();
  sub_size->add_option("--nu", size.nu, "Poisson's ratio")->capture_default_str();
  sub_size->add_option("--res", size.res, "voxels per cell edge")->capture_default_str();
  sub_size->add_option("--nz-min", size.nz_min, "first cell count through thickness")
      ->capture_default_str();
  sub_size->add_option("--nz-max", size.nz_max, "last cell count through thickness")
      ->capture_default_str();
  sub_size->add_option("-o,--output", size.output, "CSV path (default: stdout)");
  sub_size->add_option("--cg-tol", size.cg_tol, "relative residual tolerance")
      ->capture_default_str();
  sub_size->add_option("--cg-maxiter", size.cg_maxiter, "iteration cap")->capture_default_str();
  auto* size_threads = sub_size->add_option("--threads", size.threads, "worker threads");
  sub_size->parse_complete_callback(
      [&size, size_threads] { size.threads_given = size_threads->count() > 0; });
  sub_size->add_flag("--no-timing", size.no_timing, "unused; accepted for flag parity");

  try {
    app.parse(argc, argv);

    if (*sub_gen) return run_generate(gen);
    if (*sub_plate) {
      if (plate.materials.empty()) {
        if (!plate.split_z.empty()) {
          if (sub_plate->count("--nu") == 0) throw CLI::RequiredError("--nu");
        } else {
          require_isotropic(plate.base, sub_plate);
        }
      }
      return run_plate(plate);
    }
    if (*sub_volume) {
      require_isotropic(volume, sub_volume);
      return run_volume(volume);
    }
    if (*sub_thermal) return run_thermal(thermal);
    if (*sub_compare) {
      require_isotropic(compare, sub_compare);
      return run_compare(compare);
    }
    if (*sub_conv) return run_sweep_convergence(conv);
    if (*sub_size) return run_sweep_size_effect(size);
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const generation_error& e) {
    std::cerr << "generation error: " << e.what() << "\n";
    return 3;
  } catch (const solver_error& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    if (!e.residuals().empty()) {
      std::cerr << "residuals:";
      for (double r : e.residuals()) std::cerr << " " << r;
      std::cerr << "\n";
    }
    return 4;
  } catch (const io_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 5;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
