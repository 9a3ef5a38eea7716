#include "homog/solver.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homog {

namespace {

using Column = std::vector<double>;

double dot(const Column& a, const Column& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void pack_lanes(const std::vector<Column>& src, const std::vector<int>& lanes, Column& out) {
  const std::size_t n = src[std::size_t(lanes[0])].size();
  const std::size_t m = lanes.size();
  out.resize(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t idx = 0; idx < m; ++idx) out[i * m + idx] = src[std::size_t(lanes[idx])][i];
  }
}

void unpack_lanes(const Column& in, const std::vector<int>& lanes, std::vector<Column>& dst) {
  const std::size_t m = lanes.size();
  const std::size_t n = in.size() / m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t idx = 0; idx < m; ++idx) dst[std::size_t(lanes[idx])][i] = in[i * m + idx];
  }
}

}  // namespace

SolveResult solve_multi_rhs(const GlobalSystem& system, const SolverOptions& opts) {
#ifdef _OPENMP
  if (opts.threads > 0) omp_set_num_threads(opts.threads);
#endif
  const int m = int(system.f.cols());
  const auto& active = system.active_dofs;
  const std::size_t n = active.size();

  const CsrMatrix ka = extract_submatrix(system.k, active);
  Column inv_diag(n);
  {
    const std::vector<double> diag = ka.diagonal();
    for (std::size_t i = 0; i < n; ++i) {
      if (!(diag[i] > 0.0)) {
        throw solver_error("singular preconditioner at DOF " + std::to_string(active[i]), {});
      }
      inv_diag[i] = 1.0 / diag[i];
    }
  }

  const std::size_t mm = std::size_t(m);
  std::vector<Column> b(mm, Column(n));
  std::vector<double> bnorm(mm);
  for (int j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) b[std::size_t(j)][i] = system.f(active[i], j);
    bnorm[std::size_t(j)] = std::sqrt(dot(b[std::size_t(j)], b[std::size_t(j)]));
  }

  std::vector<Column> x(mm, Column(n, 0.0));
  std::vector<Column> r(mm, Column(n));
  std::vector<Column> z(mm, Column(n));
  std::vector<Column> p(mm, Column(n));
  std::vector<Column> q(mm, Column(n));
  std::vector<double> rho(mm, 0.0);
  std::vector<char> done(mm, 0);
  std::vector<int> iters(mm, 0);

  // (Re)enter the recurrence from the current iterate of column j.
  auto restart_column = [&](int j, bool from_zero) {
    auto& rj = r[std::size_t(j)];
    if (from_zero) {
      rj = b[std::size_t(j)];
    } else {
      ka.multiply_block(x[std::size_t(j)].data(), q[std::size_t(j)].data(), 1);
      for (std::size_t i = 0; i < n; ++i) rj[i] = b[std::size_t(j)][i] - q[std::size_t(j)][i];
    }
    for (std::size_t i = 0; i < n; ++i) z[std::size_t(j)][i] = inv_diag[i] * rj[i];
    p[std::size_t(j)] = z[std::size_t(j)];
    rho[std::size_t(j)] = dot(rj, z[std::size_t(j)]);
  };

  std::vector<double> true_res(mm, 0.0);
  auto verify = [&]() {
    Column xs, ys;
    std::vector<int> all(mm);
    for (int j = 0; j < m; ++j) all[std::size_t(j)] = j;
    pack_lanes(x, all, xs);
    ys.resize(xs.size());
    ka.multiply_block(xs.data(), ys.data(), m);
    for (int j = 0; j < m; ++j) {
      if (bnorm[std::size_t(j)] == 0.0) {
        true_res[std::size_t(j)] = 0.0;
        continue;
      }
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = ys[i * std::size_t(m) + std::size_t(j)] - b[std::size_t(j)][i];
        s += d * d;
      }
      true_res[std::size_t(j)] = std::sqrt(s) / bnorm[std::size_t(j)];
    }
  };

  for (int j = 0; j < m; ++j) {
    if (bnorm[std::size_t(j)] == 0.0) {
      done[std::size_t(j)] = 1;  // zero load resolves to zero displacement
    } else {
      restart_column(j, true);
    }
  }

  Column packed_p, packed_q;
  while (true) {
    std::vector<int> lanes;
    for (int j = 0; j < m; ++j) {
      if (!done[std::size_t(j)]) lanes.push_back(j);
    }
    if (lanes.empty()) {
      verify();
      // The recurrence residual can drift from the true one; resume any
      // column whose verified residual misses the target and has budget left.
      bool resumed = false;
      for (int j = 0; j < m; ++j) {
        if (true_res[std::size_t(j)] > opts.tol && iters[std::size_t(j)] < opts.maxiter) {
          restart_column(j, false);
          done[std::size_t(j)] = 0;
          resumed = true;
        }
      }
      if (!resumed) break;
      continue;
    }

    pack_lanes(p, lanes, packed_p);
    packed_q.resize(packed_p.size());
    ka.multiply_block(packed_p.data(), packed_q.data(), int(lanes.size()));
    unpack_lanes(packed_q, lanes, q);

    for (int j : lanes) {
      auto& xj = x[std::size_t(j)];
      auto& rj = r[std::size_t(j)];
      auto& zj = z[std::size_t(j)];
      auto& pj = p[std::size_t(j)];
      auto& qj = q[std::size_t(j)];

      const double pq = dot(pj, qj);
      if (!(pq > 0.0)) {
        verify();
        throw solver_error("conjugate gradient breakdown: system is not positive definite",
                           true_res);
      }
      const double alpha = rho[std::size_t(j)] / pq;
      for (std::size_t i = 0; i < n; ++i) xj[i] += alpha * pj[i];
      for (std::size_t i = 0; i < n; ++i) rj[i] -= alpha * qj[i];
      ++iters[std::size_t(j)];

      const double rn = std::sqrt(dot(rj, rj));
      if (rn <= opts.tol * bnorm[std::size_t(j)] || iters[std::size_t(j)] >= opts.maxiter) {
        done[std::size_t(j)] = 1;
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) zj[i] = inv_diag[i] * rj[i];
      const double rho_next = dot(rj, zj);
      const double beta = rho_next / rho[std::size_t(j)];
      for (std::size_t i = 0; i < n; ++i) pj[i] = zj[i] + beta * pj[i];
      rho[std::size_t(j)] = rho_next;
    }
  }

  for (int j = 0; j < m; ++j) {
    if (true_res[std::size_t(j)] > opts.tol) {
      throw solver_error("conjugate gradient did not converge within " +
                             std::to_string(opts.maxiter) + " iterations",
                         true_res);
    }
  }

  SolveResult result;
  result.u = RowMatrixXd::Zero(system.f.rows(), m);
  for (int j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) result.u(active[i], j) = x[std::size_t(j)][i];
  }
  result.residuals.assign(true_res.begin(), true_res.end());
  result.iterations = iters;
  return result;
}

}  // namespace homog
