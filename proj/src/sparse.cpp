#include "homog/sparse.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace homog {

std::vector<double> CsrMatrix::diagonal() const {
  std::vector<double> d(std::size_t(rows), 0.0);
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
      if (cols[k] == r) {
        d[std::size_t(r)] = vals[k];
        break;
      }
    }
  }
  return d;
}

namespace {

template <int M>
void multiply_block_impl(const CsrMatrix& a, const double* x, double* y) {
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < a.rows; ++r) {
    double acc[M] = {};
    for (std::int64_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) {
      const double v = a.vals[k];
      const double* xr = x + std::int64_t(a.cols[k]) * M;
      for (int j = 0; j < M; ++j) acc[j] += v * xr[j];
    }
    double* yr = y + r * M;
    for (int j = 0; j < M; ++j) yr[j] = acc[j];
  }
}

}  // namespace

void CsrMatrix::multiply_block(const double* x, double* y, int m) const {
  switch (m) {
    case 1: return multiply_block_impl<1>(*this, x, y);
    case 2: return multiply_block_impl<2>(*this, x, y);
    case 3: return multiply_block_impl<3>(*this, x, y);
    case 4: return multiply_block_impl<4>(*this, x, y);
    case 5: return multiply_block_impl<5>(*this, x, y);
    case 6: return multiply_block_impl<6>(*this, x, y);
    default: throw std::invalid_argument("multiply_block supports 1 to 6 columns");
  }
}

CsrMatrix assemble_from_elements(const std::int32_t* edof, std::size_t n_elements, int k,
                                 std::int64_t total_dofs, const ElementValuesFn& values) {
  CsrMatrix a;
  a.rows = total_dofs;
  a.row_ptr.assign(std::size_t(total_dofs) + 1, 0);

  // Pass 1: uncompressed entry count per row.
  for (std::size_t e = 0; e < n_elements; ++e) {
    const std::int32_t* dofs = edof + std::size_t(k) * e;
    for (int i = 0; i < k; ++i) a.row_ptr[std::size_t(dofs[i]) + 1] += k;
  }
  for (std::int64_t r = 0; r < total_dofs; ++r) a.row_ptr[std::size_t(r) + 1] += a.row_ptr[std::size_t(r)];

  // Pass 2: scatter raw entries at precomputed offsets, element order.
  const std::int64_t raw_nnz = a.row_ptr.back();
  a.cols.resize(std::size_t(raw_nnz));
  a.vals.resize(std::size_t(raw_nnz));
  std::vector<std::int64_t> cursor(a.row_ptr.begin(), a.row_ptr.end() - 1);
  for (std::size_t e = 0; e < n_elements; ++e) {
    const std::int32_t* dofs = edof + std::size_t(k) * e;
    const double* ke = values(e);
    for (int i = 0; i < k; ++i) {
      const std::int64_t base = cursor[std::size_t(dofs[i])];
      cursor[std::size_t(dofs[i])] += k;
      for (int j = 0; j < k; ++j) {
        a.cols[std::size_t(base + j)] = dofs[j];
        a.vals[std::size_t(base + j)] = ke[i * k + j];
      }
    }
  }

  // Pass 3: per row, stable sort by column and merge duplicates in place.
  // Stability keeps equal columns in element order, so every sum has a fixed
  // accumulation order.
  std::vector<std::pair<std::int32_t, double>> scratch;
  std::int64_t write = 0;
  for (std::int64_t r = 0; r < total_dofs; ++r) {
    const std::int64_t begin = a.row_ptr[std::size_t(r)];
    const std::int64_t end = a.row_ptr[std::size_t(r) + 1];
    a.row_ptr[std::size_t(r)] = write;
    if (begin == end) continue;
    scratch.clear();
    for (std::int64_t p = begin; p < end; ++p) {
      scratch.emplace_back(a.cols[std::size_t(p)], a.vals[std::size_t(p)]);
    }
    std::stable_sort(scratch.begin(), scratch.end(),
                     [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    std::size_t i = 0;
    while (i < scratch.size()) {
      const std::int32_t col = scratch[i].first;
      double sum = scratch[i].second;
      for (++i; i < scratch.size() && scratch[i].first == col; ++i) sum += scratch[i].second;
      a.cols[std::size_t(write)] = col;
      a.vals[std::size_t(write)] = sum;
      ++write;
    }
  }
  a.row_ptr[std::size_t(total_dofs)] = write;
  a.cols.resize(std::size_t(write));
  a.vals.resize(std::size_t(write));
  a.cols.shrink_to_fit();
  a.vals.shrink_to_fit();
  return a;
}

CsrMatrix extract_submatrix(const CsrMatrix& a, const std::vector<std::int32_t>& keep) {
  std::vector<std::int32_t> renumber(std::size_t(a.rows), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) renumber[std::size_t(keep[i])] = std::int32_t(i);

  CsrMatrix out;
  out.rows = std::int64_t(keep.size());
  out.row_ptr.assign(keep.size() + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const std::int64_t begin = a.row_ptr[std::size_t(keep[i])];
    const std::int64_t end = a.row_ptr[std::size_t(keep[i]) + 1];
    std::int64_t n = 0;
    for (std::int64_t p = begin; p < end; ++p) {
      if (renumber[std::size_t(a.cols[std::size_t(p)])] >= 0) ++n;
    }
    out.row_ptr[i + 1] = out.row_ptr[i] + n;
  }
  out.cols.resize(std::size_t(out.row_ptr.back()));
  out.vals.resize(std::size_t(out.row_ptr.back()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::int64_t w = out.row_ptr[i];
    const std::int64_t begin = a.row_ptr[std::size_t(keep[i])];
    const std::int64_t end = a.row_ptr[std::size_t(keep[i]) + 1];
    for (std::int64_t p = begin; p < end; ++p) {
      const std::int32_t c = renumber[std::size_t(a.cols[std::size_t(p)])];
      if (c < 0) continue;
      out.cols[std::size_t(w)] = c;
      out.vals[std::size_t(w)] = a.vals[std::size_t(p)];
      ++w;
    }
  }
  return out;
}

}  // namespace homog
