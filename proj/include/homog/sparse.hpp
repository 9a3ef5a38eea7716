#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace homog {

struct CsrMatrix {
  std::int64_t rows = 0;
  std::vector<std::int64_t> row_ptr;  // rows + 1
  std::vector<std::int32_t> cols;
  std::vector<double> vals;

  std::int64_t nnz() const { return row_ptr.empty() ? 0 : row_ptr.back(); }
  std::vector<double> diagonal() const;

  // y = A x for m interleaved right-hand sides (x and y are rows x m,
  // row-major). Each output row is an independent in-order sum, so results
  // do not depend on thread count.
  void multiply_block(const double* x, double* y, int m) const;
};

// Returns the values of one element matrix (k x k, row-major). The pointer
// only needs to stay valid until the next call.
using ElementValuesFn = std::function<const double*(std::size_t)>;

// Scatters n_elements k x k blocks into CSR. Duplicate (row, col) entries are
// merged by summation in element visit order, so the accumulation order is
// fixed and the result is reproducible bit for bit.
CsrMatrix assemble_from_elements(const std::int32_t* edof, std::size_t n_elements, int k,
                                 std::int64_t total_dofs, const ElementValuesFn& values);

// Rows and columns restricted to `keep` (sorted ascending, no duplicates),
// renumbered to 0..keep.size()-1. Dropped columns are simply omitted.
CsrMatrix extract_submatrix(const CsrMatrix& a, const std::vector<std::int32_t>& keep);

}  // namespace homog
