#pragma once

#include <cstddef>
#include <vector>

namespace spe2d {

/// Minimal CSR matrix, assembled from (row, col, value) triplets with
/// duplicate summation.
struct CsrMatrix {
    int n = 0;
    std::vector<int> row_ptr;
    std::vector<int> col;
    std::vector<double> val;

    static CsrMatrix from_triplets(int n, std::vector<std::tuple<int, int, double>> trips);

    void multiply(const double* x, double* y) const;
    std::vector<double> dense() const; ///< column-major n*n expansion
};

struct EigResult {
    int n = 0;        ///< matrix dimension
    int m = 0;        ///< number of computed pairs
    std::vector<double> lambda; ///< ascending
    std::vector<double> vecs;   ///< n x m, column-major
};

/// Smallest `want` eigenpairs of a dense symmetric matrix (column-major,
/// destroyed).  Throws std::runtime_error with the LAPACK info code and a
/// residual diagnostic on failure.
EigResult sym_eig_smallest(std::vector<double> a, int n, int want);

} // namespace spe2d
