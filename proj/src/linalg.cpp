#include "spe2d/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include <lapacke.h>

namespace spe2d {

CsrMatrix CsrMatrix::from_triplets(int n, std::vector<std::tuple<int, int, double>> trips) {
    std::sort(trips.begin(), trips.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    CsrMatrix m;
    m.n = n;
    m.row_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
    int prev_r = -1, prev_c = -1;
    for (const auto& [r, c, v] : trips) {
        if (r == prev_r && c == prev_c) {
            m.val.back() += v;
            continue;
        }
        m.col.push_back(c);
        m.val.push_back(v);
        m.row_ptr[static_cast<std::size_t>(r) + 1]++;
        prev_r = r;
        prev_c = c;
    }
    for (int r = 0; r < n; ++r) m.row_ptr[static_cast<std::size_t>(r) + 1] += m.row_ptr[static_cast<std::size_t>(r)];
    return m;
}

void CsrMatrix::multiply(const double* x, double* y) const {
    for (int r = 0; r < n; ++r) {
        double s = 0.0;
        for (int k = row_ptr[static_cast<std::size_t>(r)]; k < row_ptr[static_cast<std::size_t>(r) + 1]; ++k)
            s += val[static_cast<std::size_t>(k)] * x[col[static_cast<std::size_t>(k)]];
        y[r] = s;
    }
}

std::vector<double> CsrMatrix::dense() const {
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int r = 0; r < n; ++r)
        for (int k = row_ptr[static_cast<std::size_t>(r)]; k < row_ptr[static_cast<std::size_t>(r) + 1]; ++k)
            a[static_cast<std::size_t>(col[static_cast<std::size_t>(k)]) * n + r] = val[static_cast<std::size_t>(k)];
    return a;
}

EigResult sym_eig_smallest(std::vector<double> a, int n, int want) {
    if (want > n) want = n;
    EigResult out;
    out.n = n;
    out.m = want;
    out.lambda.assign(static_cast<std::size_t>(n), 0.0);
    out.vecs.assign(static_cast<std::size_t>(n) * want, 0.0);
    std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(std::max(1, want)));
    lapack_int found = 0;
    lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'U', n, a.data(), n,
                                     0.0, 0.0, 1, want, 0.0, &found, out.lambda.data(),
                                     out.vecs.data(), n, isuppz.data());
    if (info != 0 || found != want)
        throw std::runtime_error("sym_eig_smallest: dsyevr failed, info=" + std::to_string(info)
                                 + " found=" + std::to_string(found) + "/" + std::to_string(want));
    out.lambda.resize(static_cast<std::size_t>(want));
    return out;
}

} // namespace spe2d
