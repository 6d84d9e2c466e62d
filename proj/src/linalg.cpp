#include "polyfact/linalg.hpp"

namespace polyfact {

LinearSolution solve_linear(RationalMatrix A, RationalVector b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();

    std::vector<int> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && A[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[rank]);
        std::swap(b[piv], b[rank]);

        Rational inv = A[rank][col].inverse();
        for (std::size_t j = col; j < cols; ++j) A[rank][j] *= inv;
        b[rank] *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || A[i][col].is_zero()) continue;
            Rational f = A[i][col];
            for (std::size_t j = col; j < cols; ++j)
                A[i][j] -= f * A[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++rank;
    }

    LinearSolution sol;
    for (std::size_t i = rank; i < rows; ++i)
        if (!b[i].is_zero()) return sol;  // inconsistent
    sol.consistent = true;

    std::vector<bool> is_pivot(cols, false);
    for (int pc : pivot_col_of_row) is_pivot[static_cast<std::size_t>(pc)] = true;

    sol.particular.assign(cols, Rational(0));
    for (std::size_t r = 0; r < rank; ++r)
        sol.particular[static_cast<std::size_t>(pivot_col_of_row[r])] = b[r];

    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RationalVector v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < rank; ++r)
            v[static_cast<std::size_t>(pivot_col_of_row[r])] = -A[r][free_col];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

int matrix_rank(RationalMatrix A) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && A[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[rank]);
        Rational inv = A[rank][col].inverse();
        for (std::size_t j = col; j < cols; ++j) A[rank][j] *= inv;
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (A[i][col].is_zero()) continue;
            Rational f = A[i][col];
            for (std::size_t j = col; j < cols; ++j) A[i][j] -= f * A[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v) {
    if (basis.empty()) {
        for (const Rational& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    RationalMatrix with = basis;
    with.push_back(v);
    return matrix_rank(basis) == matrix_rank(with);
}

bool same_span(const std::vector<RationalVector>& a,
               const std::vector<RationalVector>& b) {
    RationalMatrix joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    int ra = a.empty() ? 0 : matrix_rank(a);
    int rb = b.empty() ? 0 : matrix_rank(b);
    int rj = joint.empty() ? 0 : matrix_rank(joint);
    return ra == rb && rb == rj;
}

} // namespace polyfact
