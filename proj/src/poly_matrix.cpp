#include "npoisson/poly_matrix.hpp"

#include "npoisson/error.hpp"

namespace npoisson {

namespace {

void require_square(const PolyMatrix& m)
{
    if (m.empty()) throw DomainError("empty matrix");
    for (const auto& row : m)
        if (row.size() != m.size()) throw DomainError("matrix is not square");
}

} // namespace

Polynomial determinant(const PolyMatrix& m)
{
    require_square(m);
    const std::size_t n = m.size();
    const ChartPtr& chart = m[0][0].chart();
    PolyMatrix a = m;
    Polynomial previous(chart, Rational(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial(chart);
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], previous);
        }
        previous = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

PolyMatrix adjugate(const PolyMatrix& m)
{
    require_square(m);
    const std::size_t n = m.size();
    const ChartPtr& chart = m[0][0].chart();
    if (n == 1) return {{Polynomial(chart, Rational(1))}};
    PolyMatrix adj(n, std::vector<Polynomial>(n, Polynomial(chart)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            PolyMatrix minor;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r) continue;
                std::vector<Polynomial> row;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != c) row.push_back(m[i][j]);
                minor.push_back(std::move(row));
            }
            Polynomial cofactor = determinant(minor);
            adj[c][r] = ((r + c) % 2 == 0) ? cofactor : -cofactor;
        }
    }
    return adj;
}

} // namespace npoisson
