#include "prodcanon/lattice.hpp"

#include <optional>

namespace prodcanon {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) fail(ErrorKind::DomainError, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Integer> IntMatrix::mul(const std::vector<Integer>& v) const {
    if (v.size() != cols_) fail(ErrorKind::DomainError, "matrix-vector size mismatch");
    std::vector<Integer> out(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

namespace {

void swap_cols(IntMatrix& a, IntMatrix& u, std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, j), a.at(i, k));
    for (std::size_t i = 0; i < u.rows(); ++i) std::swap(u.at(i, j), u.at(i, k));
}

// col_j -= q * col_p
void addmul_col(IntMatrix& a, IntMatrix& u, std::size_t j, std::size_t p, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, j) -= q * a.at(i, p);
    for (std::size_t i = 0; i < u.rows(); ++i) u.at(i, j) -= q * u.at(i, p);
}

}  // namespace

std::vector<std::vector<Integer>> lattice_kernel(const IntMatrix& M) {
    const std::size_t r = M.rows(), c = M.cols();
    IntMatrix a = M;
    IntMatrix u(c, c);
    for (std::size_t j = 0; j < c; ++j) u.at(j, j) = 1;

    std::size_t pivcol = 0;
    for (std::size_t i = 0; i < r && pivcol < c; ++i) {
        std::size_t j0 = pivcol;
        while (j0 < c && a.at(i, j0) == 0) ++j0;
        if (j0 == c) continue;
        swap_cols(a, u, pivcol, j0);
        for (std::size_t j = pivcol + 1; j < c; ++j) {
            while (a.at(i, j) != 0) {
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a.at(i, j).get_mpz_t(), a.at(i, pivcol).get_mpz_t());
                addmul_col(a, u, j, pivcol, q);
                if (a.at(i, j) != 0) swap_cols(a, u, pivcol, j);
            }
        }
        ++pivcol;
    }

    std::vector<std::vector<Integer>> basis;
    for (std::size_t j = pivcol; j < c; ++j) {
        std::vector<Integer> v(c);
        for (std::size_t i = 0; i < c; ++i) v[i] = u.at(i, j);
        // Normalize direction: first nonzero entry positive.
        for (const auto& x : v) {
            if (x != 0) {
                if (x < 0)
                    for (auto& y : v) y = -y;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Integer>> in_span(const std::vector<std::vector<Integer>>& basis,
                                            const std::vector<Integer>& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (x != 0) return std::nullopt;
        return std::vector<Integer>{};
    }
    const std::size_t n = v.size(), m = basis.size();
    // Solve B x = v over Q by elimination, then check integrality and verify.
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[i][j] = Rational(basis[j][i]);
        aug[i][m] = Rational(v[i]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_of_col(m, SIZE_MAX);
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t pr = row;
        while (pr < n && aug[pr][col].is_zero()) ++pr;
        if (pr == n) continue;
        std::swap(aug[pr], aug[row]);
        Rational inv = aug[row][col].inverse();
        for (auto& x : aug[row]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug[i][col].is_zero()) continue;
            Rational f = aug[i][col];
            for (std::size_t j = 0; j <= m; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    std::vector<Integer> x(m, Integer(0));
    for (std::size_t col = 0; col < m; ++col) {
        if (pivot_of_col[col] == SIZE_MAX) continue;  // independent basis: shouldn't happen
        const Rational& val = aug[pivot_of_col[col]][m];
        if (!val.is_integer()) return std::nullopt;
        x[col] = val.num();
    }
    // Verify (also covers inconsistent rows).
    std::vector<Integer> check(n, Integer(0));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) check[i] += x[j] * basis[j][i];
    for (std::size_t i = 0; i < n; ++i)
        if (check[i] != v[i]) return std::nullopt;
    return x;
}

}  // namespace prodcanon
