#include "shapetile/exact_solve.hpp"

#include <stdexcept>
#include <utility>

namespace shapetile {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, const std::vector<Integer>& b) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw std::invalid_argument("solve_rational: rhs size mismatch");

    // Augmented [A | b], row-major.
    std::vector<std::vector<Integer>> M(m, std::vector<Integer>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = a(i, j);
        M[i][n] = b[i];
    }

    std::vector<std::size_t> pivot_cols;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && M[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(M[p], M[r]);
        const Integer& piv = M[r][c];
        for (std::size_t i = r + 1; i < m; ++i) {
            if (M[i][c] == 0) {
                // Still has to be rescaled to keep every entry a minor.
                for (std::size_t j = c + 1; j <= n; ++j) {
                    if (M[i][j] == 0) continue;
                    M[i][j] *= piv;
                    mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            const Integer lead = M[i][c];
            for (std::size_t j = c + 1; j <= n; ++j) {
                Integer v = piv * M[i][j] - lead * M[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = std::move(v);
            }
            M[i][c] = 0;
        }
        prev = M[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (M[i][n] != 0) return std::nullopt;

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
        const std::size_t pc = pivot_cols[k];
        Rational s = M[k][n];
        for (std::size_t j = pc + 1; j < n; ++j)
            if (M[k][j] != 0 && x[j] != 0) s -= Rational(M[k][j]) * x[j];
        x[pc] = s / Rational(M[k][pc]);
    }
    return x;
}

namespace {

using Column = std::vector<Integer>;

// col_a -= q * col_b
void axpy(Column& a, const Integer& q, const Column& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) a[i] -= q * b[i];
}

}  // namespace

HermiteColumnForm hermite_column_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<Column> H(n, Column(m)), U(n, Column(n, Integer(0)));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) H[j][i] = a(i, j);
        U[j][j] = 1;
    }

    std::vector<std::size_t> pivot_rows;
    std::size_t pc = 0;
    for (std::size_t r = 0; r < m && pc < n; ++r) {
        bool found = false;
        for (;;) {
            std::size_t best = n;
            for (std::size_t c = pc; c < n; ++c)
                if (H[c][r] != 0 && (best == n || abs(H[c][r]) < abs(H[best][r]))) best = c;
            if (best == n) break;
            found = true;
            std::swap(H[best], H[pc]);
            std::swap(U[best], U[pc]);
            bool clean = true;
            for (std::size_t c = pc + 1; c < n; ++c) {
                if (H[c][r] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), H[c][r].get_mpz_t(), H[pc][r].get_mpz_t());
                axpy(H[c], q, H[pc]);
                axpy(U[c], q, U[pc]);
                if (H[c][r] != 0) clean = false;
            }
            if (clean) break;
        }
        if (!found) continue;
        if (H[pc][r] < 0) {
            for (auto& v : H[pc]) v = -v;
            for (auto& v : U[pc]) v = -v;
        }
        // Reduce the earlier pivot columns in this row modulo the new pivot.
        for (std::size_t k = 0; k < pc; ++k) {
            if (H[k][r] == 0) continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), H[k][r].get_mpz_t(), H[pc][r].get_mpz_t());
            if (q == 0) continue;
            axpy(H[k], q, H[pc]);
            axpy(U[k], q, U[pc]);
        }
        pivot_rows.push_back(r);
        ++pc;
    }

    HermiteColumnForm out{IntMatrix(m, n), IntMatrix(n, n), std::move(pivot_rows)};
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) out.h(i, j) = std::move(H[j][i]);
        for (std::size_t i = 0; i < n; ++i) out.u(i, j) = std::move(U[j][i]);
    }
    return out;
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw std::invalid_argument("solve_integer: rhs size mismatch");
    const HermiteColumnForm hf = hermite_column_form(a);
    const std::size_t rank = hf.pivot_rows.size();

    std::vector<Integer> y(n, Integer(0));
    std::size_t k = 0;  // pivot columns with pivot row < r are already solved
    for (std::size_t r = 0; r < m; ++r) {
        Integer residual = b[r];
        for (std::size_t j = 0; j < k; ++j)
            if (hf.h(r, j) != 0) residual -= hf.h(r, j) * y[j];
        if (k < rank && hf.pivot_rows[k] == r) {
            const Integer& piv = hf.h(r, k);
            if (!mpz_divisible_p(residual.get_mpz_t(), piv.get_mpz_t())) return std::nullopt;
            mpz_divexact(y[k].get_mpz_t(), residual.get_mpz_t(), piv.get_mpz_t());
            ++k;
        } else if (residual != 0) {
            return std::nullopt;
        }
    }

    std::vector<Integer> x(n, Integer(0));
    for (std::size_t j = 0; j < rank; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (hf.u(i, j) != 0) x[i] += hf.u(i, j) * y[j];
    }
    return x;
}

}  // namespace shapetile
