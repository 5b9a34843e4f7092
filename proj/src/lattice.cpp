#include "hopfkiss/lattice.hpp"

#include <algorithm>
#include <optional>

namespace hopfkiss {
namespace {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

mpz_class as_integer(const ExactScalar& x, const char* what) {
    if (!x.is_integer()) {
        throw InputError(std::string("non-integral Gram at this scale: ") + what + " = " + x.to_string());
    }
    return x.rat().get_num();
}

// Indices of a maximal linearly independent subset, scanned in order.
std::vector<std::size_t> independent_subset(const Configuration& config) {
    const std::size_t dim = config.ambient_dim();
    std::vector<Point> echelon;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < config.size() && chosen.size() < dim; ++k) {
        Point v = config.point(k);
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            const auto col = pivots[r];
            if (v[col].is_zero()) continue;
            const ExactScalar factor = v[col] / echelon[r][col];
            for (std::size_t c = 0; c < dim; ++c) v[c] -= factor * echelon[r][c];
        }
        const auto pivot = std::find_if(v.begin(), v.end(), [](const ExactScalar& x) { return !x.is_zero(); });
        if (pivot == v.end()) continue;
        pivots.push_back(static_cast<std::size_t>(pivot - v.begin()));
        echelon.push_back(std::move(v));
        chosen.push_back(k);
    }
    return chosen;
}

RationalMatrix invert(const IntegerMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix a(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && sgn(a[p][col]) == 0) ++p;
        if (p == n) throw DomainError("singular Gram matrix");
        std::swap(a[p], a[col]);
        const mpq_class inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            const mpq_class f = a[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    RationalMatrix out(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    }
    return out;
}

}  // namespace

IntegerMatrix hermite_normal_form(const IntegerMatrix& rows, std::size_t columns) {
    // pivot_rows[c]: echelon row whose leading entry sits in column c.
    std::vector<std::optional<std::vector<mpz_class>>> pivot_rows(columns);
    for (const auto& input : rows) {
        std::vector<mpz_class> v = input;
        for (std::size_t c = 0; c < columns; ++c) {
            if (sgn(v[c]) == 0) continue;
            if (!pivot_rows[c]) {
                if (sgn(v[c]) < 0) {
                    for (auto& x : v) x = -x;
                }
                pivot_rows[c] = std::move(v);
                break;
            }
            auto& row = *pivot_rows[c];
            mpz_class g;
            mpz_class s;
            mpz_class t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[c].get_mpz_t(), v[c].get_mpz_t());
            const mpz_class a = row[c] / g;
            const mpz_class b = v[c] / g;
            for (std::size_t k = c; k < columns; ++k) {
                mpz_class combined = s * row[k] + t * v[k];
                v[k] = a * v[k] - b * row[k];
                row[k] = std::move(combined);
            }
        }
    }

    IntegerMatrix out;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < columns; ++c) {
        if (pivot_rows[c]) {
            out.push_back(std::move(*pivot_rows[c]));
            pivot_cols.push_back(c);
        }
    }
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t j = 0; j < out.size(); ++j) {
        const auto col = pivot_cols[j];
        const mpz_class& p = out[j][col];
        for (std::size_t i = 0; i < j; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), out[i][col].get_mpz_t(), p.get_mpz_t());
            if (sgn(q) == 0) continue;
            for (std::size_t k = col; k < columns; ++k) out[i][k] -= q * out[j][k];
        }
    }
    return out;
}

mpz_class bareiss_determinant(IntegerMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m[p][k]) == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

ExactScalar integral_scale(const std::vector<ExactScalar>& dot_values) {
    mpz_class l = 1;
    for (const auto& v : dot_values) {
        if (!v.is_rational()) throw InputError("irrational inner product " + v.to_string());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.rat().get_den_mpz_t());
    }
    auto s = ExactScalar(mpq_class(l)).try_sqrt();
    if (!s) throw FieldOverflow("integral scale sqrt(" + l.get_str() + ") is not in Q(sqrt 2)");
    return *s;
}

LatticeReport gram_and_basis(const Configuration& config, const ExactScalar& scale) {
    const std::size_t dim = config.ambient_dim();
    if (config.size() == 0) throw InputError("empty configuration has no lattice");
    const auto chosen = independent_subset(config);
    if (chosen.size() < dim) {
        throw InputError("rank-deficient input: rank " + std::to_string(chosen.size()) + " < " +
                         std::to_string(dim));
    }
    const std::size_t r = chosen.size();
    const ExactScalar s2 = scale * scale;

    IntegerMatrix gram_b(r, std::vector<mpz_class>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            gram_b[i][j] = as_integer(s2 * dot(config.point(chosen[i]), config.point(chosen[j])),
                                      "basis inner product");
        }
    }
    const RationalMatrix gram_inv = invert(gram_b);

    // Coefficients of every scaled point in the chosen basis.
    RationalMatrix coeffs(config.size(), std::vector<mpq_class>(r));
    mpz_class common = 1;
    std::vector<mpz_class> y(r);
    for (std::size_t k = 0; k < config.size(); ++k) {
        for (std::size_t i = 0; i < r; ++i) {
            y[i] = as_integer(s2 * dot(config.point(chosen[i]), config.point(k)), "inner product");
        }
        for (std::size_t i = 0; i < r; ++i) {
            mpq_class acc = 0;
            for (std::size_t j = 0; j < r; ++j) acc += gram_inv[i][j] * y[j];
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), acc.get_den_mpz_t());
            coeffs[k][i] = std::move(acc);
        }
    }
    IntegerMatrix scaled(config.size(), std::vector<mpz_class>(r));
    for (std::size_t k = 0; k < config.size(); ++k) {
        for (std::size_t i = 0; i < r; ++i) {
            const mpq_class v = coeffs[k][i] * common;
            scaled[k][i] = v.get_num();
        }
    }
    const IntegerMatrix hnf = hermite_normal_form(scaled, r);
    if (hnf.size() != r) throw DomainError("lattice coefficient span lost rank");

    LatticeReport report;
    report.rank = r;
    RationalMatrix basis_coeffs(r, std::vector<mpq_class>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            basis_coeffs[i][j] = mpq_class(hnf[i][j], common);
            basis_coeffs[i][j].canonicalize();
        }
    }
    report.gram.assign(r, std::vector<mpz_class>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            mpq_class acc = 0;
            for (std::size_t a = 0; a < r; ++a) {
                if (sgn(basis_coeffs[i][a]) == 0) continue;
                for (std::size_t b = 0; b < r; ++b) acc += basis_coeffs[i][a] * gram_b[a][b] * basis_coeffs[j][b];
            }
            if (acc.get_den() != 1) throw InputError("non-integral Gram at this scale");
            report.gram[i][j] = acc.get_num();
        }
    }
    report.determinant = bareiss_determinant(report.gram);
    report.even = true;
    for (std::size_t i = 0; i < r; ++i) {
        if (mpz_even_p(report.gram[i][i].get_mpz_t()) == 0) report.even = false;
    }
    report.basis.assign(r, Point(dim));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (sgn(basis_coeffs[i][j]) == 0) continue;
            const ExactScalar c = ExactScalar(basis_coeffs[i][j]) * scale;
            for (std::size_t d = 0; d < dim; ++d) report.basis[i][d] += c * config.point(chosen[j])[d];
        }
    }
    return report;
}

}  // namespace hopfkiss
