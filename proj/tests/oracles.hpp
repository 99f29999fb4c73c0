// Brute-force reference implementations, deliberately naive and independent of
// the library algorithms they check.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cubic4/matrix.hpp"

namespace oracle {

using cubic4::BigInt;
using cubic4::IntMatrix;
using cubic4::Rational;
using cubic4::Vector;

inline std::int64_t form(const IntMatrix& g, const Vector& x, const Vector& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) s += x[i] * g(i, j) * y[j];
    return s;
}

// Determinant by Gauss-Jordan over the rationals.
inline BigInt det_rational(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return numerator(det);
}

inline BigInt det_rational(const cubic4::BigMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return numerator(det);
}

// Diagonal of the inverse, for Cauchy-Schwarz coordinate bounds.
inline std::vector<Rational> inverse_diagonal(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p][c] == 0) ++p;
        std::swap(a[p], a[c]);
        Rational piv = a[c][c];
        for (auto& x : a[c]) x /= piv;
        for (std::size_t r = 0; r < n; ++r)
            if (r != c && a[r][c] != 0) {
                Rational f = a[r][c];
                for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
            }
    }
    std::vector<Rational> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i][n + i];
    return d;
}

// Largest integer b with b^2 <= norm * (G^-1)_ii.
inline std::vector<int> coordinate_bounds(const IntMatrix& g, std::int64_t norm) {
    std::vector<int> out;
    for (const auto& d : inverse_diagonal(g)) {
        Rational lim = d * norm;
        int b = 0;
        while (Rational((b + 1) * (b + 1)) <= lim) ++b;
        out.push_back(b);
    }
    return out;
}

// All x with |x_i| <= bound_i and x.g.x == norm, counted by a plain odometer.
inline std::vector<Vector> box_search(const IntMatrix& g, const std::vector<int>& bound, std::int64_t norm) {
    const std::size_t n = g.rows();
    std::vector<Vector> out;
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
    // Track g.x so each step costs O(n).
    Vector gx(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gx[i] += g(i, j) * x[j];
    std::int64_t q = 0;
    for (std::size_t i = 0; i < n; ++i) q += x[i] * gx[i];
    for (;;) {
        if (q == norm) out.push_back(x);
        std::size_t p = 0;
        for (; p < n; ++p) {
            const std::int64_t step = x[p] == bound[p] ? -2 * bound[p] : 1;
            q += 2 * step * gx[p] + step * step * g(p, p);
            for (std::size_t r = 0; r < n; ++r) gx[r] += step * g(r, p);
            x[p] += step;
            if (step == 1) break;
        }
        if (p == n) break;
    }
    return out;
}

inline std::vector<Vector> box_search(const IntMatrix& g, int h, std::int64_t norm) {
    return box_search(g, std::vector<int>(g.rows(), h), norm);
}

// gcd of all k x k minors, k = 1..min(r,c): d_k = D_k / D_{k-1}.
inline std::vector<BigInt> determinantal_divisors(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    const std::size_t n = std::min(r, c);
    std::vector<BigInt> D(n + 1, 0);
    D[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        BigInt g = 0;
        std::vector<std::size_t> rs(k), cs(k);
        std::vector<bool> rsel(r, false), csel(c, false);
        std::fill(rsel.begin(), rsel.begin() + k, true);
        do {
            std::size_t a = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (rsel[i]) rs[a++] = i;
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + k, true);
            do {
                std::size_t b = 0;
                for (std::size_t j = 0; j < c; ++j)
                    if (csel[j]) cs[b++] = j;
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
                BigInt d = det_rational(sub);
                if (d < 0) d = -d;
                g = boost::multiprecision::gcd(g, d);
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
        D[k] = g;
    }
    std::vector<BigInt> f;
    for (std::size_t k = 1; k <= n; ++k) f.push_back(D[k - 1] == 0 ? BigInt(0) : D[k] / D[k - 1]);
    return f;
}

// Pascal's triangle row.
inline std::vector<std::int64_t> pascal_row(int n) {
    std::vector<std::int64_t> row{1};
    for (int k = 1; k <= n; ++k) {
        std::vector<std::int64_t> next(k + 1, 1);
        for (int j = 1; j < k; ++j) next[j] = row[j - 1] + row[j];
        row = next;
    }
    return row;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
    return m;
}

// Product of random transvections, swaps and sign flips.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 5), coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = idx(rng), b = idx(rng);
        if (a == b) continue;
        switch (kind(rng)) {
            case 0: u.swap_rows(a, b); break;
            case 1: u.negate_row(a); break;
            default: u.add_row(a, b, coef(rng)); break;
        }
    }
    return u;
}

// Every square-2 pair with pairing -1 among vectors of height <= h.
inline bool a2_pair_exists(const IntMatrix& g, int h) {
    const auto roots = box_search(g, h, 2);
    for (const auto& a : roots)
        for (const auto& b : roots)
            if (form(g, a, b) == -1) return true;
    return false;
}

}  // namespace oracle
