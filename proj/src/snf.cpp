#include "cubic4/snf.hpp"

namespace cubic4 {
namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SmithForm smith_normal_form(const BigMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    BigMatrix a = m;
    BigMatrix u = BigMatrix::identity(r);
    BigMatrix v = BigMatrix::identity(c);
    const std::size_t n = std::min(r, c);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (t,t).
            std::size_t pi = r, pj = c;
            BigInt best = 0;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j)
                    if (a(i, j) != 0 && (best == 0 || abs_big(a(i, j)) < best)) {
                        best = abs_big(a(i, j));
                        pi = i;
                        pj = j;
                    }
            if (best == 0) break;
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a(i, t) == 0) continue;
                BigInt q = a(i, t) / a(t, t);
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a(t, j) == 0) continue;
                BigInt q = a(t, j) / a(t, t);
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the block.
            std::size_t bad = r;
            for (std::size_t i = t + 1; i < r && bad == r; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == r) break;
            a.add_row(t, bad, 1);
            u.add_row(t, bad, 1);
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithForm out;
    out.factors.reserve(n);
    for (std::size_t t = 0; t < n; ++t) out.factors.push_back(a(t, t));
    out.left = std::move(u);
    out.right = std::move(v);
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m) { return smith_normal_form(to_big(m)); }

}  // namespace cubic4
