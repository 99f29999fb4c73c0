#include "cubic4/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cubic4/snf.hpp"

namespace cubic4 {
namespace {

// Rows b0..b7 of a root basis of E8 whose dual basis is again a root basis
// (diag of the inverse is 2). Keeps every norm-2 coordinate within [-2,2].
constexpr std::int64_t kE8[8][8] = {
    {2, 1, -1, 0, 0, 0, 0, 1},   {1, 2, 0, 0, 0, -1, -1, 0}, {-1, 0, 2, 0, -1, 0, -1, 0},
    {0, 0, 0, 2, -1, -1, 1, 0},  {0, 0, -1, -1, 2, 0, 0, -1}, {0, -1, 0, -1, 0, 2, 0, 1},
    {0, -1, -1, 1, 0, 0, 2, 0},  {1, 0, 0, 0, -1, 1, 0, 2},
};

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Rational mod_rational(const Rational& r, const Rational& m) {
    Rational t = r / m;
    BigInt f = floor_div(numerator(t), denominator(t));
    return r - m * Rational(f);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

void check_dims(const GramMatrix& g, const Vector& v) {
    if (v.size() != g.rank()) throw DimensionError("vector length does not match lattice rank");
}

Rational rational_pair(const GramMatrix& g, const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (x[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < g.rank(); ++j)
            if (g(i, j) != 0 && y[j] != 0) row += Rational(g(i, j)) * y[j];
        s += x[i] * row;
    }
    return s;
}

}  // namespace

GramMatrix::GramMatrix(IntMatrix entries) : m_(std::move(entries)) {
    if (!m_.symmetric()) throw InvariantError("Gram matrix must be square and symmetric");
}

std::int64_t GramMatrix::pair(const Vector& x, const Vector& y) const {
    if (x.size() != rank() || y.size() != rank()) throw DimensionError("vector length does not match lattice rank");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        std::int64_t row = 0;
        for (std::size_t j = 0; j < rank(); ++j) row += m_(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

Vector GramMatrix::pairings(const Vector& x) const {
    if (x.size() != rank()) throw DimensionError("vector length does not match lattice rank");
    Vector out(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) out[i] += m_(i, j) * x[j];
    return out;
}

IntMatrix block_a(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 2;
        if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = -1;
    }
    return m;
}

IntMatrix block_d(std::size_t n) {
    if (n < 4) throw InvariantError("D_n needs n >= 4");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
    for (std::size_t i = 0; i + 2 < n; ++i) m(i, i + 1) = m(i + 1, i) = -1;
    m(n - 3, n - 1) = m(n - 1, n - 3) = -1;
    return m;
}

IntMatrix block_e(std::size_t n) {
    IntMatrix m(n, n);
    if (n == 8) {
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) m(i, j) = kE8[i][j];
        return m;
    }
    if (n != 6 && n != 7) throw InvariantError("E_n needs n in {6,7,8}");
    // Bourbaki labels 1..n, zero-based here.
    const std::pair<std::size_t, std::size_t> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}};
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
    for (auto [a, b] : edges)
        if (a <= n && b <= n) m(a - 1, b - 1) = m(b - 1, a - 1) = -1;
    return m;
}

IntMatrix block_u() { return IntMatrix{{0, 1}, {1, 0}}; }

GramMatrix gram(const Atom& a) {
    switch (a.kind) {
        case AtomKind::A: return GramMatrix(block_a(a.param));
        case AtomKind::D: return GramMatrix(block_d(a.param));
        case AtomKind::E: return GramMatrix(block_e(a.param));
        case AtomKind::U: return GramMatrix(block_u());
        case AtomKind::Rank1: return GramMatrix(IntMatrix{{a.param}});
    }
    return {};
}

GramMatrix gram(const LatticeExpr& e) {
    std::vector<IntMatrix> blocks;
    for (const auto& t : expand(e)) {
        IntMatrix b = gram(t.atom).entries();
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) *= t.scale;
        blocks.push_back(std::move(b));
    }
    return GramMatrix(block_diagonal(blocks));
}

Signature signature(const GramMatrix& g) {
    // Congruence diagonalization over Z: with pivot p, the Schur complement
    // scaled by p is integral, and scaling by p flips signs when p < 0.
    std::size_t n = g.rank();
    BigMatrix a = to_big(g.entries());
    Signature s;
    bool flipped = false;
    while (n > 0) {
        std::size_t p = 0;
        while (p < n && a(p, p) == 0) ++p;
        if (p == n) {
            // Zero diagonal: x_i += x_j puts 2 a_ij on the diagonal.
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) throw DegenerateLatticeError("Gram matrix is degenerate");
            a.add_row(pi, pj, 1);
            a.add_col(pi, pj, 1);
            p = pi;
        }
        const BigInt piv = a(p, p);
        ((piv > 0) != flipped ? s.pos : s.neg)++;
        if (piv < 0) flipped = !flipped;

        BigMatrix b(n - 1, n - 1);
        BigInt common = 0;
        for (std::size_t i = 0, bi = 0; i < n; ++i) {
            if (i == p) continue;
            for (std::size_t j = 0, bj = 0; j < n; ++j) {
                if (j == p) continue;
                b(bi, bj) = piv * a(i, j) - a(i, p) * a(p, j);
                common = boost::multiprecision::gcd(common, b(bi, bj));
                ++bj;
            }
            ++bi;
        }
        if (common > 1)
            for (std::size_t i = 0; i + 1 < n; ++i)
                for (std::size_t j = 0; j + 1 < n; ++j) b(i, j) /= common;
        a = std::move(b);
        --n;
    }
    return s;
}

BigInt determinant(const GramMatrix& g) { return determinant(g.entries()); }

bool positive_definite(const GramMatrix& g) {
    try {
        return signature(g).neg == 0;
    } catch (const DegenerateLatticeError&) {
        return false;
    }
}

BigInt DiscriminantGroup::order() const {
    BigInt n = 1;
    for (const auto& f : invariant_factors) n *= f;
    return n;
}

std::string DiscriminantGroup::to_string() const {
    if (invariant_factors.empty()) return "0";
    std::string out;
    std::size_t k = 0;
    while (k < invariant_factors.size()) {
        std::size_t e = k;
        while (e < invariant_factors.size() && invariant_factors[e] == invariant_factors[k]) ++e;
        if (!out.empty()) out += " + ";
        const std::string z = "Z/" + invariant_factors[k].str();
        out += e - k == 1 ? z : "(" + z + ")^" + std::to_string(e - k);
        k = e;
    }
    return out;
}

DiscriminantGroup discriminant_group(const GramMatrix& g) {
    if (determinant(g) == 0) throw DegenerateLatticeError("Gram matrix is degenerate");
    SmithForm s = smith_normal_form(g.entries());
    DiscriminantGroup d;
    for (const auto& f : s.factors)
        if (f > 1) {
            d.invariant_factors.push_back(f);
            if (f % 2 == 0) ++d.two_rank;
        }
    return d;
}

DiscriminantForm discriminant_form(const GramMatrix& g) {
    if (determinant(g) == 0) throw DegenerateLatticeError("Gram matrix is degenerate");
    const std::size_t n = g.rank();
    SmithForm s = smith_normal_form(g.entries());

    DiscriminantForm form;
    std::vector<BigInt> orders;
    for (std::size_t k = 0; k < n; ++k) {
        if (s.factors[k] <= 1) continue;
        std::vector<Rational> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = Rational(s.right(i, k), s.factors[k]);
        form.generators.push_back(std::move(x));
        orders.push_back(s.factors[k]);
        form.group.invariant_factors.push_back(s.factors[k]);
        if (s.factors[k] % 2 == 0) ++form.group.two_rank;
    }

    const std::size_t m = form.generators.size();
    form.b.assign(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
        form.q.push_back(mod_rational(rational_pair(g, form.generators[i], form.generators[i]), 2));
        for (std::size_t j = 0; j < m; ++j)
            form.b[i][j] = mod_rational(rational_pair(g, form.generators[i], form.generators[j]), 1);
    }

    // 2-primary generators: odd part of the order times the generator.
    std::vector<std::vector<Rational>> two;
    for (std::size_t i = 0; i < m; ++i) {
        if (orders[i] % 2 != 0) continue;
        BigInt odd = orders[i];
        while (odd % 2 == 0) odd /= 2;
        std::vector<Rational> y = form.generators[i];
        for (auto& c : y) c *= Rational(odd);
        two.push_back(std::move(y));
    }
    form.two_part_integer = true;
    for (std::size_t i = 0; i < two.size() && form.two_part_integer; ++i) {
        if (!is_integer(rational_pair(g, two[i], two[i]))) form.two_part_integer = false;
        for (std::size_t j = i + 1; j < two.size(); ++j)
            if (!is_integer(Rational(2) * rational_pair(g, two[i], two[j]))) form.two_part_integer = false;
    }
    return form;
}

std::vector<Vector> enumerate_norm_vectors(const GramMatrix& g, std::int64_t norm) {
    if (norm <= 0) throw InvariantError("norm must be positive");
    if (!positive_definite(g)) throw IndefiniteLatticeError("enumeration needs a positive definite lattice");
    const std::size_t n = g.rank();

    // Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
    Matrix<Rational> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = g(i, j);
    std::vector<Rational> d(n);
    Matrix<Rational> mu(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = a(i, i);
        for (std::size_t j = i + 1; j < n; ++j) mu(i, j) = a(i, j) / d[i];
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k) a(j, k) -= a(i, j) * a(i, k) / d[i];
    }

    std::vector<Vector> out;
    Vector x(n, 0);
    const Rational bound = norm;

    std::function<void(std::size_t, const Rational&)> search = [&](std::size_t level, const Rational& used) {
        const std::size_t i = level - 1;
        Rational c = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (x[j] != 0) c += mu(i, j) * Rational(x[j]);
        const Rational room = bound - used;
        const double cd = static_cast<double>(c);
        const double r = std::sqrt(std::max(0.0, static_cast<double>(room / d[i])));
        const auto lo = static_cast<std::int64_t>(std::floor(-cd - r)) - 1;
        const auto hi = static_cast<std::int64_t>(std::ceil(-cd + r)) + 1;
        for (std::int64_t t = lo; t <= hi; ++t) {
            Rational s = Rational(t) + c;
            Rational term = d[i] * s * s;
            if (term > room) continue;
            x[i] = t;
            if (i == 0) {
                if (g.norm(x) == norm) out.push_back(x);
            } else {
                search(i, used + term);
            }
        }
        x[i] = 0;
    };
    if (n > 0) search(n, Rational(0));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_six_root(const Vector& v, const GramMatrix& g) {
    check_dims(g, v);
    if (g.norm(v) != 6) return false;
    for (auto p : g.pairings(v))
        if (p % 3 != 0) return false;
    return true;
}

Vector picard_lefschetz(const Vector& v, const Vector& x, const GramMatrix& g) {
    check_dims(g, v);
    check_dims(g, x);
    const std::int64_t vv = g.norm(v);
    if (vv != 2 && vv != -2) throw InvariantError("reflection vector must have square +-2");
    const std::int64_t k = (vv > 0 ? 1 : -1) * g.pair(v, x);
    Vector out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= k * v[i];
    return out;
}

LatticeExpr ambient_lattice() { return parse_lattice_expr("3*<1>+2*U+2*E8"); }

LatticeExpr primitive_lattice() { return parse_lattice_expr("A2+2*U+2*E8"); }

Vector polarization() {
    Vector h(ambient_lattice().rank(), 0);
    h[0] = h[1] = h[2] = 1;
    return h;
}

}  // namespace cubic4
