#include "cubic4/surgery.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cubic4/snf.hpp"

namespace cubic4 {

LinkingMatrix::LinkingMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.symmetric()) throw InvariantError("linking matrix must be square and symmetric");
}

BigInt AbelianGroup::torsion_order() const {
    BigInt n = 1;
    for (const auto& t : torsion) n *= t;
    return n;
}

std::string AbelianGroup::to_string() const {
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < free_rank; ++k) parts.push_back("Z");
    for (const auto& t : torsion) parts.push_back("Z/" + t.str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) out += " + " + parts[k];
    return out;
}

AbelianGroup cokernel(const IntMatrix& m) {
    // Cokernel of Z^cols -> Z^rows.
    AbelianGroup g;
    const SmithForm s = smith_normal_form(m);
    std::size_t nonzero = 0;
    for (const auto& f : s.factors) {
        if (f == 0) continue;
        ++nonzero;
        if (f > 1) g.torsion.push_back(f);
    }
    g.free_rank = m.rows() - nonzero;
    return g;
}

AbelianGroup h1_from_linking(const LinkingMatrix& m) { return cokernel(m.entries()); }

LinkingMatrix blow_up(const LinkingMatrix& m, int sign) {
    if (sign != 1 && sign != -1) throw InvariantError("blow-up sign must be +-1");
    return LinkingMatrix(block_diagonal({m.entries(), IntMatrix{{sign}}}));
}

LinkingMatrix slide(const LinkingMatrix& m, std::size_t i, std::size_t j, int sign) {
    const std::size_t n = m.components();
    if (i >= n || j >= n) throw DimensionError("slide index out of range");
    if (i == j) throw InvariantError("a component cannot slide over itself");
    if (sign != 1 && sign != -1) throw InvariantError("slide sign must be +-1");
    IntMatrix a = m.entries();
    a.add_col(i, j, sign);
    a.add_row(i, j, sign);
    return LinkingMatrix(std::move(a));
}

LinkingMatrix blow_down(const LinkingMatrix& m, std::size_t k) {
    const std::size_t n = m.components();
    if (k >= n) throw DimensionError("blow-down index out of range");
    const std::int64_t e = m.entries()(k, k);
    if (e != 1 && e != -1) throw InvariantError("blow-down needs a +-1 framed component");
    LinkingMatrix cur = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        // Each slide of i over k moves m(i,k) by sign * e toward zero.
        while (cur.entries()(i, k) != 0) {
            const int sign = (cur.entries()(i, k) > 0) == (e > 0) ? -1 : 1;
            cur = slide(cur, i, k, sign);
        }
    }
    IntMatrix out(n - 1, n - 1);
    for (std::size_t a = 0, ra = 0; a < n; ++a) {
        if (a == k) continue;
        for (std::size_t b = 0, rb = 0; b < n; ++b) {
            if (b == k) continue;
            out(ra, rb++) = cur.entries()(a, b);
        }
        ++ra;
    }
    return LinkingMatrix(std::move(out));
}

namespace {

std::vector<std::int64_t> parse_word(const std::string& w, const std::vector<std::string>& gens, std::size_t base) {
    std::vector<std::int64_t> v(gens.size(), 0);
    std::size_t p = 0;
    auto skip = [&] {
        while (p < w.size() && std::isspace(static_cast<unsigned char>(w[p]))) ++p;
    };
    skip();
    if (p < w.size() && w[p] == '1') {
        ++p;
        skip();
        if (p != w.size()) throw ParseError("trailing input after identity", base + p);
        return v;
    }
    while (p < w.size()) {
        const std::string letter(1, w[p]);
        auto it = std::find(gens.begin(), gens.end(), letter);
        if (it == gens.end()) throw ParseError("unknown generator '" + letter + "'", base + p);
        ++p;
        std::int64_t e = 1;
        skip();
        if (p < w.size() && w[p] == '^') {
            ++p;
            skip();
            bool neg = false;
            if (p < w.size() && w[p] == '-') {
                neg = true;
                ++p;
            }
            if (p >= w.size() || !std::isdigit(static_cast<unsigned char>(w[p])))
                throw ParseError("expected exponent", base + p);
            e = 0;
            while (p < w.size() && std::isdigit(static_cast<unsigned char>(w[p]))) e = e * 10 + (w[p++] - '0');
            if (neg) e = -e;
        }
        v[static_cast<std::size_t>(it - gens.begin())] += e;
        skip();
    }
    return v;
}

}  // namespace

GroupPresentation parse_presentation(const std::vector<std::string>& generators,
                                     const std::vector<std::string>& relations) {
    for (const auto& g : generators)
        if (g.size() != 1 || !std::isalpha(static_cast<unsigned char>(g[0])))
            throw ParseError("generators must be single letters", 0);
    GroupPresentation p;
    p.generators = generators;
    for (const auto& rel : relations) {
        std::vector<std::string> members;
        std::vector<std::size_t> starts;
        std::size_t start = 0;
        for (std::size_t k = 0; k <= rel.size(); ++k)
            if (k == rel.size() || rel[k] == '=') {
                members.push_back(rel.substr(start, k - start));
                starts.push_back(start);
                start = k + 1;
            }
        std::vector<std::vector<std::int64_t>> vs;
        for (std::size_t k = 0; k < members.size(); ++k) vs.push_back(parse_word(members[k], generators, starts[k]));
        if (vs.size() == 1) {
            p.relations.push_back(vs[0]);
            p.words.push_back(rel);
            continue;
        }
        for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
            std::vector<std::int64_t> r(generators.size());
            for (std::size_t g = 0; g < r.size(); ++g) r[g] = vs[k][g] - vs.back()[g];
            p.relations.push_back(r);
            p.words.push_back(members[k] + "=" + members.back());
        }
    }
    return p;
}

GroupPresentation presentation_from_linking(const LinkingMatrix& m) {
    GroupPresentation p;
    const std::size_t n = m.components();
    for (std::size_t k = 0; k < n; ++k) p.generators.push_back("x" + std::to_string(k + 1));
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::int64_t> row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = m.entries()(r, c);
        p.relations.push_back(row);
        p.words.push_back("meridian relation of component " + std::to_string(r + 1));
    }
    return p;
}

AbelianGroup abelianization(const GroupPresentation& p) {
    const std::size_t g = p.generators.size();
    if (p.relations.empty()) {
        AbelianGroup a;
        a.free_rank = g;
        return a;
    }
    // Rows are relations; the cokernel of the transpose is the quotient of Z^g.
    IntMatrix m(g, p.relations.size());
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        if (p.relations[r].size() != g) throw DimensionError("relation length differs from generator count");
        for (std::size_t c = 0; c < g; ++c) m(c, r) = p.relations[r][c];
    }
    return cokernel(m);
}

std::int64_t torus_framing(std::int64_t p, std::int64_t q) { return p * q; }

std::int64_t lifted_framing(std::int64_t n) { return n - 2; }

bool SpiralReport::ok() const {
    return routes_agree && std::all_of(steps.begin(), steps.end(), [](const SpiralStep& s) { return s.ok; });
}

std::string SpiralReport::to_text() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < steps.size(); ++k)
        os << k + 1 << ". [" << (steps[k].ok ? "ok" : "FAILED") << "] " << steps[k].title << "\n   " << steps[k].detail
           << "\n";
    os << "H1 = " << h1.to_string() << (routes_agree ? " (two routes agree)" : " (routes disagree)") << "\n";
    return os.str();
}

SpiralReport spiral_scenario() {
    SpiralReport rep;
    auto add = [&](std::string title, std::string detail, bool ok) {
        rep.steps.push_back({std::move(title), std::move(detail), ok});
    };

    // [L] = [l2] - 3[l1] in the basis ([l1], [l2]).
    const std::int64_t lp = -3, lq = 1;
    auto allowed = [](std::int64_t x) { return x == 1 || x == -1 || x == 3 || x == -3; };
    add("class of L", "[L] = [l2] - 3[l1]; coefficients in {+-1,+-3} and coprime",
        allowed(lp) && allowed(lq) && std::gcd(lp, lq) == 1);

    // Solve a [m+] + b (-[l1]) = [L] with [m+] = [l1] + [l2].
    const std::int64_t a = lq;
    const std::int64_t b = a - lp;
    add("L in the positive basis ([m+], -[l1])", "coefficients (" + std::to_string(a) + "," + std::to_string(b) +
                                                     "), so L is a (" + std::to_string(b) + "," + std::to_string(a) +
                                                     ")-torus knot with torus framing " +
                                                     std::to_string(torus_framing(b, a)),
        a == 1 && b == 4 && torus_framing(b, a) == 4);

    // [m-] = -[m+] + 2[l1]: surgery coefficient 2 / (-1) along K.
    const std::int64_t mm = -1, ml = 2;
    const std::int64_t framing = ml / mm;
    add("surgery along K", "[m-] = -[m+] + 2[l1] gives framing " + std::to_string(framing) +
                               "; the double D(P+) uses framing 0",
        framing == -2 && ml % mm == 0);

    const std::int64_t n1 = lifted_framing(framing), n2 = lifted_framing(0);
    const std::int64_t link = 2;  // K1, K2 form a (4,2)-torus link
    add("lift to the (4,2)-torus link", "components are (2,1)-torus knots (torus framing " +
                                            std::to_string(torus_framing(2, 1)) + "); n1 = " + std::to_string(n1) +
                                            ", n2 = " + std::to_string(n2) + ", lk(K1,K2) = " + std::to_string(link),
        n1 == -4 && n2 == -2);

    LinkingMatrix m0(IntMatrix{{n1, link}, {link, n2}});
    rep.diagrams.push_back(m0);
    const AbelianGroup h0 = h1_from_linking(m0);
    add("first diagram", to_string(m0.entries()) + ", H1 = " + h0.to_string(), h0.torsion == std::vector<BigInt>{2, 2});

    // Blow up a (-1) unknot A linking both K1 and K2, then a second one B.
    LinkingMatrix m1 = blow_up(m0, -1);
    m1 = slide(m1, 0, 2, 1);
    m1 = slide(m1, 1, 2, 1);
    rep.diagrams.push_back(m1);
    const AbelianGroup h1a = h1_from_linking(m1);
    add("blow-up A, slide K1 and K2 over A", to_string(m1.entries()) + ", H1 = " + h1a.to_string(), h1a == h0);

    LinkingMatrix m2 = blow_up(m1, -1);
    m2 = slide(m2, 0, 3, 1);
    m2 = slide(m2, 1, 3, 1);
    m2 = slide(m2, 2, 3, -1);
    rep.diagrams.push_back(m2);
    const AbelianGroup h2 = h1_from_linking(m2);
    const IntMatrix& f = m2.entries();
    const bool star = f(3, 3) == -1 && f(0, 1) == 0 && f(0, 2) == 0 && f(1, 2) == 0 && f(0, 3) != 0 &&
                      f(1, 3) != 0 && f(2, 3) != 0;
    std::vector<std::int64_t> leaves = {f(0, 0), f(1, 1), f(2, 2)};
    std::sort(leaves.begin(), leaves.end());
    add("blow-up B, slide K1, K2, A over B",
        to_string(f) + ": (-1) center with unlinked leaves " + std::to_string(leaves[0]) + "," +
            std::to_string(leaves[1]) + "," + std::to_string(leaves[2]) + "; H1 = " + h2.to_string(),
        h2 == h0 && star && leaves == std::vector<std::int64_t>{-6, -4, -2});

    // Undo both blow-ups: must return a matrix with the same homology.
    const LinkingMatrix back = blow_down(blow_down(m2, 3), 2);
    const AbelianGroup hb = h1_from_linking(back);
    add("blow down both", to_string(back.entries()) + ", H1 = " + hb.to_string(), hb == h0);

    const GroupPresentation pi1 = parse_presentation({"a", "b", "c"}, {"a^2=b^4=c^6=abc"});
    const AbelianGroup ab = abelianization(pi1);
    add("abelianized fundamental group", "<a,b,c | a^2=b^4=c^6=abc> -> " + ab.to_string(), ab == h0);

    const AbelianGroup via_pres = abelianization(presentation_from_linking(m2));
    add("presentation of the final diagram", "abelianization " + via_pres.to_string(), via_pres == h2);

    rep.h1 = h2;
    rep.routes_agree = ab == h2;
    return rep;
}

}  // namespace cubic4
