// Acceptance run: one PASS/FAIL line per criterion.
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cubic4/atlas.hpp"
#include "cubic4/descriptor.hpp"
#include "cubic4/lattice.hpp"
#include "cubic4/propagate.hpp"
#include "cubic4/ramified_sum.hpp"
#include "cubic4/snf.hpp"
#include "cubic4/surgery.hpp"
#include "cubic4/wall_crossing.hpp"
#include "oracles.hpp"

using namespace cubic4;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

const Atlas& k4() {
    static const Atlas a = build_atlas(GraphKind::K4);
    return a;
}

const CuspResults& cusps() {
    static const CuspResults c = compute_cusp_results(k4());
    return c;
}

void expect(Outcome& o, bool cond, const std::string& what) {
    if (cond) return;
    if (o.ok) o.detail.clear();
    o.ok = false;
    if (o.detail.size() < 400) o.detail += what + "; ";
}

Outcome cardinalities() {
    Outcome o;
    std::set<std::pair<int, int>> plus, minus;
    for (int i = 0; i <= 12; ++i)
        for (int j = 0; j <= 12; ++j) {
            if (table_plus0(i, j)) plus.insert({i, j});
            if (table_minus(i, j)) minus.insert({i, j});
        }
    int special = 0, principal = 0;
    for (const auto& v : k4().vertices) (v.id.special ? special : principal) += 1;
    expect(o, plus == minus, "table domains differ");
    expect(o, plus.size() == 64, "M+0 table domain has " + std::to_string(plus.size()));
    expect(o, principal == 64 && special == 11, "vertex split wrong");
    expect(o, k4().vertices.size() == 75, "vertex count " + std::to_string(k4().vertices.size()));
    if (o.ok) o.detail = "75 = 64 + 11, domains agree";
    return o;
}

Outcome lattice_consistency() {
    Outcome o;
    int good = 0;
    for (const auto& v : k4().vertices) {
        const std::string id = to_string(v.id);
        const GramMatrix gp = gram(v.m_plus0), gm = gram(v.m_minus);
        const auto dp = discriminant_group(gp), dm = discriminant_group(gm);
        bool ok = true;
        auto need = [&](bool c, const std::string& w) {
            expect(o, c, id + ": " + w);
            ok = ok && c;
        };
        need(gp.rank() + gm.rank() == 22, "rank sum");
        need(signature(gp) == Signature{gp.rank() - 1, 1}, "M+0 signature");
        need(signature(gm) == Signature{gm.rank() - 1, 1}, "M- signature");
        need(dp.two_rank == dm.two_rank && static_cast<int>(dm.two_rank) == 11 - v.id.i - v.id.j, "two-rank");
        need(static_cast<int>(gm.rank()) == 11 - v.id.i + v.id.j, "rank M-");
        // Independent determinant: sign (-1)^neg and |det| = |discriminant|.
        const BigInt det = oracle::det_rational(gm.entries());
        need(det < 0 && -det == dm.order(), "determinant");
        good += ok;
    }
    if (o.ok) o.detail = std::to_string(good) + "/75 vertices";
    return o;
}

Outcome type_classifier() {
    Outcome o;
    std::set<VertexId> principal;
    int special_one = 0;
    for (const auto& v : k4().vertices) {
        try {
            const bool one = classify_type(v) == LatticeType::I;
            if (v.id.special) special_one += one;
            else if (one) principal.insert(v.id);
        } catch (const InvariantError& e) {
            expect(o, false, e.what());
        }
    }
    const std::set<VertexId> want = {{10, 1, false}, {7, 2, false}, {6, 5, false}, {3, 6, false}, {2, 9, false}};
    expect(o, special_one == 11, "special type I count " + std::to_string(special_one));
    expect(o, principal == want, "principal type I set differs");
    if (o.ok) o.detail = "11 special + 5 principal type I, M+0 and M- agree on 75";
    return o;
}

Outcome root_counts() {
    Outcome o;
    const std::map<std::string, std::size_t> want = {{"A1", 2}, {"A2", 6}, {"D4", 24}, {"E6", 72}, {"E7", 126}, {"E8", 240}};
    std::ostringstream d;
    for (const auto& [name, n] : want) {
        const GramMatrix g = gram(parse_lattice_expr(name));
        const std::size_t lib = enumerate_norm_vectors(g, 2).size();
        const std::size_t box = oracle::box_search(g.entries(), 4, 2).size();
        expect(o, lib == n && box == n, name + ": library " + std::to_string(lib) + ", box " + std::to_string(box));
        d << name << "=" << lib << " ";
    }
    if (o.ok) o.detail = d.str() + "(box [-4,4]^rank agrees)";
    return o;
}

bool oracle_certificate(const A2Certificate& c, const IntMatrix& g) {
    if (oracle::form(g, c.v1, c.v1) != 2 || oracle::form(g, c.v2, c.v2) != 2 || oracle::form(g, c.v1, c.v2) != -1)
        return false;
    Vector diff(c.v1.size());
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = c.v1[k] - c.v2[k];
    for (std::size_t k = 0; k < diff.size(); ++k) {
        Vector e(diff.size(), 0);
        e[k] = 1;
        if (oracle::form(g, diff, e) % 3 != 0) return true;
    }
    return false;
}

Outcome cusp_criterion() {
    Outcome o;
    int yes = 0, no = 0;
    std::set<VertexId> no_targets;
    for (const auto& e : k4().edges) {
        if (e.move != MoveKind::R || e.provenance != Provenance::Asserted) continue;
        const CuspVerdict& v = cusps().at({e.from, e.to});
        const std::string id = to_string(e.from) + "->" + to_string(e.to);
        const bool exception = e.to == VertexId{10, 1, false} || e.to == VertexId{2, 1, true};
        if (exception) {
            expect(o, v.kind == CuspVerdict::Kind::No && v.refutation.has_value(), id + " not refuted");
            ++no;
            no_targets.insert(e.to);
        } else {
            expect(o, v.kind == CuspVerdict::Kind::Yes && v.certificate &&
                          oracle_certificate(*v.certificate, gram(v.searched).entries()),
                   id + " lacks a verified certificate");
            ++yes;
        }
    }
    expect(o, no_targets.size() == 2, "exception edges missing");
    const A2Search u = search_a2_pair(parse_lattice_expr("U"));
    expect(o, !u.found && u.exhaustive, "U search not exhaustively empty");
    expect(o, !oracle::a2_pair_exists(gram(parse_lattice_expr("U")).entries(), 10), "oracle finds a pair in U");
    if (o.ok) o.detail = std::to_string(yes) + " yes, " + std::to_string(no) + " no; U has no pair";
    return o;
}

Outcome main_theorem() {
    Outcome o;
    const PropagationTable t = propagate(k4(), cusps());
    expect(o, t.size() == 75, "assignments " + std::to_string(t.size()));
    for (const auto& v : k4().vertices) {
        const std::string id = to_string(v.id);
        auto it = t.find(v.id);
        if (it == t.end()) {
            expect(o, false, id + " missing");
            continue;
        }
        const RealLocusDescriptor& d = it->second.descriptor;
        if (v.id == VertexId{1, 0, true}) {
            RealLocusDescriptor want = RealLocusDescriptor::projective(4);
            want.disjoint_spheres = 1;
            expect(o, d == want, id + " is " + to_string(d));
        } else {
            expect(o, d == principal_descriptor(v.id.i, v.id.j), id + " is " + to_string(d));
        }
        // (r,d) straight from chi and b*.
        const int chi = d.euler(), b = d.betti_total();
        expect(o, (23 - chi) % 2 == 0 && (23 - chi) / 2 == v.r && (27 - b) / 2 == v.d, id + " (r,d) mismatch");
    }
    if (o.ok) o.detail = "75 descriptors, (r,d) agree";
    return o;
}

Outcome spiral() {
    Outcome o;
    const LinkingMatrix m(parse_matrix("[[-4,2],[2,-2]]"));
    const auto want = std::vector<BigInt>{2, 2};
    expect(o, h1_from_linking(m).torsion == want && h1_from_linking(m).free_rank == 0, "H1 of first diagram");
    const auto pi = abelianization(parse_presentation({"a", "b", "c"}, {"a^2=b^4=c^6=abc"}));
    expect(o, pi.torsion == want && pi.free_rank == 0, "abelianization");
    const SpiralReport r = spiral_scenario();
    for (const auto& s : r.steps) expect(o, s.ok, "step '" + s.title + "' failed");
    for (const auto& d : r.diagrams) {
        const auto dd = oracle::determinantal_divisors(d.entries());
        BigInt order = 1;
        for (const auto& x : dd) order *= x;
        expect(o, order == 4 && h1_from_linking(d) == h1_from_linking(m), "diagram " + to_string(d.entries()));
    }
    expect(o, r.routes_agree, "routes disagree");
    if (o.ok) o.detail = "Z/2 + Z/2 on " + std::to_string(r.diagrams.size()) + " diagrams and via pi1";
    return o;
}

Outcome kirby() {
    Outcome o;
    std::mt19937_64 rng(0);
    int cases = 0;
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = 1 + rng() % 6;
        const LinkingMatrix m(oracle::random_symmetric(rng, n, -9, 9));
        const AbelianGroup h = h1_from_linking(m);
        LinkingMatrix s = m;
        if (n >= 2)
            for (int t = 0; t < 10; ++t) {
                const std::size_t i = rng() % n, j = (i + 1 + rng() % (n - 1)) % n;
                s = slide(s, i, j, rng() % 2 ? 1 : -1);
            }
        // General congruence by an oracle unimodular matrix.
        const IntMatrix u = oracle::random_unimodular(rng, n);
        const LinkingMatrix c(u.transposed() * m.entries() * u);
        LinkingMatrix b = blow_up(s, rng() % 2 ? 1 : -1);
        for (int t = 0; t < 3; ++t) b = slide(b, rng() % n, n, rng() % 2 ? 1 : -1);
        const LinkingMatrix d = blow_down(b, n);
        const bool ok = h1_from_linking(s) == h && h1_from_linking(c) == h && h1_from_linking(b) == h &&
                        h1_from_linking(d) == h && oracle::det_rational(d.entries()) == oracle::det_rational(m.entries());
        expect(o, ok, "case " + std::to_string(k) + ": " + to_string(m.entries()));
        cases += ok;
    }
    if (o.ok) o.detail = std::to_string(cases) + " random cases";
    return o;
}

Outcome perturbation() {
    Outcome o;
    const auto chi = euler_perturbation({1, 1, 0});
    const auto r = 11 + (1 - chi) / 2;
    expect(o, chi == 3, "chi = " + std::to_string(chi));
    expect(o, r == k4().at({1, 0, false}).r && r == k4().at({2, 1, true}).r && r == 10, "r column");
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j)
            for (int p = 1; p <= 3; ++p) {
                const auto d = principal_descriptor(i, j);
                const auto e = add_unknotted_handle(d, p, 4 - p);
                // Descriptor algebra: S1xS3 adds -2, S^p x S^q adds (1+(-1)^p)(1+(-1)^q) - 2.
                const int handle_chi = (1 + (p % 2 ? -1 : 1)) * (1 + ((4 - p) % 2 ? -1 : 1)) - 2;
                expect(o, e.betti_total() - d.betti_total() == 4, "b* change");
                expect(o, e.euler() - d.euler() == handle_chi - 2, "chi change");
                if (p == 2) expect(o, e.euler() - d.euler() == 2 * 1 - 2, "(2,2) chi change");
            }
    if (o.ok) o.detail = "chi = 3, r = 10; handle adds (+4, descriptor chi)";
    return o;
}

Outcome handle_counts_check() {
    Outcome o;
    int checked = 0;
    for (int n = 0; n <= 12; ++n) {
        const auto row = oracle::pascal_row(n + 1);
        for (int k : {1, 3}) {
            if (2 * k < n + 1) {
                const auto h = handle_counts(n, k);
                expect(o, h.value == row[static_cast<std::size_t>(k)], "n=" + std::to_string(n) + " k=" + std::to_string(k));
                if (k == 1) expect(o, h.value == n + 1, "n+1 at n=" + std::to_string(n));
                ++checked;
            } else {
                bool threw = false;
                try {
                    handle_counts(n, k);
                } catch (const InvariantError&) {
                    threw = true;
                }
                expect(o, threw, "out-of-range n=" + std::to_string(n) + " k=" + std::to_string(k) + " accepted");
            }
        }
    }
    if (o.ok) o.detail = std::to_string(checked) + " in-range values; k=1 for n>=2, k=3 for 6<=n<=12";
    return o;
}

Outcome snf_contract() {
    Outcome o;
    std::mt19937_64 rng(1);
    int cases = 0;
    for (int k = 0; k < 1000; ++k) {
        const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        IntMatrix m = oracle::random_matrix(rng, r, c, -20, 20);
        if (k % 4 == 0 && r >= 2) m = oracle::random_unimodular(rng, r) * oracle::random_matrix(rng, r, c, -1, 1);
        const SmithForm s = smith_normal_form(m);
        bool ok = true;
        const BigMatrix d = s.left * to_big(m) * s.right;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) ok = ok && d(i, j) == (i == j ? s.factors[i] : BigInt(0));
        const BigInt dl = oracle::det_rational(s.left), dr = oracle::det_rational(s.right);
        ok = ok && (dl == 1 || dl == -1) && (dr == 1 || dr == -1);
        for (std::size_t i = 0; i + 1 < s.factors.size(); ++i) {
            const BigInt& a = s.factors[i];
            const BigInt& b = s.factors[i + 1];
            ok = ok && a >= 0 && (a == 0 ? b == 0 : b % a == 0);
        }
        if (r == c) {
            const BigInt det = oracle::det_rational(m);
            BigInt prod = 1;
            for (const auto& f : s.factors) prod *= f;
            ok = ok && (det < 0 ? -det : det) == prod;
            if (det != 0) ok = ok && cokernel(m).torsion_order() == (det < 0 ? -det : det);
        }
        expect(o, ok, "case " + std::to_string(k) + ": " + to_string(m));
        cases += ok;
    }
    if (o.ok) o.detail = std::to_string(cases) + " random matrices up to 8x8";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"atlas cardinalities", cardinalities},
        {"per-vertex lattice consistency", lattice_consistency},
        {"type classifier", type_classifier},
        {"root enumeration vs box oracle", root_counts},
        {"cusp criterion on R-walls", cusp_criterion},
        {"main theorem table", main_theorem},
        {"spiral surgery computation", spiral},
        {"Kirby move invariance", kirby},
        {"perturbation arithmetic", perturbation},
        {"handle counts", handle_counts_check},
        {"Smith normal form contract", snf_contract},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome out;
        try {
            out = criteria[k].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        failed += !out.ok;
        std::printf("[%s] %zu. %s: %s\n", out.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), out.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
