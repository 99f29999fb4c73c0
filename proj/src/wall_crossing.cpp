#include "cubic4/wall_crossing.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace cubic4 {
namespace {

constexpr std::uint64_t kBoxBudget = 2'000'000;

struct Block {
    Term term;
    std::size_t offset = 0;
    std::size_t rank = 0;
};

std::vector<Block> blocks_of(const LatticeExpr& expr) {
    std::vector<Block> out;
    std::size_t off = 0;
    for (const auto& t : expand(expr)) {
        out.push_back({t, off, t.atom.rank()});
        off += t.atom.rank();
    }
    return out;
}

std::string block_name(const Block& b) {
    std::string s = to_string(b.term.atom);
    if (b.term.scale != 1) s += "(" + std::to_string(b.term.scale) + ")";
    return s + "[" + std::to_string(b.offset) + "]";
}

bool is_two_block(const Block& b) {
    if (b.term.scale == 1 && b.term.atom.kind == AtomKind::A && b.term.atom.param == 1) return true;
    return b.term.atom.kind == AtomKind::Rank1 && b.term.atom.param * b.term.scale == 2;
}

bool is_root_block(const Block& b) {
    if (b.term.scale != 1) return false;
    const AtomKind k = b.term.atom.kind;
    return (k == AtomKind::A && b.term.atom.param >= 2) || k == AtomKind::D || k == AtomKind::E;
}

std::uint64_t box_size(std::size_t rank, int height) {
    std::uint64_t n = 1;
    for (std::size_t k = 0; k < rank; ++k) {
        n *= static_cast<std::uint64_t>(2 * height + 1);
        if (n > kBoxBudget) return kBoxBudget + 1;
    }
    return n;
}

// Square-2 vectors supported on the given coordinates, with every coordinate
// in [-height, height].
std::vector<Vector> box_norm_two(const GramMatrix& g, const std::vector<std::size_t>& coords, int height) {
    const std::size_t n = g.rank();
    const std::size_t k = coords.size();
    std::vector<Vector> out;
    if (k == 0) return out;
    Vector x(n, 0);
    Vector gx(n, 0);
    std::int64_t norm = 0;
    auto shift = [&](std::size_t c, std::int64_t delta) {
        // x += delta e_c
        norm += 2 * delta * gx[c] + delta * delta * g(c, c);
        for (std::size_t r = 0; r < n; ++r) gx[r] += delta * g(r, c);
        x[c] += delta;
    };
    for (auto c : coords) shift(c, -height);
    for (;;) {
        if (norm == 2) out.push_back(x);
        std::size_t p = 0;
        while (p < k && x[coords[p]] == height) {
            shift(coords[p], -2 * height);
            ++p;
        }
        if (p == k) break;
        shift(coords[p], 1);
    }
    return out;
}

std::optional<A2Certificate> first_pair(const GramMatrix& g, const std::vector<Vector>& roots, const std::string& host,
                                        const PairFilter& filter) {
    std::vector<Vector> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = 0; b < sorted.size(); ++b) {
            if (a == b || g.pair(sorted[a], sorted[b]) != -1) continue;
            if (filter && !filter(sorted[a], sorted[b])) continue;
            return A2Certificate{sorted[a], sorted[b], host};
        }
    return std::nullopt;
}

// Cauchy-Schwarz: |x_i| <= sqrt(2 (G^-1)_ii) for square-2 vectors.
bool box_is_complete(const GramMatrix& g, int height) {
    if (g.entries() == block_u()) return true;  // 2ab = 2 forces a = b = +-1
    if (!positive_definite(g)) return false;
    const std::size_t n = g.rank();
    Matrix<Rational> a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = g(i, j);
        a(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a(p, c) == 0) ++p;
        a.swap_rows(c, p);
        const Rational piv = a(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) /= piv;
        for (std::size_t r = 0; r < n; ++r)
            if (r != c && a(r, c) != 0) a.add_row(r, c, -a(r, c));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Rational bound2 = 2 * a(i, n + i);
        if (bound2 >= Rational((height + 1) * (height + 1))) return false;
    }
    return true;
}

std::string fnv1a(const std::vector<std::uint64_t>& words) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : words)
        for (int k = 0; k < 8; ++k) {
            h ^= (w >> (8 * k)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

MoveKind classify_move(const Vector& v, Side side, const VertexData& vertex) {
    const GramMatrix g = gram(side == Side::Plus ? vertex.m_plus0 : vertex.m_minus);
    if (g.norm(v) != 2) throw InvariantError("classify_move needs a vector of square 2");
    bool even = true;
    for (auto p : g.pairings(v))
        if (p % 2 != 0) even = false;
    if (side == Side::Plus) return even ? MoveKind::R : MoveKind::L_inverse;
    return even ? MoveKind::L : MoveKind::R_inverse;
}

std::vector<A2Certificate> structured_a2_pairs(const LatticeExpr& expr) {
    const auto blocks = blocks_of(expr);
    const std::size_t n = expr.rank();
    const GramMatrix g = gram(expr);
    std::vector<A2Certificate> out;
    for (const auto& e : blocks) {
        if (!is_two_block(e)) continue;
        for (const auto& u : blocks) {
            if (u.term.atom.kind != AtomKind::U || u.term.scale != 1) continue;
            Vector v1(n, 0), v2(n, 0);
            v1[e.offset] = 1;
            v1[u.offset] = -1;
            v2[u.offset] = 1;
            v2[u.offset + 1] = 1;
            out.push_back({v1, v2, block_name(e) + "+" + block_name(u)});
        }
    }
    for (const auto& b : blocks) {
        if (!is_root_block(b)) continue;
        for (std::size_t p = 0; p < b.rank; ++p)
            for (std::size_t q = p + 1; q < b.rank; ++q) {
                const std::int64_t gpq = g(b.offset + p, b.offset + q);
                if (gpq != -1 && gpq != 1) continue;
                Vector v1(n, 0), v2(n, 0);
                v1[b.offset + p] = 1;
                v2[b.offset + q] = gpq == -1 ? 1 : -1;
                out.push_back({v1, v2, block_name(b)});
            }
    }
    return out;
}

A2Search search_a2_pair(const LatticeExpr& expr, int height, const PairFilter& filter) {
    A2Search res;
    for (auto& c : structured_a2_pairs(expr))
        if (!filter || filter(c.v1, c.v2)) {
            res.found = std::move(c);
            return res;
        }

    const GramMatrix g = gram(expr);
    const std::size_t n = g.rank();
    if (box_size(n, height) <= kBoxBudget) {
        std::vector<std::size_t> all(n);
        for (std::size_t k = 0; k < n; ++k) all[k] = k;
        res.found = first_pair(g, box_norm_two(g, all, height), "box", filter);
        res.exhaustive = !res.found && box_is_complete(g, height);
        return res;
    }

    // Too large for one box: single summands, then pairs of summands.
    const auto blocks = blocks_of(expr);
    auto coords_of = [&](std::initializer_list<const Block*> bs) {
        std::vector<std::size_t> c;
        for (const Block* b : bs)
            for (std::size_t k = 0; k < b->rank; ++k) c.push_back(b->offset + k);
        return c;
    };
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        if (box_size(blocks[a].rank, height) > kBoxBudget) continue;
        res.found = first_pair(g, box_norm_two(g, coords_of({&blocks[a]}), height), "box " + block_name(blocks[a]), filter);
        if (res.found) return res;
    }
    for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
            if (box_size(blocks[a].rank + blocks[b].rank, height) > kBoxBudget) continue;
            res.found = first_pair(g, box_norm_two(g, coords_of({&blocks[a], &blocks[b]}), height),
                                   "box " + block_name(blocks[a]) + "+" + block_name(blocks[b]), filter);
            if (res.found) return res;
        }
    return res;
}

std::optional<A2Certificate> find_a2_pair(const LatticeExpr& expr, int height) {
    return search_a2_pair(expr, height).found;
}

bool mod3_condition(const Vector& v1, const Vector& v2, const GramMatrix& g) {
    if (v1.size() != g.rank() || v2.size() != g.rank()) throw DimensionError("vector length does not match lattice rank");
    Vector diff(v1.size());
    for (std::size_t k = 0; k < v1.size(); ++k) diff[k] = v1[k] - v2[k];
    for (auto p : g.pairings(diff))
        if (p % 3 != 0) return true;
    return false;
}

bool verify_certificate(const A2Certificate& c, const GramMatrix& g) {
    if (c.v1.size() != g.rank() || c.v2.size() != g.rank()) return false;
    return g.norm(c.v1) == 2 && g.norm(c.v2) == 2 && g.pair(c.v1, c.v2) == -1 && mod3_condition(c.v1, c.v2, g);
}

std::optional<Refutation> refute_a2_mod2(const LatticeExpr& expr) {
    const GramMatrix g = gram(expr);
    const std::size_t n = g.rank();
    if (n > kMaxRefutationRank) throw DimensionError("residue sweep limited to rank " + std::to_string(kMaxRefutationRank));

    // Gray-code walk over {0,1}^n tracking the norm of the representative.
    std::vector<std::uint64_t> candidates;
    Vector x(n, 0), gx(n, 0);
    std::int64_t norm = 0;
    std::uint64_t mask = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 0; step < total; ++step) {
        if (step > 0) {
            const std::size_t c = static_cast<std::size_t>(__builtin_ctzll(step));
            const std::int64_t delta = x[c] ? -1 : 1;
            norm += 2 * delta * gx[c] + g(c, c);
            for (std::size_t r = 0; r < n; ++r) gx[r] += delta * g(r, c);
            x[c] += delta;
            mask ^= std::uint64_t{1} << c;
        }
        if (((norm % 4) + 4) % 4 == 2) candidates.push_back(mask);
    }

    // GF(2) span of the candidates, then evenness of the form on it.
    std::vector<std::uint64_t> basis;
    for (auto c : candidates) {
        std::uint64_t v = c;
        for (auto b : basis) v = std::min(v, v ^ b);
        if (v) {
            basis.push_back(v);
            std::sort(basis.rbegin(), basis.rend());
        }
    }
    auto pair_mod2 = [&](std::uint64_t a, std::uint64_t b) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (a >> i & 1)
                for (std::size_t j = 0; j < n; ++j)
                    if (b >> j & 1) s += g(i, j);
        return ((s % 2) + 2) % 2;
    };
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (pair_mod2(basis[a], basis[b]) != 0) return std::nullopt;

    std::vector<std::uint64_t> sorted = candidates;
    std::sort(sorted.begin(), sorted.end());
    Refutation r;
    r.rank = n;
    r.classes_checked = total;
    r.candidates = candidates.size();
    r.span_dimension = basis.size();
    r.digest = fnv1a(sorted);
    return r;
}

std::string to_string(CuspVerdict::Kind k) {
    switch (k) {
        case CuspVerdict::Kind::Yes: return "yes";
        case CuspVerdict::Kind::No: return "no";
        case CuspVerdict::Kind::Unknown: return "unknown";
    }
    return "?";
}

CuspVerdict cusp_stratum(const Atlas& atlas, const VertexId& a, const VertexId& b, int height) {
    if (atlas.kind != GraphKind::K4) throw Error("cusp strata need the K4 atlas");
    const Edge* e = atlas.find_edge(a, b);
    if (!e) throw Error(to_string(a) + " and " + to_string(b) + " are not adjacent");
    CuspVerdict v;
    v.from = e->from;
    v.to = e->to;
    v.wall = e->move;
    const VertexData& lower = atlas.at(e->to);
    v.searched = e->move == MoveKind::R ? lower.m_minus : lower.m_plus0;
    const GramMatrix g = gram(v.searched);
    const PairFilter filter = [&g](const Vector& x, const Vector& y) { return mod3_condition(x, y, g); };

    A2Search s = search_a2_pair(v.searched, height, filter);
    if (s.found) {
        v.kind = CuspVerdict::Kind::Yes;
        v.certificate = std::move(s.found);
        return v;
    }
    if (v.searched.rank() <= kMaxRefutationRank) v.refutation = refute_a2_mod2(v.searched);
    v.kind = v.refutation ? CuspVerdict::Kind::No : CuspVerdict::Kind::Unknown;
    return v;
}

std::string to_json(const CuspVerdict& v, int indent) {
    nlohmann::ordered_json j;
    j["from"] = to_string(v.from);
    j["to"] = to_string(v.to);
    j["wall"] = to_string(v.wall);
    j["lattice"] = to_string(v.searched);
    j["verdict"] = to_string(v.kind);
    if (v.certificate) {
        j["certificate"] = {{"v1", v.certificate->v1}, {"v2", v.certificate->v2}, {"host", v.certificate->host}};
    }
    if (v.refutation) {
        j["refutation"] = {{"rank", v.refutation->rank},
                           {"classes_checked", v.refutation->classes_checked},
                           {"candidate_classes", v.refutation->candidates},
                           {"span_dimension", v.refutation->span_dimension},
                           {"digest", v.refutation->digest}};
    }
    return j.dump(indent);
}

}  // namespace cubic4
