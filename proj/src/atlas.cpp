#include "cubic4/atlas.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

#include "cubic4/errors.hpp"
#include "cubic4/lattice.hpp"

namespace cubic4 {
namespace {

struct Row {
    const char* head;
    int base;
    const char* tail;
};

// M+0 of C^{i,j} is head + (base - j) A1 + tail, indexed by i.
constexpr Row kPlusRows[] = {
    {"<-2>", 9, "<6>"},      {"<-2>", 9, "A2"},          {"U", 9, "A2"},
    {"U", 6, "A2+D4"},       {"<-2>", 5, "<6>+E8"},      {"<-2>", 5, "A2+E8"},
    {"U", 5, "A2+E8"},       {"U", 2, "A2+D4+E8"},       {"<-2>", 1, "<6>+2*E8"},
    {"<-2>", 1, "A2+2*E8"},  {"U", 1, "A2+2*E8"},
};

// M- of C^{i,j} is head + (base - i) A1 + tail, indexed by j.
constexpr Row kMinusRows[] = {
    {"<-2>", 10, ""}, {"U", 10, ""},    {"U", 7, "D4"},     {"<-2>", 6, "E7"},     {"<-2>", 6, "E8"},
    {"U", 6, "E8"},   {"U", 3, "D4+E8"}, {"<-2>", 2, "E7+E8"}, {"<-2>", 2, "2*E8"}, {"U", 2, "2*E8"},
};

std::string assemble(const Row& row, int a1) {
    std::string s = row.head;
    if (a1 == 1) s += "+A1";
    if (a1 > 1) s += "+" + std::to_string(a1) + "*A1";
    if (*row.tail) s += std::string("+") + row.tail;
    return s;
}

VertexData make_vertex(const VertexId& id, const std::string& plus, const std::string& minus) {
    VertexData v;
    v.id = id;
    v.m_plus0 = parse_lattice_expr(plus);
    v.m_minus = parse_lattice_expr(minus);
    v.r = static_cast<int>(v.m_minus.rank());
    v.d = static_cast<int>(discriminant_group(gram(v.m_minus)).two_rank);
    v.type_one = discriminant_form(gram(v.m_minus)).two_part_integer;
    return v;
}

void add_edge(Atlas& a, VertexId from, VertexId to, MoveKind m, Provenance p, std::string note) {
    a.edges.push_back(Edge{from, to, m, p, std::move(note)});
}

void add_edges(Atlas& a) {
    auto has = [&](int i, int j) { return a.find(VertexId{i, j, false}) != nullptr; };
    for (const auto& v : a.vertices) {
        if (v.id.special) continue;
        const int i = v.id.i, j = v.id.j;
        if (has(i + 1, j)) {
            const bool left = j == 0;
            add_edge(a, v.id, {i + 1, j, false}, MoveKind::L,
                     left ? Provenance::Asserted : Provenance::GridInferred,
                     left ? "left-edge induction" : "grid adjacency");
        }
        if (has(i, j + 1)) add_edge(a, v.id, {i, j + 1, false}, MoveKind::R, Provenance::Asserted, "R-move chain");
    }
    for (const auto& row : special_rows()) {
        const VertexId s = row.id;
        if (s.i == 1 && s.j == 0) {
            add_edge(a, {0, 0, false}, s, MoveKind::L, Provenance::Asserted, "base case, birth of a sphere");
        } else if (s.i == 9 && s.j == 0) {
            add_edge(a, {8, 0, false}, s, MoveKind::L, Provenance::Asserted, "left-edge induction");
        } else {
            add_edge(a, {s.i, s.j - 1, false}, s, MoveKind::R, Provenance::Asserted,
                     s.i == 2 && s.j == 1 ? "terminal attachment" : "reached from C^{i,0} by R-moves");
        }
    }
    std::sort(a.edges.begin(), a.edges.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.from, x.to) < std::tie(y.from, y.to);
    });
}

}  // namespace

std::string to_string(const VertexId& v) {
    return "C" + std::to_string(v.i) + "_" + std::to_string(v.j) + (v.special ? "_I" : "");
}

VertexId parse_vertex_id(const std::string& text) {
    std::size_t p = 0;
    auto digits = [&]() {
        const std::size_t start = p;
        int v = 0;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            v = v * 10 + (text[p] - '0');
            if (v > 1000) throw ParseError("vertex coordinate too large", start);
            ++p;
        }
        if (p == start) throw ParseError("expected vertex coordinate", p);
        return v;
    };
    if (text.empty() || text[0] != 'C') throw ParseError("vertex id must start with 'C'", 0);
    ++p;
    VertexId id;
    id.i = digits();
    if (p >= text.size() || (text[p] != '_' && text[p] != ',')) throw ParseError("expected '_' or ','", p);
    ++p;
    id.j = digits();
    if (p < text.size()) {
        if (text.substr(p) != "_I") throw ParseError("unexpected vertex suffix", p);
        id.special = true;
    }
    return id;
}

std::string to_string(MoveKind m) {
    switch (m) {
        case MoveKind::L: return "L";
        case MoveKind::R: return "R";
        case MoveKind::L_inverse: return "L_inverse";
        case MoveKind::R_inverse: return "R_inverse";
    }
    return "?";
}

std::string to_string(Provenance p) {
    return p == Provenance::Asserted ? "asserted" : "grid-inferred";
}

std::string to_string(LatticeType t) { return t == LatticeType::I ? "I" : "II"; }

std::string to_string(GraphKind k) { return k == GraphKind::K4 ? "k4" : "k3"; }

GraphKind parse_graph_kind(const std::string& text) {
    if (text == "k4" || text == "K4") return GraphKind::K4;
    if (text == "k3" || text == "K3") return GraphKind::K3;
    throw Error("unknown graph kind '" + text + "'");
}

int SurfaceDescriptor::euler() const {
    int chi = 0;
    for (int g : genera) chi += 2 - 2 * g;
    return chi;
}

int SurfaceDescriptor::betti_total() const {
    int b = 0;
    for (int g : genera) b += 2 + 2 * g;
    return b;
}

std::string SurfaceDescriptor::to_string() const {
    std::vector<int> sorted = genera;
    std::sort(sorted.rbegin(), sorted.rend());
    std::string out;
    std::size_t k = 0;
    while (k < sorted.size()) {
        std::size_t e = k;
        while (e < sorted.size() && sorted[e] == sorted[k]) ++e;
        const std::size_t count = e - k;
        if (!out.empty()) out += " u ";
        std::string name = sorted[k] == 0 ? "S2" : sorted[k] == 1 ? "T2" : "S" + std::to_string(sorted[k]);
        out += count == 1 ? name : std::to_string(count) + name;
        k = e;
    }
    return out.empty() ? "empty" : out;
}

const VertexData* Atlas::find(const VertexId& id) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), id,
                               [](const VertexData& v, const VertexId& x) { return v.id < x; });
    return it != vertices.end() && it->id == id ? &*it : nullptr;
}

const VertexData& Atlas::at(const VertexId& id) const {
    const VertexData* v = find(id);
    if (!v) throw Error("no vertex " + to_string(id));
    return *v;
}

const Edge* Atlas::find_edge(const VertexId& a, const VertexId& b) const {
    for (const auto& e : edges)
        if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) return &e;
    return nullptr;
}

std::optional<std::string> table_plus0(int i, int j) {
    if (i < 0 || i > 10 || j < 0) return std::nullopt;
    const Row& row = kPlusRows[i];
    if (row.base - j < 0) return std::nullopt;
    return assemble(row, row.base - j);
}

std::optional<std::string> table_minus(int i, int j) {
    if (j < 0 || j > 9 || i < 0) return std::nullopt;
    const Row& row = kMinusRows[j];
    if (row.base - i < 0) return std::nullopt;
    return assemble(row, row.base - i);
}

const std::vector<SpecialRow>& special_rows() {
    static const std::vector<SpecialRow> rows = {
        {{0, 3, true}, "U(2)+E6(2)", "U(2)+3*D4"},
        {{1, 8, true}, "U(2)+A2", "U(2)+2*E8"},
        {{1, 4, true}, "U+E6(2)", "U+3*D4"},
        {{2, 5, true}, "U(2)+A2+D4", "U(2)+D4+E8"},
        {{3, 2, true}, "U(2)+A2+2*D4", "U(2)+2*D4"},
        {{4, 3, true}, "U+A2+2*D4", "U+2*D4"},
        {{5, 4, true}, "U(2)+A2+E8", "U(2)+E8"},
        {{6, 1, true}, "U(2)+A2+D4+E8", "U(2)+D4"},
        {{9, 0, true}, "U(2)+A2+2*E8", "U(2)"},
        {{2, 1, true}, "U+A2+E8(2)", "U+E8(2)"},
        {{1, 0, true}, "U(2)+A2+E8(2)", "U(2)+E8(2)"},
    };
    return rows;
}

std::vector<std::pair<int, int>> plus_domain() {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= kPlusRows[i].base; ++j) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> minus_domain() {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j <= 9; ++j)
        for (int i = 0; i <= kMinusRows[j].base; ++i) out.emplace_back(i, j);
    std::sort(out.begin(), out.end());
    return out;
}

Atlas build_atlas(GraphKind kind) {
    Atlas a;
    a.kind = kind;
    const auto plus = plus_domain();
    const auto minus = minus_domain();
    std::set<std::pair<int, int>> both(plus.begin(), plus.end());
    for (auto it = both.begin(); it != both.end();)
        it = std::binary_search(minus.begin(), minus.end(), *it) ? std::next(it) : both.erase(it);

    if (kind == GraphKind::K4) {
        for (auto [i, j] : both) a.vertices.push_back(make_vertex({i, j, false}, *table_plus0(i, j), *table_minus(i, j)));
        for (const auto& row : special_rows()) a.vertices.push_back(make_vertex(row.id, row.m_plus0, row.m_minus));
    } else {
        // Coordinate skeleton only; (r,d) follow from (i,j).
        auto skeleton = [](VertexId id) {
            VertexData v;
            v.id = id;
            v.r = 11 - id.i + id.j;
            v.d = 11 - id.i - id.j;
            return v;
        };
        for (auto [i, j] : both) a.vertices.push_back(skeleton({i, j, false}));
        for (const auto& row : special_rows()) a.vertices.push_back(skeleton(row.id));
        a.k3_real_locus[{1, 0, false}] = SurfaceDescriptor{{1}};
        a.k3_real_locus[{2, 1, true}] = SurfaceDescriptor{{1, 1}};
        a.k3_real_locus[{10, 0, false}] = SurfaceDescriptor{{10}};
        a.k3_real_locus[{10, 1, false}] = SurfaceDescriptor{{10, 0}};
        a.k3_l_plus[{10, 1, false}] = parse_lattice_expr("U");
    }
    std::sort(a.vertices.begin(), a.vertices.end(),
              [](const VertexData& x, const VertexData& y) { return x.id < y.id; });
    add_edges(a);
    return a;
}

VertexInvariants vertex_invariants(const VertexData& v) {
    const std::string who = to_string(v.id) + ": ";
    const GramMatrix gp = gram(v.m_plus0);
    const GramMatrix gm = gram(v.m_minus);
    const int rp = static_cast<int>(gp.rank());
    const int rm = static_cast<int>(gm.rank());
    if (rp + rm != 22) throw InvariantError(who + "rank(M+0) + rank(M-) = " + std::to_string(rp + rm) + " != 22");
    const Signature sp = signature(gp);
    const Signature sm = signature(gm);
    if (sp.neg != 1) throw InvariantError(who + "signature(M+0) negative index " + std::to_string(sp.neg) + " != 1");
    if (sm.neg != 1) throw InvariantError(who + "signature(M-) negative index " + std::to_string(sm.neg) + " != 1");
    const int dp = static_cast<int>(discriminant_group(gp).two_rank);
    const int dm = static_cast<int>(discriminant_group(gm).two_rank);
    if (dp != dm) throw InvariantError(who + "two_rank(M+0) = " + std::to_string(dp) + " != two_rank(M-) = " + std::to_string(dm));

    VertexInvariants out;
    out.r = rm;
    out.d = dm;
    if ((22 - out.r - out.d) % 2 != 0 || 22 - out.r - out.d < 0)
        throw InvariantError(who + "i = (22 - r - d)/2 is not a nonnegative integer");
    if ((out.r - out.d) % 2 != 0 || out.r - out.d < 0)
        throw InvariantError(who + "j = (r - d)/2 is not a nonnegative integer");
    out.i = (22 - out.r - out.d) / 2;
    out.j = (out.r - out.d) / 2;
    if (out.i != v.id.i || out.j != v.id.j)
        throw InvariantError(who + "(i,j) recomputed as (" + std::to_string(out.i) + "," + std::to_string(out.j) + ")");
    out.b_star = 27 - 2 * out.d;
    out.chi = 23 - 2 * out.r;
    if (v.r != out.r || v.d != out.d) throw InvariantError(who + "stored (r,d) disagree with the lattices");
    return out;
}

LatticeType classify_type(const VertexData& v) {
    const bool minus = discriminant_form(gram(v.m_minus)).two_part_integer;
    const bool plus = discriminant_form(gram(v.m_plus0)).two_part_integer;
    if (minus != plus) throw InvariantError(to_string(v.id) + ": M+0 and M- disagree on the type");
    return minus ? LatticeType::I : LatticeType::II;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

void check_edges(const Atlas& a, ValidationReport& rep) {
    CheckResult c{"edges", true, false, ""};
    for (const auto& e : a.edges) {
        const VertexData* f = a.find(e.from);
        const VertexData* t = a.find(e.to);
        std::string bad;
        if (!f || !t) {
            bad = "missing endpoint";
        } else {
            const int di = e.to.i - e.from.i, dj = e.to.j - e.from.j;
            const bool ok = (e.move == MoveKind::L && di == 1 && dj == 0) || (e.move == MoveKind::R && di == 0 && dj == 1);
            if (!ok) bad = "move kind inconsistent with coordinates";
            else if (t->d != f->d - 1) bad = "d does not drop by one";
        }
        if (!bad.empty()) {
            c.passed = false;
            c.detail += to_string(e.from) + "->" + to_string(e.to) + ": " + bad + "; ";
        }
    }
    if (c.passed) c.detail = std::to_string(a.edges.size()) + " edges consistent";
    rep.checks.push_back(std::move(c));
}

void validate_k3(const Atlas& a, ValidationReport& rep) {
    CheckResult c{"real-locus annotations", true, false, ""};
    for (const auto& [id, surf] : a.k3_real_locus) {
        const VertexData* v = a.find(id);
        const int chi = surf.euler();
        const int b = surf.betti_total();
        const bool ok = v && chi % 2 == 0 && b % 2 == 0 && 10 + chi / 2 == v->r && (24 - b) / 2 == v->d;
        if (!ok) {
            c.passed = false;
            c.detail += to_string(id) + " " + surf.to_string() + " mismatch; ";
        }
    }
    if (c.passed) c.detail = std::to_string(a.k3_real_locus.size()) + " annotations match (r,d)";
    rep.checks.push_back(std::move(c));
}

}  // namespace

ValidationReport validate_atlas(const Atlas& a) {
    ValidationReport rep;
    int principal = 0, special = 0;
    for (const auto& v : a.vertices) (v.id.special ? special : principal)++;
    rep.checks.push_back({"vertex count", a.vertices.size() == 75 && principal == 64 && special == 11, false,
                          std::to_string(a.vertices.size()) + " = " + std::to_string(principal) + " principal + " +
                              std::to_string(special) + " special"});

    const auto plus = plus_domain();
    const auto minus = minus_domain();
    rep.checks.push_back({"table domains agree", plus == minus && plus.size() == 64, false,
                          std::to_string(plus.size()) + " vs " + std::to_string(minus.size()) + " pairs"});

    check_edges(a, rep);
    if (a.kind == GraphKind::K3) {
        validate_k3(a, rep);
        return rep;
    }

    CheckResult inv{"vertex invariants", true, false, ""};
    CheckResult types{"type classification", true, false, ""};
    int ok = 0;
    std::map<std::pair<int, int>, std::vector<const VertexData*>> by_coord;
    for (const auto& v : a.vertices) {
        by_coord[{v.id.i, v.id.j}].push_back(&v);
        try {
            vertex_invariants(v);
            ++ok;
        } catch (const InvariantError& e) {
            inv.passed = false;
            inv.detail += std::string(e.what()) + "; ";
        }
        try {
            const bool one = classify_type(v) == LatticeType::I;
            if (one != v.type_one) throw InvariantError(to_string(v.id) + ": stored type differs");
            if (one) {
                ++rep.type_one_count;
                if (!v.id.special) rep.principal_type_one.push_back(v.id);
            } else if (v.id.special) {
                throw InvariantError(to_string(v.id) + ": special vertex is not type I");
            }
        } catch (const InvariantError& e) {
            types.passed = false;
            types.detail += std::string(e.what()) + "; ";
        }
    }
    if (inv.passed) inv.detail = std::to_string(ok) + "/" + std::to_string(a.vertices.size()) + " vertices";
    rep.checks.push_back(std::move(inv));

    const std::vector<VertexId> expected = {{2, 9, false}, {3, 6, false}, {6, 5, false}, {7, 2, false}, {10, 1, false}};
    if (rep.principal_type_one != expected) {
        types.passed = false;
        types.detail += "principal type-I set differs; ";
    }
    if (rep.type_one_count != 16) {
        types.passed = false;
        types.detail += "type-I count " + std::to_string(rep.type_one_count) + " != 16; ";
    }
    if (types.passed) types.detail = "16 type I (11 special + 5 principal)";
    rep.checks.push_back(std::move(types));

    CheckResult twins{"twin pairs", true, false, ""};
    for (const auto& [coord, vs] : by_coord) {
        if (vs.size() < 2) continue;
        ++rep.twin_pairs;
        const int ones = static_cast<int>(std::count_if(vs.begin(), vs.end(), [](auto* v) { return v->type_one; }));
        if (vs.size() != 2 || ones != 1) {
            twins.passed = false;
            twins.detail += "C" + std::to_string(coord.first) + "_" + std::to_string(coord.second) +
                            " twins do not split into one type I and one type II; ";
        }
    }
    if (twins.passed) twins.detail = std::to_string(rep.twin_pairs) + " pairs, each with exactly one type I";
    rep.checks.push_back(std::move(twins));
    rep.checks.push_back({"twin count vs expected", true, rep.twin_pairs != 10,
                          "computed " + std::to_string(rep.twin_pairs) + ", expected 10"});
    return rep;
}

}  // namespace cubic4
