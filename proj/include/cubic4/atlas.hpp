#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubic4/lattice_expr.hpp"

namespace cubic4 {

struct VertexId {
    int i = 0;
    int j = 0;
    bool special = false;

    auto operator<=>(const VertexId&) const = default;
};

// "C3_2" or "C3_2_I".
std::string to_string(const VertexId& v);
// Accepts "C3_2", "C3,2", with optional "_I" suffix; throws ParseError.
VertexId parse_vertex_id(const std::string& text);

enum class MoveKind { L, R, L_inverse, R_inverse };
std::string to_string(MoveKind m);

enum class Provenance { Asserted, GridInferred };
std::string to_string(Provenance p);

struct Edge {
    VertexId from;  // higher d
    VertexId to;    // lower d
    MoveKind move = MoveKind::L;
    Provenance provenance = Provenance::Asserted;
    std::string note;
};

enum class LatticeType { I, II };
std::string to_string(LatticeType t);

struct VertexData {
    VertexId id;
    LatticeExpr m_plus0;
    LatticeExpr m_minus;
    int r = 0;
    int d = 0;
    bool type_one = false;
};

// Closed surface as a list of component genera (orientable components only).
struct SurfaceDescriptor {
    std::vector<int> genera;

    int euler() const;
    int betti_total() const;  // mod-2 Betti total
    std::string to_string() const;
};

enum class GraphKind { K4, K3 };
std::string to_string(GraphKind k);
// Throws Error on an unknown name.
GraphKind parse_graph_kind(const std::string& text);

struct Atlas {
    GraphKind kind = GraphKind::K4;
    std::vector<VertexData> vertices;  // sorted by id
    std::vector<Edge> edges;
    std::map<VertexId, SurfaceDescriptor> k3_real_locus;
    std::map<VertexId, LatticeExpr> k3_l_plus;

    const VertexData* find(const VertexId& id) const;
    const VertexData& at(const VertexId& id) const;
    // Edge joining a and b in either orientation.
    const Edge* find_edge(const VertexId& a, const VertexId& b) const;
};

// Table data as lattice-expression strings.
std::optional<std::string> table_plus0(int i, int j);  // principal M+0
std::optional<std::string> table_minus(int i, int j);  // principal M-
struct SpecialRow {
    VertexId id;
    std::string m_plus0;
    std::string m_minus;
};
const std::vector<SpecialRow>& special_rows();

// (i,j) pairs with nonnegative multiplicities in the respective table.
std::vector<std::pair<int, int>> plus_domain();
std::vector<std::pair<int, int>> minus_domain();

Atlas build_atlas(GraphKind kind);

struct VertexInvariants {
    int r = 0;
    int d = 0;
    int i = 0;
    int j = 0;
    int b_star = 0;
    int chi = 0;
};

// Recomputes everything from the lattices; throws InvariantError naming the
// failing equation.
VertexInvariants vertex_invariants(const VertexData& v);

// Throws InvariantError if the two eigenlattices disagree.
LatticeType classify_type(const VertexData& v);

struct CheckResult {
    std::string name;
    bool passed = true;
    bool warning = false;  // reported, never fails the run
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    int twin_pairs = 0;
    int type_one_count = 0;
    std::vector<VertexId> principal_type_one;

    bool passed() const;
};

ValidationReport validate_atlas(const Atlas& a);

std::string to_json(const Atlas& a, int indent = 2);
std::string to_dot(const Atlas& a);

}  // namespace cubic4
