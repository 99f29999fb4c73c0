#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "cubic4/atlas.hpp"
#include "cubic4/lattice.hpp"

namespace cubic4 {

enum class Side { Plus, Minus };

// v is a 2-root of M+0 (plus) or M- (minus) of the vertex, in the Gram basis.
// Throws InvariantError unless v^2 = 2.
MoveKind classify_move(const Vector& v, Side side, const VertexData& vertex);

struct A2Certificate {
    Vector v1;
    Vector v2;
    std::string host;  // where the pair lives, e.g. "A1[3]+U[0]"
};

// Pairs read off the summand structure: <2>+U gives (e-u1, u1+u2); a root
// block gives two adjacent basis roots. Unfiltered, deterministic order.
std::vector<A2Certificate> structured_a2_pairs(const LatticeExpr& expr);

using PairFilter = std::function<bool(const Vector&, const Vector&)>;

struct A2Search {
    std::optional<A2Certificate> found;
    // True when the search provably covered every square-2 vector.
    bool exhaustive = false;
};

constexpr int kDefaultHeight = 4;

// Structured pairs first, then a box search of coordinate height <= height
// over the whole lattice or over small groups of summands.
A2Search search_a2_pair(const LatticeExpr& expr, int height = kDefaultHeight, const PairFilter& filter = nullptr);
std::optional<A2Certificate> find_a2_pair(const LatticeExpr& expr, int height = kDefaultHeight);

bool mod3_condition(const Vector& v1, const Vector& v2, const GramMatrix& g);

// Independent re-check of v1^2 = v2^2 = 2, v1.v2 = -1 and the mod-3 condition.
bool verify_certificate(const A2Certificate& c, const GramMatrix& g);

struct Refutation {
    std::size_t rank = 0;
    std::uint64_t classes_checked = 0;
    std::size_t candidates = 0;
    std::size_t span_dimension = 0;
    std::string digest;  // FNV-1a over the candidate classes
};

constexpr std::size_t kMaxRefutationRank = 16;

// Sweeps L/2L. Classes of norm 2 mod 4 are the only ones that can hold a
// square-2 vector; if they span a subspace on which the form is even, no pair
// with v1.v2 = -1 exists. Throws DimensionError above kMaxRefutationRank.
std::optional<Refutation> refute_a2_mod2(const LatticeExpr& expr);

struct CuspVerdict {
    enum class Kind { Yes, No, Unknown };
    Kind kind = Kind::Unknown;
    VertexId from;
    VertexId to;
    MoveKind wall = MoveKind::R;
    LatticeExpr searched;
    std::optional<A2Certificate> certificate;
    std::optional<Refutation> refutation;
};

std::string to_string(CuspVerdict::Kind k);

// Decides whether the wall between two adjacent vertices carries a cuspidal
// stratum. The lower-d endpoint is X-; R-walls search M-(X-), L-walls M+0(X-).
// Throws Error if the vertices are not adjacent.
CuspVerdict cusp_stratum(const Atlas& atlas, const VertexId& a, const VertexId& b, int height = kDefaultHeight);

std::string to_json(const CuspVerdict& v, int indent = 2);

}  // namespace cubic4
