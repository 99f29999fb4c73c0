#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "cubic4/atlas.hpp"

namespace cubic4 {

// RP^n # sum of S^p x S^q handles, disjoint union with copies of S^n.
struct RealLocusDescriptor {
    int dimension = 4;
    std::map<std::pair<int, int>, int> handles;  // (p,q) with p <= q, p + q = n
    int disjoint_spheres = 0;

    static RealLocusDescriptor projective(int n);

    // Throws InvariantError unless p + q = dimension and p, q >= 0.
    void add_handle(int p, int q, int count = 1);
    int handle_count(int p, int q) const;
    int total_handles() const;

    int betti_total() const;  // mod-2
    int euler() const;
    bool connected() const { return disjoint_spheres == 0; }
    bool orientable() const { return dimension % 2 == 1; }

    bool operator==(const RealLocusDescriptor&) const = default;
};

// "RP4 # 5(S2xS2) # 4(S1xS3)", "RP4 u S4".
std::string to_string(const RealLocusDescriptor& d);

// RP4 # i(S2xS2) # j(S1xS3).
RealLocusDescriptor principal_descriptor(int i, int j);

struct DescriptorInvariants {
    int b_star = 0;
    int chi = 0;
    int r = 0;
    int d = 0;
    int i = 0;
    int j = 0;
};

// Dimension 4 only; throws InvariantError on non-integral coordinates.
DescriptorInvariants descriptor_invariants(const RealLocusDescriptor& d);

struct MorseEvent {
    int index = 0;
    bool core_trivial = true;  // core sphere vanishes in mod-2 homology
    bool w2_vanishes = true;   // holds for every cubic real locus
};

// Only the modifications whose outcome is known: index 0 anywhere, index 1 on
// a connected non-orientable locus, index 2 with trivial core on a connected
// fourfold with fundamental group Z/2. Anything else throws UnsupportedError.
RealLocusDescriptor apply_morse(const RealLocusDescriptor& d, const MorseEvent& e);

// Morse indices allowed on the facet crossed by an edge, oriented toward
// smaller d. Throws InvariantError for inverse moves.
std::set<int> facet_index_options(MoveKind move, const VertexId& from, const VertexId& to);

}  // namespace cubic4
