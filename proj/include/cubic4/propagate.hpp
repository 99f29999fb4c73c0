#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubic4/descriptor.hpp"
#include "cubic4/wall_crossing.hpp"

namespace cubic4 {

enum class Rule { Base, Birth, HandleAttach, RMove, RamifiedSum, LiftedIndex };
std::string to_string(Rule r);

struct Dependency {
    VertexId vertex;
    std::optional<VertexId> parent;
    Rule rule = Rule::Base;
};

// One entry per vertex; parents precede children in the returned order.
std::vector<Dependency> dependency_plan(const Atlas& atlas);

using CuspResults = std::map<std::pair<VertexId, VertexId>, CuspVerdict>;

// Verdicts for every R-edge, keyed by (from, to).
CuspResults compute_cusp_results(const Atlas& atlas, int height = kDefaultHeight);

struct Assignment {
    RealLocusDescriptor descriptor;
    std::optional<VertexId> parent;
    Rule rule = Rule::Base;
    std::string step;
    std::vector<std::string> chain;  // root first
};

using PropagationTable = std::map<VertexId, Assignment>;

// Assigns a descriptor to every vertex of the K4 atlas. `order` may fix the
// traversal; it must list every vertex with parents first. Throws Error on a
// missing or negative verdict where an R-move is needed, InvariantError if a
// descriptor disagrees with the lattice (r,d).
PropagationTable propagate(const Atlas& atlas, const CuspResults& cusps, const std::vector<VertexId>* order = nullptr);

}  // namespace cubic4
