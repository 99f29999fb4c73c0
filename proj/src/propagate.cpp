#include "cubic4/propagate.hpp"

#include <algorithm>
#include <set>

#include "cubic4/ramified_sum.hpp"

namespace cubic4 {
namespace {

const VertexId kBase{0, 0, false};
const VertexId kBirth{1, 0, true};
const VertexId kFirstCase{2, 1, true};
const VertexId kFacetOne{10, 1, false};

std::string arrow(const VertexId& a, const VertexId& b) { return to_string(a) + " -> " + to_string(b); }

}  // namespace

std::string to_string(Rule r) {
    switch (r) {
        case Rule::Base: return "base";
        case Rule::Birth: return "birth";
        case Rule::HandleAttach: return "handle-attach";
        case Rule::RMove: return "r-move";
        case Rule::RamifiedSum: return "ramified-sum";
        case Rule::LiftedIndex: return "lifted-index";
    }
    return "?";
}

std::vector<Dependency> dependency_plan(const Atlas& atlas) {
    std::vector<Dependency> plan;
    for (const auto& v : atlas.vertices) {
        const VertexId id = v.id;
        Dependency dep{id, std::nullopt, Rule::Base};
        if (id == kBase) {
        } else if (id == kBirth) {
            dep = {id, kBase, Rule::Birth};
        } else if (id == kFirstCase) {
            dep = {id, VertexId{1, 0, false}, Rule::RamifiedSum};
        } else if (id == kFacetOne) {
            dep = {id, VertexId{10, 0, false}, Rule::LiftedIndex};
        } else if (id.j == 0) {
            dep = {id, VertexId{id.i - 1, 0, false}, Rule::HandleAttach};
        } else {
            dep = {id, VertexId{id.i, id.j - 1, false}, Rule::RMove};
        }
        plan.push_back(dep);
    }
    // Parents first: a parent always has smaller i + j, or equal i + j and is not special.
    std::stable_sort(plan.begin(), plan.end(), [](const Dependency& a, const Dependency& b) {
        return std::make_pair(a.vertex.i + a.vertex.j, a.vertex.special) <
               std::make_pair(b.vertex.i + b.vertex.j, b.vertex.special);
    });
    return plan;
}

CuspResults compute_cusp_results(const Atlas& atlas, int height) {
    CuspResults out;
    for (const auto& e : atlas.edges)
        if (e.move == MoveKind::R) out.emplace(std::make_pair(e.from, e.to), cusp_stratum(atlas, e.from, e.to, height));
    return out;
}

PropagationTable propagate(const Atlas& atlas, const CuspResults& cusps, const std::vector<VertexId>* order) {
    if (atlas.kind != GraphKind::K4) throw Error("propagation runs on the K4 atlas");
    const auto plan = dependency_plan(atlas);
    std::map<VertexId, Dependency> deps;
    for (const auto& d : plan) deps.emplace(d.vertex, d);

    std::vector<VertexId> seq;
    if (order) {
        seq = *order;
        std::set<VertexId> seen(seq.begin(), seq.end());
        if (seen.size() != seq.size() || seq.size() != plan.size()) throw Error("order must list every vertex once");
    } else {
        for (const auto& d : plan) seq.push_back(d.vertex);
    }

    PropagationTable table;
    for (const auto& id : seq) {
        auto dit = deps.find(id);
        if (dit == deps.end()) throw Error("order names unknown vertex " + to_string(id));
        const Dependency& dep = dit->second;
        Assignment as;
        as.rule = dep.rule;
        as.parent = dep.parent;

        const Assignment* parent = nullptr;
        if (dep.parent) {
            auto pit = table.find(*dep.parent);
            if (pit == table.end()) throw Error("order visits " + to_string(id) + " before " + to_string(*dep.parent));
            parent = &pit->second;
        }

        switch (dep.rule) {
            case Rule::Base:
                as.descriptor = RealLocusDescriptor::projective(4);
                as.step = to_string(id) + ": base case, real locus RP4";
                break;
            case Rule::Birth: {
                const Edge* e = atlas.find_edge(*dep.parent, id);
                if (!e || !facet_index_options(e->move, e->from, e->to).count(0))
                    throw Error(arrow(*dep.parent, id) + ": no index-0 facet");
                as.descriptor = apply_morse(parent->descriptor, {0});
                as.step = arrow(*dep.parent, id) + ": L-facet of index 0, birth of S4 (index 4 on the reverse side)";
                break;
            }
            case Rule::HandleAttach: {
                const Edge* e = atlas.find_edge(*dep.parent, id);
                if (!e || !facet_index_options(e->move, e->from, e->to).count(2))
                    throw Error(arrow(*dep.parent, id) + ": no index-2 facet");
                as.descriptor = apply_morse(parent->descriptor, {2, true, true});
                as.step = arrow(*dep.parent, id) + ": L-facet of index 2, trivial core and w2 = 0, # (S2xS2)";
                break;
            }
            case Rule::RMove: {
                auto cit = cusps.find({*dep.parent, id});
                if (cit == cusps.end()) throw Error(arrow(*dep.parent, id) + ": missing cusp verdict");
                if (cit->second.kind != CuspVerdict::Kind::Yes)
                    throw Error(arrow(*dep.parent, id) + ": R-wall without a cuspidal stratum");
                const Edge* e = atlas.find_edge(*dep.parent, id);
                if (!e || !facet_index_options(e->move, e->from, e->to).count(1))
                    throw Error(arrow(*dep.parent, id) + ": no index-1 facet");
                as.descriptor = apply_morse(parent->descriptor, {1});
                as.step = arrow(*dep.parent, id) + ": R-facet meets a cuspidal stratum (" +
                          cit->second.certificate->host + "), index 1 member of the pair, # (S1xS3)";
                break;
            }
            case Rule::RamifiedSum:
                as.descriptor = add_unknotted_handle(parent->descriptor, 2, 2);
                as.step = to_string(id) + ": ramified sum over an unknotted torus from " + to_string(*dep.parent) +
                          ", # (S2xS2) # (S1xS3)";
                break;
            case Rule::LiftedIndex: {
                const int idx = lift_morse_index(0);
                const Edge* e = atlas.find_edge(*dep.parent, id);
                if (!e || !facet_index_options(e->move, e->from, e->to).count(idx))
                    throw Error(arrow(*dep.parent, id) + ": lifted index not allowed on this facet");
                as.descriptor = apply_morse(parent->descriptor, {idx});
                as.step = arrow(*dep.parent, id) + ": K3 branch locus S10 gains a sphere (index 0), lifted to index " +
                          std::to_string(idx) + ", # (S1xS3)";
                break;
            }
        }

        if (parent) as.chain = parent->chain;
        as.chain.push_back(as.step);

        const VertexData& v = atlas.at(id);
        const DescriptorInvariants inv = descriptor_invariants(as.descriptor);
        if (inv.r != v.r || inv.d != v.d)
            throw InvariantError(to_string(id) + ": descriptor gives (r,d) = (" + std::to_string(inv.r) + "," +
                                 std::to_string(inv.d) + "), lattices give (" + std::to_string(v.r) + "," +
                                 std::to_string(v.d) + ")");
        table.emplace(id, std::move(as));
    }
    return table;
}

}  // namespace cubic4
