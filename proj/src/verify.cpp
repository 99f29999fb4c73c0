#include "cubic4/verify.hpp"

#include "cubic4/propagate.hpp"

namespace cubic4 {
namespace {

bool exceptional_target(const VertexId& id) {
    return id == VertexId{10, 1, false} || id == VertexId{2, 1, true};
}

}  // namespace

std::vector<CheckResult> verify_all(int height) {
    std::vector<CheckResult> out;
    const Atlas k4 = build_atlas(GraphKind::K4);
    const Atlas k3 = build_atlas(GraphKind::K3);
    for (auto& c : validate_atlas(k4).checks) {
        c.name = "k4 " + c.name;
        out.push_back(std::move(c));
    }
    for (auto& c : validate_atlas(k3).checks) {
        c.name = "k3 " + c.name;
        out.push_back(std::move(c));
    }

    const CuspResults cusps = compute_cusp_results(k4, height);
    CheckResult cusp{"cusp strata on R-walls", true, false, ""};
    int yes = 0, no = 0;
    for (const auto& e : k4.edges) {
        if (e.move != MoveKind::R || e.provenance != Provenance::Asserted) continue;
        const CuspVerdict& v = cusps.at({e.from, e.to});
        const bool want_no = exceptional_target(e.to);
        bool ok = false;
        if (want_no) {
            ok = v.kind == CuspVerdict::Kind::No && v.refutation.has_value();
        } else {
            ok = v.kind == CuspVerdict::Kind::Yes && verify_certificate(*v.certificate, gram(v.searched));
        }
        (v.kind == CuspVerdict::Kind::Yes ? yes : no)++;
        if (!ok) {
            cusp.passed = false;
            cusp.detail += to_string(e.from) + "->" + to_string(e.to) + " gave " + to_string(v.kind) + "; ";
        }
    }
    if (cusp.passed) cusp.detail = std::to_string(yes) + " yes, " + std::to_string(no) + " no (exceptional)";
    out.push_back(std::move(cusp));

    const A2Search u = search_a2_pair(parse_lattice_expr("U"), height);
    out.push_back({"no A2 pair in U", !u.found && u.exhaustive, false,
                   u.exhaustive ? "complete enumeration" : "search incomplete"});

    CheckResult prop{"main-theorem propagation", true, false, ""};
    try {
        const PropagationTable t = propagate(k4, cusps);
        int disconnected = 0;
        for (const auto& [id, as] : t) {
            if (!as.descriptor.connected()) ++disconnected;
            const bool birth = id == VertexId{1, 0, true};
            RealLocusDescriptor want = principal_descriptor(id.i, id.j);
            if (birth) {
                want = RealLocusDescriptor::projective(4);
                want.disjoint_spheres = 1;
            }
            if (!(as.descriptor == want)) {
                prop.passed = false;
                prop.detail += to_string(id) + " got " + to_string(as.descriptor) + "; ";
            }
        }
        if (t.size() != 75 || disconnected != 1) {
            prop.passed = false;
            prop.detail += "coverage or connectedness wrong; ";
        }
        if (prop.passed) prop.detail = "75 descriptors, (r,d) consistent, one disconnected locus";
    } catch (const Error& e) {
        prop.passed = false;
        prop.detail = e.what();
    }
    out.push_back(std::move(prop));
    return out;
}

}  // namespace cubic4
