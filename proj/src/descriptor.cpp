#include "cubic4/descriptor.hpp"

#include <algorithm>
#include <vector>

#include "cubic4/errors.hpp"

namespace cubic4 {

RealLocusDescriptor RealLocusDescriptor::projective(int n) {
    if (n < 1) throw InvariantError("dimension must be positive");
    RealLocusDescriptor d;
    d.dimension = n;
    return d;
}

void RealLocusDescriptor::add_handle(int p, int q, int count) {
    if (p < 0 || q < 0 || p + q != dimension)
        throw InvariantError("handle S" + std::to_string(p) + "xS" + std::to_string(q) + " does not match dimension " +
                             std::to_string(dimension));
    if (count < 0) throw InvariantError("negative handle count");
    if (count == 0) return;
    handles[{std::min(p, q), std::max(p, q)}] += count;
}

int RealLocusDescriptor::handle_count(int p, int q) const {
    auto it = handles.find({std::min(p, q), std::max(p, q)});
    return it == handles.end() ? 0 : it->second;
}

int RealLocusDescriptor::total_handles() const {
    int n = 0;
    for (const auto& [pq, c] : handles) n += c;
    return n;
}

int RealLocusDescriptor::betti_total() const { return dimension + 1 + 2 * total_handles() + 2 * disjoint_spheres; }

int RealLocusDescriptor::euler() const {
    auto sgn = [](int k) { return k % 2 == 0 ? 1 : -1; };
    int chi = dimension % 2 == 0 ? 1 : 0;
    for (const auto& [pq, c] : handles) chi += c * ((1 + sgn(pq.first)) * (1 + sgn(pq.second)) - (1 + sgn(dimension)));
    return chi + disjoint_spheres * (1 + sgn(dimension));
}

std::string to_string(const RealLocusDescriptor& d) {
    const std::string n = std::to_string(d.dimension);
    std::string out = "RP" + n;
    std::vector<std::pair<std::pair<int, int>, int>> hs(d.handles.begin(), d.handles.end());
    std::sort(hs.begin(), hs.end(), [](const auto& a, const auto& b) { return a.first.first > b.first.first; });
    for (const auto& [pq, c] : hs) {
        if (c == 0) continue;
        out += " # ";
        if (c != 1) out += std::to_string(c);
        out += "(S" + std::to_string(pq.first) + "xS" + std::to_string(pq.second) + ")";
    }
    if (d.disjoint_spheres > 0) {
        out += " u ";
        if (d.disjoint_spheres != 1) out += std::to_string(d.disjoint_spheres);
        out += "S" + n;
    }
    return out;
}

RealLocusDescriptor principal_descriptor(int i, int j) {
    RealLocusDescriptor d = RealLocusDescriptor::projective(4);
    d.add_handle(2, 2, i);
    d.add_handle(1, 3, j);
    return d;
}

DescriptorInvariants descriptor_invariants(const RealLocusDescriptor& desc) {
    if (desc.dimension != 4) throw InvariantError("coordinates are defined for fourfolds only");
    DescriptorInvariants out;
    out.b_star = desc.betti_total();
    out.chi = desc.euler();
    if ((1 - out.chi) % 2 != 0) throw InvariantError("r = 11 + (1 - chi)/2 is not an integer");
    if ((27 - out.b_star) % 2 != 0) throw InvariantError("d = (27 - b_*)/2 is not an integer");
    out.r = 11 + (1 - out.chi) / 2;
    out.d = (27 - out.b_star) / 2;
    if ((22 - out.r - out.d) % 2 != 0 || (out.r - out.d) % 2 != 0)
        throw InvariantError("(i,j) are not integers");
    out.i = (22 - out.r - out.d) / 2;
    out.j = (out.r - out.d) / 2;
    return out;
}

RealLocusDescriptor apply_morse(const RealLocusDescriptor& d, const MorseEvent& e) {
    const int n = d.dimension;
    if (e.index < 0 || e.index > n + 1) throw InvariantError("Morse index " + std::to_string(e.index) + " out of range");
    RealLocusDescriptor out = d;
    switch (e.index) {
        case 0:
            ++out.disjoint_spheres;
            return out;
        case 1:
            if (!d.connected() || d.orientable())
                throw UnsupportedError("index 1 needs a connected non-orientable locus");
            out.add_handle(1, n - 1);
            return out;
        case 2:
            if (n != 4) throw UnsupportedError("index 2 is modeled for fourfolds only");
            if (!e.core_trivial) throw UnsupportedError("index 2 with a nontrivial core");
            if (!e.w2_vanishes) throw UnsupportedError("index 2 without vanishing w2 may give the twisted bundle");
            if (!d.connected() || d.handle_count(1, 3) != 0)
                throw UnsupportedError("index 2 needs a connected locus with fundamental group Z/2");
            out.add_handle(2, 2);
            return out;
        default:
            throw UnsupportedError("Morse index " + std::to_string(e.index) + " is outside the modeled cases");
    }
}

std::set<int> facet_index_options(MoveKind move, const VertexId& from, const VertexId& to) {
    switch (move) {
        case MoveKind::L:
            if (from == VertexId{0, 0, false} && to == VertexId{1, 0, true}) return {0, 4};
            return {2};
        case MoveKind::R:
            return {1, 3};
        default:
            throw InvariantError("facet indices are defined on d-decreasing moves only");
    }
}

}  // namespace cubic4
