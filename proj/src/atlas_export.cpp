#include <json.hpp>

#include <sstream>

#include "cubic4/atlas.hpp"

namespace cubic4 {

std::string to_json(const Atlas& a, int indent) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["kind"] = to_string(a.kind);
    j["vertices"] = ordered_json::array();
    for (const auto& v : a.vertices) {
        ordered_json o;
        o["i"] = v.id.i;
        o["j"] = v.id.j;
        o["special"] = v.id.special;
        if (a.kind == GraphKind::K4) {
            o["m_plus0"] = to_string(v.m_plus0);
            o["m_minus"] = to_string(v.m_minus);
        } else {
            o["m_plus0"] = nullptr;
            o["m_minus"] = nullptr;
        }
        o["r"] = v.r;
        o["d"] = v.d;
        if (a.kind == GraphKind::K4)
            o["type"] = v.type_one ? "I" : "II";
        else
            o["type"] = nullptr;
        if (auto it = a.k3_real_locus.find(v.id); it != a.k3_real_locus.end()) o["real_locus"] = it->second.to_string();
        if (auto it = a.k3_l_plus.find(v.id); it != a.k3_l_plus.end()) o["l_plus"] = to_string(it->second);
        j["vertices"].push_back(std::move(o));
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : a.edges) {
        ordered_json o;
        o["from"] = to_string(e.from);
        o["to"] = to_string(e.to);
        o["move"] = to_string(e.move);
        o["provenance"] = to_string(e.provenance);
        j["edges"].push_back(std::move(o));
    }
    return j.dump(indent);
}

std::string to_dot(const Atlas& a) {
    std::ostringstream os;
    os << "digraph " << (a.kind == GraphKind::K4 ? "K4" : "K3") << " {\n";
    os << "  rankdir=LR;\n  node [shape=box, fontname=\"Helvetica\"];\n";
    for (const auto& v : a.vertices) {
        os << "  " << to_string(v.id) << " [label=\"C^{" << v.id.i << "," << v.id.j << "}" << (v.id.special ? "_I" : "")
           << "\\n(r,d)=(" << v.r << "," << v.d << ")";
        if (a.kind == GraphKind::K4) os << "\\ntype " << (v.type_one ? "I" : "II");
        if (auto it = a.k3_real_locus.find(v.id); it != a.k3_real_locus.end()) os << "\\n" << it->second.to_string();
        os << "\"";
        if (v.id.special) os << ", style=bold";
        os << "];\n";
    }
    for (const auto& e : a.edges) {
        os << "  " << to_string(e.from) << " -> " << to_string(e.to) << " [label=\"" << to_string(e.move)
           << "\", style=" << (e.move == MoveKind::R || e.move == MoveKind::R_inverse ? "dashed" : "solid");
        if (e.provenance == Provenance::GridInferred) os << ", color=gray";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace cubic4
