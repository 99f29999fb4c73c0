#include "cubic4/ramified_sum.hpp"

#include <algorithm>

#include "cubic4/errors.hpp"

namespace cubic4 {

std::int64_t euler_perturbation(const PerturbationData& d) { return d.chi_P + 2 * d.chi_P_plus - d.chi_L; }

CuspLocalModel cusp_local_model(int p, int q) {
    if (p < 0 || q < 0) throw InvariantError("signature entries must be nonnegative");
    CuspLocalModel m;
    m.p = p;
    m.q = q;
    m.facet_plus_index = q;
    m.facet_minus_index = p;
    m.handle = {p, q};
    return m;
}

int lift_morse_index(int q) {
    if (q < 0) throw InvariantError("Morse index must be nonnegative");
    return q + 1;
}

RealLocusDescriptor add_unknotted_handle(const RealLocusDescriptor& d, int p, int q) {
    if (p + q != d.dimension) throw DimensionError("p + q must equal the descriptor dimension");
    RealLocusDescriptor out = d;
    out.add_handle(1, d.dimension - 1);
    out.add_handle(p, q);
    return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t m = 1; m <= k; ++m) r = r * (n - k + m) / m;
    return r;
}

HandleCount handle_counts(int n, int k) {
    if (k < 0 || 2 * k >= n + 1) throw InvariantError("handle_counts needs 0 <= k < (n+1)/2");
    HandleCount h;
    h.value = binomial(n + 1, k);
    h.t = static_cast<std::int64_t>(n + 1 - 2 * k) * (n + 1 - 2 * k);
    return h;
}

}  // namespace cubic4
