#pragma once

#include <cstdint>
#include <string>

#include "cubic4/descriptor.hpp"

namespace cubic4 {

struct PerturbationData {
    std::int64_t chi_P = 0;
    std::int64_t chi_P_plus = 0;
    std::int64_t chi_L = 0;
};

// Euler characteristic of the perturbed real locus. The two orders of the
// small parameters give one deformation type, so no ordering is recorded.
std::int64_t euler_perturbation(const PerturbationData& d);

struct CuspLocalModel {
    int p = 0;
    int q = 0;
    int facet_plus_index = 0;   // facet c > 0
    int facet_minus_index = 0;  // facet c < 0
    std::pair<int, int> handle;
    std::string discriminant = "4b^3+27c^2=0";
    std::string coorientation = "normal points into the thinner region";
};

CuspLocalModel cusp_local_model(int p, int q);

// Index shift from the branch locus to the double cover.
int lift_morse_index(int q);

// Connected sum with S^1 x S^{n-1} and S^p x S^q; requires p + q = n.
RealLocusDescriptor add_unknotted_handle(const RealLocusDescriptor& d, int p, int q);

struct HandleCount {
    std::int64_t value = 0;  // binomial(n+1, k)
    std::int64_t t = 0;      // nodal parameter (n+1-2k)^2
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

// Requires 0 <= k < (n+1)/2; throws InvariantError otherwise.
HandleCount handle_counts(int n, int k);

}  // namespace cubic4
