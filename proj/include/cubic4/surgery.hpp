#pragma once

#include <string>
#include <vector>

#include "cubic4/matrix.hpp"

namespace cubic4 {

class LinkingMatrix {
public:
    LinkingMatrix() = default;
    // Throws InvariantError unless symmetric.
    explicit LinkingMatrix(IntMatrix m);

    const IntMatrix& entries() const { return m_; }
    std::size_t components() const { return m_.rows(); }
    bool operator==(const LinkingMatrix&) const = default;

private:
    IntMatrix m_;
};

struct AbelianGroup {
    std::vector<BigInt> torsion;  // invariant factors > 1
    std::size_t free_rank = 0;

    bool trivial() const { return torsion.empty() && free_rank == 0; }
    BigInt torsion_order() const;
    std::string to_string() const;  // "Z/2 + Z/2", "Z", "0"
    bool operator==(const AbelianGroup&) const = default;
};

// Cokernel of an integer matrix.
AbelianGroup cokernel(const IntMatrix& m);

AbelianGroup h1_from_linking(const LinkingMatrix& m);

// Direct sum with (sign).
LinkingMatrix blow_up(const LinkingMatrix& m, int sign);
// Slides every other component off a +-1 component k, then deletes it.
LinkingMatrix blow_down(const LinkingMatrix& m, std::size_t k);
// Congruence E^T m E where E adds sign * (column j) to column i.
LinkingMatrix slide(const LinkingMatrix& m, std::size_t i, std::size_t j, int sign);

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<std::vector<std::int64_t>> relations;  // exponent sums
    std::vector<std::string> words;
};

// Relations like "a^2=b^4=c^6=abc" (every member equals the last) or "ab^-1".
// Generators are single letters. Throws ParseError.
GroupPresentation parse_presentation(const std::vector<std::string>& generators,
                                     const std::vector<std::string>& relations);
GroupPresentation presentation_from_linking(const LinkingMatrix& m);

AbelianGroup abelianization(const GroupPresentation& p);

std::int64_t torus_framing(std::int64_t p, std::int64_t q);
std::int64_t lifted_framing(std::int64_t n);

struct SpiralStep {
    std::string title;
    std::string detail;
    bool ok = true;
};

struct SpiralReport {
    std::vector<SpiralStep> steps;
    std::vector<LinkingMatrix> diagrams;  // left to right
    AbelianGroup h1;
    bool routes_agree = false;

    bool ok() const;
    std::string to_text() const;
};

SpiralReport spiral_scenario();

}  // namespace cubic4
