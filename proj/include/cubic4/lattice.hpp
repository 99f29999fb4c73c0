#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubic4/lattice_expr.hpp"
#include "cubic4/matrix.hpp"

namespace cubic4 {

class GramMatrix {
public:
    GramMatrix() = default;
    explicit GramMatrix(IntMatrix entries);

    const IntMatrix& entries() const { return m_; }
    std::size_t rank() const { return m_.rows(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    std::int64_t pair(const Vector& x, const Vector& y) const;
    std::int64_t norm(const Vector& x) const { return pair(x, x); }
    // (g x)_i, i.e. pairings of x with the basis.
    Vector pairings(const Vector& x) const;

    bool operator==(const GramMatrix&) const = default;

private:
    IntMatrix m_;
};

struct Signature {
    std::size_t pos = 0;
    std::size_t neg = 0;
    bool operator==(const Signature&) const = default;
};

struct DiscriminantGroup {
    std::vector<BigInt> invariant_factors;  // all > 1, divisibility order
    std::size_t two_rank = 0;

    BigInt order() const;
    std::string to_string() const;  // "(Z/2)^8 + Z/6", "0" when trivial
};

struct DiscriminantForm {
    DiscriminantGroup group;
    // Generators of L*/L in rational basis coordinates, one per invariant factor.
    std::vector<std::vector<Rational>> generators;
    std::vector<Rational> q;               // q(g_i) in [0, 2)
    std::vector<std::vector<Rational>> b;  // b(g_i, g_j) in [0, 1)
    bool two_part_integer = true;
};

// Block-diagonal Gram of the standard blocks.
GramMatrix gram(const LatticeExpr& e);
GramMatrix gram(const Atom& a);

// Frozen standard blocks. E8 uses a root basis whose dual basis also
// consists of roots; the others are Bourbaki simple-root bases.
IntMatrix block_a(std::size_t n);
IntMatrix block_d(std::size_t n);
IntMatrix block_e(std::size_t n);
IntMatrix block_u();

Signature signature(const GramMatrix& g);
BigInt determinant(const GramMatrix& g);
bool positive_definite(const GramMatrix& g);

DiscriminantGroup discriminant_group(const GramMatrix& g);
DiscriminantForm discriminant_form(const GramMatrix& g);

// Every v with v.g.v == norm, lexicographically sorted. Throws
// IndefiniteLatticeError unless g is positive definite.
std::vector<Vector> enumerate_norm_vectors(const GramMatrix& g, std::int64_t norm);

bool is_six_root(const Vector& v, const GramMatrix& g);

// R_v(x) = x - sign(v^2) (v.x) v, for v^2 = +-2.
Vector picard_lefschetz(const Vector& v, const Vector& x, const GramMatrix& g);

// Named lattices used throughout.
LatticeExpr ambient_lattice();       // 3<1> + 2U + 2E8, signature (21,2)
LatticeExpr primitive_lattice();     // A2 + 2U + 2E8
Vector polarization();               // h = (1,1,1,0,...) in the ambient basis

}  // namespace cubic4
