#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubic4 {

enum class AtomKind { A, D, E, U, Rank1 };

struct Atom {
    AtomKind kind = AtomKind::U;
    // n for A/D/E, the form value k for Rank1, unused for U.
    std::int64_t param = 0;

    std::size_t rank() const;
    bool operator==(const Atom&) const = default;
};

struct Term {
    std::int64_t multiplicity = 1;
    Atom atom;
    std::int64_t scale = 1;

    std::size_t rank() const { return static_cast<std::size_t>(multiplicity) * atom.rank(); }
    bool operator==(const Term&) const = default;
};

struct LatticeExpr {
    std::vector<Term> terms;

    std::size_t rank() const;
    bool operator==(const LatticeExpr&) const = default;
};

//   expr := term ("+" term)*
//   term := [INT "*"] atom ["(" INT ")"]
//   atom := "A"INT | "D"INT | "E"INT | "U" | "<" SIGNED_INT ">"
// Whitespace is ignored. Throws ParseError.
LatticeExpr parse_lattice_expr(const std::string& text);

// Inverse of parse_lattice_expr; multiplicity and scale 1 are omitted.
std::string to_string(const LatticeExpr& e);
std::string to_string(const Atom& a);

// One summand per copy: "3*A1" expands to three single terms.
std::vector<Term> expand(const LatticeExpr& e);

}  // namespace cubic4
