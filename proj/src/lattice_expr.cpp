#include "cubic4/lattice_expr.hpp"

#include <cctype>
#include <limits>

#include "cubic4/errors.hpp"

namespace cubic4 {

std::size_t Atom::rank() const {
    switch (kind) {
        case AtomKind::A:
        case AtomKind::D:
        case AtomKind::E: return static_cast<std::size_t>(param);
        case AtomKind::U: return 2;
        case AtomKind::Rank1: return 1;
    }
    return 0;
}

std::size_t LatticeExpr::rank() const {
    std::size_t n = 0;
    for (const auto& t : terms) n += t.rank();
    return n;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    LatticeExpr parse() {
        LatticeExpr e;
        e.terms.push_back(term());
        skip();
        while (pos_ < s_.size()) {
            expect('+');
            e.terms.push_back(term());
            skip();
        }
        return e;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        skip();
        if (pos_ >= s_.size()) throw ParseError(std::string("expected '") + c + "', got end of input", pos_);
        if (s_[pos_] != c) throw ParseError(std::string("expected '") + c + "', got '" + s_[pos_] + "'", pos_);
        ++pos_;
    }

    bool at_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    // Unsigned decimal; whitespace is allowed between digits.
    std::int64_t integer() {
        if (!at_digit()) throw ParseError("expected integer", pos_);
        std::int64_t v = 0;
        while (at_digit()) {
            int d = s_[pos_] - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) throw ParseError("integer overflow", pos_);
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    Term term() {
        Term t;
        skip();
        std::size_t start = pos_;
        if (at_digit()) {
            t.multiplicity = integer();
            if (t.multiplicity < 1) throw ParseError("multiplicity must be positive", start);
            expect('*');
        }
        t.atom = atom();
        if (peek('(')) {
            ++pos_;
            skip();
            std::size_t at = pos_;
            t.scale = integer();
            if (t.scale < 1) throw ParseError("scale must be positive", at);
            expect(')');
        }
        return t;
    }

    Atom atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("expected lattice atom, got end of input", pos_);
        const std::size_t at = pos_;
        const char c = s_[pos_++];
        Atom a;
        switch (c) {
            case 'A':
                a.kind = AtomKind::A;
                a.param = integer();
                if (a.param < 1) throw ParseError("A_n needs n >= 1", at);
                return a;
            case 'D':
                a.kind = AtomKind::D;
                a.param = integer();
                if (a.param < 4) throw ParseError("D_n needs n >= 4", at);
                return a;
            case 'E':
                a.kind = AtomKind::E;
                a.param = integer();
                if (a.param < 6 || a.param > 8) throw ParseError("E_n needs n in {6,7,8}", at);
                return a;
            case 'U':
                a.kind = AtomKind::U;
                return a;
            case '<': {
                a.kind = AtomKind::Rank1;
                bool neg = false;
                if (peek('-')) {
                    neg = true;
                    ++pos_;
                } else if (peek('+')) {
                    ++pos_;
                }
                a.param = integer();
                if (neg) a.param = -a.param;
                if (a.param == 0) throw ParseError("rank-1 form must be nonzero", at);
                expect('>');
                return a;
            }
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", at);
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

LatticeExpr parse_lattice_expr(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const Atom& a) {
    switch (a.kind) {
        case AtomKind::A: return "A" + std::to_string(a.param);
        case AtomKind::D: return "D" + std::to_string(a.param);
        case AtomKind::E: return "E" + std::to_string(a.param);
        case AtomKind::U: return "U";
        case AtomKind::Rank1: return "<" + std::to_string(a.param) + ">";
    }
    return "?";
}

std::string to_string(const LatticeExpr& e) {
    std::string out;
    for (std::size_t k = 0; k < e.terms.size(); ++k) {
        const Term& t = e.terms[k];
        if (k) out += '+';
        if (t.multiplicity != 1) out += std::to_string(t.multiplicity) + "*";
        out += to_string(t.atom);
        if (t.scale != 1) out += "(" + std::to_string(t.scale) + ")";
    }
    return out;
}

std::vector<Term> expand(const LatticeExpr& e) {
    std::vector<Term> out;
    for (const auto& t : e.terms)
        for (std::int64_t k = 0; k < t.multiplicity; ++k) {
            Term one = t;
            one.multiplicity = 1;
            out.push_back(one);
        }
    return out;
}

}  // namespace cubic4
