#include "cubic4/matrix.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>

namespace cubic4 {

BigMatrix to_big(const IntMatrix& m) {
    BigMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

IntMatrix to_int(const BigMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    const BigInt lo = std::numeric_limits<std::int64_t>::min();
    const BigInt hi = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) < lo || m(i, j) > hi) throw DimensionError("entry exceeds 64 bits");
            out(i, j) = static_cast<std::int64_t>(m(i, j));
        }
    return out;
}

BigInt determinant(const BigMatrix& m) {
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    BigMatrix a = m;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

BigInt determinant(const IntMatrix& m) { return determinant(to_big(m)); }

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.square()) throw DimensionError("block is not square");
        n += b.rows();
    }
    IntMatrix out(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return out;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix parse_matrix(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed matrix literal", e.byte);
    }
    if (!j.is_array()) throw ParseError("matrix literal must be an array of rows", 0);
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged matrix literal", 0);
        for (std::size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_number_integer()) throw ParseError("matrix entries must be integers", 0);
            m(i, k) = j[i][k].get<std::int64_t>();
        }
    }
    return m;
}

}  // namespace cubic4
