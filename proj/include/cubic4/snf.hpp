#pragma once

#include <vector>

#include "cubic4/matrix.hpp"

namespace cubic4 {

struct SmithForm {
    // min(rows, cols) diagonal entries, nonnegative, each dividing the next; zeros last.
    std::vector<BigInt> factors;
    BigMatrix left;   // U, rows x rows, det +-1
    BigMatrix right;  // V, cols x cols, det +-1
};

// U * m * V = diag(factors).
SmithForm smith_normal_form(const BigMatrix& m);
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace cubic4
