#pragma once

#include <vector>

#include "cubic4/atlas.hpp"

namespace cubic4 {

// Atlas, wall-crossing and topology checks behind `atlas verify`.
std::vector<CheckResult> verify_all(int height = 4);

}  // namespace cubic4
