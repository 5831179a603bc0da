#pragma once

#include <optional>
#include <vector>

#include "a2/cyclotomic.hpp"

namespace a2 {

using Matrix = std::vector<std::vector<Cyclotomic>>;

/// Row echelon rank.
std::size_t rank(Matrix m);

/// Some solution of A x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Cyclotomic>> solve(const Matrix& A, const std::vector<Cyclotomic>& b);

}  // namespace a2
