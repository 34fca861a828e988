#pragma once

#include <string>

#include "ceva/algebra.hpp"

namespace ceva {

/// The thirteen target algebras: E0 is the zero algebra, E1..E12 the twelve
/// pairwise non-isomorphic three-dimensional evolution algebras with
/// one-dimensional derived subalgebra.
enum class CanonicalLabel {
    E0, E1, E2, E3, E4, E5, E6, E7, E8, E9, E10, E11, E12
};

StructureMatrix canonical_matrix(CanonicalLabel label);

std::string to_string(CanonicalLabel label);

/// Parses "E0".."E12"; throws ConfigError otherwise.
CanonicalLabel label_from_string(const std::string& s);

inline constexpr int kNumLabels = 13;

CanonicalLabel label_from_index(int i); // 0..12

} // namespace ceva
