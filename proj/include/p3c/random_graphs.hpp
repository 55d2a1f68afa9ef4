#pragma once

#include <cstdint>

#include "p3c/graph.hpp"

namespace p3c {

/// G(n, p) from std::mt19937_64 seeded with `seed`. One 64-bit draw per
/// vertex pair, pairs visited as (0,1), (0,2), ..., (1,2), ...; the pair is
/// an edge iff the top 53 bits of the draw, scaled to [0, 1), are below p.
/// The output depends only on (n, p, seed).
Graph random_gnp(int n, double p, std::uint64_t seed);

/// random_gnp, then for each triangle i < j < k in lexicographic order that
/// is still present, edge (j, k) is deleted.
Graph random_triangle_free(int n, double p, std::uint64_t seed);

} // namespace p3c
