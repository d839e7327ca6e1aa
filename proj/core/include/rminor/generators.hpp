#pragma once

#include <cstdint>
#include <vector>

#include "rminor/connectivity.hpp"
#include "rminor/graph.hpp"

namespace rminor {

enum class Family { GT, FL, HL, WHEEL, GRID, RANDOM_PLANAR };

// A constructed family member with the facts it was validated against at
// construction time (construction throws std::logic_error on mismatch).
struct FamilyInstance {
    RootedGraph rooted;
    Family family;
    std::vector<int> params;
    struct Facts {
        int white_count;   // |X|
        int black_count;   // |V| - |X|
        int white_degree;  // uniform degree of every root
        int kappa;         // kappa_x of the instance
    } facts;
};

// Rotational t-sector construction: per sector an inner ring vertex m_i,
// middle vertices a_i, b_i, c_i and one white root r_i; 5t vertices, whites of
// degree 6, blacks of degree 4, kappa = 6. Requires t >= 7.
FamilyInstance gen_gt(int t);

// Brick-wall strip of black vertices (l rows, degree <= 3) with `whites`
// roots below, each fanning into its own group of l bottom-row vertices
// (every other column, on the vertical-free parity); white degree exactly l,
// kappa = l, planar with all whites on the outer face. Requires l >= 4 and
// whites >= l+1.
FamilyInstance gen_fl(int l, int whites);

// Grid of l rows x l(l+1) columns of black vertices with l+1 white roots
// below, the i-th adjacent to the i-th group of l bottom-row vertices; white
// degree l, kappa = l. The published facts assume l >= 6; smaller l is
// accepted for tests with facts recomputed.
FamilyInstance gen_hl(int l);

// Random planar triangulation on n >= 4 vertices: incremental insertion into
// random faces followed by random diagonal flips; deterministic in seed.
Graph gen_random_planar(int n, std::uint64_t seed);

// Wheel with k rim vertices (roots) and one hub; rim degree 3, kappa = 3
// (except k = 3, where the rim is complete and kappa = 2). Requires k >= 3.
FamilyInstance gen_wheel(int k);

// rows x cols grid with the four corners as roots (degree 2, kappa = 2).
// Requires rows, cols >= 2.
FamilyInstance gen_grid(int rows, int cols);

// gen_random_planar wrapped with a greedily sampled root set of size k.
FamilyInstance make_random_planar_instance(int n, std::uint64_t seed, int k);

// Plain fixture builders (no facts): prism (two k-cycles joined by a
// matching) and antiprism (two k-cycles joined by a zigzag).
Graph prism(int k);      // k >= 3, 2k vertices
Graph antiprism(int k);  // k >= 3, 2k vertices

// Greedy kappa-maximal root sample of size k: start from a maximum-degree
// vertex, then repeatedly add the vertex maximizing kappa_x of the grown set
// (ties: least id). Deterministic.
VertexSet greedy_root_sample(const Graph& g, int k);

} // namespace rminor
