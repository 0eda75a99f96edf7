#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vsym/matrix.hpp"

namespace vsym {

// Orbit decomposition of a finite enumerated universe under a fixed
// generator set, produced by breadth-first closure. Orbits are listed by
// their minimal element; each orbit lists canonical element encodings in
// ascending (lexicographic) order.
struct OrbitPartition {
    Ring ring;
    std::string universe;  // "Um3" or "A4"
    size_t universe_size = 0;
    size_t generator_count = 0;
    size_t bfs_edges = 0;
    size_t stab_levels = 0;
    bool stab_merge_complete = true;  // false when the bounded size-6 search hit its cap
    std::vector<std::vector<std::string>> orbits;

    // internal ids, used by the symbol map report
    std::vector<uint32_t> orbit_reps;       // minimal element id per orbit
    std::vector<int32_t> orbit_of;          // element id -> orbit index (-1 outside universe)
};

// Orbits of unimodular rows of length 3 under right multiplication by all
// elementary matrices E_ij(lambda), lambda in R.
OrbitPartition orbits_um3(const Ring& ring, size_t size_bound = 9);

// Orbits of Pfaffian-1 skew 4x4 matrices under congruence by elementary
// generators; stab_levels = 1 additionally merges orbits that become
// congruent after adding psi_2 (bounded breadth-first search at size 6).
OrbitPartition orbits_a4(const Ring& ring, size_t stab_levels, size_t size_bound = 9,
                         size_t stab_node_cap = 200000);

struct SymbolMapReport {
    Ring ring;
    OrbitPartition rows;
    OrbitPartition classes;
    std::vector<size_t> class_of_orbit;  // row orbit index -> A4 orbit index
    bool well_defined_exhaustive = false;
    bool injective = false;
    bool surjective = false;

    std::string text() const;  // deterministic rendering (no timings)
};

// Brute-force check of the classical symbol map on a finite ring: one class
// per row orbit, with injectivity/surjectivity verdicts. For |R| <= 5 the
// well-definedness is checked on every row, not just representatives.
SymbolMapReport symbol_map_report(const Ring& ring, size_t size_bound = 9);

}  // namespace vsym
