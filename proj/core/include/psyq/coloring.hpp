#pragma once

#include <vector>

#include "psyq/diagram.hpp"
#include "psyq/psyquandle.hpp"

namespace psyq {

/// A semiarc -> psyquandle element assignment (0-based elements,
/// indexed by semiarc id).
struct Coloring {
    std::vector<int> colors;

    bool operator==(const Coloring&) const = default;
};

struct HomsetResult {
    std::vector<Coloring> colorings;

    long count() const { return long(colorings.size()); }
};

/// Enumerates all colorings by seeding the bottom-level semiarcs and
/// propagating through each crossing; deterministic lexicographic order
/// in the bottom tuple. Pseudo mode requires a pI-adequate psyquandle.
HomsetResult enumerate_colorings(const Diagram& d, const Psyquandle& x);

/// The psyquandle counting invariant: the homset cardinality.
long counting_invariant(const Diagram& d, const Psyquandle& x);

/// Oracle: tests every full semiarc assignment against every crossing
/// constraint. Guarded to |X|^semiarcs <= 10^7.
HomsetResult brute_force_colorings(const Diagram& d, const Psyquandle& x);

}  // namespace psyq
