#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "psyq/bracket.hpp"
#include "psyq/coloring.hpp"
#include "psyq/diagram.hpp"

namespace psyq {

/// A multiset of ring values, rendered as a u-polynomial
/// ("u^2 + 2u^4", terms sorted by canonical residue ascending).
class InvariantMultiset {
public:
    void add(long value) { ++mult_[value]; }
    long cardinality() const;
    const std::map<long, long>& counts() const { return mult_; }
    std::string render() const;

    bool operator==(const InvariantMultiset&) const = default;

private:
    std::map<long, long> mult_;
};

/// A Kauffman state: the smoothing choice at every crossing.
/// disoriented[i] selects the disoriented smoothing at crossing i
/// (port pairing SW-SE / NW-NE); otherwise the oriented smoothing
/// (SW-NW / SE-NE) is used.
using KauffmanState = std::vector<bool>;

/// Number of closed curves after smoothing every crossing per the state.
int state_circles(const Diagram& d, const KauffmanState& state);

/// delta^k times the product of smoothing coefficients for one state
/// (no writhe correction). Raw ring value.
long state_coefficient(const Diagram& d, const Coloring& coloring,
                       const PsyBracket& bracket, const KauffmanState& state);

/// Sum over all 2^c states, times w^(n-p).
long bracket_value(const Diagram& d, const Coloring& coloring,
                   const PsyBracket& bracket);

/// The psyquandle bracket multiset over all colorings. Pseudo mode
/// requires both the psyquandle and the bracket to be pI-adequate.
InvariantMultiset bracket_multiset(const Diagram& d, const Psyquandle& x,
                                   const PsyBracket& bracket);

/// State-sum over a shadow diagram with caller-specified crossing kinds
/// and coefficient index pairs (1-based). Exists so diagrams whose planar
/// encoding is known only through their printed crossing colors can be
/// evaluated bit-for-bit.
long bracket_value_precolored(const Diagram& shadow,
                              const std::vector<LetterKind>& kinds,
                              const std::vector<std::pair<int, int>>& indices,
                              const PsyBracket& bracket);

/// Per-state breakdown for diagnostic output: the smoothing-coefficient
/// label per crossing, the circle count and the state's contribution.
struct StateDetail {
    std::string choices;
    int circles;
    long contribution;
};

std::vector<StateDetail> state_details(const Diagram& d, const Coloring& coloring,
                                       const PsyBracket& bracket);

}  // namespace psyq
