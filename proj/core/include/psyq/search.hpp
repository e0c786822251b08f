#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "psyq/bracket.hpp"

namespace psyq {

/// A bracket search over Z_m for a fixed psyquandle. Variables are the
/// flattened entries (A, B, P, S; row-major); A and B range over units,
/// P and S over all residues. `resume` is a prefix of that flattened
/// tuple: only assignments lexicographically >= the prefix are emitted.
struct SearchSpec {
    const Psyquandle* psyquandle = nullptr;
    long modulus = 0;
    bool require_pi = false;
    std::uint64_t limit = UINT64_MAX;
    std::vector<long> resume;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::map<std::string, std::uint64_t> prunes;
    std::uint64_t results = 0;
    double seconds = 0.0;
};

/// Backtracking enumeration of all bracket structures satisfying the
/// axioms (and, optionally, pI-adequacy), in lexicographic order of the
/// flattened tuple. The sink returns false to stop early.
SearchStats search_brackets(const SearchSpec& spec,
                            const std::function<bool(const PsyBracket&)>& sink);

/// Oracle: full enumeration filtered through bracket validation.
/// Guarded to m^(4 n^2) <= 10^8.
std::vector<PsyBracket> brute_force_brackets(const Psyquandle& x, long m);

}  // namespace psyq
