#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "psyq/bracket.hpp"
#include "psyq/diagram.hpp"
#include "psyq/psyquandle.hpp"

namespace psyq {

/// Raw (unvalidated) psyquandle tables as read from a file. Parsing
/// checks shape and entry range only; axiom checking is separate so
/// callers can distinguish malformed input from invalid structures.
struct PsyquandleFile {
    OpTable ut, ot, ub, ob;
};

struct BracketFile {
    long modulus = 0;
    BracketTables tables;
};

struct NamedDiagram {
    std::string name;
    BraidWord word;
};

/// Psyquandle text format: line `psyquandle`, line `size <n>`, blocks
/// `ut:` `ot:` `ub:` `ob:` of n rows x n 1-based entries. `#` starts a
/// comment line. Throws ParseError.
PsyquandleFile read_psyquandle(std::istream& in);

/// Bracket text format: line `bracket`, line `ring mod <m>`, blocks
/// `A:` `B:` `P:` `S:` of n rows x n residues (n inferred from block A).
BracketFile read_bracket(std::istream& in);

/// Diagram text format: line `diagram`, line `strands <k>`, line
/// `mode singular|pseudo`, line `word <tokens>` (tokens may be empty).
BraidWord read_diagram(std::istream& in);

/// Batch format: repeated blocks `name <id>` + diagram block.
std::vector<NamedDiagram> read_diagrams(std::istream& in);

PsyquandleFile load_psyquandle(const std::string& path);
BracketFile load_bracket(const std::string& path);
BraidWord load_diagram(const std::string& path);
std::vector<NamedDiagram> load_diagrams(const std::string& path);

void write_psyquandle(std::ostream& out, const Psyquandle& x);
void write_bracket(std::ostream& out, const PsyBracket& b);

}  // namespace psyq
