#pragma once

#include <string>

#include <psyq/io.hpp>

namespace psyq::test {

inline std::string fixture(const std::string& name) {
    return std::string(PSYQ_FIXTURE_DIR) + "/" + name;
}

inline Psyquandle load_psy(const std::string& name) {
    PsyquandleFile f = load_psyquandle(fixture(name));
    return Psyquandle::from_tables(f.ut, f.ot, f.ub, f.ob);
}

inline PsyBracket load_brk(const Psyquandle& x, const std::string& name) {
    BracketFile f = load_bracket(fixture(name));
    return PsyBracket::from_tables(x, FiniteRing(f.modulus), f.tables);
}

inline Diagram diagram(const std::string& word, int strands, DiagramMode mode) {
    return Diagram::close(parse_braid(word, strands, mode));
}

}  // namespace psyq::test
