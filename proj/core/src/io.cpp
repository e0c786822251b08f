#include "psyq/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace psyq {

namespace {

// Line-oriented reader that skips blank and `#` comment lines and
// remembers 1-based line numbers for error reports.
class Lines {
public:
    explicit Lines(std::istream& in) : in_(in) {}

    // Next significant line, trimmed; empty optional at end of input.
    bool next(std::string& out) {
        if (pushed_) {
            out = line_;
            pushed_ = false;
            return true;
        }
        std::string raw;
        while (std::getline(in_, raw)) {
            ++lineno_;
            std::size_t b = raw.find_first_not_of(" \t\r");
            if (b == std::string::npos || raw[b] == '#') continue;
            std::size_t e = raw.find_last_not_of(" \t\r");
            line_ = raw.substr(b, e - b + 1);
            out = line_;
            return true;
        }
        return false;
    }

    std::string require(const char* what) {
        std::string line;
        if (!next(line))
            throw ParseError(std::string("unexpected end of input, expected ") +
                                 what,
                             lineno_ + 1, 1);
        return line;
    }

    void push_back() { pushed_ = true; }
    int lineno() const { return lineno_; }

private:
    std::istream& in_;
    std::string line_;
    bool pushed_ = false;
    int lineno_ = 0;
};

std::vector<std::string> split(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> parts;
    std::string p;
    while (iss >> p) parts.push_back(p);
    return parts;
}

long parse_long(const std::string& tok, const Lines& lines) {
    long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("expected an integer, got '" + tok + "'", lines.lineno(),
                         1);
    return v;
}

void expect_header(Lines& lines, const char* header) {
    std::string line = lines.require(header);
    if (line != header)
        throw ParseError("expected '" + std::string(header) + "', got '" + line +
                             "'",
                         lines.lineno(), 1);
}

long keyword_value(Lines& lines, const std::string& keyword) {
    std::string line = lines.require(keyword.c_str());
    auto parts = split(line);
    if (parts.size() != 2 || parts[0] != keyword)
        throw ParseError("expected '" + keyword + " <value>', got '" + line + "'",
                         lines.lineno(), 1);
    return parse_long(parts[1], lines);
}

OpTable read_op_block(Lines& lines, const char* header, int n) {
    expect_header(lines, header);
    std::vector<std::vector<int>> rows(n);
    for (int x = 0; x < n; ++x) {
        auto parts = split(lines.require("a table row"));
        if (int(parts.size()) != n)
            throw ParseError("expected " + std::to_string(n) +
                                 " entries in table row",
                             lines.lineno(), 1);
        for (const std::string& tok : parts) {
            long v = parse_long(tok, lines);
            if (v < 1 || v > n)
                throw ParseError("entry " + tok + " out of range 1.." +
                                     std::to_string(n),
                                 lines.lineno(), 1);
            rows[x].push_back(int(v));
        }
    }
    return OpTable::from_rows(rows);
}

std::vector<long> read_residue_row(Lines& lines, int n) {
    auto parts = split(lines.require("a table row"));
    if (int(parts.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " entries in table row",
                         lines.lineno(), 1);
    std::vector<long> row;
    for (const std::string& tok : parts) row.push_back(parse_long(tok, lines));
    return row;
}

BraidWord read_diagram_block(Lines& lines) {
    expect_header(lines, "diagram");
    long strands = keyword_value(lines, "strands");
    if (strands < 1)
        throw ParseError("strand count must be at least 1", lines.lineno(), 1);

    std::string mode_line = lines.require("mode singular|pseudo");
    auto mode_parts = split(mode_line);
    if (mode_parts.size() != 2 || mode_parts[0] != "mode" ||
        (mode_parts[1] != "singular" && mode_parts[1] != "pseudo"))
        throw ParseError("expected 'mode singular' or 'mode pseudo', got '" +
                             mode_line + "'",
                         lines.lineno(), 1);
    DiagramMode mode = mode_parts[1] == "pseudo" ? DiagramMode::Pseudo
                                                 : DiagramMode::Singular;

    std::string word_line = lines.require("word <tokens>");
    if (word_line != "word" && word_line.rfind("word ", 0) != 0)
        throw ParseError("expected 'word <tokens>', got '" + word_line + "'",
                         lines.lineno(), 1);
    std::string tokens = word_line == "word" ? "" : word_line.substr(5);
    try {
        return parse_braid(tokens, int(strands), mode);
    } catch (const ParseError& e) {
        throw ParseError(e.message(), lines.lineno(), e.column() + 5);
    }
}

}  // namespace

PsyquandleFile read_psyquandle(std::istream& in) {
    Lines lines(in);
    expect_header(lines, "psyquandle");
    long n = keyword_value(lines, "size");
    if (n < 1)
        throw ParseError("size must be at least 1", lines.lineno(), 1);
    PsyquandleFile f;
    f.ut = read_op_block(lines, "ut:", int(n));
    f.ot = read_op_block(lines, "ot:", int(n));
    f.ub = read_op_block(lines, "ub:", int(n));
    f.ob = read_op_block(lines, "ob:", int(n));
    return f;
}

BracketFile read_bracket(std::istream& in) {
    Lines lines(in);
    expect_header(lines, "bracket");

    std::string ring_line = lines.require("ring mod <m>");
    auto ring_parts = split(ring_line);
    if (ring_parts.size() != 3 || ring_parts[0] != "ring" ||
        ring_parts[1] != "mod")
        throw ParseError("expected 'ring mod <m>', got '" + ring_line + "'",
                         lines.lineno(), 1);
    BracketFile f;
    f.modulus = parse_long(ring_parts[2], lines);
    if (f.modulus < 2)
        throw ParseError("modulus must be at least 2", lines.lineno(), 1);

    // Block A fixes n: rows until the `B:` header, each of equal width.
    expect_header(lines, "A:");
    std::string line;
    std::vector<std::vector<long>> a_rows;
    while (lines.next(line) && line != "B:") {
        auto parts = split(line);
        std::vector<long> row;
        for (const std::string& tok : parts) row.push_back(parse_long(tok, lines));
        a_rows.push_back(std::move(row));
    }
    if (line != "B:")
        throw ParseError("unexpected end of input, expected 'B:'",
                         lines.lineno() + 1, 1);
    int n = int(a_rows.size());
    if (n == 0)
        throw ParseError("table A must have at least one row", lines.lineno(), 1);
    for (const auto& row : a_rows)
        if (int(row.size()) != n)
            throw ParseError("table A must be square", lines.lineno(), 1);

    f.tables.n = n;
    for (const auto& row : a_rows)
        f.tables.A.insert(f.tables.A.end(), row.begin(), row.end());
    lines.push_back();  // re-consume the `B:` header uniformly
    for (auto [header, dest] : {std::pair{"B:", &f.tables.B},
                                std::pair{"P:", &f.tables.P},
                                std::pair{"S:", &f.tables.S}}) {
        expect_header(lines, header);
        for (int x = 0; x < n; ++x) {
            auto row = read_residue_row(lines, n);
            dest->insert(dest->end(), row.begin(), row.end());
        }
    }
    return f;
}

BraidWord read_diagram(std::istream& in) {
    Lines lines(in);
    return read_diagram_block(lines);
}

std::vector<NamedDiagram> read_diagrams(std::istream& in) {
    Lines lines(in);
    std::vector<NamedDiagram> out;
    std::string line;
    while (lines.next(line)) {
        auto parts = split(line);
        if (parts.size() != 2 || parts[0] != "name")
            throw ParseError("expected 'name <id>', got '" + line + "'",
                             lines.lineno(), 1);
        out.push_back({parts[1], read_diagram_block(lines)});
    }
    return out;
}

namespace {

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0, 0);
    return in;
}

}  // namespace

PsyquandleFile load_psyquandle(const std::string& path) {
    auto in = open_file(path);
    return read_psyquandle(in);
}

BracketFile load_bracket(const std::string& path) {
    auto in = open_file(path);
    return read_bracket(in);
}

BraidWord load_diagram(const std::string& path) {
    auto in = open_file(path);
    return read_diagram(in);
}

std::vector<NamedDiagram> load_diagrams(const std::string& path) {
    auto in = open_file(path);
    return read_diagrams(in);
}

void write_psyquandle(std::ostream& out, const Psyquandle& x) {
    int n = x.size();
    out << "psyquandle\nsize " << n << "\n";
    const OpTable* tables[] = {&x.ut_table(), &x.ot_table(), &x.ub_table(),
                               &x.ob_table()};
    const char* names[] = {"ut:", "ot:", "ub:", "ob:"};
    for (int t = 0; t < 4; ++t) {
        out << names[t] << "\n";
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                out << (j ? " " : "") << tables[t]->at(i, j) + 1;
            out << "\n";
        }
    }
}

void write_bracket(std::ostream& out, const PsyBracket& b) {
    int n = b.tables().n;
    out << "bracket\nring mod " << b.ring().modulus() << "\n";
    const std::vector<long>* tables[] = {&b.tables().A, &b.tables().B,
                                         &b.tables().P, &b.tables().S};
    const char* names[] = {"A:", "B:", "P:", "S:"};
    for (int t = 0; t < 4; ++t) {
        out << names[t] << "\n";
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                out << (j ? " " : "") << (*tables[t])[std::size_t(i) * n + j];
            out << "\n";
        }
    }
}

}  // namespace psyq
