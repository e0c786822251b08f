#include "psyq/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "psyq/coloring.hpp"
#include "psyq/io.hpp"
#include "psyq/search.hpp"
#include "psyq/statesum.hpp"

namespace psyq {

namespace {

struct DiagramArgs {
    std::string file;
    int strands = 1;
    std::string word;
    std::string mode = "singular";
};

void add_diagram_flags(CLI::App* cmd, DiagramArgs& d) {
    auto* file = cmd->add_option("--diagram", d.file, "diagram file");
    cmd->add_option("--strands", d.strands, "strand count")->excludes(file);
    cmd->add_option("--word", d.word, "braid word, e.g. \"s1 s1- t1\"")
        ->excludes(file);
    cmd->add_option("--mode", d.mode, "singular|pseudo")
        ->check(CLI::IsMember({"singular", "pseudo"}))
        ->excludes(file);
}

Diagram make_diagram(const DiagramArgs& d) {
    if (!d.file.empty()) return Diagram::close(load_diagram(d.file));
    DiagramMode mode =
        d.mode == "pseudo" ? DiagramMode::Pseudo : DiagramMode::Singular;
    return Diagram::close(parse_braid(d.word, d.strands, mode));
}

Psyquandle make_psyquandle(const std::string& path) {
    PsyquandleFile f = load_psyquandle(path);
    return Psyquandle::from_tables(f.ut, f.ot, f.ub, f.ob);
}

PsyBracket make_bracket(const Psyquandle& x, const std::string& path) {
    BracketFile f = load_bracket(path);
    if (f.tables.n != x.size())
        throw std::domain_error("bracket table size " +
                                std::to_string(f.tables.n) +
                                " does not match psyquandle size " +
                                std::to_string(x.size()));
    return PsyBracket::from_tables(x, FiniteRing(f.modulus), f.tables);
}

std::string coloring_text(const Coloring& c) {
    std::string s;
    for (std::size_t i = 0; i < c.colors.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(c.colors[i] + 1);
    }
    return s;
}

int cmd_verify_psyquandle(const std::string& file, bool pi, std::ostream& out) {
    PsyquandleFile f = load_psyquandle(file);
    AxiomReport report = Psyquandle::check_axioms(f.ut, f.ot, f.ub, f.ob);
    if (!report.pass()) {
        out << report.summary();
        return 1;
    }
    if (pi) {
        Psyquandle x = Psyquandle::from_tables(f.ut, f.ot, f.ub, f.ob);
        for (int v = 0; v < x.size(); ++v)
            if (x.ub(v, v) != x.ob(v, v)) {
                out << "FAIL pI-adequacy at (" << v + 1 << "): "
                    << x.ub(v, v) + 1 << " != " << x.ob(v, v) + 1 << "\n";
                return 1;
            }
    }
    out << "PASS\n";
    return 0;
}

int cmd_verify_bracket(const std::string& psy_file, const std::string& brk_file,
                       bool pi, std::ostream& out) {
    Psyquandle x = make_psyquandle(psy_file);
    BracketFile f = load_bracket(brk_file);
    if (f.tables.n != x.size())
        throw std::domain_error("bracket table size does not match psyquandle");
    FiniteRing ring(f.modulus);
    AxiomReport report = PsyBracket::check(x, ring, f.tables);
    if (!report.pass()) {
        out << report.summary();
        return 1;
    }
    PsyBracket b = PsyBracket::from_tables(x, ring, f.tables);
    if (pi && !b.pi_adequate()) {
        out << "FAIL pI-adequacy\n";
        return 1;
    }
    out << "PASS\n";
    out << "delta " << b.delta_raw() << "\n";
    out << "w " << b.w_raw() << "\n";
    return 0;
}

int cmd_colorings(const std::string& psy_file, const DiagramArgs& dargs,
                  std::ostream& out) {
    Psyquandle x = make_psyquandle(psy_file);
    Diagram d = make_diagram(dargs);
    HomsetResult hs = enumerate_colorings(d, x);
    for (const Coloring& c : hs.colorings) out << coloring_text(c) << "\n";
    out << "count " << hs.count() << "\n";
    return 0;
}

int cmd_invariant(const std::string& psy_file, const std::string& brk_file,
                  const DiagramArgs& dargs, bool per_coloring, bool states,
                  std::ostream& out) {
    Psyquandle x = make_psyquandle(psy_file);
    PsyBracket b = make_bracket(x, brk_file);
    Diagram d = make_diagram(dargs);
    if (d.mode() == DiagramMode::Pseudo &&
        (!x.pi_adequate() || !b.pi_adequate()))
        throw PreconditionError(
            "pseudo-mode diagrams require a pI-adequate psyquandle and bracket");

    HomsetResult hs = enumerate_colorings(d, x);
    InvariantMultiset m;
    for (const Coloring& c : hs.colorings) {
        long v = bracket_value(d, c, b);
        m.add(v);
        if (states) {
            out << "coloring " << coloring_text(c) << "\n";
            for (const StateDetail& sd : state_details(d, c, b))
                out << "  " << sd.choices << "  k=" << sd.circles << "  "
                    << sd.contribution << "\n";
        }
        if (per_coloring) out << coloring_text(c) << " -> " << v << "\n";
    }
    out << m.render() << "\n";
    return 0;
}

int cmd_search(const std::string& psy_file, long mod, bool pi,
               std::uint64_t limit, const std::string& resume, bool stats,
               std::ostream& out, std::ostream& err) {
    Psyquandle x = make_psyquandle(psy_file);
    SearchSpec spec;
    spec.psyquandle = &x;
    spec.modulus = mod;
    spec.require_pi = pi;
    spec.limit = limit;
    if (!resume.empty()) {
        std::istringstream iss(resume);
        std::string tok;
        while (std::getline(iss, tok, ','))
            spec.resume.push_back(std::stol(tok));
    }
    bool first = true;
    SearchStats st = search_brackets(spec, [&](const PsyBracket& b) {
        if (!first) out << "\n";
        first = false;
        write_bracket(out, b);
        return true;
    });
    if (stats) {
        err << "nodes " << st.nodes << "\n";
        err << "results " << st.results << "\n";
        err << "seconds " << st.seconds << "\n";
        for (const auto& [id, count] : st.prunes)
            err << "prune " << id << " " << count << "\n";
    }
    return 0;
}

int cmd_table(const std::string& psy_file, const std::string& brk_file,
              const std::string& diagrams_file, std::ostream& out) {
    Psyquandle x = make_psyquandle(psy_file);
    PsyBracket b = make_bracket(x, brk_file);
    std::map<std::string, std::vector<std::string>> groups;
    for (const NamedDiagram& nd : load_diagrams(diagrams_file)) {
        Diagram d = Diagram::close(nd.word);
        groups[bracket_multiset(d, x, b).render()].push_back(nd.name);
    }
    for (auto& [multiset, names] : groups) {
        std::sort(names.begin(), names.end());
        out << multiset << " | ";
        for (std::size_t i = 0; i < names.size(); ++i)
            out << (i ? ", " : "") << names[i];
        out << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"psyquandle invariants of singular knots and pseudoknots"};
    app.require_subcommand(1);

    std::string psy_file, brk_file, diagrams_file, resume;
    bool pi = false, per_coloring = false, states = false, stats = false;
    long mod = 0;
    std::uint64_t limit = UINT64_MAX;
    DiagramArgs dargs;

    auto* vp = app.add_subcommand("verify-psyquandle",
                                  "check the psyquandle axioms");
    vp->add_option("file", psy_file, "psyquandle file")->required();
    vp->add_flag("--pi", pi, "also require pI-adequacy");

    auto* vb = app.add_subcommand("verify-bracket", "check the bracket axioms");
    vb->add_option("--psyquandle", psy_file)->required();
    vb->add_option("--bracket", brk_file)->required();
    vb->add_flag("--pi", pi, "also require pI-adequacy");

    auto* co = app.add_subcommand("colorings", "enumerate colorings");
    co->add_option("--psyquandle", psy_file)->required();
    add_diagram_flags(co, dargs);

    auto* inv = app.add_subcommand("invariant",
                                   "compute the bracket multiset invariant");
    inv->add_option("--psyquandle", psy_file)->required();
    inv->add_option("--bracket", brk_file)->required();
    add_diagram_flags(inv, dargs);
    inv->add_flag("--per-coloring", per_coloring, "one line per coloring");
    inv->add_flag("--states", states, "per-state expansion per coloring");

    auto* se = app.add_subcommand("search", "search for bracket structures");
    se->add_option("--psyquandle", psy_file)->required();
    se->add_option("--mod", mod, "ring modulus")->required();
    se->add_flag("--pi", pi, "only pI-adequate brackets");
    se->add_option("--limit", limit, "stop after N results");
    se->add_option("--resume", resume, "comma-separated flattened-entry prefix");
    se->add_flag("--stats", stats, "print search statistics to stderr");

    auto* tb = app.add_subcommand("table", "group diagrams by invariant value");
    tb->add_option("--psyquandle", psy_file)->required();
    tb->add_option("--bracket", brk_file)->required();
    tb->add_option("--diagrams", diagrams_file, "batch diagrams file")
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (vp->parsed()) return cmd_verify_psyquandle(psy_file, pi, out);
        if (vb->parsed()) return cmd_verify_bracket(psy_file, brk_file, pi, out);
        if (co->parsed()) return cmd_colorings(psy_file, dargs, out);
        if (inv->parsed())
            return cmd_invariant(psy_file, brk_file, dargs, per_coloring, states,
                                 out);
        if (se->parsed())
            return cmd_search(psy_file, mod, pi, limit, resume, stats, out, err);
        if (tb->parsed()) return cmd_table(psy_file, brk_file, diagrams_file, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const AxiomError& e) {
        err << e.what();
        return 1;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace psyq
