#include <benchmark/benchmark.h>

#include <psyq/coloring.hpp>
#include <psyq/io.hpp>
#include <psyq/search.hpp>
#include <psyq/statesum.hpp>

namespace {

std::string fixture(const char* name) {
    return std::string(PSYQ_FIXTURE_DIR) + "/" + name;
}

psyq::Psyquandle load_psy(const char* name) {
    auto f = psyq::load_psyquandle(fixture(name));
    return psyq::Psyquandle::from_tables(f.ut, f.ot, f.ub, f.ob);
}

psyq::PsyBracket load_brk(const psyq::Psyquandle& x, const char* name) {
    auto f = psyq::load_bracket(fixture(name));
    return psyq::PsyBracket::from_tables(x, psyq::FiniteRing(f.modulus),
                                         f.tables);
}

void bm_colorings(benchmark::State& state) {
    auto x = load_psy("z6.psy");
    auto word = psyq::parse_braid("s1 s2 s1- t2 s1 s2- t1 s2", 3,
                                  psyq::DiagramMode::Singular);
    auto d = psyq::Diagram::close(word);
    for (auto _ : state)
        benchmark::DoNotOptimize(psyq::enumerate_colorings(d, x).count());
}
BENCHMARK(bm_colorings);

void bm_bracket_multiset(benchmark::State& state) {
    auto x = load_psy("z6.psy");
    auto b = load_brk(x, "z6.brk");
    auto word = psyq::parse_braid("s1 s2 s1- t2 s1 s2- t1 s2", 3,
                                  psyq::DiagramMode::Singular);
    auto d = psyq::Diagram::close(word);
    for (auto _ : state)
        benchmark::DoNotOptimize(psyq::bracket_multiset(d, x, b).render());
}
BENCHMARK(bm_bracket_multiset);

void bm_state_sum_wide(benchmark::State& state) {
    auto x = load_psy("z9.psy");
    auto b = load_brk(x, "z9.brk");
    std::string word;
    for (int i = 0; i < int(state.range(0)); ++i)
        word += i % 3 == 2 ? "t1 " : "s1 ";
    auto d = psyq::Diagram::close(
        psyq::parse_braid(word, 2, psyq::DiagramMode::Singular));
    auto hs = psyq::enumerate_colorings(d, x);
    for (auto _ : state)
        benchmark::DoNotOptimize(psyq::bracket_value(d, hs.colorings[0], b));
}
BENCHMARK(bm_state_sum_wide)->Arg(6)->Arg(12)->Arg(18);

void bm_search_z9(benchmark::State& state) {
    auto x = load_psy("z9.psy");
    for (auto _ : state) {
        psyq::SearchSpec spec;
        spec.psyquandle = &x;
        spec.modulus = 9;
        spec.require_pi = true;
        std::uint64_t found = 0;
        psyq::search_brackets(spec, [&](const psyq::PsyBracket&) {
            ++found;
            return true;
        });
        benchmark::DoNotOptimize(found);
    }
}
BENCHMARK(bm_search_z9);

}  // namespace

BENCHMARK_MAIN();
