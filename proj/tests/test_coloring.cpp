#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <psyq/coloring.hpp>

#include "helpers.hpp"

using namespace psyq;
using psyq::test::diagram;
using psyq::test::load_psy;

TEST_CASE("unknot closures are colored by constants") {
    Psyquandle z9 = load_psy("z9.psy");
    CHECK(counting_invariant(diagram("", 1, DiagramMode::Singular), z9) == 2);
    CHECK(counting_invariant(diagram("", 3, DiagramMode::Singular), z9) == 8);
    CHECK(counting_invariant(diagram("s1", 2, DiagramMode::Singular), z9) == 2);

    Psyquandle ex1 = load_psy("ex1.psy");
    CHECK(counting_invariant(diagram("", 1, DiagramMode::Singular), ex1) == 3);
    CHECK(counting_invariant(diagram("s1 s1 s1-", 2, DiagramMode::Singular),
                             ex1) == 3);
}

TEST_CASE("pseudo-trefoil homset over the two-element psyquandle") {
    Psyquandle z9 = load_psy("z9.psy");
    Diagram d = diagram("s1 s1 t1", 2, DiagramMode::Pseudo);
    HomsetResult h = enumerate_colorings(d, z9);
    REQUIRE(h.count() == 2);
    std::vector<std::vector<int>> got;
    for (const Coloring& c : h.colorings) got.push_back(c.colors);
    std::sort(got.begin(), got.end());
    // 1-based: (1,1,2,2,1,1) and (2,2,1,1,2,2)
    CHECK(got[0] == std::vector<int>{0, 0, 1, 1, 0, 0});
    CHECK(got[1] == std::vector<int>{1, 1, 0, 0, 1, 1});
}

TEST_CASE("singular trefoil counts") {
    Psyquandle z6 = load_psy("z6.psy");
    Diagram d = diagram("s1 s1 t1", 2, DiagramMode::Singular);
    CHECK(counting_invariant(d, z6) == 3);

    Psyquandle z9 = load_psy("z9.psy");
    CHECK(counting_invariant(d, z9) == 2);
}

TEST_CASE("pseudo mode requires pI-adequacy") {
    Psyquandle nonpi = load_psy("nonpi.psy");
    Diagram pseudo = diagram("t1", 2, DiagramMode::Pseudo);
    CHECK_THROWS_AS(enumerate_colorings(pseudo, nonpi), PreconditionError);
    CHECK_THROWS_AS(counting_invariant(pseudo, nonpi), PreconditionError);
    // singular mode is fine for the same psyquandle
    CHECK_NOTHROW(
        counting_invariant(diagram("t1", 2, DiagramMode::Singular), nonpi));
}

TEST_CASE("propagation agrees with the brute-force oracle") {
    struct Case {
        const char* psy;
        const char* word;
        int strands;
        DiagramMode mode;
    };
    const Case cases[] = {
        {"z9.psy", "s1 s1 t1", 2, DiagramMode::Pseudo},
        {"z9.psy", "s1 t1 t1", 2, DiagramMode::Pseudo},
        {"z6.psy", "s1 s1 t1", 2, DiagramMode::Singular},
        {"ex1.psy", "s1- t1 s1-", 2, DiagramMode::Singular},
        {"ex1.psy", "s1 s2- t1 s2", 3, DiagramMode::Singular},
        {"z5_bouquet.psy", "t1 t1", 2, DiagramMode::Singular},
        {"nonpi.psy", "s1 t1", 2, DiagramMode::Singular},
    };
    for (const Case& c : cases) {
        CAPTURE(c.psy);
        CAPTURE(c.word);
        Psyquandle x = load_psy(c.psy);
        Diagram d = diagram(c.word, c.strands, c.mode);
        HomsetResult fast = enumerate_colorings(d, x);
        HomsetResult slow = brute_force_colorings(d, x);
        auto key = [](const HomsetResult& h) {
            std::vector<std::vector<int>> v;
            for (const Coloring& col : h.colorings) v.push_back(col.colors);
            std::sort(v.begin(), v.end());
            return v;
        };
        CHECK(key(fast) == key(slow));
    }
}

TEST_CASE("brute force guard rejects huge searches") {
    Psyquandle ex1 = load_psy("ex1.psy");
    std::string word;
    for (int i = 0; i < 8; ++i) word += "s1 s2 ";  // 16 crossings, 35 semiarcs
    Diagram big = diagram(word, 3, DiagramMode::Singular);
    CHECK_THROWS_AS(brute_force_colorings(big, ex1), std::domain_error);
    CHECK_NOTHROW(enumerate_colorings(big, ex1));
}
