#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <psyq/statesum.hpp>

#include "helpers.hpp"

using namespace psyq;
using psyq::test::diagram;
using psyq::test::load_brk;
using psyq::test::load_psy;

TEST_CASE("multiset rendering") {
    InvariantMultiset m;
    CHECK(m.render() == "0");
    CHECK(m.cardinality() == 0);
    m.add(4);
    m.add(2);
    m.add(4);
    CHECK(m.render() == "u^2 + 2u^4");
    CHECK(m.cardinality() == 3);
    m.add(0);
    CHECK(m.render() == "u^0 + u^2 + 2u^4");
}

TEST_CASE("state circle counts") {
    Diagram kink = diagram("s1", 2, DiagramMode::Singular);
    CHECK(state_circles(kink, {false}) == 2);  // oriented smoothing
    CHECK(state_circles(kink, {true}) == 1);   // disoriented smoothing
    CHECK_THROWS_AS(state_circles(kink, {}), std::domain_error);

    Diagram tref = diagram("s1 s1 t1", 2, DiagramMode::Singular);
    CHECK(state_circles(tref, {false, false, false}) == 2);
    CHECK(state_circles(tref, {true, true, true}) == 3);
}

TEST_CASE("single-coloring state sum on a positive kink") {
    Psyquandle z9 = load_psy("z9.psy");
    PsyBracket br = load_brk(z9, "z9.brk");
    Diagram kink = diagram("s1", 2, DiagramMode::Singular);
    Coloring col{{0, 0}};

    CHECK(state_coefficient(kink, col, br, {false}) == 4);  // A_11 delta^2
    CHECK(state_coefficient(kink, col, br, {true}) == 7);   // B_11 delta^1

    CHECK(bracket_value(kink, col, br) == 2);  // (4 + 7) * w^-1 = delta

    std::vector<StateDetail> det = state_details(kink, col, br);
    REQUIRE(det.size() == 2);
    CHECK(det[0].choices == "A");
    CHECK(det[0].circles == 2);
    CHECK(det[0].contribution == 4);
    CHECK(det[1].choices == "B");
    CHECK(det[1].circles == 1);
    CHECK(det[1].contribution == 7);
}

TEST_CASE("unknot and split unknot values") {
    Psyquandle z9 = load_psy("z9.psy");
    PsyBracket br = load_brk(z9, "z9.brk");
    CHECK(bracket_multiset(diagram("", 1, DiagramMode::Singular), z9, br)
              .render() == "2u^2");
    // k split circles contribute delta^k per coloring
    CHECK(bracket_multiset(diagram("", 2, DiagramMode::Singular), z9, br)
              .render() == "4u^4");
    // Reidemeister I: a kink is the unknot
    CHECK(bracket_multiset(diagram("s1", 2, DiagramMode::Singular), z9, br)
              .render() == "2u^2");
    CHECK(bracket_multiset(diagram("s1-", 2, DiagramMode::Singular), z9, br)
              .render() == "2u^2");
}

TEST_CASE("pseudo-trefoil family over the two-element psyquandle") {
    Psyquandle z9 = load_psy("z9.psy");
    PsyBracket br = load_brk(z9, "z9.brk");
    auto value = [&](const char* word) {
        return bracket_multiset(diagram(word, 2, DiagramMode::Pseudo), z9, br)
            .render();
    };
    CHECK(value("t1 t1 t1") == "2u^2");
    CHECK(value("s1 t1 t1") == "2u^4");
    CHECK(value("s1 s1 t1") == "2u^7");
}

TEST_CASE("singular trefoil over the three-element psyquandle") {
    Psyquandle z6 = load_psy("z6.psy");
    PsyBracket br = load_brk(z6, "z6.brk");
    CHECK(bracket_multiset(diagram("s1 s1 t1", 2, DiagramMode::Singular), z6, br)
              .render() == "u^2 + 2u^4");
}

TEST_CASE("pseudo mode requires a pI-adequate bracket") {
    Psyquandle z6 = load_psy("z6.psy");
    PsyBracket br = load_brk(z6, "z6.brk");
    CHECK(z6.pi_adequate());
    CHECK_FALSE(br.pi_adequate());
    CHECK_THROWS_AS(
        bracket_multiset(diagram("t1", 2, DiagramMode::Pseudo), z6, br),
        PreconditionError);
    CHECK_NOTHROW(
        bracket_multiset(diagram("t1", 2, DiagramMode::Singular), z6, br));
}

TEST_CASE("precolored shadow evaluation") {
    Psyquandle z9 = load_psy("z9.psy");
    PsyBracket br = load_brk(z9, "z9.brk");
    Diagram shadow = diagram("s1 s1 t1", 2, DiagramMode::Singular);
    std::vector<LetterKind> kinds{LetterKind::Positive, LetterKind::Positive,
                                  LetterKind::Singular};
    CHECK(bracket_value_precolored(shadow, kinds, {{1, 2}, {2, 1}, {1, 1}},
                                   br) == 7);

    CHECK_THROWS_AS(
        bracket_value_precolored(shadow, kinds, {{1, 2}, {2, 1}, {0, 1}}, br),
        std::domain_error);
    CHECK_THROWS_AS(bracket_value_precolored(shadow, kinds, {{1, 1}}, br),
                    std::domain_error);
}
