#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <psyq/bracket.hpp>

#include "helpers.hpp"

using namespace psyq;
using psyq::test::load_brk;
using psyq::test::load_psy;

namespace {

struct Fixture {
    const char* psy;
    const char* brk;
    long delta;
    long w;
    bool pi;
};

const Fixture fixtures[] = {
    {"z9.psy", "z9.brk", 2, 1, true},
    {"ex1.psy", "ex2.brk", 0, 2, false},
    {"z6.psy", "z6.brk", 2, 1, false},
    {"z5_bouquet.psy", "z5_bouquet.brk", 3, 4, false},
};

}  // namespace

TEST_CASE("fixture brackets validate with the published scalars") {
    for (const Fixture& f : fixtures) {
        CAPTURE(f.brk);
        Psyquandle x = load_psy(f.psy);
        PsyBracket b = load_brk(x, f.brk);
        CHECK(b.delta_raw() == f.delta);
        CHECK(b.w_raw() == f.w);
        CHECK(b.pi_adequate() == f.pi);
        CHECK(PsyBracket::check(x, b.ring(), b.tables()).pass());
        CHECK(PsyBracket::satisfies(x, b.ring(), b.tables()));
    }
}

TEST_CASE("compute_delta and compute_w") {
    Psyquandle z9 = load_psy("z9.psy");
    PsyBracket b = load_brk(z9, "z9.brk");
    FiniteRing r(9);
    CHECK(compute_delta(r, b.tables()) == 2);
    CHECK(compute_w(r, b.tables()) == 1);

    // disagreement across pairs -> b2
    BracketTables t = b.tables();
    t.A[1] = 2;  // A_{1,2} = 2 makes -AB^-1 - A^-1B differ at (1,2)
    CHECK_THROWS_AS(compute_delta(r, t), AxiomError);

    // disagreement on the diagonal -> b1
    BracketTables t2 = b.tables();
    t2.B[3] = 2;  // B_{2,2} = 2 changes -A^2 B^-1 there
    CHECK_THROWS_AS(compute_w(r, t2), AxiomError);
}

TEST_CASE("non-unit coefficients are rejected as b0") {
    Psyquandle z9 = load_psy("z9.psy");
    PsyBracket b = load_brk(z9, "z9.brk");
    BracketTables t = b.tables();
    t.A[0] = 3;  // 3 is not a unit mod 9
    AxiomReport rep = PsyBracket::check(z9, FiniteRing(9), t);
    CHECK_FALSE(rep.pass());
    bool saw_b0 = false;
    for (const auto& f : rep.failures) saw_b0 |= f.axiom.starts_with("b0");
    CHECK(saw_b0);
    CHECK_FALSE(PsyBracket::satisfies(z9, FiniteRing(9), t));
    CHECK_THROWS_AS(PsyBracket::from_tables(z9, FiniteRing(9), t), AxiomError);
}

TEST_CASE("broken state-sum axioms are caught") {
    Psyquandle z9 = load_psy("z9.psy");
    PsyBracket b = load_brk(z9, "z9.brk");
    BracketTables t = b.tables();
    t.P[0] = FiniteRing(9).canon(t.P[0] + 1);
    AxiomReport rep = PsyBracket::check(z9, FiniteRing(9), t);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(PsyBracket::satisfies(z9, FiniteRing(9), t));
}

TEST_CASE("kink identities hold for every validated bracket") {
    for (const Fixture& f : fixtures) {
        CAPTURE(f.brk);
        Psyquandle x = load_psy(f.psy);
        PsyBracket b = load_brk(x, f.brk);
        const FiniteRing& r = b.ring();
        long w_inv = r.inverse(b.w_raw());
        for (int i = 0; i < x.size(); ++i) {
            // positive kink: A_{xx} delta + B_{xx} = w
            CHECK(r.canon(b.a(i, i) * b.delta_raw() + b.b(i, i)) == b.w_raw());
            // negative kink: A_{xx}^-1 delta + B_{xx}^-1 = w^-1
            CHECK(r.canon(r.inverse(b.a(i, i)) * b.delta_raw() +
                          r.inverse(b.b(i, i))) == w_inv);
        }
        if (b.pi_adequate())
            for (int i = 0; i < x.size(); ++i)
                CHECK(r.canon(b.delta_raw() * b.p(i, i) + b.s(i, i)) == 1);
    }
}

TEST_CASE("bracket rejects a mismatched table size") {
    Psyquandle z9 = load_psy("z9.psy");
    BracketTables t;
    t.n = 3;
    t.A.assign(9, 1);
    t.B.assign(9, 1);
    t.P.assign(9, 0);
    t.S.assign(9, 0);
    CHECK_THROWS_AS(PsyBracket::from_tables(z9, FiniteRing(9), t),
                    std::domain_error);
}
