#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <psyq/psyquandle.hpp>
#include <psyq/ring.hpp>

#include "helpers.hpp"

using namespace psyq;
using psyq::test::load_psy;

TEST_CASE("op table construction") {
    OpTable t = OpTable::from_rows({{1, 2}, {2, 1}});
    CHECK(t.size() == 2);
    CHECK(t.at(0, 0) == 0);
    CHECK(t.at(0, 1) == 1);
    CHECK(t.columns_invertible());
    CHECK_FALSE(OpTable::from_rows({{1, 1}, {1, 1}}).columns_invertible());
    CHECK_THROWS_AS(OpTable::from_rows({{1, 2}, {2}}), std::domain_error);
    CHECK_THROWS_AS(OpTable::from_rows({{0, 2}, {2, 1}}), std::domain_error);
    CHECK_THROWS_AS(OpTable::from_rows({{3, 2}, {2, 1}}), std::domain_error);
    CHECK_THROWS_AS(OpTable::from_rows({}), std::domain_error);
}

TEST_CASE("fixture tables satisfy the axioms") {
    CHECK_NOTHROW(load_psy("ex1.psy"));
    CHECK_NOTHROW(load_psy("z9.psy"));
    CHECK_NOTHROW(load_psy("z6.psy"));
    CHECK_NOTHROW(load_psy("z5_bouquet.psy"));
    CHECK_NOTHROW(load_psy("nonpi.psy"));
}

TEST_CASE("pI-adequacy of the fixtures") {
    CHECK(load_psy("ex1.psy").pi_adequate());
    CHECK(load_psy("z9.psy").pi_adequate());
    CHECK(load_psy("z6.psy").pi_adequate());
    CHECK(load_psy("z5_bouquet.psy").pi_adequate());
    CHECK_FALSE(load_psy("nonpi.psy").pi_adequate());
}

TEST_CASE("axiom failures are reported with witnesses") {
    // ut with a non-invertible column
    OpTable bad = OpTable::from_rows({{1, 1, 1}, {1, 3, 3}, {2, 2, 2}});
    Psyquandle ex1 = load_psy("ex1.psy");
    AxiomReport rep = Psyquandle::check_axioms(bad, ex1.ot_table(),
                                               ex1.ub_table(), ex1.ob_table());
    CHECK_FALSE(rep.pass());
    bool saw_zero = false;
    for (const auto& f : rep.failures) saw_zero |= f.axiom == "0(ut)";
    CHECK(saw_zero);
    CHECK_THROWS_AS(Psyquandle::from_tables(bad, ex1.ot_table(), ex1.ub_table(),
                                            ex1.ob_table()),
                    AxiomError);

    // breaking axiom i: diagonal mismatch between ut and ot
    OpTable id3 = OpTable::from_rows({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}});
    OpTable rot = OpTable::from_rows({{2, 2, 2}, {3, 3, 3}, {1, 1, 1}});
    AxiomReport rep2 = Psyquandle::check_axioms(id3, rot, id3, id3);
    CHECK_FALSE(rep2.pass());
    bool saw_i = false;
    for (const auto& f : rep2.failures)
        if (f.axiom == "i") {
            saw_i = true;
            CHECK(f.witness.size() == 1);
        }
    CHECK(saw_i);
}

TEST_CASE("right inverses invert on all pairs") {
    for (const char* name : {"ex1.psy", "z9.psy", "z6.psy", "nonpi.psy"}) {
        Psyquandle p = load_psy(name);
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y) {
                CHECK(p.ut_inv(p.ut(x, y), y) == x);
                CHECK(p.ot_inv(p.ot(x, y), y) == x);
                CHECK(p.ub_inv(p.ub(x, y), y) == x);
                CHECK(p.ob_inv(p.ob(x, y), y) == x);
                CHECK(p.ut(p.ut_inv(x, y), y) == x);
            }
    }
}

TEST_CASE("pair map inverses undo S and S'") {
    for (const char* name : {"ex1.psy", "z9.psy", "z6.psy"}) {
        Psyquandle p = load_psy(name);
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y) {
                auto [a, b] = p.s_inv(p.ot(y, x), p.ut(x, y));
                CHECK(a == x);
                CHECK(b == y);
                auto [c, d] = p.sp_inv(p.ob(y, x), p.ub(x, y));
                CHECK(c == x);
                CHECK(d == y);
            }
    }
}

TEST_CASE("constant action psyquandles") {
    Psyquandle p = Psyquandle::constant_action(3, {1, 2, 0});
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            int img = (x + 1) % 3;
            CHECK(p.ut(x, y) == img);
            CHECK(p.ot(x, y) == img);
            CHECK(p.ub(x, y) == img);
            CHECK(p.ob(x, y) == img);
        }
    CHECK(p.pi_adequate());
    CHECK_THROWS_AS(Psyquandle::constant_action(3, {0, 0, 1}),
                    std::domain_error);
}

TEST_CASE("homomorphism sanity for constant actions") {
    // maps commuting with sigma are endomorphisms of constant_action
    std::vector<int> sigma{1, 0, 2};
    Psyquandle p = Psyquandle::constant_action(3, sigma);
    int n = 3;
    std::vector<int> f(n);
    for (f[0] = 0; f[0] < n; ++f[0])
        for (f[1] = 0; f[1] < n; ++f[1])
            for (f[2] = 0; f[2] < n; ++f[2]) {
                bool commutes = true;
                for (int x = 0; x < n; ++x)
                    commutes &= f[sigma[x]] == sigma[f[x]];
                if (!commutes) continue;
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y) {
                        CHECK(f[p.ut(x, y)] == p.ut(f[x], f[y]));
                        CHECK(f[p.ob(x, y)] == p.ob(f[x], f[y]));
                    }
            }
}

TEST_CASE("jablan psyquandles") {
    CHECK_NOTHROW(Psyquandle::jablan(5, 1, 2));
    CHECK_THROWS_AS(Psyquandle::jablan(6, 1, 1), std::domain_error);
    CHECK_THROWS_AS(Psyquandle::jablan(5, 0, 3), std::domain_error);
    // s = -t degenerates the singular operations
    CHECK_THROWS_AS(Psyquandle::jablan(5, 2, 3), std::domain_error);

    for (long m : {3L, 5L, 7L, 9L}) {
        FiniteRing r(m);
        for (long s : r.units())
            for (long t : r.units()) {
                if (!r.is_unit(r.canon(s + t))) continue;
                Psyquandle p = Psyquandle::jablan(m, s, t);
                CHECK(p.pi_adequate());
                CHECK(Psyquandle::check_axioms(p.ut_table(), p.ot_table(),
                                               p.ub_table(), p.ob_table())
                          .pass());
            }
    }
}

TEST_CASE("psyquandle search enumerates all structures") {
    int n1 = 0;
    search_psyquandles(1, false, [&](const Psyquandle&) {
        ++n1;
        return true;
    });
    CHECK(n1 == 1);

    Psyquandle z9 = load_psy("z9.psy");
    std::vector<Psyquandle> found;
    search_psyquandles(2, false, [&](const Psyquandle& p) {
        found.push_back(p);
        return true;
    });
    CHECK(found.size() == 4);
    CHECK(std::count(found.begin(), found.end(), z9) == 1);
    for (const Psyquandle& p : found) {
        CHECK(Psyquandle::check_axioms(p.ut_table(), p.ot_table(),
                                       p.ub_table(), p.ob_table())
                  .pass());
        CHECK(p.pi_adequate());  // all 2-element psyquandles are pI-adequate
    }

    // pI filter matches post-filtering
    int n2pi = 0;
    search_psyquandles(2, true, [&](const Psyquandle&) {
        ++n2pi;
        return true;
    });
    CHECK(n2pi == 4);

    // early stop
    int stopped = 0;
    search_psyquandles(2, false, [&](const Psyquandle&) {
        ++stopped;
        return stopped < 2;
    });
    CHECK(stopped == 2);
}

TEST_CASE("search at n=3 finds the three-element fixture") {
    Psyquandle ex1 = load_psy("ex1.psy");
    Psyquandle nonpi = load_psy("nonpi.psy");
    int total = 0, nonpi_count = 0;
    bool saw_ex1 = false, saw_nonpi = false;
    search_psyquandles(3, false, [&](const Psyquandle& p) {
        ++total;
        if (p == ex1) saw_ex1 = true;
        if (p == nonpi) saw_nonpi = true;
        if (!p.pi_adequate()) ++nonpi_count;
        return true;
    });
    CHECK(total == 126);
    CHECK(saw_ex1);
    CHECK(saw_nonpi);
    CHECK(nonpi_count == 18);

    int pi_only = 0;
    search_psyquandles(3, true, [&](const Psyquandle&) {
        ++pi_only;
        return true;
    });
    CHECK(pi_only == 126 - 18);
}
