#include "psyq/bracket.hpp"

#include <stdexcept>

namespace psyq {

namespace {

void require_shape(const Psyquandle& base, const BracketTables& t) {
    int n = base.size();
    std::size_t nn = std::size_t(n) * n;
    if (t.n != n || t.A.size() != nn || t.B.size() != nn || t.P.size() != nn ||
        t.S.size() != nn)
        throw std::domain_error("bracket tables must be " + std::to_string(n) +
                                "x" + std::to_string(n));
}

// Runs all bracket axiom checks. With a report, records every failure;
// without one, stops at the first failure. Returns pass/fail.
bool run_checks(const Psyquandle& X, const Ring& R, const BracketTables& t,
                AxiomReport* rep, long* delta_out, long* w_out) {
    int n = X.size();
    bool ok = true;
    auto fail = [&](const char* id, std::vector<int> witness, long lhs, long rhs) {
        ok = false;
        if (rep) rep->fail(id, std::move(witness), R.text(lhs), R.text(rhs));
    };

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!R.is_unit(t.a(x, y))) {
                fail("b0", {x + 1, y + 1}, t.a(x, y), 0);
                if (!rep) return false;
            }
            if (!R.is_unit(t.b(x, y))) {
                fail("b0", {x + 1, y + 1}, t.b(x, y), 0);
                if (!rep) return false;
            }
        }
    if (!ok) return false;  // delta/w need the inverses

    std::vector<long> ai(std::size_t(n) * n), bi(std::size_t(n) * n);
    for (std::size_t i = 0; i < ai.size(); ++i) {
        ai[i] = R.inverse(t.A[i]);
        bi[i] = R.inverse(t.B[i]);
    }
    auto a = [&](int x, int y) { return t.a(x, y); };
    auto b = [&](int x, int y) { return t.b(x, y); };
    auto p = [&](int x, int y) { return t.p(x, y); };
    auto s = [&](int x, int y) { return t.s(x, y); };
    auto av = [&](int x, int y) { return ai[std::size_t(x) * n + y]; };
    auto bv = [&](int x, int y) { return bi[std::size_t(x) * n + y]; };

    auto pair_delta = [&](int x, int y) {
        return R.sub(R.neg(R.mul(a(x, y), bv(x, y))), R.mul(av(x, y), b(x, y)));
    };
    auto diag_w = [&](int x) {
        return R.neg(R.mul(R.mul(a(x, x), a(x, x)), bv(x, x)));
    };

    long w = diag_w(0);
    bool w_ok = true;
    for (int x = 1; x < n; ++x)
        if (diag_w(x) != w) {
            fail("b1", {1, x + 1}, w, diag_w(x));
            w_ok = false;
            if (!rep) return false;
        }

    long delta = pair_delta(0, 0);
    bool delta_ok = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (pair_delta(x, y) != delta) {
                fail("b2", {1, 1, x + 1, y + 1}, delta, pair_delta(x, y));
                delta_ok = false;
                if (!rep) return false;
            }
    if (delta_out) *delta_out = delta;
    if (w_out) *w_out = w;

    auto u = [&](int x, int y) { return X.ut(x, y); };
    auto o = [&](int x, int y) { return X.ot(x, y); };
    auto bu = [&](int x, int y) { return X.ub(x, y); };
    auto bo = [&](int x, int y) { return X.ob(x, y); };
    auto boi = [&](int x, int y) { return X.ob_inv(x, y); };
    auto m2 = [&](long i, long j) { return R.mul(i, j); };
    auto m3 = [&](long i, long j, long k) { return R.mul(R.mul(i, j), k); };
    auto add4 = [&](long i, long j, long k, long l) {
        return R.add(R.add(i, j), R.add(k, l));
    };

    // (iii)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int lx = u(x, y), ly = o(z, y);       // left crossing output pair
                int rx1 = o(y, x), ry1 = o(z, x);     // middle pair on the right
                int rx2 = u(x, z), ry2 = u(y, z);     // top pair on the right
                std::vector<int> wit{x + 1, y + 1, z + 1};

                long l1 = m3(a(x, y), a(y, z), a(lx, ly));
                long r1 = m3(a(x, z), a(rx1, ry1), a(rx2, ry2));
                if (l1 != r1) { fail("b3.1", wit, l1, r1); if (!rep) return false; }

                long l2 = m3(a(x, y), b(y, z), b(lx, ly));
                long r2 = m3(b(x, z), b(rx1, ry1), a(rx2, ry2));
                if (l2 != r2) { fail("b3.2", wit, l2, r2); if (!rep) return false; }

                long l3 = m3(b(x, y), a(y, z), b(lx, ly));
                long r3 = m3(b(x, z), a(rx1, ry1), b(rx2, ry2));
                if (l3 != r3) { fail("b3.3", wit, l3, r3); if (!rep) return false; }

                if (!delta_ok || !w_ok) continue;

                long l4 = m3(a(x, y), a(y, z), b(lx, ly));
                long r4 = add4(m3(a(x, z), b(rx1, ry1), a(rx2, ry2)),
                               m3(a(x, z), a(rx1, ry1), b(rx2, ry2)),
                               m2(delta, m3(a(x, z), b(rx1, ry1), b(rx2, ry2))),
                               m3(b(x, z), b(rx1, ry1), b(rx2, ry2)));
                if (l4 != r4) { fail("b3.4", wit, l4, r4); if (!rep) return false; }

                long l5 = add4(m3(b(x, y), a(y, z), a(lx, ly)),
                               m3(a(x, y), b(y, z), a(lx, ly)),
                               m2(delta, m3(b(x, y), b(y, z), a(lx, ly))),
                               m3(b(x, y), b(y, z), b(lx, ly)));
                long r5 = m3(b(x, z), a(rx1, ry1), a(rx2, ry2));
                if (l5 != r5) { fail("b3.5", wit, l5, r5); if (!rep) return false; }
            }

    // (iv)
    if (delta_ok && w_ok)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int pp = boi(o(y, x), x);
                int qq = boi(u(x, y), y);
                std::vector<int> wit{x + 1, y + 1};

                long l1 = m2(a(x, y), p(y, qq));
                long r1 = m2(a(pp, qq), p(x, pp));
                if (l1 != r1) { fail("b4.1", wit, l1, r1); if (!rep) return false; }

                long l2 = R.add(R.add(m2(a(x, y), s(y, qq)), m2(b(x, y), p(y, qq))),
                                m2(delta, m2(b(x, y), s(y, qq))));
                long r2 = R.add(R.add(m2(b(pp, qq), p(x, pp)), m2(a(pp, qq), s(x, pp))),
                                m2(delta, m2(b(pp, qq), s(x, pp))));
                if (l2 != r2) { fail("b4.2", wit, l2, r2); if (!rep) return false; }
            }

    // (v)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                std::vector<int> wit{x + 1, y + 1, z + 1};
                // First block: classical crossing below the singular one.
                {
                    int lx = u(x, y), ly = bo(z, y);
                    int rx1 = o(y, x), ry1 = o(z, x);
                    int rx2 = u(x, z), ry2 = bu(y, z);

                    long l1 = m3(a(x, y), p(y, z), a(lx, ly));
                    long r1 = m3(a(x, z), p(rx1, ry1), a(rx2, ry2));
                    if (l1 != r1) { fail("b5.1", wit, l1, r1); if (!rep) return false; }

                    long l2 = m3(a(x, y), s(y, z), b(lx, ly));
                    long r2 = m3(b(x, z), s(rx1, ry1), a(rx2, ry2));
                    if (l2 != r2) { fail("b5.2", wit, l2, r2); if (!rep) return false; }

                    long l3 = m3(b(x, y), p(y, z), b(lx, ly));
                    long r3 = m3(b(x, z), p(rx1, ry1), b(rx2, ry2));
                    if (l3 != r3) { fail("b5.3", wit, l3, r3); if (!rep) return false; }

                    if (delta_ok && w_ok) {
                        long l4 = m3(a(x, y), p(y, z), b(lx, ly));
                        long r4 = add4(m3(a(x, z), s(rx1, ry1), a(rx2, ry2)),
                                       m3(a(x, z), p(rx1, ry1), b(rx2, ry2)),
                                       m2(delta, m3(a(x, z), s(rx1, ry1), b(rx2, ry2))),
                                       m3(b(x, z), s(rx1, ry1), b(rx2, ry2)));
                        if (l4 != r4) { fail("b5.4", wit, l4, r4); if (!rep) return false; }

                        long l5 = add4(m3(b(x, y), p(y, z), a(lx, ly)),
                                       m3(a(x, y), s(y, z), a(lx, ly)),
                                       m2(delta, m3(b(x, y), s(y, z), a(lx, ly))),
                                       m3(b(x, y), s(y, z), b(lx, ly)));
                        long r5 = m3(b(x, z), p(rx1, ry1), a(rx2, ry2));
                        if (l5 != r5) { fail("b5.5", wit, l5, r5); if (!rep) return false; }
                    }
                }
                // Second block: singular crossing below the classical one.
                {
                    int lx = bu(x, y), ly = o(z, y);
                    int rx1 = bo(y, x), ry1 = o(z, x);
                    int rx2 = u(x, z), ry2 = u(y, z);

                    long l6 = m3(p(x, y), a(y, z), a(lx, ly));
                    long r6 = m3(a(x, z), a(rx1, ry1), p(rx2, ry2));
                    if (l6 != r6) { fail("b5.6", wit, l6, r6); if (!rep) return false; }

                    long l7 = m3(s(x, y), a(y, z), b(lx, ly));
                    long r7 = m3(b(x, z), a(rx1, ry1), s(rx2, ry2));
                    if (l7 != r7) { fail("b5.7", wit, l7, r7); if (!rep) return false; }

                    long l8 = m3(p(x, y), b(y, z), b(lx, ly));
                    long r8 = m3(b(x, z), b(rx1, ry1), p(rx2, ry2));
                    if (l8 != r8) { fail("b5.8", wit, l8, r8); if (!rep) return false; }

                    if (delta_ok && w_ok) {
                        long l9 = m3(p(x, y), a(y, z), b(lx, ly));
                        long r9 = add4(m3(a(x, z), b(rx1, ry1), p(rx2, ry2)),
                                       m3(a(x, z), a(rx1, ry1), s(rx2, ry2)),
                                       m2(delta, m3(a(x, z), b(rx1, ry1), s(rx2, ry2))),
                                       m3(b(x, z), b(rx1, ry1), s(rx2, ry2)));
                        if (l9 != r9) { fail("b5.9", wit, l9, r9); if (!rep) return false; }

                        long l10 = add4(m3(p(x, y), b(y, z), a(lx, ly)),
                                        m3(s(x, y), a(y, z), a(lx, ly)),
                                        m2(delta, m3(s(x, y), b(y, z), a(lx, ly))),
                                        m3(s(x, y), b(y, z), b(lx, ly)));
                        long r10 = m3(b(x, z), a(rx1, ry1), p(rx2, ry2));
                        if (l10 != r10) { fail("b5.10", wit, l10, r10); if (!rep) return false; }
                    }
                }
            }

    return ok;
}

}  // namespace

long compute_delta(const Ring& ring, const BracketTables& t) {
    AxiomReport rep;
    long delta = 0;
    auto pair_delta = [&](int x, int y) {
        long a = t.a(x, y), b = t.b(x, y);
        return ring.sub(ring.neg(ring.mul(a, ring.inverse(b))),
                        ring.mul(ring.inverse(a), b));
    };
    delta = pair_delta(0, 0);
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y)
            if (pair_delta(x, y) != delta)
                rep.fail("b2", {1, 1, x + 1, y + 1}, ring.text(delta),
                         ring.text(pair_delta(x, y)));
    if (!rep.pass()) throw AxiomError(std::move(rep));
    return delta;
}

long compute_w(const Ring& ring, const BracketTables& t) {
    AxiomReport rep;
    auto diag_w = [&](int x) {
        long a = t.a(x, x);
        return ring.neg(ring.mul(ring.mul(a, a), ring.inverse(t.b(x, x))));
    };
    long w = diag_w(0);
    for (int x = 1; x < t.n; ++x)
        if (diag_w(x) != w)
            rep.fail("b1", {1, x + 1}, ring.text(w), ring.text(diag_w(x)));
    if (!rep.pass()) throw AxiomError(std::move(rep));
    return w;
}

AxiomReport PsyBracket::check(const Psyquandle& base, const Ring& ring,
                              const BracketTables& tables) {
    require_shape(base, tables);
    AxiomReport rep;
    run_checks(base, ring, tables, &rep, nullptr, nullptr);
    return rep;
}

bool PsyBracket::satisfies(const Psyquandle& base, const Ring& ring,
                           const BracketTables& tables) {
    require_shape(base, tables);
    return run_checks(base, ring, tables, nullptr, nullptr, nullptr);
}

PsyBracket PsyBracket::from_tables(Psyquandle base, FiniteRing ring,
                                   BracketTables tables) {
    require_shape(base, tables);
    for (auto* tab : {&tables.A, &tables.B, &tables.P, &tables.S})
        for (long& v : *tab) v = ring.canon(v);

    AxiomReport rep;
    long delta = 0, w = 0;
    if (!run_checks(base, ring, tables, &rep, &delta, &w))
        throw AxiomError(std::move(rep));
    return PsyBracket(std::move(base), std::move(ring), std::move(tables), delta, w);
}

PsyBracket::PsyBracket(Psyquandle base, FiniteRing ring, BracketTables tables,
                       long delta, long w)
    : base_(std::move(base)),
      ring_(std::move(ring)),
      tables_(std::move(tables)),
      delta_(delta),
      w_(w) {}

bool PsyBracket::pi_adequate() const {
    if (!base_.pi_adequate()) return false;
    for (int x = 0; x < tables_.n; ++x)
        if (ring_.add(ring_.mul(delta_, p(x, x)), s(x, x)) != ring_.one_raw())
            return false;
    return true;
}

}  // namespace psyq
