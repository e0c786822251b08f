#include "psyq/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace psyq {

namespace {

// Flattened-variable backtracker. Slot layout: A entries first (row-major),
// then B, P, S. A/B domains are the units of Z_m; P/S all residues.
// Every axiom instance is checked as soon as its last participating slot
// is assigned; delta and w are fixed once B_{1,1} is chosen.
class BracketSearch {
public:
    BracketSearch(const SearchSpec& spec,
                  const std::function<bool(const PsyBracket&)>& sink)
        : x_(*spec.psyquandle),
          ring_(spec.modulus),
          spec_(spec),
          sink_(sink),
          n_(x_.size()),
          nn_(n_ * n_),
          vals_(std::size_t(4) * nn_, 0) {
        units_ = ring_.units();
        residues_.resize(spec.modulus);
        for (long v = 0; v < spec.modulus; ++v) residues_[v] = v;
        build_constraints();
    }

    SearchStats run() {
        auto start = std::chrono::steady_clock::now();
        assign(0, !spec_.resume.empty());
        stats_.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        return stats_;
    }

private:
    struct Constraint {
        const char* id;
        std::function<bool(const BracketSearch&)> ok;
    };

    int slot_a(int x, int y) const { return x * n_ + y; }
    int slot_b(int x, int y) const { return nn_ + x * n_ + y; }
    int slot_p(int x, int y) const { return 2 * nn_ + x * n_ + y; }
    int slot_s(int x, int y) const { return 3 * nn_ + x * n_ + y; }

    long va(int x, int y) const { return vals_[slot_a(x, y)]; }
    long vb(int x, int y) const { return vals_[slot_b(x, y)]; }
    long vp(int x, int y) const { return vals_[slot_p(x, y)]; }
    long vs(int x, int y) const { return vals_[slot_s(x, y)]; }

    void add(const char* id, std::vector<int> slots,
             std::function<bool(const BracketSearch&)> ok) {
        int last = *std::max_element(slots.begin(), slots.end());
        buckets_[last].push_back({id, std::move(ok)});
    }

    void build_constraints() {
        buckets_.assign(vals_.size(), {});
        const Psyquandle& X = x_;
        const FiniteRing& R = ring_;
        int n = n_;

        auto u = [&X](int x, int y) { return X.ut(x, y); };
        auto o = [&X](int x, int y) { return X.ot(x, y); };
        auto bu = [&X](int x, int y) { return X.ub(x, y); };
        auto bo = [&X](int x, int y) { return X.ob(x, y); };

        // delta / w consistency, entry by entry.
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == 0 && y == 0) continue;
                add("b2", {slot_a(x, y), slot_b(x, y)},
                    [x, y, &R](const BracketSearch& s) {
                        long a = s.va(x, y), b = s.vb(x, y);
                        return R.sub(R.neg(R.mul(a, R.inverse(b))),
                                     R.mul(R.inverse(a), b)) == s.delta_;
                    });
                if (x == y)
                    add("b1", {slot_b(x, x)}, [x, &R](const BracketSearch& s) {
                        long a = s.va(x, x);
                        return R.neg(R.mul(R.mul(a, a), R.inverse(s.vb(x, x)))) ==
                               s.w_;
                    });
            }

        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    int lx = u(x, y), ly = o(z, y);
                    int r1x = o(y, x), r1y = o(z, x);
                    int r2x = u(x, z), r2y = u(y, z);

                    add("b3.1",
                        {slot_a(x, y), slot_a(y, z), slot_a(lx, ly), slot_a(x, z),
                         slot_a(r1x, r1y), slot_a(r2x, r2y)},
                        [=, &R](const BracketSearch& s) {
                            return R.mul(R.mul(s.va(x, y), s.va(y, z)), s.va(lx, ly)) ==
                                   R.mul(R.mul(s.va(x, z), s.va(r1x, r1y)),
                                         s.va(r2x, r2y));
                        });
                    add("b3.2",
                        {slot_a(x, y), slot_b(y, z), slot_b(lx, ly), slot_b(x, z),
                         slot_b(r1x, r1y), slot_a(r2x, r2y)},
                        [=, &R](const BracketSearch& s) {
                            return R.mul(R.mul(s.va(x, y), s.vb(y, z)), s.vb(lx, ly)) ==
                                   R.mul(R.mul(s.vb(x, z), s.vb(r1x, r1y)),
                                         s.va(r2x, r2y));
                        });
                    add("b3.3",
                        {slot_b(x, y), slot_a(y, z), slot_b(lx, ly), slot_b(x, z),
                         slot_a(r1x, r1y), slot_b(r2x, r2y)},
                        [=, &R](const BracketSearch& s) {
                            return R.mul(R.mul(s.vb(x, y), s.va(y, z)), s.vb(lx, ly)) ==
                                   R.mul(R.mul(s.vb(x, z), s.va(r1x, r1y)),
                                         s.vb(r2x, r2y));
                        });
                    add("b3.4",
                        {slot_a(x, y), slot_a(y, z), slot_b(lx, ly), slot_a(x, z),
                         slot_b(r1x, r1y), slot_a(r2x, r2y), slot_b(x, z),
                         slot_a(r1x, r1y), slot_b(r2x, r2y)},
                        [=, &R](const BracketSearch& s) {
                            long lhs = R.mul(R.mul(s.va(x, y), s.va(y, z)),
                                             s.vb(lx, ly));
                            long rhs = R.add(
                                R.add(R.mul(R.mul(s.va(x, z), s.vb(r1x, r1y)),
                                            s.va(r2x, r2y)),
                                      R.mul(R.mul(s.va(x, z), s.va(r1x, r1y)),
                                            s.vb(r2x, r2y))),
                                R.add(R.mul(s.delta_,
                                            R.mul(R.mul(s.va(x, z), s.vb(r1x, r1y)),
                                                  s.vb(r2x, r2y))),
                                      R.mul(R.mul(s.vb(x, z), s.vb(r1x, r1y)),
                                            s.vb(r2x, r2y))));
                            return lhs == rhs;
                        });
                    add("b3.5",
                        {slot_b(x, y), slot_a(y, z), slot_a(lx, ly), slot_a(x, y),
                         slot_b(y, z), slot_b(lx, ly), slot_b(x, z),
                         slot_a(r1x, r1y), slot_a(r2x, r2y)},
                        [=, &R](const BracketSearch& s) {
                            long lhs = R.add(
                                R.add(R.mul(R.mul(s.vb(x, y), s.va(y, z)),
                                            s.va(lx, ly)),
                                      R.mul(R.mul(s.va(x, y), s.vb(y, z)),
                                            s.va(lx, ly))),
                                R.add(R.mul(s.delta_,
                                            R.mul(R.mul(s.vb(x, y), s.vb(y, z)),
                                                  s.va(lx, ly))),
                                      R.mul(R.mul(s.vb(x, y), s.vb(y, z)),
                                            s.vb(lx, ly))));
                            long rhs = R.mul(R.mul(s.vb(x, z), s.va(r1x, r1y)),
                                             s.va(r2x, r2y));
                            return lhs == rhs;
                        });
                }

        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int pp = X.ob_inv(o(y, x), x);
                int qq = X.ob_inv(u(x, y), y);
                add("b4.1",
                    {slot_a(x, y), slot_p(y, qq), slot_a(pp, qq), slot_p(x, pp)},
                    [=, &R](const BracketSearch& s) {
                        return R.mul(s.va(x, y), s.vp(y, qq)) ==
                               R.mul(s.va(pp, qq), s.vp(x, pp));
                    });
                add("b4.2",
                    {slot_a(x, y), slot_s(y, qq), slot_b(x, y), slot_p(y, qq),
                     slot_b(pp, qq), slot_p(x, pp), slot_a(pp, qq), slot_s(x, pp)},
                    [=, &R](const BracketSearch& s) {
                        long lhs = R.add(
                            R.add(R.mul(s.va(x, y), s.vs(y, qq)),
                                  R.mul(s.vb(x, y), s.vp(y, qq))),
                            R.mul(s.delta_, R.mul(s.vb(x, y), s.vs(y, qq))));
                        long rhs = R.add(
                            R.add(R.mul(s.vb(pp, qq), s.vp(x, pp)),
                                  R.mul(s.va(pp, qq), s.vs(x, pp))),
                            R.mul(s.delta_, R.mul(s.vb(pp, qq), s.vs(x, pp))));
                        return lhs == rhs;
                    });
            }

        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    {
                        // classical below singular
                        int lx = u(x, y), ly = bo(z, y);
                        int r1x = o(y, x), r1y = o(z, x);
                        int r2x = u(x, z), r2y = bu(y, z);
                        add("b5.1",
                            {slot_a(x, y), slot_p(y, z), slot_a(lx, ly),
                             slot_a(x, z), slot_p(r1x, r1y), slot_a(r2x, r2y)},
                            [=, &R](const BracketSearch& s) {
                                return R.mul(R.mul(s.va(x, y), s.vp(y, z)),
                                             s.va(lx, ly)) ==
                                       R.mul(R.mul(s.va(x, z), s.vp(r1x, r1y)),
                                             s.va(r2x, r2y));
                            });
                        add("b5.2",
                            {slot_a(x, y), slot_s(y, z), slot_b(lx, ly),
                             slot_b(x, z), slot_s(r1x, r1y), slot_a(r2x, r2y)},
                            [=, &R](const BracketSearch& s) {
                                return R.mul(R.mul(s.va(x, y), s.vs(y, z)),
                                             s.vb(lx, ly)) ==
                                       R.mul(R.mul(s.vb(x, z), s.vs(r1x, r1y)),
                                             s.va(r2x, r2y));
                            });
                        add("b5.3",
                            {slot_b(x, y), slot_p(y, z), slot_b(lx, ly),
                             slot_b(x, z), slot_p(r1x, r1y), slot_b(r2x, r2y)},
                            [=, &R](const BracketSearch& s) {
                                return R.mul(R.mul(s.vb(x, y), s.vp(y, z)),
                                             s.vb(lx, ly)) ==
                                       R.mul(R.mul(s.vb(x, z), s.vp(r1x, r1y)),
                                             s.vb(r2x, r2y));
                            });
                        add("b5.4",
                            {slot_a(x, y), slot_p(y, z), slot_b(lx, ly),
                             slot_a(x, z), slot_s(r1x, r1y), slot_a(r2x, r2y),
                             slot_p(r1x, r1y), slot_b(r2x, r2y), slot_b(x, z)},
                            [=, &R](const BracketSearch& s) {
                                long lhs = R.mul(R.mul(s.va(x, y), s.vp(y, z)),
                                                 s.vb(lx, ly));
                                long rhs = R.add(
                                    R.add(R.mul(R.mul(s.va(x, z), s.vs(r1x, r1y)),
                                                s.va(r2x, r2y)),
                                          R.mul(R.mul(s.va(x, z), s.vp(r1x, r1y)),
                                                s.vb(r2x, r2y))),
                                    R.add(R.mul(s.delta_,
                                                R.mul(R.mul(s.va(x, z),
                                                            s.vs(r1x, r1y)),
                                                      s.vb(r2x, r2y))),
                                          R.mul(R.mul(s.vb(x, z), s.vs(r1x, r1y)),
                                                s.vb(r2x, r2y))));
                                return lhs == rhs;
                            });
                        add("b5.5",
                            {slot_b(x, y), slot_p(y, z), slot_a(lx, ly),
                             slot_a(x, y), slot_s(y, z), slot_b(lx, ly),
                             slot_b(x, z), slot_p(r1x, r1y), slot_a(r2x, r2y)},
                            [=, &R](const BracketSearch& s) {
                                long lhs = R.add(
                                    R.add(R.mul(R.mul(s.vb(x, y), s.vp(y, z)),
                                                s.va(lx, ly)),
                                          R.mul(R.mul(s.va(x, y), s.vs(y, z)),
                                                s.va(lx, ly))),
                                    R.add(R.mul(s.delta_,
                                                R.mul(R.mul(s.vb(x, y),
                                                            s.vs(y, z)),
                                                      s.va(lx, ly))),
                                          R.mul(R.mul(s.vb(x, y), s.vs(y, z)),
                                                s.vb(lx, ly))));
                                long rhs = R.mul(R.mul(s.vb(x, z), s.vp(r1x, r1y)),
                                                 s.va(r2x, r2y));
                                return lhs == rhs;
                            });
                    }
                    {
                        // singular below classical
                        int lx = bu(x, y), ly = o(z, y);
                        int r1x = bo(y, x), r1y = o(z, x);
                        int r2x = u(x, z), r2y = u(y, z);
                        add("b5.6",
                            {slot_p(x, y), slot_a(y, z), slot_a(lx, ly),
                             slot_a(x, z), slot_a(r1x, r1y), slot_p(r2x, r2y)},
                            [=, &R](const BracketSearch& s) {
                                return R.mul(R.mul(s.vp(x, y), s.va(y, z)),
                                             s.va(lx, ly)) ==
                                       R.mul(R.mul(s.va(x, z), s.va(r1x, r1y)),
                                             s.vp(r2x, r2y));
                            });
                        add("b5.7",
                            {slot_s(x, y), slot_a(y, z), slot_b(lx, ly),
                             slot_b(x, z), slot_a(r1x, r1y), slot_s(r2x, r2y)},
                            [=, &R](const BracketSearch& s) {
                                return R.mul(R.mul(s.vs(x, y), s.va(y, z)),
                                             s.vb(lx, ly)) ==
                                       R.mul(R.mul(s.vb(x, z), s.va(r1x, r1y)),
                                             s.vs(r2x, r2y));
                            });
                        add("b5.8",
                            {slot_p(x, y), slot_b(y, z), slot_b(lx, ly),
                             slot_b(x, z), slot_b(r1x, r1y), slot_p(r2x, r2y)},
                            [=, &R](const BracketSearch& s) {
                                return R.mul(R.mul(s.vp(x, y), s.vb(y, z)),
                                             s.vb(lx, ly)) ==
                                       R.mul(R.mul(s.vb(x, z), s.vb(r1x, r1y)),
                                             s.vp(r2x, r2y));
                            });
                        add("b5.9",
                            {slot_p(x, y), slot_a(y, z), slot_b(lx, ly),
                             slot_a(x, z), slot_b(r1x, r1y), slot_p(r2x, r2y),
                             slot_s(r2x, r2y), slot_b(x, z)},
                            [=, &R](const BracketSearch& s) {
                                long lhs = R.mul(R.mul(s.vp(x, y), s.va(y, z)),
                                                 s.vb(lx, ly));
                                long rhs = R.add(
                                    R.add(R.mul(R.mul(s.va(x, z), s.vb(r1x, r1y)),
                                                s.vp(r2x, r2y)),
                                          R.mul(R.mul(s.va(x, z), s.va(r1x, r1y)),
                                                s.vs(r2x, r2y))),
                                    R.add(R.mul(s.delta_,
                                                R.mul(R.mul(s.va(x, z),
                                                            s.vb(r1x, r1y)),
                                                      s.vs(r2x, r2y))),
                                          R.mul(R.mul(s.vb(x, z), s.vb(r1x, r1y)),
                                                s.vs(r2x, r2y))));
                                return lhs == rhs;
                            });
                        add("b5.10",
                            {slot_p(x, y), slot_b(y, z), slot_a(lx, ly),
                             slot_s(x, y), slot_a(y, z), slot_b(lx, ly),
                             slot_b(x, z), slot_a(r1x, r1y), slot_p(r2x, r2y)},
                            [=, &R](const BracketSearch& s) {
                                long lhs = R.add(
                                    R.add(R.mul(R.mul(s.vp(x, y), s.vb(y, z)),
                                                s.va(lx, ly)),
                                          R.mul(R.mul(s.vs(x, y), s.va(y, z)),
                                                s.va(lx, ly))),
                                    R.add(R.mul(s.delta_,
                                                R.mul(R.mul(s.vs(x, y),
                                                            s.vb(y, z)),
                                                      s.va(lx, ly))),
                                          R.mul(R.mul(s.vs(x, y), s.vb(y, z)),
                                                s.vb(lx, ly))));
                                long rhs = R.mul(R.mul(s.vb(x, z), s.va(r1x, r1y)),
                                                 s.vp(r2x, r2y));
                                return lhs == rhs;
                            });
                    }
                }

        if (spec_.require_pi)
            for (int x = 0; x < n; ++x)
                add("bPI", {slot_p(x, x), slot_s(x, x)},
                    [x, &R](const BracketSearch& s) {
                        return R.add(R.mul(s.delta_, s.vp(x, x)), s.vs(x, x)) ==
                               R.one_raw();
                    });
    }

    const std::vector<long>& domain(int slot) const {
        return slot < 2 * nn_ ? units_ : residues_;
    }

    // Returns false when the sink asked to stop or the limit was reached.
    bool assign(int slot, bool bound) {
        if (slot == int(vals_.size())) return emit();
        long lower = bound && slot < int(spec_.resume.size()) ? spec_.resume[slot]
                                                              : -1;
        for (long v : domain(slot)) {
            if (v < lower) continue;
            vals_[slot] = v;
            ++stats_.nodes;
            if (slot == slot_b(0, 0)) {
                long a = va(0, 0);
                delta_ = ring_.sub(ring_.neg(ring_.mul(a, ring_.inverse(v))),
                                   ring_.mul(ring_.inverse(a), v));
                w_ = ring_.neg(ring_.mul(ring_.mul(a, a), ring_.inverse(v)));
            }
            bool ok = true;
            for (const Constraint& c : buckets_[slot])
                if (!c.ok(*this)) {
                    ++stats_.prunes[c.id];
                    ok = false;
                    break;
                }
            if (ok && !assign(slot + 1, bound && v == lower)) return false;
        }
        return true;
    }

    bool emit() {
        BracketTables t;
        t.n = n_;
        t.A.assign(vals_.begin(), vals_.begin() + nn_);
        t.B.assign(vals_.begin() + nn_, vals_.begin() + 2 * nn_);
        t.P.assign(vals_.begin() + 2 * nn_, vals_.begin() + 3 * nn_);
        t.S.assign(vals_.begin() + 3 * nn_, vals_.end());
        PsyBracket br = PsyBracket::from_tables(x_, ring_, std::move(t));
        ++stats_.results;
        if (!sink_(br)) return false;
        return stats_.results < spec_.limit;
    }

    const Psyquandle& x_;
    FiniteRing ring_;
    const SearchSpec& spec_;
    const std::function<bool(const PsyBracket&)>& sink_;
    int n_, nn_;
    std::vector<long> vals_;
    std::vector<long> units_, residues_;
    std::vector<std::vector<Constraint>> buckets_;
    long delta_ = 0, w_ = 0;
    SearchStats stats_;
};

}  // namespace

SearchStats search_brackets(const SearchSpec& spec,
                            const std::function<bool(const PsyBracket&)>& sink) {
    if (spec.psyquandle == nullptr)
        throw std::domain_error("search spec needs a psyquandle");
    if (spec.modulus < 2)
        throw std::domain_error("search modulus must be at least 2");
    if (spec.limit < 1) throw std::domain_error("search limit must be at least 1");
    for (long v : spec.resume)
        if (v < 0 || v >= spec.modulus)
            throw std::domain_error("resume token entry out of range");
    BracketSearch search(spec, sink);
    return search.run();
}

std::vector<PsyBracket> brute_force_brackets(const Psyquandle& x, long m) {
    int n = x.size();
    int slots = 4 * n * n;
    if (std::pow(double(m), double(slots)) > 1e8)
        throw PreconditionError("brute-force bracket space exceeds 10^8");

    FiniteRing ring(m);
    std::vector<PsyBracket> out;
    BracketTables t;
    t.n = n;
    std::size_t nn = std::size_t(n) * n;
    t.A.assign(nn, 0);
    t.B.assign(nn, 0);
    t.P.assign(nn, 0);
    t.S.assign(nn, 0);
    std::vector<long*> flat;
    for (auto* tab : {&t.A, &t.B, &t.P, &t.S})
        for (long& v : *tab) flat.push_back(&v);

    for (;;) {
        if (PsyBracket::satisfies(x, ring, t))
            out.push_back(PsyBracket::from_tables(x, ring, t));
        int i = slots - 1;
        while (i >= 0 && *flat[i] == m - 1) *flat[i--] = 0;
        if (i < 0) break;
        ++*flat[i];
    }
    return out;
}

}  // namespace psyq
