#include "psyq/psyquandle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "psyq/ring.hpp"

namespace psyq {

std::string AxiomReport::summary() const {
    if (pass()) return "PASS";
    std::string s;
    for (const auto& f : failures) {
        s += "FAIL axiom " + f.axiom + " at (";
        for (std::size_t i = 0; i < f.witness.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(f.witness[i]);
        }
        s += ")";
        if (!f.lhs.empty() || !f.rhs.empty()) s += ": " + f.lhs + " != " + f.rhs;
        s += "\n";
    }
    if (truncated) s += "... further failures omitted\n";
    return s;
}

AxiomError::AxiomError(AxiomReport report)
    : std::runtime_error(report.summary()), report_(std::move(report)) {}

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      message_(std::move(message)),
      line_(line),
      column_(column) {}

OpTable OpTable::from_rows(const std::vector<std::vector<int>>& rows) {
    int n = int(rows.size());
    if (n == 0) throw std::domain_error("operation table must be non-empty");
    OpTable t(n);
    for (int x = 0; x < n; ++x) {
        if (int(rows[x].size()) != n)
            throw std::domain_error("operation table row " + std::to_string(x + 1) +
                                    " has " + std::to_string(rows[x].size()) +
                                    " entries, expected " + std::to_string(n));
        for (int y = 0; y < n; ++y) {
            int v = rows[x][y];
            if (v < 1 || v > n)
                throw std::domain_error("table entry " + std::to_string(v) +
                                        " at row " + std::to_string(x + 1) +
                                        ", column " + std::to_string(y + 1) +
                                        " out of range 1.." + std::to_string(n));
            t.set(x, y, v - 1);
        }
    }
    return t;
}

bool OpTable::columns_invertible() const {
    for (int y = 0; y < n_; ++y) {
        std::vector<bool> seen(n_, false);
        for (int x = 0; x < n_; ++x) {
            int v = at(x, y);
            if (seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

namespace {

OpTable right_inverse(const OpTable& t) {
    int n = t.size();
    OpTable inv(n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) inv.set(t.at(x, y), y, x);
    return inv;
}

void check_columns(const OpTable& t, const char* name, AxiomReport& rep) {
    int n = t.size();
    for (int y = 0; y < n; ++y) {
        std::vector<int> first(n, -1);
        for (int x = 0; x < n; ++x) {
            int v = t.at(x, y);
            if (first[v] >= 0)
                rep.fail(std::string("0(") + name + ")",
                         {first[v] + 1, x + 1, y + 1}, std::to_string(v + 1),
                         "duplicate in column");
            else
                first[v] = x;
        }
    }
}

void check_pair_map(const OpTable& left, const OpTable& right, const char* id,
                    AxiomReport& rep) {
    // Images of (x,y) |-> (y left x, x right y) must be pairwise distinct.
    int n = left.size();
    std::vector<int> first(std::size_t(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int a = left.at(y, x), b = right.at(x, y);
            int& f = first[std::size_t(a) * n + b];
            if (f >= 0)
                rep.fail(id, {f / n + 1, f % n + 1, x + 1, y + 1},
                         "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")",
                         "image collision");
            else
                f = x * n + y;
        }
}

}  // namespace

AxiomReport Psyquandle::check_axioms(const OpTable& ut, const OpTable& ot,
                                     const OpTable& ub, const OpTable& ob) {
    AxiomReport rep;
    int n = ut.size();
    if (ot.size() != n || ub.size() != n || ob.size() != n)
        throw std::domain_error("operation tables must all have the same size");

    check_columns(ut, "ut", rep);
    check_columns(ot, "ot", rep);
    check_columns(ub, "ub", rep);
    check_columns(ob, "ob", rep);

    auto u = [&](int x, int y) { return ut.at(x, y); };
    auto o = [&](int x, int y) { return ot.at(x, y); };
    auto bu = [&](int x, int y) { return ub.at(x, y); };
    auto bo = [&](int x, int y) { return ob.at(x, y); };
    auto el = [](int v) { return std::to_string(v + 1); };

    for (int x = 0; x < n; ++x)
        if (u(x, x) != o(x, x))
            rep.fail("i", {x + 1}, el(u(x, x)), el(o(x, x)));

    check_pair_map(ot, ut, "ii(S)", rep);
    check_pair_map(ob, ub, "ii(S')", rep);

    // (iii) exchange laws. The displayed equations repeat y on the right
    // hand sides where the worked examples (and the biquandle exchange
    // laws they restrict to) need z; the corrected form is used.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int l1 = u(u(x, y), u(z, y)), r1 = u(u(x, z), o(y, z));
                if (l1 != r1) rep.fail("iii.1", {x + 1, y + 1, z + 1}, el(l1), el(r1));
                int l2 = u(o(x, y), o(z, y)), r2 = o(u(x, z), u(y, z));
                if (l2 != r2) rep.fail("iii.2", {x + 1, y + 1, z + 1}, el(l2), el(r2));
                int l3 = o(o(x, y), o(z, y)), r3 = o(o(x, z), u(y, z));
                if (l3 != r3) rep.fail("iii.3", {x + 1, y + 1, z + 1}, el(l3), el(r3));
            }

    // (iv) needs the right inverses of ub and ob.
    if (ub.columns_invertible() && ob.columns_invertible()) {
        OpTable ubi = right_inverse(ub), obi = right_inverse(ob);
        auto bui = [&](int x, int y) { return ubi.at(x, y); };
        auto boi = [&](int x, int y) { return obi.at(x, y); };
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int l1 = bu(x, boi(o(y, x), x));
                int r1 = o(boi(u(x, y), y), bui(o(y, x), x));
                if (l1 != r1) rep.fail("iv.1", {x + 1, y + 1}, el(l1), el(r1));
                int l2 = bu(y, boi(u(x, y), y));
                int r2 = u(boi(o(y, x), x), boi(u(x, y), y));
                if (l2 != r2) rep.fail("iv.2", {x + 1, y + 1}, el(l2), el(r2));
            }
    }

    // (v)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int l1 = o(o(x, y), bo(z, y)), r1 = o(o(x, z), bu(y, z));
                if (l1 != r1) rep.fail("v.1", {x + 1, y + 1, z + 1}, el(l1), el(r1));
                int l2 = u(u(x, y), bo(z, y)), r2 = u(u(x, z), bu(y, z));
                if (l2 != r2) rep.fail("v.2", {x + 1, y + 1, z + 1}, el(l2), el(r2));
                int l3 = bo(o(x, y), o(z, y)), r3 = o(bo(x, z), u(y, z));
                if (l3 != r3) rep.fail("v.3", {x + 1, y + 1, z + 1}, el(l3), el(r3));
                int l4 = bu(u(x, y), u(z, y)), r4 = u(bu(x, z), o(y, z));
                if (l4 != r4) rep.fail("v.4", {x + 1, y + 1, z + 1}, el(l4), el(r4));
                int l5 = bu(o(x, y), o(z, y)), r5 = o(bu(x, z), u(y, z));
                if (l5 != r5) rep.fail("v.5", {x + 1, y + 1, z + 1}, el(l5), el(r5));
                int l6 = bo(u(x, y), u(z, y)), r6 = u(bo(x, z), o(y, z));
                if (l6 != r6) rep.fail("v.6", {x + 1, y + 1, z + 1}, el(l6), el(r6));
            }

    return rep;
}

Psyquandle Psyquandle::from_tables(const OpTable& ut, const OpTable& ot,
                                   const OpTable& ub, const OpTable& ob) {
    AxiomReport rep = check_axioms(ut, ot, ub, ob);
    if (!rep.pass()) throw AxiomError(std::move(rep));

    Psyquandle p;
    p.n_ = ut.size();
    p.ut_ = ut;
    p.ot_ = ot;
    p.ub_ = ub;
    p.ob_ = ob;
    p.uti_ = right_inverse(ut);
    p.oti_ = right_inverse(ot);
    p.ubi_ = right_inverse(ub);
    p.obi_ = right_inverse(ob);

    int n = p.n_;
    p.s_inv_.assign(std::size_t(n) * n, {-1, -1});
    p.sp_inv_.assign(std::size_t(n) * n, {-1, -1});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            p.s_inv_[std::size_t(ot.at(y, x)) * n + ut.at(x, y)] = {x, y};
            p.sp_inv_[std::size_t(ob.at(y, x)) * n + ub.at(x, y)] = {x, y};
        }
    return p;
}

Psyquandle Psyquandle::constant_action(int n, const std::vector<int>& sigma) {
    if (int(sigma.size()) != n)
        throw std::domain_error("sigma must have length " + std::to_string(n));
    std::vector<bool> seen(n, false);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[v])
            throw std::domain_error("sigma is not a permutation of 0.." +
                                    std::to_string(n - 1));
        seen[v] = true;
    }
    OpTable t(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.set(x, y, sigma[x]);
    return from_tables(t, t, t, t);
}

Psyquandle Psyquandle::jablan(long m, long s, long t) {
    FiniteRing r(m);
    for (long v : {2L, s, t})
        if (!r.is_unit(v))
            throw std::domain_error(std::to_string(v) + " is not a unit mod " +
                                    std::to_string(m));
    // x bu y = ((s+t)/2)x + ((s-t)/2)y is right-invertible in x only when
    // s + t is a unit; s = -t degenerates the singular operations.
    if (!r.is_unit(r.canon(s + t)))
        throw std::domain_error("s + t = " + std::to_string(r.canon(s + t)) +
                                " is not a unit mod " + std::to_string(m));
    long half_sum = r.mul(r.inverse(2), r.canon(s + t));
    long half_diff = r.mul(r.inverse(2), r.canon(s - t));
    int n = int(m);
    OpTable ut(n), ot(n), ub(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            ut.set(x, y, int(r.canon(t * x + (s - t) * y)));
            ot.set(x, y, int(r.canon(s * x)));
            ub.set(x, y, int(r.canon(half_sum * x + half_diff * y)));
        }
    return from_tables(ut, ot, ub, ub);
}

bool Psyquandle::pi_adequate() const {
    for (int x = 0; x < n_; ++x)
        if (ub_.at(x, x) != ob_.at(x, x)) return false;
    return true;
}

namespace {

// Backtracking enumeration of the four tables in flattened order
// (ut, ot, ub, ob; row-major), with the column-permutation constraint
// applied during generation and axiom subsets checked as soon as the
// participating tables are complete.
class PsyquandleSearch {
public:
    PsyquandleSearch(int n, bool require_pi,
                     const std::function<bool(const Psyquandle&)>& sink)
        : n_(n), require_pi_(require_pi), sink_(sink),
          tables_{OpTable(n), OpTable(n), OpTable(n), OpTable(n)} {}

    void run() { fill(0, 0); }

private:
    bool boundary_ok(int stage) const {
        const OpTable& ut = tables_[0];
        const OpTable& ot = tables_[1];
        const OpTable& ub = tables_[2];
        const OpTable& ob = tables_[3];
        auto u = [&](int x, int y) { return ut.at(x, y); };
        auto o = [&](int x, int y) { return ot.at(x, y); };

        if (stage == 1) {
            // S bijective + exchange laws; (i) was enforced per-entry.
            std::vector<bool> seen(std::size_t(n_) * n_, false);
            for (int x = 0; x < n_; ++x)
                for (int y = 0; y < n_; ++y) {
                    std::size_t img = std::size_t(o(y, x)) * n_ + u(x, y);
                    if (seen[img]) return false;
                    seen[img] = true;
                }
            for (int x = 0; x < n_; ++x)
                for (int y = 0; y < n_; ++y)
                    for (int z = 0; z < n_; ++z) {
                        if (u(u(x, y), u(z, y)) != u(u(x, z), o(y, z))) return false;
                        if (u(o(x, y), o(z, y)) != o(u(x, z), u(y, z))) return false;
                        if (o(o(x, y), o(z, y)) != o(o(x, z), u(y, z))) return false;
                    }
            return true;
        }
        if (stage == 2) {
            // v.4 involves ub only among the bullet tables.
            auto bu = [&](int x, int y) { return ub.at(x, y); };
            for (int x = 0; x < n_; ++x)
                for (int y = 0; y < n_; ++y)
                    for (int z = 0; z < n_; ++z)
                        if (bu(u(x, y), u(z, y)) != u(bu(x, z), o(y, z)))
                            return false;
            return true;
        }
        if (stage == 3) {
            if (!Psyquandle::check_axioms(ut, ot, ub, ob).pass()) return false;
            if (require_pi_) {
                for (int x = 0; x < n_; ++x)
                    if (ub.at(x, x) != ob.at(x, x)) return false;
            }
            return true;
        }
        return true;
    }

    // Returns false when the sink requested a stop.
    bool fill(int stage, int entry) {
        if (entry == n_ * n_) {
            if (!boundary_ok(stage)) return true;
            if (stage == 3) {
                Psyquandle p = Psyquandle::from_tables(tables_[0], tables_[1],
                                                       tables_[2], tables_[3]);
                return sink_(p);
            }
            return fill(stage + 1, 0);
        }
        int x = entry / n_, y = entry % n_;
        OpTable& t = tables_[stage];
        for (int v = 0; v < n_; ++v) {
            bool dup = false;
            for (int xp = 0; xp < x && !dup; ++xp)
                if (t.at(xp, y) == v) dup = true;
            if (dup) continue;
            if (stage == 1 && x == y && tables_[0].at(x, x) != v) continue;
            t.set(x, y, v);
            if (!fill(stage, entry + 1)) return false;
        }
        return true;
    }

    int n_;
    bool require_pi_;
    const std::function<bool(const Psyquandle&)>& sink_;
    OpTable tables_[4];
};

}  // namespace

void search_psyquandles(int n, bool require_pi,
                        const std::function<bool(const Psyquandle&)>& sink) {
    if (n < 1) throw std::domain_error("cardinality must be at least 1");
    PsyquandleSearch(n, require_pi, sink).run();
}

}  // namespace psyq
