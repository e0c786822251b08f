#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "psyq/report.hpp"

namespace psyq {

/// An n x n binary operation table. Rows are left operands.
/// Entries are stored 0-based; all file formats and reports are 1-based.
class OpTable {
public:
    OpTable() = default;
    OpTable(int n, int fill = 0) : n_(n), t_(std::size_t(n) * n, fill) {}

    /// Build from 1-based rows, validating shape and range.
    static OpTable from_rows(const std::vector<std::vector<int>>& rows);

    int size() const { return n_; }
    int at(int x, int y) const { return t_[std::size_t(x) * n_ + y]; }
    void set(int x, int y, int v) { t_[std::size_t(x) * n_ + y] = v; }

    /// True iff every column is a permutation of 0..n-1.
    bool columns_invertible() const;

    bool operator==(const OpTable&) const = default;

private:
    int n_ = 0;
    std::vector<int> t_;
};

/// A finite psyquandle given by its four operation tables, validated
/// against the axioms, with right-inverse tables and the inverses of
/// the pair maps S and S' precomputed.
class Psyquandle {
public:
    /// Validates the tables; throws AxiomError on any axiom failure.
    static Psyquandle from_tables(const OpTable& ut, const OpTable& ot,
                                  const OpTable& ub, const OpTable& ob);

    /// Exhaustively checks axioms (0)-(v); never throws.
    static AxiomReport check_axioms(const OpTable& ut, const OpTable& ot,
                                    const OpTable& ub, const OpTable& ob);

    /// All four operations map (x, y) to sigma(x); sigma is a 0-based
    /// permutation of 0..n-1.
    static Psyquandle constant_action(int n, const std::vector<int>& sigma);

    /// Jablan psyquandle on Z_m with units s, t; requires 2, s, t units mod m.
    static Psyquandle jablan(long m, long s, long t);

    int size() const { return n_; }

    // The four operations and their right inverses, 0-based.
    int ut(int x, int y) const { return ut_.at(x, y); }
    int ot(int x, int y) const { return ot_.at(x, y); }
    int ub(int x, int y) const { return ub_.at(x, y); }
    int ob(int x, int y) const { return ob_.at(x, y); }
    int ut_inv(int x, int y) const { return uti_.at(x, y); }
    int ot_inv(int x, int y) const { return oti_.at(x, y); }
    int ub_inv(int x, int y) const { return ubi_.at(x, y); }
    int ob_inv(int x, int y) const { return obi_.at(x, y); }

    /// Inverse of the pair map S(x,y) = (y ot x, x ut y).
    std::pair<int, int> s_inv(int a, int b) const { return s_inv_[std::size_t(a) * n_ + b]; }
    /// Inverse of the pair map S'(x,y) = (y ob x, x ub y).
    std::pair<int, int> sp_inv(int a, int b) const { return sp_inv_[std::size_t(a) * n_ + b]; }

    /// x ub x == x ob x for all x.
    bool pi_adequate() const;

    const OpTable& ut_table() const { return ut_; }
    const OpTable& ot_table() const { return ot_; }
    const OpTable& ub_table() const { return ub_; }
    const OpTable& ob_table() const { return ob_; }

    bool operator==(const Psyquandle& other) const {
        return ut_ == other.ut_ && ot_ == other.ot_ && ub_ == other.ub_ &&
               ob_ == other.ob_;
    }

private:
    Psyquandle() = default;

    int n_ = 0;
    OpTable ut_, ot_, ub_, ob_;
    OpTable uti_, oti_, ubi_, obi_;
    std::vector<std::pair<int, int>> s_inv_, sp_inv_;
};

/// Enumerate all psyquandle structures of cardinality n in lexicographic
/// order of the flattened tables (ut, ot, ub, ob; row-major). The sink
/// returns false to stop early.
void search_psyquandles(int n, bool require_pi,
                        const std::function<bool(const Psyquandle&)>& sink);

}  // namespace psyq
