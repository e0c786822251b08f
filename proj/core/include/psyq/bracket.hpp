#pragma once

#include <vector>

#include "psyq/psyquandle.hpp"
#include "psyq/report.hpp"
#include "psyq/ring.hpp"

namespace psyq {

/// The four n x n coefficient tables of a psyquandle bracket, as raw
/// canonical residues, row-major with row = first index.
struct BracketTables {
    int n = 0;
    std::vector<long> A, B, P, S;

    long a(int x, int y) const { return A[std::size_t(x) * n + y]; }
    long b(int x, int y) const { return B[std::size_t(x) * n + y]; }
    long p(int x, int y) const { return P[std::size_t(x) * n + y]; }
    long s(int x, int y) const { return S[std::size_t(x) * n + y]; }

    bool operator==(const BracketTables&) const = default;
};

/// Common value of -A_{x,y}B_{x,y}^{-1} - A_{x,y}^{-1}B_{x,y} over all
/// pairs; throws AxiomError (axiom b2) listing two disagreeing pairs.
long compute_delta(const Ring& ring, const BracketTables& t);

/// Common value of -A_{x,x}^2 B_{x,x}^{-1} over the diagonal; throws
/// AxiomError (axiom b1) on disagreement.
long compute_w(const Ring& ring, const BracketTables& t);

/// A psyquandle bracket structure: validated coefficient tables over a
/// finite ring, with delta and w cached at construction.
class PsyBracket {
public:
    /// Validates all bracket axioms; throws AxiomError on failure.
    static PsyBracket from_tables(Psyquandle base, FiniteRing ring,
                                  BracketTables tables);

    /// Full axiom report (ids b0, b1, b2, b3.1-b3.5, b4.1-b4.2,
    /// b5.1-b5.10); never throws.
    static AxiomReport check(const Psyquandle& base, const Ring& ring,
                             const BracketTables& tables);

    /// Fail-fast validity test; used by the brute-force oracle.
    static bool satisfies(const Psyquandle& base, const Ring& ring,
                          const BracketTables& tables);

    const Psyquandle& base() const { return base_; }
    const FiniteRing& ring() const { return ring_; }
    const BracketTables& tables() const { return tables_; }

    long a(int x, int y) const { return tables_.a(x, y); }
    long b(int x, int y) const { return tables_.b(x, y); }
    long p(int x, int y) const { return tables_.p(x, y); }
    long s(int x, int y) const { return tables_.s(x, y); }

    long delta_raw() const { return delta_; }
    long w_raw() const { return w_; }
    RingElem delta() const { return ring_.elem(delta_); }
    RingElem w() const { return ring_.elem(w_); }

    /// delta * P_{x,x} + S_{x,x} == 1 for all x, and the base psyquandle
    /// is pI-adequate.
    bool pi_adequate() const;

private:
    PsyBracket(Psyquandle base, FiniteRing ring, BracketTables tables,
               long delta, long w);

    Psyquandle base_;
    FiniteRing ring_;
    BracketTables tables_;
    long delta_;
    long w_;
};

}  // namespace psyq
