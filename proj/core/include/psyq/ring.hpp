#pragma once

#include <string>
#include <vector>

namespace psyq {

class Ring;

/// An element of a Ring, stored as the ring's canonical representative.
/// Mixed-ring arithmetic throws std::domain_error.
struct RingElem {
    long raw = 0;
    const Ring* ring = nullptr;

    bool is_unit() const;
    RingElem inverse() const;
    RingElem pow(long e) const;
    std::string text() const;

    friend RingElem operator+(RingElem a, RingElem b);
    friend RingElem operator-(RingElem a, RingElem b);
    friend RingElem operator*(RingElem a, RingElem b);
    friend RingElem operator-(RingElem a);
    friend bool operator==(RingElem a, RingElem b);
    friend bool operator!=(RingElem a, RingElem b) { return !(a == b); }
};

/// Commutative unital ring interface over raw canonical values.
/// Only Z_m is implemented; the interface is the extension point for
/// other coefficient rings.
class Ring {
public:
    virtual ~Ring() = default;

    virtual long add(long a, long b) const = 0;
    virtual long sub(long a, long b) const = 0;
    virtual long mul(long a, long b) const = 0;
    virtual long neg(long a) const = 0;
    virtual long zero_raw() const = 0;
    virtual long one_raw() const = 0;
    virtual bool is_unit(long a) const = 0;
    /// Multiplicative inverse; throws std::domain_error naming the element.
    virtual long inverse(long a) const = 0;
    /// Canonicalize an arbitrary integer into this ring.
    virtual long canon(long v) const = 0;
    virtual std::string text(long a) const = 0;
    virtual bool same(const Ring& other) const = 0;

    /// a^e; negative e inverts first (a must be a unit).
    long pow(long a, long e) const;

    RingElem elem(long v) const { return RingElem{canon(v), this}; }
    RingElem zero() const { return RingElem{zero_raw(), this}; }
    RingElem one() const { return RingElem{one_raw(), this}; }
};

/// Z_m with canonical residues in [0, m).
class FiniteRing final : public Ring {
public:
    explicit FiniteRing(long modulus);

    long modulus() const { return modulus_; }
    /// All units of Z_m in ascending order.
    std::vector<long> units() const;

    long add(long a, long b) const override { return (a + b) % modulus_; }
    long sub(long a, long b) const override { return canon(a - b); }
    long mul(long a, long b) const override { return (a * b) % modulus_; }
    long neg(long a) const override { return canon(-a); }
    long zero_raw() const override { return 0; }
    long one_raw() const override { return 1 % modulus_; }
    bool is_unit(long a) const override;
    long inverse(long a) const override;
    long canon(long v) const override;
    std::string text(long a) const override;
    bool same(const Ring& other) const override;

private:
    long modulus_;
};

}  // namespace psyq
