#include "psyq/ring.hpp"

#include <numeric>
#include <stdexcept>

namespace psyq {

namespace {

const Ring& common_ring(RingElem a, RingElem b) {
    if (a.ring == nullptr || b.ring == nullptr)
        throw std::domain_error("ring element without a ring");
    if (!a.ring->same(*b.ring))
        throw std::domain_error("arithmetic between elements of different rings");
    return *a.ring;
}

}  // namespace

bool RingElem::is_unit() const { return ring->is_unit(raw); }

RingElem RingElem::inverse() const { return RingElem{ring->inverse(raw), ring}; }

RingElem RingElem::pow(long e) const { return RingElem{ring->pow(raw, e), ring}; }

std::string RingElem::text() const { return ring->text(raw); }

RingElem operator+(RingElem a, RingElem b) {
    const Ring& r = common_ring(a, b);
    return RingElem{r.add(a.raw, b.raw), &r};
}

RingElem operator-(RingElem a, RingElem b) {
    const Ring& r = common_ring(a, b);
    return RingElem{r.sub(a.raw, b.raw), &r};
}

RingElem operator*(RingElem a, RingElem b) {
    const Ring& r = common_ring(a, b);
    return RingElem{r.mul(a.raw, b.raw), &r};
}

RingElem operator-(RingElem a) { return RingElem{a.ring->neg(a.raw), a.ring}; }

bool operator==(RingElem a, RingElem b) {
    common_ring(a, b);
    return a.raw == b.raw;
}

long Ring::pow(long a, long e) const {
    if (e < 0) {
        a = inverse(a);
        e = -e;
    }
    long result = one_raw();
    long base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FiniteRing::FiniteRing(long modulus) : modulus_(modulus) {
    if (modulus < 2)
        throw std::domain_error("ring modulus must be at least 2, got " +
                                std::to_string(modulus));
}

std::vector<long> FiniteRing::units() const {
    std::vector<long> out;
    for (long a = 0; a < modulus_; ++a)
        if (std::gcd(a, modulus_) == 1) out.push_back(a);
    return out;
}

bool FiniteRing::is_unit(long a) const { return std::gcd(canon(a), modulus_) == 1; }

long FiniteRing::inverse(long a) const {
    a = canon(a);
    // Extended Euclid: find x with a*x = 1 (mod m).
    long r0 = modulus_, r1 = a, x0 = 0, x1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long x2 = x0 - q * x1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
    }
    if (r0 != 1)
        throw std::domain_error(std::to_string(a) + " is not a unit mod " +
                                std::to_string(modulus_));
    return canon(x0);
}

long FiniteRing::canon(long v) const {
    long r = v % modulus_;
    return r < 0 ? r + modulus_ : r;
}

std::string FiniteRing::text(long a) const { return std::to_string(canon(a)); }

bool FiniteRing::same(const Ring& other) const {
    auto* f = dynamic_cast<const FiniteRing*>(&other);
    return f != nullptr && f->modulus_ == modulus_;
}

}  // namespace psyq
