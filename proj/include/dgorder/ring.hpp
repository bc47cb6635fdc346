#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dgo {

using Q = mpq_class;
using Z = mpz_class;

enum class RingKind { Rationals, Integers, LocalizedIntegers, PrimeField, ResidueRing };

// Elements of every ring are carried as rationals; finite rings use the
// representatives 0..m-1.
class CoefficientRing {
public:
    CoefficientRing() = default;

    static CoefficientRing rationals() { return CoefficientRing(RingKind::Rationals, 0); }
    static CoefficientRing integers() { return CoefficientRing(RingKind::Integers, 0); }
    static CoefficientRing localized(long p);
    static CoefficientRing prime_field(long p);
    static CoefficientRing residue(long m);

    RingKind kind() const noexcept { return kind_; }
    long modulus() const noexcept { return modulus_; }
    long characteristic() const noexcept;
    // Z/p for a prime p counts as a field (used for residue algebras of orders)
    bool is_field() const noexcept;
    bool is_finite() const noexcept {
        return kind_ == RingKind::PrimeField || kind_ == RingKind::ResidueRing;
    }

    bool contains(const Q& x) const;
    // canonical representative; throws if x is not a ring element
    Q normalize(const Q& x) const;
    Q inverse(const Q& x) const;

    // the field of fractions for Z and Z_(p), the ring itself otherwise
    CoefficientRing fraction_field() const;

    std::string name() const;

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

private:
    CoefficientRing(RingKind k, long m) : kind_(k), modulus_(m) {}

    RingKind kind_ = RingKind::Rationals;
    long modulus_ = 0;
};

bool is_prime(long n);
long mod_inverse(long a, long m);
// distinct prime divisors of |n|, ascending (trial division)
std::vector<long> prime_divisors(const Z& n);
// p-adic valuation of a nonzero rational
long valuation(const Q& x, long p);

} // namespace dgo
