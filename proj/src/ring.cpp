#include "dgorder/ring.hpp"

#include "dgorder/errors.hpp"
#include "dgorder/matrix.hpp"

#include <numeric>

namespace dgo {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::NotSubmodule: return "NotSubmodule";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NotFull: return "NotFull";
    case ErrorCode::NotDgLattice: return "NotDgLattice";
    case ErrorCode::InconsistentLocalData: return "InconsistentLocalData";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::NonUnitComponent: return "NonUnitComponent";
    case ErrorCode::ConductorNotComputed: return "ConductorNotComputed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnsupportedCycleOrder: return "UnsupportedCycleOrder";
    case ErrorCode::NotCentralIdempotent: return "NotCentralIdempotent";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::HomologyNotSemisimple: return "HomologyNotSemisimple";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    }
    return "Error";
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long mod_inverse(long a, long m) {
    // extended Euclid on (a mod m, m)
    long r0 = ((a % m) + m) % m, r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long q = r0 / r1;
        long t = r0 - q * r1; r0 = r1; r1 = t;
        t = s0 - q * s1; s0 = s1; s1 = t;
    }
    long x = s0;
    if (r0 != 1) throw Error(ErrorCode::NotUnit, std::to_string(a) + " is not invertible mod " + std::to_string(m));
    return ((x % m) + m) % m;
}

std::vector<long> prime_divisors(const Z& n) {
    Z m = abs(n);
    std::vector<long> out;
    if (m == 0) throw Error(ErrorCode::PreconditionFailed, "prime divisors of zero");
    for (long d = 2; Z(d) * d <= m; ++d) {
        if (d > 10000000) throw Error(ErrorCode::TooLarge, "factorization beyond trial division");
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) {
        if (!m.fits_slong_p()) throw Error(ErrorCode::TooLarge, "prime factor does not fit a machine word");
        out.push_back(m.get_si());
    }
    return out;
}

long valuation(const Q& x, long p) {
    if (x == 0) throw Error(ErrorCode::PreconditionFailed, "valuation of zero");
    long v = 0;
    Z num = abs(x.get_num());
    Z den = x.get_den();
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    return v;
}

CoefficientRing CoefficientRing::localized(long p) {
    if (p == 2) throw Error(ErrorCode::CharTwo, "Z_(2) is excluded");
    if (!is_prime(p)) throw Error(ErrorCode::InvalidRing, std::to_string(p) + " is not prime");
    return CoefficientRing(RingKind::LocalizedIntegers, p);
}

CoefficientRing CoefficientRing::prime_field(long p) {
    if (p == 2) throw Error(ErrorCode::CharTwo, "F_2 is excluded");
    if (!is_prime(p)) throw Error(ErrorCode::InvalidRing, std::to_string(p) + " is not prime");
    return CoefficientRing(RingKind::PrimeField, p);
}

CoefficientRing CoefficientRing::residue(long m) {
    if (m < 2) throw Error(ErrorCode::InvalidRing, "residue modulus must be at least 2");
    return CoefficientRing(RingKind::ResidueRing, m);
}

long CoefficientRing::characteristic() const noexcept {
    return is_finite() ? modulus_ : 0;
}

bool CoefficientRing::contains(const Q& x) const {
    switch (kind_) {
    case RingKind::Rationals: return true;
    case RingKind::Integers: return x.get_den() == 1;
    case RingKind::LocalizedIntegers: return x.get_den() % modulus_ != 0;
    case RingKind::PrimeField:
    case RingKind::ResidueRing: return gcd(x.get_den(), Z(modulus_)) == 1;
    }
    return false;
}

Q CoefficientRing::normalize(const Q& x) const {
    if (!contains(x)) throw Error(ErrorCode::PreconditionFailed, x.get_str() + " is not an element of " + name());
    if (!is_finite()) return x;
    Z m(modulus_);
    Z num = x.get_num() % m;
    if (x.get_den() != 1) {
        Z inv;
        mpz_invert(inv.get_mpz_t(), Z(x.get_den() % m).get_mpz_t(), m.get_mpz_t());
        num = num * inv % m;
    }
    if (num < 0) num += m;
    return Q(num);
}

Q CoefficientRing::inverse(const Q& x) const {
    if (!is_finite()) {
        if (x == 0) throw Error(ErrorCode::NotUnit, "division by zero");
        Q r = 1 / x;
        if (!contains(r)) throw Error(ErrorCode::NotUnit, x.get_str() + " is not a unit in " + name());
        return r;
    }
    Q n = normalize(x);
    return Q(mod_inverse(n.get_num().get_si(), modulus_));
}

bool CoefficientRing::is_field() const noexcept {
    return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField ||
           (kind_ == RingKind::ResidueRing && is_prime(modulus_));
}

CoefficientRing CoefficientRing::fraction_field() const {
    if (kind_ == RingKind::Integers || kind_ == RingKind::LocalizedIntegers) return rationals();
    return *this;
}

std::string CoefficientRing::name() const {
    switch (kind_) {
    case RingKind::Rationals: return "Q";
    case RingKind::Integers: return "Z";
    case RingKind::LocalizedIntegers: return "Z_loc(" + std::to_string(modulus_) + ")";
    case RingKind::PrimeField: return "F(" + std::to_string(modulus_) + ")";
    case RingKind::ResidueRing: return "Z/" + std::to_string(modulus_);
    }
    return "?";
}

// ---- matrix helpers ----

QMat to_rational(const ZMat& m) {
    QMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Q(m(i, j));
    return r;
}

ZMat to_integer(const QMat& m) {
    ZMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) throw Error(ErrorCode::PreconditionFailed, "non-integral entry " + m(i, j).get_str());
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

bool is_integral(const QMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1) return false;
    return true;
}

bool is_integral(const QVec& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

Z common_denominator(const QVec& v) {
    Z d = 1;
    for (const auto& x : v) d = lcm(d, x.get_den());
    return d;
}

Z common_denominator(const QMat& m) {
    Z d = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).get_den());
    return d;
}

QVec operator+(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec operator-(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec operator*(const Q& c, const QVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

QVec unit_vector(std::size_t n, std::size_t i) {
    QVec v(n, Q(0));
    v[i] = 1;
    return v;
}

} // namespace dgo
