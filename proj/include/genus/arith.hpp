#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <set>
#include <vector>

#include "genus/error.hpp"

namespace genus {

/// Exact arbitrary-precision integer used throughout the library.
using Int = boost::multiprecision::cpp_int;
/// Exact rational, always kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// An element of the multiplicative group {+1, -1}.
class Sign {
public:
    constexpr Sign() : neg_(false) {}

    static constexpr Sign plus() { return Sign(false); }
    static constexpr Sign minus() { return Sign(true); }

    /// From +1 or -1; anything else is a DomainError.
    static Sign of(int v);

    constexpr int value() const { return neg_ ? -1 : 1; }

    friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.neg_ != b.neg_); }
    constexpr Sign operator-() const { return Sign(!neg_); }
    friend constexpr bool operator==(Sign a, Sign b) { return a.neg_ == b.neg_; }
    friend constexpr bool operator!=(Sign a, Sign b) { return a.neg_ != b.neg_; }
    friend constexpr bool operator<(Sign a, Sign b) { return a.value() < b.value(); }

private:
    explicit constexpr Sign(bool neg) : neg_(neg) {}
    bool neg_;
};

inline Int operator*(Sign s, const Int& k) { return s == Sign::plus() ? k : Int(-k); }

/// A positive prime, validated at construction.
class Prime {
public:
    explicit Prime(Int value);
    explicit Prime(long value) : Prime(Int(value)) {}

    const Int& value() const { return value_; }
    bool is_odd() const { return value_ != 2; }

    friend bool operator==(const Prime& a, const Prime& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return a.value_ != b.value_; }
    friend bool operator<(const Prime& a, const Prime& b) { return a.value_ < b.value_; }

private:
    Int value_;
};

/// Deterministic primality test (Miller-Rabin with a fixed base set below
/// its proven bound, trial division beyond it).
bool is_prime(const Int& n);

/// Prime factorization of |n| by trial division, n != 0. Keys ascending.
std::map<Int, unsigned> factorize(Int n);

/// All positive divisors of |n| in ascending order, n != 0.
std::vector<Int> divisors(const Int& n);

/// Primes p <= bound, ascending.
std::vector<Prime> primes_up_to(long bound);

/// Legendre symbol (k/p). For odd p: +1 iff k is a nonzero square mod p,
/// computed by the reciprocity (Jacobi) algorithm, not by exponentiation.
/// For p = 2 the convention is the residue class mod 8: +1 iff k = 1 (mod 8),
/// -1 for k = 3, 5, 7 (mod 8). Requires k != 0 and p not dividing k.
Sign legendre(const Int& k, const Prime& p);

/// The unique s in {+1,-1} with s = k^((p-1)/2) (mod p), p odd.
/// An independent oracle for legendre(): implemented by modular
/// exponentiation with no shared code path.
Sign euler_criterion(const Int& k, const Prime& p);

/// The unique squarefree d with k = d * t^2, t > 0; sign(d) = sign(k).
Int squarefree_part(const Int& k);

/// True iff n = m^2 for some odd integer m.
bool is_odd_square(const Int& n);

/// Least common multiple of a nonempty set of positive integers.
Int lcm_of(const std::vector<Int>& values);

} // namespace genus
