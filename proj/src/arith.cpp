#include "genus/arith.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <utility>

namespace genus {

namespace mp = boost::multiprecision;

Sign Sign::of(int v) {
    if (v == 1) return plus();
    if (v == -1) return minus();
    throw DomainError("Sign::of: value must be +1 or -1, got " + std::to_string(v));
}

namespace {

constexpr long kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Largest bound for which Miller-Rabin with the bases above is deterministic.
const Int kMillerRabinBound("3317044064679887385961981");

bool miller_rabin_composite(const Int& n, const Int& a, const Int& d, unsigned r) {
    Int x = mp::powm(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (long p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++r;
    }
    for (long a : kSmallPrimes) {
        if (miller_rabin_composite(n, Int(a), d, r)) return false;
    }
    if (n < kMillerRabinBound) return true;
    // Inputs are desk-scale; stay exact for the rest.
    for (Int f = 41; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

Prime::Prime(Int value) : value_(std::move(value)) {
    if (!is_prime(value_)) {
        throw NotPrimeError("Prime: " + value_.str() + " is not prime");
    }
}

std::map<Int, unsigned> factorize(Int n) {
    if (n == 0) throw ZeroError("factorize: argument is zero");
    if (n < 0) n = -n;
    std::map<Int, unsigned> factors;
    for (Int f = 2; f * f <= n; f == 2 ? f = 3 : f += 2) {
        while (n % f == 0) {
            ++factors[f];
            n /= f;
        }
    }
    if (n > 1) ++factors[n];
    return factors;
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> result{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base_count = result.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base_count; ++j) {
                result.push_back(result[j] * pk);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Prime> primes_up_to(long bound) {
    std::vector<Prime> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (long p = 2; p <= bound; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        primes.push_back(Prime(p));
        for (long q = p * p; q <= bound; q += p) {
            composite[static_cast<std::size_t>(q)] = true;
        }
    }
    return primes;
}

Sign legendre(const Int& k, const Prime& p) {
    if (k == 0) throw ZeroError("legendre: k is zero");
    if (k % p.value() == 0) {
        throw DivisibilityError("legendre: " + p.value().str() + " divides " + k.str());
    }
    if (!p.is_odd()) {
        Int r = k % 8;
        if (r < 0) r += 8;
        return r == 1 ? Sign::plus() : Sign::minus();
    }
    Int a = k % p.value();
    if (a < 0) a += p.value();
    Int n = p.value();
    bool negative = false;
    while (a != 0) {
        while (a % 2 == 0) {
            a >>= 1;
            const long nm8 = static_cast<long>(n % 8);
            if (nm8 == 3 || nm8 == 5) negative = !negative;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) negative = !negative;
        a %= n;
    }
    // n == 1 here: p is prime and coprime to k.
    return negative ? Sign::minus() : Sign::plus();
}

Sign euler_criterion(const Int& k, const Prime& p) {
    if (!p.is_odd()) throw EvenPrimeError("euler_criterion: p must be odd");
    if (k == 0) throw ZeroError("euler_criterion: k is zero");
    if (k % p.value() == 0) {
        throw DivisibilityError("euler_criterion: " + p.value().str() + " divides " + k.str());
    }
    Int a = k % p.value();
    if (a < 0) a += p.value();
    const Int t = mp::powm(a, (p.value() - 1) / 2, p.value());
    if (t == 1) return Sign::plus();
    if (t == p.value() - 1) return Sign::minus();
    throw NoSolutionError("euler_criterion: k^((p-1)/2) is not a unit mod " + p.value().str());
}

Int squarefree_part(const Int& k) {
    if (k == 0) throw ZeroError("squarefree_part: argument is zero");
    Int d = 1;
    for (const auto& [p, e] : factorize(k)) {
        if (e % 2 == 1) d *= p;
    }
    return k < 0 ? Int(-d) : d;
}

bool is_odd_square(const Int& n) {
    if (n <= 0) return false;
    const Int r = mp::sqrt(n);
    return r * r == n && r % 2 == 1;
}

Int lcm_of(const std::vector<Int>& values) {
    if (values.empty()) throw EmptySetError("lcm_of: empty set");
    Int acc = 1;
    for (const Int& v : values) {
        if (v <= 0) throw DomainError("lcm_of: values must be positive, got " + v.str());
        acc = mp::lcm(acc, v);
    }
    return acc;
}

} // namespace genus
