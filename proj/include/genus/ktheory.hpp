#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genus/arith.hpp"

namespace genus {

/// A polynomial truncated at a fixed order, with exact integer coefficients
/// or residues mod m when a modulus is set. Terms x^j with j >= order are
/// discarded by every operation; arithmetic never inspects them.
///
/// Filtration bookkeeping for the K-theory carriers, fixed once here:
/// on the source side the generator x has filtration 2 per x-degree, so
/// working modulo filtration 2p+3 means truncation order p+2; on the
/// target side the generator y has filtration 4 per y-degree, so y^j dies
/// in that quotient as soon as 4j >= 2p+3.
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t order, std::optional<Int> modulus = std::nullopt);

    static TruncatedSeries constant(const Int& c, std::size_t order,
                                    std::optional<Int> modulus = std::nullopt);
    static TruncatedSeries monomial(const Int& c, std::size_t degree, std::size_t order,
                                    std::optional<Int> modulus = std::nullopt);

    std::size_t order() const { return coeffs_.size(); }
    const std::optional<Int>& modulus() const { return modulus_; }

    /// Coefficient of x^j; zero for j >= order.
    const Int& coeff(std::size_t j) const;
    void set_coeff(std::size_t j, const Int& c);

    bool is_zero() const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    /// this^e for e >= 0.
    TruncatedSeries pow(const Int& e) const;

    /// Substitution x -> u. Requires matching order and modulus and a zero
    /// constant term in u (otherwise truncation would not commute with
    /// substitution).
    TruncatedSeries substitute(const TruncatedSeries& u) const;

    std::string str(const std::string& var = "x") const;

private:
    void reduce();
    void check_compatible(const TruncatedSeries& other, const char* op) const;

    std::vector<Int> coeffs_;
    std::optional<Int> modulus_;
};

/// The Adams operation psi^r on the source ring: substitutes
/// x -> (1+x)^r - 1 into s. Ring endomorphism; psi^1 is the identity.
/// s must have zero constant term (a reduced K-theory class).
TruncatedSeries adams_on_cp(const Int& r, const TruncatedSeries& s);

/// The image of the degree-4 generator under a map of degree k with the
/// given higher coefficients: k x^2 + sum_{j>=3} c_j x^j, truncated.
/// Requires order >= 3 and every key >= 3. Degree 0 with nonzero higher
/// terms is accepted here; essentiality is policed by the maps module.
TruncatedSeries pullback(const Int& k, const std::map<std::size_t, Int>& higher,
                         std::size_t order, std::optional<Int> modulus = std::nullopt);

/// psi^p of the target-side generator y, reduced modulo p^2 and the
/// filtration quotient of order p+2 (in x-degree). Everything the formula
/// leaves undetermined — the p-divisible tail in high filtration and the
/// p^2-divisible class — is exactly zero in this quotient, and the y^p
/// term has filtration 4p >= 2p+3, so the image is the single monomial
/// 2 * sign * p * y^((p+1)/2) in (Z/p^2)[y] truncated at y^(p+2).
struct AdamsImageX {
    Prime prime;
    Sign sign;
    TruncatedSeries value;
};

/// Odd p only; p = 2 has no target-side formula and raises EvenPrimeError.
AdamsImageX adams_on_x(const Prime& p, Sign sign);

/// Verifies naturality of psi^p along a map of degree k with the given
/// higher coefficients, working mod p^2 and the filtration quotient:
/// compares the coefficient of x^(p+1) in
///   (psi^p y) with y -> pullback   versus   psi^p (pullback).
/// True exactly when 2*sign*p*k^((p+1)/2) = 2pk (mod p^2).
bool check_naturality(const Prime& p, const Int& k, Sign sign,
                      const std::map<std::size_t, Int>& higher);

/// The unique s in {+1,-1} with 2*s*p*k^((p+1)/2) = 2pk (mod p^2); equals
/// the Legendre symbol (k/p). NoSolutionError signals an arithmetic bug,
/// it cannot fire for a valid odd prime p and k coprime to p.
Sign rector_congruence_sign(const Prime& p, const Int& k);

} // namespace genus
