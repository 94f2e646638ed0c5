#pragma once

#include <map>
#include <optional>

#include "genus/rector.hpp"

namespace genus {

/// The integer data of a homotopy-inverse-limit presentation: one positive
/// cofinite value m used at every non-exceptional prime, plus finitely many
/// exceptional assignments q -> n_q.
///
/// Invariants, validated at construction:
///   - every n_q is positive and coprime to its prime q;
///   - 2 is always exceptional, with n_2 = 1 (mod 4);
///   - every prime dividing m is exceptional (so (m/q) is defined at every
///     non-exceptional q).
class ConstructionFamily {
public:
    ConstructionFamily(Int cofinite_value, std::map<Prime, Int> exceptional);

    const Int& cofinite_value() const { return cofinite_value_; }
    const std::map<Prime, Int>& exceptional() const { return exceptional_; }

    /// lcm of the cofinite value and all exceptional values.
    Int lcm() const;

    friend bool operator==(const ConstructionFamily& a, const ConstructionFamily& b) {
        return a.cofinite_value_ == b.cofinite_value_ && a.exceptional_ == b.exceptional_;
    }

private:
    Int cofinite_value_;
    std::map<Prime, Int> exceptional_;
};

/// Degree of a map into a single localization: a rational whose denominator
/// is coprime to the prime. A LocalDegree without a prime is the degree at
/// the cofinite block (the rationalized part of the diagram).
class LocalDegree {
public:
    LocalDegree(Rational value, const Prime& prime);
    static LocalDegree cofinite(Rational value);

    const Rational& value() const { return value_; }
    const std::optional<Prime>& prime() const { return prime_; }

    friend bool operator==(const LocalDegree& a, const LocalDegree& b) {
        return a.value_ == b.value_ && a.prime_ == b.prime_;
    }

private:
    LocalDegree(Rational value, std::optional<Prime> prime);

    Rational value_;
    std::optional<Prime> prime_;
};

/// The degrees of essential maps out of the source space: exactly the
/// odd-square multiples of T. Symbolic; never materialized as a list.
struct DegreeSet {
    Int T;
};

/// True iff the family presents the space with the given invariant:
/// (n_q/q) matches the invariant at every exceptional q, and (m/q) matches
/// it at every non-exceptional q. The cofinite condition is decided
/// finitely: it holds iff the twist is +1, the squarefree part of m equals
/// the base, and no non-exceptional override disagrees with (m/.).
bool realizes(const ConstructionFamily& family, const RectorInvariant& inv);

struct TComputation {
    Int T;
    ConstructionFamily certificate;
};

/// The minimal lcm of family values over all families realizing the
/// invariant, with a certificate family achieving it. Candidate lcms are
/// enumerated in increasing order; L is feasible iff some divisor m of L
/// has squarefree part equal to the base and every required exceptional
/// prime finds a valid divisor of L. The certificate is the
/// lexicographically smallest minimizer (smallest m, then smallest n_q in
/// ascending prime order).
///
/// Throws NoEssentialMapError when no essential map exists, and
/// NotRealizableError for a negative base: no family with positive values
/// realizes a negative-base invariant (negating the base gives the same
/// space in the opposite orientation).
TComputation compute_T(const RectorInvariant& inv);

DegreeSet degree_set(const RectorInvariant& inv);

/// n is a degree of an essential map iff n = T * (odd square). 0 is never
/// a member: the null map is not essential.
bool contains(const DegreeSet& ds, const Int& n);

/// The standard map of minimal positive degree T, with its per-prime local
/// degrees T/n_q and the cofinite-block degree T/m.
struct StandardMap {
    Int degree;
    std::map<Prime, LocalDegree> components;
    LocalDegree cofinite;
    ConstructionFamily certificate;
};

StandardMap standard_map(const RectorInvariant& inv);

/// Glues local degree data into a global degree: every n_q * locals[q] and
/// m * cofinite_local must be one and the same integer D, which is the
/// degree of the glued map. locals must be defined exactly on the
/// exceptional primes. Throws IncompatibleFamilyError on the first
/// mismatched pair, NonIntegralError if D is not an integer, and ZeroError
/// if D = 0 (the null map is not essential).
Int glue(const ConstructionFamily& family, const std::map<Prime, LocalDegree>& locals,
         const Rational& cofinite_local);

/// Factors a map of the given degree through the standard map: returns the
/// self-map degree f_degree / T, always an odd square. Throws
/// NotRealizableError when f_degree is not in the degree set.
Int factor_through_standard(const RectorInvariant& inv, const Int& f_degree);

/// Whether the K-theory of the space embeds into the K-theory of the
/// source as a sub-lambda-ring; equivalent to the existence of an
/// essential map.
bool lambda_embedding_exists(const RectorInvariant& inv);

} // namespace genus
