#pragma once

#include <map>
#include <set>
#include <string>

#include "genus/arith.hpp"

namespace genus {

/// A finitely-presented genus invariant: a function from primes to {+1,-1}
/// given by a squarefree base d, a global twist, and finitely many
/// per-prime overrides. Away from the overrides the value at p is
/// twist * (d/p).
///
/// Instances are always canonical:
///   - base is squarefree;
///   - every prime dividing the base carries an override (the default
///     symbol (d/p) is undefined there);
///   - no override repeats the default value at its prime.
///
/// Canonical forms are unique: distinct squarefree integers give quadratic
/// characters that disagree at infinitely many primes, and no character is
/// constantly -1 off a finite set. That fact is standard number theory; it
/// is validated here by sampled search in the test suite, not by proof.
class RectorInvariant {
public:
    /// Canonicalizing factory: replaces base by its squarefree part and
    /// drops redundant overrides. Throws ZeroError on base 0 and
    /// CoverageError (naming the primes) if an override is missing at a
    /// prime dividing the squarefree base.
    static RectorInvariant make(const Int& base, Sign twist,
                                const std::map<Prime, Sign>& overrides);

    /// The invariant of the untwisted model itself: base 1, twist +1.
    static const RectorInvariant& all_plus_one();

    const Int& base() const { return base_; }
    Sign twist() const { return twist_; }
    const std::map<Prime, Sign>& overrides() const { return overrides_; }

    friend bool operator==(const RectorInvariant& a, const RectorInvariant& b) {
        return a.base_ == b.base_ && a.twist_ == b.twist_ && a.overrides_ == b.overrides_;
    }
    friend bool operator!=(const RectorInvariant& a, const RectorInvariant& b) {
        return !(a == b);
    }

private:
    RectorInvariant(Int base, Sign twist, std::map<Prime, Sign> overrides);

    Int base_;
    Sign twist_;
    std::map<Prime, Sign> overrides_;
};

/// A model space in the genus: its invariant plus an optional display name.
struct GenusSpace {
    RectorInvariant invariant;
    std::string label;
};

/// Outcome of the essential-map existence decision.
struct EssentialMapDecision {
    bool admits = false;
    /// Nonzero integer with (witness/p) equal to the invariant off the
    /// exceptional set; meaningful only when admits.
    Int witness;
    /// Finite set off which the invariant agrees with the witness symbol:
    /// the override primes together with every prime dividing 2*base.
    std::set<Prime> exceptional;
};

RectorInvariant make_invariant(const Int& base, Sign twist,
                               const std::map<Prime, Sign>& overrides);

/// The invariant's value at p: the override if present, else twist * (base/p).
Sign evaluate(const RectorInvariant& inv, const Prime& p);

/// Pointwise equality at every prime, decided by comparing canonical forms.
bool equivalent(const RectorInvariant& a, const RectorInvariant& b);

/// True iff the invariant is the constant +1, i.e. the space is the
/// untwisted model itself.
bool has_maximal_torus(const RectorInvariant& inv);

/// Decides whether some nonzero integer k matches the invariant at all but
/// finitely many primes. Yes exactly when the canonical twist is +1; the
/// witness is then the base itself.
EssentialMapDecision admits_essential_map(const RectorInvariant& inv);

/// The finite complement of the cofinite prime set on which the space and
/// the untwisted model agree after localization. Equals the exceptional set
/// of the witness; 2 is always included. Minimality is not claimed.
/// Throws NoEssentialMapError when no essential map exists.
std::set<Prime> localization_agreement(const RectorInvariant& inv);

} // namespace genus
