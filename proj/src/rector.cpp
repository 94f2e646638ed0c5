#include "genus/rector.hpp"

#include <sstream>
#include <utility>

namespace genus {

RectorInvariant::RectorInvariant(Int base, Sign twist, std::map<Prime, Sign> overrides)
    : base_(std::move(base)), twist_(twist), overrides_(std::move(overrides)) {}

RectorInvariant RectorInvariant::make(const Int& base, Sign twist,
                                      const std::map<Prime, Sign>& overrides) {
    if (base == 0) throw ZeroError("make_invariant: base is zero");
    const Int d = squarefree_part(base);

    // The default sign twist*(d/p) is undefined exactly at primes dividing d.
    std::vector<Int> uncovered;
    for (const auto& [p, e] : factorize(d)) {
        (void)e;
        if (overrides.find(Prime(p)) == overrides.end()) uncovered.push_back(p);
    }
    if (!uncovered.empty()) {
        std::ostringstream msg;
        msg << "make_invariant: overrides must cover prime(s)";
        for (const Int& p : uncovered) msg << " " << p;
        msg << " dividing the base " << d;
        throw CoverageError(msg.str());
    }

    std::map<Prime, Sign> canonical;
    for (const auto& [p, s] : overrides) {
        if (d % p.value() != 0 && twist * legendre(d, p) == s) continue; // redundant
        canonical.emplace(p, s);
    }
    return RectorInvariant(d, twist, std::move(canonical));
}

const RectorInvariant& RectorInvariant::all_plus_one() {
    static const RectorInvariant inv = make(1, Sign::plus(), {});
    return inv;
}

RectorInvariant make_invariant(const Int& base, Sign twist,
                               const std::map<Prime, Sign>& overrides) {
    return RectorInvariant::make(base, twist, overrides);
}

Sign evaluate(const RectorInvariant& inv, const Prime& p) {
    const auto it = inv.overrides().find(p);
    if (it != inv.overrides().end()) return it->second;
    return inv.twist() * legendre(inv.base(), p);
}

bool equivalent(const RectorInvariant& a, const RectorInvariant& b) {
    return a == b;
}

bool has_maximal_torus(const RectorInvariant& inv) {
    return inv == RectorInvariant::all_plus_one();
}

EssentialMapDecision admits_essential_map(const RectorInvariant& inv) {
    EssentialMapDecision decision;
    if (inv.twist() != Sign::plus()) return decision;
    decision.admits = true;
    decision.witness = inv.base();
    decision.exceptional.insert(Prime(2));
    for (const auto& [p, e] : factorize(inv.base())) {
        (void)e;
        decision.exceptional.insert(Prime(p));
    }
    for (const auto& [p, s] : inv.overrides()) {
        (void)s;
        decision.exceptional.insert(p);
    }
    return decision;
}

std::set<Prime> localization_agreement(const RectorInvariant& inv) {
    EssentialMapDecision decision = admits_essential_map(inv);
    if (!decision.admits) {
        throw NoEssentialMapError(
            "localization_agreement: twist is -1, the invariant matches no "
            "quadratic character off a finite set");
    }
    return std::move(decision.exceptional);
}

} // namespace genus
