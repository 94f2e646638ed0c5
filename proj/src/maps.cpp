#include "genus/maps.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>
#include <utility>

namespace genus {

namespace mp = boost::multiprecision;

ConstructionFamily::ConstructionFamily(Int cofinite_value, std::map<Prime, Int> exceptional)
    : cofinite_value_(std::move(cofinite_value)), exceptional_(std::move(exceptional)) {
    if (cofinite_value_ <= 0) {
        throw DomainError("ConstructionFamily: cofinite value must be positive");
    }
    const auto two = exceptional_.find(Prime(2));
    if (two == exceptional_.end()) {
        throw DomainError("ConstructionFamily: the prime 2 must be exceptional");
    }
    if (two->second % 4 != 1) {
        throw DomainError("ConstructionFamily: n_2 must be 1 mod 4, got " + two->second.str());
    }
    for (const auto& [q, n] : exceptional_) {
        if (n <= 0) {
            throw DomainError("ConstructionFamily: n_" + q.value().str() + " must be positive");
        }
        if (n % q.value() == 0) {
            throw DomainError("ConstructionFamily: n_" + q.value().str() + " = " + n.str() +
                              " is not coprime to its prime");
        }
    }
    for (const auto& [p, e] : factorize(cofinite_value_)) {
        (void)e;
        if (exceptional_.find(Prime(p)) == exceptional_.end()) {
            throw DomainError("ConstructionFamily: prime " + p.str() +
                              " divides the cofinite value but is not exceptional");
        }
    }
}

Int ConstructionFamily::lcm() const {
    std::vector<Int> values{cofinite_value_};
    for (const auto& [q, n] : exceptional_) {
        (void)q;
        values.push_back(n);
    }
    return lcm_of(values);
}

LocalDegree::LocalDegree(Rational value, std::optional<Prime> prime)
    : value_(std::move(value)), prime_(std::move(prime)) {}

LocalDegree::LocalDegree(Rational value, const Prime& prime)
    : LocalDegree(std::move(value), std::optional<Prime>(prime)) {
    if (denominator(value_) % prime_->value() == 0) {
        throw DomainError("LocalDegree: " + value_.str() + " is not " + prime_->value().str() +
                          "-locally integral");
    }
}

LocalDegree LocalDegree::cofinite(Rational value) {
    return LocalDegree(std::move(value), std::nullopt);
}

bool realizes(const ConstructionFamily& family, const RectorInvariant& inv) {
    if (inv.twist() != Sign::plus()) return false;
    if (squarefree_part(family.cofinite_value()) != inv.base()) return false;
    for (const auto& [q, n] : family.exceptional()) {
        if (legendre(n, q) != evaluate(inv, q)) return false;
    }
    // At a non-exceptional prime (m/q) equals the default sign, so only
    // overrides can still disagree.
    for (const auto& [p, s] : inv.overrides()) {
        if (family.exceptional().find(p) != family.exceptional().end()) continue;
        if (legendre(family.cofinite_value(), p) != s) return false;
    }
    return true;
}

namespace {

// Smallest positive n with (n/q) = s, q coprime to n, and n = 1 (mod 4)
// when q = 2. Used only for the search's termination bound.
Int minimal_symbol_value(const Prime& q, Sign s) {
    if (!q.is_odd()) return s == Sign::plus() ? Int(1) : Int(5);
    if (s == Sign::plus()) return 1;
    for (Int n = 2;; ++n) {
        if (n % q.value() == 0) continue;
        if (legendre(n, q) == s) return n;
    }
}

// Smallest divisor of L usable as n_q, if any.
std::optional<Int> pick_exceptional_value(const std::vector<Int>& divs, const Prime& q, Sign s) {
    for (const Int& n : divs) {
        if (n % q.value() == 0) continue;
        if (!q.is_odd() && n % 4 != 1) continue;
        if (legendre(n, q) == s) return n;
    }
    return std::nullopt;
}

} // namespace

TComputation compute_T(const RectorInvariant& inv) {
    const EssentialMapDecision decision = admits_essential_map(inv);
    if (!decision.admits) {
        throw NoEssentialMapError("compute_T: no essential map exists (twist is -1)");
    }
    if (inv.base() < 0) {
        throw NotRealizableError(
            "compute_T: no family with positive values realizes base " + inv.base().str() +
            "; negate the base for the opposite orientation of the same space");
    }

    // Primes that must be exceptional for every candidate m: 2, the primes
    // dividing the base (every m with that squarefree part is divisible by
    // them), and the override primes.
    std::set<Prime> required = decision.exceptional;

    Int bound = inv.base();
    for (const Prime& q : required) {
        bound = mp::lcm(bound, minimal_symbol_value(q, evaluate(inv, q)));
    }

    for (Int L = 1; L <= bound; ++L) {
        const std::vector<Int> divs = divisors(L);
        for (const Int& m : divs) {
            if (squarefree_part(m) != inv.base()) continue;
            std::set<Prime> exceptional_primes = required;
            for (const auto& [p, e] : factorize(m)) {
                (void)e;
                exceptional_primes.insert(Prime(p));
            }
            std::map<Prime, Int> picks;
            bool feasible = true;
            for (const Prime& q : exceptional_primes) {
                const auto n = pick_exceptional_value(divs, q, evaluate(inv, q));
                if (!n) {
                    feasible = false;
                    break;
                }
                picks.emplace(q, *n);
            }
            if (!feasible) continue;
            ConstructionFamily certificate(m, std::move(picks));
            // The divisor-wise picks realize the invariant but their lcm
            // could be a proper divisor of L; that smaller value was (or
            // will be) visited on its own, so require equality here.
            if (certificate.lcm() != L) continue;
            return TComputation{L, std::move(certificate)};
        }
    }
    throw NoSolutionError("compute_T: search passed its termination bound; arithmetic bug");
}

DegreeSet degree_set(const RectorInvariant& inv) {
    return DegreeSet{compute_T(inv).T};
}

bool contains(const DegreeSet& ds, const Int& n) {
    if (n <= 0) return false;
    if (n % ds.T != 0) return false;
    return is_odd_square(n / ds.T);
}

StandardMap standard_map(const RectorInvariant& inv) {
    TComputation tc = compute_T(inv);
    std::map<Prime, LocalDegree> components;
    for (const auto& [q, n] : tc.certificate.exceptional()) {
        components.emplace(q, LocalDegree(Rational(tc.T, n), q));
    }
    LocalDegree cofinite = LocalDegree::cofinite(Rational(tc.T, tc.certificate.cofinite_value()));
    return StandardMap{tc.T, std::move(components), std::move(cofinite),
                       std::move(tc.certificate)};
}

Int glue(const ConstructionFamily& family, const std::map<Prime, LocalDegree>& locals,
         const Rational& cofinite_local) {
    for (const auto& [q, n] : family.exceptional()) {
        (void)n;
        if (locals.find(q) == locals.end()) {
            throw IncompatibleFamilyError("glue: no local degree at exceptional prime " +
                                          q.value().str());
        }
    }
    for (const auto& [q, local] : locals) {
        if (family.exceptional().find(q) == family.exceptional().end()) {
            throw IncompatibleFamilyError("glue: local degree at non-exceptional prime " +
                                          q.value().str());
        }
        if (local.prime() && *local.prime() != q) {
            throw IncompatibleFamilyError("glue: local degree tagged with prime " +
                                          local.prime()->value().str() + " filed under " +
                                          q.value().str());
        }
    }

    std::optional<Rational> common;
    std::optional<Prime> first_prime;
    for (const auto& [q, local] : locals) {
        const Rational d = Rational(family.exceptional().at(q)) * local.value();
        if (!common) {
            common = d;
            first_prime = q;
            continue;
        }
        if (d != *common) {
            std::ostringstream msg;
            msg << "glue: n_" << q.value() << " * deg_" << q.value() << " = " << d
                << " disagrees with n_" << first_prime->value() << " * deg_"
                << first_prime->value() << " = " << *common;
            throw IncompatibleFamilyError(msg.str());
        }
    }
    const Rational rational_degree = Rational(family.cofinite_value()) * cofinite_local;
    if (rational_degree != *common) {
        std::ostringstream msg;
        msg << "glue: m * cofinite degree = " << rational_degree << " disagrees with n_"
            << first_prime->value() << " * deg_" << first_prime->value() << " = " << *common;
        throw IncompatibleFamilyError(msg.str());
    }
    if (denominator(*common) != 1) {
        throw NonIntegralError("glue: glued degree " + common->str() + " is not an integer");
    }
    if (*common == 0) {
        throw ZeroError("glue: glued degree is 0, the null map is not essential");
    }
    return numerator(*common);
}

Int factor_through_standard(const RectorInvariant& inv, const Int& f_degree) {
    const DegreeSet ds = degree_set(inv);
    if (!contains(ds, f_degree)) {
        std::ostringstream msg;
        msg << "factor_through_standard: degree " << f_degree << " is not an odd-square multiple"
            << " of T = " << ds.T;
        throw NotRealizableError(msg.str());
    }
    return f_degree / ds.T;
}

bool lambda_embedding_exists(const RectorInvariant& inv) {
    return admits_essential_map(inv).admits;
}

} // namespace genus
