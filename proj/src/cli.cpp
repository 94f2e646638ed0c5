#include "genus/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "genus/arith.hpp"
#include "genus/config.hpp"
#include "genus/error.hpp"
#include "genus/ktheory.hpp"
#include "genus/maps.hpp"
#include "genus/rector.hpp"
#include "json.hpp"

namespace genus {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
    std::vector<SpaceConfig> spaces;
    bool machine = false;
    long prime_bound = 100;
};

std::string sign_str(Sign s) { return s.value() > 0 ? "+1" : "-1"; }

Int parse_int_arg(const std::string& text, const std::string& what) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw ParseError(what + " '" + text + "' is not an integer");
    }
}

GenusSpace resolve_space(const Options& options, const std::string& name) {
    if (!name.empty()) {
        return to_genus_space(find_space(options.spaces, name));
    }
    if (options.spaces.size() == 1) {
        return to_genus_space(options.spaces.front());
    }
    throw ParseError(options.spaces.empty()
                         ? "config contains no spaces"
                         : "config contains several spaces; pick one with "
                           "--space");
}

std::string overrides_str(const std::map<Prime, Sign>& overrides) {
    if (overrides.empty()) {
        return "none";
    }
    std::string text = "{ ";
    bool first = true;
    for (const auto& [p, s] : overrides) {
        if (!first) {
            text += ", ";
        }
        text += p.value().str() + " -> " + sign_str(s);
        first = false;
    }
    return text + " }";
}

ordered_json canonical_json(const RectorInvariant& invariant) {
    ordered_json overrides = ordered_json::object();
    for (const auto& [p, s] : invariant.overrides()) {
        overrides[p.value().str()] = s.value();
    }
    return ordered_json{{"base", invariant.base().str()},
                        {"twist", invariant.twist().value()},
                        {"overrides", overrides}};
}

ordered_json certificate_json(const ConstructionFamily& family) {
    ordered_json n = ordered_json::object();
    for (const auto& [q, nq] : family.exceptional()) {
        n[q.value().str()] = nq.str();
    }
    return ordered_json{{"m", family.cofinite_value().str()}, {"n", n}};
}

std::string certificate_str(const ConstructionFamily& family) {
    std::string text = "m = " + family.cofinite_value().str();
    for (const auto& [q, nq] : family.exceptional()) {
        text += ", n_" + q.value().str() + " = " + nq.str();
    }
    return text;
}

void emit(const Options& options, const ordered_json& doc, std::ostream& out) {
    if (options.machine) {
        out << doc.dump(2) << "\n";
    }
}

// --- describe ---------------------------------------------------------

int cmd_describe(const Options& options, const GenusSpace& space,
                 std::ostream& out) {
    const RectorInvariant& inv = space.invariant;
    const bool torus = has_maximal_torus(inv);
    const bool admits = inv.twist() == Sign::plus();

    if (options.machine) {
        ordered_json values = ordered_json::array();
        for (const Prime& p : primes_up_to(options.prime_bound)) {
            values.push_back(ordered_json{{"p", p.value().str()},
                                          {"sign", evaluate(inv, p).value()}});
        }
        ordered_json doc{
            {"query", "describe"},
            {"inputs",
             {{"space", space.label}, {"prime_bound", options.prime_bound}}},
            {"result",
             {{"canonical", canonical_json(inv)},
              {"values", values},
              {"maximal_torus", torus},
              {"admits_essential_maps", admits}}}};
        emit(options, doc, out);
        return 0;
    }

    out << "space " << space.label << "\n";
    out << "canonical form: base " << inv.base() << ", twist "
        << sign_str(inv.twist()) << ", overrides "
        << overrides_str(inv.overrides()) << "\n";
    out << "invariant values for p <= " << options.prime_bound << ":\n";
    for (const Prime& p : primes_up_to(options.prime_bound)) {
        out << "  (" << space.label << "/" << p.value()
            << ") = " << sign_str(evaluate(inv, p)) << "\n";
    }
    out << "maximal torus: " << (torus ? "yes" : "no") << "\n";
    if (torus) {
        out << "class: the untwisted model; invariant = +1 at every prime\n";
    } else if (admits) {
        out << "class: genuinely twisted, but essential maps from "
               "CP^infinity exist\n";
    } else {
        out << "class: twist -1; admits no essential map from CP^infinity\n";
    }
    return 0;
}

// --- tx / degrees -----------------------------------------------------

int negative_tx(const Options& options, const GenusSpace& space,
                const std::string& query, std::ostream& out) {
    if (options.machine) {
        ordered_json doc{{"query", query},
                         {"inputs", {{"space", space.label}}},
                         {"result",
                          {{"admits", false}, {"reason", "twist is -1"}}}};
        emit(options, doc, out);
    } else {
        out << "no essential map from CP^infinity: twist is -1\n";
    }
    return 1;
}

int cmd_tx(const Options& options, const GenusSpace& space,
           std::ostream& out) {
    std::optional<TComputation> computed;
    try {
        computed = compute_T(space.invariant);
    } catch (const NoEssentialMapError&) {
        return negative_tx(options, space, "tx", out);
    }
    const TComputation& tc = *computed;
    if (options.machine) {
        ordered_json doc{{"query", "tx"},
                         {"inputs", {{"space", space.label}}},
                         {"result", {{"admits", true}, {"T", tc.T.str()}}},
                         {"certificate", certificate_json(tc.certificate)}};
        emit(options, doc, out);
    } else {
        out << "T_" << space.label << " = " << tc.T << "\n";
        out << "certificate: " << certificate_str(tc.certificate) << "\n";
    }
    return 0;
}

int cmd_degrees(const Options& options, const GenusSpace& space,
                const Int& bound, std::ostream& out) {
    std::optional<TComputation> computed;
    try {
        computed = compute_T(space.invariant);
    } catch (const NoEssentialMapError&) {
        return negative_tx(options, space, "degrees", out);
    }
    const TComputation& tc = *computed;
    const DegreeSet ds{tc.T};
    std::vector<Int> members;
    for (Int n = 1; n <= bound; ++n) {
        if (contains(ds, n)) {
            members.push_back(n);
        }
    }
    if (options.machine) {
        ordered_json list = ordered_json::array();
        for (const Int& n : members) {
            list.push_back(n.str());
        }
        ordered_json doc{{"query", "degrees"},
                         {"inputs",
                          {{"space", space.label}, {"bound", bound.str()}}},
                         {"result",
                          {{"admits", true},
                           {"T", tc.T.str()},
                           {"members", list}}},
                         {"certificate", certificate_json(tc.certificate)}};
        emit(options, doc, out);
    } else {
        out << "T_" << space.label << " = " << tc.T << "\n";
        out << "degree set: { " << tc.T << " * j^2 : j odd }\n";
        out << "members up to " << bound << ":";
        for (const Int& n : members) {
            out << " " << n;
        }
        out << "\n";
    }
    return 0;
}

// --- check-map --------------------------------------------------------

int cmd_check_map(const Options& options, const GenusSpace& space,
                  const Int& degree, std::ostream& out) {
    std::optional<TComputation> computed;
    try {
        computed = compute_T(space.invariant);
    } catch (const NoEssentialMapError&) {
        return negative_tx(options, space, "check-map", out);
    }
    const TComputation& tc = *computed;
    const DegreeSet ds{tc.T};

    std::string reason;
    if (degree <= 0) {
        reason = "realizable degrees are positive";
    } else if (degree % tc.T != 0) {
        reason = "not divisible by T = " + tc.T.str();
    } else if (!is_odd_square(Int(degree / tc.T))) {
        reason = degree.str() + " / " + tc.T.str() + " = " +
                 Int(degree / tc.T).str() + " is not an odd square";
    }

    if (!reason.empty()) {
        if (options.machine) {
            ordered_json doc{{"query", "check-map"},
                             {"inputs",
                              {{"space", space.label},
                               {"degree", degree.str()}}},
                             {"result",
                              {{"realizable", false},
                               {"T", tc.T.str()},
                               {"reason", reason}}}};
            emit(options, doc, out);
        } else {
            out << "degree " << degree << ": not realizable (" << reason
                << ")\n";
        }
        return 1;
    }

    const Int g = factor_through_standard(space.invariant, degree);
    const ConstructionFamily& family = tc.certificate;
    if (options.machine) {
        ordered_json components = ordered_json::array();
        for (const auto& [q, nq] : family.exceptional()) {
            components.push_back(ordered_json{{"p", q.value().str()},
                                              {"degree", Int(degree / nq).str()}});
        }
        ordered_json doc{
            {"query", "check-map"},
            {"inputs", {{"space", space.label}, {"degree", degree.str()}}},
            {"result",
             {{"realizable", true},
              {"T", tc.T.str()},
              {"g_degree", g.str()},
              {"components", components},
              {"cofinite", Int(degree / family.cofinite_value()).str()}}}};
        emit(options, doc, out);
    } else {
        out << "degree " << degree << ": realizable\n";
        out << "f = g o i_" << space.label << " with deg g = " << g << "\n";
        out << "local components:";
        bool first = true;
        for (const auto& [q, nq] : family.exceptional()) {
            out << (first ? " " : ", ") << "deg_" << q.value() << " = "
                << Int(degree / nq);
            first = false;
        }
        out << "; cofinite: " << Int(degree / family.cofinite_value()) << "\n";
    }
    return 0;
}

// --- verify-congruence ------------------------------------------------

int cmd_verify_congruence(const Options& options, const GenusSpace& space,
                          const Int& p_raw, const Int& k, std::ostream& out) {
    const Prime p(p_raw);
    if (!p.is_odd()) {
        throw DomainError("verify-congruence needs an odd prime, got 2");
    }
    if (k == 0 || k % p.value() == 0) {
        throw DomainError("verify-congruence needs k nonzero and coprime to " +
                          p.value().str() + ", got k = " + k.str());
    }

    const Sign invariant_sign = evaluate(space.invariant, p);
    const Sign resolved = rector_congruence_sign(p, k);

    const std::size_t order = static_cast<std::size_t>(p.value()) + 2;
    const Int modulus = p.value() * p.value();
    const TruncatedSeries f = pullback(k, {}, order, modulus);
    const std::size_t target = static_cast<std::size_t>(p.value()) + 1;
    const Int x_side = adams_on_x(p, invariant_sign).value.substitute(f)
                           .coeff(target);
    const Int cp_side = adams_on_cp(p.value(), f).coeff(target);
    const bool consistent = invariant_sign == resolved;

    if (options.machine) {
        ordered_json doc{
            {"query", "verify-congruence"},
            {"inputs",
             {{"space", space.label}, {"p", p.value().str()}, {"k", k.str()}}},
            {"result",
             {{"modulus", modulus.str()},
              {"x_side", x_side.str()},
              {"cp_side", cp_side.str()},
              {"resolved_sign", resolved.value()},
              {"invariant_sign", invariant_sign.value()},
              {"consistent", consistent}}}};
        emit(options, doc, out);
    } else {
        out << "p = " << p.value() << ", k = " << k << " (space "
            << space.label << ")\n";
        out << "coefficient of x^" << target << " (mod " << modulus
            << "): operation side " << x_side << ", pullback side " << cp_side
            << "\n";
        out << "sign " << sign_str(resolved) << " "
            << (consistent ? "=" : "!=") << " (" << space.label << "/"
            << p.value() << "): " << (consistent ? "consistent" : "inconsistent")
            << "\n";
    }
    return consistent ? 0 : 1;
}

// --- equiv ------------------------------------------------------------

int cmd_equiv(const Options& options, const GenusSpace& a,
              const GenusSpace& b, std::ostream& out) {
    const bool eq = equivalent(a.invariant, b.invariant);
    Int witness = 0;
    if (!eq) {
        // Distinct canonical forms disagree at some prime; in practice the
        // first one is tiny. The ceiling only guards against a logic bug.
        for (Int n = 2; n < 1000000; ++n) {
            if (!is_prime(n)) {
                continue;
            }
            const Prime p(n);
            if (evaluate(a.invariant, p) != evaluate(b.invariant, p)) {
                witness = n;
                break;
            }
        }
        if (witness == 0) {
            throw Error("no disagreeing prime below 1000000; canonical forms "
                        "should have been equal");
        }
    }

    if (options.machine) {
        ordered_json result{{"equivalent", eq}};
        if (!eq) {
            result["witness_prime"] = witness.str();
        }
        ordered_json doc{{"query", "equiv"},
                         {"inputs", {{"a", a.label}, {"b", b.label}}},
                         {"result", result}};
        emit(options, doc, out);
    } else if (eq) {
        out << "equivalent\n";
    } else {
        out << "not equivalent (differ at p = " << witness << ")\n";
    }
    return eq ? 0 : 1;
}

// --- embed ------------------------------------------------------------

int cmd_embed(const Options& options, const GenusSpace& space,
              std::ostream& out) {
    const bool embeds = lambda_embedding_exists(space.invariant);
    if (options.machine) {
        ordered_json result{{"embeds", embeds}};
        if (embeds) {
            const EssentialMapDecision decision =
                admits_essential_map(space.invariant);
            ordered_json exceptional = ordered_json::array();
            for (const Prime& q : decision.exceptional) {
                exceptional.push_back(q.value().str());
            }
            result["witness_k"] = decision.witness.str();
            result["exceptional"] = exceptional;
        } else {
            result["reason"] = "twist is -1";
        }
        ordered_json doc{{"query", "embed"},
                         {"inputs", {{"space", space.label}}},
                         {"result", result}};
        emit(options, doc, out);
        return embeds ? 0 : 1;
    }

    out << "K^~(" << space.label
        << ") embeds in K^~(CP^infinity) as a sub-lambda-ring: "
        << (embeds ? "yes" : "no (twist is -1)") << "\n";
    if (embeds) {
        const EssentialMapDecision decision =
            admits_essential_map(space.invariant);
        out << "witness: k = " << decision.witness
            << ", localizations agree away from { ";
        bool first = true;
        for (const Prime& q : decision.exceptional) {
            out << (first ? "" : ", ") << q.value();
            first = false;
        }
        out << " }\n";
    }
    return embeds ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"computations in the genus of infinite quaternionic "
                 "projective space",
                 "genus"};
    app.require_subcommand(1);

    std::string input;
    std::string space_name;
    std::string format = "human";
    long prime_bound = 100;
    app.add_option("--input", input, "config file with space definitions");
    app.add_option("--space", space_name, "space name within the config");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--prime-bound", prime_bound,
                   "tabulate invariant values for primes up to this bound")
        ->check(CLI::PositiveNumber);

    CLI::App* describe =
        app.add_subcommand("describe", "canonical form and invariant table");
    CLI::App* tx = app.add_subcommand(
        "tx", "minimal essential degree T with a construction certificate");
    CLI::App* degrees =
        app.add_subcommand("degrees", "the degree set up to a bound");
    std::string degrees_bound = "100";
    degrees->add_option("--bound", degrees_bound,
                        "list degree-set members up to this bound");
    CLI::App* check =
        app.add_subcommand("check-map", "test whether a degree is realizable");
    std::string degree_arg;
    check->add_option("degree", degree_arg, "candidate mapping degree")
        ->required();
    CLI::App* verify = app.add_subcommand(
        "verify-congruence", "check the Adams-operation congruence at (p, k)");
    std::string p_arg;
    std::string k_arg;
    verify->add_option("p", p_arg, "odd prime")->required();
    verify->add_option("k", k_arg, "generator coefficient, coprime to p")
        ->required();
    CLI::App* equiv = app.add_subcommand(
        "equiv", "decide homotopy equivalence of two spaces by name");
    std::string name_a;
    std::string name_b;
    equiv->add_option("a", name_a, "first space name")->required();
    equiv->add_option("b", name_b, "second space name")->required();
    CLI::App* embed = app.add_subcommand(
        "embed", "sub-lambda-ring embedding verdict for K-theory");

    for (CLI::App* sub : {describe, tx, degrees, check, verify, equiv, embed}) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (input.empty()) {
            throw ParseError("--input FILE is required");
        }
        Options options;
        options.spaces = load_space_configs(input);
        options.machine = (format == "machine");
        options.prime_bound = prime_bound;

        if (app.got_subcommand(describe)) {
            return cmd_describe(options, resolve_space(options, space_name),
                                out);
        }
        if (app.got_subcommand(tx)) {
            return cmd_tx(options, resolve_space(options, space_name), out);
        }
        if (app.got_subcommand(degrees)) {
            return cmd_degrees(options, resolve_space(options, space_name),
                               parse_int_arg(degrees_bound, "bound"), out);
        }
        if (app.got_subcommand(check)) {
            return cmd_check_map(options, resolve_space(options, space_name),
                                 parse_int_arg(degree_arg, "degree"), out);
        }
        if (app.got_subcommand(verify)) {
            return cmd_verify_congruence(
                options, resolve_space(options, space_name),
                parse_int_arg(p_arg, "p"), parse_int_arg(k_arg, "k"), out);
        }
        if (app.got_subcommand(equiv)) {
            return cmd_equiv(options,
                             to_genus_space(find_space(options.spaces, name_a)),
                             to_genus_space(find_space(options.spaces, name_b)),
                             out);
        }
        if (app.got_subcommand(embed)) {
            return cmd_embed(options, resolve_space(options, space_name), out);
        }
        throw ParseError("no command selected");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace genus
