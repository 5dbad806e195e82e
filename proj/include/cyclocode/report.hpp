#pragma once

// Report assembly and serialization for the command-line tool. JSON objects
// use sorted keys and CWE terms use the sorted_terms() order, so identical
// inputs always serialize to identical bytes.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclocode/closed_form.hpp"
#include "cyclocode/codes.hpp"
#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/finite_field.hpp"
#include "cyclocode/verification.hpp"
#include "cyclocode/weight_enumerator.hpp"

namespace cyclocode {

using Json = nlohmann::json;

enum class Method { kBrute, kFormula, kClosed, kTheorem, kAll };

[[nodiscard]] inline std::string to_string(Method m) {
    switch (m) {
    case Method::kBrute: return "brute";
    case Method::kFormula: return "formula";
    case Method::kClosed: return "closed";
    case Method::kTheorem: return "theorem";
    case Method::kAll: return "all";
    }
    return "unknown";
}

[[nodiscard]] inline Method parse_method(const std::string& s) {
    if (s == "brute") return Method::kBrute;
    if (s == "formula") return Method::kFormula;
    if (s == "closed") return Method::kClosed;
    if (s == "theorem") return Method::kTheorem;
    if (s == "all") return Method::kAll;
    throw ParameterError("unknown method '" + s + "' (expected brute, formula, closed, theorem or all)");
}

/// Refuse exhaustive enumeration beyond this many trace lookups unless
/// explicitly overridden.
inline constexpr std::uint64_t kBruteForceBudget = 1'000'000'000;

struct ComputeRequest {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t order = 0;
    ClassIndexSet indices;
    Method method = Method::kAll;
    bool allow_large = false;
    unsigned workers = 1;
};

struct MethodResult {
    std::string method;
    CompleteWeightEnumerator cwe;

    friend bool operator==(const MethodResult&, const MethodResult&) = default;
};

struct CweReport {
    FieldParams params;
    std::uint32_t order = 0;
    ClassIndexSet indices;
    std::string method;
    CodeSummary summary;
    CompleteWeightEnumerator cwe;
    std::vector<MethodResult> methods;
    std::optional<std::vector<std::int64_t>> periods;
    GriesmerResult griesmer;
    /// "EQUAL" or "MISMATCH" when several routes ran, "SINGLE" otherwise.
    std::string verdict;
    std::vector<std::string> notes;

    friend bool operator==(const CweReport& a, const CweReport& b) {
        return a.params == b.params && a.order == b.order && a.indices == b.indices && a.method == b.method &&
               a.summary == b.summary && a.cwe == b.cwe && a.methods == b.methods && a.periods == b.periods &&
               a.griesmer.bound == b.griesmer.bound && a.griesmer.meets == b.griesmer.meets &&
               a.griesmer.distance_optimal == b.griesmer.distance_optimal && a.verdict == b.verdict &&
               a.notes == b.notes;
    }
};

[[nodiscard]] inline CweReport compute_report(const ComputeRequest& req) {
    const FieldContext ctx = FieldContext::build(req.p, req.m);
    const ClassPartition part = partition_classes(ctx, req.order);
    const DefiningSet defining = build_defining_set(part, req.indices);
    const FieldParams& params = ctx.params();
    const bool integral = periods_are_integral(params, req.order);
    const bool closed_ok = integral && has_closed_form(params, req.order);
    const bool theorem_ok = theorem_applies(params, req.order, defining.classes.size());

    CweReport rep;
    rep.params = params;
    rep.order = req.order;
    rep.indices = defining.classes;
    rep.method = to_string(req.method);

    const auto wants = [&](Method m) { return req.method == m || req.method == Method::kAll; };
    const auto require = [&](Method m, bool ok, const std::string& why) {
        if (req.method == m && !ok) throw ParameterError("method " + to_string(m) + " unavailable: " + why);
        if (req.method == Method::kAll && !ok) rep.notes.push_back(to_string(m) + " skipped: " + why);
        return wants(m) && ok;
    };

    const std::string not_integral = "N = " + std::to_string(req.order) + " does not divide (r-1)/(p-1) = " +
                                     std::to_string((params.r - 1) / (params.p - 1)) +
                                     ", so the periods are not integers";
    std::string no_closed = not_integral;
    if (integral && !closed_ok) {
        try {
            (void)classify_period_case(params, req.order);
        } catch (const ParameterError& e) {
            no_closed = e.what();
        }
    }
    std::string no_theorem = no_closed;
    if (closed_ok && !theorem_ok) {
        no_theorem = "no explicit theorem covers #I = " + std::to_string(defining.classes.size()) +
                     " for N = " + std::to_string(req.order);
    }

    if (wants(Method::kBrute)) {
        const std::uint64_t cost = std::uint64_t{ctx.r()} * defining.elements.size();
        if (cost > kBruteForceBudget && !req.allow_large) {
            throw CapacityError("exhaustive enumeration needs " + std::to_string(cost) +
                                " trace lookups (limit " + std::to_string(kBruteForceBudget) +
                                "); pass --allow-large to override");
        }
        rep.methods.push_back({"brute", brute_force_cwe(ctx, defining, req.workers)});
    }
    if (integral) rep.periods = gaussian_periods_exact(ctx, part).eta;
    if (require(Method::kFormula, integral, not_integral)) {
        rep.methods.push_back(
            {"formula", cwe_general_formula(params, req.order, defining.classes, GaussianPeriods{*rep.periods})});
    }
    if (require(Method::kClosed, closed_ok, no_closed)) {
        rep.methods.push_back({"closed", cwe_general_formula(params, req.order, defining.classes,
                                                             periods_closed_form(params, req.order).periods)});
    }
    if (require(Method::kTheorem, theorem_ok, no_theorem)) {
        rep.methods.push_back({"theorem", cwe_theorem(params, req.order, defining.classes)});
    }
    if (req.method == Method::kBrute && !theorem_ok) rep.notes.push_back("formula comparison skipped: " + no_theorem);

    rep.cwe = rep.methods.front().cwe;
    if (rep.methods.size() == 1) {
        rep.verdict = "SINGLE";
    } else {
        rep.verdict = "EQUAL";
        for (const auto& mr : rep.methods) {
            if (mr.cwe != rep.cwe) rep.verdict = "MISMATCH";
        }
    }
    rep.summary = code_summary(rep.cwe, params.p, defining.elements.size());
    if (rep.summary.dimension >= 1) {
        rep.griesmer = griesmer_check(rep.summary.length, rep.summary.dimension, rep.summary.min_distance, params.p);
    }
    if (theorem_ok && rep.summary.dimension != params.m) {
        rep.notes.push_back("measured dimension " + std::to_string(rep.summary.dimension) + " is below m = " +
                            std::to_string(params.m));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// JSON

[[nodiscard]] inline Json cwe_to_json(const CompleteWeightEnumerator& cwe) {
    Json terms = Json::array();
    for (const CweTerm& t : cwe.sorted_terms()) {
        terms.push_back({{"composition", t.composition}, {"multiplicity", t.multiplicity}});
    }
    return terms;
}

[[nodiscard]] inline CompleteWeightEnumerator cwe_from_json(const Json& j, std::uint32_t p) {
    CompleteWeightEnumerator cwe(p);
    for (const auto& t : j) cwe.add(t.at("composition").get<Composition>(), t.at("multiplicity").get<std::uint64_t>());
    return cwe;
}

[[nodiscard]] inline Json to_json(const CweReport& rep) {
    Json weights = Json::array();
    for (const auto& [w, f] : rep.summary.weight_distribution) weights.push_back({{"weight", w}, {"frequency", f}});
    Json methods = Json::object();
    for (const auto& mr : rep.methods) methods[mr.method] = cwe_to_json(mr.cwe);
    return Json{
        {"params",
         {{"p", rep.params.p},
          {"m", rep.params.m},
          {"r", rep.params.r},
          {"N", rep.order},
          {"n", (rep.params.r - 1) / rep.order},
          {"classes", rep.indices},
          {"method", rep.method}}},
        {"summary", {{"n", rep.summary.length}, {"k", rep.summary.dimension}, {"d", rep.summary.min_distance}}},
        {"weight_distribution", weights},
        {"cwe", cwe_to_json(rep.cwe)},
        {"cwe_text", to_text(rep.cwe)},
        {"methods", methods},
        {"periods", rep.periods ? Json(*rep.periods) : Json(nullptr)},
        {"griesmer",
         {{"bound", rep.griesmer.bound},
          {"optimal", rep.griesmer.meets},
          {"distance_optimal", rep.griesmer.distance_optimal}}},
        {"verdict", rep.verdict},
        {"notes", rep.notes},
    };
}

[[nodiscard]] inline CweReport report_from_json(const Json& j) {
    CweReport rep;
    const auto& params = j.at("params");
    rep.params = {params.at("p").get<std::uint32_t>(), params.at("m").get<std::uint32_t>(),
                  params.at("r").get<std::uint32_t>()};
    rep.order = params.at("N").get<std::uint32_t>();
    rep.indices = params.at("classes").get<ClassIndexSet>();
    rep.method = params.at("method").get<std::string>();
    rep.summary.length = j.at("summary").at("n").get<std::uint64_t>();
    rep.summary.dimension = j.at("summary").at("k").get<std::uint32_t>();
    rep.summary.min_distance = j.at("summary").at("d").get<std::uint64_t>();
    for (const auto& w : j.at("weight_distribution")) {
        rep.summary.weight_distribution[w.at("weight").get<std::uint64_t>()] = w.at("frequency").get<std::uint64_t>();
    }
    rep.cwe = cwe_from_json(j.at("cwe"), rep.params.p);
    // Methods are stored under sorted keys; restore them in computation order.
    for (const char* name : {"brute", "formula", "closed", "theorem"}) {
        if (j.at("methods").contains(name)) {
            rep.methods.push_back({name, cwe_from_json(j.at("methods").at(name), rep.params.p)});
        }
    }
    if (!j.at("periods").is_null()) rep.periods = j.at("periods").get<std::vector<std::int64_t>>();
    rep.griesmer.bound = j.at("griesmer").at("bound").get<std::uint64_t>();
    rep.griesmer.meets = j.at("griesmer").at("optimal").get<bool>();
    rep.griesmer.distance_optimal = j.at("griesmer").at("distance_optimal").get<bool>();
    rep.verdict = j.at("verdict").get<std::string>();
    rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
}

[[nodiscard]] inline std::string to_text(const CweReport& rep) {
    std::string classes;
    for (std::uint32_t i : rep.indices) classes += (classes.empty() ? "" : ",") + std::to_string(i);
    std::string out;
    out += "code: C_D over GF(" + std::to_string(rep.params.p) + "^" + std::to_string(rep.params.m) +
           "), N = " + std::to_string(rep.order) + ", I = {" + classes + "}\n";
    out += "parameters: [" + std::to_string(rep.summary.length) + "," + std::to_string(rep.summary.dimension) +
           "," + std::to_string(rep.summary.min_distance) + "]\n";
    out += "CWE: " + to_text(rep.cwe) + "\n";
    if (rep.periods) {
        out += "periods:";
        for (std::int64_t e : *rep.periods) out += " " + std::to_string(e);
        out += "\n";
    }
    out += "griesmer: bound " + std::to_string(rep.griesmer.bound) + ", meets " +
           (rep.griesmer.meets ? "yes" : "no") + ", distance-optimal " +
           (rep.griesmer.distance_optimal ? "yes" : "no") + "\n";
    std::string names;
    for (const auto& mr : rep.methods) names += (names.empty() ? "" : ", ") + mr.method;
    out += "methods: " + names + "\n";
    out += "verdict: " + rep.verdict + "\n";
    for (const auto& n : rep.notes) out += "note: " + n + "\n";
    return out;
}

[[nodiscard]] inline Json to_json(const CheckResult& c) {
    Json j{{"check", c.check}, {"p", c.p}, {"m", c.m}, {"N", c.order}, {"I", c.indices},
           {"pass", c.passed}, {"detail", c.detail}};
    if (!c.errors.empty()) j["errors"] = c.errors;
    return j;
}

[[nodiscard]] inline Json field_report(std::uint32_t p, std::uint32_t m) {
    const FieldContext ctx = FieldContext::build(p, m);
    Json div = Json::object();
    for (std::uint32_t N : {3u, 4u}) {
        div[std::to_string(N)] = {{"divides_r_minus_1", ctx.group_order() % N == 0},
                                  {"divides_r_minus_1_over_p_minus_1", periods_are_integral(ctx.params(), N)}};
    }
    return Json{{"p", p},
                {"m", m},
                {"r", ctx.r()},
                {"modulus", ctx.modulus().coefficients},
                {"alpha", ctx.alpha().index},
                {"alpha_coefficients", ctx.coefficients(ctx.alpha())},
                {"divisibility", div}};
}

[[nodiscard]] inline Json periods_report(std::uint32_t p, std::uint32_t m, std::uint32_t N) {
    const FieldContext ctx = FieldContext::build(p, m);
    const GaussianPeriods exact = gaussian_periods_exact(ctx, N);
    Json j{{"p", p},
           {"m", m},
           {"N", N},
           {"n", ctx.group_order() / N},
           {"eta", exact.eta},
           {"period_polynomial", period_polynomial(exact)}};
    if (has_closed_form(ctx.params(), N)) {
        const ClosedFormPeriods closed = periods_closed_form(ctx.params(), N);
        auto sorted = exact.eta;
        std::sort(sorted.begin(), sorted.end());
        j["closed_form"] = {{"case", std::string(to_string(closed.case_tag))},
                            {"eta", closed.periods.eta},
                            {"multiset_equal", sorted == closed.multiset()},
                            {"factored_polynomial", factored_period_polynomial(ctx.params(), N)}};
    }
    return j;
}

} // namespace cyclocode
