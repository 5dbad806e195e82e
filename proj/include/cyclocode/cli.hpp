#pragma once

// Command-line front end: compute, verify, field and periods.
// Exit codes: 0 ok, 1 verification mismatch, 2 parameter error, 3 capacity refusal.

#include <cstdint>
#include <exception>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclocode/errors.hpp"
#include "cyclocode/report.hpp"
#include "cyclocode/sweep.hpp"
#include "cyclocode/verification.hpp"

namespace cyclocode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitCapacity = 3;

struct VerifyOptions {
    bool gauss = false;
    bool sweep = false;
    std::uint64_t max_r = 0; // 0 selects the scope default
    unsigned workers = 1;
};

/// Runs the selected verification scopes. Default scope: published examples,
/// period checks up to 65536, oracle equivalence up to 4096, Gauss sums up to
/// 1024 and the coset-representative codes for (7,3) and (13,3).
[[nodiscard]] inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const auto append = [&](std::vector<CheckResult> v) {
        for (auto& c : v) out.push_back(std::move(c));
    };
    const auto limit = [&](std::uint64_t fallback) { return opt.max_r ? opt.max_r : fallback; };

    if (opt.gauss || opt.sweep) {
        if (opt.sweep) {
            for (const SweepCase& c : admissible_cases(limit(65536))) {
                const FieldContext ctx = FieldContext::build(c.params.p, c.params.m);
                append(check_oracle_equivalence(ctx, c.order, opt.workers));
            }
        }
        if (opt.gauss) {
            for (const SweepCase& c : admissible_cases(limit(4096))) {
                append(check_gauss(FieldContext::build(c.params.p, c.params.m), c.order));
            }
        }
        return out;
    }

    for (const ReferenceExample& ex : reference_examples()) append(check_reference_example(ex, opt.workers));
    for (const SweepCase& c : admissible_cases(limit(65536))) {
        const FieldContext ctx = FieldContext::build(c.params.p, c.params.m);
        append(check_periods(ctx, c.order));
        if (c.params.r <= 4096) append(check_oracle_equivalence(ctx, c.order, opt.workers));
        if (c.params.r <= 1024) append(check_gauss(ctx, c.order));
    }
    for (auto [p, m] : {std::pair{7u, 3u}, std::pair{13u, 3u}}) {
        append(check_coset_representatives(FieldContext::build(p, m), opt.workers));
    }
    return out;
}

namespace detail {

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

} // namespace detail

/// Parses argv and executes one subcommand, writing the report to out and
/// diagnostics to err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Complete weight enumerators of cyclotomic trace codes"};
    app.require_subcommand(1);

    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t order = 0;
    std::vector<std::uint32_t> classes;
    std::string method = "all";
    std::string format = "text";
    bool allow_large = false;
    unsigned threads = 1;

    auto* compute = app.add_subcommand("compute", "Complete weight enumerator of C_D");
    compute->add_option("--p", p, "characteristic")->required();
    compute->add_option("--m", m, "extension degree")->required();
    compute->add_option("--N", order, "cyclotomic order")->required();
    compute->add_option("--classes", classes, "class indices I, comma separated")->required()->delimiter(',');
    compute->add_option("--method", method, "brute, formula, closed, theorem or all");
    compute->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    compute->add_flag("--allow-large", allow_large, "lift the enumeration cost limit");
    compute->add_option("--threads", threads, "worker threads, 0 for hardware concurrency");

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Run the verification matrix");
    verify->add_flag("--gauss", vopt.gauss, "Gauss-sum checks only");
    verify->add_flag("--sweep", vopt.sweep, "oracle equivalence over the admissible sweep");
    verify->add_option("--max-r", vopt.max_r, "largest field size in the selected scope");
    verify->add_option("--threads", vopt.workers, "worker threads, 0 for hardware concurrency");

    auto* field = app.add_subcommand("field", "Field construction facts");
    field->add_option("--p", p, "characteristic")->required();
    field->add_option("--m", m, "extension degree")->required();

    auto* periods = app.add_subcommand("periods", "Exact Gaussian periods");
    periods->add_option("--p", p, "characteristic")->required();
    periods->add_option("--m", m, "extension degree")->required();
    periods->add_option("--N", order, "cyclotomic order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParameter;
    }

    try {
        if (*compute) {
            ComputeRequest req;
            req.p = p;
            req.m = m;
            req.order = order;
            req.indices = classes;
            req.method = parse_method(method);
            req.allow_large = allow_large;
            req.workers = threads;
            const CweReport rep = compute_report(req);
            if (format == "json") {
                detail::print_json(out, to_json(rep));
            } else {
                out << to_text(rep);
            }
            return rep.verdict == "MISMATCH" ? kExitMismatch : kExitOk;
        }
        if (*verify) {
            const auto checks = run_verification(vopt);
            Json list = Json::array();
            std::size_t failed = 0;
            for (const CheckResult& c : checks) {
                list.push_back(to_json(c));
                if (!c.passed) {
                    ++failed;
                    err << "FAIL " << c.check << " p=" << c.p << " m=" << c.m << " N=" << c.order << ": " << c.detail
                        << '\n';
                }
            }
            detail::print_json(out, Json{{"checks", list},
                                         {"total", checks.size()},
                                         {"failed", failed},
                                         {"passed", checks.size() - failed}});
            return failed == 0 ? kExitOk : kExitMismatch;
        }
        if (*field) {
            detail::print_json(out, field_report(p, m));
            return kExitOk;
        }
        if (*periods) {
            detail::print_json(out, periods_report(p, m, order));
            return kExitOk;
        }
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const ParameterError& e) {
        err << "parameter error: " << e.what() << '\n';
        return kExitParameter;
    } catch (const DomainError& e) {
        err << "parameter error: " << e.what() << '\n';
        return kExitParameter;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitParameter;
}

/// Convenience wrapper returning stdout, stderr and the exit code.
struct Captured {
    int code = 0;
    std::string out;
    std::string err;
};

[[nodiscard]] inline Captured run_captured(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"cyclocode"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace cyclocode::cli
