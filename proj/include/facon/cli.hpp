#pragma once

// Command orchestration and report emitters shared by the facon tool and tests.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "facon/errors.hpp"
#include "facon/facons.hpp"
#include "facon/parser.hpp"
#include "facon/strata.hpp"
#include "facon/verify.hpp"

namespace facon {

inline constexpr const char* kVersion = "0.1.0";

enum class Command { Analyze, Stratify, CountFacons, Verify };
enum class Format { Json, Text };

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2, kExitMismatch = 3 };

struct RunConfig {
    Command command = Command::Analyze;
    std::string input;   // mapping file; unused by count-facons
    std::size_t n = 0;   // count-facons only
    AnalysisOptions options;
    Format format = Format::Json;
};

using Json = nlohmann::ordered_json;

namespace detail {

inline Json strings(const std::vector<MultiPoly>& polys) {
    Json out = Json::array();
    for (const auto& p : polys) out.push_back(p.to_string());
    return out;
}

inline Json point_json(const Point& p) {
    Json out = Json::array();
    for (const auto& q : p) out.push_back(q.get_str());
    return out;
}

inline std::string tuple_text(const std::vector<MultiPoly>& polys) {
    std::string out = "(";
    for (std::size_t i = 0; i < polys.size(); ++i) out += (i ? ", " : "") + polys[i].to_string();
    return out + ")";
}

inline constexpr std::size_t kReportedSamples = 3;

} // namespace detail

inline Json scope_json(const AnalysisOptions& o) {
    return Json{{"E", o.max_exponent},   {"D", o.degree},          {"seed", o.seed},
                {"trials", o.trials},    {"samples", o.samples},   {"version", kVersion},
                {"curve_family", "monomial"},
                {"divergence", "generic coefficients"}};
}

inline Json catalog_json(const FaconCatalog& catalog) {
    Json out = Json::array();
    for (const auto& [facon, classes] : catalog.entries) {
        Json cls = Json::array();
        for (const auto& c : classes) {
            Json free = Json::array();
            for (auto v : c.limit.free_params) free.push_back(variable_name(Space::Parameter, v));
            cls.push_back({{"tuple", c.tuple.to_string()},
                           {"primitive", c.primitive.to_string()},
                           {"representative", c.representative.values()},
                           {"limit", detail::strings(c.limit.components)},
                           {"free_params", free}});
        }
        out.push_back({{"label", facon.label()}, {"classes", cls}});
    }
    return out;
}

inline Json stratification_json(const Stratification& s) {
    Json strata = Json::array();
    for (std::size_t i = 0; i < s.strata.size(); ++i) {
        const Stratum& st = s.strata[i];
        Json facons = Json::array(), etoile = Json::array(), samples = Json::array(), contains = Json::array(),
             params = Json::array();
        for (const auto& l : st.labels) {
            facons.push_back(l.facon.label());
            etoile.push_back(l.to_string());
        }
        for (std::size_t k = 0; k < std::min(st.sample_points.size(), detail::kReportedSamples); ++k) {
            samples.push_back(detail::point_json(st.sample_points[k]));
        }
        for (auto b : s.contained_in(i)) contains.push_back(s.strata[b].id);
        for (const auto& lm : st.parametrizations) params.push_back(detail::strings(lm.components));
        strata.push_back({{"id", st.id},
                          {"facons", facons},
                          {"etoile", etoile},
                          {"etoile_level", st.etoile_level},
                          {"dimension", st.dimension},
                          {"rank_constant", st.rank_constant},
                          {"implicit_eqs", detail::strings(st.implicit_eqs)},
                          {"sample_points", samples},
                          {"contains", contains},
                          {"parametrizations", params}});
    }
    return strata;
}

inline Json filtration_json(const Stratification& s) {
    Json out = Json::array();
    for (const auto& level : s.filtration) {
        Json ids = Json::array();
        for (auto i : level.strata) ids.push_back(s.strata[i].id);
        out.push_back({{"dimension", level.dimension}, {"strata", ids}});
    }
    return out;
}

/// Full JSON report; `with_catalog` false omits the facon catalog.
inline Json report_json(const AsymptoticSetReport& r, bool with_catalog = true) {
    Json out;
    out["mapping"] = r.mapping.to_string();
    out["dominant"] = r.dominant;
    if (with_catalog) out["facons"] = catalog_json(r.catalog);
    out["strata"] = stratification_json(r.stratification);
    out["filtration"] = filtration_json(r.stratification);
    out["frontier"] = r.frontier.holds;
    out["frontier_violations"] = r.frontier.violations;
    out["jelonek"] = {{"top_dimension", r.top_dimension ? Json(*r.top_dimension) : Json(nullptr)},
                      {"hypersurface", r.hypersurface}};
    out["scope"] = scope_json(r.options);
    out["warnings"] = r.warnings;
    return out;
}

inline std::string report_text(const AsymptoticSetReport& r, bool with_catalog = true) {
    std::ostringstream os;
    const auto& s = r.stratification;
    os << "mapping: " << r.mapping.to_string() << "\n";
    os << "dominant: " << (r.dominant ? "yes" : "no") << "\n";
    if (with_catalog) {
        os << "facons (" << r.catalog.entries.size() << "):\n";
        for (const auto& [facon, classes] : r.catalog.entries) {
            os << "  " << facon.label() << "\n";
            for (const auto& c : classes) {
                os << "    tuple " << c.primitive.to_string() << "  curve " << c.representative.to_string()
                   << "  limit " << detail::tuple_text(c.limit.components) << "\n";
            }
        }
    }
    os << "strata (" << s.strata.size() << "):\n";
    for (std::size_t i = 0; i < s.strata.size(); ++i) {
        const Stratum& st = s.strata[i];
        os << "  " << st.id << "  dim " << st.dimension << "  level " << st.etoile_level << " ";
        for (const auto& l : st.labels) os << " " << l.to_string();
        os << "\n";
        for (const auto& lm : st.parametrizations) os << "    image of " << detail::tuple_text(lm.components) << "\n";
        for (const auto& g : st.implicit_eqs) os << "    " << g.to_string() << " = 0\n";
        const auto below = s.contained_in(i);
        if (!below.empty()) {
            os << "    closure contains";
            for (auto b : below) os << " " << s.strata[b].id;
            os << "\n";
        }
    }
    os << "filtration:";
    if (s.filtration.empty()) os << " empty";
    for (std::size_t k = 0; k < s.filtration.size(); ++k) {
        os << (k ? " >" : "") << " dim " << s.filtration[k].dimension << " {";
        for (std::size_t j = 0; j < s.filtration[k].strata.size(); ++j) {
            os << (j ? "," : "") << s.strata[s.filtration[k].strata[j]].id;
        }
        os << "}";
    }
    os << "\n";
    os << "frontier: " << (r.frontier.holds ? "true" : "false") << "\n";
    for (const auto& v : r.frontier.violations) os << "  violation: " << v << "\n";
    os << "top dimension: " << (r.top_dimension ? std::to_string(*r.top_dimension) : "none")
       << "  hypersurface: " << (r.hypersurface ? "yes" : "no") << "\n";
    os << "scope: E=" << r.options.max_exponent << " D=" << r.options.degree << " seed=" << r.options.seed
       << " trials=" << r.options.trials << " samples=" << r.options.samples << " curves=monomial version=" << kVersion
       << "\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

struct VerifyOutcome {
    OracleReport oracle;
    std::int64_t oracle_bound = 0;
    std::vector<ClassCheck> checks;

    bool passed() const {
        return oracle.agrees && std::all_of(checks.begin(), checks.end(),
                                            [](const ClassCheck& c) { return c.report.passed; });
    }
};

inline VerifyOutcome verify_mapping(const PolynomialMapping& f, const AnalysisOptions& options) {
    VerifyOutcome out;
    out.oracle_bound = std::min<std::int64_t>(options.max_exponent, 2);
    out.oracle = oracle_cross_check(f, out.oracle_bound, options.seed);
    out.checks = check_catalog_numerically(f, collect_facons(f, options.max_exponent), options.seed);
    return out;
}

inline Json verify_json(const PolynomialMapping& f, const VerifyOutcome& v, const AnalysisOptions& options) {
    Json checks = Json::array();
    for (const auto& c : v.checks) {
        Json coeffs = Json::array();
        for (const auto& q : c.coefficients) coeffs.push_back(q.get_str());
        checks.push_back({{"facon", c.facon.label()},
                          {"curve", c.representative.values()},
                          {"coefficients", coeffs},
                          {"schedule", c.report.schedule},
                          {"deviations", c.report.deviations},
                          {"passed", c.report.passed},
                          {"notes", c.report.notes}});
    }
    return Json{{"mapping", f.to_string()},
                {"oracle",
                 {{"E", v.oracle_bound},
                  {"agrees", v.oracle.agrees},
                  {"numeric", v.oracle.numeric_labels},
                  {"symbolic", v.oracle.symbolic_labels},
                  {"mismatches", v.oracle.mismatches}}},
                {"numeric_checks", checks},
                {"tolerance", kDefaultTolerance},
                {"passed", v.passed()},
                {"scope", scope_json(options)}};
}

inline std::string verify_text(const PolynomialMapping& f, const VerifyOutcome& v) {
    std::ostringstream os;
    os << "mapping: " << f.to_string() << "\n";
    os << "oracle (E=" << v.oracle_bound << "): " << (v.oracle.agrees ? "agrees" : "MISMATCH") << "\n";
    for (const auto& m : v.oracle.mismatches) os << "  " << m << "\n";
    std::size_t passed = 0;
    for (const auto& c : v.checks) {
        if (c.report.passed) {
            ++passed;
            continue;
        }
        os << "  numeric check failed: " << c.facon.label() << " curve " << c.representative.to_string() << "\n";
    }
    os << "numeric checks: " << passed << "/" << v.checks.size() << " passed\n";
    os << "verdict: " << (v.passed() ? "pass" : "fail") << "\n";
    return os.str();
}

/// Executes one command. Reports go to `out`, diagnostics to `err`.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto& opt = config.options;
    if (config.command == Command::CountFacons) {
        if (config.n < 1) {
            err << "error: count-facons requires -n >= 1\n";
            return kExitInput;
        }
        out << max_facons_count(config.n).get_str() << "\n";
        return kExitOk;
    }
    if (opt.max_exponent < 1 || opt.degree < 1 || opt.trials < 1) {
        err << "error: --max-exponent, --degree and --trials must be >= 1\n";
        return kExitInput;
    }
    std::ifstream in(config.input, std::ios::binary);
    if (!in) {
        err << config.input << ": error: cannot open file\n";
        return kExitInput;
    }
    std::ostringstream text;
    text << in.rdbuf();
    PolynomialMapping f;
    try {
        f = parse_mapping(text.str());
    } catch (const ParseError& e) {
        err << config.input << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
        return kExitInput;
    }
    try {
        if (config.command == Command::Verify) {
            const VerifyOutcome v = verify_mapping(f, opt);
            if (config.format == Format::Json) {
                out << verify_json(f, v, opt).dump(2) << "\n";
            } else {
                out << verify_text(f, v);
            }
            return v.passed() ? kExitOk : kExitMismatch;
        }
        const bool with_catalog = config.command == Command::Analyze;
        const AsymptoticSetReport r = asymptotic_set(f, opt);
        if (config.format == Format::Json) {
            out << report_json(r, with_catalog).dump(2) << "\n";
        } else {
            out << report_text(r, with_catalog);
        }
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace facon
