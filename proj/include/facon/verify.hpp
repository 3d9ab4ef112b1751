#pragma once

// Floating-point and brute-force oracles for the symbolic pipeline.

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "facon/curves.hpp"
#include "facon/facons.hpp"
#include "facon/random.hpp"
#include "facon/strata.hpp"

namespace facon {

inline constexpr double kDefaultTolerance = 1e-2;
inline constexpr double kDivergenceThreshold = 1e3;
inline constexpr double kOracleU = 1e6;
inline constexpr double kNoiseFloor = 1e-12;

inline const std::vector<double>& default_schedule() {
    static const std::vector<double> schedule{1e3, 1e4, 1e5, 1e6};
    return schedule;
}

struct NumericCheckReport {
    std::vector<double> schedule;     // magnitudes of u actually evaluated
    std::vector<double> deviations;   // max_k |F_k - a_k| / max(1, |a_k|)
    bool passed = false;
    double tolerance = kDefaultTolerance;
    std::vector<std::string> notes;
};

namespace detail {

inline std::vector<double> curve_point(const ExponentVector& e, std::span<const double> coeffs, double u) {
    std::vector<double> x(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) x[i] = coeffs[i] * std::pow(u, static_cast<double>(e[i]));
    return x;
}

inline std::vector<double> to_doubles(std::span<const BigRational> values) {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.get_d());
    return out;
}

} // namespace detail

/// Evaluates F along gamma(u) = (c_i u^{e_i}) in double precision and measures
/// the distance to `expected` at each u of the schedule.
inline NumericCheckReport numeric_curve_check(const PolynomialMapping& f, const ExponentVector& e,
                                              std::span<const BigRational> coeffs,
                                              std::span<const BigRational> expected,
                                              const std::vector<double>& schedule = default_schedule(),
                                              double tol = kDefaultTolerance) {
    if (e.size() != f.n || coeffs.size() != f.n || expected.size() != f.n) {
        throw UsageError("numeric_curve_check: exponents, coefficients and expected point need n entries");
    }
    for (std::size_t i = 0; i < f.n; ++i) {
        if (e[i] != 0 && coeffs[i] == 0) {
            throw UsageError("numeric_curve_check: coefficient c" + std::to_string(i + 1) + " must be nonzero");
        }
    }
    if (schedule.empty() || !std::is_sorted(schedule.begin(), schedule.end(), std::less_equal<>())) {
        throw UsageError("numeric_curve_check: schedule must be nonempty and strictly increasing");
    }
    const auto c = detail::to_doubles(coeffs);
    const auto a = detail::to_doubles(expected);
    NumericCheckReport report;
    report.tolerance = tol;
    for (double u : schedule) {
        const auto x = detail::curve_point(e, c, u);
        double deviation = 0;
        bool finite = std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
        for (std::size_t k = 0; finite && k < f.n; ++k) {
            const double value = f.components[k].eval_double(x);
            finite = std::isfinite(value);
            deviation = std::max(deviation, std::abs(value - a[k]) / std::max(1.0, std::abs(a[k])));
        }
        if (!finite) {
            report.notes.push_back("schedule truncated before u = " + std::to_string(u) + ": floating-point overflow");
            break;
        }
        report.schedule.push_back(u);
        report.deviations.push_back(deviation);
    }
    const auto& d = report.deviations;
    if (d.empty()) {
        report.notes.push_back("no schedule point could be evaluated");
        return report;
    }
    bool settling = true;
    for (std::size_t i = d.size() >= 3 ? d.size() - 2 : 1; i < d.size(); ++i) {
        if (d[i] > d[i - 1] + kNoiseFloor) settling = false;
    }
    report.passed = d.back() < tol && settling;
    return report;
}

struct ClassCheck {
    Facon facon;
    ExponentVector representative;
    std::vector<BigRational> coefficients;
    NumericCheckReport report;
};

/// Numeric check of every catalog class against the exact limit at random
/// rational coefficients.
inline std::vector<ClassCheck> check_catalog_numerically(const PolynomialMapping& f, const FaconCatalog& catalog,
                                                         std::uint64_t seed,
                                                         const std::vector<double>& schedule = default_schedule(),
                                                         double tol = kDefaultTolerance) {
    std::vector<ClassCheck> out;
    for (const auto& [facon, classes] : catalog.entries) {
        for (const auto& c : classes) {
            SeededRng rng(seed, "numeric:" + c.representative.to_string());
            const Point params = sample_parameters(c.limit, rng);
            const Point expected = c.limit.eval(params);
            out.push_back({facon, c.representative, params,
                           numeric_curve_check(f, c.representative, params, expected, schedule, tol)});
        }
    }
    return out;
}

struct OracleReport {
    bool agrees = false;
    std::set<std::string> numeric_labels;
    std::set<std::string> symbolic_labels;
    std::vector<std::string> mismatches;
};

/// Re-derives the facon set by brute force: every exponent vector in the
/// small box, one random unit-scale curve each, convergence judged by the
/// size of F at u = 1e6. Compares against the symbolic catalog.
inline OracleReport oracle_cross_check(const PolynomialMapping& f, std::int64_t bound, std::uint64_t seed = 0) {
    if (bound < 1 || bound > 2) throw UsageError("oracle_cross_check supports exponent bounds 1 and 2 only");
    OracleReport report;
    std::vector<std::int64_t> e(f.n, -bound);
    while (true) {
        if (std::any_of(e.begin(), e.end(), [](std::int64_t v) { return v > 0; })) {
            ExponentVector ev(e);
            SeededRng rng(seed, "oracle:" + ev.to_string());
            std::vector<double> c(f.n);
            for (auto& v : c) v = rng.unit_coefficient();
            const auto x = detail::curve_point(ev, c, kOracleU);
            bool converges = true;
            for (const auto& component : f.components) {
                const double value = component.eval_double(x);
                if (!std::isfinite(value) || std::abs(value) > kDivergenceThreshold) converges = false;
            }
            if (converges) {
                std::string inf = "(", zero = "[";
                for (std::size_t i = 0; i < f.n; ++i) {
                    const std::string idx = std::to_string(i + 1);
                    if (e[i] > 0) inf += (inf.size() > 1 ? "," : "") + idx;
                    if (e[i] < 0) zero += (zero.size() > 1 ? "," : "") + idx;
                }
                report.numeric_labels.insert(inf + ")" + zero + "]");
            }
        }
        std::size_t k = f.n;
        while (k > 0 && e[k - 1] == bound) e[--k] = -bound;
        if (k == 0) break;
        ++e[k - 1];
    }
    report.symbolic_labels = collect_facons(f, bound).labels();
    for (const auto& l : report.numeric_labels) {
        if (!report.symbolic_labels.contains(l)) report.mismatches.push_back(l + " found numerically only");
    }
    for (const auto& l : report.symbolic_labels) {
        if (!report.numeric_labels.contains(l)) report.mismatches.push_back(l + " found symbolically only");
    }
    report.agrees = report.mismatches.empty();
    return report;
}

} // namespace facon
