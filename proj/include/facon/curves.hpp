#pragma once

// Monomial test curves gamma_i(u) = c_i * u^{e_i}: substitution into F,
// limits as u -> infinity, facon labels and degree tuples.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facon/algebra.hpp"
#include "facon/parser.hpp"

namespace facon {

/// Integer exponents of a monomial curve; at least one entry is positive.
class ExponentVector {
public:
    explicit ExponentVector(std::vector<std::int64_t> values) : values_(std::move(values)) {
        if (std::none_of(values_.begin(), values_.end(), [](std::int64_t v) { return v > 0; })) {
            throw UsageError("exponent vector " + to_string() + " has no positive entry");
        }
    }

    std::size_t size() const noexcept { return values_.size(); }
    std::int64_t operator[](std::size_t i) const { return values_[i]; }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }

    ExponentVector scaled(std::int64_t k) const {
        if (k < 1) throw UsageError("exponent vectors may only be scaled by k >= 1");
        std::vector<std::int64_t> out = values_;
        for (auto& v : out) v *= k;
        return ExponentVector(std::move(out));
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(values_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<std::int64_t> values_;
};

/// Label (i_1..i_p)[j_1..j_q] of a way of tending to infinity. Indices are
/// 1-based and sorted. `free` lists the coordinates whose limit moves with
/// the target point; they do not appear in the label.
struct Facon {
    std::vector<std::size_t> infinity;
    std::vector<std::size_t> zero;
    std::vector<std::size_t> free;

    std::string label() const {
        std::string out = "(";
        for (std::size_t k = 0; k < infinity.size(); ++k) out += (k ? "," : "") + std::to_string(infinity[k]);
        out += ")[";
        for (std::size_t k = 0; k < zero.size(); ++k) out += (k ? "," : "") + std::to_string(zero[k]);
        return out + "]";
    }

    /// kappa^{level*}; level 0 is the facon itself.
    std::string etoile_label(std::size_t level) const { return label() + "^{" + std::to_string(level) + "*}"; }

    friend bool operator==(const Facon& a, const Facon& b) { return a.infinity == b.infinity && a.zero == b.zero; }

    friend std::strong_ordering operator<=>(const Facon& a, const Facon& b) {
        if (auto c = a.infinity.size() <=> b.infinity.size(); c != 0) return c;
        if (auto c = a.infinity <=> b.infinity; c != 0) return c;
        if (auto c = a.zero.size() <=> b.zero.size(); c != 0) return c;
        return a.zero <=> b.zero;
    }
};

/// Rates of divergence (infinity) and of decay to zero, in index order.
struct DegreeTuple {
    std::vector<std::int64_t> infinity;
    std::vector<std::int64_t> zero;

    std::vector<std::int64_t> flat() const {
        std::vector<std::int64_t> out = infinity;
        out.insert(out.end(), zero.begin(), zero.end());
        return out;
    }

    DegreeTuple primitive() const {
        const auto prim = primitive_vector(flat());
        DegreeTuple out;
        out.infinity.assign(prim.begin(), prim.begin() + static_cast<std::ptrdiff_t>(infinity.size()));
        out.zero.assign(prim.begin() + static_cast<std::ptrdiff_t>(infinity.size()), prim.end());
        return out;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t k = 0; k < infinity.size(); ++k) out += (k ? "," : "") + std::to_string(infinity[k]);
        out += ";";
        for (std::size_t k = 0; k < zero.size(); ++k) out += (k ? "," : "") + std::to_string(zero[k]);
        return out + ")";
    }

    friend bool operator==(const DegreeTuple&, const DegreeTuple&) = default;
    friend auto operator<=>(const DegreeTuple&, const DegreeTuple&) = default;
};

enum class LimitKind { DivergesGeneric, Converges };

struct LimitOutcome {
    LimitKind kind;
    std::optional<MultiPoly> value;   // present iff Converges
};

/// Limit of F o gamma as polynomials in the curve coefficients c_i.
struct LimitMapping {
    std::vector<MultiPoly> components;
    std::vector<std::size_t> free_params;   // 0-based indices of c symbols occurring
    std::vector<MultiPoly> constraints;     // must be nonzero for the curve to carry its label

    std::size_t n() const noexcept { return components.size(); }

    bool satisfies_constraints(std::span<const BigRational> params) const {
        return std::all_of(constraints.begin(), constraints.end(),
                           [&](const MultiPoly& g) { return g.eval(params) != 0; });
    }

    std::vector<BigRational> eval(std::span<const BigRational> params) const {
        std::vector<BigRational> out;
        out.reserve(components.size());
        for (const auto& c : components) out.push_back(c.eval(params));
        return out;
    }

    /// Stable text key: components then constraints.
    std::string key() const {
        std::string out;
        for (const auto& c : components) out += c.to_string() + ";";
        out += "|";
        for (const auto& g : constraints) out += g.to_string() + ";";
        return out;
    }

    friend bool operator==(const LimitMapping&, const LimitMapping&) = default;
};

/// F_k(c_1 u^{e_1}, ..., c_n u^{e_n}) grouped by powers of u.
inline std::vector<ULaurentPoly> substitute(const PolynomialMapping& f, const ExponentVector& e) {
    if (e.size() != f.n) {
        throw UsageError("exponent vector has " + std::to_string(e.size()) + " entries, mapping has n = " +
                         std::to_string(f.n));
    }
    std::vector<ULaurentPoly> out;
    out.reserve(f.n);
    for (const auto& component : f.components) {
        ULaurentPoly lp;
        for (const auto& [m, coef] : component.terms()) {
            std::int64_t u_exp = 0;
            for (const auto& [var, power] : m.factors()) u_exp += static_cast<std::int64_t>(power) * e[var];
            lp.add(u_exp, MultiPoly::term(Space::Parameter, f.n, m, coef));
        }
        out.push_back(std::move(lp));
    }
    return out;
}

inline LimitOutcome classify_limit(const ULaurentPoly& lp, std::size_t nparams) {
    for (const auto& [k, coef] : lp.terms()) {
        if (k > 0) return {LimitKind::DivergesGeneric, std::nullopt};
    }
    const MultiPoly* constant = lp.coefficient(0);
    return {LimitKind::Converges, constant ? *constant : MultiPoly(Space::Parameter, nparams)};
}

/// nullopt when some component diverges for generic coefficients.
inline std::optional<LimitMapping> limit_mapping(const PolynomialMapping& f, const ExponentVector& e) {
    LimitMapping lm;
    for (const auto& lp : substitute(f, e)) {
        LimitOutcome outcome = classify_limit(lp, f.n);
        if (outcome.kind == LimitKind::DivergesGeneric) return std::nullopt;
        lm.components.push_back(std::move(*outcome.value));
    }
    std::vector<bool> used(f.n, false);
    for (const auto& c : lm.components) {
        for (auto v : c.variables()) used[v] = true;
    }
    for (std::size_t i = 0; i < f.n; ++i) {
        if (used[i]) lm.free_params.push_back(i);
        if (e[i] != 0) lm.constraints.push_back(MultiPoly::variable(Space::Parameter, f.n, i));
    }
    return lm;
}

/// Label from the sign pattern of a converging exponent vector.
inline Facon facon_of(const PolynomialMapping& f, const ExponentVector& e) {
    if (!limit_mapping(f, e)) {
        throw UsageError("curve with exponents " + e.to_string() + " diverges; it has no facon");
    }
    Facon out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) {
            out.infinity.push_back(i + 1);
        } else if (e[i] < 0) {
            out.zero.push_back(i + 1);
        } else {
            out.free.push_back(i + 1);
        }
    }
    return out;
}

inline DegreeTuple associated_tuple(const ExponentVector& e) {
    DegreeTuple t;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) t.infinity.push_back(e[i]);
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0) t.zero.push_back(-e[i]);
    }
    return t;
}

} // namespace facon
