#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "facon/algebra.hpp"
#include "facon/curves.hpp"
#include "facon/parser.hpp"

namespace facon {

/// All vectors in [-bound, bound]^n with at least one positive entry, in
/// lexicographic order.
inline std::vector<ExponentVector> enumerate_exponents(std::size_t n, std::int64_t bound) {
    if (n == 0 || bound < 1) throw UsageError("enumerate_exponents requires n >= 1 and bound >= 1");
    std::vector<ExponentVector> out;
    std::vector<std::int64_t> v(n, -bound);
    while (true) {
        if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x > 0; })) out.emplace_back(v);
        std::size_t k = n;
        while (k > 0 && v[k - 1] == bound) {
            v[k - 1] = -bound;
            --k;
        }
        if (k == 0) break;
        ++v[k - 1];
    }
    return out;
}

/// One equivalence class of curves sharing a facon and a primitive degree tuple.
struct ClassEntry {
    DegreeTuple tuple;               // tuple of the representative
    DegreeTuple primitive;           // proportionality class
    ExponentVector representative;   // lexicographically smallest member in the box
    LimitMapping limit;
};

struct FaconCatalog {
    std::size_t n = 0;
    std::int64_t bound = 0;
    std::map<Facon, std::vector<ClassEntry>> entries;

    bool empty() const noexcept { return entries.empty(); }

    std::vector<Facon> facons() const {
        std::vector<Facon> out;
        for (const auto& [f, classes] : entries) out.push_back(f);
        return out;
    }

    std::set<std::string> labels() const {
        std::set<std::string> out;
        for (const auto& [f, classes] : entries) out.insert(f.label());
        return out;
    }

    std::size_t class_count() const {
        std::size_t total = 0;
        for (const auto& [f, classes] : entries) total += classes.size();
        return total;
    }
};

/// Builds the catalog of facons realized by monomial curves with exponents in the box.
inline FaconCatalog collect_facons(const PolynomialMapping& f, std::int64_t bound) {
    FaconCatalog catalog;
    catalog.n = f.n;
    catalog.bound = bound;
    for (const auto& e : enumerate_exponents(f.n, bound)) {
        auto lm = limit_mapping(f, e);
        if (!lm) continue;
        Facon facon = facon_of(f, e);
        DegreeTuple tuple = associated_tuple(e);
        DegreeTuple primitive = tuple.primitive();
        auto& classes = catalog.entries[facon];
        const bool known = std::any_of(classes.begin(), classes.end(),
                                       [&](const ClassEntry& c) { return c.primitive == primitive; });
        // enumeration is lexicographic, so the first member seen is the smallest
        if (!known) classes.push_back({tuple, primitive, e, std::move(*lm)});
    }
    return catalog;
}

/// sum_{k=1}^{n} C(n,k) + sum_{k=1}^{n-1} C(n,k) + sum_{k=2}^{n-1} n!/(n-k)!
inline BigInt max_facons_count(std::size_t n) {
    if (n == 0) throw UsageError("max_facons_count requires n >= 1");
    auto binomial = [](std::size_t nn, std::size_t k) {
        BigInt r;
        mpz_bin_uiui(r.get_mpz_t(), nn, k);
        return r;
    };
    auto arrangements = [](std::size_t nn, std::size_t k) {
        BigInt r = 1;
        for (std::size_t i = 0; i < k; ++i) r *= static_cast<unsigned long>(nn - i);
        return r;
    };
    BigInt total = 0;
    for (std::size_t k = 1; k <= n; ++k) total += binomial(n, k);
    for (std::size_t k = 1; k + 1 <= n; ++k) total += binomial(n, k);
    for (std::size_t k = 2; k + 1 <= n; ++k) total += arrangements(n, k);
    return total;
}

inline MultiPoly jacobian_determinant(const PolynomialMapping& f) {
    std::vector<std::vector<MultiPoly>> jac;
    for (const auto& component : f.components) {
        std::vector<MultiPoly> row;
        for (std::size_t j = 0; j < f.n; ++j) row.push_back(component.partial(j));
        jac.push_back(std::move(row));
    }
    return determinant(jac);
}

/// Dominant iff the Jacobian determinant is not the zero polynomial.
inline bool is_dominant(const PolynomialMapping& f) { return !jacobian_determinant(f).is_zero(); }

} // namespace facon
