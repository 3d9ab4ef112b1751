#pragma once

// Exact arithmetic kernel: rationals, sparse multivariate polynomials,
// Laurent polynomials in the curve parameter u, and exact linear algebra.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "facon/errors.hpp"

namespace facon {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw UsageError("rational with zero denominator");
    }
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

// =============================================================================
// Monomial
// =============================================================================

/// Power product stored sparsely as (variable, exponent) pairs, variables
/// ascending, exponents strictly positive. Ordered graded-lexicographically
/// with variable 0 the most significant.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;

    static Monomial variable(std::size_t var, std::uint32_t exponent = 1) {
        Monomial m;
        if (exponent > 0) {
            m.factors_.emplace_back(static_cast<std::uint32_t>(var), exponent);
        }
        return m;
    }

    static Monomial from_dense(std::span<const std::uint32_t> exponents) {
        Monomial m;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] > 0) {
                m.factors_.emplace_back(static_cast<std::uint32_t>(i), exponents[i]);
            }
        }
        return m;
    }

    std::uint32_t exponent(std::size_t var) const {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                                   [](const Factor& f, std::size_t v) { return f.first < v; });
        return (it != factors_.end() && it->first == var) ? it->second : 0;
    }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    bool is_one() const noexcept { return factors_.empty(); }
    std::span<const Factor> factors() const noexcept { return factors_; }

    Monomial operator*(const Monomial& other) const {
        Monomial out;
        out.factors_.reserve(factors_.size() + other.factors_.size());
        std::size_t i = 0, j = 0;
        while (i < factors_.size() || j < other.factors_.size()) {
            if (j == other.factors_.size() || (i < factors_.size() && factors_[i].first < other.factors_[j].first)) {
                out.factors_.push_back(factors_[i++]);
            } else if (i == factors_.size() || other.factors_[j].first < factors_[i].first) {
                out.factors_.push_back(other.factors_[j++]);
            } else {
                out.factors_.emplace_back(factors_[i].first, factors_[i].second + other.factors_[j].second);
                ++i;
                ++j;
            }
        }
        return out;
    }

    /// Monomial with the exponent of `var` lowered by one; requires exponent(var) > 0.
    Monomial lowered(std::size_t var) const {
        Monomial out = *this;
        for (auto it = out.factors_.begin(); it != out.factors_.end(); ++it) {
            if (it->first == var) {
                if (--it->second == 0) out.factors_.erase(it);
                return out;
            }
        }
        throw UsageError("monomial does not contain variable");
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        std::size_t i = 0;
        while (i < a.factors_.size() && i < b.factors_.size()) {
            const auto& [va, ea] = a.factors_[i];
            const auto& [vb, eb] = b.factors_[i];
            if (va != vb) {
                // a carries a positive power of a more significant variable
                return va < vb ? std::strong_ordering::greater : std::strong_ordering::less;
            }
            if (ea != eb) return ea <=> eb;
            ++i;
        }
        return a.factors_.size() <=> b.factors_.size();
    }

private:
    std::vector<Factor> factors_;
};

// =============================================================================
// MultiPoly
// =============================================================================

/// Which coordinate system a polynomial lives in: source variables x_i,
/// curve coefficient symbols c_i, or target coordinates a_i (alpha_i).
enum class Space { Ambient, Parameter, Target };

inline char space_prefix(Space space) {
    switch (space) {
    case Space::Ambient: return 'x';
    case Space::Parameter: return 'c';
    case Space::Target: return 'a';
    }
    return '?';
}

inline std::string variable_name(Space space, std::size_t var) {
    return std::string(1, space_prefix(space)) + std::to_string(var + 1);
}

/// Sparse polynomial with exact rational coefficients. Terms are kept in
/// descending graded-lex order; zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, BigRational, std::greater<>>;

    MultiPoly(Space space, std::size_t nvars) : space_(space), nvars_(nvars) {}

    static MultiPoly constant(Space space, std::size_t nvars, const BigRational& value) {
        MultiPoly p(space, nvars);
        p.add_term(Monomial{}, value);
        return p;
    }

    static MultiPoly variable(Space space, std::size_t nvars, std::size_t var) {
        if (var >= nvars) {
            throw UsageError("variable index " + std::to_string(var) + " out of range");
        }
        MultiPoly p(space, nvars);
        p.add_term(Monomial::variable(var), BigRational(1));
        return p;
    }

    static MultiPoly term(Space space, std::size_t nvars, const Monomial& m, const BigRational& coef) {
        MultiPoly p(space, nvars);
        p.add_term(m, coef);
        return p;
    }

    Space space() const noexcept { return space_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    BigRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
        return terms_.begin()->first;
    }

    const BigRational& leading_coefficient() const {
        if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
        return terms_.begin()->second;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    /// Sorted indices of variables occurring with positive exponent.
    std::vector<std::size_t> variables() const {
        std::vector<bool> seen(nvars_, false);
        for (const auto& [m, c] : terms_) {
            for (const auto& f : m.factors()) seen[f.first] = true;
        }
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (seen[i]) out.push_back(i);
        }
        return out;
    }

    void add_term(const Monomial& m, const BigRational& coef) {
        if (coef == 0) return;
        for (const auto& f : m.factors()) {
            if (f.first >= nvars_) {
                throw UsageError("variable index " + std::to_string(f.first) + " out of range");
            }
        }
        auto [it, inserted] = terms_.try_emplace(m, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& other) {
        require_compatible(other);
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& other) {
        require_compatible(other);
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly out(a.space_, a.nvars_);
        for (const auto& [m, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
        return out;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.require_compatible(b);
        MultiPoly out(a.space_, a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        }
        return out;
    }

    MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }

    MultiPoly scaled(const BigRational& factor) const {
        MultiPoly out(space_, nvars_);
        if (factor == 0) return out;
        for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * factor);
        return out;
    }

    MultiPoly pow(std::uint32_t exponent) const {
        MultiPoly result = constant(space_, nvars_, BigRational(1));
        MultiPoly base = *this;
        while (exponent > 0) {
            if (exponent & 1u) result *= base;
            exponent >>= 1;
            if (exponent > 0) base *= base;
        }
        return result;
    }

    /// Exact value at `point`; the point must supply one value per variable.
    BigRational eval(std::span<const BigRational> point) const {
        if (point.size() != nvars_) {
            throw UsageError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                             std::to_string(nvars_));
        }
        BigRational total(0);
        BigRational value;
        for (const auto& [m, c] : terms_) {
            value = c;
            for (const auto& [var, e] : m.factors()) {
                BigRational power;
                mpz_pow_ui(power.get_num_mpz_t(), point[var].get_num_mpz_t(), e);
                mpz_pow_ui(power.get_den_mpz_t(), point[var].get_den_mpz_t(), e);
                value *= power;
            }
            total += value;
        }
        return total;
    }

    /// Floating-point value; used only by the numeric oracles.
    double eval_double(std::span<const double> point) const {
        if (point.size() != nvars_) {
            throw UsageError("evaluation point has wrong number of coordinates");
        }
        double total = 0.0;
        for (const auto& [m, c] : terms_) {
            double value = c.get_d();
            for (const auto& [var, e] : m.factors()) value *= std::pow(point[var], static_cast<double>(e));
            total += value;
        }
        return total;
    }

    MultiPoly partial(std::size_t var) const {
        MultiPoly out(space_, nvars_);
        if (var >= nvars_) return out;
        for (const auto& [m, c] : terms_) {
            const std::uint32_t e = m.exponent(var);
            if (e > 0) out.add_term(m.lowered(var), c * e);
        }
        return out;
    }

    /// Canonical text: terms in descending graded-lex order, e.g. "x1^2*x2 - 3*x3 + 1".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = c < 0;
            BigRational mag = negative ? BigRational(-c) : c;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string body;
            for (const auto& [var, e] : m.factors()) {
                if (!body.empty()) body += "*";
                body += variable_name(space_, var);
                if (e > 1) body += "^" + std::to_string(e);
            }
            if (body.empty()) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += body;
            } else {
                out += mag.get_str() + "*" + body;
            }
        }
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.space_ == b.space_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void require_compatible(const MultiPoly& other) const {
        if (space_ != other.space_ || nvars_ != other.nvars_) {
            throw UsageError("polynomials live in different variable spaces");
        }
    }

    Space space_;
    std::size_t nvars_;
    TermMap terms_;
};

enum class ArithKind { Add, Mul };

inline MultiPoly poly_arith(ArithKind kind, const MultiPoly& p, const MultiPoly& q) {
    return kind == ArithKind::Add ? p + q : p * q;
}

inline BigRational poly_eval(const MultiPoly& p, std::span<const BigRational> point) { return p.eval(point); }

inline MultiPoly poly_partial(const MultiPoly& p, std::size_t var) { return p.partial(var); }

/// Rescale to integer coefficients with gcd 1 and positive leading coefficient.
inline MultiPoly primitive_part(const MultiPoly& p) {
    if (p.is_zero()) return p;
    BigInt den_lcm = 1;
    BigInt num_gcd = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    BigRational factor = make_rational(den_lcm, num_gcd);
    if (p.leading_coefficient() < 0) factor = -factor;
    return p.scaled(factor);
}

// =============================================================================
// Laurent polynomials in u with parameter-space coefficients
// =============================================================================

/// sum_k P_k(c) * u^k with P_k never identically zero.
class ULaurentPoly {
public:
    using TermMap = std::map<std::int64_t, MultiPoly>;

    void add(std::int64_t u_exponent, const MultiPoly& coef) {
        if (coef.is_zero()) return;
        auto it = terms_.find(u_exponent);
        if (it == terms_.end()) {
            terms_.emplace(u_exponent, coef);
            return;
        }
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    const MultiPoly* coefficient(std::int64_t u_exponent) const {
        auto it = terms_.find(u_exponent);
        return it == terms_.end() ? nullptr : &it->second;
    }

    friend bool operator==(const ULaurentPoly&, const ULaurentPoly&) = default;

private:
    TermMap terms_;
};

// =============================================================================
// Exact linear algebra
// =============================================================================

using RationalMatrix = std::vector<std::vector<BigRational>>;
using RationalVector = std::vector<BigRational>;

/// Rank over Q by fraction-free (Bareiss) elimination on an integer rescaling.
inline std::size_t rank_exact(const RationalMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols) throw UsageError("matrix rows have different lengths");
        BigInt den = 1;
        for (const auto& q : m[i]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            a[i][j] = m[i][j].get_num() * (den / m[i][j].get_den());
        }
    }
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                BigInt t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

struct RowEchelon {
    RationalMatrix rows;               // nonzero rows only, pivots normalized to 1
    std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form over Q.
inline RowEchelon reduced_row_echelon(RationalMatrix m, std::size_t cols) {
    RowEchelon out;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        const BigRational inv = 1 / m[rank][col];
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            const BigRational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        out.pivots.push_back(col);
        ++rank;
    }
    m.resize(rank);
    out.rows = std::move(m);
    return out;
}

/// Basis of {v : m v = 0}, one vector per non-pivot column.
inline RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols) {
    const RowEchelon ech = reduced_row_echelon(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    RationalMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols, BigRational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < ech.rows.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Incrementally maintained echelon basis used for span-membership tests.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t cols) : cols_(cols) {}

    /// Adds `v`; returns true iff it was independent of the vectors added so far.
    bool insert(RationalVector v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p] == 0) continue;
            const BigRational f = v[p];
            for (std::size_t j = p; j < cols_; ++j) v[j] -= f * rows_[r][j];
        }
        std::size_t p = 0;
        while (p < cols_ && v[p] == 0) ++p;
        if (p == cols_) return false;
        const BigRational inv = 1 / v[p];
        for (std::size_t j = p; j < cols_; ++j) v[j] *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    bool contains(RationalVector v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p] == 0) continue;
            const BigRational f = v[p];
            for (std::size_t j = p; j < cols_; ++j) v[j] -= f * rows_[r][j];
        }
        return std::all_of(v.begin(), v.end(), [](const BigRational& q) { return q == 0; });
    }

    std::size_t rank() const noexcept { return rows_.size(); }

private:
    std::size_t cols_;
    RationalMatrix rows_;
    std::vector<std::size_t> pivots_;
};

/// Divide by the gcd of absolute values; signs are kept.
inline std::vector<std::int64_t> primitive_vector(std::span<const std::int64_t> v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw UsageError("primitive_vector of the zero vector");
    std::vector<std::int64_t> out(v.begin(), v.end());
    for (auto& x : out) x /= g;
    return out;
}

/// Symbolic determinant by Laplace expansion memoized over column subsets.
inline MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw UsageError("determinant of an empty matrix");
    if (n > 20) throw UsageError("determinant limited to 20x20 matrices");
    for (const auto& row : m) {
        if (row.size() != n) throw UsageError("determinant of a non-square matrix");
    }
    const Space space = m[0][0].space();
    const std::size_t nvars = m[0][0].nvars();
    // minors[mask] = det of rows 0..popcount(mask)-1 restricted to the columns in mask
    std::unordered_map<std::uint32_t, MultiPoly> minors;
    minors.emplace(0u, MultiPoly::constant(space, nvars, BigRational(1)));
    std::vector<std::uint32_t> layer{0u};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
            MultiPoly det(space, nvars);
            std::size_t position = 0;
            for (std::size_t col = 0; col < n; ++col) {
                if (!(mask & (1u << col))) continue;
                const MultiPoly& entry = m[k - 1][col];
                if (!entry.is_zero()) {
                    MultiPoly term = entry * minors.at(mask & ~(1u << col));
                    if ((k - 1 + position) % 2 == 0) {
                        det += term;
                    } else {
                        det -= term;
                    }
                }
                ++position;
            }
            minors.emplace(mask, std::move(det));
            next.push_back(mask);
        }
        for (auto old : layer) {
            if (k > 1) minors.erase(old);
        }
        layer = std::move(next);
    }
    return minors.at((1u << n) - 1);
}

} // namespace facon
