#pragma once

// From facon catalog to geometry: image dimensions by exact Jacobian rank,
// implicit equations by interpolation on exact sample points, closure
// containment, per-facon filtrations, the global facons-etoile
// stratification and the frontier check.

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "facon/algebra.hpp"
#include "facon/curves.hpp"
#include "facon/facons.hpp"
#include "facon/random.hpp"

namespace facon {

inline constexpr std::size_t kGenericityRetries = 100;

struct AnalysisOptions {
    std::int64_t max_exponent = 4;   // E: exponent box [-E, E]^n
    std::uint32_t degree = 4;        // D: implicit equations of total degree <= D
    std::uint64_t seed = 0;
    std::size_t trials = 8;          // Jacobian rank evaluations per image
    std::size_t samples = 200;       // exact image points per parametrization
};

using Point = std::vector<BigRational>;

inline std::string point_to_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + p[i].get_str();
    return out + ")";
}

// -----------------------------------------------------------------------------
// Sampling and dimension
// -----------------------------------------------------------------------------

/// Random parameter point with every genericity constraint nonzero.
inline Point sample_parameters(const LimitMapping& lm, SeededRng& rng) {
    const std::size_t n = lm.n();
    for (std::size_t attempt = 0; attempt < kGenericityRetries; ++attempt) {
        Point params(n);
        for (auto& q : params) q = rng.rational();
        if (lm.satisfies_constraints(params)) return params;
    }
    throw GenericityError("no parameter point satisfies the genericity constraints after " +
                          std::to_string(kGenericityRetries) + " attempts");
}

inline std::vector<Point> sample_image(const LimitMapping& lm, std::size_t count, SeededRng& rng) {
    std::vector<Point> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(lm.eval(sample_parameters(lm, rng)));
    return out;
}

/// Partial derivatives of each component with respect to each free parameter.
inline std::vector<std::vector<MultiPoly>> parameter_jacobian(const LimitMapping& lm) {
    std::vector<std::vector<MultiPoly>> jac;
    for (const auto& c : lm.components) {
        std::vector<MultiPoly> row;
        for (auto v : lm.free_params) row.push_back(c.partial(v));
        jac.push_back(std::move(row));
    }
    return jac;
}

inline std::size_t jacobian_rank_at(const std::vector<std::vector<MultiPoly>>& jac, const Point& params,
                                    const std::vector<bool>* keep_columns = nullptr) {
    RationalMatrix m;
    for (const auto& row : jac) {
        RationalVector values;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (keep_columns && !(*keep_columns)[j]) continue;
            values.push_back(row[j].eval(params));
        }
        m.push_back(std::move(values));
    }
    if (m.empty() || m.front().empty()) return 0;
    return rank_exact(m);
}

struct RankProfile {
    std::size_t dimension = 0;   // maximum rank over the trials
    bool constant = true;        // every trial produced the same rank
};

inline RankProfile rank_profile(const LimitMapping& lm, std::size_t trials, SeededRng& rng) {
    if (trials == 0) throw UsageError("image_dimension requires trials >= 1");
    const auto jac = parameter_jacobian(lm);
    RankProfile profile;
    std::optional<std::size_t> first;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t r = jacobian_rank_at(jac, sample_parameters(lm, rng));
        profile.dimension = std::max(profile.dimension, r);
        if (first && *first != r) profile.constant = false;
        first = first.value_or(r);
    }
    return profile;
}

/// Dimension of the image of a limit mapping: maximal Jacobian rank at random generic points.
inline std::size_t image_dimension(const LimitMapping& lm, std::size_t trials, std::uint64_t seed) {
    SeededRng rng(seed, "dimension:" + lm.key());
    return rank_profile(lm, trials, rng).dimension;
}

// -----------------------------------------------------------------------------
// Implicitization
// -----------------------------------------------------------------------------

/// Monomials of total degree <= degree in n target variables, descending graded-lex.
inline std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t degree) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> exps(n, 0);
    auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
        if (var == n) {
            out.push_back(Monomial::from_dense(exps));
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            exps[var] = e;
            self(self, var + 1, left - e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

namespace detail {

inline RationalVector monomial_values(const std::vector<Monomial>& monos, const Point& p, std::uint32_t degree) {
    std::vector<std::vector<BigRational>> powers(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        powers[i].resize(degree + 1);
        powers[i][0] = 1;
        for (std::uint32_t k = 1; k <= degree; ++k) powers[i][k] = powers[i][k - 1] * p[i];
    }
    RationalVector row;
    row.reserve(monos.size());
    for (const auto& m : monos) {
        BigRational v = 1;
        for (const auto& [var, e] : m.factors()) v *= powers[var][e];
        row.push_back(std::move(v));
    }
    return row;
}

inline bool annihilates(const RationalMatrix& basis, const RationalVector& row) {
    for (const auto& v : basis) {
        BigRational dot = 0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (v[j] != 0) dot += v[j] * row[j];
        }
        if (dot != 0) return false;
    }
    return true;
}

inline MultiPoly vector_to_poly(const RationalVector& v, const std::vector<Monomial>& monos, std::size_t n) {
    MultiPoly p(Space::Target, n);
    for (std::size_t j = 0; j < monos.size(); ++j) p.add_term(monos[j], v[j]);
    return p;
}

inline RationalVector poly_to_vector(const MultiPoly& p, const std::map<Monomial, std::size_t>& column) {
    RationalVector v(column.size(), BigRational(0));
    for (const auto& [m, c] : p.terms()) v[column.at(m)] = c;
    return v;
}

} // namespace detail

/// Canonical basis of the polynomials of degree <= `degree` vanishing on all
/// `points`: reduced echelon form in descending graded-lex order, each
/// element scaled to primitive integer coefficients with positive leading term.
inline std::vector<MultiPoly> vanishing_space(const std::vector<Point>& points, std::size_t n,
                                              std::uint32_t degree) {
    if (degree < 1) throw UsageError("implicitization degree must be >= 1");
    const auto monos = monomials_up_to(n, degree);
    const std::size_t cols = monos.size();
    const std::size_t initial = std::min(points.size(), cols + 8);
    RationalMatrix rows;
    for (std::size_t i = 0; i < initial; ++i) rows.push_back(detail::monomial_values(monos, points[i], degree));
    RationalMatrix basis = nullspace(rows, cols);
    // The remaining points only shrink the space; add the ones that do.
    for (std::size_t i = initial; i < points.size() && !basis.empty(); ++i) {
        RationalVector row = detail::monomial_values(monos, points[i], degree);
        if (detail::annihilates(basis, row)) continue;
        rows.push_back(std::move(row));
        basis = nullspace(rows, cols);
    }
    const RowEchelon canonical = reduced_row_echelon(basis, cols);
    std::vector<MultiPoly> out;
    for (const auto& v : canonical.rows) out.push_back(primitive_part(detail::vector_to_poly(v, monos, n)));
    return out;
}

/// Relations of degree <= D satisfied by `samples` exact points of the image.
inline std::vector<MultiPoly> implicitize(const LimitMapping& lm, std::uint32_t degree, std::size_t samples,
                                          std::uint64_t seed) {
    SeededRng rng(seed, "implicitize:" + lm.key());
    return vanishing_space(sample_image(lm, samples, rng), lm.n(), degree);
}

/// Minimal subset of a vanishing-space basis whose monomial multiples (up to
/// the degree bound) span the whole space.
inline std::vector<MultiPoly> relation_generators(const std::vector<MultiPoly>& basis, std::size_t n,
                                                  std::uint32_t degree) {
    const auto monos = monomials_up_to(n, degree);
    std::map<Monomial, std::size_t> column;
    for (std::size_t j = 0; j < monos.size(); ++j) column.emplace(monos[j], j);
    std::vector<std::vector<Monomial>> by_degree(degree + 1);
    for (const auto& m : monos) by_degree[m.degree()].push_back(m);

    SpanBuilder span(monos.size());
    std::vector<MultiPoly> generators;
    for (std::uint32_t d = 0; d <= degree; ++d) {
        for (const auto& g : generators) {
            const auto gd = g.total_degree();
            if (gd >= d) continue;
            for (const auto& m : by_degree[d - gd]) {
                span.insert(detail::poly_to_vector(g * MultiPoly::term(Space::Target, n, m, BigRational(1)), column));
            }
        }
        for (const auto& b : basis) {
            if (b.total_degree() != d) continue;
            if (span.insert(detail::poly_to_vector(b, column))) generators.push_back(b);
        }
    }
    return generators;
}

// -----------------------------------------------------------------------------
// Images of tuple classes
// -----------------------------------------------------------------------------

struct ImageAnalysis {
    std::size_t dimension = 0;
    bool rank_constant = true;
    std::vector<MultiPoly> equations;   // generators of the relations up to degree D
    std::vector<Point> samples;
};

inline ImageAnalysis analyze_image(const LimitMapping& lm, const AnalysisOptions& options) {
    ImageAnalysis out;
    SeededRng dim_rng(options.seed, "dimension:" + lm.key());
    const RankProfile profile = rank_profile(lm, options.trials, dim_rng);
    out.dimension = profile.dimension;
    out.rank_constant = profile.constant;
    SeededRng sample_rng(options.seed, "implicitize:" + lm.key());
    out.samples = sample_image(lm, options.samples, sample_rng);
    out.equations = relation_generators(vanishing_space(out.samples, lm.n(), options.degree), lm.n(), options.degree);
    return out;
}

struct EtoileLabel {
    Facon facon;
    std::size_t level = 0;   // kappa^{level*}

    std::string to_string() const { return facon.etoile_label(level); }
    friend bool operator==(const EtoileLabel&, const EtoileLabel&) = default;
};

struct Stratum {
    std::string id;
    std::vector<EtoileLabel> labels;                // one per facon realizing the stratum
    std::size_t etoile_level = 0;                   // peeling round of the global partition
    std::vector<LimitMapping> parametrizations;
    std::vector<ExponentVector> representatives;    // one curve per parametrization
    std::size_t dimension = 0;
    bool rank_constant = true;
    std::vector<MultiPoly> implicit_eqs;            // in target coordinates a1..an
    std::vector<Point> sample_points;

    std::vector<Facon> facons() const {
        std::vector<Facon> out;
        for (const auto& l : labels) out.push_back(l.facon);
        return out;
    }

    bool has_facon(const Facon& f) const {
        return std::any_of(labels.begin(), labels.end(), [&](const EtoileLabel& l) { return l.facon == f; });
    }
};

/// B lies in the closure of A: every sample of B satisfies every equation of
/// A, and B is not of larger dimension. Certified only up to the degree bound.
inline bool closure_contains(const Stratum& a, const Stratum& b) {
    if (b.dimension > a.dimension) return false;
    for (const auto& p : b.sample_points) {
        for (const auto& g : a.implicit_eqs) {
            if (g.eval(p) != 0) return false;
        }
    }
    return true;
}

inline bool satisfies_all(const std::vector<MultiPoly>& eqs, const Point& p) {
    return std::all_of(eqs.begin(), eqs.end(), [&](const MultiPoly& g) { return g.eval(p) == 0; });
}

namespace detail {

struct ClassRef {
    Facon facon;
    std::size_t index;   // position within the facon's class list
};

/// Distinct image shared by one or more tuple classes.
struct Piece {
    std::vector<ClassRef> members;
    const ImageAnalysis* analysis = nullptr;
};

/// Runs `fn(i)` for i in [0, count) on a small worker pool.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

inline Stratum piece_stratum(const Piece& piece) {
    Stratum s;
    s.dimension = piece.analysis->dimension;
    s.rank_constant = piece.analysis->rank_constant;
    s.implicit_eqs = piece.analysis->equations;
    s.sample_points = piece.analysis->samples;
    return s;
}

} // namespace detail

/// Image analyses for every class of a catalog, grouped into distinct images.
class CatalogImages {
public:
    CatalogImages(const FaconCatalog& catalog, const AnalysisOptions& options) : catalog_(&catalog) {
        std::vector<const LimitMapping*> unique;
        std::map<std::string, std::size_t> slot;
        for (const auto& [facon, classes] : catalog.entries) {
            for (const auto& c : classes) {
                if (slot.emplace(c.limit.key(), unique.size()).second) unique.push_back(&c.limit);
            }
        }
        analyses_.resize(unique.size());
        detail::parallel_for(unique.size(), [&](std::size_t i) { analyses_[i] = analyze_image(*unique[i], options); });

        for (const auto& [facon, classes] : catalog.entries) {
            for (std::size_t k = 0; k < classes.size(); ++k) {
                const ImageAnalysis* a = &analyses_[slot.at(classes[k].limit.key())];
                const std::size_t piece = find_or_add_piece(a);
                pieces_[piece].members.push_back({facon, k});
            }
        }
    }

    const FaconCatalog& catalog() const noexcept { return *catalog_; }
    const std::vector<detail::Piece>& pieces() const noexcept { return pieces_; }

    const ClassEntry& entry(const detail::ClassRef& ref) const { return catalog_->entries.at(ref.facon)[ref.index]; }

    std::vector<std::size_t> pieces_of(const Facon& f) const {
        std::vector<std::size_t> out;
        for (std::size_t p = 0; p < pieces_.size(); ++p) {
            for (const auto& m : pieces_[p].members) {
                if (m.facon == f) {
                    out.push_back(p);
                    break;
                }
            }
        }
        return out;
    }

    /// Levels of the partition by one facon: distinct image dimensions in
    /// descending order; level 0 holds the generic (maximal dimension) images.
    std::vector<std::vector<std::size_t>> levels_of(const Facon& f) const {
        std::vector<std::size_t> mine = pieces_of(f);
        std::vector<std::size_t> dims;
        for (auto p : mine) dims.push_back(pieces_[p].analysis->dimension);
        std::sort(dims.begin(), dims.end(), std::greater<>());
        dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
        std::vector<std::vector<std::size_t>> levels(dims.size());
        for (auto p : mine) {
            const auto d = pieces_[p].analysis->dimension;
            levels[static_cast<std::size_t>(std::find(dims.begin(), dims.end(), d) - dims.begin())].push_back(p);
        }
        return levels;
    }

    Stratum stratum_of(std::size_t piece) const {
        const auto& pc = pieces_[piece];
        Stratum s = detail::piece_stratum(pc);
        std::set<std::string> seen;
        for (const auto& m : pc.members) {
            const ClassEntry& e = entry(m);
            if (seen.insert(e.limit.key()).second) {
                s.parametrizations.push_back(e.limit);
                s.representatives.push_back(e.representative);
            }
            if (!s.has_facon(m.facon)) {
                const auto levels = levels_of(m.facon);
                std::size_t level = 0;
                for (std::size_t i = 0; i < levels.size(); ++i) {
                    if (std::find(levels[i].begin(), levels[i].end(), piece) != levels[i].end()) level = i;
                }
                s.labels.push_back({m.facon, level});
            }
        }
        std::sort(s.labels.begin(), s.labels.end(),
                  [](const EtoileLabel& a, const EtoileLabel& b) { return a.facon < b.facon; });
        return s;
    }

private:
    std::size_t find_or_add_piece(const ImageAnalysis* a) {
        for (std::size_t p = 0; p < pieces_.size(); ++p) {
            const ImageAnalysis* b = pieces_[p].analysis;
            if (a == b) return p;
            if (a->dimension != b->dimension) continue;
            const bool mutual = std::all_of(a->samples.begin(), a->samples.end(),
                                            [&](const Point& x) { return satisfies_all(b->equations, x); }) &&
                                std::all_of(b->samples.begin(), b->samples.end(),
                                            [&](const Point& x) { return satisfies_all(a->equations, x); });
            if (mutual) return p;
        }
        pieces_.push_back({{}, a});
        return pieces_.size() - 1;
    }

    const FaconCatalog* catalog_;
    std::vector<ImageAnalysis> analyses_;
    std::vector<detail::Piece> pieces_;
};

// -----------------------------------------------------------------------------
// Filtrations and the stratification
// -----------------------------------------------------------------------------

struct FaconFiltrationLevel {
    std::size_t dimension = 0;
    std::vector<Stratum> strata;
};

/// Partition of the part of S_F reached by facon `kappa`: images of its tuple
/// classes, grouped by decreasing dimension.
inline std::vector<FaconFiltrationLevel> facon_filtration(const CatalogImages& images, const Facon& kappa) {
    if (!images.catalog().entries.contains(kappa)) {
        throw UsageError("facon " + kappa.label() + " is not in the catalog");
    }
    std::vector<FaconFiltrationLevel> out;
    for (const auto& level : images.levels_of(kappa)) {
        FaconFiltrationLevel l;
        l.dimension = images.pieces()[level.front()].analysis->dimension;
        for (auto p : level) l.strata.push_back(images.stratum_of(p));
        out.push_back(std::move(l));
    }
    return out;
}

inline std::vector<FaconFiltrationLevel> facon_filtration(const PolynomialMapping& f, const Facon& kappa,
                                                          const FaconCatalog& catalog,
                                                          const AnalysisOptions& options = {}) {
    if (catalog.n != f.n) throw UsageError("catalog was built for a different mapping");
    return facon_filtration(CatalogImages(catalog, options), kappa);
}

struct FiltrationLevel {
    std::size_t dimension = 0;
    std::vector<std::size_t> strata;   // indices of the strata of this dimension
};

struct Stratification {
    std::size_t n = 0;
    std::vector<Stratum> strata;
    std::vector<std::pair<std::size_t, std::size_t>> containment;   // (A, B): B in closure(A), B != A
    std::vector<FiltrationLevel> filtration;                         // dimensions strictly decreasing
    AnalysisOptions options;

    std::vector<std::size_t> contained_in(std::size_t a) const {
        std::vector<std::size_t> out;
        for (const auto& [x, y] : containment) {
            if (x == a) out.push_back(y);
        }
        return out;
    }

    std::optional<std::size_t> top_dimension() const {
        if (strata.empty()) return std::nullopt;
        return filtration.front().dimension;
    }
};

/// Containment DAG over strata: closure containment with strictly smaller
/// dimension, transitively closed.
inline std::vector<std::pair<std::size_t, std::size_t>> containment_edges(const std::vector<Stratum>& strata) {
    const std::size_t k = strata.size();
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            if (a != b && strata[b].dimension < strata[a].dimension && closure_contains(strata[a], strata[b])) {
                reach[a][b] = true;
            }
        }
    }
    for (std::size_t m = 0; m < k; ++m) {
        for (std::size_t a = 0; a < k; ++a) {
            if (!reach[a][m]) continue;
            for (std::size_t b = 0; b < k; ++b) {
                if (reach[m][b]) reach[a][b] = true;
            }
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            if (reach[a][b]) edges.emplace_back(a, b);
        }
    }
    return edges;
}

inline std::vector<FiltrationLevel> dimension_filtration(const std::vector<Stratum>& strata) {
    std::vector<FiltrationLevel> out;
    for (std::size_t i = 0; i < strata.size(); ++i) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const FiltrationLevel& l) { return l.dimension == strata[i].dimension; });
        if (it == out.end()) {
            out.push_back({strata[i].dimension, {i}});
        } else {
            it->strata.push_back(i);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FiltrationLevel& a, const FiltrationLevel& b) { return a.dimension > b.dimension; });
    return out;
}

/// Global partition by facons etoile. Round 0 takes, for every facon, its
/// images of maximal dimension; each later round repeats the selection on the
/// images not yet taken. Images reached by several classes or facons are one
/// stratum carrying every label.
inline Stratification etoile_stratification(const CatalogImages& images, const AnalysisOptions& options) {
    const auto& pieces = images.pieces();
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> round_of(pieces.size(), unassigned);
    const auto facons = images.catalog().facons();
    for (std::size_t round = 0; std::count(round_of.begin(), round_of.end(), unassigned) > 0; ++round) {
        std::vector<std::size_t> taken;
        for (const auto& f : facons) {
            std::vector<std::size_t> open;
            for (auto p : images.pieces_of(f)) {
                if (round_of[p] == unassigned) open.push_back(p);
            }
            if (open.empty()) continue;
            std::size_t best = 0;
            for (auto p : open) best = std::max(best, pieces[p].analysis->dimension);
            for (auto p : open) {
                if (pieces[p].analysis->dimension == best) taken.push_back(p);
            }
        }
        for (auto p : taken) round_of[p] = round;
    }

    std::vector<std::size_t> order(pieces.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto da = pieces[a].analysis->dimension, db = pieces[b].analysis->dimension;
        if (da != db) return da > db;
        return round_of[a] < round_of[b];
    });

    Stratification out;
    out.n = images.catalog().n;
    out.options = options;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Stratum s = images.stratum_of(order[i]);
        s.id = "S" + std::to_string(i + 1);
        s.etoile_level = round_of[order[i]];
        out.strata.push_back(std::move(s));
    }
    out.containment = containment_edges(out.strata);
    out.filtration = dimension_filtration(out.strata);
    return out;
}

inline Stratification etoile_stratification(const PolynomialMapping& f, const FaconCatalog& catalog,
                                            const AnalysisOptions& options = {}) {
    if (catalog.n != f.n) throw UsageError("catalog was built for a different mapping");
    return etoile_stratification(CatalogImages(catalog, options), options);
}

// -----------------------------------------------------------------------------
// Frontier property
// -----------------------------------------------------------------------------

struct FrontierReport {
    bool holds = true;
    std::vector<std::string> violations;
};

/// Checks that closure containment only runs downward in dimension, and that
/// boundary points of each stratum (limits of its parametrizations as
/// constrained coefficients tend to 0) lie on a lower-dimensional stratum.
/// Degenerations that keep the full dimension of the stratum are not boundary
/// and are skipped.
inline FrontierReport check_frontier(const Stratification& s) {
    FrontierReport report;
    const auto& strata = s.strata;
    for (std::size_t a = 0; a < strata.size(); ++a) {
        for (std::size_t b = 0; b < strata.size(); ++b) {
            if (a == b || !closure_contains(strata[a], strata[b])) continue;
            if (strata[b].dimension >= strata[a].dimension) {
                report.violations.push_back(strata[b].id + " lies in the closure of " + strata[a].id +
                                            " without having lower dimension");
            }
        }
    }

    constexpr std::size_t kPointsPerDegeneration = 2;
    for (const auto& stratum : strata) {
        for (std::size_t k = 0; k < stratum.parametrizations.size(); ++k) {
            const LimitMapping& lm = stratum.parametrizations[k];
            std::vector<std::size_t> degenerate_vars;
            for (const auto& g : lm.constraints) {
                const auto vars = g.variables();
                if (g.size() == 1 && vars.size() == 1 && g.total_degree() == 1) degenerate_vars.push_back(vars[0]);
            }
            const auto jac = parameter_jacobian(lm);
            SeededRng rng(s.options.seed, "frontier:" + stratum.id + ":" + lm.key());
            const std::size_t subsets = std::size_t{1} << degenerate_vars.size();
            for (std::size_t mask = 1; mask < subsets; ++mask) {
                LimitMapping relaxed = lm;
                relaxed.constraints.clear();
                std::vector<bool> zeroed(lm.n(), false);
                std::string how;
                for (std::size_t t = 0; t < degenerate_vars.size(); ++t) {
                    if (mask & (std::size_t{1} << t)) {
                        zeroed[degenerate_vars[t]] = true;
                        how += (how.empty() ? "" : ",") + variable_name(Space::Parameter, degenerate_vars[t]);
                    }
                }
                for (const auto& g : lm.constraints) {
                    const auto vars = g.variables();
                    if (!(vars.size() == 1 && zeroed[vars[0]])) relaxed.constraints.push_back(g);
                }
                std::vector<bool> keep;
                for (auto v : lm.free_params) keep.push_back(!zeroed[v]);
                for (std::size_t rep = 0; rep < kPointsPerDegeneration; ++rep) {
                    Point params = sample_parameters(relaxed, rng);
                    for (std::size_t v = 0; v < params.size(); ++v) {
                        if (zeroed[v]) params[v] = 0;
                    }
                    if (jacobian_rank_at(jac, params, &keep) >= stratum.dimension) continue;
                    const Point p = lm.eval(params);
                    const bool covered = std::any_of(strata.begin(), strata.end(), [&](const Stratum& other) {
                        return other.dimension < stratum.dimension && satisfies_all(other.implicit_eqs, p);
                    });
                    if (!covered) {
                        report.violations.push_back(stratum.id + " (dim " + std::to_string(stratum.dimension) +
                                                    "): boundary point " + point_to_string(p) + " reached as " +
                                                    how + " -> 0 lies on no lower-dimensional stratum");
                    }
                }
            }
        }
    }
    std::sort(report.violations.begin(), report.violations.end());
    report.violations.erase(std::unique(report.violations.begin(), report.violations.end()), report.violations.end());
    report.holds = report.violations.empty();
    return report;
}

// -----------------------------------------------------------------------------
// Full pipeline
// -----------------------------------------------------------------------------

struct AsymptoticSetReport {
    PolynomialMapping mapping;
    bool dominant = false;
    FaconCatalog catalog;
    Stratification stratification;
    std::optional<std::size_t> top_dimension;
    bool hypersurface = true;   // top dimension n-1, or S_F empty
    FrontierReport frontier;
    std::vector<std::string> warnings;
    AnalysisOptions options;
};

inline AsymptoticSetReport asymptotic_set(const PolynomialMapping& f, const AnalysisOptions& options) {
    if (options.max_exponent < 1) throw UsageError("max exponent must be >= 1");
    if (options.degree < 1) throw UsageError("implicit degree must be >= 1");
    AsymptoticSetReport report;
    report.mapping = f;
    report.options = options;
    report.dominant = is_dominant(f);
    if (!report.dominant) {
        report.warnings.push_back("mapping is not dominant (Jacobian determinant vanishes identically)");
    }
    report.catalog = collect_facons(f, options.max_exponent);
    if (report.catalog.empty()) {
        report.stratification.n = f.n;
        report.stratification.options = options;
    } else {
        report.stratification = etoile_stratification(CatalogImages(report.catalog, options), options);
    }
    report.top_dimension = report.stratification.top_dimension();
    report.hypersurface = !report.top_dimension || *report.top_dimension + 1 == f.n;
    if (!report.hypersurface) {
        report.warnings.push_back("top stratum has dimension " + std::to_string(*report.top_dimension) +
                                  ", not n-1; the exponent box may be too small");
    }
    for (const auto& st : report.stratification.strata) {
        if (!st.rank_constant) report.warnings.push_back(st.id + ": Jacobian rank drops at some sampled points");
    }
    report.frontier = check_frontier(report.stratification);
    return report;
}

} // namespace facon
