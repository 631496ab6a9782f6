#ifndef WARING_DECOMPOSE_HPP
#define WARING_DECOMPOSE_HPP

#include <waring/bounds.hpp>
#include <waring/flatten.hpp>
#include <waring/linalg.hpp>
#include <waring/poly.hpp>
#include <waring/solve.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace waring {

/// Rejected input (f = 0, d <= 1, ...), kept apart from mathematical failure.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class FailureStage { trivial_kernel, infinite_base_locus, non_reduced, no_coefficient_solution, budget };

inline const char* to_string(FailureStage s) {
    switch (s) {
        case FailureStage::trivial_kernel: return "trivial_kernel";
        case FailureStage::infinite_base_locus: return "infinite_base_locus";
        case FailureStage::non_reduced: return "non_reduced";
        case FailureStage::no_coefficient_solution: return "no_coefficient_solution";
        case FailureStage::budget: return "budget";
    }
    return "?";
}

inline constexpr double kVerifyTolerance = 1e-8;

struct DecomposeOptions {
    Method method = Method::automatic;
    std::uint64_t seed = 0x5eed;
    std::size_t subset_budget = 200;
    int charts = 5;
    int separating_forms = 3;
    std::size_t pair_limit = 100000;
    // override the flattening order / wedge degree chosen by the method
    std::optional<std::size_t> m;
    std::optional<std::size_t> a;
};

/// One summand c * v^d. The exact fields are set only when the point is rational.
struct Summand {
    ProjectivePoint point;
    bool exact = false;
    Rational coefficient;
    Complex numeric_coefficient;  // matches point.numeric
};

/// Shape and rank of the flattening used by a pipeline.
struct FlatteningSummary {
    Method method = Method::catalecticant;
    std::size_t m = 0;
    std::size_t a = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::size_t bundle_rank = 1;
    std::size_t kernel_dim = 0;

    std::size_t rank_lower_bound() const { return (rank + bundle_rank - 1) / bundle_rank; }
};

struct Decomposition {
    std::vector<Summand> terms;
    bool exact = true;
    double residual = 0.0;  // max-coefficient norm of f - sum c v^d
    FlatteningSummary flattening;
    std::size_t rank_lower_bound = 0;
    std::size_t locus_size = 0;
    std::size_t subsets_tried = 0;
    Method method = Method::catalecticant;
};

struct FailureReport {
    FailureStage stage = FailureStage::trivial_kernel;
    Method method = Method::catalecticant;
    std::optional<std::size_t> rank_lower_bound;
    std::optional<FlatteningSummary> flattening;
    int locus_dimension = -1;
    std::size_t locus_size = 0;
    std::string detail;
};

struct DecomposeResult {
    std::optional<Decomposition> decomposition;
    std::optional<FailureReport> failure;

    bool ok() const { return decomposition.has_value(); }
};

/// Parameters of one concrete pipeline run.
struct PipelinePlan {
    Method method = Method::catalecticant;
    std::size_t m = 0;
    std::size_t a = 0;
    bool cokernel = false;  // also intersect with the eigenvectors of (im P_f)^perp
};

inline void check_input(const HomPoly<Rational>& f) {
    if (f.degree() <= 1) throw InputError("degree must be at least 2");
    if (f.is_zero()) throw InputError("the zero polynomial has no decomposition");
}

inline PipelinePlan plan_for(Method method, std::size_t n, std::size_t d, const DecomposeOptions& opts = {}) {
    PipelinePlan p;
    p.method = method;
    switch (method) {
        case Method::catalecticant:
            p.m = (d + 1) / 2;
            p.a = 0;
            break;
        case Method::koszul_a1:
            p.m = d / 2;
            p.a = 1;
            break;
        case Method::koszul_general:
            p.m = d / 2;
            p.a = (n + 1) / 2;
            p.cokernel = n % 2 == 1;
            break;
        case Method::automatic: throw std::invalid_argument("plan_for: method must be concrete");
    }
    if (opts.m) p.m = *opts.m;
    if (opts.a) p.a = *opts.a;
    if (p.m < 1 || p.m + 1 > d) throw InputError("flattening order m must satisfy 1 <= m <= d-1");
    if (p.a > n) throw InputError("wedge degree a must satisfy a <= n");
    if (p.a == 0) p.cokernel = false;
    return p;
}

/// Expansion of sum c_i v_i^d.
template <class S>
HomPoly<S> expand(const std::vector<S>& coeffs, const std::vector<std::vector<S>>& points, std::size_t d) {
    if (points.empty()) throw std::invalid_argument("expand: no points");
    HomPoly<S> out(points[0].size() - 1, d);
    for (std::size_t i = 0; i < points.size(); ++i) {
        HomPoly<S> p = pow_linear_form(make_linear_form(points[i]), d);
        for (std::size_t k = 0; k < p.size(); ++k) out[k] += coeffs[i] * p[k];
    }
    return out;
}

/// Max-coefficient norm of f - sum c_i v_i^d.
inline double verify(const Decomposition& dec, const HomPoly<Rational>& f) {
    if (dec.terms.empty()) return max_norm(f);
    if (dec.exact) {
        std::vector<Rational> c;
        std::vector<std::vector<Rational>> v;
        for (const auto& t : dec.terms) {
            c.push_back(t.coefficient);
            v.push_back(t.point.rational);
        }
        HomPoly<Rational> diff = f - expand(c, v, f.degree());
        return diff.is_zero() ? 0.0 : max_norm(diff);
    }
    std::vector<Complex> c;
    std::vector<std::vector<Complex>> v;
    for (const auto& t : dec.terms) {
        c.push_back(t.numeric_coefficient);
        v.push_back(t.point.numeric);
    }
    return max_norm(convert<Complex>(f) - expand(c, v, f.degree()));
}

// ---------------------------------------------------------------------------
// Coefficient solve
// ---------------------------------------------------------------------------

struct CoefficientReport {
    SolveStatus status = SolveStatus::inconsistent;
    std::vector<Summand> terms;  // nonzero terms of the unique solution
    bool exact = true;
    double residual = 0.0;
    std::size_t family_dimension = 0;
};

namespace detail {

template <class S>
DenseMatrix<S> power_matrix(const std::vector<std::vector<S>>& points, std::size_t d) {
    const std::size_t n = points.at(0).size() - 1;
    DenseMatrix<S> a(monomial_count(n, d), points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        HomPoly<S> p = pow_linear_form(make_linear_form(points[j]), d);
        for (std::size_t i = 0; i < p.size(); ++i) a(i, j) = p[i];
    }
    return a;
}

// c * rational^d = c' * numeric^d, where rational = lambda * numeric
inline Complex numeric_coefficient(const Rational& c, const ProjectivePoint& p, std::size_t d) {
    std::size_t k = 0;
    while (sgn(p.rational[k]) == 0) ++k;
    const Complex lambda = Complex(p.rational[k].get_d(), 0.0) / p.numeric[k];
    return c.get_d() * std::pow(lambda, double(d));
}

}  // namespace detail

/// Solves f = sum c_i v_i^d over the given distinct points.
inline CoefficientReport solve_coefficients(const HomPoly<Rational>& f, const std::vector<ProjectivePoint>& points) {
    CoefficientReport rep;
    if (points.empty()) return rep;
    const std::size_t d = f.degree();
    rep.exact = std::all_of(points.begin(), points.end(), [](const ProjectivePoint& p) { return p.exact; });
    if (rep.exact) {
        std::vector<std::vector<Rational>> v;
        for (const auto& p : points) v.push_back(p.rational);
        auto sol = solve_linear(detail::power_matrix(v, d), f.coeffs());
        rep.status = sol.status;
        rep.family_dimension = sol.family_dimension;
        if (sol.status != SolveStatus::unique) return rep;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (sgn(sol.solution[i]) == 0) continue;
            Summand t;
            t.point = points[i];
            t.exact = true;
            t.coefficient = sol.solution[i];
            t.numeric_coefficient = detail::numeric_coefficient(t.coefficient, t.point, d);
            rep.terms.push_back(std::move(t));
        }
        rep.residual = 0.0;
        return rep;
    }
    std::vector<std::vector<Complex>> v;
    for (const auto& p : points) v.push_back(p.numeric);
    auto target = convert<Complex>(f);
    auto sol = solve_linear(detail::power_matrix(v, d), target.coeffs(), kVerifyTolerance);
    rep.status = sol.status;
    rep.family_dimension = sol.family_dimension;
    if (sol.status != SolveStatus::unique) return rep;
    double biggest = 0.0;
    for (const auto& c : sol.solution) biggest = std::max(biggest, std::abs(c));
    std::vector<Complex> kept_c;
    std::vector<std::vector<Complex>> kept_v;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (std::abs(sol.solution[i]) <= kVerifyTolerance * biggest) continue;
        Summand t;
        t.point = points[i];
        t.exact = false;
        t.numeric_coefficient = sol.solution[i];
        rep.terms.push_back(t);
        kept_c.push_back(sol.solution[i]);
        kept_v.push_back(points[i].numeric);
    }
    rep.residual = kept_c.empty() ? max_norm(f) : max_norm(target - expand(kept_c, kept_v, d));
    return rep;
}

// ---------------------------------------------------------------------------
// Pipelines
// ---------------------------------------------------------------------------

namespace detail {

inline FailureReport failure(FailureStage stage, const PipelinePlan& plan, std::string detail_text = {}) {
    FailureReport r;
    r.stage = stage;
    r.method = plan.method;
    r.detail = std::move(detail_text);
    return r;
}

/// Index subsets of size k out of s, in seeded-shuffle order, at most budget of them.
inline std::vector<std::vector<std::size_t>> shuffled_subsets(std::size_t s, std::size_t k, std::size_t budget,
                                                              std::mt19937_64& rng) {
    std::vector<std::vector<std::size_t>> out;
    if (k == 0 || k > s) return out;
    const std::size_t total = binomial(long(s), long(k));
    if (total <= 100000) {
        for (const auto& sub : subsets(s, k)) out.push_back(sub);
        std::shuffle(out.begin(), out.end(), rng);
        if (out.size() > budget) out.resize(budget);
        return out;
    }
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (out.size() < budget) {
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<std::size_t> sub(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(sub.begin(), sub.end());
        if (seen.insert(sub).second) out.push_back(std::move(sub));
    }
    return out;
}

}  // namespace detail

/// Runs one flattening pipeline with fixed (m, a).
inline DecomposeResult run_pipeline(const HomPoly<Rational>& f, const PipelinePlan& plan,
                                    const DecomposeOptions& opts = {}) {
    check_input(f);
    const std::size_t n = f.n();
    const std::size_t d = f.degree();
    DecomposeResult out;

    FlatteningMatrix<Rational> p = koszul_flattening(f, plan.m, plan.a);
    KernelBasis<Rational> ker = kernel(p.matrix);
    FlatteningSummary summary;
    summary.method = plan.method;
    summary.m = plan.m;
    summary.a = plan.a;
    summary.rows = p.matrix.rows();
    summary.cols = p.matrix.cols();
    summary.kernel_dim = ker.dimension();
    summary.rank = summary.cols - summary.kernel_dim;
    summary.bundle_rank = p.bundle_rank;
    const std::size_t bound = summary.rank_lower_bound();

    auto fail = [&](FailureStage stage, std::string text) {
        FailureReport r = detail::failure(stage, plan, std::move(text));
        r.rank_lower_bound = bound;
        r.flattening = summary;
        out.failure = std::move(r);
        return out;
    };

    if (ker.empty()) return fail(FailureStage::trivial_kernel, "flattening has trivial kernel");

    PolyIdeal ideal = eigen_equation_ideal(tensor_maps(ker, n, plan.m, plan.a), n);
    if (plan.cokernel) {
        auto co = cokernel_maps(p);
        if (!co.empty()) {
            PolyIdeal extra = eigen_equation_ideal(co, n);
            ideal.generators.insert(ideal.generators.end(), extra.generators.begin(), extra.generators.end());
            ideal = independent_generators(ideal);
        }
    }
    // only maps with every point as eigenvector (v -> v ∧ u for a = 2, ...) survive
    if (ideal.generators.empty()) return fail(FailureStage::trivial_kernel, "kernel has no nontrivial eigen equations");

    SolverOptions so;
    so.seed = opts.seed;
    so.charts = opts.charts;
    so.separating_forms = opts.separating_forms;
    so.limits.degree_cap = 2 * n * plan.m + 4;
    so.limits.pair_limit = opts.pair_limit;
    BaseLocus locus = base_locus(ideal, so);
    switch (locus.status) {
        case LocusStatus::positive_dimensional: {
            auto r = fail(FailureStage::infinite_base_locus, locus.detail.empty() ? "base locus is positive dimensional"
                                                                                   : locus.detail);
            r.failure->locus_dimension = locus.dimension;
            return r;
        }
        case LocusStatus::non_reduced: {
            auto r = fail(FailureStage::non_reduced, "base locus is not reduced");
            r.failure->locus_dimension = 0;
            r.failure->locus_size = locus.degree;
            return r;
        }
        case LocusStatus::budget_exceeded: return fail(FailureStage::budget, locus.detail);
        case LocusStatus::empty: return fail(FailureStage::no_coefficient_solution, "base locus is empty");
        case LocusStatus::finite_reduced: break;
    }

    auto accept = [&](const CoefficientReport& c) {
        if (c.status != SolveStatus::unique || c.terms.empty()) return false;
        return c.exact ? c.residual == 0.0 : c.residual <= kVerifyTolerance * max_norm(f);
    };
    auto finish = [&](CoefficientReport c, std::size_t tried) {
        Decomposition dec;
        dec.terms = std::move(c.terms);
        dec.exact = c.exact;
        dec.flattening = summary;
        dec.rank_lower_bound = bound;
        dec.locus_size = locus.points.size();
        dec.subsets_tried = tried;
        dec.method = plan.method;
        dec.residual = verify(dec, f);
        out.decomposition = std::move(dec);
        return out;
    };

    CoefficientReport all = solve_coefficients(f, locus.points);
    if (accept(all)) return finish(std::move(all), 0);
    if (all.status != SolveStatus::family) {
        auto r = fail(FailureStage::no_coefficient_solution,
                      all.status == SolveStatus::inconsistent ? "f is not in the span of the base-locus powers"
                                                              : "coefficient residual above tolerance");
        r.failure->locus_dimension = 0;
        r.failure->locus_size = locus.points.size();
        return r;
    }

    // affine family of solutions: retry on subsets of size rank_lower_bound
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    auto subs = detail::shuffled_subsets(locus.points.size(), bound, opts.subset_budget, rng);
    std::size_t tried = 0;
    for (const auto& sub : subs) {
        ++tried;
        std::vector<ProjectivePoint> pts;
        for (std::size_t i : sub) pts.push_back(locus.points[i]);
        CoefficientReport c = solve_coefficients(f, pts);
        if (accept(c)) return finish(std::move(c), tried);
    }
    auto r = fail(FailureStage::no_coefficient_solution,
                  "coefficient system has a family of solutions and no subset of size " + std::to_string(bound) +
                      " was exact within " + std::to_string(tried) + " subsets");
    r.failure->locus_dimension = 0;
    r.failure->locus_size = locus.points.size();
    return r;
}

inline DecomposeResult catalecticant_pipeline(const HomPoly<Rational>& f, const DecomposeOptions& opts = {}) {
    check_input(f);
    return run_pipeline(f, plan_for(Method::catalecticant, f.n(), f.degree(), opts), opts);
}

inline DecomposeResult koszul_a1_pipeline(const HomPoly<Rational>& f, const DecomposeOptions& opts = {}) {
    check_input(f);
    return run_pipeline(f, plan_for(Method::koszul_a1, f.n(), f.degree(), opts), opts);
}

inline DecomposeResult koszul_general_pipeline(const HomPoly<Rational>& f, const DecomposeOptions& opts = {}) {
    check_input(f);
    return run_pipeline(f, plan_for(Method::koszul_general, f.n(), f.degree(), opts), opts);
}

/// Concrete method chosen by auto for a form of degree d in n+1 variables.
inline Method resolve_method(std::size_t n, std::size_t d) {
    if (d % 2 == 0 || n == 1) return Method::catalecticant;
    return Method::koszul_general;
}

inline DecomposeResult decompose(const HomPoly<Rational>& f, const DecomposeOptions& opts = {}) {
    check_input(f);
    switch (opts.method) {
        case Method::catalecticant: return catalecticant_pipeline(f, opts);
        case Method::koszul_a1: return koszul_a1_pipeline(f, opts);
        case Method::koszul_general: return koszul_general_pipeline(f, opts);
        case Method::automatic: break;
    }
    const Method chosen = resolve_method(f.n(), f.degree());
    if (chosen == Method::catalecticant) return catalecticant_pipeline(f, opts);
    DecomposeResult r = koszul_general_pipeline(f, opts);
    if (!r.ok() && r.failure->stage == FailureStage::trivial_kernel) return catalecticant_pipeline(f, opts);
    return r;
}

/// rank(P_f) / bundle rank for the method's flattening, rounded up.
inline FlatteningSummary rank_bound(const HomPoly<Rational>& f, Method method, const DecomposeOptions& opts = {}) {
    check_input(f);
    if (method == Method::automatic) method = resolve_method(f.n(), f.degree());
    PipelinePlan plan = plan_for(method, f.n(), f.degree(), opts);
    FlatteningMatrix<Rational> p = koszul_flattening(f, plan.m, plan.a);
    FlatteningSummary s;
    s.method = method;
    s.m = plan.m;
    s.a = plan.a;
    s.rows = p.matrix.rows();
    s.cols = p.matrix.cols();
    s.rank = rank_of(p.matrix);
    s.kernel_dim = s.cols - s.rank;
    s.bundle_rank = p.bundle_rank;
    return s;
}

// ---------------------------------------------------------------------------
// Test instances
// ---------------------------------------------------------------------------

struct GeneratedInstance {
    HomPoly<Rational> f;
    std::vector<std::vector<Rational>> forms;
    std::vector<Rational> coefficients;
};

inline bool proportional(const std::vector<Rational>& u, const std::vector<Rational>& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

/// f = sum of r d-th powers of seeded integer forms with coordinates in [-9, 9].
inline GeneratedInstance generate_random_rank_r(std::size_t n, std::size_t d, std::size_t r, std::uint64_t seed) {
    if (r < 1) throw std::invalid_argument("generate_random_rank_r: needs r >= 1");
    if (n < 1 || d < 1) throw std::invalid_argument("generate_random_rank_r: needs n >= 1 and d >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    GeneratedInstance g;
    g.f = HomPoly<Rational>(n, d);
    while (g.forms.size() < r) {
        std::vector<Rational> v(n + 1);
        bool nonzero = false;
        for (auto& x : v) {
            x = dist(rng);
            nonzero = nonzero || sgn(x) != 0;
        }
        if (!nonzero) continue;
        bool clash = std::any_of(g.forms.begin(), g.forms.end(), [&](const auto& u) { return proportional(u, v); });
        if (clash) continue;
        g.forms.push_back(std::move(v));
    }
    g.coefficients.assign(r, Rational(1));
    g.f = expand(g.coefficients, g.forms, d);
    return g;
}

}  // namespace waring

#endif  // WARING_DECOMPOSE_HPP
