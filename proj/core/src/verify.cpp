#include "pfq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace pfq {
namespace {

using Coordinates = std::vector<std::pair<std::string, double>>;

// 53-bit uniform in [0, 1); stable across standard libraries, unlike
// std::uniform_real_distribution
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

bool away_from_nonpositive_integers(double x, double margin) {
    double k = std::nearbyint(x);
    return !(k <= 0.0 && std::abs(x - k) < margin);
}

struct Evaluation {
    double residual;
    bool slow;
    // residual valid only when !slow
};

// classification shared by all identities
void classify(VerificationReport& report, Coordinates coords,
              const std::function<Evaluation()>& eval) {
    PointOutcome out;
    out.coordinates = std::move(coords);
    try {
        Evaluation e = eval();
        if (e.slow) {
            out.classification = PointClass::SlowSkip;
            out.detail = "series reached max_terms";
        } else {
            out.rel_residual = e.residual;
            out.classification = e.residual <= report.grid.tolerance ? PointClass::Pass
                                                                     : PointClass::Fail;
        }
    } catch (const PoleError& e) {
        out.classification = PointClass::PoleSkip;
        out.detail = e.what();
    } catch (const IndeterminateError& e) {
        out.classification = PointClass::PoleSkip;
        out.detail = e.what();
    } catch (const CoefficientPoleError& e) {
        out.classification = PointClass::PoleSkip;
        out.detail = e.what();
    }
    report.outcomes.push_back(std::move(out));
}

void finalize(VerificationReport& report) {
    std::sort(report.outcomes.begin(), report.outcomes.end(),
              [](const PointOutcome& a, const PointOutcome& b) {
                  return a.coordinates < b.coordinates;
              });
    report.counts = {};
    report.max_residual = 0.0;
    for (const PointOutcome& out : report.outcomes) {
        switch (out.classification) {
            case PointClass::Pass: ++report.counts.pass; break;
            case PointClass::Fail: ++report.counts.fail; break;
            case PointClass::PoleSkip: ++report.counts.pole_skip; break;
            case PointClass::SlowSkip: ++report.counts.slow_skip; break;
        }
        if (out.rel_residual)
            report.max_residual = std::max(report.max_residual, *out.rel_residual);
    }
    long total = report.counts.total();
    report.skip_warning = total > 0 && 5 * report.counts.skips() > total;
}

const std::vector<double>& axis(const GridSpec& spec, const std::string& name) {
    auto it = spec.axes.find(name);
    if (it == spec.axes.end() || it->second.empty())
        throw ConfigError("grid for " + spec.identity.label() + " is missing axis '" + name + "'");
    return it->second;
}

Evaluation residual_of(const IdentityPair& pair) {
    if (!pair.lhs.trustworthy() || !pair.rhs.trustworthy())
        return {0.0, true};
    return {pair.rel_residual, false};
}

// --- per-identity point evaluators -----------------------------------------

Evaluation eval_dixon_point(const DixonCase& cs) {
    double closed = dixon_general(cs);
    double oracle;
    if (is_nonpositive_integer(cs.b) || is_nonpositive_integer(cs.c)) {
        oracle = eval_pfq_terminating(dixon_series_params(cs), 1.0);
    } else {
        SeriesResult r = eval_pfq(dixon_series_params(cs), 1.0);
        if (!r.trustworthy()) return {0.0, true};
        oracle = r.value;
    }
    return {std::abs(closed - oracle) / std::max(1.0, std::abs(oracle)), false};
}

Evaluation eval_theorem_point(const TransformPoint& pt) {
    SeriesResult rhs = exton_rhs_theorem(pt); // pole checks fire before the cheap side
    SeriesResult lhs = exton_lhs_theorem(pt);
    return residual_of(make_identity_pair(lhs, rhs));
}

Evaluation eval_chain_point(const TransformPoint& pt) {
    SeriesResult rhs = exton_rhs_theorem(pt);
    SeriesResult lhs = exton_lhs_theorem(pt);
    SeriesResult mid = reduction_2_2_rhs(pt);
    if (!lhs.trustworthy() || !mid.trustworthy() || !rhs.trustworthy())
        return {0.0, true};
    double scale = std::max(1.0, std::abs(rhs.value));
    double worst = std::max({std::abs(lhs.value - mid.value),
                             std::abs(mid.value - rhs.value),
                             std::abs(lhs.value - rhs.value)}) / scale;
    return {worst, false};
}

Evaluation eval_general_point(const GeneralTransformSpec& spec) {
    SeriesResult lhs = exton_general_lhs(spec);
    SeriesResult rhs = exton_general_rhs(spec);
    return residual_of(make_identity_pair(lhs, rhs));
}

// --- random (a, b, c) sampler for the table audit ---------------------------

struct DixonSampler {
    int i, j;
    std::mt19937_64 rng;

    bool acceptable(const DixonCase& cs) const {
        const double a = cs.a, b = cs.b, c = cs.c;
        const double margin = 0.1;
        const double ha = 0.5 * a;
        auto f2 = [](int n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); };
        const double args[] = {
            1.0 + a - b + i, 1.0 + a - c + i + j,
            a - 2.0 * c + i + j + 1.0, a - b - c + i + j + 1.0,
            ha - c + 0.5 + f2(i + j + 1), ha - b - c + 1.0 + i + f2(j + 1),
            ha + 0.5, ha - b + 1.0 + f2(i),
            ha - c + 1.0 + f2(i + j), ha - b - c + 1.5 + i + f2(j),
            ha, ha - b + 0.5 + f2(i + 1)};
        for (double x : args)
            if (!away_from_nonpositive_integers(x, margin)) return false;
        for (int l = 1; l <= std::max(i, 0); ++l)
            if (std::abs(b - l) < margin) return false;
        for (int l = 1; l <= std::max(i + j, 0); ++l)
            if (std::abs(c - l) < margin) return false;
        return true;
    }

    // non-terminating draw with validity margin in [0.5, 3]
    DixonCase draw_general() {
        while (true) {
            double b = uniform(rng, 0.1, 1.6);
            double c = uniform(rng, 0.1, 1.6);
            double a = 2.0 * b + 2.0 * c - 2.0 - 2.0 * i - j + uniform(rng, 0.5, 3.0);
            DixonCase cs{a, b, c, i, j};
            if (acceptable(cs)) return cs;
        }
    }

    // terminating draw: b = -n, n in 0..8
    DixonCase draw_terminating() {
        while (true) {
            double b = -static_cast<double>(rng() % 9);
            double c = uniform(rng, 0.1, 1.9);
            double a = uniform(rng, 0.3, 4.0);
            DixonCase cs{a, b, c, i, j};
            if (acceptable(cs)) return cs;
        }
    }
};

void run_dixon_cell(VerificationReport& report, int i, int j) {
    const GridSpec& spec = report.grid;
    if (spec.axes.contains("a")) {
        // explicit cartesian axes
        for (double a : axis(spec, "a"))
            for (double b : axis(spec, "b"))
                for (double c : axis(spec, "c")) {
                    DixonCase cs{a, b, c, i, j};
                    classify(report, {{"a", a}, {"b", b}, {"c", c}},
                             [&] { return eval_dixon_point(cs); });
                }
        return;
    }
    const double tol_terminating = spec.terminating_tolerance.value_or(spec.tolerance);
    DixonSampler sampler{i, j, std::mt19937_64{spec.seed}};
    for (int s = 0; s < spec.samples; ++s) {
        const bool terminating = (s % 3 == 2);
        DixonCase cs = terminating ? sampler.draw_terminating() : sampler.draw_general();
        classify(report, {{"a", cs.a}, {"b", cs.b}, {"c", cs.c}},
                 [&] { return eval_dixon_point(cs); });
        // terminating samples are held to the tighter tolerance
        PointOutcome& out = report.outcomes.back();
        if (terminating && out.rel_residual)
            out.classification = *out.rel_residual <= tol_terminating ? PointClass::Pass
                                                                      : PointClass::Fail;
    }
}

} // namespace

const char* to_string(PointClass c) noexcept {
    switch (c) {
        case PointClass::Pass: return "Pass";
        case PointClass::Fail: return "Fail";
        case PointClass::PoleSkip: return "PoleSkip";
        case PointClass::SlowSkip: return "SlowSkip";
    }
    return "?";
}

std::string IdentityId::label() const {
    switch (kind) {
        case IdentityKind::DixonCell:
            return "DIXON_CELL(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case IdentityKind::Theorem21:
            return "THEOREM_21(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case IdentityKind::ReductionChain:
            return "REDUCTION_CHAIN(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case IdentityKind::General13: return "GENERAL_13";
        case IdentityKind::Special: return to_string(special);
        case IdentityKind::Limiting: return to_string(limiting);
        case IdentityKind::Srivastava: return "SRIVASTAVA";
        case IdentityKind::Tables: return "TABLES";
    }
    return "?";
}

IdentityId IdentityId::dixon_cell(int i, int j) { return {IdentityKind::DixonCell, i, j}; }
IdentityId IdentityId::theorem(int i, int j) { return {IdentityKind::Theorem21, i, j}; }
IdentityId IdentityId::reduction_chain(int i, int j) { return {IdentityKind::ReductionChain, i, j}; }
IdentityId IdentityId::general() { return {IdentityKind::General13}; }
IdentityId IdentityId::special_case(SpecialCase c) {
    IdentityId id{IdentityKind::Special};
    id.special = c;
    return id;
}
IdentityId IdentityId::limiting_case(LimitingCase c) {
    IdentityId id{IdentityKind::Limiting};
    id.limiting = c;
    return id;
}
IdentityId IdentityId::srivastava() { return {IdentityKind::Srivastava}; }
IdentityId IdentityId::tables() { return {IdentityKind::Tables}; }

std::vector<std::pair<int, int>> supported_cells() {
    std::vector<std::pair<int, int>> cells;
    for (int i = 3; i >= -3; --i)
        for (int j = 0; j <= 3; ++j)
            if (pair_in_table(i, j)) cells.emplace_back(i, j);
    return cells;
}

VerificationReport run_grid(const GridSpec& spec) {
    VerificationReport report;
    report.grid = spec;
    if (!(spec.tolerance > 0.0))
        throw ConfigError("grid tolerance must be positive");

    switch (spec.identity.kind) {
        case IdentityKind::DixonCell: {
            if (!pair_in_table(spec.identity.i, spec.identity.j))
                throw UnsupportedPairError(spec.identity.i, spec.identity.j);
            run_dixon_cell(report, spec.identity.i, spec.identity.j);
            break;
        }
        case IdentityKind::Theorem21:
        case IdentityKind::ReductionChain: {
            const int i = spec.identity.i, j = spec.identity.j;
            if (!pair_in_table(i, j)) throw UnsupportedPairError(i, j);
            const bool chain = spec.identity.kind == IdentityKind::ReductionChain;
            for (double b : axis(spec, "b"))
                for (double d : axis(spec, "d"))
                    for (double x : axis(spec, "x")) {
                        TransformPoint pt{b, d, i, j, x};
                        classify(report, {{"b", b}, {"d", d}, {"x", x}}, [&] {
                            return chain ? eval_chain_point(pt) : eval_theorem_point(pt);
                        });
                    }
            break;
        }
        case IdentityKind::General13: {
            std::mt19937_64 rng{spec.seed};
            const std::vector<double> y_choices = {-0.8, 0.5, 1.0};
            for (int s = 0; s < spec.samples; ++s) {
                GeneralTransformSpec g;
                // A <= H+1 keeps the transformed series p <= q+1
                const int H = static_cast<int>(rng() % 2);         // 0..1
                const int A = static_cast<int>(rng() % (H + 2));   // 0..H+1
                for (int k = 0; k < A; ++k) g.a_list.push_back(uniform(rng, 0.2, 2.5));
                for (int k = 0; k < H; ++k) g.h_list.push_back(uniform(rng, 0.2, 2.5));
                g.d = uniform(rng, 0.2, 2.5);
                g.x = uniform(rng, -0.8, 0.8);
                g.y = y_choices[rng() % y_choices.size()];
                Coordinates coords{{"d", g.d}, {"x", g.x}, {"y", g.y}};
                for (size_t k = 0; k < g.a_list.size(); ++k)
                    coords.emplace_back("a" + std::to_string(k + 1), g.a_list[k]);
                for (size_t k = 0; k < g.h_list.size(); ++k)
                    coords.emplace_back("h" + std::to_string(k + 1), g.h_list[k]);
                classify(report, std::move(coords), [&] { return eval_general_point(g); });
            }
            break;
        }
        case IdentityKind::Special: {
            SpecialCase c = spec.identity.special;
            for (double b : axis(spec, "b"))
                for (double d : axis(spec, "d"))
                    for (double x : axis(spec, "x"))
                        classify(report, {{"b", b}, {"d", d}, {"x", x}},
                                 [&] { return residual_of(special_case(c, b, d, x)); });
            break;
        }
        case IdentityKind::Limiting: {
            LimitingCase c = spec.identity.limiting;
            for (double d : axis(spec, "d"))
                for (double x : axis(spec, "x"))
                    classify(report, {{"d", d}, {"x", x}},
                             [&] { return residual_of(limiting_case(c, d, x)); });
            break;
        }
        case IdentityKind::Srivastava: {
            for (double a : axis(spec, "a"))
                for (double x : axis(spec, "x"))
                    classify(report, {{"a", a}, {"x", x}},
                             [&] { return residual_of(srivastava_identity_check(a, x)); });
            break;
        }
        case IdentityKind::Tables:
            throw ConfigError("the table audit runs through validate_tables");
    }

    finalize(report);
    return report;
}

VerificationReport validate_tables(int samples_per_cell, unsigned long seed,
                                   double tol_general, double tol_terminating) {
    if (samples_per_cell < 1)
        throw ConfigError("validate_tables requires samples_per_cell >= 1");

    VerificationReport merged;
    merged.grid.identity = IdentityId::tables();
    merged.grid.tolerance = tol_general;
    merged.grid.seed = seed;
    merged.grid.samples = samples_per_cell;

    unsigned long cell_index = 0;
    for (auto [i, j] : supported_cells()) {
        GridSpec cell;
        cell.identity = IdentityId::dixon_cell(i, j);
        cell.tolerance = tol_general;
        cell.terminating_tolerance = tol_terminating;
        cell.seed = seed * 1000003ULL + cell_index++;
        cell.samples = samples_per_cell;
        VerificationReport r = run_grid(cell);
        // keyed by cell: (i, j) prepended to every outcome's coordinates
        for (PointOutcome& out : r.outcomes) {
            out.coordinates.insert(out.coordinates.begin(),
                                   {{"i", static_cast<double>(i)}, {"j", static_cast<double>(j)}});
            merged.outcomes.push_back(std::move(out));
        }
    }
    finalize(merged);
    return merged;
}

GridSpec default_theorem_grid(int i, int j) {
    GridSpec spec;
    spec.identity = IdentityId::theorem(i, j);
    spec.axes = {{"b", {0.3, 0.8, 1.6}},
                 {"d", {0.6, 1.1, 1.7, 2.35}},
                 {"x", {-0.9, -0.5, -0.2, 0.2, 0.5, 0.75}}};
    spec.tolerance = 1e-8;
    return spec;
}

GridSpec default_reduction_grid(int i, int j) {
    GridSpec spec = default_theorem_grid(i, j);
    spec.identity = IdentityId::reduction_chain(i, j);
    return spec;
}

GridSpec default_general_grid() {
    GridSpec spec;
    spec.identity = IdentityId::general();
    spec.tolerance = 1e-8;
    spec.samples = 20;
    return spec;
}

GridSpec default_special_grid(SpecialCase c) {
    GridSpec spec;
    spec.identity = IdentityId::special_case(c);
    spec.axes = {{"b", {0.3, 0.8, 1.6}},
                 {"d", {0.6, 1.1, 1.7, 2.35}},
                 {"x", {-0.9, -0.5, -0.2, 0.2, 0.5, 0.75}}};
    spec.tolerance = 1e-8;
    return spec;
}

GridSpec default_limiting_grid(LimitingCase c) {
    GridSpec spec;
    spec.identity = IdentityId::limiting_case(c);
    spec.axes = {{"d", {0.6, 1.1, 1.7, 2.35}},
                 {"x", {-0.9, -0.5, -0.2, 0.2, 0.5, 0.75}}};
    spec.tolerance = 1e-8;
    return spec;
}

GridSpec default_srivastava_grid() {
    GridSpec spec;
    spec.identity = IdentityId::srivastava();
    spec.axes = {{"a", {0.6, 1.0, 1.8}},
                 {"x", {-0.6, -0.2, 0.2, 0.6, 0.9}}};
    spec.tolerance = 1e-11;
    return spec;
}

} // namespace pfq
