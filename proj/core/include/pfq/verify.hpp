#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfq/exton.hpp"

namespace pfq {

enum class IdentityKind {
    DixonCell,      // closed form vs series oracle at one (i, j)
    Theorem21,      // transform left side vs closed-form right side
    ReductionChain, // left side vs mid-level double sum vs closed form
    General13,      // general transform, both sides
    Special,        // E31..E37
    Limiting,       // E41..E44
    Srivastava,
    Tables,         // aggregated coefficient-table audit
};

struct IdentityId {
    IdentityKind kind;
    int i = 0, j = 0;                        // cell kinds
    SpecialCase special = SpecialCase::E31;  // kind == Special
    LimitingCase limiting = LimitingCase::E41; // kind == Limiting

    std::string label() const;

    static IdentityId dixon_cell(int i, int j);
    static IdentityId theorem(int i, int j);
    static IdentityId reduction_chain(int i, int j);
    static IdentityId general();
    static IdentityId special_case(SpecialCase c);
    static IdentityId limiting_case(LimitingCase c);
    static IdentityId srivastava();
    static IdentityId tables();
};

/// A named parameter sweep for one identity. Fixed axes are cartesian
/// products of explicit sample lists; randomized identities (DixonCell
/// without explicit axes, General13) draw `samples` points from `seed`.
struct GridSpec {
    IdentityId identity;
    std::map<std::string, std::vector<double>> axes;
    double tolerance = 1e-8;
    // tighter bound applied to terminating samples of a DixonCell grid
    std::optional<double> terminating_tolerance;
    unsigned long seed = 20240915;
    int samples = 50;
};

enum class PointClass { Pass, Fail, PoleSkip, SlowSkip };

const char* to_string(PointClass c) noexcept;

struct PointOutcome {
    std::vector<std::pair<std::string, double>> coordinates;
    PointClass classification;
    std::optional<double> rel_residual; // present iff Pass or Fail
    std::string detail;                 // e.g. which gamma argument poled
};

struct Counts {
    long pass = 0, fail = 0, pole_skip = 0, slow_skip = 0;

    long total() const noexcept { return pass + fail + pole_skip + slow_skip; }
    long skips() const noexcept { return pole_skip + slow_skip; }
};

struct VerificationReport {
    GridSpec grid;
    std::vector<PointOutcome> outcomes;
    double max_residual = 0.0; // over Pass and Fail outcomes
    Counts counts;
    bool skip_warning = false; // skips above 20% of points
};

/// Evaluates the identity at every grid point. PoleError and kin become
/// PoleSkip outcomes with the offending argument recorded; MaxTermsExceeded
/// on either side becomes SlowSkip; everything else is Pass/Fail by residual
/// against the grid tolerance. Deterministic for a given spec (incl. seed).
VerificationReport run_grid(const GridSpec& spec);

/// Oracle audit of every printed coefficient cell: random valid (a, b, c)
/// per cell, a mix of terminating (b = -n, n <= 8) and non-terminating
/// draws, closed form against direct summation. Terminating samples are
/// held to the tighter tolerance.
VerificationReport validate_tables(int samples_per_cell, unsigned long seed,
                                   double tol_general = 1e-9,
                                   double tol_terminating = 1e-11);

/// All printed cells (j >= 0), row-major i = 3..-3.
std::vector<std::pair<int, int>> supported_cells();

/// Default sweep axes shared by the identity grids.
GridSpec default_theorem_grid(int i, int j);
GridSpec default_reduction_grid(int i, int j);
GridSpec default_general_grid();
GridSpec default_special_grid(SpecialCase c);
GridSpec default_limiting_grid(LimitingCase c);
GridSpec default_srivastava_grid();

} // namespace pfq
