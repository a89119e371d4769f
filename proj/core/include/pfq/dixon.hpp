#pragma once

#include <span>

#include "pfq/scalar.hpp"
#include "pfq/series.hpp"

namespace pfq {

/// One instance of the shifted well-poised 3F2(1) family:
/// 3F2(a, b, c; 1+a-b+i, 1+a-c+i+j; 1) addressed by integer offsets (i, j).
struct DixonCase {
    double a, b, c;
    int i, j;
};

struct DixonCoefficients {
    double A, B;
};

/// True when (i, j) is a printed table cell: i in [-3, 3], j in [0, 3],
/// excluding the gap cells (3,1) (3,2) (3,3) (2,3) (1,3).
bool pair_in_table(int i, int j) noexcept;

/// True when (i, j) lies in the table range but is a gap cell.
bool pair_is_gap(int i, int j) noexcept;

/// Printed cells plus the j < 0 cells reachable through the symmetry
/// f_{i,j}(a,b,c) = f_{i+j,-j}(a,c,b).
bool pair_supported(int i, int j) noexcept;

/// Coefficient polynomials of the two gamma-quotient branches, evaluated at
/// (a, b, c). Throws UnsupportedPairError outside the printed cells.
double coeff_A(int i, int j, double a, double b, double c);
double coeff_B(int i, int j, double a, double b, double c);
DixonCoefficients dixon_coefficients(int i, int j, double a, double b, double c);

/// Closed-form value of the 3F2(1) addressed by the case (j >= 0 cells; a
/// j < 0 case goes through symmetry_extend first). A pole in a denominator
/// gamma of either brace branch zeroes that branch; numerator poles raise.
double dixon_general(const DixonCase& cs, const PoleGuard& guard = {});

/// Maps a j < 0 case onto its j > 0 image: (i, j, a, b, c) -> (i+j, -j, a, c, b).
/// The two cases address the same series.
DixonCase symmetry_extend(const DixonCase& cs);

/// Series parameters of the 3F2 addressed by the case, for oracle summation
/// at unit argument.
PFQParams dixon_series_params(const DixonCase& cs);

/// Convergence excess of the series at z = 1; the closed form requires
/// a - 2b - 2c > -2 - 2i - j, i.e. excess > 0, unless b or c terminates it.
double dixon_validity_excess(const DixonCase& cs) noexcept;

/// Textual rendering of one table cell for audits. Gap cells carry null text.
struct CoefficientCellText {
    int i, j;
    const char* A;    // nullptr for gap cells
    const char* B;    // nullptr for gap cells
    const char* note; // nullptr unless the printed form needed correction
};

/// All 28 cells of the (i, j) range in row-major order (i = 3 down to -3,
/// j = 0..3), 23 of them carrying polynomial text.
std::span<const CoefficientCellText> coefficient_table_text() noexcept;

} // namespace pfq
