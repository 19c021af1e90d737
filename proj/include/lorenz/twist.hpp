#pragma once

#include <vector>

#include "lorenz/poly.hpp"
#include "lorenz/template_model.hpp"

namespace lorenz {

/// det(I - A(u, v)) with L-labeled entries as u and R-labeled as v, exact
/// integer coefficients (fraction-free integer determinants on a grid,
/// interpolated).
BiPoly twist_char_poly(const TemplateModel& t);

/// det(I - A(t^u_exp, t^v_exp)): the univariate specialization, computed
/// directly by integer determinants and interpolation.
UniPoly twist_char_poly_specialized(const TemplateModel& t, int u_exp,
                                    int v_exp);

/// 1 / det(I - A(t^2, t^2)) to order N.
TwistSeries sullivan_series(const TemplateModel& t, int order);

/// Orbit and twist counts: O_n closed orbits of least period n (Moebius
/// inversion over traces), T_q orbits of computed twist q (= O_{q/2} for
/// even q on sub-Lorenz templates), and the divisor-weighted sums
/// ScriptT_q = sum_{q'|q} q' T_{q'}.
struct TwistCensus {
    int order = 0;                // counts kept for q <= order
    std::vector<Int> orbits;      // orbits[n] = O_n, n <= order/2
    std::vector<Int> twist;       // twist[q] = T_q
    std::vector<Int> weighted;    // weighted[q] = ScriptT_q
};

TwistCensus orbit_census(const TemplateModel& t, int order);

struct SullivanExpReport {
    bool pass = false;
    TwistSeries lhs; // exp(sum ScriptT_q t^q / q)
    TwistSeries rhs; // sullivan_series

    SullivanExpReport(int order) : lhs(order), rhs(order) {}
};

/// exp(sum_{q=2..N} ScriptT_q t^q / q) against the series inverse of the
/// twist determinant, coefficientwise over exact rationals.
SullivanExpReport verify_sullivan_exp_identity(const TemplateModel& t,
                                               int order);

struct SullivanFactorReport {
    bool pass = false;
    UniPoly lhs; // det of the product template at (t^2, t^2)
    UniPoly rhs; // det_outer(t^2,t^2) * det_inner(t^{2|X|}, t^{2|Y|})
};

/// The determinant form of the twist-zeta factorization.
SullivanFactorReport verify_sullivan_factorization(const KneadingPair& outer,
                                                   const KneadingPair& inner);

} // namespace lorenz
