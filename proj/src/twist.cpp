#include "lorenz/twist.hpp"

#include <numeric>

#include "lorenz/errors.hpp"

namespace lorenz {

namespace {

std::size_t count_side(const TemplateModel& t, Side side) {
    std::size_t n = 0;
    for (const auto& c : t.cells)
        if (c.side == side) ++n;
    return n;
}

// I - A with the L/R labels evaluated at integers.
std::vector<std::vector<Int>> eval_matrix(const TemplateModel& t,
                                          const Int& u, const Int& v) {
    std::size_t n = t.cell_count();
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (t.transition[i][j])
                m[i][j] -= t.labels[i][j] == Label::L ? u : v;
    }
    return m;
}

} // namespace

BiPoly twist_char_poly(const TemplateModel& t) {
    int du = static_cast<int>(count_side(t, Side::LeftOfZero));
    int dv = static_cast<int>(count_side(t, Side::RightOfZero));
    // Evaluate on a (du+1) x (dv+1) grid, interpolate v first, then u.
    std::vector<UniPoly> rows; // polynomial in v for each u = a
    for (int a = 0; a <= du; ++a) {
        std::vector<Int> vals;
        for (int b = 0; b <= dv; ++b)
            vals.push_back(bareiss_determinant(eval_matrix(t, a, b)));
        rows.push_back(interpolate_integer_poly(vals));
    }
    BiPoly out;
    for (int ve = 0; ve <= dv; ++ve) {
        std::vector<Int> coeffs;
        for (int a = 0; a <= du; ++a) coeffs.push_back(rows[a].coeff(ve));
        UniPoly in_u = interpolate_integer_poly(coeffs);
        for (const auto& [ue, c] : in_u.terms())
            out = out + BiPoly::monomial(c, ue, ve);
    }
    return out;
}

UniPoly twist_char_poly_specialized(const TemplateModel& t, int u_exp,
                                    int v_exp) {
    int degree =
        u_exp * static_cast<int>(count_side(t, Side::LeftOfZero)) +
        v_exp * static_cast<int>(count_side(t, Side::RightOfZero));
    std::vector<Int> vals;
    for (int x = 0; x <= degree; ++x) {
        Int xu = 1, xv = 1;
        for (int k = 0; k < u_exp; ++k) xu *= x;
        for (int k = 0; k < v_exp; ++k) xv *= x;
        vals.push_back(bareiss_determinant(eval_matrix(t, xu, xv)));
    }
    return interpolate_integer_poly(vals);
}

TwistSeries sullivan_series(const TemplateModel& t, int order) {
    return inverse_series(twist_char_poly_specialized(t, 2, 2), order);
}

namespace {

std::vector<Int> trace_powers(const TemplateModel& t, int max_power) {
    std::size_t n = t.cell_count();
    std::vector<std::vector<Int>> base(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) base[i][j] = t.transition[i][j];
    std::vector<Int> traces(max_power + 1, 0);
    auto power = base;
    for (int k = 1; k <= max_power; ++k) {
        if (k > 1) {
            std::vector<std::vector<Int>> next(n, std::vector<Int>(n, 0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t l = 0; l < n; ++l) {
                    if (power[i][l] == 0) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        next[i][j] += power[i][l] * base[l][j];
                }
            power = std::move(next);
        }
        for (std::size_t i = 0; i < n; ++i) traces[k] += power[i][i];
    }
    return traces;
}

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

} // namespace

TwistCensus orbit_census(const TemplateModel& t, int order) {
    if (order < 2) throw TooSmall("census order must be at least 2");
    TwistCensus census;
    census.order = order;
    int max_period = order / 2;
    auto traces = trace_powers(t, max_period);
    census.orbits.assign(max_period + 1, 0);
    for (int n = 1; n <= max_period; ++n) {
        Int acc = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) acc += Int(moebius(d)) * traces[n / d];
        if (acc % n != 0)
            throw NonIntegerCoefficient("orbit count O_" + std::to_string(n) +
                                        " is not an integer");
        census.orbits[n] = acc / n;
    }
    // Every cell-to-cell passage contributes twist 2, so T_q = O_{q/2} for
    // even q and 0 for odd q.
    census.twist.assign(order + 1, 0);
    for (int q = 2; q <= order; q += 2) census.twist[q] = census.orbits[q / 2];
    census.weighted.assign(order + 1, 0);
    for (int q = 1; q <= order; ++q)
        for (int d = 1; d <= q; ++d)
            if (q % d == 0) census.weighted[q] += Int(d) * census.twist[d];
    return census;
}

SullivanExpReport verify_sullivan_exp_identity(const TemplateModel& t,
                                               int order) {
    SullivanExpReport report(order);
    if (order < 2) {
        TwistSeries one(order);
        one.set_coeff(0, Rational(1));
        report.lhs = one;
        report.rhs = one;
        report.pass = true;
        return report;
    }
    TwistCensus census = orbit_census(t, order);
    TwistSeries arg(order);
    for (int q = 2; q <= order; ++q)
        arg.set_coeff(q, Rational(census.weighted[q], Int(q)));
    report.lhs = arg.exp();
    report.rhs = sullivan_series(t, order);
    report.pass = report.lhs == report.rhs;
    return report;
}

SullivanFactorReport verify_sullivan_factorization(const KneadingPair& outer,
                                                   const KneadingPair& inner) {
    SullivanFactorReport report;
    KneadingPair product = star_pair(outer, inner);
    TemplateModel product_t = build_template(product);
    TemplateModel outer_t = build_template(outer);
    TemplateModel inner_t = build_template(inner);
    report.lhs = twist_char_poly_specialized(product_t, 2, 2);
    UniPoly outer_det = twist_char_poly_specialized(outer_t, 2, 2);
    UniPoly inner_det = twist_char_poly_specialized(
        inner_t, 2 * static_cast<int>(outer.x.length()),
        2 * static_cast<int>(outer.y.length()));
    report.rhs = outer_det * inner_det;
    report.pass = report.lhs == report.rhs;
    return report;
}

} // namespace lorenz
