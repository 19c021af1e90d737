#include "lorenz/poly.hpp"

#include <sstream>

#include "lorenz/errors.hpp"

namespace lorenz {

namespace {

void append_term(std::ostringstream& out, bool& first, const Int& coef,
                 const std::string& body) {
    Int mag = coef < 0 ? Int(-coef) : coef;
    if (first) {
        if (coef < 0) out << "-";
        first = false;
    } else {
        out << (coef < 0 ? " - " : " + ");
    }
    if (mag != 1 || body.empty()) {
        out << mag;
        if (!body.empty()) out << "*";
    }
    out << body;
}

std::string power_str(const std::string& var, int exp) {
    if (exp == 0) return "";
    if (exp == 1) return var;
    return var + "^" + std::to_string(exp);
}

} // namespace

UniPoly::UniPoly(Int constant) { set(0, std::move(constant)); }

UniPoly UniPoly::monomial(Int coef, int exp) {
    UniPoly p;
    p.set(exp, std::move(coef));
    return p;
}

void UniPoly::set(int exp, Int coef) {
    if (coef == 0)
        terms_.erase(exp);
    else
        terms_[exp] = std::move(coef);
}

Int UniPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

int UniPoly::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    UniPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) - c);
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

Int UniPoly::eval(const Int& x) const {
    // Horner over the stored exponents, descending.
    Int acc = 0;
    int at = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (at < 0) {
            acc = it->second;
            at = it->first;
            continue;
        }
        for (int k = it->first; k < at; ++k) acc *= x;
        acc += it->second;
        at = it->first;
    }
    if (at > 0)
        for (int k = 0; k < at; ++k) acc *= x;
    return at < 0 ? Int(0) : acc;
}

std::string UniPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) append_term(out, first, c, power_str(var, e));
    return out.str();
}

BiPoly::BiPoly(Int constant) { set(0, 0, std::move(constant)); }

BiPoly BiPoly::monomial(Int coef, int u_exp, int v_exp) {
    BiPoly p;
    p.set(u_exp, v_exp, std::move(coef));
    return p;
}

void BiPoly::set(int ue, int ve, Int coef) {
    if (coef == 0)
        terms_.erase({ue, ve});
    else
        terms_[{ue, ve}] = std::move(coef);
}

Int BiPoly::coeff(int u_exp, int v_exp) const {
    auto it = terms_.find({u_exp, v_exp});
    return it == terms_.end() ? Int(0) : it->second;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.set(m.first, m.second, r.coeff(m.first, m.second) + c);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.set(m.first, m.second, r.coeff(m.first, m.second) - c);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            int ue = m1.first + m2.first, ve = m1.second + m2.second;
            r.set(ue, ve, r.coeff(ue, ve) + c1 * c2);
        }
    return r;
}

UniPoly BiPoly::specialize(int u_exp, int v_exp) const {
    UniPoly r;
    for (const auto& [m, c] : terms_)
        r = r + UniPoly::monomial(c, m.first * u_exp + m.second * v_exp);
    return r;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    // Graded order: total degree, then u-exponent.
    std::map<std::tuple<int, int, int>, Int> graded;
    for (const auto& [m, c] : terms_)
        graded[{m.first + m.second, m.first, m.second}] = c;
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : graded) {
        auto [deg, ue, ve] = key;
        std::string body = power_str("u", ue);
        std::string vb = power_str("v", ve);
        if (!body.empty() && !vb.empty()) body += "*";
        body += vb;
        append_term(out, first, c, body);
    }
    return out.str();
}

TwistSeries::TwistSeries(int order) : coef_(order + 1, Rational(0)) {}

TwistSeries TwistSeries::operator+(const TwistSeries& o) const {
    TwistSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) r.coef_[i] = coef_[i] + o.coef_[i];
    return r;
}

TwistSeries TwistSeries::operator*(const TwistSeries& o) const {
    TwistSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i)
        for (int j = 0; i + j <= r.order(); ++j)
            r.coef_[i + j] += coef_[i] * o.coef_[j];
    return r;
}

TwistSeries TwistSeries::exp() const {
    if (coef_[0] != Rational(0))
        throw NonIntegerCoefficient("exp requires zero constant term");
    TwistSeries result(order());
    result.coef_[0] = Rational(1);
    TwistSeries power(order());
    power.coef_[0] = Rational(1);
    Rational factorial(1);
    for (int k = 1; k <= order(); ++k) {
        power = power * *this;
        factorial *= Rational(k);
        bool nonzero = false;
        for (int i = 0; i <= order(); ++i) {
            result.coef_[i] += power.coef_[i] / factorial;
            nonzero = nonzero || power.coef_[i] != Rational(0);
        }
        if (!nonzero) break;
    }
    return result;
}

std::string rational_str(const Rational& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) out << "/" << r.denominator();
    return out.str();
}

std::string TwistSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= order(); ++i) {
        if (coef_[i] == Rational(0)) continue;
        Rational mag = coef_[i] < Rational(0) ? -coef_[i] : coef_[i];
        if (first) {
            if (coef_[i] < Rational(0)) out << "-";
            first = false;
        } else {
            out << (coef_[i] < Rational(0) ? " - " : " + ");
        }
        std::string body = power_str("t", i);
        if (mag != Rational(1) || body.empty()) {
            out << rational_str(mag);
            if (!body.empty()) out << "*";
        }
        out << body;
    }
    if (first) out << "0";
    out << " + O(t^" << order() + 1 << ")";
    return out.str();
}

TwistSeries inverse_series(const UniPoly& p, int order) {
    if (p.coeff(0) != 1)
        throw NonUnitConstant("series inversion needs constant term 1, got " +
                              p.coeff(0).str());
    TwistSeries r(order);
    r.set_coeff(0, Rational(1));
    for (int n = 1; n <= order; ++n) {
        Rational acc(0);
        for (const auto& [e, c] : p.terms()) {
            if (e == 0 || e > n) continue;
            acc += Rational(c) * r.coeff(n - e);
        }
        r.set_coeff(n, -acc);
    }
    return r;
}

Int bareiss_determinant(std::vector<std::vector<Int>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

UniPoly interpolate_integer_poly(const std::vector<Int>& values) {
    // Newton forward differences at nodes 0..k, then expansion in the
    // monomial basis with exact rationals.
    std::size_t k = values.size();
    std::vector<Rational> diag;
    std::vector<Rational> col;
    for (const Int& v : values) col.emplace_back(v);
    std::vector<std::vector<Rational>> table{col};
    diag.push_back(col[0]);
    for (std::size_t level = 1; level < k; ++level) {
        std::vector<Rational> next;
        const auto& prev_col = table.back();
        for (std::size_t i = 0; i + 1 < prev_col.size(); ++i)
            next.push_back((prev_col[i + 1] - prev_col[i]) /
                           Rational(Int(level)));
        table.push_back(next);
        diag.push_back(next[0]);
    }
    // p(x) = sum_j diag[j] * x(x-1)...(x-j+1)
    std::vector<Rational> coef(k, Rational(0));
    std::vector<Rational> basis{Rational(1)}; // falling factorial, expanded
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t d = 0; d < basis.size(); ++d)
            coef[d] += diag[j] * basis[d];
        // multiply basis by (x - j)
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        for (std::size_t d = 0; d < basis.size(); ++d) {
            next[d + 1] += basis[d];
            next[d] -= Rational(Int(j)) * basis[d];
        }
        basis = std::move(next);
    }
    UniPoly p;
    for (std::size_t d = 0; d < k; ++d) {
        if (coef[d] == Rational(0)) continue;
        if (!is_integer(coef[d]))
            throw NonIntegerCoefficient("interpolant coefficient " +
                                        rational_str(coef[d]) +
                                        " is not an integer");
        p = p + UniPoly::monomial(coef[d].numerator(), static_cast<int>(d));
    }
    return p;
}

} // namespace lorenz
