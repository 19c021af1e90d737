#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lorenz/rational.hpp"

namespace lorenz {

/// Integer polynomial in one variable t, exact coefficients.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(Int constant);

    static UniPoly monomial(Int coef, int exp);

    const std::map<int, Int>& terms() const { return terms_; }
    Int coeff(int exp) const;
    int degree() const; // -1 for the zero polynomial
    bool is_zero() const { return terms_.empty(); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return terms_ == o.terms_; }

    Int eval(const Int& x) const;

    /// Ascending exponent order, e.g. `1 - t^4 - t^6`.
    std::string str(const std::string& var = "t") const;

  private:
    void set(int exp, Int coef);
    std::map<int, Int> terms_;
};

/// Integer polynomial in commuting variables u, v.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(Int constant);

    static BiPoly monomial(Int coef, int u_exp, int v_exp);

    const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }
    Int coeff(int u_exp, int v_exp) const;
    bool is_zero() const { return terms_.empty(); }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    /// u -> t^u_exp, v -> t^v_exp.
    UniPoly specialize(int u_exp, int v_exp) const;

    /// Graded ascending order, e.g. `1 - u*v - u*v^2`.
    std::string str() const;

  private:
    void set(int ue, int ve, Int coef);
    std::map<std::pair<int, int>, Int> terms_;
};

/// Truncated power series in t with exact rational coefficients.
class TwistSeries {
  public:
    explicit TwistSeries(int order); // keeps t^0..t^order
    int order() const { return static_cast<int>(coef_.size()) - 1; }
    const Rational& coeff(int exp) const { return coef_[exp]; }
    void set_coeff(int exp, Rational c) { coef_[exp] = std::move(c); }

    TwistSeries operator+(const TwistSeries& o) const;
    TwistSeries operator*(const TwistSeries& o) const;
    bool operator==(const TwistSeries& o) const { return coef_ == o.coef_; }

    /// exp of a series with zero constant term.
    TwistSeries exp() const;

    /// Rendered to order N with `+ O(t^{N+1})` suffix.
    std::string str() const;

  private:
    std::vector<Rational> coef_;
};

/// 1/p as a series to the given order; throws NonUnitConstant unless the
/// constant term of p is 1.
TwistSeries inverse_series(const UniPoly& p, int order);

/// Determinant of an exact integer matrix by fraction-free (Bareiss)
/// elimination.
Int bareiss_determinant(std::vector<std::vector<Int>> m);

/// Exact polynomial through the points (0, values[0]), (1, values[1]), ...;
/// throws NonIntegerCoefficient if the interpolant is not integral.
UniPoly interpolate_integer_poly(const std::vector<Int>& values);

std::string rational_str(const Rational& r);

} // namespace lorenz
