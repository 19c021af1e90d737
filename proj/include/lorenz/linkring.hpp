#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lorenz/poly.hpp"
#include "lorenz/rational.hpp"
#include "lorenz/template_model.hpp"

namespace lorenz {

/// A cyclic word over {L,R} in canonical rotation: the lexicographically
/// least rotation with L < R. The computational carrier of a free-knot
/// symbol.
using Necklace = std::string;

Necklace canonical_necklace(std::string_view word);

/// Sorted by letter count, then lexicographically.
struct NecklaceOrder {
    bool operator()(const Necklace& a, const Necklace& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// A commutative product of necklaces (a free-link symbol, possibly with
/// repeats in exp-trace intermediates), kept sorted under NecklaceOrder.
using NecklaceMultiset = std::vector<Necklace>;

/// Rational-coefficient formal sum over necklace multisets; the empty
/// multiset is the ring unit. Within a necklace letters do not commute
/// (rotation classes only); between necklaces products commute.
class LinkRingElement {
  public:
    /// Graded order on multisets: total letters, size, then elementwise.
    struct TermOrder {
        bool operator()(const NecklaceMultiset& a,
                        const NecklaceMultiset& b) const;
    };
    using TermMap = std::map<NecklaceMultiset, Rational, TermOrder>;

    LinkRingElement() = default;
    static LinkRingElement one();

    void add_term(NecklaceMultiset necklaces, const Rational& coef);
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_integer_coefficients() const;

    LinkRingElement operator+(const LinkRingElement& o) const;
    LinkRingElement operator-(const LinkRingElement& o) const;
    LinkRingElement operator*(const LinkRingElement& o) const;
    LinkRingElement scaled(const Rational& c) const;
    bool operator==(const LinkRingElement& o) const {
        return terms_ == o.terms_;
    }

    /// Drops every term with total letter count above max_degree.
    LinkRingElement truncated(std::size_t max_degree) const;

    /// Signed sum in graded term order, e.g. `1 - (LR) - (LRR)`.
    std::string str() const;
    std::string to_json() const;

  private:
    TermMap terms_;
};

/// Signed sum of free-link symbols of I - A(L,R): every family of pairwise
/// node-disjoint simple cycles contributes (-1)^size times the multiset of
/// its cycle label necklaces; the empty family contributes 1.
LinkRingElement link_det(const TemplateModel& t,
                         std::size_t cycle_budget = 100000);

/// Replaces every necklace letterwise: L -> pattern of p.x, R -> pattern of
/// p.y, re-canonicalized. Coefficients unchanged.
LinkRingElement star_substitute(const KneadingPair& p,
                                const LinkRingElement& e);

/// exp(-sum_i tr(A(L,R)^i)/i) in the commutative necklace algebra, truncated
/// to total letter degree <= max_degree. Each closed walk enters the trace
/// as the multiset of simple cycles it traverses (so a walk w^k contributes
/// the k-fold power of the necklace of w). Throws NonIntegerCoefficient if
/// the truncation does not cancel to integers.
LinkRingElement exp_trace_series(const TemplateModel& t,
                                 std::size_t max_degree);

/// Necklaces map to u^{n_L} v^{n_R}, multisets to products, sums to sums.
BiPoly abelianize(const LinkRingElement& e);

struct WilliamsReport {
    bool pass = false;
    LinkRingElement lhs; // link_det of the product template
    LinkRingElement rhs; // link_det(outer) * star_substitute(outer, link_det(inner))
};

/// Checks link_det(T_{outer*inner}) =
/// link_det(T_outer) * star_substitute(outer, link_det(T_inner)).
WilliamsReport verify_williams_factorization(const KneadingPair& outer,
                                             const KneadingPair& inner,
                                             std::size_t cycle_budget = 100000);

} // namespace lorenz
