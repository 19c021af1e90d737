#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "lorenz/errors.hpp"
#include "lorenz/linkring.hpp"
#include "lorenz/twist.hpp"

using namespace lorenz;

namespace {

// Buildable pairs: admissible with pairwise distinct shifts and at least
// three letters total.
std::vector<KneadingPair> buildable_corpus(std::size_t max_x,
                                           std::size_t max_y) {
    std::vector<KneadingPair> out;
    for (const auto& p : enumerate_admissible_pairs(max_x, max_y)) {
        if (p.x.length() + p.y.length() < 3) continue;
        try {
            partition_points(p);
        } catch (const DuplicatePoint&) {
            continue;
        }
        out.push_back(p);
    }
    return out;
}

} // namespace

TEST_CASE("canonical necklace") {
    CHECK(canonical_necklace("LR") == "LR");
    CHECK(canonical_necklace("RL") == "LR");
    CHECK(canonical_necklace("RLL") == "LLR");
    CHECK(canonical_necklace("LRRL") == "LLRR");
    CHECK(canonical_necklace("L") == "L");
    CHECK_THROWS_AS(canonical_necklace(""), EmptyWord);
    CHECK_THROWS_AS(canonical_necklace("LXR"), MalformedWord);
}

TEST_CASE("canonical necklace is rotation invariant") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<std::size_t> len(1, 12);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 300; ++trial) {
        std::string w;
        std::size_t n = len(rng);
        for (std::size_t i = 0; i < n; ++i) w.push_back(bit(rng) ? 'R' : 'L');
        Necklace canon = canonical_necklace(w);
        for (std::size_t k = 0; k < n; ++k) {
            std::string rot = w.substr(k) + w.substr(0, k);
            CHECK(canonical_necklace(rot) == canon);
            CHECK(canon <= rot); // least rotation
        }
    }
}

TEST_CASE("link ring arithmetic and rendering") {
    LinkRingElement e = LinkRingElement::one();
    e.add_term({"LR"}, Rational(-1));
    e.add_term({"LRR"}, Rational(-1));
    CHECK(e.str() == "1 - (LR) - (LRR)");
    CHECK(e.has_integer_coefficients());

    LinkRingElement f;
    f.add_term({}, Rational(1));
    f.add_term({"LLRR"}, Rational(-1));
    LinkRingElement prod = LinkRingElement::one() - LinkRingElement{};
    prod = e * f;
    CHECK(prod.str() ==
          "1 - (LR) - (LRR) - (LLRR) + (LR)(LLRR) + (LRR)(LLRR)");

    // Cancellation removes terms entirely.
    LinkRingElement g = e - e;
    CHECK(g.is_zero());
    CHECK(g.str() == "0");

    // Multiset terms are kept sorted regardless of insertion order.
    LinkRingElement h1, h2;
    h1.add_term({"LLRR", "LR"}, Rational(1));
    h2.add_term({"LR", "LLRR"}, Rational(1));
    CHECK(h1 == h2);

    CHECK(e.truncated(2).str() == "1 - (LR)");
    CHECK(e.scaled(Rational(1, 2)).has_integer_coefficients() == false);
}

TEST_CASE("link-det of the worked 3x3 template") {
    LinkRingElement d = link_det(build_template(verified_pair("LRR0,RL0")));
    CHECK(d.str() == "1 - (LR) - (LRR)");
}

TEST_CASE("link-det of small templates") {
    CHECK(link_det(build_template(verified_pair("LR0,RL0"))).str() ==
          "1 - (LR)");
    CHECK(link_det(build_template(verified_pair("LRRL0,RLLR0"))).str() ==
          "1 - (LR) - (LLRR) + (LR)(LLRR)");
}

TEST_CASE("link-det structure over the corpus") {
    for (const auto& p : buildable_corpus(4, 4)) {
        LinkRingElement d = link_det(build_template(p));
        CHECK(d.has_integer_coefficients());
        // Constant term 1 (the empty family).
        auto it = d.terms().find(NecklaceMultiset{});
        REQUIRE(it != d.terms().end());
        CHECK(it->second == Rational(1));
    }
}

TEST_CASE("link-det respects the cycle budget") {
    TemplateModel t = build_template(verified_pair("LRRRL0,RLLR0"));
    CHECK_THROWS_AS(link_det(t, 2), CycleBudgetExceeded);
}

TEST_CASE("star substitution of necklaces") {
    LinkRingElement e = LinkRingElement::one();
    e.add_term({"LR"}, Rational(-1));

    LinkRingElement s1 = star_substitute(verified_pair("LR0,RL0"), e);
    CHECK(s1.str() == "1 - (LLRR)");

    LinkRingElement s2 = star_substitute(verified_pair("LRRRL0,RLLR0"), e);
    CHECK(s2.str() == "1 - (LLRLRRRLR)");

    // Substituting the identity pair changes nothing.
    LinkRingElement e2 = LinkRingElement::one();
    e2.add_term({"LR", "LRR"}, Rational(2));
    CHECK(star_substitute(verified_pair("L0,R0"), e2) == e2);
}

TEST_CASE("exp-trace series reproduces the link-det") {
    TemplateModel two = build_template(verified_pair("LR0,RL0"));
    CHECK(exp_trace_series(two, 0) == LinkRingElement::one());
    CHECK(exp_trace_series(two, 8).str() == "1 - (LR)");

    TemplateModel three = build_template(verified_pair("LRR0,RL0"));
    LinkRingElement e = exp_trace_series(three, 6);
    CHECK(e == link_det(three).truncated(6));
    CHECK(e.str() == "1 - (LR) - (LRR)");
}

TEST_CASE("exp-trace equals link-det over the corpus") {
    for (const auto& p : buildable_corpus(3, 3)) {
        TemplateModel t = build_template(p);
        CHECK(exp_trace_series(t, 10) == link_det(t).truncated(10));
    }
}

TEST_CASE("abelianization matches the twist characteristic polynomial") {
    LinkRingElement d = link_det(build_template(verified_pair("LRR0,RL0")));
    BiPoly b = abelianize(d);
    CHECK(b.str() == "1 - u*v - u*v^2");

    for (const auto& p : buildable_corpus(4, 4)) {
        TemplateModel t = build_template(p);
        CHECK(abelianize(link_det(t)) == twist_char_poly(t));
    }
}

TEST_CASE("Williams factorization on worked products") {
    WilliamsReport doubled = verify_williams_factorization(
        verified_pair("LR0,RL0"), verified_pair("LR0,RL0"));
    CHECK(doubled.pass);
    CHECK(doubled.lhs.str() == "1 - (LR) - (LLRR) + (LR)(LLRR)");

    WilliamsReport worked = verify_williams_factorization(
        verified_pair("LRRRL0,RLLR0"), verified_pair("LRR0,RL0"));
    CHECK(worked.pass);
    CHECK(worked.lhs == worked.rhs);
}

TEST_CASE("Williams factorization over composable combinations") {
    auto corpus = buildable_corpus(3, 3);
    int checked = 0;
    for (const auto& outer : corpus) {
        for (const auto& inner : corpus) {
            KneadingPair product = star_pair(outer, inner);
            try {
                partition_points(product);
            } catch (const DuplicatePoint&) {
                continue;
            }
            WilliamsReport r = verify_williams_factorization(outer, inner);
            CHECK(r.pass);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("link ring JSON") {
    LinkRingElement d = link_det(build_template(verified_pair("LR0,RL0")));
    std::string j = d.to_json();
    CHECK(j.find("\"terms\"") != std::string::npos);
    CHECK(j.find("\"necklaces\":[\"LR\"]") != std::string::npos);
    CHECK(j.find("\"coef\":\"-1\"") != std::string::npos);
}
