#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lorenz/cycles.hpp"
#include "lorenz/errors.hpp"
#include "lorenz/template_model.hpp"

using namespace lorenz;

namespace {

std::vector<std::string> point_words(const std::vector<PartitionPoint>& pts) {
    std::vector<std::string> out;
    for (const auto& p : pts) out.push_back(format_word(p.word));
    return out;
}

// Buildable pairs of the small corpus: admissible and with pairwise
// distinct shifts.
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

TEST_CASE("partition points reproduce the worked orderings") {
    auto pts = partition_points(verified_pair("LRR0,RL0"));
    CHECK(point_words(pts) ==
          std::vector<std::string>{"L0", "LRR0", "RL0", "R0", "RR0"});
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(pts[i].rank == i + 1);

    // The 9-point order: sigma^1 Y, sigma^4 X, sigma^2 Y, X, Y, sigma^3 X,
    // sigma^3 Y, sigma^2 X, sigma^1 X.
    auto pts9 = partition_points(verified_pair("LRRRL0,RLLR0"));
    std::vector<std::pair<PointOrigin, std::size_t>> got;
    for (const auto& p : pts9) got.emplace_back(p.origin, p.origin_index);
    std::vector<std::pair<PointOrigin, std::size_t>> expected{
        {PointOrigin::FromY, 1}, {PointOrigin::FromX, 4},
        {PointOrigin::FromY, 2}, {PointOrigin::FromX, 0},
        {PointOrigin::FromY, 0}, {PointOrigin::FromX, 3},
        {PointOrigin::FromY, 3}, {PointOrigin::FromX, 2},
        {PointOrigin::FromX, 1}};
    CHECK(got == expected);

    auto pts2 = partition_points(verified_pair("L0,R0"));
    CHECK(point_words(pts2) == std::vector<std::string>{"L0", "R0"});
}

TEST_CASE("duplicate shifts are rejected") {
    // (LRL0,RLL0) is admissible but sigma^2 X = sigma^2 Y = L0.
    KneadingPair p = verified_pair("LRL0,RLL0");
    CHECK_THROWS_AS(partition_points(p), DuplicatePoint);
}

TEST_CASE("the worked 3x3 template") {
    TemplateModel t = build_template(verified_pair("LRR0,RL0"));
    REQUIRE(t.cell_count() == 3);
    CHECK(t.transition == std::vector<std::vector<int>>{
                              {0, 1, 1}, {1, 0, 0}, {0, 1, 0}});
    using L = Label;
    CHECK(t.labels == std::vector<std::vector<Label>>{
                          {L::None, L::L, L::L},
                          {L::R, L::None, L::None},
                          {L::None, L::R, L::None}});
    CHECK(t.cells[0].side == Side::LeftOfZero);
    CHECK(t.cells[1].side == Side::RightOfZero);
    CHECK(t.cells[2].side == Side::RightOfZero);
}

TEST_CASE("the 2-cell template") {
    TemplateModel t = build_template(verified_pair("LR0,RL0"));
    REQUIRE(t.cell_count() == 2);
    CHECK(t.transition == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK(t.labels[0][1] == Label::L);
    CHECK(t.labels[1][0] == Label::R);
}

TEST_CASE("too small pairs have no template") {
    CHECK_THROWS_AS(build_template(verified_pair("L0,R0")), TooSmall);
}

TEST_CASE("template invariants over the corpus") {
    for (const auto& p : buildable_corpus(4, 4)) {
        TemplateModel t = build_template(p);
        CHECK(t.cell_count() == p.x.length() + p.y.length() - 2);
        // X and Y are adjacent in rank.
        std::size_t rank_x = 0, rank_y = 0;
        for (const auto& pt : t.points) {
            if (pt.word == p.x) rank_x = pt.rank;
            if (pt.word == p.y) rank_y = pt.rank;
        }
        CHECK(rank_x + 1 == rank_y);
        for (std::size_t i = 0; i < t.cell_count(); ++i) {
            bool left = t.cells[i].side == Side::LeftOfZero;
            CHECK((t.cell_lower(i).letters().front() == Letter::L) == left);
            for (std::size_t j = 0; j < t.cell_count(); ++j) {
                if (!t.transition[i][j]) {
                    CHECK(t.labels[i][j] == Label::None);
                } else {
                    CHECK(t.labels[i][j] == (left ? Label::L : Label::R));
                }
            }
        }
    }
}

TEST_CASE("template JSON shape") {
    std::string j = template_to_json(build_template(verified_pair("LR0,RL0")));
    CHECK(j.find("\"pair\":\"(LR0,RL0)\"") != std::string::npos);
    CHECK(j.find("\"transition\":[[0,1],[1,0]]") != std::string::npos);
    CHECK(j.find("\"side\":\"L\"") != std::string::npos);
}

TEST_CASE("simple cycle enumeration") {
    // Two 2-cycles and the 3-cycle in a triangle with back edges.
    std::vector<std::vector<int>> adj{{0, 1, 1}, {1, 0, 0}, {0, 1, 0}};
    auto cycles = simple_cycles(adj, 100);
    CHECK(cycles.size() == 2);
    std::set<std::vector<std::size_t>> got(cycles.begin(), cycles.end());
    CHECK(got.count({0, 1}) == 1);
    CHECK(got.count({0, 2, 1}) == 1);

    CHECK_THROWS_AS(simple_cycles(adj, 1), CycleBudgetExceeded);
}

TEST_CASE("factor structure of the worked example") {
    FactorDecomposition d = factor_structure(verified_pair("LRRRL0,RLLR0"),
                                             verified_pair("LRR0,RL0"));
    CHECK(d.product_template.cell_count() == 20);
    CHECK(d.inherited_count() == 7);
    CHECK(d.band_count() == 13);
    CHECK(d.product_template.points.size() == 22);

    // Block shift law: shifting block p's point set lands in block p+1.
    const auto& t = d.product_template;
    std::size_t x_len = 5, y_len = 4;
    for (std::size_t k = 0; k < t.points.size(); ++k) {
        std::size_t block = d.point_block[k];
        std::size_t p = block < x_len ? block : block - x_len;
        std::size_t z_len = block < x_len ? x_len : y_len;
        if (p + 1 >= z_len) continue; // terminal offset
        Word shifted = shift(t.points[k].word, 1);
        bool found = false;
        for (std::size_t m = 0; m < t.points.size(); ++m)
            if (t.points[m].word == shifted) {
                CHECK(d.point_block[m] == block + 1);
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("factor structure with the trivial inner pair") {
    FactorDecomposition d = factor_structure(verified_pair("LRR0,RL0"),
                                             verified_pair("L0,R0"));
    CHECK(d.product_template.pair == verified_pair("LRR0,RL0"));
    CHECK(d.band_count() == 0);
    CHECK(d.inherited_count() == 3);
}

TEST_CASE("factor structure of the doubled 2-cycle pair") {
    FactorDecomposition d = factor_structure(verified_pair("LR0,RL0"),
                                             verified_pair("LR0,RL0"));
    CHECK(d.product_template.cell_count() == 6);
    CHECK(d.inherited_count() == 2);
    CHECK(d.band_count() == 4);
}

TEST_CASE("factor structure sweep over the small corpus") {
    auto corpus = buildable_corpus(3, 3);
    for (const auto& outer : corpus) {
        for (const auto& inner : corpus) {
            KneadingPair product = star_pair(outer, inner);
            if (product.x.length() + product.y.length() < 3) continue;
            try {
                partition_points(product);
            } catch (const DuplicatePoint&) {
                continue;
            }
            FactorDecomposition d = factor_structure(outer, inner);
            CHECK(d.inherited_count() ==
                  outer.x.length() + outer.y.length() - 2);
            CHECK(d.band_count() ==
                  product.x.length() + product.y.length() -
                      outer.x.length() - outer.y.length());
        }
    }
}
