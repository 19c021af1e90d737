#include "lorenz/template_model.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lorenz/cycles.hpp"
#include "lorenz/errors.hpp"

namespace lorenz {

char to_char(Label l) {
    switch (l) {
        case Label::L: return 'L';
        case Label::R: return 'R';
        default: return '0';
    }
}

std::vector<PartitionPoint> partition_points(const KneadingPair& p) {
    std::vector<PartitionPoint> pts;
    for (std::size_t i = 0; i < p.x.length(); ++i)
        pts.push_back({shift(p.x, i), PointOrigin::FromX, i, 0});
    for (std::size_t j = 0; j < p.y.length(); ++j)
        pts.push_back({shift(p.y, j), PointOrigin::FromY, j, 0});
    std::stable_sort(pts.begin(), pts.end(),
                     [](const PartitionPoint& a, const PartitionPoint& b) {
                         return compare_words(a.word, b.word) ==
                                Ordering::Less;
                     });
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
        if (pts[k].word == pts[k + 1].word)
            throw DuplicatePoint("shifts " + format_word(pts[k].word) +
                                 " coincide in " + format_pair(p));
    for (std::size_t k = 0; k < pts.size(); ++k) pts[k].rank = k + 1;
    return pts;
}

namespace {

bool leq(const Word& a, const Word& b) {
    return compare_words(a, b) != Ordering::Greater;
}

} // namespace

TemplateModel build_template(const KneadingPair& p) {
    if (p.x.length() + p.y.length() < 3)
        throw TooSmall("pair " + format_pair(p) + " yields zero cells");
    TemplateModel t;
    t.pair = p;
    t.points = partition_points(p);

    for (std::size_t k = 0; k + 1 < t.points.size(); ++k) {
        const Word& lo = t.points[k].word;
        const Word& hi = t.points[k + 1].word;
        if (lo == p.x && hi == p.y) continue; // the gap over 0
        Side side = lo.letters().front() == Letter::L ? Side::LeftOfZero
                                                      : Side::RightOfZero;
        if ((hi.letters().front() == Letter::L) !=
            (side == Side::LeftOfZero))
            throw StructureMismatch("cell straddles 0 in " + format_pair(p));
        t.cells.push_back(Cell{k, k + 1, side});
    }

    std::size_t n = t.cells.size();
    t.transition.assign(n, std::vector<int>(n, 0));
    t.labels.assign(n, std::vector<Label>(n, Label::None));
    const Word zero = Word::finite({});
    auto is_point_or_zero = [&](const Word& w) {
        if (w == zero) return true;
        for (const auto& pt : t.points)
            if (pt.word == w) return true;
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        Word img_lo = shift(t.cell_lower(i), 1);
        Word img_hi = shift(t.cell_upper(i), 1);
        if (!is_point_or_zero(img_lo) || !is_point_or_zero(img_hi))
            throw StructureMismatch("shift closure fails in " +
                                    format_pair(p));
        for (std::size_t j = 0; j < n; ++j) {
            const Word& lo = t.cell_lower(j);
            const Word& hi = t.cell_upper(j);
            bool contained = leq(img_lo, lo) && leq(hi, img_hi);
            bool disjoint = leq(img_hi, lo) || leq(hi, img_lo);
            if (!contained && !disjoint)
                throw StructureMismatch("cell image is not Markov in " +
                                        format_pair(p));
            if (contained) {
                t.transition[i][j] = 1;
                t.labels[i][j] = t.cells[i].side == Side::LeftOfZero
                                     ? Label::L
                                     : Label::R;
            }
        }
        // Row contiguity: the image of a cell is an interval of cells.
        std::size_t first = n, last = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (t.transition[i][j]) {
                first = std::min(first, j);
                last = j;
            }
        for (std::size_t j = first; first < n && j <= last; ++j)
            if (!t.transition[i][j])
                throw StructureMismatch("row " + std::to_string(i) +
                                        " not contiguous in " +
                                        format_pair(p));
    }
    return t;
}

std::string template_to_json(const TemplateModel& t) {
    nlohmann::json j;
    j["pair"] = format_pair(t.pair);
    j["points"] = nlohmann::json::array();
    for (const auto& pt : t.points) j["points"].push_back(format_word(pt.word));
    j["cells"] = nlohmann::json::array();
    for (const auto& c : t.cells) {
        j["cells"].push_back(
            {{"lo", format_word(t.points[c.lower].word)},
             {"hi", format_word(t.points[c.upper].word)},
             {"side", c.side == Side::LeftOfZero ? "L" : "R"}});
    }
    j["transition"] = t.transition;
    j["labels"] = nlohmann::json::array();
    for (const auto& row : t.labels) {
        nlohmann::json r = nlohmann::json::array();
        for (Label l : row) r.push_back(std::string(1, to_char(l)));
        j["labels"].push_back(r);
    }
    return j.dump();
}

std::size_t FactorDecomposition::inherited_count() const {
    return static_cast<std::size_t>(
        std::count(cell_class.begin(), cell_class.end(),
                   CellClass::Inherited));
}

std::size_t FactorDecomposition::band_count() const {
    return cell_class.size() - inherited_count();
}

namespace {

// Block id of position `pos` inside star_word(outer, u): the outer pattern
// substituted for some letter of u, at offset p. X-blocks are 0..|X|-1,
// Y-blocks |X|..|X|+|Y|-1.
std::size_t provenance_block(const KneadingPair& outer, const Word& u,
                             std::size_t pos) {
    std::size_t at = 0;
    for (Letter l : u.letters()) {
        std::size_t len =
            (l == Letter::L ? outer.x.length() : outer.y.length());
        if (pos < at + len) {
            std::size_t p = pos - at;
            return l == Letter::L ? p : outer.x.length() + p;
        }
        at += len;
    }
    throw StructureMismatch("shift index outside the product expansion");
}

std::string cycle_label_word(const TemplateModel& t,
                             const std::vector<std::size_t>& cycle) {
    std::string w;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        Label l = t.labels[cycle[k]][cycle[(k + 1) % cycle.size()]];
        w.push_back(to_char(l));
    }
    return w;
}

std::string least_rotation(std::string w) {
    std::string best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

std::string substitute_word(const KneadingPair& outer, const std::string& w) {
    std::string out;
    for (char c : w)
        for (Letter l : (c == 'L' ? outer.x.letters() : outer.y.letters()))
            out.push_back(to_char(l));
    return out;
}

} // namespace

FactorDecomposition factor_structure(const KneadingPair& outer,
                                     const KneadingPair& inner,
                                     std::size_t cycle_budget) {
    FactorDecomposition d;
    d.outer = outer;
    d.inner = inner;
    KneadingPair product = star_pair(outer, inner);
    d.product_template = build_template(product);
    const TemplateModel& t = d.product_template;

    // Provenance blocks of the partition points.
    d.point_block.resize(t.points.size());
    for (std::size_t k = 0; k < t.points.size(); ++k) {
        const auto& pt = t.points[k];
        const Word& u = pt.origin == PointOrigin::FromX ? inner.x : inner.y;
        d.point_block[k] = provenance_block(outer, u, pt.origin_index);
    }

    // Blocks must be maximal runs of consecutive points, |X|+|Y| of them.
    std::size_t block_total = outer.x.length() + outer.y.length();
    {
        std::vector<bool> seen(block_total, false);
        std::size_t runs = 0;
        for (std::size_t k = 0; k < t.points.size(); ++k) {
            if (k == 0 || d.point_block[k] != d.point_block[k - 1]) {
                ++runs;
                if (seen[d.point_block[k]])
                    throw StructureMismatch("block " +
                                            std::to_string(d.point_block[k]) +
                                            " is not contiguous");
                seen[d.point_block[k]] = true;
            }
        }
        if (runs != block_total)
            throw StructureMismatch("expected " + std::to_string(block_total) +
                                    " blocks, found " + std::to_string(runs));
    }

    // Classify cells and map Inherited ones onto the outer template.
    d.cell_class.resize(t.cells.size());
    d.band_block.assign(t.cells.size(), 0);
    std::vector<std::size_t> inherited_cells;
    for (std::size_t i = 0; i < t.cells.size(); ++i) {
        std::size_t blo = d.point_block[t.cells[i].lower];
        std::size_t bhi = d.point_block[t.cells[i].upper];
        if (blo == bhi) {
            d.cell_class[i] = CellClass::Band;
            d.band_block[i] = blo;
        } else {
            d.cell_class[i] = CellClass::Inherited;
            inherited_cells.push_back(i);
        }
    }

    bool outer_buildable = outer.x.length() + outer.y.length() >= 3;
    if (outer_buildable) {
        TemplateModel outer_t = build_template(outer);
        if (inherited_cells.size() != outer_t.cells.size())
            throw StructureMismatch("inherited cell count mismatch");
        d.inherited_to_outer = inherited_cells;
        for (std::size_t a = 0; a < inherited_cells.size(); ++a) {
            if (t.cells[inherited_cells[a]].side != outer_t.cells[a].side)
                throw StructureMismatch("inherited cell side mismatch");
            for (std::size_t b = 0; b < inherited_cells.size(); ++b)
                if (t.transition[inherited_cells[a]][inherited_cells[b]] !=
                    outer_t.transition[a][b])
                    throw StructureMismatch(
                        "inherited sub-digraph differs from the outer "
                        "template");
        }
    } else if (!inherited_cells.empty()) {
        throw StructureMismatch("inherited cells without an outer template");
    }

    // No simple cycle may mix Inherited and Band cells, and the Band cycle
    // words must be the star-substituted inner cycle words.
    auto cycles = simple_cycles(t.transition, cycle_budget);
    std::map<std::string, std::size_t> band_words;
    for (const auto& c : cycles) {
        bool any_band = false, any_inh = false;
        for (std::size_t v : c)
            (d.cell_class[v] == CellClass::Band ? any_band : any_inh) = true;
        if (any_band && any_inh)
            throw StructureMismatch("simple cycle mixes cell classes");
        if (any_band) ++band_words[least_rotation(cycle_label_word(t, c))];
    }
    std::map<std::string, std::size_t> expected;
    if (inner.x.length() + inner.y.length() >= 3) {
        TemplateModel inner_t = build_template(inner);
        for (const auto& c : simple_cycles(inner_t.transition, cycle_budget))
            ++expected[least_rotation(
                substitute_word(outer, cycle_label_word(inner_t, c)))];
    }
    if (band_words != expected)
        throw StructureMismatch(
            "band cycle words differ from the substituted inner cycle words");

    return d;
}

} // namespace lorenz
