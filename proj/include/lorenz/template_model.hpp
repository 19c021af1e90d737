#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lorenz/symbolic.hpp"

namespace lorenz {

enum class PointOrigin { FromX, FromY };

struct PartitionPoint {
    Word word;
    PointOrigin origin;
    std::size_t origin_index; // shift count within X or Y
    std::size_t rank;         // 1-based position in lexicographic order
};

enum class Side { LeftOfZero, RightOfZero };

struct Cell {
    std::size_t lower; // indices into TemplateModel::points
    std::size_t upper;
    Side side;
};

enum class Label : std::uint8_t { None, L, R };

char to_char(Label l);

/// Markov data of a sub-Lorenz template: the ordered shift set of the pair,
/// the cells between consecutive points (the (X,Y) gap removed), and the
/// 0/1 and L/R transition matrices.
struct TemplateModel {
    KneadingPair pair;
    std::vector<PartitionPoint> points;
    std::vector<Cell> cells;
    std::vector<std::vector<int>> transition;
    std::vector<std::vector<Label>> labels;

    std::size_t cell_count() const { return cells.size(); }
    const Word& cell_lower(std::size_t i) const {
        return points[cells[i].lower].word;
    }
    const Word& cell_upper(std::size_t i) const {
        return points[cells[i].upper].word;
    }
};

/// The |X|+|Y| shifts of the pair, sorted strictly increasing, ranks 1..n.
/// Throws DuplicatePoint when two shifts coincide (degenerate pair).
std::vector<PartitionPoint> partition_points(const KneadingPair& p);

/// Builds the template: cell i maps onto the interval
/// [shift(lower_i), shift(upper_i)] and transition[i][j] = 1 iff cell j is
/// contained in it. Throws TooSmall when |X|+|Y| < 3.
TemplateModel build_template(const KneadingPair& p);

std::string template_to_json(const TemplateModel& t);

enum class CellClass { Inherited, Band };

struct FactorDecomposition {
    KneadingPair outer;
    KneadingPair inner;
    TemplateModel product_template;
    std::vector<CellClass> cell_class;      // per product cell
    std::vector<std::size_t> band_block;    // block id per Band cell
    std::vector<std::size_t> point_block;   // block id per partition point
    std::vector<std::size_t> inherited_to_outer; // Inherited cell -> outer cell

    std::size_t inherited_count() const;
    std::size_t band_count() const;
};

/// Builds the template of outer*inner and exposes its renormalization block
/// structure: each partition point decomposes uniquely as an outer-shift
/// prefix plus a substituted tail; blocks are the provenance classes. Cells
/// interior to a block are Band, cells spanning two blocks are Inherited.
/// Verifies that the Inherited sub-digraph reproduces the outer template,
/// that no simple cycle mixes classes, and that Band cycle words are the
/// star-substituted inner cycle words. Throws StructureMismatch otherwise.
FactorDecomposition factor_structure(const KneadingPair& outer,
                                     const KneadingPair& inner,
                                     std::size_t cycle_budget = 100000);

} // namespace lorenz
