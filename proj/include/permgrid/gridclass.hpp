#pragma once

#include "permgrid/perm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace permgrid {

enum class CellContent { empty, inc, dec, point };

enum class GridName { g1, g2, g3 };

GridName grid_name_from_string(const std::string& name);
std::string grid_name_to_string(GridName name);

/// One nonempty cell of a standard figure: its position (Cartesian, column
/// then row, both from 1), its content, and for segment cells the oriented
/// traversal (base corner plus a unit diagonal step toward the opposite
/// corner).
struct GridCell {
    char letter;
    int col = 0, row = 0;
    CellContent content = CellContent::empty;
    int base_x = 0, base_y = 0;  // lattice corner of the cell
    int dir_x = 0, dir_y = 0;    // each +-1 for segments, 0 for points
};

/// A gridded figure with a consistent orientation and an ordered cell
/// alphabet (one letter per nonempty cell, listed in alphabet order).
struct GridSpec {
    int cols = 0, rows = 0;
    std::vector<GridCell> cells;  // alphabet order

    std::string alphabet() const;
    const GridCell* cell_for(char letter) const;
};

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> diagnostics;
    explicit operator bool() const { return ok; }
};

GridSpec builtin_spec(GridName name);

/// Checks all structural invariants: cell bounds, point isolation, slope/
/// direction agreement, base-corner geometry, and row/column direction
/// consistency.
ValidationResult validate_spec(const GridSpec& spec);

/// Realizes the word-to-permutation map: letter i is placed on its cell's
/// segment at distance i/(n+1) from the base (points go to the cell centre),
/// and the permutation is read off by ranking heights left to right.
Permutation decode(const GridSpec& spec, const std::string& word);

/// All permutations decoded from length-n words, duplicates removed, sorted.
/// Words that would put two entries on one point cell are skipped. Throws
/// budget_error if |alphabet|^n exceeds max_words.
std::vector<Permutation> class_by_decode(const GridSpec& spec, int n,
                                         std::uint64_t max_words = 2'000'000, int jobs = 1);

/// Text form: one line per cell, "letter col row content base_x base_y dir_x
/// dir_y"; point cells omit base and direction.
std::string format_grid_spec(const GridSpec& spec);
GridSpec parse_grid_spec(const std::string& text);

}  // namespace permgrid
