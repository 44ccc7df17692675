#include "permgrid/gridclass.hpp"

#include "permgrid/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace permgrid {

GridName grid_name_from_string(const std::string& name) {
    std::string key;
    for (char ch : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (key == "g1") return GridName::g1;
    if (key == "g2") return GridName::g2;
    if (key == "g3") return GridName::g3;
    throw std::invalid_argument("unknown grid: " + name);
}

std::string grid_name_to_string(GridName name) {
    switch (name) {
        case GridName::g1: return "g1";
        case GridName::g2: return "g2";
        case GridName::g3: return "g3";
    }
    throw std::invalid_argument("unknown grid");
}

std::string GridSpec::alphabet() const {
    std::string out;
    for (const auto& cell : cells) out += cell.letter;
    return out;
}

const GridCell* GridSpec::cell_for(char letter) const {
    for (const auto& cell : cells)
        if (cell.letter == letter) return &cell;
    return nullptr;
}

GridSpec builtin_spec(GridName name) {
    using C = CellContent;
    GridSpec spec;
    switch (name) {
        case GridName::g1:
            spec.cols = 3;
            spec.rows = 2;
            spec.cells = {
                {'a', 1, 1, C::inc, 1, 1, -1, -1},
                {'b', 2, 1, C::dec, 1, 1, +1, -1},
                {'c', 2, 2, C::inc, 1, 1, +1, +1},
                {'d', 3, 2, C::dec, 3, 1, -1, +1},
            };
            break;
        case GridName::g2:
            spec.cols = 4;
            spec.rows = 4;
            spec.cells = {
                {'a', 1, 1, C::inc, 1, 1, -1, -1},
                {'b', 2, 2, C::inc, 2, 2, -1, -1},
                {'c', 3, 2, C::dec, 2, 2, +1, -1},
                {'d', 3, 4, C::inc, 2, 3, +1, +1},
                {'e', 4, 1, C::dec, 3, 1, +1, -1},
                {'f', 4, 3, C::inc, 3, 2, +1, +1},
            };
            break;
        case GridName::g3:
            spec.cols = 3;
            spec.rows = 3;
            spec.cells = {
                {'a', 1, 1, C::inc, 1, 1, -1, -1},
                {'b', 2, 1, C::dec, 1, 1, +1, -1},
                {'c', 2, 3, C::inc, 1, 2, +1, +1},
                {'d', 3, 2, C::point, 0, 0, 0, 0},
            };
            break;
    }
    return spec;
}

ValidationResult validate_spec(const GridSpec& spec) {
    ValidationResult result;
    auto fail = [&](const std::string& msg) {
        result.ok = false;
        result.diagnostics.push_back(msg);
    };

    std::string alphabet = spec.alphabet();
    std::string sorted = alphabet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail("duplicate cell letters");
    if (alphabet != sorted) fail("alphabet is not in letter order");

    for (const auto& cell : spec.cells) {
        std::string tag(1, cell.letter);
        if (cell.col < 1 || cell.col > spec.cols || cell.row < 1 || cell.row > spec.rows)
            fail("cell " + tag + " out of bounds");
        if (cell.content == CellContent::empty) fail("cell " + tag + " listed but empty");
        if (cell.content == CellContent::point) continue;

        if (std::abs(cell.dir_x) != 1 || std::abs(cell.dir_y) != 1)
            fail("cell " + tag + " direction is not a unit diagonal step");
        int slope = cell.content == CellContent::inc ? +1 : -1;
        if (cell.dir_x * cell.dir_y != slope)
            fail("cell " + tag + " direction sign does not match its slope");
        // The base must be a corner of the cell and base+dir the opposite one.
        bool base_corner = (cell.base_x == cell.col - 1 || cell.base_x == cell.col) &&
                           (cell.base_y == cell.row - 1 || cell.base_y == cell.row);
        int tip_x = cell.base_x + cell.dir_x, tip_y = cell.base_y + cell.dir_y;
        bool tip_corner = (tip_x == cell.col - 1 || tip_x == cell.col) &&
                          (tip_y == cell.row - 1 || tip_y == cell.row);
        if (!base_corner || !tip_corner)
            fail("cell " + tag + " segment does not traverse its cell");
    }

    // Point cells own their row and column.
    for (const auto& cell : spec.cells) {
        if (cell.content != CellContent::point) continue;
        for (const auto& other : spec.cells) {
            if (other.letter == cell.letter) continue;
            if (other.row == cell.row || other.col == cell.col)
                fail(std::string("point cell ") + cell.letter + " shares a row or column with " +
                     other.letter);
        }
    }

    // Consistent orientation: vertical signs agree within a row, horizontal
    // signs within a column.
    std::map<int, int> row_sign, col_sign;
    for (const auto& cell : spec.cells) {
        if (cell.content == CellContent::point) continue;
        auto [rit, rnew] = row_sign.emplace(cell.row, cell.dir_y);
        if (!rnew && rit->second != cell.dir_y)
            fail("row " + std::to_string(cell.row) + " mixes vertical directions");
        auto [cit, cnew] = col_sign.emplace(cell.col, cell.dir_x);
        if (!cnew && cit->second != cell.dir_x)
            fail("column " + std::to_string(cell.col) + " mixes horizontal directions");
    }
    return result;
}

namespace {

// Coordinates are scaled by 2(n+1) so everything stays in exact integers:
// segment entry i sits at base*2(n+1) + dir*2i, a point cell entry at the
// doubled cell centre.
void decode_into(const GridSpec& spec, const std::string& word, std::vector<long long>& xs,
                 std::vector<long long>& ys, std::vector<int>& out) {
    int n = static_cast<int>(word.size());
    long long scale = 2LL * (n + 1);
    xs.resize(n);
    ys.resize(n);
    for (int i = 0; i < n; ++i) {
        const GridCell* cell = spec.cell_for(word[i]);
        if (!cell) throw std::invalid_argument("letter outside the cell alphabet");
        if (cell->content == CellContent::point) {
            xs[i] = (2 * cell->col - 1) * (n + 1LL);
            ys[i] = (2 * cell->row - 1) * (n + 1LL);
        } else {
            xs[i] = cell->base_x * scale + 2LL * (i + 1) * cell->dir_x;
            ys[i] = cell->base_y * scale + 2LL * (i + 1) * cell->dir_y;
        }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return xs[a] < xs[b]; });
    for (int i = 0; i + 1 < n; ++i)
        if (xs[order[i]] == xs[order[i + 1]])
            throw std::logic_error("decode produced tied x coordinates");

    std::vector<int> rank(n);
    std::vector<int> by_y(n);
    std::iota(by_y.begin(), by_y.end(), 0);
    std::sort(by_y.begin(), by_y.end(), [&](int a, int b) { return ys[a] < ys[b]; });
    for (int i = 0; i + 1 < n; ++i)
        if (ys[by_y[i]] == ys[by_y[i + 1]])
            throw std::logic_error("decode produced tied y coordinates");
    for (int r = 0; r < n; ++r) rank[by_y[r]] = r + 1;

    out.resize(n);
    for (int i = 0; i < n; ++i) out[i] = rank[order[i]];
}

void check_point_multiplicity(const GridSpec& spec, const std::string& word) {
    for (const auto& cell : spec.cells) {
        if (cell.content != CellContent::point) continue;
        if (std::count(word.begin(), word.end(), cell.letter) > 1)
            throw std::invalid_argument(std::string("point cell ") + cell.letter +
                                        " used more than once");
    }
}

}  // namespace

Permutation decode(const GridSpec& spec, const std::string& word) {
    if (word.empty()) throw std::invalid_argument("cannot decode the empty word");
    check_point_multiplicity(spec, word);
    std::vector<long long> xs, ys;
    std::vector<int> out;
    decode_into(spec, word, xs, ys, out);
    return Permutation(std::move(out));
}

std::vector<Permutation> class_by_decode(const GridSpec& spec, int n, std::uint64_t max_words,
                                         int jobs) {
    if (n < 1) throw std::invalid_argument("word length must be at least 1");
    const std::string alphabet = spec.alphabet();
    const int k = static_cast<int>(alphabet.size());
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= k;
        if (total > max_words)
            throw budget_error("class_by_decode: " + std::to_string(k) + "^" + std::to_string(n) +
                               " words exceed the budget of " + std::to_string(max_words));
    }

    std::string point_letters;
    for (const auto& cell : spec.cells)
        if (cell.content == CellContent::point) point_letters += cell.letter;

    // Permutations of length <= 12 pack into one machine word for cheap
    // deduplication.
    if (n > 12) throw budget_error("class_by_decode supports lengths up to 12");

    auto decode_range = [&](std::uint64_t begin, std::uint64_t end,
                            std::vector<std::uint64_t>& codes) {
        std::string word(n, alphabet[0]);
        std::vector<long long> xs, ys;
        std::vector<int> out;
        for (std::uint64_t index = begin; index < end; ++index) {
            std::uint64_t v = index;
            for (int i = n - 1; i >= 0; --i) {
                word[i] = alphabet[v % k];
                v /= k;
            }
            bool valid = true;
            for (char pl : point_letters)
                if (std::count(word.begin(), word.end(), pl) > 1) valid = false;
            if (!valid) continue;
            decode_into(spec, word, xs, ys, out);
            std::uint64_t code = 0;
            for (int e : out) code = (code << 5) | static_cast<std::uint64_t>(e);
            codes.push_back(code);
        }
    };

    std::vector<std::uint64_t> codes;
    if (jobs <= 1 || total < 4096) {
        decode_range(0, total, codes);
    } else {
        int workers = std::max(1, std::min<int>(jobs, std::thread::hardware_concurrency()));
        std::vector<std::vector<std::uint64_t>> parts(workers);
        std::vector<std::thread> threads;
        std::uint64_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t begin = std::min<std::uint64_t>(total, w * chunk);
            std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
            threads.emplace_back(decode_range, begin, end, std::ref(parts[w]));
        }
        for (auto& t : threads) t.join();
        for (auto& part : parts) codes.insert(codes.end(), part.begin(), part.end());
    }

    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

    std::vector<Permutation> perms;
    perms.reserve(codes.size());
    std::vector<int> vals(n);
    for (std::uint64_t code : codes) {
        for (int i = n - 1; i >= 0; --i) {
            vals[i] = static_cast<int>(code & 31);
            code >>= 5;
        }
        perms.emplace_back(vals);
    }
    std::sort(perms.begin(), perms.end());
    return perms;
}

std::string format_grid_spec(const GridSpec& spec) {
    std::ostringstream os;
    for (const auto& cell : spec.cells) {
        os << cell.letter << ' ' << cell.col << ' ' << cell.row << ' ';
        switch (cell.content) {
            case CellContent::inc: os << "inc"; break;
            case CellContent::dec: os << "dec"; break;
            case CellContent::point: os << "point"; break;
            case CellContent::empty: os << "empty"; break;
        }
        if (cell.content == CellContent::inc || cell.content == CellContent::dec)
            os << ' ' << cell.base_x << ' ' << cell.base_y << ' ' << cell.dir_x << ' '
               << cell.dir_y;
        os << '\n';
    }
    return os.str();
}

GridSpec parse_grid_spec(const std::string& text) {
    GridSpec spec;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        GridCell cell;
        std::string content;
        if (!(ls >> cell.letter >> cell.col >> cell.row >> content))
            throw std::invalid_argument("malformed grid line: " + line);
        if (content == "point") {
            cell.content = CellContent::point;
        } else if (content == "inc" || content == "dec") {
            cell.content = content == "inc" ? CellContent::inc : CellContent::dec;
            if (!(ls >> cell.base_x >> cell.base_y >> cell.dir_x >> cell.dir_y))
                throw std::invalid_argument("segment cell missing orientation: " + line);
        } else {
            throw std::invalid_argument("unknown cell content: " + content);
        }
        spec.cols = std::max(spec.cols, cell.col);
        spec.rows = std::max(spec.rows, cell.row);
        spec.cells.push_back(cell);
    }
    if (spec.cells.empty()) throw std::invalid_argument("grid spec has no cells");
    std::sort(spec.cells.begin(), spec.cells.end(),
              [](const GridCell& a, const GridCell& b) { return a.letter < b.letter; });
    return spec;
}

}  // namespace permgrid
