#include "permgrid/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permgrid {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("empty permutation is not representable");
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
        if (v < 1 || v > static_cast<int>(values_.size()) || seen[v])
            throw std::invalid_argument("values are not a rearrangement of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> vals;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string item;
        while (std::getline(is, item, ',')) {
            if (item.empty()) throw std::invalid_argument("malformed permutation: " + text);
            vals.push_back(std::stoi(item));
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("malformed permutation: " + text);
            vals.push_back(ch - '0');
        }
    }
    return Permutation(std::move(vals));
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    if (size() <= 9) {
        for (int v : values_) os << v;
    } else {
        for (int i = 0; i < size(); ++i) {
            if (i) os << ',';
            os << values_[i];
        }
    }
    return os.str();
}

bool contains(const Permutation& haystack, const Permutation& pattern) {
    int n = haystack.size(), k = pattern.size();
    if (k > n) return false;
    // Exhaustive subsequence search with early pruning; pattern lengths in
    // this project are at most 4 and hosts stay small.
    std::vector<int> chosen(k);  // chosen values, in position order
    const auto& pat = pattern.values();
    const auto& host = haystack.values();

    auto consistent = [&](int depth) {
        // The new value host-at chosen[depth] must relate to every earlier
        // chosen value the way pat[depth] relates to pat[j].
        for (int j = 0; j < depth; ++j) {
            if ((chosen[j] < chosen[depth]) != (pat[j] < pat[depth])) return false;
        }
        return true;
    };

    // Iterative backtracking over increasing host positions.
    std::vector<int> pos(k, -1);
    int depth = 0;
    while (depth >= 0) {
        if (depth == k) return true;
        int start = pos[depth] + 1;
        if (depth > 0) start = std::max(start, pos[depth - 1] + 1);
        bool advanced = false;
        for (int p = start; p <= n - (k - depth); ++p) {
            pos[depth] = p;
            chosen[depth] = host[p];
            if (consistent(depth)) {
                ++depth;
                if (depth < k) pos[depth] = -1;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            pos[depth] = -1;
            --depth;
        }
    }
    return false;
}

bool avoids_all(const Permutation& perm, std::span<const Permutation> basis) {
    for (const auto& beta : basis)
        if (contains(perm, beta)) return false;
    return true;
}

std::optional<Interval> find_nontrivial_interval(const Permutation& perm) {
    int n = perm.size();
    // Shortest interval first, then leftmost, so results are deterministic.
    for (int len = 2; len <= n - 1; ++len) {
        for (int start = 1; start + len - 1 <= n; ++start) {
            int lo = perm.at(start), hi = perm.at(start);
            for (int i = start + 1; i < start + len; ++i) {
                lo = std::min(lo, perm.at(i));
                hi = std::max(hi, perm.at(i));
            }
            if (hi - lo == len - 1) return Interval{start, len};
        }
    }
    return std::nullopt;
}

bool is_simple(const Permutation& perm) { return !find_nontrivial_interval(perm).has_value(); }

Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& blocks) {
    if (static_cast<int>(blocks.size()) != skeleton.size())
        throw std::invalid_argument("block count must equal skeleton length");
    int k = skeleton.size();
    // value_offset[i]: total size of blocks whose skeleton value is below
    // skeleton value i+1.
    std::vector<int> sizes_by_value(k);
    for (int i = 0; i < k; ++i) sizes_by_value[skeleton.at(i + 1) - 1] = blocks[i].size();
    std::vector<int> value_offset(k, 0);
    for (int v = 1; v < k; ++v) value_offset[v] = value_offset[v - 1] + sizes_by_value[v - 1];

    std::vector<int> out;
    for (int i = 0; i < k; ++i) {
        int base = value_offset[skeleton.at(i + 1) - 1];
        for (int v : blocks[i].values()) out.push_back(base + v);
    }
    return Permutation(std::move(out));
}

Decomposability sum_skew_status(const Permutation& perm) {
    int n = perm.size();
    if (n == 1) return Decomposability::indecomposable_both;
    int lo = n + 1, hi = 0;
    for (int j = 1; j < n; ++j) {
        lo = std::min(lo, perm.at(j));
        hi = std::max(hi, perm.at(j));
        if (hi == j) return Decomposability::sum_decomposable;
        if (lo == n - j + 1) return Decomposability::skew_decomposable;
    }
    return Decomposability::indecomposable_both;
}

Permutation pattern_of(std::span<const int> values) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    std::vector<int> ranks(values.size());
    for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r) + 1;
    return Permutation(std::move(ranks));
}

namespace {

Permutation slice_pattern(const Permutation& perm, int start, int length) {
    return pattern_of(std::span<const int>(perm.values().data() + start - 1,
                                           static_cast<std::size_t>(length)));
}

// Longest proper interval starting at the given position.
int longest_proper_interval_at(const Permutation& perm, int start) {
    int n = perm.size();
    int lo = perm.at(start), hi = perm.at(start);
    int best = 1;
    for (int len = 2; start + len - 1 <= n; ++len) {
        if (len == n && start == 1) break;
        int v = perm.at(start + len - 1);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        if (hi - lo == len - 1) best = len;
    }
    return best;
}

}  // namespace

Decomposition substitution_decompose(const Permutation& perm) {
    int n = perm.size();
    if (n < 2) throw std::invalid_argument("decomposition needs length >= 2");

    auto status = sum_skew_status(perm);
    if (status != Decomposability::indecomposable_both) {
        bool sum = status == Decomposability::sum_decomposable;
        // Shortest qualifying prefix makes the first block indecomposable of
        // the matching kind, which pins the decomposition.
        int lo = n + 1, hi = 0;
        for (int j = 1; j < n; ++j) {
            lo = std::min(lo, perm.at(j));
            hi = std::max(hi, perm.at(j));
            bool split = sum ? (hi == j) : (lo == n - j + 1);
            if (split) {
                std::vector<Permutation> blocks{slice_pattern(perm, 1, j),
                                                slice_pattern(perm, j + 1, n - j)};
                return {Permutation(sum ? std::vector<int>{1, 2} : std::vector<int>{2, 1}),
                        std::move(blocks)};
            }
        }
        throw std::logic_error("decomposable permutation without a split point");
    }

    // Indecomposable both ways: the maximal proper intervals partition the
    // positions, and the quotient is simple.
    std::vector<Permutation> blocks;
    std::vector<int> representatives;
    int pos = 1;
    while (pos <= n) {
        int len = longest_proper_interval_at(perm, pos);
        blocks.push_back(slice_pattern(perm, pos, len));
        representatives.push_back(perm.at(pos));
        pos += len;
    }
    Permutation skeleton = pattern_of(representatives);
    if (!is_simple(skeleton))
        throw std::logic_error("substitution decomposition produced a non-simple skeleton");
    return {std::move(skeleton), std::move(blocks)};
}

}  // namespace permgrid
