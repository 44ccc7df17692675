#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace permgrid {

/// A permutation in one-line notation: values are a rearrangement of 1..n,
/// n >= 1. Indices and values are 1-based at the interface.
class Permutation {
public:
    explicit Permutation(std::vector<int> values);

    /// Parses either a space-free digit string ("234165", n <= 9) or a
    /// comma-separated list ("10,1,2,...").
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(values_.size()); }
    /// Value at 1-based position i.
    int at(int i) const { return values_[i - 1]; }
    const std::vector<int>& values() const { return values_; }

    std::string to_string() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

/// Consecutive positions whose entries form a consecutive range of values.
struct Interval {
    int start;   // 1-based
    int length;  // >= 1
    bool operator==(const Interval&) const = default;
};

/// True iff some subsequence of haystack is order-isomorphic to pattern.
bool contains(const Permutation& haystack, const Permutation& pattern);

/// True iff perm contains no basis element.
bool avoids_all(const Permutation& perm, std::span<const Permutation> basis);

/// A nontrivial interval (1 < length < n) if one exists; deterministic choice:
/// shortest first, then leftmost.
std::optional<Interval> find_nontrivial_interval(const Permutation& perm);

/// True iff the permutation has no nontrivial interval. 1, 12 and 21 count as
/// simple; no permutation of length 3 does.
bool is_simple(const Permutation& perm);

/// skeleton[blocks...]: each skeleton entry is replaced by a block
/// order-isomorphic to the corresponding argument.
Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& blocks);

enum class Decomposability {
    sum_decomposable,       // some proper prefix holds exactly the values 1..j
    skew_decomposable,      // some proper prefix holds exactly the top j values
    indecomposable_both,
};

Decomposability sum_skew_status(const Permutation& perm);

struct Decomposition {
    Permutation skeleton;
    std::vector<Permutation> blocks;
};

/// Unique decomposition into a simple skeleton and blocks. For skeleton 12
/// (resp. 21) the first block is sum (resp. skew) indecomposable; for longer
/// skeletons the blocks are the maximal proper intervals. Requires length >= 2.
Decomposition substitution_decompose(const Permutation& perm);

/// The pattern (rank sequence) of an arbitrary sequence of distinct integers.
Permutation pattern_of(std::span<const int> values);

}  // namespace permgrid
