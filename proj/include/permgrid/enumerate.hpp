#pragma once

#include "permgrid/perm.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace permgrid {

/// Level-by-level listing of a pattern-avoidance class.
struct ClassListing {
    std::vector<Permutation> basis;                 // sorted
    std::vector<std::vector<Permutation>> by_length;  // by_length[n-1]: sorted level n
    int max_length = 0;

    const std::vector<Permutation>& level(int n) const;
    std::vector<std::uint64_t> counts() const;
};

struct EnumerateOptions {
    int jobs = 1;
    std::string cache_dir;  // empty: no cache
};

/// Enumerates avoiders of the basis up to max_len by repeatedly inserting a
/// new maximum into every gap of every shorter avoider (avoidance classes are
/// closed under deleting the maximum, so every avoider is reached exactly
/// once). Levels come back sorted.
ClassListing enumerate_class(const std::vector<Permutation>& basis, int max_len,
                             const EnumerateOptions& options = {});

/// The simple permutations of level n, sorted.
std::vector<Permutation> simples_of(const ClassListing& listing, int n);

/// (sum-decomposable count, skew-decomposable count) at level n.
std::pair<std::uint64_t, std::uint64_t> decomposable_counts(const ClassListing& listing, int n);

/// Number of length-n avoiders that are not sum decomposable.
std::uint64_t sum_indecomposable_count(const std::vector<Permutation>& basis, int n);

/// Cache file naming/IO, exposed for tests. Format: a header line
/// "basis=<patterns> n=<len>" followed by one serialized permutation per line.
std::string cache_file_name(const std::vector<Permutation>& basis, int n);
void write_cache_file(const std::string& path, const std::vector<Permutation>& basis, int n,
                      const std::vector<Permutation>& level);
std::vector<Permutation> read_cache_file(const std::string& path,
                                         const std::vector<Permutation>& basis, int n);

}  // namespace permgrid
