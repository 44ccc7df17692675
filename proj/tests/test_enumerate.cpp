#include <doctest.h>

#include "permgrid/enumerate.hpp"
#include "permgrid/series.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <random>

using namespace permgrid;

namespace {

Permutation P(const std::string& text) { return Permutation::parse(text); }

const std::vector<Permutation> kBasis{P("3124"), P("4312")};

// Delete the 1-based position and renormalize ranks.
Permutation delete_entry(const Permutation& perm, int pos) {
    std::vector<int> rest;
    for (int i = 1; i <= perm.size(); ++i)
        if (i != pos) rest.push_back(perm.at(i));
    return pattern_of(rest);
}

}  // namespace

TEST_CASE("class counts") {
    auto listing = enumerate_class(kBasis, 6);
    CHECK(listing.counts() == std::vector<std::uint64_t>{1, 2, 6, 22, 88, 363});

    auto increasing = enumerate_class({P("21")}, 5);
    CHECK(increasing.counts() == std::vector<std::uint64_t>{1, 1, 1, 1, 1});

    auto catalan = enumerate_class({P("312")}, 6);
    CHECK(catalan.counts() == std::vector<std::uint64_t>{1, 2, 5, 14, 42, 132});

    CHECK_THROWS_AS(enumerate_class(kBasis, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_class({P("1")}, 3), std::invalid_argument);
}

TEST_CASE("parallel enumeration matches sequential") {
    auto sequential = enumerate_class(kBasis, 7);
    auto parallel = enumerate_class(kBasis, 7, {.jobs = 4});
    CHECK(sequential.by_length == parallel.by_length);
}

TEST_CASE("every listed permutation avoids the basis and closure holds downward") {
    auto listing = enumerate_class(kBasis, 8);
    std::mt19937 rng(7);
    for (int n = 2; n <= 8; ++n) {
        const auto& level = listing.level(n);
        CHECK(std::is_sorted(level.begin(), level.end()));
        bool avoid_ok = true, closure_ok = true;
        for (const auto& p : level) {
            avoid_ok = avoid_ok && avoids_all(p, kBasis);
            for (int pos = 1; pos <= n; ++pos) {
                auto smaller = delete_entry(p, pos);
                closure_ok = closure_ok && std::binary_search(listing.level(n - 1).begin(),
                                                              listing.level(n - 1).end(), smaller);
            }
        }
        CHECK(avoid_ok);
        CHECK(closure_ok);
        // Random permutations of the same length are either listed or fail
        // avoidance.
        std::vector<int> vals(n);
        std::iota(vals.begin(), vals.end(), 1);
        for (int trial = 0; trial < 20; ++trial) {
            std::shuffle(vals.begin(), vals.end(), rng);
            Permutation candidate(vals);
            bool listed = std::binary_search(level.begin(), level.end(), candidate);
            CHECK(listed == avoids_all(candidate, kBasis));
        }
    }
}

TEST_CASE("simples of the class") {
    auto listing = enumerate_class(kBasis, 9);
    CHECK(simples_of(listing, 4) == std::vector<Permutation>{P("2413"), P("3142")});
    CHECK(simples_of(listing, 3).empty());

    // Counts match the simple-permutation gf.
    auto s = named_gf(GfName::S, 9).integer_coefficients();
    for (int n = 4; n <= 9; ++n)
        CHECK(BigInt(simples_of(listing, n).size()) == s[n]);

    CHECK_THROWS_AS(simples_of(listing, 10), std::invalid_argument);
}

TEST_CASE("decomposable counts") {
    auto listing = enumerate_class(kBasis, 8);
    CHECK(decomposable_counts(listing, 2) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
    CHECK(decomposable_counts(listing, 4) == std::pair<std::uint64_t, std::uint64_t>{10, 10});
    CHECK(decomposable_counts(listing, 8) ==
          std::pair<std::uint64_t, std::uint64_t>{2456, 1935});
}

TEST_CASE("sum indecomposable avoiders of 312 are shifted Catalan") {
    CHECK(sum_indecomposable_count({P("312")}, 1) == 1);
    CHECK(sum_indecomposable_count({P("312")}, 4) == 5);
    CHECK(sum_indecomposable_count({P("312")}, 6) == 42);
    // Catalan(n-1) for n <= 8.
    auto c = catalan_c(8).integer_coefficients();
    for (int n = 2; n <= 8; ++n)
        CHECK(BigInt(sum_indecomposable_count({P("312")}, n)) == c[n - 1]);
}

TEST_CASE("listing cache round-trips and is honored") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "permgrid_cache_test";
    fs::remove_all(dir);

    auto first = enumerate_class(kBasis, 6, {.cache_dir = dir.string()});
    CHECK(fs::exists(dir / cache_file_name(first.basis, 6)));
    auto second = enumerate_class(kBasis, 6, {.cache_dir = dir.string()});
    CHECK(first.by_length == second.by_length);

    auto level = read_cache_file((dir / cache_file_name(first.basis, 5)).string(), first.basis, 5);
    CHECK(level == first.level(5));
    fs::remove_all(dir);
}
