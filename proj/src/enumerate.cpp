#include "permgrid/enumerate.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace permgrid {

const std::vector<Permutation>& ClassListing::level(int n) const {
    if (n < 1 || n > max_length) throw std::invalid_argument("level out of range");
    return by_length[n - 1];
}

std::vector<std::uint64_t> ClassListing::counts() const {
    std::vector<std::uint64_t> out;
    out.reserve(by_length.size());
    for (const auto& lvl : by_length) out.push_back(lvl.size());
    return out;
}

namespace {

// A new maximum inserted at gap p creates a forbidden pattern iff the pattern
// minus its own maximum straddles p the right way, so only that reduced
// pattern has to be searched. prefix_len counts the reduced-pattern entries
// that must sit strictly left of p.
struct ReducedPattern {
    std::vector<int> values;  // pattern with its maximum removed, relabelled
    int prefix_len;           // entries required left of the insertion gap
};

ReducedPattern reduce_pattern(const Permutation& beta) {
    int k = beta.size();
    int max_pos = 1;
    for (int i = 1; i <= k; ++i)
        if (beta.at(i) == k) max_pos = i;
    std::vector<int> rest;
    for (int i = 1; i <= k; ++i)
        if (i != max_pos) rest.push_back(beta.at(i));
    return {pattern_of(rest).values(), max_pos - 1};
}

// Does `host` contain `pat` with exactly `prefix_len` of the occurrence's
// entries at positions < gap (0-based gap into host)?
bool contains_split(const std::vector<int>& host, const std::vector<int>& pat, int prefix_len,
                    int gap) {
    int n = static_cast<int>(host.size());
    int k = static_cast<int>(pat.size());
    if (k == 0) return true;
    std::vector<int> pos(k, -1), chosen(k);
    int depth = 0;
    while (depth >= 0) {
        if (depth == k) return true;
        // Positional window for this pattern slot.
        int lo = (depth > 0) ? pos[depth - 1] + 1 : 0;
        if (depth >= prefix_len) lo = std::max(lo, gap);
        int hi = n - (k - depth);
        if (depth < prefix_len) hi = std::min(hi, gap - 1 - (prefix_len - 1 - depth));
        int start = std::max(lo, pos[depth] + 1);
        bool advanced = false;
        for (int p = start; p <= hi; ++p) {
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j)
                if ((chosen[j] < host[p]) != (pat[j] < pat[depth])) ok = false;
            if (!ok) continue;
            pos[depth] = p;
            chosen[depth] = host[p];
            ++depth;
            if (depth < k) pos[depth] = -1;
            advanced = true;
            break;
        }
        if (!advanced) {
            pos[depth] = -1;
            --depth;
        }
    }
    return false;
}

std::vector<Permutation> extend_level(const std::vector<Permutation>& parents,
                                      const std::vector<ReducedPattern>& reduced, int jobs) {
    auto extend_range = [&](std::size_t begin, std::size_t end, std::vector<Permutation>& out) {
        std::vector<int> child;
        for (std::size_t idx = begin; idx < end; ++idx) {
            const auto& parent = parents[idx].values();
            int n = static_cast<int>(parent.size());
            for (int gap = 0; gap <= n; ++gap) {
                bool ok = true;
                for (const auto& rp : reduced) {
                    if (contains_split(parent, rp.values, rp.prefix_len, gap)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                child.assign(parent.begin(), parent.begin() + gap);
                child.push_back(n + 1);
                child.insert(child.end(), parent.begin() + gap, parent.end());
                out.emplace_back(child);
            }
        }
    };

    std::vector<Permutation> level;
    if (jobs <= 1 || parents.size() < 64) {
        extend_range(0, parents.size(), level);
    } else {
        int workers = std::min<int>(jobs, std::thread::hardware_concurrency());
        workers = std::max(workers, 1);
        std::vector<std::vector<Permutation>> parts(workers);
        std::vector<std::thread> threads;
        std::size_t chunk = (parents.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::size_t begin = std::min(parents.size(), w * chunk);
            std::size_t end = std::min(parents.size(), begin + chunk);
            threads.emplace_back(extend_range, begin, end, std::ref(parts[w]));
        }
        for (auto& t : threads) t.join();
        for (auto& part : parts)
            for (auto& p : part) level.push_back(std::move(p));
    }
    std::sort(level.begin(), level.end());
    return level;
}

std::string basis_key(const std::vector<Permutation>& basis) {
    std::string key;
    for (const auto& b : basis) {
        if (!key.empty()) key += ',';
        key += b.to_string();
    }
    return key;
}

}  // namespace

std::string cache_file_name(const std::vector<Permutation>& basis, int n) {
    std::string key = basis_key(basis);
    for (char& ch : key)
        if (ch == ',') ch = '-';
    return "av_" + key + "_n" + std::to_string(n) + ".txt";
}

void write_cache_file(const std::string& path, const std::vector<Permutation>& basis, int n,
                      const std::vector<Permutation>& level) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write cache file " + path);
    os << "basis=" << basis_key(basis) << " n=" << n << '\n';
    for (const auto& p : level) os << p.to_string() << '\n';
}

std::vector<Permutation> read_cache_file(const std::string& path,
                                         const std::vector<Permutation>& basis, int n) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read cache file " + path);
    std::string header;
    std::getline(is, header);
    std::string expected = "basis=" + basis_key(basis) + " n=" + std::to_string(n);
    if (header != expected) throw std::runtime_error("cache header mismatch in " + path);
    std::vector<Permutation> level;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty()) level.push_back(Permutation::parse(line));
    }
    return level;
}

ClassListing enumerate_class(const std::vector<Permutation>& basis, int max_len,
                             const EnumerateOptions& options) {
    if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
    if (basis.empty()) throw std::invalid_argument("basis must be nonempty");
    for (const auto& b : basis)
        if (b.size() < 2) throw std::invalid_argument("basis patterns need length >= 2");

    ClassListing listing;
    listing.basis = basis;
    std::sort(listing.basis.begin(), listing.basis.end());
    listing.max_length = max_len;

    std::vector<ReducedPattern> reduced;
    for (const auto& b : listing.basis) reduced.push_back(reduce_pattern(b));

    namespace fs = std::filesystem;
    const bool use_cache = !options.cache_dir.empty();
    if (use_cache) fs::create_directories(options.cache_dir);

    listing.by_length.push_back({Permutation({1})});
    for (int n = 2; n <= max_len; ++n) {
        if (use_cache) {
            fs::path file = fs::path(options.cache_dir) / cache_file_name(listing.basis, n);
            if (fs::exists(file)) {
                listing.by_length.push_back(read_cache_file(file.string(), listing.basis, n));
                continue;
            }
        }
        auto level = extend_level(listing.by_length.back(), reduced, options.jobs);
        if (use_cache) {
            fs::path file = fs::path(options.cache_dir) / cache_file_name(listing.basis, n);
            write_cache_file(file.string(), listing.basis, n, level);
        }
        listing.by_length.push_back(std::move(level));
    }
    return listing;
}

std::vector<Permutation> simples_of(const ClassListing& listing, int n) {
    if (n < 1 || n > listing.max_length) throw std::invalid_argument("level out of range");
    std::vector<Permutation> out;
    for (const auto& p : listing.level(n))
        if (is_simple(p)) out.push_back(p);
    return out;
}

std::pair<std::uint64_t, std::uint64_t> decomposable_counts(const ClassListing& listing, int n) {
    std::uint64_t sum = 0, skew = 0;
    for (const auto& p : listing.level(n)) {
        switch (sum_skew_status(p)) {
            case Decomposability::sum_decomposable: ++sum; break;
            case Decomposability::skew_decomposable: ++skew; break;
            case Decomposability::indecomposable_both: break;
        }
    }
    return {sum, skew};
}

std::uint64_t sum_indecomposable_count(const std::vector<Permutation>& basis, int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    auto listing = enumerate_class(basis, n);
    std::uint64_t count = 0;
    for (const auto& p : listing.level(n))
        if (sum_skew_status(p) != Decomposability::sum_decomposable) ++count;
    return count;
}

}  // namespace permgrid
