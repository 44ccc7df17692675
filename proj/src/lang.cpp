#include "permgrid/lang.hpp"

#include "permgrid/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace permgrid {

namespace rx {

namespace {
RegexPtr make(Regex::Kind kind, char literal = 0, std::string char_set = {},
              std::vector<RegexPtr> children = {}) {
    auto node = std::make_shared<Regex>();
    node->kind = kind;
    node->literal = literal;
    node->char_set = std::move(char_set);
    node->children = std::move(children);
    return node;
}
}

RegexPtr eps() { return make(Regex::Kind::epsilon); }
RegexPtr lit(char c) { return make(Regex::Kind::literal, c); }
RegexPtr cls(std::string chars) { return make(Regex::Kind::char_class, 0, std::move(chars)); }

RegexPtr word(const std::string& text) {
    std::vector<RegexPtr> parts;
    for (char ch : text) parts.push_back(lit(ch));
    return cat(std::move(parts));
}

RegexPtr cat(std::vector<RegexPtr> parts) {
    return make(Regex::Kind::concat, 0, {}, std::move(parts));
}
RegexPtr alt(std::vector<RegexPtr> parts) {
    return make(Regex::Kind::alternation, 0, {}, std::move(parts));
}
RegexPtr star(RegexPtr inner) { return make(Regex::Kind::star, 0, {}, {std::move(inner)}); }
RegexPtr plus(RegexPtr inner) { return make(Regex::Kind::plus, 0, {}, {std::move(inner)}); }

}  // namespace rx

// ---------------------------------------------------------------------------
// Thompson construction.

namespace {

struct Nfa {
    // Transition on a set of letters (stored as a string) or epsilon (empty
    // set with is_epsilon).
    struct Edge {
        int to;
        bool is_epsilon;
        std::string letters;
    };
    std::vector<std::vector<Edge>> adjacency;
    int start = 0;
    int accept = 0;

    int add_state() {
        adjacency.emplace_back();
        return static_cast<int>(adjacency.size()) - 1;
    }
    void add_epsilon(int from, int to) { adjacency[from].push_back({to, true, {}}); }
    void add_letters(int from, int to, std::string letters) {
        adjacency[from].push_back({to, false, std::move(letters)});
    }
};

struct Fragment {
    int start, accept;
};

Fragment build_fragment(Nfa& nfa, const Regex& node, const std::string& alphabet) {
    switch (node.kind) {
        case Regex::Kind::epsilon: {
            int s = nfa.add_state(), t = nfa.add_state();
            nfa.add_epsilon(s, t);
            return {s, t};
        }
        case Regex::Kind::literal: {
            if (alphabet.find(node.literal) == std::string::npos)
                throw std::invalid_argument("pattern letter outside the alphabet");
            int s = nfa.add_state(), t = nfa.add_state();
            nfa.add_letters(s, t, std::string(1, node.literal));
            return {s, t};
        }
        case Regex::Kind::char_class: {
            for (char ch : node.char_set)
                if (alphabet.find(ch) == std::string::npos)
                    throw std::invalid_argument("pattern letter outside the alphabet");
            int s = nfa.add_state(), t = nfa.add_state();
            nfa.add_letters(s, t, node.char_set);
            return {s, t};
        }
        case Regex::Kind::concat: {
            if (node.children.empty()) return build_fragment(nfa, *rx::eps(), alphabet);
            Fragment acc = build_fragment(nfa, *node.children[0], alphabet);
            for (std::size_t i = 1; i < node.children.size(); ++i) {
                Fragment next = build_fragment(nfa, *node.children[i], alphabet);
                nfa.add_epsilon(acc.accept, next.start);
                acc.accept = next.accept;
            }
            return acc;
        }
        case Regex::Kind::alternation: {
            int s = nfa.add_state(), t = nfa.add_state();
            for (const auto& child : node.children) {
                Fragment frag = build_fragment(nfa, *child, alphabet);
                nfa.add_epsilon(s, frag.start);
                nfa.add_epsilon(frag.accept, t);
            }
            return {s, t};
        }
        case Regex::Kind::star: {
            Fragment inner = build_fragment(nfa, *node.children[0], alphabet);
            int s = nfa.add_state(), t = nfa.add_state();
            nfa.add_epsilon(s, inner.start);
            nfa.add_epsilon(s, t);
            nfa.add_epsilon(inner.accept, inner.start);
            nfa.add_epsilon(inner.accept, t);
            return {s, t};
        }
        case Regex::Kind::plus: {
            Fragment inner = build_fragment(nfa, *node.children[0], alphabet);
            int s = nfa.add_state(), t = nfa.add_state();
            nfa.add_epsilon(s, inner.start);
            nfa.add_epsilon(inner.accept, inner.start);
            nfa.add_epsilon(inner.accept, t);
            return {s, t};
        }
    }
    throw std::logic_error("unhandled regex node");
}

using StateSet = std::vector<std::uint64_t>;  // bitset over NFA states

void set_bit(StateSet& s, int bit) { s[bit >> 6] |= (1ULL << (bit & 63)); }
bool get_bit(const StateSet& s, int bit) { return (s[bit >> 6] >> (bit & 63)) & 1; }

void epsilon_closure(const Nfa& nfa, StateSet& set) {
    std::vector<int> stack;
    for (int st = 0; st < static_cast<int>(nfa.adjacency.size()); ++st)
        if (get_bit(set, st)) stack.push_back(st);
    while (!stack.empty()) {
        int st = stack.back();
        stack.pop_back();
        for (const auto& edge : nfa.adjacency[st]) {
            if (edge.is_epsilon && !get_bit(set, edge.to)) {
                set_bit(set, edge.to);
                stack.push_back(edge.to);
            }
        }
    }
}

}  // namespace

bool Dfa::accepts(const std::string& word) const {
    int state = initial;
    for (char ch : word) {
        auto pos = alphabet.find(ch);
        if (pos == std::string::npos) return false;
        state = next[state][pos];
    }
    return accepting[state];
}

std::string Dfa::transition_table() const {
    std::ostringstream os;
    os << "state";
    for (char ch : alphabet) os << '\t' << ch;
    os << "\taccept\n";
    for (int s = 0; s < state_count(); ++s) {
        os << s << (s == initial ? "*" : "");
        for (std::size_t a = 0; a < alphabet.size(); ++a) os << '\t' << next[s][a];
        os << '\t' << (accepting[s] ? "yes" : "no") << '\n';
    }
    return os.str();
}

// Reachable states only, renumbered by breadth-first discovery in letter
// order so equal languages compile to identical tables.
Dfa pruned(const Dfa& dfa) {
    const int letters = static_cast<int>(dfa.alphabet.size());
    std::vector<int> remap(dfa.state_count(), -1);
    std::queue<int> queue;
    remap[dfa.initial] = 0;
    queue.push(dfa.initial);
    int assigned = 1;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop();
        for (int a = 0; a < letters; ++a) {
            int t = dfa.next[s][a];
            if (remap[t] == -1) {
                remap[t] = assigned++;
                queue.push(t);
            }
        }
    }
    Dfa out;
    out.alphabet = dfa.alphabet;
    out.initial = 0;
    out.next.assign(assigned, std::vector<int>(letters, 0));
    out.accepting.assign(assigned, false);
    for (int s = 0; s < dfa.state_count(); ++s) {
        if (remap[s] == -1) continue;
        out.accepting[remap[s]] = dfa.accepting[s];
        for (int a = 0; a < letters; ++a) out.next[remap[s]][a] = remap[dfa.next[s][a]];
    }
    return out;
}

// Moore partition refinement.
Dfa minimized(const Dfa& dfa) {
    const int n = dfa.state_count();
    const int letters = static_cast<int>(dfa.alphabet.size());
    std::vector<int> cls(n);
    for (int s = 0; s < n; ++s) cls[s] = dfa.accepting[s] ? 1 : 0;
    int classes = 2;
    for (;;) {
        std::map<std::vector<int>, int> signature_ids;
        std::vector<int> next_cls(n);
        std::vector<int> signature(letters + 1);
        for (int s = 0; s < n; ++s) {
            signature[0] = cls[s];
            for (int a = 0; a < letters; ++a) signature[a + 1] = cls[dfa.next[s][a]];
            auto [it, fresh] =
                signature_ids.emplace(signature, static_cast<int>(signature_ids.size()));
            next_cls[s] = it->second;
            (void)fresh;
        }
        int next_classes = static_cast<int>(signature_ids.size());
        cls.swap(next_cls);
        if (next_classes == classes) break;
        classes = next_classes;
    }
    Dfa quotient;
    quotient.alphabet = dfa.alphabet;
    quotient.initial = cls[dfa.initial];
    quotient.next.assign(classes, std::vector<int>(letters, 0));
    quotient.accepting.assign(classes, false);
    for (int s = 0; s < n; ++s) {
        quotient.accepting[cls[s]] = dfa.accepting[s];
        for (int a = 0; a < letters; ++a) quotient.next[cls[s]][a] = cls[dfa.next[s][a]];
    }
    return pruned(quotient);
}

// Subset construction over one pattern's automaton; accepts full matches.
// The empty subset acts as the dead state and keeps transitions total.
Dfa subset_dfa(const Nfa& nfa, const std::string& alphabet, int start, int accept) {
    const int letters = static_cast<int>(alphabet.size());
    const int nfa_states = static_cast<int>(nfa.adjacency.size());
    const int words = (nfa_states + 63) / 64;

    // Letter-indexed adjacency, so transitions touch live states only.
    std::vector<std::vector<std::vector<int>>> targets(
        nfa_states, std::vector<std::vector<int>>(letters));
    for (int s = 0; s < nfa_states; ++s)
        for (const auto& edge : nfa.adjacency[s]) {
            if (edge.is_epsilon) continue;
            for (char ch : edge.letters) targets[s][alphabet.find(ch)].push_back(edge.to);
        }

    std::map<StateSet, int> ids;
    std::vector<StateSet> subsets;
    Dfa dfa;
    dfa.alphabet = alphabet;

    auto intern = [&](StateSet set) {
        auto it = ids.find(set);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(subsets.size());
        ids.emplace(set, id);
        subsets.push_back(std::move(set));
        dfa.next.emplace_back(letters, -1);
        dfa.accepting.push_back(get_bit(subsets[id], accept));
        return id;
    };

    StateSet init(words, 0);
    set_bit(init, start);
    epsilon_closure(nfa, init);
    dfa.initial = intern(std::move(init));

    for (int id = 0; id < static_cast<int>(subsets.size()); ++id) {
        for (int a = 0; a < letters; ++a) {
            StateSet target(words, 0);
            const StateSet frozen = subsets[id];
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = frozen[w];
                while (bits) {
                    int st = (w << 6) + std::countr_zero(bits);
                    bits &= bits - 1;
                    for (int to : targets[st][a]) set_bit(target, to);
                }
            }
            epsilon_closure(nfa, target);
            dfa.next[id][a] = intern(std::move(target));
        }
    }
    return dfa;
}

Dfa intersect(const Dfa& lhs, const Dfa& rhs) {
    const int letters = static_cast<int>(lhs.alphabet.size());
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> pairs;
    Dfa out;
    out.alphabet = lhs.alphabet;

    auto intern = [&](std::pair<int, int> pair) {
        auto it = ids.find(pair);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(pairs.size());
        ids.emplace(pair, id);
        pairs.push_back(pair);
        out.next.emplace_back(letters, -1);
        out.accepting.push_back(lhs.accepting[pair.first] && rhs.accepting[pair.second]);
        return id;
    };

    out.initial = intern({lhs.initial, rhs.initial});
    for (int id = 0; id < static_cast<int>(pairs.size()); ++id) {
        auto [ls, rs] = pairs[id];
        for (int a = 0; a < letters; ++a)
            out.next[id][a] = intern({lhs.next[ls][a], rhs.next[rs][a]});
    }
    return out;
}

Dfa compile_language(const LanguageDef& def) {
    const std::string& alphabet = def.alphabet;
    const int letters = static_cast<int>(alphabet.size());

    // Start from "all nonempty words", then intersect the complement of each
    // forbidden pattern, minimizing between steps to keep the product small.
    Dfa acc;
    acc.alphabet = alphabet;
    acc.initial = 0;
    acc.next = {std::vector<int>(letters, 1), std::vector<int>(letters, 1)};
    acc.accepting = {false, true};

    for (const auto& pattern : def.forbidden) {
        Nfa nfa;
        Fragment frag = build_fragment(nfa, *pattern, alphabet);
        Dfa matches = subset_dfa(nfa, alphabet, frag.start, frag.accept);
        for (std::size_t s = 0; s < matches.accepting.size(); ++s)
            matches.accepting[s] = !matches.accepting[s];
        acc = minimized(intersect(acc, minimized(matches)));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// The six language definitions.

LangName lang_name_from_string(const std::string& name) {
    std::string key;
    for (char ch : name) key += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (key == "L1") return LangName::L1;
    if (key == "S1") return LangName::S1;
    if (key == "L2") return LangName::L2;
    if (key == "S2") return LangName::S2;
    if (key == "L3") return LangName::L3;
    if (key == "S3") return LangName::S3;
    throw std::invalid_argument("unknown language: " + name);
}

std::string lang_name_to_string(LangName name) {
    switch (name) {
        case LangName::L1: return "L1";
        case LangName::S1: return "S1";
        case LangName::L2: return "L2";
        case LangName::S2: return "S2";
        case LangName::L3: return "L3";
        case LangName::S3: return "S3";
    }
    throw std::invalid_argument("unknown language");
}

namespace {

using namespace rx;

RegexPtr any_star(const std::string& alphabet) { return star(cls(alphabet)); }

// Forbids the factor `body` anywhere: sigma* body sigma*.
RegexPtr factor(const std::string& alphabet, RegexPtr body) {
    return cat({any_star(alphabet), std::move(body), any_star(alphabet)});
}

std::vector<RegexPtr> l1_patterns() {
    const std::string S = "abcd";
    return {
        factor(S, word("ca")),
        factor(S, word("da")),
        factor(S, word("db")),
        cat({lit('b'), any_star(S)}),                    // begins with b
        cat({star(lit('a')), lit('c'), any_star(S)}),    // begins with a*c
        cat({any_star(S), lit('d')}),                    // ends with d
        cat({lit('d'), star(cls("ab"))}),                // d{a,b}*
        cat({star(lit('a')), plus(cls("cd"))}),          // a*{c,d}+
    };
}

std::vector<RegexPtr> s1_extra_patterns() {
    const std::string S = "abcd";
    std::vector<RegexPtr> out;
    for (char ch : S) out.push_back(factor(S, word(std::string(2, ch))));
    out.push_back(cat({cls("abc"), cls("abc"), any_star(S)}));  // two leading {a,b,c}
    out.push_back(cat({any_star(S), lit('c'), star(lit('a')), lit('d'), star(lit('a'))}));
    out.push_back(cat({any_star(S), lit('d'), star(cls("ab")), lit('c'), star(lit('a'))}));
    out.push_back(cat({any_star(S), lit('a'), star(cls("cd"))}));  // ends with a{c,d}*
    out.push_back(word("dcb"));
    return out;
}

std::vector<RegexPtr> l2_patterns() {
    const std::string S = "abcdef";
    return {
        factor(S, cat({cls("bcd"), cls("aef")})),
        factor(S, word("fa")),
        factor(S, word("db")),
        cat({lit('e'), any_star(S)}),                                        // begins with e
        cat({star(cls("abde")), lit('d'), star(cls("abcde"))}),
        cat({star(cls("abcde")), lit('b'), star(cls("abcde"))}),
        cat({any_star(S), lit('b'), star(cls("aef")), star(lit('d')), star(cls("abcef"))}),
        cat({star(cls("adf")), lit('f'), star(cls("adef"))}),
        cat({star(cls("aef")), lit('c'), any_star(S)}),                      // begins {a,e,f}*c
    };
}

std::vector<RegexPtr> s2_extra_patterns() {
    const std::string S = "abcdef";
    std::vector<RegexPtr> out;
    for (char ch : S) out.push_back(factor(S, word(std::string(2, ch))));
    out.push_back(cat({any_star(S), lit('a'), star(cls("abcdf"))}));  // ends with a{a,b,c,d,f}*
    out.push_back(cat({any_star(S), lit('e'), star(cls("bcde"))}));   // ends with e{b,c,d,e}*
    out.push_back(cat({star(cls("abcef")), lit('f'), star(cls("abc"))}));
    out.push_back(cat({star(cls("abcef")), lit('b'), star(cls("abcef")), lit('c'), any_star(S)}));
    out.push_back(cat({star(cls("adf")), lit('f'), star(cls("adef")), lit('c'), star(cls("acef"))}));
    return out;
}

std::vector<RegexPtr> l3_patterns() {
    const std::string S = "abcd";
    return {
        cat({any_star(S), lit('d'), any_star(S), lit('d'), any_star(S)}),  // two d's
        factor(S, word("ca")),
        factor(S, word("da")),
        factor(S, word("db")),
        factor(S, word("dc")),
        cat({lit('b'), any_star(S)}),                                      // begins with b
        cat({star(lit('a')), lit('c'), star(cls("abc"))}),                 // a*c{a,b,c}*
        cat({star(cls("acd")), cls("cd"), star(cls("acd"))}),
        cat({star(cls("abd")), lit('d'), star(cls("abd"))}),
    };
}

std::vector<RegexPtr> s3_extra_patterns() {
    const std::string S = "abcd";
    std::vector<RegexPtr> out;
    for (char ch : std::string("abc")) out.push_back(factor(S, word(std::string(2, ch))));
    out.push_back(cat({any_star(S), lit('a'), star(cls("cd"))}));  // ends in a{c,d}*
    out.push_back(cat({word("ab"), any_star(S)}));                 // begins with ab
    out.push_back(word("cbd"));
    return out;
}

}  // namespace

LanguageDef builtin_language(LangName name) {
    LanguageDef def;
    def.name = lang_name_to_string(name);
    switch (name) {
        case LangName::L1:
            def.alphabet = "abcd";
            def.forbidden = l1_patterns();
            break;
        case LangName::S1: {
            def.alphabet = "abcd";
            def.forbidden = l1_patterns();
            auto extra = s1_extra_patterns();
            def.forbidden.insert(def.forbidden.end(), extra.begin(), extra.end());
            break;
        }
        case LangName::L2:
            def.alphabet = "abcdef";
            def.forbidden = l2_patterns();
            break;
        case LangName::S2: {
            def.alphabet = "abcdef";
            def.forbidden = l2_patterns();
            auto extra = s2_extra_patterns();
            def.forbidden.insert(def.forbidden.end(), extra.begin(), extra.end());
            break;
        }
        case LangName::L3:
            def.alphabet = "abcd";
            def.forbidden = l3_patterns();
            break;
        case LangName::S3: {
            def.alphabet = "abcd";
            def.forbidden = l3_patterns();
            auto extra = s3_extra_patterns();
            def.forbidden.insert(def.forbidden.end(), extra.begin(), extra.end());
            break;
        }
    }
    return def;
}

const Dfa& builtin_dfa(LangName name) {
    static std::mutex mutex;
    static std::map<LangName, Dfa> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, compile_language(builtin_language(name))).first;
    return it->second;
}

std::vector<BigInt> count_by_length(const Dfa& dfa, int max_n) {
    if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
    std::vector<BigInt> counts(max_n + 1, 0);
    std::vector<BigInt> occupancy(dfa.state_count(), 0), step(dfa.state_count());
    occupancy[dfa.initial] = 1;
    if (dfa.accepting[dfa.initial]) counts[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        std::fill(step.begin(), step.end(), 0);
        for (int s = 0; s < dfa.state_count(); ++s) {
            if (occupancy[s] == 0) continue;
            for (std::size_t a = 0; a < dfa.alphabet.size(); ++a)
                step[dfa.next[s][a]] += occupancy[s];
        }
        occupancy.swap(step);
        for (int s = 0; s < dfa.state_count(); ++s)
            if (dfa.accepting[s]) counts[n] += occupancy[s];
    }
    return counts;
}

std::vector<std::vector<std::string>> enumerate_words(const Dfa& dfa, int max_n,
                                                      std::uint64_t max_total) {
    if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
    // Budget check up front via counting.
    auto counts = count_by_length(dfa, max_n);
    std::uint64_t total = 0;
    for (const auto& c : counts) {
        total += static_cast<std::uint64_t>(c);
        if (total > max_total)
            throw budget_error("enumerate_words: more than " + std::to_string(max_total) +
                               " words requested");
    }

    // Distance from each state to the nearest accepting state, for pruning.
    std::vector<int> dist(dfa.state_count(), -1);
    std::queue<int> queue;
    std::vector<std::vector<int>> reverse(dfa.state_count());
    for (int s = 0; s < dfa.state_count(); ++s)
        for (std::size_t a = 0; a < dfa.alphabet.size(); ++a)
            reverse[dfa.next[s][a]].push_back(s);
    for (int s = 0; s < dfa.state_count(); ++s)
        if (dfa.accepting[s]) {
            dist[s] = 0;
            queue.push(s);
        }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop();
        for (int p : reverse[s])
            if (dist[p] == -1) {
                dist[p] = dist[s] + 1;
                queue.push(p);
            }
    }

    std::vector<std::vector<std::string>> groups(max_n + 1);
    std::string word;
    auto dfs = [&](auto&& self, int state, int depth) -> void {
        if (dfa.accepting[state] && depth > 0) groups[depth].push_back(word);
        if (depth == max_n) return;
        for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) {
            int t = dfa.next[state][a];
            if (dist[t] == -1 || dist[t] > max_n - depth - 1) continue;
            word.push_back(dfa.alphabet[a]);
            self(self, t, depth + 1);
            word.pop_back();
        }
    };
    dfs(dfs, dfa.initial, 0);
    return groups;
}

// ---------------------------------------------------------------------------
// Refined letter classes.

std::string refined_class_to_string(RefinedClass rc) {
    switch (rc) {
        case RefinedClass::a: return "a";
        case RefinedClass::b: return "b";
        case RefinedClass::b1: return "b1";
        case RefinedClass::b2: return "b2";
        case RefinedClass::c1: return "c1";
        case RefinedClass::c2: return "c2";
        case RefinedClass::d: return "d";
        case RefinedClass::d1: return "d1";
        case RefinedClass::d2: return "d2";
        case RefinedClass::e: return "e";
        case RefinedClass::f: return "f";
    }
    throw std::invalid_argument("unknown refined class");
}

int ClassifiedWord::count_of(RefinedClass rc) const {
    return static_cast<int>(std::count(classes.begin(), classes.end(), rc));
}

namespace {

bool any_after(const std::string& word, std::size_t pos, char target) {
    return word.find(target, pos + 1) != std::string::npos;
}

bool any_before(const std::string& word, std::size_t pos, char target) {
    return word.find(target) < pos;
}

}  // namespace

ClassifiedWord classify(GridName grid, const std::string& word) {
    if (word.empty()) throw std::invalid_argument("cannot classify the empty word");
    const std::string alphabet = builtin_spec(grid).alphabet();
    for (char ch : word)
        if (alphabet.find(ch) == std::string::npos)
            throw std::invalid_argument("letter outside the cell alphabet");

    ClassifiedWord cw;
    cw.grid = grid;
    cw.letters = word;
    cw.classes.resize(word.size());
    const int n = static_cast<int>(word.size());

    auto first_pos = [&](char target) {
        auto p = word.find(target);
        return p == std::string::npos ? 0 : static_cast<int>(p) + 1;
    };
    cw.first_b = first_pos('b');
    cw.first_d = first_pos('d');

    switch (grid) {
        case GridName::g1: {
            for (int i = 0; i < n; ++i) {
                switch (word[i]) {
                    case 'a': cw.classes[i] = RefinedClass::a; break;
                    case 'b': cw.classes[i] = RefinedClass::b; break;
                    case 'd': cw.classes[i] = RefinedClass::d; break;
                    case 'c':
                        cw.classes[i] =
                            any_after(word, i, 'b') ? RefinedClass::c1 : RefinedClass::c2;
                        break;
                }
            }
            // Type A: no c after any b, no d after any c, and the first b
            // precedes every a.
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                if (word[i] == 'b' && any_after(word, i, 'c')) ok = false;
                if (word[i] == 'c' && any_after(word, i, 'd')) ok = false;
                if (word[i] == 'a' && (cw.first_b == 0 || cw.first_b > i + 1)) ok = false;
            }
            cw.type_a = ok;
            break;
        }
        case GridName::g2: {
            bool has_e = word.find('e') != std::string::npos;
            int f_count = static_cast<int>(std::count(word.begin(), word.end(), 'f'));
            for (int i = 0; i < n; ++i) {
                switch (word[i]) {
                    case 'a': cw.classes[i] = RefinedClass::a; break;
                    case 'b': cw.classes[i] = RefinedClass::b; break;
                    case 'e': cw.classes[i] = RefinedClass::e; break;
                    case 'f': cw.classes[i] = RefinedClass::f; break;
                    case 'c': {
                        bool bc_before = any_before(word, i, 'b') || any_before(word, i, 'c');
                        bool d_straddle = any_before(word, i, 'd') && any_after(word, i, 'd');
                        cw.classes[i] =
                            (!bc_before && !d_straddle) ? RefinedClass::c2 : RefinedClass::c1;
                        break;
                    }
                    case 'd': {
                        bool d2 = !has_e && f_count <= 1 && !any_after(word, i, 'c');
                        cw.classes[i] = d2 ? RefinedClass::d2 : RefinedClass::d1;
                        break;
                    }
                }
            }
            break;
        }
        case GridName::g3: {
            // c's first; b2 depends on the c2 positions.
            for (int i = 0; i < n; ++i) {
                if (word[i] == 'c')
                    cw.classes[i] = any_after(word, i, 'b') ? RefinedClass::c1 : RefinedClass::c2;
            }
            for (int i = 0; i < n; ++i) {
                switch (word[i]) {
                    case 'a': cw.classes[i] = RefinedClass::a; break;
                    case 'd': cw.classes[i] = RefinedClass::d; break;
                    case 'b': {
                        bool blocked = any_before(word, i, 'a') || any_before(word, i, 'b') ||
                                       any_after(word, i, 'c');
                        if (!blocked) {
                            for (int j = 0; j < i && !blocked; ++j)
                                if (cw.classes[j] == RefinedClass::c2) blocked = true;
                        }
                        cw.classes[i] = blocked ? RefinedClass::b1 : RefinedClass::b2;
                        break;
                    }
                    default: break;
                }
            }
            break;
        }
    }
    return cw;
}

bool refinement_multiplicity_ok(const ClassifiedWord& cw) {
    switch (cw.grid) {
        case GridName::g1: return cw.count_of(RefinedClass::c2) <= 1;
        case GridName::g2: return cw.count_of(RefinedClass::d2) <= 1;
        case GridName::g3:
            return cw.count_of(RefinedClass::b2) <= 1 && cw.count_of(RefinedClass::c2) <= 1;
    }
    return false;
}

}  // namespace permgrid
