#pragma once

#include "permgrid/gridclass.hpp"
#include "permgrid/series.hpp"

#include <memory>
#include <string>
#include <vector>

namespace permgrid {

/// Regular-pattern syntax tree. Patterns are fully anchored: a "contains
/// factor xy" rule is spelled out as sigma* xy sigma*.
struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

struct Regex {
    enum class Kind { epsilon, literal, char_class, concat, alternation, star, plus };
    Kind kind;
    char literal = 0;
    std::string char_set;           // for char_class
    std::vector<RegexPtr> children;
};

namespace rx {
RegexPtr eps();
RegexPtr lit(char c);
RegexPtr cls(std::string chars);
RegexPtr word(const std::string& text);  // concatenation of literals
RegexPtr cat(std::vector<RegexPtr> parts);
RegexPtr alt(std::vector<RegexPtr> parts);
RegexPtr star(RegexPtr inner);
RegexPtr plus(RegexPtr inner);
}  // namespace rx

/// All nonempty words over the alphabet except those fully matching any
/// forbidden pattern.
struct LanguageDef {
    std::string name;
    std::string alphabet;         // ordered
    std::vector<RegexPtr> forbidden;
};

/// Deterministic automaton with total transitions (a dead state is allowed)
/// over an ordered alphabet.
struct Dfa {
    std::string alphabet;
    int initial = 0;
    std::vector<std::vector<int>> next;  // [state][letter index]
    std::vector<bool> accepting;

    int state_count() const { return static_cast<int>(next.size()); }
    bool accepts(const std::string& word) const;
    std::string transition_table() const;
};

enum class LangName { L1, S1, L2, S2, L3, S3 };

LangName lang_name_from_string(const std::string& name);
std::string lang_name_to_string(LangName name);

LanguageDef builtin_language(LangName name);

/// Forbidden patterns -> NFA union -> subset construction -> complement,
/// restricted to nonempty words, unreachable states pruned.
Dfa compile_language(const LanguageDef& def);

/// Compiled builtin language, cached.
const Dfa& builtin_dfa(LangName name);

/// counts[n] = number of accepted words of length n, for n = 0..max_n.
std::vector<BigInt> count_by_length(const Dfa& dfa, int max_n);

/// groups[n] = accepted words of length n in alphabet order, n = 0..max_n.
/// Throws budget_error when the total would exceed max_total.
std::vector<std::vector<std::string>> enumerate_words(const Dfa& dfa, int max_n,
                                                      std::uint64_t max_total = 1'000'000);

/// Refined per-letter classes used by the inflation rules.
enum class RefinedClass { a, b, b1, b2, c1, c2, d, d1, d2, e, f };

std::string refined_class_to_string(RefinedClass rc);

/// A word with its refined letter classes. Words on the first grid also carry
/// a type flag and the positions of the first b and first d (1-based, 0 if
/// absent).
struct ClassifiedWord {
    GridName grid;
    std::string letters;
    std::vector<RefinedClass> classes;
    bool type_a = false;  // meaningful for g1 only
    int first_b = 0;
    int first_d = 0;

    int count_of(RefinedClass rc) const;
};

/// Assigns refined classes by position. Works on any word over the grid's
/// alphabet; multiplicity invariants are the caller's concern (see
/// refinement_multiplicity_ok) because they only hold for language members.
ClassifiedWord classify(GridName grid, const std::string& word);

/// g1: at most one c2; g2: at most one d2; g3: at most one b2 and one c2.
bool refinement_multiplicity_ok(const ClassifiedWord& cw);

}  // namespace permgrid
