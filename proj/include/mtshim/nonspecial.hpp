#pragma once

#include "mtshim/mt_pairs.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mtshim {

// ---------------------------------------------------------------------------
// The non-special A_n decision procedure: ratio data of a signature profile,
// six closed-form sufficient rules, and the exhaustive obstruction search.
// The verdict certifies the numerical tests only; see kNonSpecialCaveat.
// ---------------------------------------------------------------------------

extern const char* const kNonSpecialCaveat;

struct SignatureProfile {
    int n = 1;                                               // the A_n rank
    std::vector<std::pair<long long, long long>> signatures;  // multiset of (a, b), a <= b, a+b = n+1
    long long compact_count = 0;
};

void validate_profile(const SignatureProfile& p);

struct RatioData {
    std::set<Rational> C;                                   // reduced a/b values
    Rational c, d;                                          // min and max of C
    std::set<std::pair<long long, long long>> M;            // both orientations of each signature
};

RatioData ratio_set(const SignatureProfile& profile);

enum class ExampleRule { R1, R2, R3, R4, R5, R6 };

// Stable semantic identifiers used in reports.
std::string rule_id(ExampleRule r);

// Evaluates all six rules independently, returned in fixed order R1..R6.
std::vector<ExampleRule> apply_example_rules(const SignatureProfile& profile);

// Is (a, b) a pair of consecutive binomials (binom(r, s-1), binom(r, s)) with
// 2s-1 <= r and s >= 2?
bool is_consecutive_binomial_pair(long long a, long long b);

struct ObstructionFactor {
    RepDescriptor rep;
    bool sd_standard = false;
    // sd_standard: the lexicographically smallest admissible split (a, b) with
    // a + b = dim and a/b in C.  otherwise: the (rank, weight) pair with its
    // forced ratio.
    BigInt a = 0, b = 0;
    Rational ratio;
};

struct ObstructionDatum {
    int rank_sum = 0;            // shared across the profile's noncompact indices
    bool relaxed = false;        // produced under the max-ratio-1 regime
    bool covers_all_ratios = true;
    std::vector<ObstructionFactor> factors;
    std::string shape;           // "A_1+A_2"
};

struct SearchResult {
    std::vector<ObstructionDatum> obstructions;  // full-coverage candidates
    // Candidates passing the per-factor test but not covering every ratio;
    // reported for audit when the coverage interpretations differ.
    std::vector<ObstructionDatum> partial;
    bool relaxed = false;
};

// Exhaustive enumeration of proper candidate shapes compatible with the
// profile: product of factor dimensions = n+1, total rank < n, every factor's
// ratio menu meets C, C covered by the union of the menus, and (when C = {1},
// the without-involution regime) a non-self-dual total.
SearchResult obstruction_search(const SignatureProfile& profile, const Caps& caps = {});

struct NonSpecialVerdict {
    enum class Outcome { NonSpecial, Inconclusive } outcome = Outcome::Inconclusive;
    std::string rule;  // witnessing rule id, or "search-exhausted"
    std::vector<ObstructionDatum> obstructions;
    std::vector<ObstructionDatum> partial;
    bool relaxed = false;
};

NonSpecialVerdict nonspecial_verdict(const SignatureProfile& profile, const Caps& caps = {});

}  // namespace mtshim
