#pragma once

#include "mtshim/lie_core.hpp"

#include <optional>
#include <set>
#include <vector>

namespace mtshim {

// ---------------------------------------------------------------------------
// Candidate tensor decompositions of an irreducible two-level pair: multisets
// of catalog factors constrained by dimension, realizable ratio set, duality,
// and rank-strict properness.
// ---------------------------------------------------------------------------

struct MTFactor {
    RepDescriptor rep;
    std::optional<CocharacterClass> chosen_class;  // the distinguished factor of a cocharacter
};

struct DecompositionCandidate {
    std::vector<RepDescriptor> factors;  // canonical, sorted
    long long total_dim = 0;
    std::set<Rational> realizable_ratios;
    DualityType total_duality = DualityType::NonSelfDual;
    int total_rank = 0;

    std::string shape() const;  // e.g. "A_1+A_2"
};

bool operator==(const DecompositionCandidate& a, const DecompositionCandidate& b);
bool operator<(const DecompositionCandidate& a, const DecompositionCandidate& b);

DecompositionCandidate make_candidate(std::vector<RepDescriptor> factors);

// NonSelfDual absorbs; otherwise symplectic iff the symplectic factor count is odd.
DualityType tensor_duality(const std::vector<RepDescriptor>& factors);

// All two-level multiplicity pairs of the tensor product under the
// distinguished-factor model: a cocharacter acts through exactly one factor
// with pair (p, q), the rest contribute the complement-dimension multiplier
// D' = total/dim(factor); both orientations are realizable.
std::set<std::pair<BigInt, BigInt>> tensor_multiplicity_pairs(const DecompositionCandidate& candidate);

struct ExclusionPredicateResult {
    bool value = false;
    std::optional<long long> witness;  // the m with the binomial hit
};

// two_n == binomial(2^{m+1}, 2^m) for some m >= 1?  (6, 70, 12870, ...)
ExclusionPredicateResult is_exceptional_halfspin_binom(long long two_n);
// n == binomial(4m, 2m) for some m >= 1?
ExclusionPredicateResult is_central_binom(long long n);

struct EnumOptions {
    long long target_dim = 0;
    std::set<Rational> ratio_set;
    std::optional<DualityType> duality;
    bool proper_only = false;
    // Required with proper_only: candidates must have total rank strictly below
    // the rank of this type (the equal-rank irreducible subalgebra is the whole
    // algebra, so only lower-rank shapes are proper).
    std::optional<RepDescriptor> target_rep;
    // Exclude self-dual (orthogonal/symplectic) totals; the without-involution
    // regime where W_0 and its dual would otherwise coincide.
    bool exclude_self_dual = false;
    // Require ratio_set to be covered by the union of the factor ratio menus.
    bool require_coverage = true;
};

// Exhaustive and deterministic: all multisets of catalog factors (dims >= 2)
// whose dimensions multiply to target_dim, each factor's ratio menu meeting
// ratio_set, filtered per the options. Canonically sorted output.
std::vector<DecompositionCandidate> enumerate_decompositions(const EnumOptions& opts, const Caps& caps = {});

}  // namespace mtshim
