#pragma once

#include "mtshim/nonspecial.hpp"
#include "mtshim/shimura_types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mtshim {

// ---------------------------------------------------------------------------
// Per-factor case dispatch over products of simple adjoint pairs, the
// conditional criterion for products with non-inner D_4^H factors, and the
// embedding-plan bookkeeping (hull signatures, carrier dimensions, degree bounds).
// ---------------------------------------------------------------------------

struct AssertedFlags {
    // Caller-asserted q-adic hypotheses; never computed here.
    std::optional<bool> q_factors_simple_distinct;  // factors absolutely simple, pairwise non-isomorphic at q
    std::optional<bool> q_involution;               // with q-involution
    std::string note;                               // caller provenance, echoed in reports
};

struct FactorInput {
    SimpleAdjointDescriptor desc;
    TypeLabel label;
    std::optional<SignatureProfile> profile;  // A-type factors only
    AssertedFlags flags;                      // non-inner D_4^H factors only
};

enum class CaseId { A, B, C, D, DPrime, E, None };

std::string case_name(CaseId c);

struct CaseLabel {
    CaseId id = CaseId::None;
    std::string reason;
};

CaseLabel dispatch_case(const FactorInput& factor, const Caps& caps = {});

struct FactorVerdict {
    TypeLabel label;
    CaseLabel case_label;
    std::optional<NonSpecialVerdict> nonspecial;          // A-type factors
    std::vector<DecompositionCandidate> proper_shapes;    // uncovered B/C/D factors
};

struct DispatchReport {
    bool covered = false;
    std::vector<FactorVerdict> factors;
};

DispatchReport dispatch_product(const std::vector<FactorInput>& factors, const Caps& caps = {});

struct ConditionalReport {
    enum class Status { Applicable, NotApplicable, CannotEvaluate } status = Status::NotApplicable;
    std::string reason;
    std::vector<std::string> asserted_notes;  // provenance of the caller-supplied hypotheses
    DispatchReport base;                      // dispatch of the non-D_4 factors
};

// Conditional variant for products whose D_4-labelled factors are all of
// non-inner D_4^H type with both q-adic hypotheses asserted by the caller.
ConditionalReport conditional_d4h_check(const std::vector<FactorInput>& factors, const Caps& caps = {});

struct EmbeddingPlanParams {
    std::optional<long long> f0_degree;  // splitting-field degree for the unitary-hull carrier
    std::optional<long long> k_degree;   // splitting-field degree for the spin carrier (D^R)
    bool single_halfspin = false;        // inner even-rank D^R variant
};

struct EmbeddingPlan {
    std::string group_a;                 // e.g. "SU(8,8)"
    BigInt group_a_p = 0;                // the balanced signature parameter p
    BigInt n4_plus_1 = 0;                // dimension of the standard module of the unitary hull
    int degree_bound_f1_over_f = 1;      // divisor of 4
    bool kernel_trivial = false;
    std::optional<BigInt> dim_carrier;   // concrete when a degree parameter is supplied
    std::string dim_formula;             // symbolic form of the carrier dimension
    std::optional<BigInt> m_bound;       // concrete bound for the symplectic carrier, when computable
    std::vector<std::string> chain;
    std::string notes;
};

EmbeddingPlan embedding_plan(const TypeLabel& label, bool inner, const EmbeddingPlanParams& params);

}  // namespace mtshim
