#include "mtshim/dispatch_embed.hpp"

#include <algorithm>

namespace mtshim {

std::string case_name(CaseId c) {
    switch (c) {
        case CaseId::A: return "a";
        case CaseId::B: return "b";
        case CaseId::C: return "c";
        case CaseId::D: return "d";
        case CaseId::DPrime: return "d-prime";
        case CaseId::E: return "e";
        case CaseId::None: return "none";
    }
    return "?";
}

namespace {

bool is_odd_prime(long long v) {
    if (v < 3 || v % 2 == 0) return false;
    for (long long p = 3; p * p <= v; p += 2)
        if (v % p == 0) return false;
    return true;
}

}  // namespace

CaseLabel dispatch_case(const FactorInput& factor, const Caps& caps) {
    TypeLabel computed = classify_simple_type(factor.desc, caps);
    if (!(computed == factor.label))
        throw ValidationError("factor label " + factor.label.label() + " does not match the descriptor (" +
                              computed.label() + ")");
    const TypeLabel& L = factor.label;
    switch (L.kind) {
        case ShimuraTypeKind::A: {
            if (!factor.profile) throw ValidationError("A-type factor needs a signature profile for dispatch");
            if (factor.profile->n != L.rank) throw ValidationError("profile rank does not match the factor");
            NonSpecialVerdict v = nonspecial_verdict(*factor.profile, caps);
            if (v.outcome == NonSpecialVerdict::Outcome::NonSpecial)
                return {CaseId::A, "non-special A_" + std::to_string(L.rank) + " (rule " + v.rule + ")"};
            return {CaseId::None, "A_" + std::to_string(L.rank) + " numerical tests inconclusive"};
        }
        case ShimuraTypeKind::B:
            return {CaseId::B, "B-type"};
        case ShimuraTypeKind::C:
            if (L.rank % 2 == 1) return {CaseId::C, "C-type of odd rank"};
            return {CaseId::None, "C-type of even rank"};
        case ShimuraTypeKind::DH: {
            int n = L.rank;
            if (n >= 5 && n % 2 == 1) {
                auto ex = is_exceptional_halfspin_binom(2LL * n);
                if (!ex.value) return {CaseId::D, "D^H of odd rank, 2n avoids the half-spin binomial set"};
                return {CaseId::None,
                        "D^H of odd rank with 2n = binomial(2^" + std::to_string(*ex.witness + 1) + ", 2^" +
                            std::to_string(*ex.witness) + ")"};
            }
            if (n % 2 == 0 && is_odd_prime(n / 2) && !is_inner(factor.desc, caps))
                return {CaseId::DPrime, "non-inner D^H of rank twice an odd prime"};
            return {CaseId::None, "D^H outside the covered rank/innerness range"};
        }
        case ShimuraTypeKind::DR:
            return {CaseId::E, "D^R-type"};  // rank >= 4 guaranteed by the label
        case ShimuraTypeKind::Dmixed:
            return {CaseId::None, "mixed D-type"};
        case ShimuraTypeKind::E6:
        case ShimuraTypeKind::E7:
            return {CaseId::None, "exceptional type outside the dispatcher"};
    }
    return {CaseId::None, "unclassified"};
}

DispatchReport dispatch_product(const std::vector<FactorInput>& factors, const Caps& caps) {
    if (factors.empty()) throw ValidationError("dispatch requires at least one factor");
    DispatchReport report;
    report.covered = true;
    for (const auto& f : factors) {
        FactorVerdict fv;
        fv.label = f.label;
        fv.case_label = dispatch_case(f, caps);
        if (f.label.kind == ShimuraTypeKind::A && f.profile) fv.nonspecial = nonspecial_verdict(*f.profile, caps);
        if (fv.case_label.id == CaseId::None) {
            report.covered = false;
            // For uncovered symplectic/orthogonal types list the proper
            // alternative shapes the two-level pair classification allows.
            std::optional<DualityType> want;
            if (f.label.kind == ShimuraTypeKind::C) want = DualityType::Symplectic;
            if (f.label.kind == ShimuraTypeKind::DH) want = DualityType::Orthogonal;
            if (want) {
                EnumOptions opts;
                opts.target_dim = 2LL * f.label.rank;
                opts.ratio_set = {Rational(1)};
                opts.duality = want;
                opts.proper_only = true;
                LieFamily fam = f.label.kind == ShimuraTypeKind::C ? LieFamily::C : LieFamily::D;
                opts.target_rep = RepDescriptor(LieType(fam, f.label.rank), 1);
                fv.proper_shapes = enumerate_decompositions(opts, caps);
            }
        }
        report.factors.push_back(std::move(fv));
    }
    return report;
}

ConditionalReport conditional_d4h_check(const std::vector<FactorInput>& factors, const Caps& caps) {
    if (factors.empty()) throw ValidationError("conditional check requires at least one factor");
    ConditionalReport report;

    std::vector<FactorInput> others;
    std::vector<const FactorInput*> j4;
    for (const auto& f : factors) {
        bool is_d4 = (f.label.kind == ShimuraTypeKind::DH || f.label.kind == ShimuraTypeKind::DR) && f.label.rank == 4;
        if (is_d4)
            j4.push_back(&f);
        else
            others.push_back(f);
    }

    if (j4.empty()) {
        report.base = dispatch_product(factors, caps);
        report.status = report.base.covered ? ConditionalReport::Status::Applicable : ConditionalReport::Status::NotApplicable;
        report.reason = "no rank-4 D factors; reduces to the plain dispatcher";
        return report;
    }

    for (const auto* f : j4) {
        if (!(f->label.kind == ShimuraTypeKind::DH) || is_inner(f->desc, caps)) {
            report.status = ConditionalReport::Status::NotApplicable;
            report.reason = "every rank-4 D factor must be of non-inner D_4^H type";
            return report;
        }
        if (!f->flags.q_factors_simple_distinct.has_value() || !f->flags.q_involution.has_value()) {
            report.status = ConditionalReport::Status::CannotEvaluate;
            report.reason = "q-adic hypotheses not asserted for a D_4^H factor; they cannot be computed here";
            return report;
        }
        if (!*f->flags.q_factors_simple_distinct || !*f->flags.q_involution) {
            report.status = ConditionalReport::Status::NotApplicable;
            report.reason = "a caller-asserted q-adic hypothesis is false";
            return report;
        }
        report.asserted_notes.push_back(f->flags.note.empty() ? "asserted by caller (no note)" : f->flags.note);
    }

    if (!others.empty()) {
        report.base = dispatch_product(others, caps);
        if (!report.base.covered) {
            report.status = ConditionalReport::Status::NotApplicable;
            report.reason = "a non-D_4 factor falls outside the dispatcher cases";
            return report;
        }
    } else {
        report.base.covered = true;
    }
    report.status = ConditionalReport::Status::Applicable;
    report.reason = "conditional on the caller-asserted q-adic hypotheses for the D_4^H factors";
    return report;
}

EmbeddingPlan embedding_plan(const TypeLabel& label, bool inner, const EmbeddingPlanParams& params) {
    if (params.f0_degree && *params.f0_degree < 1) throw ValidationError("f0_degree must be positive");
    if (params.k_degree && *params.k_degree < 1) throw ValidationError("k_degree must be positive");
    EmbeddingPlan plan;
    int n = label.rank;

    switch (label.kind) {
        case ShimuraTypeKind::A: {
            // direct unitary carrier; no intermediate orthogonal/symplectic hull
            plan.n4_plus_1 = BigInt(n) + 1;
            plan.group_a = "none (A-type embeds directly)";
            plan.group_a_p = 0;
            plan.degree_bound_f1_over_f = 1;
            plan.kernel_trivial = true;
            long long e0_mult = n == 1 ? 2 : 1;  // E_0 is a quadratic extension only in rank one
            plan.dim_formula = "(n+1) * [E_0:Q] = " + std::to_string(n + 1) + " * " +
                               (n == 1 ? std::string("2*[F_0:Q]") : std::string("[F_0:Q]"));
            if (params.f0_degree) plan.dim_carrier = plan.n4_plus_1 * e0_mult * *params.f0_degree;
            plan.chain = {"G_2 (lift of the input pair)", "G_2 = G_3 = G_4 (unitary PEL hull)",
                          "GSp(W_1, psi_1)"};
            plan.notes = "standard unitary carrier of the A-type pair";
            break;
        }
        case ShimuraTypeKind::B:
        case ShimuraTypeKind::DR: {
            bool single = params.single_halfspin;
            if (single) {
                if (label.kind != ShimuraTypeKind::DR)
                    throw ValidationError("the single-half-spin variant applies to D^R factors only");
                if (!inner || n % 2 != 0)
                    throw ValidationError("the single-half-spin variant needs an inner D^R factor of even rank");
            }
            int e = label.kind == ShimuraTypeKind::B ? n - 1 : (single ? n - 2 : n - 1);
            plan.group_a_p = pow2(e);
            plan.group_a = "SU(" + plan.group_a_p.str() + "," + plan.group_a_p.str() + ")";
            plan.n4_plus_1 = 2 * plan.group_a_p;
            plan.kernel_trivial = true;
            plan.degree_bound_f1_over_f = label.kind == ShimuraTypeKind::B ? 1 : 4;
            if (label.kind == ShimuraTypeKind::DR) {
                plan.notes = single ? "single half-spin carrier; inner case keeps the degree bound at 2"
                                    : "both half-spin carrier (spin module of the cover)";
                if (single) plan.degree_bound_f1_over_f = 2;
                plan.dim_formula = "2^{n+1} * [K:Q]";
                if (params.k_degree) plan.dim_carrier = pow2(n + 1) * *params.k_degree;
            } else {
                plan.notes = "spin carrier of the odd orthogonal cover";
            }
            if (plan.dim_formula.empty()) plan.dim_formula = "(n_4+1) * [F_0:Q] = " + plan.n4_plus_1.str() + " * [F_0:Q]";
            if (!plan.dim_carrier && params.f0_degree) plan.dim_carrier = plan.n4_plus_1 * *params.f0_degree;
            plan.chain = {"G_2 (lift of the input pair)", "G_3 (transfer to the degree-" +
                                                              std::to_string(plan.degree_bound_f1_over_f) +
                                                              " totally real extension)",
                          "G_4 (unitary PEL hull of type A with standard module of dimension " + plan.n4_plus_1.str() +
                              ")",
                          "GSp(W_1, psi_1)"};
            break;
        }
        case ShimuraTypeKind::C:
        case ShimuraTypeKind::DH: {
            plan.group_a_p = n;
            plan.group_a = "SU(" + std::to_string(n) + "," + std::to_string(n) + ")";
            plan.n4_plus_1 = 2 * BigInt(n);
            plan.kernel_trivial = label.kind == ShimuraTypeKind::C;
            plan.degree_bound_f1_over_f = label.kind == ShimuraTypeKind::C ? 1 : 4;
            if (label.kind == ShimuraTypeKind::DH)
                plan.notes = "inner transfer alone needs only a degree-2 extension; 4 is the stated worst case";
            else
                plan.notes = "standard symplectic carrier";
            plan.dim_formula = "(n_4+1) * [F_0:Q] = " + plan.n4_plus_1.str() + " * [F_0:Q]";
            if (params.f0_degree) plan.dim_carrier = plan.n4_plus_1 * *params.f0_degree;
            plan.chain = {"G_2 (lift of the input pair)",
                          "G_3 (transfer to the degree-" + std::to_string(plan.degree_bound_f1_over_f) +
                              " totally real extension)",
                          "G_4 (unitary PEL hull of type A with standard module of dimension " + plan.n4_plus_1.str() +
                              ")",
                          "GSp(W_1, psi_1)"};
            break;
        }
        case ShimuraTypeKind::Dmixed:
        case ShimuraTypeKind::E6:
        case ShimuraTypeKind::E7:
            throw ValidationError("no embedding plan for " + label.label());
    }
    if (plan.dim_carrier) plan.m_bound = plan.dim_carrier;
    return plan;
}

}  // namespace mtshim
