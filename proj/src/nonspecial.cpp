#include "mtshim/nonspecial.hpp"

#include <algorithm>
#include <numeric>

namespace mtshim {

const char* const kNonSpecialCaveat =
    "This verdict certifies the numerical ratio and decomposition tests only. The underlying "
    "definition of non-special type quantifies over q-adic group data outside the scope of this "
    "tool, and a pair failing these tests may still be non-special for a suitable prime.";

void validate_profile(const SignatureProfile& p) {
    if (p.n < 1) throw ValidationError("profile rank n must be positive");
    if (p.signatures.empty()) throw ValidationError("the signature multiset must be nonempty");
    if (p.compact_count < 0) throw ValidationError("compact_count must be nonnegative");
    for (const auto& [a, b] : p.signatures) {
        if (a < 1 || a > b) throw ValidationError("signatures must satisfy 1 <= a <= b");
        if (a + b != p.n + 1) throw ValidationError("signatures must satisfy a + b = n + 1");
    }
}

RatioData ratio_set(const SignatureProfile& profile) {
    validate_profile(profile);
    RatioData rd;
    for (const auto& [a, b] : profile.signatures) {
        rd.C.insert(Rational(a, b));
        rd.M.emplace(a, b);
        rd.M.emplace(b, a);
    }
    rd.c = *rd.C.begin();
    rd.d = *rd.C.rbegin();
    return rd;
}

std::string rule_id(ExampleRule r) {
    switch (r) {
        case ExampleRule::R1: return "coprime-not-binomial";
        case ExampleRule::R2: return "two-ratios-coprime";
        case ExampleRule::R3: return "gcd-form-free";
        case ExampleRule::R4: return "balanced-not-div-4";
        case ExampleRule::R5: return "pow2-odd-signature";
        case ExampleRule::R6: return "prime-or-four";
    }
    return "?";
}

bool is_consecutive_binomial_pair(long long a, long long b) {
    // (a, b) = (binom(r, s-1), binom(r, s)) with s >= 2 and 2s-1 <= r.
    // Then b/a = (r-s+1)/s, so r is determined by s; scan feasible s.
    for (long long s = 2;; ++s) {
        // binom(r, s) >= binom(2s-1, s); stop once even the smallest case overshoots
        if (binomial(2 * s - 1, s) > b) return false;
        if ((s * (a + b)) % a != 0) continue;
        long long r = s * (a + b) / a - 1;
        if (r < 2 * s - 1) continue;
        if (binomial(r, s - 1) == a && binomial(r, s) == b) return true;
    }
}

namespace {

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long p = 2; p * p <= v; ++p)
        if (v % p == 0) return false;
    return true;
}

bool is_power_of_two(long long v) { return v > 0 && (v & (v - 1)) == 0; }

// Does t (>= 2) arise as a + b with a/b in C, or as a catalog dimension
// e_(r,s) whose forced ratio lies in C?
bool has_admissible_form(long long t, const std::set<Rational>& C) {
    for (const auto& r : C) {
        long long p = boost::multiprecision::numerator(r).convert_to<long long>();
        long long q = boost::multiprecision::denominator(r).convert_to<long long>();
        if (t % (p + q) == 0) return true;
    }
    for (long long s = 1;; ++s) {
        if (binomial(2 * s - 1, s) > t) break;
        for (long long m = 2 * s - 1;; ++m) {
            BigInt e = binomial(m + 1, s);
            if (e > t) break;
            if (e == t) {
                Rational ratio = pair_ratio(binomial(m, s - 1), binomial(m, s));
                if (C.count(ratio)) return true;
            }
        }
    }
    return false;
}

}  // namespace

std::vector<ExampleRule> apply_example_rules(const SignatureProfile& profile) {
    RatioData rd = ratio_set(profile);
    std::vector<ExampleRule> hits;
    const long long np1 = profile.n + 1;

    // R1: some coprime signature that is not a consecutive-binomial pair
    for (const auto& [a, b] : profile.signatures)
        if (std::gcd(a, b) == 1 && !is_consecutive_binomial_pair(a, b)) {
            hits.push_back(ExampleRule::R1);
            break;
        }
    // R2: at least two ratios and some coprime signature
    if (rd.c < rd.d)
        for (const auto& [a, b] : profile.signatures)
            if (std::gcd(a, b) == 1) {
                hits.push_back(ExampleRule::R2);
                break;
            }
    // R3: c < d < 1 and some gcd free of admissible-form divisors
    if (rd.c < rd.d && rd.d < 1)
        for (const auto& [a, b] : profile.signatures) {
            long long g = std::gcd(a, b);
            bool free_of_forms = true;
            for (long long t = 2; t <= g && free_of_forms; ++t)
                if (g % t == 0 && has_admissible_form(t, rd.C)) free_of_forms = false;
            if (free_of_forms) {
                hits.push_back(ExampleRule::R3);
                break;
            }
        }
    // R4: balanced profile with n = 3 or 4 not dividing n+1
    if (rd.c == 1 && rd.d == 1 && (profile.n == 3 || np1 % 4 != 0)) hits.push_back(ExampleRule::R4);
    // R5: c < d = 1, n+1 a power of two, and some unbalanced odd signature
    if (rd.c < 1 && rd.d == 1 && is_power_of_two(np1))
        for (const auto& [a, b] : profile.signatures)
            if (a < b && (a % 2 == 1 || b % 2 == 1)) {
                hits.push_back(ExampleRule::R5);
                break;
            }
    // R6: n+1 is four or a prime
    if (np1 == 4 || is_prime(np1)) hits.push_back(ExampleRule::R6);

    return hits;
}

namespace {

ObstructionDatum candidate_to_datum(const DecompositionCandidate& cand, const std::set<Rational>& C, bool relaxed,
                                    bool covers) {
    ObstructionDatum od;
    od.rank_sum = cand.total_rank;
    od.relaxed = relaxed;
    od.covers_all_ratios = covers;
    od.shape = cand.shape();
    for (const auto& rep : cand.factors) {
        ObstructionFactor f;
        f.rep = rep;
        f.sd_standard = is_sd_standard(rep);
        BigInt dim = rep_dimension(rep);
        if (f.sd_standard) {
            // smallest split (a, b), a <= b, a + b = dim, a/b in C
            bool found = false;
            for (BigInt a = 1; 2 * a <= dim && !found; ++a) {
                Rational r(a, dim - a);
                if (C.count(r)) {
                    f.a = a;
                    f.b = dim - a;
                    f.ratio = r;
                    found = true;
                }
            }
            if (!found) throw ValidationError("internal: factor passed the menu filter without a split");
        } else {
            // the (r, s) data of a non-standard A-factor, s normalized into
            // the dominant range 2s - 1 <= r
            RepDescriptor c = rep.canonical();
            f.a = c.lie.rank;
            f.b = std::min(c.weight.index, c.lie.rank + 1 - c.weight.index);
            f.ratio = ratio_menu(rep).front();
        }
        od.factors.push_back(std::move(f));
    }
    return od;
}

}  // namespace

SearchResult obstruction_search(const SignatureProfile& profile, const Caps& caps) {
    RatioData rd = ratio_set(profile);
    SearchResult out;
    out.relaxed = rd.d == 1;
    bool without_involution = rd.C.size() == 1 && rd.d == 1;

    EnumOptions opts;
    opts.target_dim = profile.n + 1;
    opts.ratio_set = rd.C;
    opts.proper_only = true;
    opts.target_rep = RepDescriptor(LieType(LieFamily::A, profile.n), 1);
    opts.exclude_self_dual = without_involution;
    opts.require_coverage = true;
    try {
        for (const auto& cand : enumerate_decompositions(opts, caps))
            out.obstructions.push_back(candidate_to_datum(cand, rd.C, out.relaxed, true));
    } catch (const ResourceError& e) {
        throw ResourceError(std::string("partial: obstruction search truncated at the configured cap; ") + e.what());
    }

    // Audit list under the weaker per-factor-only reading of the coverage
    // condition: candidates realizing some, but not all, of the ratio set.
    opts.require_coverage = false;
    for (const auto& cand : enumerate_decompositions(opts, caps)) {
        bool covers = true;
        for (const auto& r : rd.C)
            if (!cand.realizable_ratios.count(r)) {
                covers = false;
                break;
            }
        if (!covers) out.partial.push_back(candidate_to_datum(cand, rd.C, out.relaxed, false));
    }
    return out;
}

NonSpecialVerdict nonspecial_verdict(const SignatureProfile& profile, const Caps& caps) {
    validate_profile(profile);
    NonSpecialVerdict v;
    auto rules = apply_example_rules(profile);
    if (!rules.empty()) {
        v.outcome = NonSpecialVerdict::Outcome::NonSpecial;
        v.rule = rule_id(rules.front());
        return v;
    }
    SearchResult sr = obstruction_search(profile, caps);
    v.relaxed = sr.relaxed;
    v.partial = std::move(sr.partial);
    if (sr.obstructions.empty()) {
        v.outcome = NonSpecialVerdict::Outcome::NonSpecial;
        v.rule = "search-exhausted";
        return v;
    }
    v.outcome = NonSpecialVerdict::Outcome::Inconclusive;
    v.obstructions = std::move(sr.obstructions);
    return v;
}

}  // namespace mtshim
