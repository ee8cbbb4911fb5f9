#include "mtshim/mt_pairs.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace mtshim {

std::string DecompositionCandidate::shape() const {
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "+";
        out += factors[i].lie.canonical().label();
    }
    return out;
}

bool operator==(const DecompositionCandidate& a, const DecompositionCandidate& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i)
        if (!(a.factors[i] == b.factors[i])) return false;
    return true;
}

bool operator<(const DecompositionCandidate& a, const DecompositionCandidate& b) {
    return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
                                        [](const RepDescriptor& x, const RepDescriptor& y) { return x < y; });
}

DualityType tensor_duality(const std::vector<RepDescriptor>& factors) {
    if (factors.empty()) throw ValidationError("tensor_duality: empty factor list");
    int symplectic_count = 0;
    for (const auto& f : factors) {
        DualityType d = duality(f);
        if (d == DualityType::NonSelfDual) return DualityType::NonSelfDual;
        if (d == DualityType::Symplectic) ++symplectic_count;
    }
    return symplectic_count % 2 == 1 ? DualityType::Symplectic : DualityType::Orthogonal;
}

DecompositionCandidate make_candidate(std::vector<RepDescriptor> factors) {
    if (factors.empty()) throw ValidationError("candidate needs at least one factor");
    for (auto& f : factors) f = f.canonical();
    std::sort(factors.begin(), factors.end());
    DecompositionCandidate c;
    BigInt dim = 1;
    for (const auto& f : factors) {
        BigInt d = rep_dimension(f);
        if (d < 2) throw ValidationError("trivial factor in candidate");
        dim *= d;
        c.total_rank += f.lie.canonical().rank;
        for (const auto& r : ratio_menu(f)) c.realizable_ratios.insert(r);
    }
    if (dim > std::numeric_limits<long long>::max()) throw ValidationError("candidate dimension out of range");
    c.total_dim = dim.convert_to<long long>();
    c.total_duality = tensor_duality(factors);
    c.factors = std::move(factors);
    return c;
}

std::set<std::pair<BigInt, BigInt>> tensor_multiplicity_pairs(const DecompositionCandidate& candidate) {
    std::set<std::pair<BigInt, BigInt>> out;
    for (const auto& f : candidate.factors) {
        BigInt dim_f = rep_dimension(f);
        BigInt cofactor = BigInt(candidate.total_dim) / dim_f;
        for (const auto& cls : admissible_cocharacter_classes(f)) {
            out.emplace(cofactor * cls.pair.m_id, cofactor * cls.pair.m_triv);
            out.emplace(cofactor * cls.pair.m_triv, cofactor * cls.pair.m_id);
        }
    }
    return out;
}

ExclusionPredicateResult is_exceptional_halfspin_binom(long long two_n) {
    if (two_n < 2) throw ValidationError("is_exceptional_halfspin_binom requires input >= 2");
    for (long long m = 1;; ++m) {
        BigInt b = binomial(pow2(m + 1).convert_to<long long>(), pow2(m).convert_to<long long>());
        if (b == two_n) return {true, m};
        if (b > two_n) return {false, std::nullopt};
    }
}

ExclusionPredicateResult is_central_binom(long long n) {
    if (n < 1) throw ValidationError("is_central_binom requires input >= 1");
    for (long long m = 1;; ++m) {
        BigInt b = binomial(4 * m, 2 * m);
        if (b == n) return {true, m};
        if (b > n) return {false, std::nullopt};
    }
}

namespace {

struct EligibleFactor {
    RepDescriptor rep;
    long long dim;
    int rank;
    std::vector<Rational> menu;
    bool sd;
};

// Ratio menu restricted to what the enumeration needs. Standard A-factors of
// large dimension have one class per marker; materializing them all is
// wasteful, and membership of a reduced ratio p/q only needs (p+q) | dim.
std::vector<Rational> menu_for_query(const RepDescriptor& rep, long long dim, const std::set<Rational>& ratio_set) {
    RepDescriptor c = rep.canonical();
    if (dim > 4096 && c.lie.family == LieFamily::A && is_sd_standard(c)) {
        std::vector<Rational> hits;
        for (const auto& r : ratio_set) {
            BigInt p = boost::multiprecision::numerator(r);
            BigInt q = boost::multiprecision::denominator(r);
            if (BigInt(dim) % (p + q) == 0) hits.push_back(r);
        }
        return hits;
    }
    return ratio_menu(rep);
}

}  // namespace

std::vector<DecompositionCandidate> enumerate_decompositions(const EnumOptions& opts, const Caps& caps) {
    if (opts.target_dim < 2) throw ValidationError("enumeration target dimension must be >= 2");
    if (opts.ratio_set.empty()) throw ValidationError("enumeration ratio set must be nonempty");
    for (const auto& r : opts.ratio_set)
        if (r <= 0 || r > 1) throw ValidationError("ratios must lie in (0, 1]");
    if (opts.target_dim > caps.target_dim_cap)
        throw ResourceError("target dimension " + std::to_string(opts.target_dim) + " exceeds the search cap");
    if (opts.proper_only && !opts.target_rep)
        throw ValidationError("proper_only requires the target representation");

    int rank_budget = -1;  // strict upper bound on total candidate rank
    if (opts.proper_only) rank_budget = opts.target_rep->lie.canonical().rank;

    // Catalog restricted to divisor dimensions with a ratio-menu hit. Only the
    // ratios relevant to the query are carried through the search.
    std::vector<EligibleFactor> pool;
    for (long long e = 2; e <= opts.target_dim; ++e) {
        if (opts.target_dim % e != 0) continue;
        for (const auto& rep : catalog_of_dim(e)) {
            EligibleFactor f;
            f.rep = rep;
            f.dim = e;
            f.rank = rep.lie.canonical().rank;
            for (const auto& r : menu_for_query(rep, e, opts.ratio_set))
                if (opts.ratio_set.count(r)) f.menu.push_back(r);
            if (f.menu.empty()) continue;
            f.sd = is_sd_standard(rep);
            pool.push_back(std::move(f));
        }
    }

    std::vector<DecompositionCandidate> results;
    std::vector<size_t> stack;
    long long explored = 0;

    auto emit = [&]() {
        std::vector<RepDescriptor> factors;
        std::set<Rational> covered;
        int rank_sum = 0;
        for (size_t idx : stack) {
            factors.push_back(pool[idx].rep);
            rank_sum += pool[idx].rank;
            for (const auto& r : pool[idx].menu) covered.insert(r);
        }
        std::sort(factors.begin(), factors.end());
        if (opts.require_coverage)
            for (const auto& r : opts.ratio_set)
                if (!covered.count(r)) return;
        DualityType total = tensor_duality(factors);
        if (opts.duality && total != *opts.duality) return;
        if (opts.exclude_self_dual && total != DualityType::NonSelfDual) return;
        DecompositionCandidate c;
        c.factors = std::move(factors);
        c.total_dim = opts.target_dim;
        c.realizable_ratios = std::move(covered);
        c.total_duality = total;
        c.total_rank = rank_sum;
        results.push_back(std::move(c));
    };

    // DFS over non-decreasing pool indices whose dims multiply to target_dim.
    auto dfs = [&](auto&& self, size_t min_idx, long long remaining, int rank_used) -> void {
        if (remaining == 1) {
            if (!stack.empty()) emit();
            return;
        }
        for (size_t i = min_idx; i < pool.size(); ++i) {
            if (remaining % pool[i].dim != 0) continue;
            int next_rank = rank_used + pool[i].rank;
            if (rank_budget >= 0 && next_rank >= rank_budget) continue;
            if (++explored > caps.search_cap)
                throw ResourceError("decomposition search cap exceeded (" + std::to_string(caps.search_cap) + ")");
            stack.push_back(i);
            self(self, i, remaining / pool[i].dim, next_rank);
            stack.pop_back();
        }
    };
    dfs(dfs, 0, opts.target_dim, 0);

    // the search tracked query-relevant ratios only; give the survivors their
    // full realizable sets when that is cheap to do
    for (auto& c : results) {
        bool small = true;
        for (const auto& f : c.factors)
            if (rep_dimension(f) > 4096) small = false;
        if (!small) continue;
        c.realizable_ratios.clear();
        for (const auto& f : c.factors)
            for (const auto& r : ratio_menu(f)) c.realizable_ratios.insert(r);
    }

    std::sort(results.begin(), results.end());
    return results;
}

}  // namespace mtshim
