#include <doctest.h>

#include "mtshim/mt_pairs.hpp"

#include <map>
#include <set>

using namespace mtshim;

namespace {

RepDescriptor rep(char fam, int rank, int w) { return RepDescriptor(LieType(family_from_char(fam), rank), w); }

std::set<std::string> shape_set(const std::vector<DecompositionCandidate>& cands) {
    std::set<std::string> out;
    for (const auto& c : cands) out.insert(c.shape());
    return out;
}

EnumOptions base_opts(long long dim, std::set<Rational> ratios) {
    EnumOptions o;
    o.target_dim = dim;
    o.ratio_set = std::move(ratios);
    return o;
}

}  // namespace

TEST_CASE("tensor duality rules") {
    CHECK(tensor_duality({rep('C', 2, 1), rep('A', 1, 1)}) == DualityType::Orthogonal);
    CHECK(tensor_duality({rep('A', 1, 1), rep('A', 1, 1), rep('A', 1, 1)}) == DualityType::Symplectic);
    CHECK(tensor_duality({rep('A', 2, 1), rep('C', 3, 1)}) == DualityType::NonSelfDual);
    // invariant under reordering
    CHECK(tensor_duality({rep('A', 1, 1), rep('C', 2, 1)}) == tensor_duality({rep('C', 2, 1), rep('A', 1, 1)}));
    // flips when one symplectic factor is swapped for an orthogonal one of equal dimension
    CHECK(tensor_duality({rep('A', 1, 1), rep('C', 3, 1)}) == DualityType::Orthogonal);   // S x S
    CHECK(tensor_duality({rep('A', 1, 1), rep('A', 3, 2)}) == DualityType::Symplectic);   // S x O, dim 6 swap
}

TEST_CASE("tensor multiplicity pairs") {
    auto pairs_of = [](std::vector<RepDescriptor> factors) {
        std::set<std::pair<BigInt, BigInt>> got = tensor_multiplicity_pairs(make_candidate(std::move(factors)));
        return got;
    };
    CHECK(pairs_of({rep('A', 2, 1), rep('A', 2, 1)}) == std::set<std::pair<BigInt, BigInt>>{{3, 6}, {6, 3}});
    CHECK(pairs_of({rep('A', 1, 1)}) == std::set<std::pair<BigInt, BigInt>>{{1, 1}});
    CHECK(pairs_of({rep('A', 1, 1), rep('A', 4, 1)}) ==
          std::set<std::pair<BigInt, BigInt>>{{5, 5}, {2, 8}, {8, 2}, {4, 6}, {6, 4}});
    // every pair sums to the total dimension
    for (auto factors : std::vector<std::vector<RepDescriptor>>{{rep('A', 2, 1), rep('C', 2, 1)},
                                                                {rep('B', 3, 3), rep('A', 1, 1)},
                                                                {rep('A', 4, 2)}}) {
        auto cand = make_candidate(factors);
        for (const auto& [p, q] : tensor_multiplicity_pairs(cand)) CHECK(p + q == cand.total_dim);
    }
}

TEST_CASE("binomial exclusion predicates") {
    auto h6 = is_exceptional_halfspin_binom(6);
    CHECK(h6.value);
    CHECK(h6.witness == 1);
    auto h70 = is_exceptional_halfspin_binom(70);
    CHECK(h70.value);
    CHECK(h70.witness == 2);
    CHECK(!is_exceptional_halfspin_binom(10).value);
    CHECK(is_exceptional_halfspin_binom(12870).value);

    CHECK(is_central_binom(6).value);
    CHECK(is_central_binom(6).witness == 1);
    CHECK(is_central_binom(70).value);
    CHECK(is_central_binom(70).witness == 2);
    CHECK(!is_central_binom(20).value);
}

TEST_CASE("enumerator: spec'd shapes") {
    // dim 9, ratio {1/2}: only the A_2 x A_2 family
    auto o9 = base_opts(9, {Rational(1, 2)});
    o9.proper_only = true;
    o9.target_rep = rep('A', 8, 1);
    CHECK(shape_set(enumerate_decompositions(o9)) == std::set<std::string>{"A_2+A_2"});

    // dim 4, symplectic, proper: empty
    auto o4 = base_opts(4, {Rational(1)});
    o4.duality = DualityType::Symplectic;
    o4.proper_only = true;
    o4.target_rep = rep('C', 2, 1);
    CHECK(enumerate_decompositions(o4).empty());

    // dim 10 orthogonal proper (D_5 target): no odd-dimensional self-dual factors exist
    auto o10 = base_opts(10, {Rational(1)});
    o10.duality = DualityType::Orthogonal;
    o10.proper_only = true;
    o10.target_rep = rep('D', 5, 1);
    CHECK(enumerate_decompositions(o10).empty());
}

TEST_CASE("enumerator: validation and caps") {
    CHECK_THROWS_AS(enumerate_decompositions(base_opts(12, {})), ValidationError);
    auto bad = base_opts(12, {Rational(3, 2)});
    CHECK_THROWS_AS(enumerate_decompositions(bad), ValidationError);
    auto noproper = base_opts(12, {Rational(1)});
    noproper.proper_only = true;  // no target
    CHECK_THROWS_AS(enumerate_decompositions(noproper), ValidationError);
    auto big = base_opts(2000000, {Rational(1)});
    CHECK_THROWS_AS(enumerate_decompositions(big), ResourceError);
    Caps tiny;
    tiny.search_cap = 1;
    auto o = base_opts(12, {Rational(1)});
    CHECK_THROWS_AS(enumerate_decompositions(o, tiny), ResourceError);
}

TEST_CASE("enumerator completeness against a brute-force multiset search") {
    // The brute force ignores all pruning: it enumerates every multiset of
    // catalog factors with dim product equal to the target and filters post hoc.
    auto catalog = factor_catalog(24);
    for (long long target = 2; target <= 24; ++target) {
        std::set<Rational> ratio_set{Rational(1), Rational(1, 2)};
        EnumOptions opts = base_opts(target, ratio_set);
        auto fast = enumerate_decompositions(opts);

        std::vector<std::vector<RepDescriptor>> brute;
        std::vector<RepDescriptor> cur;
        auto rec = [&](auto&& self, size_t start, long long rem) -> void {
            if (rem == 1) {
                if (!cur.empty()) brute.push_back(cur);
                return;
            }
            for (size_t i = start; i < catalog.size(); ++i) {
                BigInt d = rep_dimension(catalog[i]);
                if (d > rem || rem % d.convert_to<long long>() != 0) continue;
                cur.push_back(catalog[i]);
                self(self, i, rem / d.convert_to<long long>());
                cur.pop_back();
            }
        };
        rec(rec, 0, target);

        std::vector<DecompositionCandidate> expected;
        for (auto& factors : brute) {
            DecompositionCandidate c = make_candidate(factors);
            bool per_factor_ok = true;
            for (const auto& f : c.factors) {
                bool hit = false;
                for (const auto& r : ratio_menu(f))
                    if (ratio_set.count(r)) hit = true;
                per_factor_ok = per_factor_ok && hit;
            }
            if (!per_factor_ok) continue;
            bool covered = true;
            for (const auto& r : ratio_set)
                if (!c.realizable_ratios.count(r)) covered = false;
            if (!covered) continue;
            expected.push_back(std::move(c));
        }
        std::sort(expected.begin(), expected.end());
        REQUIRE(fast.size() == expected.size());
        for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == expected[i]);
    }
}

TEST_CASE("candidate invariants") {
    auto opts = base_opts(16, {Rational(1)});
    for (const auto& c : enumerate_decompositions(opts)) {
        BigInt prod = 1;
        for (const auto& f : c.factors) prod *= rep_dimension(f);
        CHECK(prod == c.total_dim);
        for (const auto& [p, q] : tensor_multiplicity_pairs(c)) CHECK(p + q == c.total_dim);
    }
}

TEST_CASE("odd symplectic targets admit no proper decomposition") {
    for (int n = 1; n <= 15; n += 2) {
        for (auto ratios : {std::set<Rational>{Rational(1)}, std::set<Rational>{Rational(1), Rational(1, 2)}}) {
            EnumOptions o = base_opts(2 * n, ratios);
            o.duality = DualityType::Symplectic;
            o.proper_only = true;
            o.target_rep = rep('C', std::max(n, 2), 1);
            if (n == 1) o.target_rep = rep('A', 1, 1);
            CHECK(enumerate_decompositions(o).empty());
        }
    }
}

TEST_CASE("half-spin alternative exists exactly on the binomial set") {
    for (int n = 5; n <= 99; n += 2) {
        EnumOptions o = base_opts(2 * n, {Rational(1)});
        o.duality = DualityType::Orthogonal;
        o.proper_only = true;
        o.target_rep = rep('D', n, 1);
        bool found = !enumerate_decompositions(o).empty();
        CHECK(found == is_exceptional_halfspin_binom(2 * n).value);
    }
}
