#include <doctest.h>

#include "mtshim/lie_core.hpp"

#include <map>
#include <set>

using namespace mtshim;

namespace {

RepDescriptor rep(char fam, int rank, int w) { return RepDescriptor(LieType(family_from_char(fam), rank), w); }

}  // namespace

TEST_CASE("type validation and alias normalization") {
    CHECK_THROWS_AS(LieType(LieFamily::D, 2), ValidationError);
    CHECK_THROWS_AS(LieType(LieFamily::A, 0), ValidationError);
    CHECK(LieType(LieFamily::B, 1).canonical().label() == "A_1");
    CHECK(LieType(LieFamily::C, 1).canonical().label() == "A_1");
    CHECK(LieType(LieFamily::B, 2).canonical().label() == "C_2");
    CHECK(LieType(LieFamily::D, 3).canonical().label() == "A_3");
    CHECK(LieType(LieFamily::D, 3).label() == "D_3");  // display alias preserved
    CHECK(LieType(LieFamily::D, 3) == LieType(LieFamily::A, 3));
    // alias weight maps preserve dimension and duality
    CHECK(rep('D', 3, 1) == rep('A', 3, 2));
    CHECK(rep_dimension(rep('D', 3, 1)) == 6);
    CHECK(rep_dimension(rep('D', 3, 3)) == 4);
    CHECK(rep_dimension(rep('B', 2, 2)) == 4);
    CHECK(duality(rep('B', 2, 2)) == DualityType::Symplectic);
    CHECK(duality(rep('D', 3, 2)) == DualityType::NonSelfDual);
}

TEST_CASE("minuscule weight lists") {
    auto idx = [](const std::vector<MinusculeWeight>& v) {
        std::vector<int> out;
        for (auto w : v) out.push_back(w.index);
        return out;
    };
    CHECK(idx(minuscule_weights(LieType(LieFamily::A, 3))) == std::vector<int>{1, 2, 3});
    CHECK(idx(minuscule_weights(LieType(LieFamily::C, 5))) == std::vector<int>{1});
    CHECK(idx(minuscule_weights(LieType(LieFamily::D, 4))) == std::vector<int>{1, 3, 4});
    CHECK(idx(minuscule_weights(LieType(LieFamily::B, 3))) == std::vector<int>{3});
    CHECK_THROWS_AS(rep('B', 3, 1), ValidationError);  // non-minuscule weight rejected
    CHECK_THROWS_AS(rep('A', 4, 5), ValidationError);
}

TEST_CASE("dimension formulas") {
    CHECK(rep_dimension(rep('A', 4, 2)) == 10);
    CHECK(rep_dimension(rep('B', 3, 3)) == 8);
    CHECK(rep_dimension(rep('A', 1, 1)) == 2);
    CHECK(rep_dimension(rep('C', 5, 1)) == 10);
    CHECK(rep_dimension(rep('D', 5, 1)) == 10);
    CHECK(rep_dimension(rep('D', 5, 5)) == 16);
    // exactness far beyond machine words
    CHECK(rep_dimension(rep('B', 200, 200)) == pow2(200));
    CHECK(rep_dimension(rep('A', 200, 100)) == binomial(201, 100));
}

TEST_CASE("weight enumeration: cardinality, multiplicity one, examples") {
    auto w_a2 = enumerate_weights(rep('A', 2, 1));
    CHECK(w_a2.size() == 3);
    CHECK(w_a2[0] == WeightVector{Rational(0), Rational(0), Rational(1)});

    auto w_d3 = enumerate_weights(rep('D', 3, 3));  // 4 sign-vectors with even minus count
    CHECK(w_d3.size() == 4);

    auto w_a42 = enumerate_weights(rep('A', 4, 2));
    CHECK(w_a42.size() == 10);

    Caps tight;
    tight.weight_enum_cap = 4;
    CHECK_THROWS_AS(enumerate_weights(rep('B', 3, 3), tight), ResourceError);
}

TEST_CASE("weight enumeration matches dimension, multiplicity one (rank <= 12, dim <= 4096)") {
    for (const auto& r : factor_catalog(4096)) {
        if (r.lie.canonical().rank > 12) continue;
        auto ws = enumerate_weights(r);
        CHECK(BigInt(ws.size()) == rep_dimension(r));
        std::set<WeightVector> uniq(ws.begin(), ws.end());
        CHECK(uniq.size() == ws.size());
    }
}

TEST_CASE("admissible cocharacter classes and pairs") {
    auto classes = admissible_cocharacter_classes(rep('A', 3, 1));
    REQUIRE(classes.size() == 3);
    CHECK(classes[0].pair == MultiplicityPair{1, 3});
    CHECK(classes[1].pair == MultiplicityPair{2, 2});
    CHECK(classes[2].pair == MultiplicityPair{3, 1});

    auto spin = admissible_cocharacter_classes(rep('B', 3, 3));
    REQUIRE(spin.size() == 1);
    CHECK(spin[0].pair == MultiplicityPair{4, 4});

    auto a42 = admissible_cocharacter_classes(rep('A', 4, 2));
    REQUIRE(a42.size() == 2);  // only the extreme markers are two-level
    CHECK(a42[0].marker == 1);
    CHECK(a42[0].pair == MultiplicityPair{4, 6});
    CHECK(a42[1].marker == 4);
    CHECK(a42[1].pair == MultiplicityPair{6, 4});

    CHECK(multiplicity_pair(rep('A', 4, 1), CocharacterClass{rep('A', 4, 1), 2, {}}) == MultiplicityPair{2, 3});
    CHECK(multiplicity_pair(rep('D', 4, 4), CocharacterClass{rep('D', 4, 4), 0, {}}) == MultiplicityPair{4, 4});
    CHECK_THROWS_AS(multiplicity_pair(rep('A', 4, 2), CocharacterClass{rep('A', 4, 2), 2, {}}), ValidationError);
    CHECK_THROWS_AS(multiplicity_pair(rep('A', 3, 1), CocharacterClass{rep('A', 4, 1), 1, {}}), ValidationError);
}

TEST_CASE("pairs recounted from enumerated weights") {
    // m_id must equal the count of weights at the top pairing level against
    // the class coweight vector, for every catalog entry of moderate size.
    for (const auto& r : factor_catalog(64)) {
        auto weights = enumerate_weights(r);
        for (const auto& cls : admissible_cocharacter_classes(r)) {
            WeightVector chi = cocharacter_vector(cls);
            std::map<Rational, long long> levels;
            for (const auto& w : weights) {
                Rational v = 0;
                for (size_t i = 0; i < w.size(); ++i) v += chi[i] * w[i];
                levels[v]++;
            }
            REQUIRE(levels.size() == 2);
            CHECK(BigInt(levels.rbegin()->second) == cls.pair.m_id);
            CHECK(BigInt(levels.begin()->second) == cls.pair.m_triv);
            CHECK(cls.pair.m_id + cls.pair.m_triv == rep_dimension(r));
        }
    }
}

TEST_CASE("A-type symmetry of multiplicity pairs") {
    // negation: same marker on the dual weight swaps the pair;
    // diagram flip: complementary marker on the dual weight preserves it.
    for (int r = 1; r <= 8; ++r)
        for (int s = 1; s <= r; ++s)
            for (const auto& cls : admissible_cocharacter_classes(rep('A', r, s))) {
                int a = cls.marker;
                auto dual = multiplicity_pair(rep('A', r, r + 1 - s), CocharacterClass{rep('A', r, r + 1 - s), a, {}});
                CHECK(dual == MultiplicityPair{cls.pair.m_triv, cls.pair.m_id});
                auto flip =
                    multiplicity_pair(rep('A', r, r + 1 - s), CocharacterClass{rep('A', r, r + 1 - s), r + 1 - a, {}});
                CHECK(flip == cls.pair);
            }
}

TEST_CASE("duality closed form") {
    CHECK(duality(rep('A', 3, 2)) == DualityType::Orthogonal);
    CHECK(duality(rep('C', 4, 1)) == DualityType::Symplectic);
    CHECK(duality(rep('A', 2, 1)) == DualityType::NonSelfDual);
    CHECK(duality(rep('A', 1, 1)) == DualityType::Symplectic);
    CHECK(duality(rep('B', 3, 3)) == DualityType::Orthogonal);   // n = 3 mod 4
    CHECK(duality(rep('B', 4, 4)) == DualityType::Orthogonal);   // n = 0 mod 4
    CHECK(duality(rep('B', 5, 5)) == DualityType::Symplectic);   // n = 1 mod 4
    CHECK(duality(rep('B', 6, 6)) == DualityType::Symplectic);   // n = 2 mod 4
    CHECK(duality(rep('D', 4, 4)) == DualityType::Orthogonal);
    CHECK(duality(rep('D', 6, 6)) == DualityType::Symplectic);
    CHECK(duality(rep('D', 5, 5)) == DualityType::NonSelfDual);
    CHECK(duality(rep('D', 7, 1)) == DualityType::Orthogonal);
}

TEST_CASE("duality oracle: spot examples") {
    CHECK(duality_oracle(rep('A', 1, 1)) == DualityType::Symplectic);
    CHECK(duality_oracle(rep('B', 2, 2)) == DualityType::Symplectic);
    CHECK(duality_oracle(rep('D', 4, 1)) == DualityType::Orthogonal);
    CHECK_THROWS_AS(duality_oracle(rep('B', 7, 7)), ResourceError);
}

TEST_CASE("duality agrees with the oracle within caps") {
    for (const auto& r : factor_catalog(64)) {
        if (r.lie.canonical().rank > 6) continue;
        CHECK(duality(r) == duality_oracle(r));
    }
}

TEST_CASE("self-duality iff negation-stable weight set") {
    for (const auto& r : factor_catalog(128)) {
        auto ws = enumerate_weights(r);
        std::set<WeightVector> all(ws.begin(), ws.end());
        bool stable = true;
        for (const auto& w : ws) {
            WeightVector neg = w;
            for (auto& x : neg) x = -x;
            if (r.canonical().lie.family == LieFamily::A) {
                // A-type weights live in gl coordinates; negation acts up to the
                // central shift by the all-ones vector times 2s/(r+1)
                RepDescriptor c = r.canonical();
                Rational shift(2 * c.weight.index, c.lie.rank + 1);
                for (auto& x : neg) x += shift;
            }
            if (!all.count(neg)) {
                stable = false;
                break;
            }
        }
        CHECK(stable == (duality(r) != DualityType::NonSelfDual));
    }
}

TEST_CASE("catalog contents") {
    auto cat4 = factor_catalog(4);
    std::set<std::string> labels;
    for (const auto& r : cat4) labels.insert(r.label());
    CHECK(labels == std::set<std::string>{"A_1 w1", "A_2 w1", "A_2 w2", "A_3 w1", "A_3 w3", "C_2 w1"});

    auto cat2 = factor_catalog(2);
    REQUIRE(cat2.size() == 1);
    CHECK(cat2[0].label() == "A_1 w1");

    auto cat8 = factor_catalog(8);
    std::set<std::string> l8;
    for (const auto& r : cat8) l8.insert(r.label());
    CHECK(l8.count("B_3 w3") == 1);
    CHECK(l8.count("D_4 w3") == 1);
    CHECK(l8.count("D_4 w4") == 1);

    CHECK_THROWS_AS(factor_catalog(1), ValidationError);
}

TEST_CASE("ratio menus") {
    auto menu = [](const RepDescriptor& r) {
        std::set<std::string> out;
        for (const auto& q : ratio_menu(r)) out.insert(rational_to_string(q));
        return out;
    };
    CHECK(menu(rep('A', 4, 1)) == std::set<std::string>{"1/4", "2/3"});
    CHECK(menu(rep('A', 4, 2)) == std::set<std::string>{"2/3"});
    CHECK(menu(rep('A', 3, 1)) == std::set<std::string>{"1/3", "1"});
    CHECK(menu(rep('C', 3, 1)) == std::set<std::string>{"1"});
    CHECK(menu(rep('B', 4, 4)) == std::set<std::string>{"1"});
}

TEST_CASE("sd-standard classification") {
    CHECK(is_sd_standard(rep('A', 4, 1)));
    CHECK(is_sd_standard(rep('A', 4, 4)));
    CHECK(!is_sd_standard(rep('A', 4, 2)));
    CHECK(is_sd_standard(rep('B', 3, 3)));
    CHECK(is_sd_standard(rep('D', 5, 4)));
}
