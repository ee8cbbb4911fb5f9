#include "mtshim/descriptor_io.hpp"

#include <json.hpp>

#include <set>
#include <string>

namespace mtshim {

using Json = nlohmann::ordered_json;

namespace {

struct Checker {
    Json checks = Json::array();
    bool all = true;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        Json c = Json::object();
        c["name"] = name;
        c["pass"] = pass;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(c);
        all = all && pass;
    }
};

std::set<std::string> shapes_of(const std::vector<ObstructionDatum>& obs) {
    std::set<std::string> s;
    for (const auto& o : obs) s.insert(o.shape);
    return s;
}

std::set<std::string> shapes_of(const std::vector<DecompositionCandidate>& cands) {
    std::set<std::string> s;
    for (const auto& c : cands) s.insert(c.shape());
    return s;
}

std::string join(const std::set<std::string>& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : ", ") + x;
    return out.empty() ? "(empty)" : out;
}

}  // namespace

std::string run_selftest(const Caps& caps, bool& ok) {
    Checker ck;

    // dimension formulas
    ck.add("dim A_4 w2 = 10", rep_dimension(RepDescriptor(LieType(LieFamily::A, 4), 2)) == 10);
    ck.add("dim B_3 w3 = 8", rep_dimension(RepDescriptor(LieType(LieFamily::B, 3), 3)) == 8);
    ck.add("dim D_5 w4 = 16", rep_dimension(RepDescriptor(LieType(LieFamily::D, 5), 4)) == 16);

    // duality closed form vs explicit-matrix oracle on a few small cases
    for (const char* name : {"A_3 w2", "C_2 w1", "D_4 w1", "A_2 w1"}) {
        std::string s(name);
        RepDescriptor rep(LieType(family_from_char(s[0]), s[2] - '0'), s[5] - '0');
        ck.add(std::string("duality oracle agrees: ") + name, duality(rep) == duality_oracle(rep));
    }

    // multiplicity pairs
    {
        RepDescriptor a42(LieType(LieFamily::A, 4), 2);
        auto classes = admissible_cocharacter_classes(a42);
        bool found = false;
        for (const auto& c : classes)
            if (c.marker == 1) found = c.pair.m_id == 4 && c.pair.m_triv == 6;
        ck.add("A_4 w2 marker-1 pair (4,6)", found);
    }

    // binomial exclusion predicates
    ck.add("halfspin binomial set hits 6 and 70",
           is_exceptional_halfspin_binom(6).value && is_exceptional_halfspin_binom(70).value &&
               !is_exceptional_halfspin_binom(10).value);
    ck.add("central binomial set hits 6 and 70",
           is_central_binom(6).value && is_central_binom(70).value && !is_central_binom(20).value);

    // golden obstruction shapes
    {
        SignatureProfile a5{5, {{3, 3}, {2, 4}}, 0};
        auto v = nonspecial_verdict(a5, caps);
        bool pass = v.outcome == NonSpecialVerdict::Outcome::Inconclusive &&
                    shapes_of(v.obstructions) == std::set<std::string>{"A_1+A_2"};
        ck.add("A_5 profile {(3,3),(2,4)} -> A_1+A_2", pass, join(shapes_of(v.obstructions)));
    }
    {
        SignatureProfile a8{8, {{3, 6}}, 0};
        auto v = nonspecial_verdict(a8, caps);
        bool pass = v.outcome == NonSpecialVerdict::Outcome::Inconclusive &&
                    shapes_of(v.obstructions) == std::set<std::string>{"A_2+A_2"};
        ck.add("A_8 profile {(3,6)} -> A_2+A_2", pass, join(shapes_of(v.obstructions)));
    }

    // golden symplectic/orthogonal alternatives
    auto enumerate_for = [&](LieFamily fam, int rank, DualityType want) {
        EnumOptions opts;
        opts.target_dim = 2LL * rank;
        opts.ratio_set = {Rational(1)};
        opts.duality = want;
        opts.proper_only = true;
        opts.target_rep = RepDescriptor(LieType(fam, rank), 1);
        return enumerate_decompositions(opts, caps);
    };
    ck.add("C_4 alternatives = {A_1+A_1+A_1}",
           shapes_of(enumerate_for(LieFamily::C, 4, DualityType::Symplectic)) == std::set<std::string>{"A_1+A_1+A_1"});
    ck.add("C_6 alternatives = {A_1+A_3}",
           shapes_of(enumerate_for(LieFamily::C, 6, DualityType::Symplectic)) == std::set<std::string>{"A_1+A_3"});
    ck.add("D_4 alternatives = {B_3, A_1+C_2}",
           shapes_of(enumerate_for(LieFamily::D, 4, DualityType::Orthogonal)) ==
               std::set<std::string>{"B_3", "A_1+C_2"});
    ck.add("D_6 alternatives = {A_1+C_3}",
           shapes_of(enumerate_for(LieFamily::D, 6, DualityType::Orthogonal)) == std::set<std::string>{"A_1+C_3"});
    ck.add("D_35 alternatives = {A_7}",
           shapes_of(enumerate_for(LieFamily::D, 35, DualityType::Orthogonal)) == std::set<std::string>{"A_7"});

    // distinguished-factor tensor pairs
    {
        auto cand = make_candidate({RepDescriptor(LieType(LieFamily::A, 1), 1), RepDescriptor(LieType(LieFamily::A, 4), 1)});
        auto pairs = tensor_multiplicity_pairs(cand);
        std::set<std::pair<BigInt, BigInt>> expect{{5, 5}, {2, 8}, {8, 2}, {4, 6}, {6, 4}};
        ck.add("tensor pairs of A_1 x A_4 std", pairs == expect);
    }

    Json result = Json::object();
    result["checks"] = ck.checks;
    result["all_pass"] = ck.all;
    Json j = Json::object();
    j["version"] = "1";
    j["command"] = "selftest";
    j["input"] = Json::object();
    j["result"] = result;
    j["citations"] = Json::array();
    j["caveats"] = Json::array();
    ok = ck.all;
    return j.dump(2) + "\n";
}

}  // namespace mtshim
