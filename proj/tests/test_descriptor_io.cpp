#include <doctest.h>

#include "mtshim/descriptor_io.hpp"

#include <json.hpp>

using namespace mtshim;
using Json = nlohmann::ordered_json;

namespace {

const char* kProfileDoc = R"({"version":"1","kind":"profile","n":8,"signatures":[[3,6]],"compact_count":0})";

const char* kFactorDoc = R"({
  "version": "1",
  "kind": "simple_factor",
  "family": "D",
  "rank": 5,
  "degree": 1,
  "real_data": [{"kind": "noncompact"}],
  "nu_x": [[0, 1]],
  "galois_generators": []
})";

}  // namespace

TEST_CASE("profile parsing and canonical round trip") {
    DescriptorDocument doc = parse_descriptor(kProfileDoc);
    CHECK(doc.kind == DescriptorDocument::Kind::Profile);
    CHECK(doc.profile->n == 8);
    REQUIRE(doc.profile->signatures.size() == 1);
    CHECK(doc.profile->signatures[0] == std::pair<long long, long long>{3, 6});

    std::string canonical = serialize_descriptor(doc);
    DescriptorDocument again = parse_descriptor(canonical);
    CHECK(serialize_descriptor(again) == canonical);  // byte-identical fixpoint
}

TEST_CASE("strict parsing") {
    CHECK_THROWS_AS(parse_descriptor("not json at all"), ValidationError);
    CHECK_THROWS_AS(parse_descriptor(R"({"kind":"profile","n":8,"signatures":[[3,6]]})"), ValidationError);
    CHECK_THROWS_AS(parse_descriptor(R"({"version":"2","kind":"profile","n":8,"signatures":[[3,6]]})"),
                    ValidationError);
    // unknown fields rejected
    CHECK_THROWS_AS(parse_descriptor(R"({"version":"1","kind":"profile","n":8,"signatures":[[3,6]],"zzz":1})"),
                    ValidationError);
    // invariant violations rejected
    CHECK_THROWS_AS(parse_descriptor(R"({"version":"1","kind":"profile","n":8,"signatures":[[6,3]]})"),
                    ValidationError);
    // non-reduced fractions rejected
    CHECK_THROWS_AS(
        parse_descriptor(R"({"version":"1","kind":"mtquery","target_dim":12,"ratios":["2/4"],"proper_only":false})"),
        ValidationError);
    // duplicate signatures accepted as a multiset
    auto doc = parse_descriptor(R"({"version":"1","kind":"profile","n":8,"signatures":[[3,6],[3,6]]})");
    CHECK(doc.profile->signatures.size() == 2);
}

TEST_CASE("factor documents") {
    DescriptorDocument doc = parse_descriptor(kFactorDoc);
    CHECK(doc.kind == DescriptorDocument::Kind::SimpleFactor);
    CHECK(doc.factors.front().desc.lie.label() == "D_5");
    std::string canonical = serialize_descriptor(doc);
    CHECK(serialize_descriptor(parse_descriptor(canonical)) == canonical);
}

TEST_CASE("classify command") {
    auto res = run_command("classify", kFactorDoc);
    CHECK(res.status == 0);
    Json j = Json::parse(res.output_json);
    CHECK(j["command"] == "classify");
    CHECK(j["result"]["type"] == "D_5^R");
    CHECK(j["result"]["inner"] == true);  // trivial action: three extremal orbits
    CHECK(j["result"]["reflex_degree"] == 1);
    CHECK(j["result"]["with_involution"] == false);
    CHECK(!j["citations"].empty());
}

TEST_CASE("nonspecial command carries the caveat and rule ids") {
    auto res = run_command("nonspecial", kProfileDoc);
    CHECK(res.status == 0);
    Json j = Json::parse(res.output_json);
    CHECK(j["result"]["outcome"] == "inconclusive");
    CHECK(j["result"]["obstructions"].size() == 3);  // the three A_2 x A_2 weight multisets
    for (const auto& od : j["result"]["obstructions"]) CHECK(od["shape"] == "A_2+A_2");
    REQUIRE(!j["caveats"].empty());
    std::string caveat = j["caveats"][0].get<std::string>();
    CHECK(caveat.find("numerical") != std::string::npos);

    auto ns = run_command("nonspecial", R"({"version":"1","kind":"profile","n":10,"signatures":[[5,6]]})");
    Json j2 = Json::parse(ns.output_json);
    CHECK(j2["result"]["outcome"] == "non-special");
    CHECK(j2["result"].contains("rule"));
}

TEST_CASE("mtpairs command") {
    auto res = run_command(
        "mtpairs", R"({"version":"1","kind":"mtquery","target_dim":9,"ratios":["1/2"],"proper_only":true})");
    CHECK(res.status == 0);
    Json j = Json::parse(res.output_json);
    CHECK(j["result"]["count"] == 3);
    for (const auto& c : j["result"]["candidates"]) CHECK(c["shape"] == "A_2+A_2");

    // byte-identical reports across runs
    auto res2 = run_command(
        "mtpairs", R"({"version":"1","kind":"mtquery","target_dim":9,"ratios":["1/2"],"proper_only":true})");
    CHECK(res.output_json == res2.output_json);
}

TEST_CASE("error reporting") {
    auto res = run_command("classify", "{broken");
    CHECK(res.status == 1);
    Json j = Json::parse(res.output_json);
    CHECK(j["error"]["kind"] == "validation");

    auto res2 = run_command("what-command", kProfileDoc);
    CHECK(res2.status == 1);

    Caps tiny;
    tiny.search_cap = 1;
    auto res3 = run_command(
        "mtpairs", R"({"version":"1","kind":"mtquery","target_dim":16,"ratios":["1"],"proper_only":false})", tiny);
    CHECK(res3.status == 2);
    Json j3 = Json::parse(res3.output_json);
    CHECK(j3["error"]["kind"] == "resource");
}

TEST_CASE("dispatch and pel commands") {
    std::string product = R"({
      "version": "1", "kind": "product",
      "factors": [
        {"family": "B", "rank": 3, "degree": 1, "real_data": [{"kind": "noncompact"}],
         "nu_x": [[0, 1]], "galois_generators": []},
        {"family": "D", "rank": 5, "degree": 1, "real_data": [{"kind": "noncompact"}],
         "nu_x": [[0, 1]], "galois_generators": []}
      ]
    })";
    auto res = run_command("dispatch", product);
    CHECK(res.status == 0);
    Json j = Json::parse(res.output_json);
    CHECK(j["result"]["dispatch"]["covered"] == true);
    CHECK(j["result"]["dispatch"]["factors"][0]["case"] == "b");
    CHECK(j["result"]["dispatch"]["factors"][1]["case"] == "e");

    auto pel = run_command("pel", product);
    Json pj = Json::parse(pel.output_json);
    CHECK(pj["result"]["pel_adjoint"] == false);  // B-type factor

    // A-type factor document with inline profile dispatches via nonspecial
    std::string afac = R"({
      "version": "1", "kind": "simple_factor",
      "family": "A", "rank": 4, "degree": 1,
      "real_data": [{"kind": "signature", "a": 2, "b": 3}],
      "nu_x": [[0, 2]], "galois_generators": []
    })";
    auto ares = run_command("dispatch", afac);
    Json aj = Json::parse(ares.output_json);
    CHECK(aj["result"]["dispatch"]["covered"] == true);
    CHECK(aj["result"]["dispatch"]["factors"][0]["case"] == "a");
}

TEST_CASE("embed-plan command") {
    std::string q = R"({
      "version": "1", "kind": "embedquery",
      "factor": {"family": "D", "rank": 5, "degree": 1, "real_data": [{"kind": "noncompact"}],
                 "nu_x": [[0, 1]], "galois_generators": []},
      "params": {"k_degree": 2}
    })";
    auto res = run_command("embed-plan", q);
    CHECK(res.status == 0);
    Json j = Json::parse(res.output_json);
    CHECK(j["result"]["label"] == "D_5^R");
    CHECK(j["result"]["group_a"] == "SU(16,16)");
    CHECK(j["result"]["dim_carrier"] == "128");
}

TEST_CASE("selftest command") {
    auto res = run_command("selftest", "");
    CHECK(res.status == 0);
    Json j = Json::parse(res.output_json);
    CHECK(j["result"]["all_pass"] == true);
}

TEST_CASE("text rendering") {
    auto res = run_command("nonspecial", kProfileDoc);
    std::string text = render_text_report(res.output_json);
    CHECK(text.find("inconclusive") != std::string::npos);
    CHECK(text.find("A_2+A_2") != std::string::npos);
}
