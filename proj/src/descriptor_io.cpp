#include "mtshim/descriptor_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace mtshim {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ValidationError(msg); }

void check_keys(const Json& j, const std::string& where, const std::vector<std::string>& required,
                const std::vector<std::string>& optional = {}) {
    if (!j.is_object()) fail(where + ": expected an object");
    for (const auto& k : required)
        if (!j.contains(k)) fail(where + ": missing field '" + k + "'");
    for (const auto& [k, v] : j.items()) {
        bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                     std::find(optional.begin(), optional.end(), k) != optional.end();
        if (!known) fail(where + ": unknown field '" + k + "'");
    }
}

long long get_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where + ": expected an integer");
    return j.get<long long>();
}

std::string get_str(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where + ": expected a string");
    return j.get<std::string>();
}

bool get_bool(const Json& j, const std::string& where) {
    if (!j.is_boolean()) fail(where + ": expected a boolean");
    return j.get<bool>();
}

std::string duality_str(DualityType d) { return duality_name(d); }

DualityType duality_from_str(const std::string& s) {
    if (s == "orthogonal") return DualityType::Orthogonal;
    if (s == "symplectic") return DualityType::Symplectic;
    if (s == "non-self-dual") return DualityType::NonSelfDual;
    fail("unknown duality '" + s + "'");
}

// ---- document parsing ------------------------------------------------------

SignatureProfile parse_profile_obj(const Json& j, const std::string& where) {
    check_keys(j, where, {"n", "signatures"}, {"compact_count"});
    SignatureProfile p;
    p.n = static_cast<int>(get_int(j["n"], where + ".n"));
    if (!j["signatures"].is_array()) fail(where + ".signatures: expected an array");
    for (const auto& s : j["signatures"]) {
        if (!s.is_array() || s.size() != 2) fail(where + ".signatures: entries must be [a, b] pairs");
        p.signatures.emplace_back(get_int(s[0], where + ".signatures.a"), get_int(s[1], where + ".signatures.b"));
    }
    if (j.contains("compact_count")) p.compact_count = get_int(j["compact_count"], where + ".compact_count");
    validate_profile(p);
    return p;
}

RepDescriptor parse_rep_obj(const Json& j, const std::string& where) {
    check_keys(j, where, {"family", "rank", "weight"});
    std::string fam = get_str(j["family"], where + ".family");
    if (fam.size() != 1) fail(where + ".family: expected one of A, B, C, D");
    return RepDescriptor(LieType(family_from_char(fam[0]), static_cast<int>(get_int(j["rank"], where + ".rank"))),
                         static_cast<int>(get_int(j["weight"], where + ".weight")));
}

ParsedFactor parse_factor_obj(const Json& j, const std::string& where) {
    check_keys(j, where, {"family", "rank", "degree", "real_data", "nu_x", "galois_generators"},
               {"profile", "flags"});
    ParsedFactor f;
    std::string fam = get_str(j["family"], where + ".family");
    if (fam.size() != 1) fail(where + ".family: expected one of A, B, C, D");
    f.desc.lie = LieType(family_from_char(fam[0]), static_cast<int>(get_int(j["rank"], where + ".rank")));
    f.desc.degree = static_cast<int>(get_int(j["degree"], where + ".degree"));
    if (!j["real_data"].is_array()) fail(where + ".real_data: expected an array");
    for (const auto& r : j["real_data"]) {
        std::string kind = get_str(r.is_object() && r.contains("kind") ? r["kind"] : Json{}, where + ".real_data.kind");
        RealFactor rf;
        if (kind == "compact") {
            check_keys(r, where + ".real_data", {"kind"});
            rf.kind = RealFactor::Kind::Compact;
        } else if (kind == "noncompact") {
            check_keys(r, where + ".real_data", {"kind"});
            rf.kind = RealFactor::Kind::NonCompact;
        } else if (kind == "signature") {
            check_keys(r, where + ".real_data", {"kind", "a", "b"});
            rf.kind = RealFactor::Kind::Signature;
            rf.a = get_int(r["a"], where + ".real_data.a");
            rf.b = get_int(r["b"], where + ".real_data.b");
        } else {
            fail(where + ".real_data: unknown kind '" + kind + "'");
        }
        f.desc.real_data.push_back(rf);
    }
    if (!j["nu_x"].is_array()) fail(where + ".nu_x: expected an array");
    for (const auto& v : j["nu_x"]) {
        if (!v.is_array() || v.size() != 2) fail(where + ".nu_x: entries must be [copy, node] pairs");
        f.desc.nu_x.push_back({static_cast<int>(get_int(v[0], where + ".nu_x.copy")),
                               static_cast<int>(get_int(v[1], where + ".nu_x.node"))});
    }
    std::sort(f.desc.nu_x.begin(), f.desc.nu_x.end());
    if (!j["galois_generators"].is_array()) fail(where + ".galois_generators: expected an array");
    for (const auto& g : j["galois_generators"]) {
        if (!g.is_array()) fail(where + ".galois_generators: expected arrays of vertex indices");
        Permutation p;
        for (const auto& x : g) p.push_back(static_cast<int>(get_int(x, where + ".galois_generators.entry")));
        f.desc.galois.generators.push_back(std::move(p));
    }
    f.desc.galois.degree = f.desc.degree;
    if (j.contains("profile")) f.profile = parse_profile_obj(j["profile"], where + ".profile");
    if (j.contains("flags")) {
        const Json& fl = j["flags"];
        check_keys(fl, where + ".flags", {}, {"q_factors_simple_distinct", "q_involution", "note"});
        if (fl.contains("q_factors_simple_distinct"))
            f.flags.q_factors_simple_distinct = get_bool(fl["q_factors_simple_distinct"], where + ".flags");
        if (fl.contains("q_involution")) f.flags.q_involution = get_bool(fl["q_involution"], where + ".flags");
        if (fl.contains("note")) f.flags.note = get_str(fl["note"], where + ".flags.note");
    }
    validate_descriptor(f.desc);
    return f;
}

MtQuery parse_mtquery_obj(const Json& j, const std::string& where) {
    check_keys(j, where, {"target_dim", "ratios"}, {"duality", "proper_only", "target", "exclude_self_dual"});
    MtQuery q;
    q.target_dim = get_int(j["target_dim"], where + ".target_dim");
    if (!j["ratios"].is_array()) fail(where + ".ratios: expected an array of fraction strings");
    for (const auto& r : j["ratios"]) q.ratios.insert(parse_reduced_fraction(get_str(r, where + ".ratios")));
    if (j.contains("duality")) {
        std::string d = get_str(j["duality"], where + ".duality");
        if (d != "any") q.duality = duality_from_str(d);
    }
    if (j.contains("proper_only")) q.proper_only = get_bool(j["proper_only"], where + ".proper_only");
    if (j.contains("target")) q.target = parse_rep_obj(j["target"], where + ".target");
    if (j.contains("exclude_self_dual")) q.exclude_self_dual = get_bool(j["exclude_self_dual"], where);
    // infer the ambient type from the duality when properness is requested bare
    if (q.proper_only && !q.target) {
        if (q.duality == DualityType::Symplectic && q.target_dim % 2 == 0)
            q.target = RepDescriptor(LieType(LieFamily::C, static_cast<int>(q.target_dim / 2)), 1);
        else if (q.duality == DualityType::Orthogonal && q.target_dim % 2 == 0 && q.target_dim >= 6)
            q.target = RepDescriptor(LieType(LieFamily::D, static_cast<int>(q.target_dim / 2)), 1);
        else if (q.target_dim >= 2)
            q.target = RepDescriptor(LieType(LieFamily::A, static_cast<int>(q.target_dim - 1)), 1);
    }
    return q;
}

EmbedQueryData parse_embedquery_obj(const Json& j, const std::string& where) {
    check_keys(j, where, {"factor"}, {"params", "single_halfspin"});
    EmbedQueryData e;
    e.factor = parse_factor_obj(j["factor"], where + ".factor");
    if (j.contains("params")) {
        const Json& p = j["params"];
        check_keys(p, where + ".params", {}, {"f0_degree", "k_degree"});
        if (p.contains("f0_degree")) e.params.f0_degree = get_int(p["f0_degree"], where + ".params.f0_degree");
        if (p.contains("k_degree")) e.params.k_degree = get_int(p["k_degree"], where + ".params.k_degree");
    }
    if (j.contains("single_halfspin")) e.params.single_halfspin = get_bool(j["single_halfspin"], where);
    return e;
}

// ---- canonical serialization ------------------------------------------------

Json profile_to_json(const SignatureProfile& p) {
    Json j = Json::object();
    j["n"] = p.n;
    j["signatures"] = Json::array();
    for (const auto& [a, b] : p.signatures) j["signatures"].push_back(Json::array({a, b}));
    j["compact_count"] = p.compact_count;
    return j;
}

Json rep_to_json(const RepDescriptor& r) {
    Json j = Json::object();
    j["family"] = std::string(1, family_char(r.lie.family));
    j["rank"] = r.lie.rank;
    j["weight"] = r.weight.index;
    return j;
}

Json factor_to_json(const ParsedFactor& f) {
    Json j = Json::object();
    j["family"] = std::string(1, family_char(f.desc.lie.family));
    j["rank"] = f.desc.lie.rank;
    j["degree"] = f.desc.degree;
    j["real_data"] = Json::array();
    for (const auto& r : f.desc.real_data) {
        Json rj = Json::object();
        if (r.kind == RealFactor::Kind::Compact)
            rj["kind"] = "compact";
        else if (r.kind == RealFactor::Kind::NonCompact)
            rj["kind"] = "noncompact";
        else {
            rj["kind"] = "signature";
            rj["a"] = r.a;
            rj["b"] = r.b;
        }
        j["real_data"].push_back(rj);
    }
    j["nu_x"] = Json::array();
    for (const auto& v : f.desc.nu_x) j["nu_x"].push_back(Json::array({v.copy, v.node}));
    j["galois_generators"] = Json::array();
    for (const auto& g : f.desc.galois.generators) {
        Json gj = Json::array();
        for (int x : g) gj.push_back(x);
        j["galois_generators"].push_back(gj);
    }
    if (f.profile) j["profile"] = profile_to_json(*f.profile);
    if (f.flags.q_factors_simple_distinct || f.flags.q_involution || !f.flags.note.empty()) {
        Json fl = Json::object();
        if (f.flags.q_factors_simple_distinct) fl["q_factors_simple_distinct"] = *f.flags.q_factors_simple_distinct;
        if (f.flags.q_involution) fl["q_involution"] = *f.flags.q_involution;
        if (!f.flags.note.empty()) fl["note"] = f.flags.note;
        j["flags"] = fl;
    }
    return j;
}

Json document_to_json(const DescriptorDocument& doc) {
    Json j = Json::object();
    j["version"] = "1";
    switch (doc.kind) {
        case DescriptorDocument::Kind::Profile: {
            j["kind"] = "profile";
            Json p = profile_to_json(*doc.profile);
            for (auto& [k, v] : p.items()) j[k] = v;
            break;
        }
        case DescriptorDocument::Kind::SimpleFactor: {
            j["kind"] = "simple_factor";
            Json f = factor_to_json(doc.factors.front());
            for (auto& [k, v] : f.items()) j[k] = v;
            break;
        }
        case DescriptorDocument::Kind::Product: {
            j["kind"] = "product";
            j["factors"] = Json::array();
            for (const auto& f : doc.factors) j["factors"].push_back(factor_to_json(f));
            break;
        }
        case DescriptorDocument::Kind::MtQuery: {
            j["kind"] = "mtquery";
            const MtQuery& q = *doc.mtquery;
            j["target_dim"] = q.target_dim;
            j["ratios"] = Json::array();
            for (const auto& r : q.ratios) j["ratios"].push_back(rational_to_string(r));
            j["duality"] = q.duality ? duality_str(*q.duality) : "any";
            j["proper_only"] = q.proper_only;
            if (q.target) j["target"] = rep_to_json(*q.target);
            j["exclude_self_dual"] = q.exclude_self_dual;
            break;
        }
        case DescriptorDocument::Kind::EmbedQuery: {
            j["kind"] = "embedquery";
            j["factor"] = factor_to_json(doc.embed->factor);
            Json p = Json::object();
            if (doc.embed->params.f0_degree) p["f0_degree"] = *doc.embed->params.f0_degree;
            if (doc.embed->params.k_degree) p["k_degree"] = *doc.embed->params.k_degree;
            j["params"] = p;
            j["single_halfspin"] = doc.embed->params.single_halfspin;
            break;
        }
    }
    return j;
}

}  // namespace

DescriptorDocument parse_descriptor(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) fail("document: expected a JSON object");
    if (!j.contains("version") || !j["version"].is_string() || j["version"] != "1")
        fail("document: unsupported or missing version (expected \"1\")");
    if (!j.contains("kind")) fail("document: missing kind");
    std::string kind = get_str(j["kind"], "document.kind");

    DescriptorDocument doc;
    Json body = j;
    body.erase("version");
    body.erase("kind");
    if (kind == "profile") {
        doc.kind = DescriptorDocument::Kind::Profile;
        doc.profile = parse_profile_obj(body, "profile");
    } else if (kind == "simple_factor") {
        doc.kind = DescriptorDocument::Kind::SimpleFactor;
        doc.factors.push_back(parse_factor_obj(body, "simple_factor"));
    } else if (kind == "product") {
        doc.kind = DescriptorDocument::Kind::Product;
        check_keys(body, "product", {"factors"});
        if (!body["factors"].is_array() || body["factors"].empty()) fail("product.factors: expected a nonempty array");
        int idx = 0;
        for (const auto& f : body["factors"])
            doc.factors.push_back(parse_factor_obj(f, "product.factors[" + std::to_string(idx++) + "]"));
    } else if (kind == "mtquery") {
        doc.kind = DescriptorDocument::Kind::MtQuery;
        doc.mtquery = parse_mtquery_obj(body, "mtquery");
    } else if (kind == "embedquery") {
        doc.kind = DescriptorDocument::Kind::EmbedQuery;
        doc.embed = parse_embedquery_obj(body, "embedquery");
    } else {
        fail("document: unknown kind '" + kind + "'");
    }
    return doc;
}

std::string serialize_descriptor(const DescriptorDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

namespace {

Json rep_report_json(const RepDescriptor& rep) {
    RepDescriptor c = rep.canonical();
    Json j = rep_to_json(c);
    j["dim"] = rep_dimension(c).str();
    j["duality"] = duality_str(duality(c));
    std::string alias = c.alias_label();
    if (!alias.empty()) j["alias"] = alias;
    return j;
}

Json candidate_json(const DecompositionCandidate& cand, bool with_pairs) {
    Json j = Json::object();
    j["shape"] = cand.shape();
    j["factors"] = Json::array();
    for (const auto& f : cand.factors) j["factors"].push_back(rep_report_json(f));
    j["total_dim"] = cand.total_dim;
    j["total_rank"] = cand.total_rank;
    j["duality"] = duality_str(cand.total_duality);
    j["realizable_ratios"] = Json::array();
    for (const auto& r : cand.realizable_ratios) j["realizable_ratios"].push_back(rational_to_string(r));
    if (with_pairs) {
        j["tensor_pairs"] = Json::array();
        for (const auto& [p, q] : tensor_multiplicity_pairs(cand))
            j["tensor_pairs"].push_back(Json::array({p.str(), q.str()}));
    }
    return j;
}

Json obstruction_json(const ObstructionDatum& od) {
    Json j = Json::object();
    j["shape"] = od.shape;
    j["rank_sum"] = od.rank_sum;
    j["relaxed"] = od.relaxed;
    j["covers_all_ratios"] = od.covers_all_ratios;
    j["factors"] = Json::array();
    for (const auto& f : od.factors) {
        Json fj = rep_report_json(f.rep);
        fj["sd_standard"] = f.sd_standard;
        if (f.sd_standard) {
            fj["split_a"] = f.a.str();
            fj["split_b"] = f.b.str();
        } else {
            fj["rs"] = Json::array({f.a.str(), f.b.str()});
        }
        fj["ratio"] = rational_to_string(f.ratio);
        j["factors"].push_back(fj);
    }
    return j;
}

Json nonspecial_json(const NonSpecialVerdict& v) {
    Json j = Json::object();
    j["outcome"] = v.outcome == NonSpecialVerdict::Outcome::NonSpecial ? "non-special" : "inconclusive";
    if (v.outcome == NonSpecialVerdict::Outcome::NonSpecial) j["rule"] = v.rule;
    j["relaxed"] = v.relaxed;
    j["obstructions"] = Json::array();
    for (const auto& od : v.obstructions) j["obstructions"].push_back(obstruction_json(od));
    if (!v.partial.empty()) {
        j["partial_coverage_candidates"] = Json::array();
        for (const auto& od : v.partial) j["partial_coverage_candidates"].push_back(obstruction_json(od));
    }
    return j;
}

Json wrap_report(const std::string& command, const DescriptorDocument& doc, Json result, Json citations,
                 Json caveats) {
    Json j = Json::object();
    j["version"] = "1";
    j["command"] = command;
    j["input"] = document_to_json(doc);
    j["result"] = std::move(result);
    j["citations"] = std::move(citations);
    j["caveats"] = std::move(caveats);
    return j;
}

FactorInput to_factor_input(const ParsedFactor& pf, const Caps& caps) {
    FactorInput fi;
    fi.desc = pf.desc;
    fi.label = classify_simple_type(pf.desc, caps);
    fi.profile = pf.profile;
    fi.flags = pf.flags;
    if (fi.label.kind == ShimuraTypeKind::A && !fi.profile) {
        // derive the profile from the per-copy signatures when present
        SignatureProfile p;
        p.n = fi.label.rank;
        for (const auto& rf : pf.desc.real_data) {
            if (rf.kind == RealFactor::Kind::Signature)
                p.signatures.emplace_back(std::min(rf.a, rf.b), std::max(rf.a, rf.b));
            else if (rf.kind == RealFactor::Kind::Compact)
                ++p.compact_count;
        }
        if (!p.signatures.empty()) fi.profile = p;
    }
    return fi;
}

Json dispatch_json(const DispatchReport& report) {
    Json j = Json::object();
    j["covered"] = report.covered;
    j["factors"] = Json::array();
    for (const auto& fv : report.factors) {
        Json fj = Json::object();
        fj["label"] = fv.label.label();
        fj["case"] = case_name(fv.case_label.id);
        fj["reason"] = fv.case_label.reason;
        if (fv.nonspecial) fj["nonspecial"] = nonspecial_json(*fv.nonspecial);
        if (!fv.proper_shapes.empty()) {
            fj["proper_shapes"] = Json::array();
            for (const auto& c : fv.proper_shapes) fj["proper_shapes"].push_back(candidate_json(c, false));
        }
        j["factors"].push_back(fj);
    }
    return j;
}

}  // namespace

CommandResult run_command(const std::string& command, const std::string& input_json, const Caps& caps) {
    try {
        if (command == "selftest") {
            bool ok = false;
            std::string out = run_selftest(caps, ok);
            return {ok ? 0 : 1, out};
        }
        DescriptorDocument doc = parse_descriptor(input_json);
        Json caveats = Json::array();

        if (command == "classify" || command == "reflex") {
            if (doc.kind != DescriptorDocument::Kind::SimpleFactor)
                fail(command + " expects a simple_factor document");
            const auto& pf = doc.factors.front();
            Json result = Json::object();
            Json citations = Json::array();
            if (command == "classify") {
                ClassificationReport r = classify(pf.desc, caps);
                result["type"] = r.type_label.label();
                result["with_involution"] = r.with_involution;
                result["inner"] = r.inner;
                result["reflex_degree"] = r.reflex_degree;
                result["compact_copies"] = r.compact_copies;
                result["rules"] = Json::object({{"type", "marked-vertex-orbit"},
                                                {"with_involution", "opposition-involution"},
                                                {"inner", "extremal-orbit-count"},
                                                {"reflex_degree", "marked-set-stabilizer-index"}});
                citations.push_back("rule:marked-vertex-orbit");
                citations.push_back("rule:opposition-involution");
                citations.push_back("rule:extremal-orbit-count");
                citations.push_back("rule:marked-set-stabilizer-index");
            } else {
                result["reflex_degree"] = reflex_degree(pf.desc, caps);
                result["rule"] = "marked-set-stabilizer-index";
                citations.push_back("rule:marked-set-stabilizer-index");
            }
            return {0, wrap_report(command, doc, result, citations, caveats).dump(2) + "\n"};
        }

        if (command == "nonspecial") {
            if (doc.kind != DescriptorDocument::Kind::Profile) fail("nonspecial expects a profile document");
            NonSpecialVerdict v = nonspecial_verdict(*doc.profile, caps);
            Json result = nonspecial_json(v);
            RatioData rd = ratio_set(*doc.profile);
            Json ratios = Json::array();
            for (const auto& r : rd.C) ratios.push_back(rational_to_string(r));
            result["ratio_set"] = ratios;
            Json citations = Json::array();
            citations.push_back(v.outcome == NonSpecialVerdict::Outcome::NonSpecial ? "rule:" + v.rule
                                                                                    : "rule:obstruction-search");
            caveats.push_back(kNonSpecialCaveat);
            return {0, wrap_report(command, doc, result, citations, caveats).dump(2) + "\n"};
        }

        if (command == "mtpairs") {
            if (doc.kind != DescriptorDocument::Kind::MtQuery) fail("mtpairs expects an mtquery document");
            const MtQuery& q = *doc.mtquery;
            EnumOptions opts;
            opts.target_dim = q.target_dim;
            opts.ratio_set = q.ratios;
            opts.duality = q.duality;
            opts.proper_only = q.proper_only;
            opts.target_rep = q.target;
            opts.exclude_self_dual = q.exclude_self_dual;
            auto candidates = enumerate_decompositions(opts, caps);
            Json result = Json::object();
            result["count"] = candidates.size();
            result["candidates"] = Json::array();
            for (const auto& c : candidates) result["candidates"].push_back(candidate_json(c, true));
            result["rule"] = "distinguished-factor-model";
            Json citations = Json::array({"rule:distinguished-factor-model"});
            caveats.push_back(
                "Each admissible cocharacter is modeled as acting through exactly one tensor factor; mixed "
                "cocharacters across factors are not modeled.");
            return {0, wrap_report(command, doc, result, citations, caveats).dump(2) + "\n"};
        }

        if (command == "dispatch" || command == "pel") {
            if (doc.kind != DescriptorDocument::Kind::SimpleFactor && doc.kind != DescriptorDocument::Kind::Product)
                fail(command + " expects a simple_factor or product document");
            std::vector<FactorInput> inputs;
            for (const auto& pf : doc.factors) inputs.push_back(to_factor_input(pf, caps));
            Json citations = Json::array();
            if (command == "pel") {
                std::vector<std::pair<SimpleAdjointDescriptor, TypeLabel>> pairs;
                for (const auto& fi : inputs) pairs.emplace_back(fi.desc, fi.label);
                PelReport r = is_pel_adjoint(pairs, caps);
                Json result = Json::object();
                result["pel_adjoint"] = r.pel_adjoint;
                result["factors"] = Json::array();
                for (size_t i = 0; i < r.factors.size(); ++i) {
                    Json fj = Json::object();
                    fj["label"] = inputs[i].label.label();
                    fj["admissible"] = r.factors[i].admissible;
                    fj["reason"] = r.factors[i].reason;
                    result["factors"].push_back(fj);
                }
                result["rule"] = "pel-adjoint-characterization";
                citations.push_back("rule:pel-adjoint-characterization");
                return {0, wrap_report(command, doc, result, citations, caveats).dump(2) + "\n"};
            }
            DispatchReport dr = dispatch_product(inputs, caps);
            ConditionalReport cr = conditional_d4h_check(inputs, caps);
            Json result = Json::object();
            result["dispatch"] = dispatch_json(dr);
            Json cj = Json::object();
            cj["status"] = cr.status == ConditionalReport::Status::Applicable      ? "applicable"
                           : cr.status == ConditionalReport::Status::NotApplicable ? "not-applicable"
                                                                                 : "cannot-evaluate";
            cj["reason"] = cr.reason;
            cj["asserted_notes"] = Json::array();
            for (const auto& nte : cr.asserted_notes) cj["asserted_notes"].push_back(nte);
            result["conditional"] = cj;
            for (const auto& fv : dr.factors) citations.push_back("rule:case-" + case_name(fv.case_label.id));
            caveats.push_back(kNonSpecialCaveat);
            if (!cr.asserted_notes.empty())
                caveats.push_back("The conditional verdict is conditional on caller-asserted q-adic hypotheses.");
            return {0, wrap_report(command, doc, result, citations, caveats).dump(2) + "\n"};
        }

        if (command == "embed-plan") {
            if (doc.kind != DescriptorDocument::Kind::EmbedQuery) fail("embed-plan expects an embedquery document");
            FactorInput fi = to_factor_input(doc.embed->factor, caps);
            bool inner = is_inner(fi.desc, caps);
            EmbeddingPlan plan = embedding_plan(fi.label, inner, doc.embed->params);
            Json result = Json::object();
            result["label"] = fi.label.label();
            result["inner"] = inner;
            result["group_a"] = plan.group_a;
            result["n4_plus_1"] = plan.n4_plus_1.str();
            result["degree_bound_f1_over_f"] = plan.degree_bound_f1_over_f;
            result["kernel_trivial"] = plan.kernel_trivial;
            result["dim_formula"] = plan.dim_formula;
            if (plan.dim_carrier) result["dim_carrier"] = plan.dim_carrier->str();
            if (plan.m_bound) result["m_bound"] = plan.m_bound->str();
            result["chain"] = Json::array();
            for (const auto& s : plan.chain) result["chain"].push_back(s);
            result["notes"] = plan.notes;
            result["rule"] = "unitary-hull-plan";
            Json citations = Json::array({"rule:unitary-hull-plan"});
            if (!plan.dim_carrier)
                caveats.push_back("No splitting-degree parameter supplied; the carrier dimension is symbolic.");
            return {0, wrap_report(command, doc, result, citations, caveats).dump(2) + "\n"};
        }

        fail("unknown command '" + command + "'");
    } catch (const ResourceError& e) {
        Json err = Json::object({{"error", Json::object({{"kind", "resource"}, {"message", e.what()}})}});
        return {2, err.dump(2) + "\n"};
    } catch (const ValidationError& e) {
        Json err = Json::object({{"error", Json::object({{"kind", "validation"}, {"message", e.what()}})}});
        return {1, err.dump(2) + "\n"};
    }
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

std::string render_text_report(const std::string& report_json) {
    Json j = Json::parse(report_json);
    std::ostringstream out;
    if (j.contains("error")) {
        out << "error (" << j["error"]["kind"].get<std::string>() << "): " << j["error"]["message"].get<std::string>()
            << "\n";
        return out.str();
    }
    std::string cmd = j["command"].get<std::string>();
    const Json& r = j["result"];
    if (cmd == "classify") {
        out << "type: " << r["type"].get<std::string>() << "\n"
            << "with_involution: " << (r["with_involution"].get<bool>() ? "yes" : "no") << "\n"
            << "inner: " << (r["inner"].get<bool>() ? "yes" : "no") << "\n"
            << "reflex_degree: " << r["reflex_degree"].get<long long>() << "\n"
            << "compact_copies: " << r["compact_copies"].get<long long>() << "\n";
    } else if (cmd == "reflex") {
        out << "reflex_degree: " << r["reflex_degree"].get<long long>() << "\n";
    } else if (cmd == "nonspecial") {
        out << "outcome: " << r["outcome"].get<std::string>() << "\n";
        if (r.contains("rule")) out << "rule: " << r["rule"].get<std::string>() << "\n";
        out << "ratio_set: ";
        for (const auto& x : r["ratio_set"]) out << x.get<std::string>() << " ";
        out << "\n";
        for (const auto& od : r["obstructions"])
            out << "obstruction: " << od["shape"].get<std::string>() << " (rank sum "
                << od["rank_sum"].get<long long>() << (od["relaxed"].get<bool>() ? ", relaxed" : "") << ")\n";
    } else if (cmd == "mtpairs") {
        out << "candidates: " << r["count"].get<long long>() << "\n";
        for (const auto& c : r["candidates"]) {
            out << "  " << c["shape"].get<std::string>() << " dim " << c["total_dim"].get<long long>() << " "
                << c["duality"].get<std::string>() << " [";
            for (const auto& f : c["factors"]) {
                out << " " << f["family"].get<std::string>() << "_" << f["rank"].get<long long>() << " w"
                    << f["weight"].get<long long>();
            }
            out << " ]\n";
        }
    } else if (cmd == "dispatch") {
        out << "covered: " << (r["dispatch"]["covered"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& f : r["dispatch"]["factors"]) {
            out << "  " << f["label"].get<std::string>() << ": case " << f["case"].get<std::string>() << " ("
                << f["reason"].get<std::string>() << ")\n";
            if (f.contains("proper_shapes"))
                for (const auto& c : f["proper_shapes"]) out << "    alternative: " << c["shape"].get<std::string>() << "\n";
        }
        out << "conditional: " << r["conditional"]["status"].get<std::string>() << " ("
            << r["conditional"]["reason"].get<std::string>() << ")\n";
    } else if (cmd == "pel") {
        out << "pel_adjoint: " << (r["pel_adjoint"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& f : r["factors"])
            out << "  " << f["label"].get<std::string>() << ": " << (f["admissible"].get<bool>() ? "ok" : "fails")
                << " (" << f["reason"].get<std::string>() << ")\n";
    } else if (cmd == "embed-plan") {
        out << "label: " << r["label"].get<std::string>() << "\n"
            << "group_a: " << r["group_a"].get<std::string>() << "\n"
            << "degree_bound: " << r["degree_bound_f1_over_f"].get<long long>() << "\n"
            << "kernel_trivial: " << (r["kernel_trivial"].get<bool>() ? "yes" : "no") << "\n"
            << "dim_formula: " << r["dim_formula"].get<std::string>() << "\n";
        if (r.contains("dim_carrier")) out << "dim_carrier: " << r["dim_carrier"].get<std::string>() << "\n";
        for (const auto& s : r["chain"]) out << "  chain: " << s.get<std::string>() << "\n";
    } else if (cmd == "selftest") {
        for (const auto& c : r["checks"])
            out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "\n";
        out << (r["all_pass"].get<bool>() ? "all checks passed" : "some checks FAILED") << "\n";
    } else {
        out << report_json;
    }
    return out.str();
}

}  // namespace mtshim
