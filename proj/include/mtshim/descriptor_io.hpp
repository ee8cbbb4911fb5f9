#pragma once

#include "mtshim/dispatch_embed.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mtshim {

// ---------------------------------------------------------------------------
// Strict JSON descriptor documents and deterministic machine-readable
// reports. Unknown fields are rejected; canonical re-serialization is
// byte-stable.
// ---------------------------------------------------------------------------

struct MtQuery {
    long long target_dim = 0;
    std::set<Rational> ratios;
    std::optional<DualityType> duality;
    bool proper_only = false;
    std::optional<RepDescriptor> target;
    bool exclude_self_dual = false;
};

struct ParsedFactor {
    SimpleAdjointDescriptor desc;
    std::optional<SignatureProfile> profile;
    AssertedFlags flags;
};

struct EmbedQueryData {
    ParsedFactor factor;
    EmbeddingPlanParams params;
};

struct DescriptorDocument {
    enum class Kind { Profile, SimpleFactor, Product, MtQuery, EmbedQuery } kind = Kind::Profile;
    std::optional<SignatureProfile> profile;
    std::vector<ParsedFactor> factors;
    std::optional<MtQuery> mtquery;
    std::optional<EmbedQueryData> embed;
};

DescriptorDocument parse_descriptor(const std::string& text);
std::string serialize_descriptor(const DescriptorDocument& doc);

struct CommandResult {
    int status = 0;  // 0 ok, 1 validation, 2 resource cap
    std::string output_json;
};

// Runs one CLI-level command ("classify", "nonspecial", "mtpairs", "dispatch",
// "pel", "reflex", "embed-plan", "selftest") against a descriptor document.
CommandResult run_command(const std::string& command, const std::string& input_json, const Caps& caps = {});

// Renders a report produced by run_command as human-readable text.
std::string render_text_report(const std::string& report_json);

// Golden-table and invariant spot checks; returns the selftest report JSON
// and sets ok to the conjunction of all checks.
std::string run_selftest(const Caps& caps, bool& ok);

}  // namespace mtshim
