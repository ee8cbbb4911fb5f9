// Command-line front end. All computation and rendering goes through the C
// API of the shared library; this binary handles argument parsing and I/O.

#include <mtshim.h>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open input file '" << path << "'\n";
        std::exit(1);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// Builds a profile document from --n / --signature flags.
std::string build_profile_doc(long long n, const std::vector<std::string>& signatures, long long compact) {
    std::ostringstream doc;
    doc << "{\"version\":\"1\",\"kind\":\"profile\",\"n\":" << n << ",\"signatures\":[";
    for (size_t i = 0; i < signatures.size(); ++i) {
        auto comma = signatures[i].find(',');
        if (comma == std::string::npos) {
            std::cerr << "error: --signature expects 'a,b'\n";
            std::exit(1);
        }
        doc << (i ? "," : "") << "[" << signatures[i].substr(0, comma) << "," << signatures[i].substr(comma + 1) << "]";
    }
    doc << "],\"compact_count\":" << compact << "}";
    return doc.str();
}

// Builds an mtquery document from --dim / --ratios / --duality / --proper flags.
std::string build_mtquery_doc(long long dim, const std::string& ratios, const std::string& duality, bool proper,
                              const std::string& target) {
    std::ostringstream doc;
    doc << "{\"version\":\"1\",\"kind\":\"mtquery\",\"target_dim\":" << dim << ",\"ratios\":[";
    std::stringstream rs(ratios);
    std::string item;
    bool first = true;
    while (std::getline(rs, item, ',')) {
        doc << (first ? "" : ",") << "\"" << json_escape(item) << "\"";
        first = false;
    }
    doc << "],\"duality\":\"" << json_escape(duality) << "\",\"proper_only\":" << (proper ? "true" : "false");
    if (!target.empty()) {
        // target as FAMILY:RANK:WEIGHT, e.g. D:6:1
        std::stringstream ts(target);
        std::string fam, rank, weight;
        std::getline(ts, fam, ':');
        std::getline(ts, rank, ':');
        std::getline(ts, weight, ':');
        if (fam.empty() || rank.empty() || weight.empty()) {
            std::cerr << "error: --target expects FAMILY:RANK:WEIGHT\n";
            std::exit(1);
        }
        doc << ",\"target\":{\"family\":\"" << json_escape(fam) << "\",\"rank\":" << rank << ",\"weight\":" << weight
            << "}";
    }
    doc << "}";
    return doc.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minuscule-representation and Shimura-type combinatorics toolkit"};
    app.require_subcommand(1);

    std::string input_path;
    std::string format = "json";
    long long search_cap = 0, closure_cap = 0, weights_cap = 0, dim_cap = 0;
    bool relaxed = false;

    app.add_option("--input", input_path, "input JSON document (default: stdin)");
    app.add_option("--format", format, "output format: json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cap", search_cap, "decomposition-search cap (candidates explored)");
    app.add_option("--closure-cap", closure_cap, "Galois closure size cap");
    app.add_option("--weights-cap", weights_cap, "weight enumeration dimension cap");
    app.add_option("--dim-cap", dim_cap, "target dimension cap for mtpairs");
    app.add_flag("--relaxed", relaxed,
                 "informational: the max-ratio-1 relaxed search engages automatically; this flag only marks intent");

    // nonspecial can take the profile inline
    long long ns_n = 0, ns_compact = 0;
    std::vector<std::string> ns_signatures;
    auto* ns = app.add_subcommand("nonspecial");
    ns->fallthrough();
    ns->add_option("--n", ns_n, "profile rank (with --signature, replaces --input)");
    ns->add_option("--signature", ns_signatures, "signature 'a,b'; repeatable");
    ns->add_option("--compact", ns_compact, "compact factor count");

    // mtpairs can take the query inline
    long long mt_dim = 0;
    std::string mt_ratios = "1", mt_duality = "any", mt_target;
    bool mt_proper = false;
    auto* mt = app.add_subcommand("mtpairs");
    mt->fallthrough();
    mt->add_option("--dim", mt_dim, "target dimension (with flags, replaces --input)");
    mt->add_option("--ratios", mt_ratios, "comma-separated reduced fractions (default '1')");
    mt->add_option("--duality", mt_duality, "any | orthogonal | symplectic | non-self-dual")
        ->check(CLI::IsMember({"any", "orthogonal", "symplectic", "non-self-dual"}));
    mt->add_flag("--proper", mt_proper, "exclude candidates of rank at or above the target's");
    mt->add_option("--target", mt_target, "target representation FAMILY:RANK:WEIGHT");

    for (const char* name : {"classify", "dispatch", "pel", "reflex", "embed-plan", "selftest"})
        app.add_subcommand(name)->fallthrough();

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    mtshim_ctx* ctx = mtshim_ctx_new();
    if (!ctx) {
        std::cerr << "error: out of memory\n";
        return 3;
    }
    if (search_cap > 0) mtshim_set_cap(ctx, "search", search_cap);
    if (closure_cap > 0) mtshim_set_cap(ctx, "closure", closure_cap);
    if (weights_cap > 0) mtshim_set_cap(ctx, "weights", weights_cap);
    if (dim_cap > 0) mtshim_set_cap(ctx, "target_dim", dim_cap);

    std::string input;
    if (command == "nonspecial" && ns_n > 0)
        input = build_profile_doc(ns_n, ns_signatures, ns_compact);
    else if (command == "mtpairs" && mt_dim > 0)
        input = build_mtquery_doc(mt_dim, mt_ratios, mt_duality, mt_proper, mt_target);
    else if (command != "selftest")
        input = read_input(input_path);

    char* output = nullptr;
    int status = mtshim_run(ctx, command.c_str(), input.c_str(), &output);
    std::string report = output ? output : "";
    mtshim_free(output);

    if (report.empty()) {
        std::cerr << "error: " << mtshim_last_error(ctx) << "\n";
        mtshim_ctx_free(ctx);
        return status == 0 ? 3 : status;
    }
    if (format == "text") {
        char* text = nullptr;
        if (mtshim_render_text(ctx, report.c_str(), &text) == MTSHIM_OK && text) {
            std::cout << text;
            mtshim_free(text);
        } else {
            std::cout << report;
        }
    } else {
        std::cout << report;
    }
    mtshim_ctx_free(ctx);
    return status;
}
