#include "mtshim.h"

#include "mtshim/descriptor_io.hpp"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <string>

struct mtshim_ctx {
    mtshim::Caps caps;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int guarded(mtshim_ctx* ctx, const std::function<int()>& body) {
    try {
        ctx->last_error.clear();
        return body();
    } catch (const mtshim::ResourceError& e) {
        ctx->last_error = e.what();
        return MTSHIM_ERESOURCE;
    } catch (const mtshim::ValidationError& e) {
        ctx->last_error = e.what();
        return MTSHIM_EVALIDATION;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return MTSHIM_EINTERNAL;
    }
}

}  // namespace

extern "C" {

mtshim_ctx* mtshim_ctx_new(void) { return new (std::nothrow) mtshim_ctx(); }

void mtshim_ctx_free(mtshim_ctx* ctx) { delete ctx; }

int mtshim_set_cap(mtshim_ctx* ctx, const char* name, long long value) {
    if (!ctx || !name) return MTSHIM_EARG;
    if (value < 1) {
        ctx->last_error = "cap values must be positive";
        return MTSHIM_EVALIDATION;
    }
    std::string n(name);
    if (n == "search")
        ctx->caps.search_cap = value;
    else if (n == "closure")
        ctx->caps.closure_cap = value;
    else if (n == "weights")
        ctx->caps.weight_enum_cap = value;
    else if (n == "target_dim")
        ctx->caps.target_dim_cap = value;
    else {
        ctx->last_error = "unknown cap '" + n + "'";
        return MTSHIM_EARG;
    }
    return MTSHIM_OK;
}

int mtshim_run(mtshim_ctx* ctx, const char* command, const char* input_json, char** output) {
    if (!ctx || !command || !output) return MTSHIM_EARG;
    *output = nullptr;
    return guarded(ctx, [&] {
        mtshim::CommandResult res = mtshim::run_command(command, input_json ? input_json : "", ctx->caps);
        *output = dup_string(res.output_json);
        if (!*output) return MTSHIM_EINTERNAL;
        if (res.status == 1) {
            ctx->last_error = "validation error (see report)";
            return MTSHIM_EVALIDATION;
        }
        if (res.status == 2) {
            ctx->last_error = "resource cap exceeded (see report)";
            return MTSHIM_ERESOURCE;
        }
        return MTSHIM_OK;
    });
}

int mtshim_render_text(mtshim_ctx* ctx, const char* report_json, char** text_out) {
    if (!ctx || !report_json || !text_out) return MTSHIM_EARG;
    *text_out = nullptr;
    return guarded(ctx, [&] {
        *text_out = dup_string(mtshim::render_text_report(report_json));
        return *text_out ? MTSHIM_OK : MTSHIM_EINTERNAL;
    });
}

const char* mtshim_last_error(const mtshim_ctx* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void mtshim_free(char* str) { std::free(str); }

const char* mtshim_version(void) { return "1.0.0"; }

int mtshim_rep_dimension(mtshim_ctx* ctx, char family, int rank, int weight_index, char** decimal_out) {
    if (!ctx || !decimal_out) return MTSHIM_EARG;
    *decimal_out = nullptr;
    return guarded(ctx, [&] {
        mtshim::RepDescriptor rep(mtshim::LieType(mtshim::family_from_char(family), rank), weight_index);
        *decimal_out = dup_string(mtshim::rep_dimension(rep).str());
        return *decimal_out ? MTSHIM_OK : MTSHIM_EINTERNAL;
    });
}

int mtshim_rep_duality(mtshim_ctx* ctx, char family, int rank, int weight_index, char** name_out) {
    if (!ctx || !name_out) return MTSHIM_EARG;
    *name_out = nullptr;
    return guarded(ctx, [&] {
        mtshim::RepDescriptor rep(mtshim::LieType(mtshim::family_from_char(family), rank), weight_index);
        *name_out = dup_string(mtshim::duality_name(mtshim::duality(rep)));
        return *name_out ? MTSHIM_OK : MTSHIM_EINTERNAL;
    });
}

int mtshim_halfspin_exclusion(mtshim_ctx* ctx, long long two_n, int* excluded, long long* witness) {
    if (!ctx || !excluded || !witness) return MTSHIM_EARG;
    return guarded(ctx, [&] {
        auto res = mtshim::is_exceptional_halfspin_binom(two_n);
        *excluded = res.value ? 1 : 0;
        *witness = res.witness.value_or(-1);
        return MTSHIM_OK;
    });
}

}  // extern "C"
