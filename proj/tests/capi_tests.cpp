// Exercises the shared-library surface exactly as an external client would:
// only mtshim.h, no C++ core headers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mtshim.h>

#include <cstring>
#include <string>

namespace {

struct Ctx {
    mtshim_ctx* p;
    Ctx() : p(mtshim_ctx_new()) {}
    ~Ctx() { mtshim_ctx_free(p); }
};

std::string run(mtshim_ctx* ctx, const char* cmd, const char* doc, int expect_status) {
    char* out = nullptr;
    int status = mtshim_run(ctx, cmd, doc, &out);
    CHECK(status == expect_status);
    std::string result = out ? out : "";
    mtshim_free(out);
    return result;
}

}  // namespace

TEST_CASE("context lifecycle and version") {
    Ctx ctx;
    REQUIRE(ctx.p != nullptr);
    CHECK(std::strlen(mtshim_version()) > 0);
    CHECK(std::string(mtshim_last_error(ctx.p)).empty());
}

TEST_CASE("rep dimension and duality helpers") {
    Ctx ctx;
    char* dim = nullptr;
    REQUIRE(mtshim_rep_dimension(ctx.p, 'A', 4, 2, &dim) == MTSHIM_OK);
    CHECK(std::string(dim) == "10");
    mtshim_free(dim);

    REQUIRE(mtshim_rep_dimension(ctx.p, 'B', 200, 200, &dim) == MTSHIM_OK);
    CHECK(std::string(dim).size() > 50);  // 2^200 in decimal
    mtshim_free(dim);

    char* dual = nullptr;
    REQUIRE(mtshim_rep_duality(ctx.p, 'C', 4, 1, &dual) == MTSHIM_OK);
    CHECK(std::string(dual) == "symplectic");
    mtshim_free(dual);

    // invalid weight: validation error with a message
    CHECK(mtshim_rep_dimension(ctx.p, 'B', 3, 1, &dim) == MTSHIM_EVALIDATION);
    CHECK(std::strlen(mtshim_last_error(ctx.p)) > 0);
}

TEST_CASE("halfspin exclusion helper") {
    Ctx ctx;
    int excluded = 0;
    long long witness = 0;
    REQUIRE(mtshim_halfspin_exclusion(ctx.p, 70, &excluded, &witness) == MTSHIM_OK);
    CHECK(excluded == 1);
    CHECK(witness == 2);
    REQUIRE(mtshim_halfspin_exclusion(ctx.p, 10, &excluded, &witness) == MTSHIM_OK);
    CHECK(excluded == 0);
    CHECK(witness == -1);
}

TEST_CASE("run: nonspecial round trip") {
    Ctx ctx;
    std::string report = run(ctx.p, "nonspecial",
                             R"({"version":"1","kind":"profile","n":8,"signatures":[[3,6]]})", MTSHIM_OK);
    CHECK(report.find("\"inconclusive\"") != std::string::npos);
    CHECK(report.find("A_2+A_2") != std::string::npos);
}

TEST_CASE("run: error codes") {
    Ctx ctx;
    std::string report = run(ctx.p, "classify", "{bad json", MTSHIM_EVALIDATION);
    CHECK(report.find("\"validation\"") != std::string::npos);
    CHECK(std::strlen(mtshim_last_error(ctx.p)) > 0);

    // resource cap via the cap setter
    REQUIRE(mtshim_set_cap(ctx.p, "search", 1) == MTSHIM_OK);
    report = run(ctx.p, "mtpairs",
                 R"({"version":"1","kind":"mtquery","target_dim":16,"ratios":["1"],"proper_only":false})",
                 MTSHIM_ERESOURCE);
    CHECK(report.find("\"resource\"") != std::string::npos);

    CHECK(mtshim_set_cap(ctx.p, "nonsense", 5) == MTSHIM_EARG);
    CHECK(mtshim_run(nullptr, "classify", "{}", nullptr) == MTSHIM_EARG);
}

TEST_CASE("run: selftest") {
    Ctx ctx;
    std::string report = run(ctx.p, "selftest", "", MTSHIM_OK);
    CHECK(report.find("\"all_pass\": true") != std::string::npos);
}
