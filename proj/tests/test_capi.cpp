#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "knotsurg.h"

namespace {

struct Ctx {
    knotsurg_ctx* c = knotsurg_ctx_new();
    ~Ctx() { knotsurg_ctx_free(c); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    knotsurg_free_string(s);
    return out;
}

const char* kTable =
    "name,kind,payload,declared_class,tau\n"
    "tref,expr,\"T(2,3)\",unknown,1\n"
    "fig8,braid,\"BR[3; 1,-2,1,-2]\",hyperbolic,0\n";

}  // namespace

TEST_CASE("context lifecycle and crossing cap") {
    Ctx g;
    CHECK(knotsurg_get_max_crossings(g.c) == 26);
    CHECK(knotsurg_set_max_crossings(g.c, 32) == KNOTSURG_OK);
    CHECK(knotsurg_get_max_crossings(g.c) == 32);
    CHECK(knotsurg_set_max_crossings(g.c, -1) == KNOTSURG_INVALID_INPUT);
    CHECK(knotsurg_get_max_crossings(g.c) == 32);
    CHECK(std::strlen(knotsurg_last_error(g.c)) > 0);
}

TEST_CASE("slope normalization") {
    Ctx g;
    char* out = nullptr;
    REQUIRE(knotsurg_normalize_slope(g.c, "6/-4", &out) == KNOTSURG_OK);
    CHECK(take(out).find("-3/2") != std::string::npos);
    out = nullptr;
    CHECK(knotsurg_normalize_slope(g.c, "0/0", &out) == KNOTSURG_INVALID_INPUT);
    CHECK(knotsurg_normalize_slope(g.c, nullptr, &out) == KNOTSURG_INVALID_INPUT);
}

TEST_CASE("classify returns the case and descriptor as JSON") {
    Ctx g;
    char* out = nullptr;
    REQUIRE(knotsurg_classify(g.c, "C(3,2; T(2,3))", "6", &out) == KNOTSURG_OK);
    std::string s = take(out);
    CHECK(s.find("Case1_ReducibleLens") != std::string::npos);
    CHECK(s.find("connected_sum") != std::string::npos);

    out = nullptr;
    CHECK(knotsurg_classify(g.c, "T(2,3)", "6", &out) == KNOTSURG_INVALID_INPUT);
    CHECK(std::string(knotsurg_last_error(g.c)).find("cable") != std::string::npos);
}

TEST_CASE("invariants of the unknot") {
    Ctx g;
    char* out = nullptr;
    REQUIRE(knotsurg_invariants(g.c, "U", &out) == KNOTSURG_OK);
    std::string s = take(out);
    CHECK(s.find("\"alexander\":\"1\"") != std::string::npos);
    CHECK(s.find("\"delta2_at_1\":\"0\"") != std::string::npos);
    CHECK(s.find("\"jones\":\"1\"") != std::string::npos);
    CHECK(s.find("\"v3_at_1\":\"0\"") != std::string::npos);
}

TEST_CASE("table-backed K(name) resolution") {
    Ctx g;
    REQUIRE(knotsurg_load_table_csv(g.c, kTable) == KNOTSURG_OK);
    char* out = nullptr;
    REQUIRE(knotsurg_invariants(g.c, "K(fig8)", &out) == KNOTSURG_OK);
    CHECK(take(out).find("3") != std::string::npos);
    out = nullptr;
    CHECK(knotsurg_invariants(g.c, "K(missing)", &out) == KNOTSURG_INVALID_INPUT);
}

TEST_CASE("obstruct defaults s to -r and applies tau from the table") {
    Ctx g;
    REQUIRE(knotsurg_load_table_csv(g.c, kTable) == KNOTSURG_OK);
    char* out = nullptr;
    REQUIRE(knotsurg_obstruct(g.c, "K(fig8)", "2", nullptr, nullptr, &out) == KNOTSURG_OK);
    std::string s = take(out);
    CHECK(s.find("\"s\":\"-2/1\"") != std::string::npos);
    // fig8 has tau = 0 in the table: the tau check passes rather than N/A.
    CHECK(s.find("NiWuTau") != std::string::npos);
    CHECK(s.find("CosmeticExcluded") != std::string::npos);

    // Explicit tau overrides.
    out = nullptr;
    REQUIRE(knotsurg_obstruct(g.c, "T(2,3)", "2", "-2", "1", &out) == KNOTSURG_OK);
    CHECK(take(out).find("NiWuTau") != std::string::npos);
}

TEST_CASE("resource limits surface as their own status code") {
    Ctx g;
    REQUIRE(knotsurg_set_max_crossings(g.c, 4) == KNOTSURG_OK);
    char* out = nullptr;
    // Invariants degrade gracefully (jones reported unavailable)...
    REQUIRE(knotsurg_invariants(g.c, "T(2,5)", &out) == KNOTSURG_OK);
    CHECK(take(out).find("jones_unavailable") != std::string::npos);
    // ...but fit cannot proceed without the cabled diagram.
    out = nullptr;
    CHECK(knotsurg_fit(g.c, 2, 1, "T(2,3)", &out) == KNOTSURG_RESOURCE_LIMIT);
}

TEST_CASE("scan emits JSON lines") {
    Ctx g;
    REQUIRE(knotsurg_load_table_csv(g.c, kTable) == KNOTSURG_OK);
    char* out = nullptr;
    REQUIRE(knotsurg_scan(g.c, 2, 1, &out) == KNOTSURG_OK);
    std::string s = take(out);
    int lines = 0;
    for (char c : s)
        if (c == '\n') ++lines;
    CHECK(lines == 4);  // 2 rows x slopes 1/1, 2/1
    CHECK(s.find("\"verdict\"") != std::string::npos);

    Ctx empty;
    out = nullptr;
    CHECK(knotsurg_scan(empty.c, 2, 1, &out) == KNOTSURG_INVALID_INPUT);
}

TEST_CASE("fit over expression names") {
    Ctx g;
    REQUIRE(knotsurg_load_table_csv(g.c, kTable) == KNOTSURG_OK);
    REQUIRE(knotsurg_set_max_crossings(g.c, 32) == KNOTSURG_OK);
    char* out = nullptr;
    REQUIRE(knotsurg_fit(g.c, 2, 1, "U, T(2,3), K(fig8)", &out) == KNOTSURG_OK);
    std::string s = take(out);
    CHECK(s.find("\"residual\":\"0\"") != std::string::npos);
    CHECK(s.find("\"b\":\"0\"") != std::string::npos);
    CHECK(s.find("\"e\":\"0\"") != std::string::npos);
}

TEST_CASE("null context is tolerated") {
    CHECK(knotsurg_set_max_crossings(nullptr, 10) == KNOTSURG_INVALID_INPUT);
    CHECK(knotsurg_get_max_crossings(nullptr) == -1);
    CHECK(std::string(knotsurg_last_error(nullptr)) == "null context");
    knotsurg_ctx_free(nullptr);
    knotsurg_free_string(nullptr);
}
