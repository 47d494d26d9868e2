#include <doctest.h>

#include "superder/catalog.hpp"
#include "superder/json_io.hpp"

using namespace superder;

TEST_CASE("algebra JSON round trip is byte-identical") {
    for (const char* spec : {"A:1,0", "B:0,1", "D21:2/3"}) {
        const CatalogEntry e = construct(FamilySpec::parse(spec));
        const std::string bytes = dump_json(algebra_to_json(e.algebra));
        const SuperAlgebra back = algebra_from_json(nlohmann::json::parse(bytes));
        CHECK(dump_json(algebra_to_json(back)) == bytes);
        CHECK(back.table() == e.algebra.table());
    }
}

TEST_CASE("construction is deterministic: same spec, same bytes") {
    const std::string a = dump_json(algebra_to_json(construct(FamilySpec::parse("Q:2")).algebra));
    const std::string b = dump_json(algebra_to_json(construct(FamilySpec::parse("Q:2")).algebra));
    CHECK(a == b);
}

TEST_CASE("reader rejects non-canonical input") {
    const char* base =
        R"({"name":"x","dim":2,"parity":[0,0],"brackets":[[0,1,[[0,"1/1"]]]]})";
    CHECK_NOTHROW(algebra_from_json(nlohmann::json::parse(base)));
    // non-canonical rational
    CHECK_THROWS(algebra_from_json(nlohmann::json::parse(
        R"({"name":"x","dim":2,"parity":[0,0],"brackets":[[0,1,[[0,"2/4"]]]]})")));
    // pair with i > j
    CHECK_THROWS(algebra_from_json(nlohmann::json::parse(
        R"({"name":"x","dim":2,"parity":[0,0],"brackets":[[1,0,[[0,"1/1"]]]]})")));
    // unsorted coefficient entries
    CHECK_THROWS(algebra_from_json(nlohmann::json::parse(
        R"({"name":"x","dim":2,"parity":[0,1],"brackets":[[0,1,[[1,"1/1"],[0,"1/1"]]]]})")));
    // parity length mismatch
    CHECK_THROWS(algebra_from_json(nlohmann::json::parse(
        R"({"name":"x","dim":2,"parity":[0],"brackets":[]})")));
    // zero coefficient
    CHECK_THROWS(algebra_from_json(nlohmann::json::parse(
        R"({"name":"x","dim":2,"parity":[0,0],"brackets":[[0,1,[[0,"0/1"]]]]})")));
}

TEST_CASE("sidecar carries family, labels and cartan") {
    const CatalogEntry e = construct(FamilySpec::parse("B:1,1"));
    const std::string bytes = dump_json(meta_to_json(e.meta));
    const AlgebraMeta back = meta_from_json(nlohmann::json::parse(bytes));
    CHECK(back.family == "B:1,1");
    CHECK(back.labels == e.meta.labels);
    CHECK(back.cartan == e.meta.cartan);
}
