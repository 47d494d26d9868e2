#include <doctest.h>

#include <algorithm>
#include <string>

#include <json.hpp>

#include "superder.h"

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { sd_string_free(p); }
    std::string get() const { return p ? std::string(p) : std::string(); }
};

struct Alg {
    sd_algebra* p = nullptr;
    ~Alg() { sd_algebra_free(p); }
};

}  // namespace

TEST_CASE("C API: construct, serialize, reload") {
    Alg a;
    REQUIRE(sd_construct("A:1,0", &a.p) == SD_OK);
    CHECK(sd_algebra_dim(a.p) == 8);
    Str json, sidecar;
    REQUIRE(sd_algebra_to_json(a.p, &json.p) == SD_OK);
    REQUIRE(sd_sidecar_to_json(a.p, &sidecar.p) == SD_OK);

    Alg b;
    REQUIRE(sd_algebra_from_json(json.get().c_str(), sidecar.get().c_str(), &b.p) == SD_OK);
    Str json2;
    REQUIRE(sd_algebra_to_json(b.p, &json2.p) == SD_OK);
    CHECK(json.get() == json2.get());

    Str roots;
    CHECK(sd_root_report(b.p, &roots.p) == SD_OK);  // cartan restored from the sidecar
}

TEST_CASE("C API: error codes and messages") {
    Alg a;
    CHECK(sd_construct("A:1,1", &a.p) == SD_ERR_DOMAIN);
    CHECK(std::string(sd_last_error()).find("Aqq") != std::string::npos);
    CHECK(sd_algebra_from_json("{not json", nullptr, &a.p) == SD_ERR_IO);
    Alg sl2;
    REQUIRE(sd_construct("sl2", &sl2.p) == SD_OK);
    Str out;
    CHECK(sd_derive(sl2.p, "1/0", &out.p) == SD_ERR_DOMAIN);
}

TEST_CASE("C API: jacobi, derive, scan") {
    Alg a;
    REQUIRE(sd_construct("B:0,1", &a.p) == SD_OK);
    Str jac;
    REQUIRE(sd_jacobi_report(a.p, &jac.p) == SD_OK);
    CHECK(nlohmann::json::parse(jac.get()).at("status") == "ok");

    Str der;
    REQUIRE(sd_derive(a.p, "1/2", &der.p) == SD_OK);
    auto dj = nlohmann::json::parse(der.get());
    CHECK(dj.at("nullity") == 1);
    CHECK(dj.at("analysis").at("scalar_line") == true);

    Str scan;
    REQUIRE(sd_scan(a.p, 12345, &scan.p) == SD_OK);
    auto sj = nlohmann::json::parse(scan.get());
    CHECK(sj.at("critical").size() == 2);
}

TEST_CASE("C API: batch report is independent of the jobs setting") {
    Str csv1, csv4;
    REQUIRE(sd_report_csv(1, 9, 12345, &csv1.p) == SD_OK);
    REQUIRE(sd_report_csv(4, 9, 12345, &csv4.p) == SD_OK);
    const std::string body1 = csv1.get();
    CHECK(body1 == csv4.get());
    // max_dim 9 keeps only A(1,0), B(0,1), C(2): 3 instances x 7 deltas + header
    CHECK(std::count(body1.begin(), body1.end(), '\n') == 22);
}
