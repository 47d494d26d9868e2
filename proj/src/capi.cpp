#include "superder.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "superder/catalog.hpp"
#include "superder/deltader.hpp"
#include "superder/json_io.hpp"
#include "superder/report.hpp"
#include "superder/roots.hpp"

using namespace superder;

struct sd_algebra {
    SuperAlgebra algebra;
    AlgebraMeta meta;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
sd_status guarded(Fn&& fn) {
    try {
        fn();
        return SD_OK;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return SD_ERR_DOMAIN;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return SD_ERR_IO;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SD_ERR_IO;
    }
}

}  // namespace

extern "C" {

const char* sd_version(void) { return "1.0.0"; }

const char* sd_last_error(void) { return g_last_error.c_str(); }

void sd_string_free(char* s) { std::free(s); }

void sd_algebra_free(sd_algebra* a) { delete a; }

sd_status sd_construct(const char* spec, sd_algebra** out) {
    if (!spec || !out) {
        g_last_error = "null argument";
        return SD_ERR_DOMAIN;
    }
    return guarded([&] {
        CatalogEntry e = construct_by_name(spec);
        *out = new sd_algebra{std::move(e.algebra), std::move(e.meta)};
    });
}

sd_status sd_algebra_from_json(const char* algebra_json, const char* sidecar_json,
                               sd_algebra** out) {
    if (!algebra_json || !out) {
        g_last_error = "null argument";
        return SD_ERR_DOMAIN;
    }
    return guarded([&] {
        SuperAlgebra a = algebra_from_json(nlohmann::json::parse(algebra_json));
        AlgebraMeta meta;
        if (sidecar_json) meta = meta_from_json(nlohmann::json::parse(sidecar_json));
        *out = new sd_algebra{std::move(a), std::move(meta)};
    });
}

int sd_algebra_dim(const sd_algebra* a) { return a ? a->algebra.dim() : -1; }

sd_status sd_algebra_to_json(const sd_algebra* a, char** out) {
    if (!a || !out) {
        g_last_error = "null argument";
        return SD_ERR_DOMAIN;
    }
    return guarded([&] { *out = dup_string(dump_json(algebra_to_json(a->algebra))); });
}

sd_status sd_sidecar_to_json(const sd_algebra* a, char** out) {
    if (!a || !out) {
        g_last_error = "null argument";
        return SD_ERR_DOMAIN;
    }
    return guarded([&] { *out = dup_string(dump_json(meta_to_json(a->meta))); });
}

sd_status sd_jacobi_report(const sd_algebra* a, char** out) {
    if (!a || !out) {
        g_last_error = "null argument";
        return SD_ERR_DOMAIN;
    }
    return guarded([&] {
        const ViolationReport report = a->algebra.check_superidentities();
        nlohmann::ordered_json j;
        if (report.empty()) {
            j["status"] = "ok";
        } else {
            j["status"] = "violated";
            auto arr = nlohmann::ordered_json::array();
            for (const auto& v : report) arr.push_back(v.describe());
            j["violations"] = std::move(arr);
        }
        *out = dup_string(dump_json(j));
    });
}

sd_status sd_root_report(const sd_algebra* a, char** out) {
    if (!a || !out) {
        g_last_error = "null argument";
        return SD_ERR_DOMAIN;
    }
    return guarded([&] {
        if (a->meta.cartan.empty())
            throw std::domain_error(
                "no Cartan data: construct the algebra from a spec or supply a sidecar");
        RootDatum rd = root_decompose(a->algebra, a->meta.cartan);
        *out = dup_string(dump_json(root_report(a->algebra, rd)));
    });
}

sd_status sd_derive(const sd_algebra* a, const char* delta, char** out) {
    if (!a || !delta || !out) {
        g_last_error = "null argument";
        return SD_ERR_DOMAIN;
    }
    return guarded([&] {
        const Rational d = Rational::parse(delta);
        DerivationSpace s = derivation_space(a->algebra, d);
        *out = dup_string(dump_json(derive_report(a->algebra, s)));
    });
}

sd_status sd_scan(const sd_algebra* a, unsigned long long seed, char** out) {
    if (!a || !out) {
        g_last_error = "null argument";
        return SD_ERR_DOMAIN;
    }
    return guarded([&] {
        CriticalReport r = critical_deltas(a->algebra, seed);
        *out = dup_string(dump_json(scan_report(r)));
    });
}

sd_status sd_report_csv(int jobs, int max_dim, unsigned long long seed, char** out) {
    if (!out) {
        g_last_error = "null argument";
        return SD_ERR_DOMAIN;
    }
    return guarded([&] { *out = dup_string(report_csv(jobs, max_dim, seed)); });
}

}  // extern "C"
