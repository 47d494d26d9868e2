/**
 * superder — construct, verify, decompose and solve over the classical
 * superalgebra catalog. Front end over the libsuperder C API.
 *
 * Exit codes: 0 success, 1 domain error, 2 I/O or parse error.
 */

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "superder.h"

namespace {

struct AlgebraHandle {
    sd_algebra* ptr = nullptr;
    ~AlgebraHandle() { sd_algebra_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { sd_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int fail(sd_status st) {
    std::cerr << "superder: " << sd_last_error() << "\n";
    return static_cast<int>(st);
}

// Family specs carry a colon ("A:1,0"); everything else is a file path,
// except the bare fixture name.
bool is_spec(const std::string& s) { return s == "sl2" || s.find(':') != std::string::npos; }

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty() || out_path == "-") {
        std::cout << data;
        return true;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) return false;
    out << data;
    return static_cast<bool>(out);
}

std::string sidecar_path(const std::string& algebra_path) {
    const auto dot = algebra_path.rfind('.');
    const std::string stem = (dot == std::string::npos) ? algebra_path : algebra_path.substr(0, dot);
    return stem + ".labels.json";
}

// Load an algebra from a spec string or a JSON file path (with its optional
// label sidecar). Returns exit code 0 on success.
int load_algebra(const std::string& input, AlgebraHandle& handle) {
    if (is_spec(input)) {
        const sd_status st = sd_construct(input.c_str(), &handle.ptr);
        return st == SD_OK ? 0 : fail(st);
    }
    const auto text = read_file(input);
    if (!text) {
        std::cerr << "superder: cannot read '" << input << "'\n";
        return 2;
    }
    std::optional<std::string> sidecar = read_file(sidecar_path(input));
    const sd_status st = sd_algebra_from_json(text->c_str(),
                                              sidecar ? sidecar->c_str() : nullptr, &handle.ptr);
    return st == SD_OK ? 0 : fail(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact delta-derivation engine for the classical superalgebra catalog"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "json";
    unsigned long long seed = 12345;
    int jobs = 1;
    int max_dim = 0;
    app.add_option("--out", out_path, "output path (default: stdout)");
    app.add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "seed for randomized probes (fixed default)");
    app.add_option("--jobs", jobs, "parallel job cap")->check(CLI::PositiveNumber);
    app.add_option("--max-dim", max_dim, "skip catalog instances with dim above this");

    std::string construct_spec;
    auto* cmd_construct =
        app.add_subcommand("construct", "build a catalog algebra and emit its JSON");
    cmd_construct->add_option("spec", construct_spec, "family spec, e.g. A:1,0")->required();

    std::string jacobi_input;
    auto* cmd_jacobi = app.add_subcommand("jacobi", "check the superidentities exhaustively");
    cmd_jacobi->add_option("algebra", jacobi_input, "spec or algebra JSON path")->required();

    std::string roots_input;
    auto* cmd_roots = app.add_subcommand("roots", "root decomposition and its verification");
    cmd_roots->add_option("algebra", roots_input, "spec or algebra JSON path")->required();

    std::string derive_input, delta;
    auto* cmd_derive = app.add_subcommand("derive", "solve the delta-derivation system");
    cmd_derive->add_option("algebra", derive_input, "spec or algebra JSON path")->required();
    cmd_derive->add_option("--delta", delta, "rational delta, e.g. 1/2")->required();

    std::string scan_input;
    auto* cmd_scan = app.add_subcommand("scan", "parametric scan for critical delta values");
    cmd_scan->add_option("algebra", scan_input, "spec or algebra JSON path")->required();

    auto* cmd_report = app.add_subcommand("report", "batch CSV over the whole catalog");

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("SUPERDER_MAX_DIM"); env && max_dim == 0)
        max_dim = std::atoi(env);

    if (cmd_construct->parsed()) {
        AlgebraHandle a;
        const sd_status st = sd_construct(construct_spec.c_str(), &a.ptr);
        if (st != SD_OK) return fail(st);
        StringHandle json, sidecar;
        if (sd_algebra_to_json(a.ptr, &json.ptr) != SD_OK) return fail(SD_ERR_IO);
        if (sd_sidecar_to_json(a.ptr, &sidecar.ptr) != SD_OK) return fail(SD_ERR_IO);
        if (!write_output(out_path, json.str())) {
            std::cerr << "superder: cannot write '" << out_path << "'\n";
            return 2;
        }
        if (!out_path.empty() && out_path != "-") {
            if (!write_output(sidecar_path(out_path), sidecar.str())) {
                std::cerr << "superder: cannot write sidecar next to '" << out_path << "'\n";
                return 2;
            }
        }
        return 0;
    }

    auto run_on_algebra = [&](const std::string& input,
                              const std::function<sd_status(sd_algebra*, char**)>& op) -> int {
        AlgebraHandle a;
        if (int rc = load_algebra(input, a); rc != 0) return rc;
        StringHandle result;
        const sd_status st = op(a.ptr, &result.ptr);
        if (st != SD_OK) return fail(st);
        if (!write_output(out_path, result.str())) {
            std::cerr << "superder: cannot write '" << out_path << "'\n";
            return 2;
        }
        return 0;
    };

    if (cmd_jacobi->parsed())
        return run_on_algebra(jacobi_input, [](sd_algebra* a, char** out) {
            return sd_jacobi_report(a, out);
        });
    if (cmd_roots->parsed())
        return run_on_algebra(roots_input, [](sd_algebra* a, char** out) {
            return sd_root_report(a, out);
        });
    if (cmd_derive->parsed())
        return run_on_algebra(derive_input, [&](sd_algebra* a, char** out) {
            return sd_derive(a, delta.c_str(), out);
        });
    if (cmd_scan->parsed())
        return run_on_algebra(scan_input, [&](sd_algebra* a, char** out) {
            return sd_scan(a, seed, out);
        });
    if (cmd_report->parsed()) {
        StringHandle csv;
        const sd_status st = sd_report_csv(jobs, max_dim, seed, &csv.ptr);
        if (st != SD_OK) return fail(st);
        if (!write_output(out_path, csv.str())) {
            std::cerr << "superder: cannot write '" << out_path << "'\n";
            return 2;
        }
        return 0;
    }
    return 0;
}
