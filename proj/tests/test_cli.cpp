// End-to-end tests of the pijq command-line tool.  argv[1] is the path to the
// built binary.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "pijq/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    std::printf("[%s] %s\n", ok ? "ok" : "FAILED", what.c_str());
    if (!ok) ++g_failures;
}

int run(const std::string& cmd) {
    const int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

json read_manifest(const fs::path& dir) {
    return json::parse(pijq::read_text_file(dir / "manifest.json"));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-pijq-binary>\n";
        return 2;
    }
    const std::string bin = argv[1];
    const fs::path root = fs::temp_directory_path() / "pijq_cli_test";
    fs::remove_all(root);
    fs::create_directories(root);

    // zero-modes happy path: outputs + manifest with matching digests
    {
        const fs::path dir = root / "zm";
        const int rc = run(bin + " --output-dir " + dir.string() +
                           " zero-modes --profile short --N 40 --gamma 1 --t 0.5 --upsilon 0.2"
                           " --mu 0.2");
        check(rc == 0, "zero-modes exits 0");
        check(fs::exists(dir / "zero_modes.csv"), "zero-modes writes zero_modes.csv");
        auto manifest = read_manifest(dir);
        check(manifest["results"]["zero_mode_count"] == 4, "manifest reports 4 zero modes");
        bool digests_ok = true;
        for (const auto& f : manifest["output_files"]) {
            const auto content = pijq::read_text_file(dir / f["path"].get<std::string>());
            if (pijq::fnv1a_digest(content) != f["digest"].get<std::string>()) digests_ok = false;
        }
        check(digests_ok && !manifest["output_files"].empty(),
              "manifest digests match files on disk");
    }

    // config-file precedence: flag overrides config value overrides default
    {
        const fs::path cfg = root / "run.cfg";
        {
            std::ofstream out(cfg);
            out << "[zero-modes]\nmu=0.1\nN=20\n";
        }
        const fs::path dir = root / "cfg";
        const int rc = run(bin + " --output-dir " + dir.string() + " --config " + cfg.string() +
                           " zero-modes --mu 0.3");
        check(rc == 0, "config-file run exits 0");
        auto manifest = read_manifest(dir);
        check(manifest["config"]["mu"] == 0.3, "flag overrides config-file mu");
        check(manifest["config"]["N"] == 20, "config-file overrides default N");
    }

    // usage errors: invalid values and unknown flags are rejected
    check(run(bin + " rg --s -0.2") != 0, "rg --s -0.2 is a usage error");
    check(run(bin + " rg --no-such-flag 1") != 0, "unknown flag rejected");
    check(run(bin + " ising --L 30") != 0, "ising --L 30 out of range");
    check(run(bin) != 0, "missing subcommand rejected");

    // dephase CSV matches the closed form re-evaluated here
    {
        const fs::path dir = root / "dephase";
        const int rc = run(bin + " --output-dir " + dir.string() +
                           " dephase --s 1 --lambda 1 --t-min 2 --t-max 2 --points 1");
        check(rc == 0, "dephase exits 0");
        const auto csv = pijq::read_text_file(dir / "dephase.csv");
        // |I| at Omega_c t = 2 with lambda = 1 is 2^{-1/2}
        check(csv.find("0.7071067811865") != std::string::npos,
              "dephase curve contains the Ohmic closed-form modulus");
    }

    // reproducibility: identical config + seed => byte-identical outputs
    {
        const fs::path d1 = root / "rtn1";
        const fs::path d2 = root / "rtn2";
        const std::string args =
            " rtn --n 10 --rate-min 0.01 --rate-max 1 --seed 7 --t-max 102.35 --dt 0.1"
            " --segments 2";
        check(run(bin + " --output-dir " + d1.string() + args) == 0, "rtn run 1 exits 0");
        check(run(bin + " --output-dir " + d2.string() + args) == 0, "rtn run 2 exits 0");
        bool identical = pijq::read_text_file(d1 / "rtn_psd.csv") ==
                             pijq::read_text_file(d2 / "rtn_psd.csv") &&
                         pijq::read_text_file(d1 / "manifest.json") ==
                             pijq::read_text_file(d2 / "manifest.json");
        check(identical, "repeated rtn runs are byte-identical");
    }

    // sweep: 11 x 2 rg grid -> 22 data rows, exit 0
    {
        const fs::path dir = root / "sweep";
        const int rc = run(bin + " --output-dir " + dir.string() +
                           " sweep --target rg --s-grid 0.5 1.5 0.1 --lambda0 0.1 0.5"
                           " --ell-max 10");
        check(rc == 0, "rg sweep exits 0");
        const auto csv = pijq::read_text_file(dir / "sweep.csv");
        std::size_t rows = 0;
        for (char c : csv) rows += (c == '\n');
        check(rows == 23, "rg sweep CSV has header + 22 rows");   // header + 22 points
    }

    // sweep: edge-splitting with fitted slope in the manifest
    {
        const fs::path dir = root / "edge";
        const int rc = run(bin + " --output-dir " + dir.string() +
                           " sweep --target edge-splitting --N-list 20 30 40 60"
                           " --gamma 0.5 --t 0.3 --upsilon 0.2 --mu 0.4");
        check(rc == 0, "edge-splitting sweep exits 0");
        auto manifest = read_manifest(dir);
        check(manifest["results"].contains("log_splitting_slope") &&
                  manifest["results"]["log_splitting_slope"].get<double>() < 0.0,
              "edge-splitting manifest carries a negative fitted slope");
    }

    // empty grid is a usage error
    check(run(bin + " --output-dir " + (root / "bad").string() +
              " sweep --target edge-splitting") != 0,
          "empty sweep grid rejected");

    // environment variable selects the default output directory
    {
        const fs::path dir = root / "envdir";
        const int rc = run("PIJQ_OUTPUT_DIR=" + dir.string() + " " + bin +
                           " rg --s 1 --lambda0 0.5 --ell-max 1");
        check(rc == 0, "env-directed run exits 0");
        check(fs::exists(dir / "rg.csv"), "PIJQ_OUTPUT_DIR selects the output directory");
    }

    fs::remove_all(root);
    if (g_failures > 0) {
        std::printf("%d CLI check(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
