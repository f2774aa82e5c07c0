// End-to-end checks of the command line binary. argv[1] is the binary path;
// everything runs through popen and asserts on exit codes and exact stdout.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ncomplex/complex.hpp"
#include "ncomplex/duality.hpp"
#include "ncomplex/homotopy.hpp"
#include "ncomplex/serialize.hpp"
#include "ncomplex/spin.hpp"

namespace {

using namespace ncx;

int g_fails = 0;
std::string g_bin;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++g_fails;
        std::cout << "FAIL " << what << "\n";
    }
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    RunResult r;
    const std::string cmd = env + g_bin + " " + args;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool is_error_kind(const std::string& out, const std::string& kind) {
    auto j = nlohmann::json::parse(out, nullptr, false);
    return !j.is_discarded() && j.contains("error") && j["error"]["kind"] == kind;
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cout << "usage: cli_tests <path-to-binary>\n";
        return 2;
    }
    g_bin = argv[1];
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ncx_cli_tests";
    fs::create_directories(dir);
    const auto file = [&](const char* name) { return (dir / name).string(); };

    // basic sizes
    {
        RunResult r = run("dims --N 3 --D 2 --p 4 --g 0");
        check(r.code == 0 && r.out == "1\n", "dims prints the bare size");
        RunResult j = run("dims --N 3 --D 2 --p 4 --g 0 --json");
        auto parsed = nlohmann::json::parse(j.out, nullptr, false);
        check(j.code == 0 && !parsed.is_discarded() && parsed["dim"] == 1 &&
                  parsed["format"] == 1,
              "dims --json carries the size");
    }

    // scan table shape and rectangular zeros
    {
        RunResult r = run("scan --N 3 --D 2 --pmax 4 --gmax 3 --csv");
        auto lines = split_lines(r.out);
        check(r.code == 0 && !lines.empty() &&
                  lines[0] == "N,D,p,k,g,dim_kernel,rank_image,dim_H",
              "scan csv header");
        check(lines.size() == 1 + 5 * 2 * 4, "scan csv row count");
        bool zeros = true;
        for (size_t i = 1; i < lines.size(); ++i) {
            int N, D, p, k, g;
            long long ker, im, h;
            if (sscanf(lines[i].c_str(), "%d,%d,%d,%d,%d,%lld,%lld,%lld", &N, &D, &p, &k, &g,
                       &ker, &im, &h) != 8) {
                zeros = false;
                break;
            }
            if (p >= 1 && p % 2 == 0 && h != 0) zeros = false;
        }
        check(zeros, "scan csv vanishes at rectangular ranks");
        RunResult r2 = run("scan --N 3 --D 2 --pmax 4 --gmax 3 --csv");
        check(r2.out == r.out, "scan csv reruns byte-identical");
        RunResult rj = run("scan --N 3 --D 2 --pmax 2 --gmax 2 --json");
        RunResult rj2 = run("scan --N 3 --D 2 --pmax 2 --gmax 2 --json");
        auto pj = nlohmann::json::parse(rj.out, nullptr, false);
        check(rj.code == 0 && !pj.is_discarded() && pj["cells"].is_array(),
              "scan json parses");
        check(rj.out == rj2.out, "scan json reruns byte-identical");
        RunResult rboth = run("scan --N 3 --D 2 --pmax 2 --gmax 2");
        check(rboth.code == 1 && is_error_kind(rboth.out, "precondition"),
              "scan requires a format flag");
        RunResult one = run("scan --N 3 --D 3 --pmax 3 --gmax 3 --csv", "NCOMPLEX_THREADS=1 ");
        RunResult eight = run("scan --N 3 --D 3 --pmax 3 --gmax 3 --csv", "NCOMPLEX_THREADS=8 ");
        check(one.code == 0 && one.out == eight.out,
              "scan output independent of thread count");
    }

    // seeded generation determinism
    {
        RunResult a = run("random --kind typed --N 3 --p 3 --D 3 --gmax 2 --seed 5");
        RunResult b = run("random --kind typed --N 3 --p 3 --D 3 --gmax 2 --seed 5");
        RunResult c = run("random --kind typed --N 3 --p 3 --D 3 --gmax 2 --seed 6");
        check(a.code == 0 && a.out == b.out, "random reruns byte-identical");
        check(a.out != c.out, "random responds to the seed");
        PolyTensor T = tensor_from_json(a.out);
        check(is_typed_member(3, T), "random typed output is a member");
    }

    // errors: usage, schema, preconditions
    {
        RunResult r = run("frobnicate 2>/dev/null");
        check(r.code == 1 && is_error_kind(r.out, "usage"), "unknown subcommand");
        RunResult r2 = run("dims --N 3 2>/dev/null");
        check(r2.code == 1 && is_error_kind(r2.out, "usage"), "missing required flags");
        std::ofstream(file("garbage.json")) << "not json at all";
        RunResult r3 = run("homotopy --formula eq4 --input " + file("garbage.json"));
        check(r3.code == 1 && is_error_kind(r3.out, "precondition") &&
                  r3.out.find("invalid JSON") != std::string::npos,
              "malformed JSON file");
        std::ofstream(file("schema.json"))
            << R"({"D":2,"degree":3,"terms":[{"indices":[0],"exponents":[0,0],"coeff":"1"}]})";
        RunResult r4 = run("homotopy --formula eq4 --input " + file("schema.json"));
        check(r4.code == 1 && r4.out.find("terms[0].indices") != std::string::npos,
              "schema errors carry positions");
        std::ofstream(file("zero3.json")) << R"({"format":1,"D":2,"degree":3,"terms":[]})";
        RunResult r5 = run("homotopy --formula eq9 --input " + file("zero3.json"));
        check(r5.code == 1 && is_error_kind(r5.out, "precondition") &&
                  r5.out.find("--formula") != std::string::npos,
              "unknown formula name");
        check(run("--help").code == 0, "help exits cleanly");
        check(run("homotopy --help").code == 0, "subcommand help exits cleanly");
        RunResult r6 = run("random --kind typed --D 2 --seed 1");
        check(r6.code == 1 && is_error_kind(r6.out, "precondition"),
              "typed generation needs rank flags");
        check(run("random --kind typed --N 4 --p 3 --D 2 --gmax 3 --seed 2 --output " +
                  file("nc.json")).code == 0,
              "generate non-closed tensor");
        RunResult r7 = run("homotopy --formula eq4 --input " + file("nc.json"));
        check(r7.code == 1 && is_error_kind(r7.out, "precondition"),
              "primitive rejects non-closed input");
    }

    // primitive pipeline through files
    {
        check(run("random --kind closed-eq4 --D 2 --gmax 3 --seed 11 --output " +
                  file("T.json")).code == 0,
              "generate closed input");
        check(run("homotopy --formula eq4 --input " + file("T.json") + " --output " +
                  file("xi.json")).code == 0,
              "primitive of closed input");
        PolyTensor T = load_tensor(file("T.json"));
        PolyTensor xi = load_tensor(file("xi.json"));
        check(differential(4, xi) == T, "primitive reproduces the input");

        check(run("random --kind closed-eq5 --D 2 --gmax 3 --seed 12 --output " +
                  file("R.json")).code == 0,
              "generate closed curvature");
        check(run("homotopy --formula eq5 --input " + file("R.json") + " --output " +
                  file("h.json")).code == 0,
              "potential of curvature");
        check(riemann_from_potential(load_tensor(file("h.json"))) == load_tensor(file("R.json")),
              "curvature rebuilt from its potential");

        RunResult open_t = run("homotopy --formula eq4 --input " + file("T.json"));
        check(open_t.code == 0 && tensor_from_json(open_t.out) == xi,
              "omitting --output streams the tensor");
    }

    // duality pipeline
    {
        check(run("random --kind div-free --D 3 --gmax 3 --seed 9 --output " +
                  file("Tdf.json")).code == 0,
              "generate divergence-free tensor");
        check(run("potential --input " + file("Tdf.json") + " --output " + file("Rp.json"))
                      .code == 0,
              "potential runs");
        check(double_divergence(load_tensor(file("Rp.json"))) == load_tensor(file("Tdf.json")),
              "potential double divergence");
        RunResult dz = run("dualize --input " + file("Tdf.json"));
        check(dz.code == 0 && tensor_from_json(dz.out).degree == 4, "dualize streams the dual");
    }

    // spin pipeline
    {
        check(run("random --kind typed --N 3 --p 1 --D 2 --gmax 3 --seed 4 --output " +
                  file("h1.json")).code == 0,
              "generate gauge field");
        check(run("spin curvature --S 1 --input " + file("h1.json") + " --output " +
                  file("F.json")).code == 0,
              "spin curvature runs");
        check(run("spin reconstruct --S 1 --input " + file("F.json") + " --output " +
                  file("h1b.json")).code == 0,
              "spin reconstruct runs");
        PolyTensor F = load_tensor(file("F.json"));
        PolyTensor h1b = load_tensor(file("h1b.json"));
        check(curvature(make_spin_field(1, h1b)) == F, "reconstructed field has the curvature");

        check(run("random --kind typed --N 3 --p 2 --D 2 --gmax 3 --seed 7 --output " +
                  file("h2.json")).code == 0,
              "generate rank-2 gauge field");
        check(run("random --kind typed --N 2 --p 1 --D 2 --gmax 3 --seed 8 --output " +
                  file("e1.json")).code == 0,
              "generate gauge parameter");
        RunResult sc = run("spin check --S 2 --input " + file("h2.json") + " --epsilon " +
                           file("e1.json"));
        check(sc.code == 0 && sc.out == "OK\n", "spin check reports OK");
    }

    // nilpotency driver
    {
        RunResult r = run("check-nilpotent --N 4 --D 3 --pmax 6 --gmax 3 --seed 7");
        check(r.code == 0 && r.out == "OK\n", "nilpotency check reports OK");
    }

    std::error_code ec;
    fs::remove_all(dir, ec);
    if (g_fails == 0) {
        std::cout << "cli tests passed\n";
        return 0;
    }
    std::cout << g_fails << " cli test(s) failed\n";
    return 1;
}
