// Command line front end. Every subcommand is a thin wrapper: parse flags,
// call the library, serialize the result. Exit codes: 0 success, 1 bad
// input (usage, malformed JSON, precondition failures), 2 broken internal
// guarantee (invariant failures).

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncomplex/cohomology.hpp"
#include "ncomplex/complex.hpp"
#include "ncomplex/duality.hpp"
#include "ncomplex/errors.hpp"
#include "ncomplex/homotopy.hpp"
#include "ncomplex/random_gen.hpp"
#include "ncomplex/serialize.hpp"
#include "ncomplex/spin.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ncx;

void print_error(const std::string& kind, const std::string& message) {
    ordered_json j;
    j["format"] = 1;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    std::cout << j.dump(2) << "\n";
}

void emit_tensor(const PolyTensor& T, const std::string& output) {
    if (output.empty())
        std::cout << tensor_to_json(T);
    else
        store_tensor(output, T);
}

ordered_json report_json(const CohomologyReport& r) {
    ordered_json j;
    j["N"] = r.N;
    j["D"] = r.D;
    j["p"] = r.p;
    j["k"] = r.k;
    j["g"] = r.g;
    j["dim_kernel"] = r.dim_kernel;
    j["rank_image"] = r.rank_image;
    j["dim_H"] = r.dim_H;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"exact engine for tensor-field complexes with d^N = 0"};
    app.require_subcommand(1);

    int N = 3, D = 3, p = 0, g = 0, k = 1, pmax = 0, gmax = 3, S = 1;
    std::uint64_t seed = 0;
    bool as_json = false, as_csv = false;
    std::string input, output, epsilon_path, formula, kind;

    auto* dims = app.add_subcommand("dims", "basis size of one graded component");
    dims->add_option("--N", N, "complex order")->required();
    dims->add_option("--D", D, "space dimension")->required();
    dims->add_option("--p", p, "tensor rank")->required();
    dims->add_option("--g", g, "polynomial degree")->required();
    dims->add_flag("--json", as_json, "machine readable output");
    dims->callback([&] {
        const ComplexSpace& sp = enumerate_space(N, D, p, g);
        if (as_json) {
            ordered_json j;
            j["format"] = 1;
            j["N"] = N;
            j["D"] = D;
            j["p"] = p;
            j["g"] = g;
            j["index_dim"] = sp.index_dim();
            j["monomial_dim"] = static_cast<long long>(sp.monomials.size());
            j["dim"] = sp.dim();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << sp.dim() << "\n";
        }
    });

    auto* dmx = app.add_subcommand("dmatrix", "matrix of d^k between graded components");
    dmx->add_option("--N", N, "complex order")->required();
    dmx->add_option("--D", D, "space dimension")->required();
    dmx->add_option("--p", p, "source tensor rank")->required();
    dmx->add_option("--g", g, "source polynomial degree")->required();
    dmx->add_option("--k", k, "power of d")->required();
    dmx->add_flag("--json", as_json, "machine readable output");
    dmx->callback([&] {
        const DifferentialMatrix M = matrix_of_d_power(N, D, p, g, k);
        if (as_json) {
            ordered_json j;
            j["format"] = 1;
            j["N"] = N;
            j["D"] = D;
            j["k"] = k;
            j["source"]["p"] = p;
            j["source"]["g"] = g;
            j["source"]["dim"] = M.source_dim;
            j["target"]["p"] = p + k;
            j["target"]["g"] = g - k;
            j["target"]["dim"] = M.target_dim;
            ordered_json entries = ordered_json::array();
            for (long long r = 0; r < M.target_dim; ++r)
                for (long long c = 0; c < M.source_dim; ++c) {
                    const Q& v = M.matrix.a[static_cast<size_t>(r)][static_cast<size_t>(c)];
                    if (v == 0) continue;
                    ordered_json e;
                    e["row"] = r;
                    e["col"] = c;
                    e["coeff"] = q_str(v);
                    entries.push_back(std::move(e));
                }
            j["entries"] = std::move(entries);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << M.target_dim << " " << M.source_dim << "\n";
            for (long long r = 0; r < M.target_dim; ++r)
                for (long long c = 0; c < M.source_dim; ++c) {
                    const Q& v = M.matrix.a[static_cast<size_t>(r)][static_cast<size_t>(c)];
                    if (v != 0) std::cout << r << " " << c << " " << q_str(v) << "\n";
                }
        }
    });

    auto* coh = app.add_subcommand("cohomology", "kernel/image ranks at one degree");
    coh->add_option("--N", N, "complex order")->required();
    coh->add_option("--D", D, "space dimension")->required();
    coh->add_option("--p", p, "tensor rank")->required();
    coh->add_option("--k", k, "order of the cohomology")->required();
    coh->add_option("--g", g, "polynomial degree")->required();
    coh->add_flag("--json", as_json, "machine readable output");
    coh->callback([&] {
        const CohomologyReport r = cohomology_dim(N, D, p, k, g);
        if (as_json) {
            ordered_json j = report_json(r);
            ordered_json out;
            out["format"] = 1;
            for (auto& [key, val] : j.items()) out[key] = val;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "dim_kernel=" << r.dim_kernel << " rank_image=" << r.rank_image
                      << " dim_H=" << r.dim_H << "\n";
        }
    });

    auto* scan = app.add_subcommand("scan", "cohomology table over a parameter box");
    scan->add_option("--N", N, "complex order")->required();
    scan->add_option("--D", D, "space dimension")->required();
    scan->add_option("--pmax", pmax, "largest tensor rank")->required();
    scan->add_option("--gmax", gmax, "largest polynomial degree")->required();
    scan->add_flag("--csv", as_csv, "CSV table");
    scan->add_flag("--json", as_json, "machine readable output");
    scan->callback([&] {
        require(as_csv != as_json, "pass exactly one of --csv, --json");
        const std::vector<CohomologyReport> rows = scan_cohomology(N, D, pmax, gmax);
        if (as_csv) {
            std::cout << "N,D,p,k,g,dim_kernel,rank_image,dim_H\n";
            for (const auto& r : rows)
                std::cout << r.N << "," << r.D << "," << r.p << "," << r.k << "," << r.g << ","
                          << r.dim_kernel << "," << r.rank_image << "," << r.dim_H << "\n";
        } else {
            ordered_json j;
            j["format"] = 1;
            j["N"] = N;
            j["D"] = D;
            j["pmax"] = pmax;
            j["gmax"] = gmax;
            ordered_json cells = ordered_json::array();
            for (const auto& r : rows) cells.push_back(report_json(r));
            j["cells"] = std::move(cells);
            std::cout << j.dump(2) << "\n";
        }
    });

    auto* nil = app.add_subcommand("check-nilpotent", "verify d^N = 0 on random members");
    nil->add_option("--N", N, "complex order")->required();
    nil->add_option("--D", D, "space dimension")->required();
    nil->add_option("--pmax", pmax, "largest tensor rank")->required();
    nil->add_option("--gmax", gmax, "largest polynomial degree")->required();
    nil->add_option("--seed", seed, "random seed")->required();
    nil->callback([&] {
        Rng rng(seed);
        for (int pp = 0; pp <= pmax; ++pp) {
            long long total = 0;
            for (int gg = 0; gg <= gmax; ++gg) total += enumerate_space(N, D, pp, gg).dim();
            if (total == 0) continue;
            const PolyTensor T = random_typed(N, D, pp, gmax, rng);
            ensure(d_power(N, T, N).is_zero(), "d^N did not annihilate a random member");
        }
        std::cout << "OK\n";
    });

    auto* hom = app.add_subcommand("homotopy", "closed-form primitive of a closed tensor");
    hom->add_option("--formula", formula, "eq4 or eq5")->required();
    hom->add_option("--input", input, "input tensor file")->required();
    hom->add_option("--output", output, "output tensor file");
    hom->callback([&] {
        const PolyTensor T = load_tensor(input);
        if (formula == "eq4")
            emit_tensor(homotopy_symmetric3(T), output);
        else if (formula == "eq5")
            emit_tensor(homotopy_riemann(T), output);
        else
            throw precondition_error("--formula must be eq4 or eq5");
    });

    auto* pot = app.add_subcommand("potential", "curvature potential of a divergence-free tensor");
    pot->add_option("--input", input, "input tensor file")->required();
    pot->add_option("--output", output, "output tensor file");
    pot->callback([&] { emit_tensor(divergence_free_potential(load_tensor(input)), output); });

    auto* dual = app.add_subcommand("dualize", "epsilon-trace a symmetric 2-tensor");
    dual->add_option("--input", input, "input tensor file")->required();
    dual->add_option("--output", output, "output tensor file");
    dual->callback([&] { emit_tensor(dualize_symmetric(load_tensor(input)), output); });

    auto* spin = app.add_subcommand("spin", "gauge field operations at one spin");
    spin->require_subcommand(1);
    auto* spin_curv = spin->add_subcommand("curvature", "curvature of a symmetric gauge field");
    spin_curv->add_option("--S", S, "spin")->required();
    spin_curv->add_option("--input", input, "gauge field file")->required();
    spin_curv->add_option("--output", output, "output tensor file");
    spin_curv->callback(
        [&] { emit_tensor(curvature(make_spin_field(S, load_tensor(input))), output); });
    auto* spin_rec = spin->add_subcommand("reconstruct", "gauge field from its curvature");
    spin_rec->add_option("--S", S, "spin")->required();
    spin_rec->add_option("--input", input, "curvature file")->required();
    spin_rec->add_option("--output", output, "output tensor file");
    spin_rec->callback(
        [&] { emit_tensor(curvature_characterization(load_tensor(input), S).h, output); });
    auto* spin_chk = spin->add_subcommand("check", "verify gauge invariance of the curvature");
    spin_chk->add_option("--S", S, "spin")->required();
    spin_chk->add_option("--input", input, "gauge field file")->required();
    spin_chk->add_option("--epsilon", epsilon_path, "gauge parameter file")->required();
    spin_chk->callback([&] {
        gauge_invariance_check(make_spin_field(S, load_tensor(input)), load_tensor(epsilon_path));
        std::cout << "OK\n";
    });

    auto* rnd = app.add_subcommand("random", "seeded random instance generation");
    rnd->add_option("--kind", kind, "typed, closed-eq4, closed-eq5 or div-free")->required();
    rnd->add_option("--D", D, "space dimension")->required();
    rnd->add_option("--seed", seed, "random seed")->required();
    rnd->add_option("--N", N, "complex order (typed only)");
    rnd->add_option("--p", p, "tensor rank (typed only)");
    rnd->add_option("--gmax", gmax, "largest polynomial degree");
    rnd->add_option("--output", output, "output tensor file");
    rnd->callback([&] {
        Rng rng(seed);
        if (kind == "typed") {
            require(rnd->count("--N") && rnd->count("--p"), "typed needs --N and --p");
            emit_tensor(random_typed(N, D, p, gmax, rng), output);
        } else if (kind == "closed-eq4") {
            emit_tensor(random_closed_symmetric3(D, gmax, rng), output);
        } else if (kind == "closed-eq5") {
            emit_tensor(random_closed_riemann(D, gmax, rng).R, output);
        } else if (kind == "div-free") {
            emit_tensor(random_divergence_free(D, gmax, rng), output);
        } else {
            throw precondition_error("--kind must be typed, closed-eq4, closed-eq5 or div-free");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage", e.what());
        return 1;
    } catch (const precondition_error& e) {
        print_error("precondition", e.what());
        return 1;
    } catch (const invariant_error& e) {
        print_error("invariant", e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
