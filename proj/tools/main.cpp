// Command line front end: load complexes and cochains, print cohomology
// dimensions, cup-i coproduct values, Steenrod squares and square matrices,
// run the suspension benchmark, export the built-in spaces.
//
// Exit codes: 0 success, 2 parse error, 3 semantic error (degrees,
// membership, unknown names), 4 internal assertion failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "steenq/bench.hpp"
#include "steenq/cupi.hpp"
#include "steenq/error.hpp"
#include "steenq/f2linear.hpp"
#include "steenq/io.hpp"
#include "steenq/spaces.hpp"
#include "steenq/steenrod.hpp"

namespace {

using nlohmann::json;

steenq::Simplex parse_simplex_spec(const std::string& spec) {
    std::vector<steenq::VertexId> verts;
    std::stringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || value < 0)
            throw steenq::parse_error("bad vertex '" + token + "' in simplex spec");
        verts.push_back(static_cast<steenq::VertexId>(value));
    }
    try {
        return steenq::Simplex(std::move(verts));
    } catch (const std::invalid_argument& e) {
        throw steenq::parse_error(std::string("bad simplex spec: ") + e.what());
    }
}

void check_supported(const steenq::Cochain& a, const steenq::SimplicialComplex& X) {
    for (const steenq::Simplex& s : a.support)
        if (!X.contains(s))
            throw std::invalid_argument("cochain support simplex is not in the complex");
}

int run_cohomology(const std::string& complex_path) {
    const auto X = steenq::read_complex_file(complex_path);
    json out;
    out["betti"] = steenq::betti_numbers(X);
    std::cout << out.dump() << '\n';
    return 0;
}

int run_delta(const std::string& spec, int i) {
    const steenq::Simplex x = parse_simplex_spec(spec);
    auto out = json::array();
    for (const auto& [a, b] : steenq::delta_i_simplex(x, i).sorted_pairs())
        out.push_back(json::array({a.vertices(), b.vertices()}));
    std::cout << out.dump() << '\n';
    return 0;
}

int run_sq(const std::string& complex_path, const std::string& cochain_path, int k,
           const std::string& method) {
    const auto X = steenq::read_complex_file(complex_path);
    const auto a = steenq::read_cochain_file(cochain_path);
    check_supported(a, X);
    const steenq::Cochain result = method == "direct" ? steenq::sq_direct_oracle(a, k, X)
                                                      : steenq::sq_cochain(a, k, X);
    std::cout << steenq::cochain_to_json(result) << '\n';
    return 0;
}

int run_sq_matrix(const std::string& complex_path, int n, int k) {
    const auto X = steenq::read_complex_file(complex_path);
    const steenq::F2Matrix m = steenq::sq_matrix(X, n, k);
    auto matrix = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.get(i, j) ? 1 : 0);
        matrix.push_back(std::move(row));
    }
    json out;
    out["rank"] = steenq::rank(m);
    out["matrix"] = std::move(matrix);
    std::cout << out.dump() << '\n';
    return 0;
}

int run_bench(int max_susp, int repeats, const std::string& out_path) {
    const auto rows = steenq::run_suspension_benchmark(max_susp, repeats);
    if (out_path.empty()) {
        steenq::write_benchmark_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        steenq::write_benchmark_csv(out, rows);
    }
    return 0;
}

int run_export(const std::string& name) {
    std::cout << steenq::complex_to_text(steenq::find_space(name).complex);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cup-i products and Steenrod squares on finite simplicial complexes over F2"};
    app.require_subcommand(1);

    std::string complex_path, cochain_path, simplex_spec, method = "fast", out_path, space;
    int i = 0, k = 0, n = 0;
    int max_susp = 6, repeats = 1000;

    auto* cohomology = app.add_subcommand("cohomology", "Mod-2 Betti numbers of a complex");
    cohomology->add_option("-c,--complex", complex_path, "complex file")->required();

    auto* delta = app.add_subcommand("delta", "Cup-i coproduct of one simplex");
    delta->add_option("-s,--simplex", simplex_spec, "comma-separated ascending vertices")
        ->required();
    delta->add_option("-i", i, "coproduct index")->required();

    auto* sq = app.add_subcommand("sq", "Steenrod square of a cochain");
    sq->add_option("-c,--complex", complex_path, "complex file")->required();
    sq->add_option("-a,--cochain", cochain_path, "cochain JSON file")->required();
    sq->add_option("-k", k, "square index")->required();
    sq->add_option("--method", method, "fast|direct")
        ->check(CLI::IsMember({"fast", "direct"}));

    auto* sqm = app.add_subcommand("sq-matrix", "Matrix of Sq^k on cohomology");
    sqm->add_option("-c,--complex", complex_path, "complex file")->required();
    sqm->add_option("-n", n, "source degree")->required();
    sqm->add_option("-k", k, "square index")->required();

    auto* bench = app.add_subcommand("bench", "Suspension benchmark, CSV output");
    bench->add_option("--max-susp", max_susp, "largest suspension index");
    bench->add_option("--repeats", repeats, "repeat count before halving");
    bench->add_option("--out", out_path, "CSV output file (default: stdout)");

    auto* exporter = app.add_subcommand("export-space", "Print a built-in space");
    exporter->add_option("name", space, "space name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cohomology->parsed()) return run_cohomology(complex_path);
        if (delta->parsed()) return run_delta(simplex_spec, i);
        if (sq->parsed()) return run_sq(complex_path, cochain_path, k, method);
        if (sqm->parsed()) return run_sq_matrix(complex_path, n, k);
        if (bench->parsed()) return run_bench(max_susp, repeats, out_path);
        if (exporter->parsed()) return run_export(space);
    } catch (const steenq::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const steenq::internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
