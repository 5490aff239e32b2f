#include "steenq/bench.hpp"

#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "steenq/error.hpp"
#include "steenq/f2linear.hpp"
#include "steenq/spaces.hpp"
#include "steenq/steenrod.hpp"

namespace steenq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Suspension of a cochain: each support simplex gains the north apex. The
// class of a cocycle maps to the class of its image under the suspension
// isomorphism, which the caller re-verifies against a computed basis.
Cochain suspend_cochain(const Cochain& a, VertexId north) {
    Cochain out;
    out.degree = a.degree + 1;
    for (const Simplex& s : a.support) {
        std::vector<VertexId> verts = s.vertices();
        verts.push_back(north);
        out.support.insert(Simplex(std::move(verts)));
    }
    return out;
}

}  // namespace

std::vector<BenchRow> run_suspension_benchmark(int max_i, int repeats_base) {
    if (max_i < 0) throw std::invalid_argument("max_i must be nonnegative");
    if (repeats_base < 1) throw std::invalid_argument("repeats_base must be positive");

    SimplicialComplex X = rp2().complex;
    Cochain generator = cohomology_basis(X, 1).basis.at(0);

    std::vector<BenchRow> rows;
    for (int i = 0; i <= max_i; ++i) {
        if (i > 0) {
            const VertexId north = X.max_vertex() + 1;
            X = suspension(X);
            generator = suspend_cochain(generator, north);
        }
        const int degree = 1 + i;

        // The timed cocycle must generate H^{1+i} and must have a nonzero
        // Sq^1 class; anything else means the fixture pipeline is broken.
        const CohomologySpace source = cohomology_basis(X, degree);
        if (source.dim() != 1 || !is_cocycle(X, generator) ||
            !class_coordinates(source, generator).any())
            throw internal_error("suspension benchmark: generator lost its class");
        const CohomologySpace target = cohomology_basis(X, degree + 1);
        const Cochain square = sq_cochain(generator, 1, X);
        if (!is_cocycle(X, square) || !class_coordinates(target, square).any())
            throw internal_error("suspension benchmark: Sq^1 class is zero");

        const int repeats = std::max(1, repeats_base >> i);
        BenchRow row;
        row.suspension_index = i;
        row.n_simplices = X.size();
        row.n_target = X.size(degree + 1);
        row.support = generator.support.size();
        row.repeats = repeats;

        // Warm-up, excluded from the averages.
        Cochain fast = sq_cochain(generator, 1, X);
        Cochain direct = sq_direct_oracle(generator, 1, X);

        double fast_total = 0.0, direct_total = 0.0;
        for (int r = 0; r < repeats; ++r) {
            auto start = Clock::now();
            fast = sq_cochain(generator, 1, X);
            fast_total += seconds_since(start);

            start = Clock::now();
            direct = sq_direct_oracle(generator, 1, X);
            direct_total += seconds_since(start);

            if (fast != direct)
                throw internal_error("suspension benchmark: methods disagree");
        }
        row.fast_seconds = fast_total / repeats;
        row.direct_seconds = direct_total / repeats;
        rows.push_back(row);
    }
    return rows;
}

void write_benchmark_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    std::ostringstream text;
    text.imbue(std::locale::classic());
    text.precision(9);
    text << "i,n_simplices,n_target,support,repeats,fast_s,direct_s\n";
    for (const BenchRow& r : rows) {
        text << r.suspension_index << ',' << r.n_simplices << ',' << r.n_target << ','
             << r.support << ',' << r.repeats << ',' << r.fast_seconds << ','
             << r.direct_seconds << '\n';
    }
    out << text.str();
}

}  // namespace steenq
