#pragma once

// Timing comparison of the support-based square routine against the direct
// per-simplex evaluation, on the nontrivial Sq^1 of iterated suspensions of
// the real projective plane.

#include <iosfwd>
#include <vector>

namespace steenq {

struct BenchRow {
    int suspension_index = 0;
    std::size_t n_simplices = 0;   // all simplices of the suspended space
    std::size_t n_target = 0;      // simplices of the square's target dimension
    std::size_t support = 0;       // support size of the timed cocycle
    int repeats = 0;
    double fast_seconds = 0.0;
    double direct_seconds = 0.0;
};

/// For each i in 0..max_i: builds the i-fold suspension of the projective
/// plane, takes the suspended degree-(1+i) generator cocycle (verified
/// nonzero against the computed cohomology basis, as is its Sq^1 image),
/// then times the support-based and the direct method over
/// max(1, repeats_base / 2^i) runs each. Only the square computation is
/// timed; a warm-up run is excluded and both paths are checked to agree on
/// every run.
std::vector<BenchRow> run_suspension_benchmark(int max_i, int repeats_base);

/// CSV with header i,n_simplices,n_target,support,repeats,fast_s,direct_s.
void write_benchmark_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace steenq
