#pragma once

// Embedded, self-validating test spaces: standard simplices, sphere
// boundaries, the minimal projective-plane triangulations, wedges and
// iterated suspensions. Every named space re-derives its Betti numbers at
// construction and refuses to exist when they disagree.

#include <string>
#include <vector>

#include "steenq/simplicial.hpp"

namespace steenq {

struct NamedSpace {
    std::string name;
    SimplicialComplex complex;
    std::vector<int> expected_betti;
};

/// Builds a named space and checks expected_betti against the computed mod-2
/// cohomology dimensions; throws internal_error on mismatch.
NamedSpace make_named_space(std::string name, SimplicialComplex complex,
                            std::vector<int> expected_betti);

SimplicialComplex standard_simplex(int n);
/// Boundary of the (n+1)-simplex.
SimplicialComplex sphere(int n);

/// The 6-vertex minimal triangulation of the real projective plane.
/// Construction validates: pure, closed (each edge in two triangles),
/// Euler characteristic 1, Betti (1,1,1), and a rank-1 Sq^1 on H^1.
NamedSpace rp2();

/// The 9-vertex minimal triangulation of the complex projective plane.
/// Construction validates: pure, closed (each 3-simplex in two 4-simplices),
/// Euler characteristic 3, Betti (1,0,1,0,1), and a rank-1 Sq^2 on H^2.
NamedSpace cp2();

NamedSpace sphere_space(int n);
NamedSpace simplex_space(int n);

/// i-fold suspension with the expected Betti numbers shifted accordingly.
NamedSpace iterated_suspension(const NamedSpace& S, int i);
/// One-point union at the minimum vertices, Betti numbers added in positive
/// degrees.
NamedSpace wedge_space(const NamedSpace& S, const NamedSpace& T);

int euler_characteristic(const SimplicialComplex& X);

/// The registry used by the relation checks and the exporter.
std::vector<NamedSpace> builtin_spaces();
/// Looks a space up by registry name; throws std::invalid_argument if absent.
NamedSpace find_space(const std::string& name);
std::vector<std::string> builtin_space_names();

}  // namespace steenq
