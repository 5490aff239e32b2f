#include "steenq/spaces.hpp"

#include <stdexcept>
#include <unordered_map>

#include "steenq/error.hpp"
#include "steenq/f2linear.hpp"
#include "steenq/steenrod.hpp"

namespace steenq {

namespace {

SimplicialComplex closure_of(const std::vector<std::vector<VertexId>>& facets) {
    std::vector<Simplex> maximal;
    maximal.reserve(facets.size());
    for (const auto& f : facets) maximal.emplace_back(f);
    return SimplicialComplex::from_maximal_simplices(maximal);
}

// Number of (d+1)-simplices of X having s as a face, for every d-simplex s.
std::unordered_map<Simplex, int, SimplexHash> cofacet_counts(const SimplicialComplex& X,
                                                             int d) {
    std::unordered_map<Simplex, int, SimplexHash> counts;
    for (const Simplex& s : X.simplices(d)) counts[s] = 0;
    for (const Simplex& t : X.simplices(d + 1))
        for (int i = 0; i <= t.dim(); ++i) ++counts[face(t, i)];
    return counts;
}

// Pure d-dimensional and every (d-1)-simplex lies in exactly two facets.
void check_closed_pseudomanifold(const SimplicialComplex& X, int d, const std::string& name) {
    if (X.top_dimension() != d)
        throw internal_error(name + ": wrong top dimension");
    for (int lower = 0; lower < d; ++lower)
        for (const auto& [s, c] : cofacet_counts(X, lower))
            if (c == 0) throw internal_error(name + ": not pure");
    for (const auto& [s, c] : cofacet_counts(X, d - 1))
        if (c != 2) throw internal_error(name + ": ridge not in exactly two facets");
}

void check_euler(const SimplicialComplex& X, int expected, const std::string& name) {
    if (euler_characteristic(X) != expected)
        throw internal_error(name + ": wrong Euler characteristic");
}

void check_sq_rank(const SimplicialComplex& X, int n, int k, std::size_t expected,
                   const std::string& name) {
    if (rank(sq_matrix(X, n, k)) != expected)
        throw internal_error(name + ": embedded data fails the square-rank check");
}

}  // namespace

NamedSpace make_named_space(std::string name, SimplicialComplex complex,
                            std::vector<int> expected_betti) {
    if (betti_numbers(complex) != expected_betti)
        throw internal_error(name + ": Betti numbers disagree with the expected ones");
    return NamedSpace{std::move(name), std::move(complex), std::move(expected_betti)};
}

SimplicialComplex standard_simplex(int n) {
    if (n < 0) throw std::invalid_argument("dimension must be nonnegative");
    std::vector<VertexId> verts(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) verts[static_cast<std::size_t>(v)] = v;
    return SimplicialComplex::from_maximal_simplices({Simplex(verts)});
}

SimplicialComplex sphere(int n) {
    if (n < 0) throw std::invalid_argument("dimension must be nonnegative");
    const Simplex top = [&] {
        std::vector<VertexId> verts(static_cast<std::size_t>(n) + 2);
        for (int v = 0; v <= n + 1; ++v) verts[static_cast<std::size_t>(v)] = v;
        return Simplex(verts);
    }();
    std::vector<Simplex> facets;
    for (int i = 0; i <= n + 1; ++i) facets.push_back(face(top, i));
    return SimplicialComplex::from_maximal_simplices(facets);
}

NamedSpace rp2() {
    // Antipodal quotient of the icosahedron: 6 vertices, 15 edges, 10
    // triangles. The data is validated below rather than trusted.
    static const std::vector<std::vector<VertexId>> facets = {
        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
        {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
    SimplicialComplex X = closure_of(facets);
    check_closed_pseudomanifold(X, 2, "rp2");
    check_euler(X, 1, "rp2");
    check_sq_rank(X, 1, 1, 1, "rp2");
    return make_named_space("rp2", std::move(X), {1, 1, 1});
}

NamedSpace cp2() {
    // The 9-vertex triangulation: complete 2-skeleton, 90 tetrahedra and 36
    // top cells. Validated below; the square-rank check is the deep one.
    static const std::vector<std::vector<VertexId>> facets = {
        {1, 2, 4, 5, 6}, {2, 3, 4, 5, 6}, {1, 3, 4, 5, 6},
        {1, 2, 4, 5, 9}, {2, 3, 5, 6, 7}, {1, 3, 4, 6, 8},
        {2, 3, 4, 6, 9}, {1, 3, 4, 5, 7}, {1, 2, 5, 6, 8},
        {1, 3, 5, 6, 9}, {1, 2, 4, 6, 7}, {2, 3, 4, 5, 8},
        {4, 5, 7, 8, 9}, {5, 6, 7, 8, 9}, {4, 6, 7, 8, 9},
        {3, 4, 5, 7, 8}, {1, 5, 6, 8, 9}, {2, 4, 6, 7, 9},
        {3, 5, 6, 7, 9}, {1, 4, 6, 7, 8}, {2, 4, 5, 8, 9},
        {3, 4, 6, 8, 9}, {1, 4, 5, 7, 9}, {2, 5, 6, 7, 8},
        {1, 2, 3, 7, 8}, {1, 2, 3, 8, 9}, {1, 2, 3, 7, 9},
        {1, 2, 6, 7, 8}, {2, 3, 4, 8, 9}, {1, 3, 5, 7, 9},
        {1, 3, 6, 8, 9}, {1, 2, 4, 7, 9}, {2, 3, 5, 7, 8},
        {2, 3, 6, 7, 9}, {1, 3, 4, 7, 8}, {1, 2, 5, 8, 9}};
    SimplicialComplex X = closure_of(facets);
    check_closed_pseudomanifold(X, 4, "cp2");
    check_euler(X, 3, "cp2");
    check_sq_rank(X, 2, 2, 1, "cp2");
    return make_named_space("cp2", std::move(X), {1, 0, 1, 0, 1});
}

NamedSpace sphere_space(int n) {
    std::vector<int> betti(static_cast<std::size_t>(n) + 1, 0);
    betti.front() = 1;
    betti.back() += 1;  // n = 0 gives two components
    return make_named_space("sphere" + std::to_string(n), sphere(n), std::move(betti));
}

NamedSpace simplex_space(int n) {
    std::vector<int> betti(static_cast<std::size_t>(n) + 1, 0);
    betti.front() = 1;
    return make_named_space("simplex" + std::to_string(n), standard_simplex(n),
                            std::move(betti));
}

NamedSpace iterated_suspension(const NamedSpace& S, int i) {
    if (i < 0) throw std::invalid_argument("suspension count must be nonnegative");
    if (i == 0) return S;
    SimplicialComplex X = S.complex;
    std::vector<int> betti = S.expected_betti;
    std::string name = S.name;
    for (int step = 0; step < i; ++step) {
        X = suspension(X);
        // Reduced Betti numbers shift up one degree; the result is connected.
        std::vector<int> shifted(betti.size() + 1, 0);
        shifted[0] = 1;
        shifted[1] = betti[0] - 1;
        for (std::size_t d = 1; d < betti.size(); ++d) shifted[d + 1] = betti[d];
        betti = std::move(shifted);
        name = "susp-" + name;
    }
    return make_named_space(std::move(name), std::move(X), std::move(betti));
}

NamedSpace wedge_space(const NamedSpace& S, const NamedSpace& T) {
    std::vector<int> betti(std::max(S.expected_betti.size(), T.expected_betti.size()), 0);
    for (std::size_t d = 0; d < betti.size(); ++d) {
        const int a = d < S.expected_betti.size() ? S.expected_betti[d] : 0;
        const int b = d < T.expected_betti.size() ? T.expected_betti[d] : 0;
        betti[d] = (d == 0) ? 1 : a + b;  // both connected, one point shared
    }
    return make_named_space(S.name + "-wedge-" + T.name, wedge(S.complex, T.complex),
                            std::move(betti));
}

int euler_characteristic(const SimplicialComplex& X) {
    int chi = 0;
    for (int d = 0; d <= X.top_dimension(); ++d) {
        const int count = static_cast<int>(X.size(d));
        chi += (d % 2 == 0) ? count : -count;
    }
    return chi;
}

std::vector<NamedSpace> builtin_spaces() {
    std::vector<NamedSpace> out;
    out.push_back(simplex_space(2));
    out.push_back(simplex_space(3));
    out.push_back(sphere_space(1));
    out.push_back(sphere_space(2));
    out.push_back(sphere_space(4));
    out.push_back(rp2());
    out.push_back(cp2());
    out.push_back(wedge_space(sphere_space(1), sphere_space(2)));
    out.push_back(wedge_space(sphere_space(2), sphere_space(4)));
    out.push_back(iterated_suspension(rp2(), 1));
    out.push_back(iterated_suspension(cp2(), 1));
    out.push_back(iterated_suspension(wedge_space(sphere_space(2), sphere_space(4)), 1));
    return out;
}

NamedSpace find_space(const std::string& name) {
    for (NamedSpace& s : builtin_spaces())
        if (s.name == name) return std::move(s);
    throw std::invalid_argument("unknown space: " + name);
}

std::vector<std::string> builtin_space_names() {
    std::vector<std::string> out;
    for (const NamedSpace& s : builtin_spaces()) out.push_back(s.name);
    return out;
}

}  // namespace steenq
