#pragma once

// Shared test utilities: independent oracle computations (iterated faces,
// factorwise tensor boundary, tensor push-forward) and randomized generators
// for complexes, cochains and simplicial maps. Everything here stays off the
// code paths it is used to check.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "steenq/cupi.hpp"
#include "steenq/f2linear.hpp"
#include "steenq/simplicial.hpp"

namespace testutil {

using namespace steenq;

// Literal right-to-left iterated face application, the oracle for
// face_composite.
inline Simplex iterated_faces(Simplex x, const std::vector<int>& positions) {
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) x = face(x, *it);
    return x;
}

// Factorwise boundary of a tensor sum; a 0-dimensional factor contributes
// nothing because there are no (-1)-chains.
inline TensorSum tensor_boundary(const TensorSum& t) {
    TensorSum out;
    for (const auto& [a, b] : t.pairs()) {
        if (a.dim() >= 1)
            for (int i = 0; i <= a.dim(); ++i) out.toggle(face(a, i), b);
        if (b.dim() >= 1)
            for (int i = 0; i <= b.dim(); ++i) out.toggle(a, face(b, i));
    }
    return out;
}

// Image simplex under a vertex map, or nullopt when a vertex repeats.
inline std::optional<Simplex> map_simplex(const VertexMap& f, const Simplex& s) {
    std::vector<VertexId> img;
    img.reserve(s.vertex_count());
    for (VertexId v : s.vertices()) img.push_back(f(v));
    std::sort(img.begin(), img.end());
    for (std::size_t i = 1; i < img.size(); ++i)
        if (img[i - 1] == img[i]) return std::nullopt;
    return Simplex(std::move(img));
}

// (f (x) f) applied to a tensor sum, factors with degenerate image dropped.
inline TensorSum push_forward_tensor(const VertexMap& f, const TensorSum& t) {
    TensorSum out;
    for (const auto& [a, b] : t.pairs()) {
        const auto fa = map_simplex(f, a);
        if (!fa) continue;
        const auto fb = map_simplex(f, b);
        if (!fb) continue;
        out.toggle(*fa, *fb);
    }
    return out;
}

inline std::vector<VertexId> complex_vertices(const SimplicialComplex& X) {
    std::vector<VertexId> out;
    for (const Simplex& s : X.simplices(0)) out.push_back(s.vertex(0));
    return out;
}

// Downward closure of a few random maximal simplices, retried until the
// total simplex count fits the cap.
inline SimplicialComplex random_complex(std::mt19937& rng, int max_facet_dim = 5,
                                        std::size_t max_size = 200) {
    for (;;) {
        const int nverts = std::uniform_int_distribution<int>(5, 9)(rng);
        const int nfacets = std::uniform_int_distribution<int>(2, 5)(rng);
        std::vector<Simplex> maximal;
        for (int m = 0; m < nfacets; ++m) {
            const int dim =
                std::uniform_int_distribution<int>(1, std::min(max_facet_dim, nverts - 1))(rng);
            std::vector<VertexId> pool(static_cast<std::size_t>(nverts));
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), rng);
            pool.resize(static_cast<std::size_t>(dim) + 1);
            std::sort(pool.begin(), pool.end());
            maximal.emplace_back(std::move(pool));
        }
        SimplicialComplex X = SimplicialComplex::from_maximal_simplices(maximal);
        if (X.size() <= max_size) return X;
    }
}

inline Cochain random_cochain(std::mt19937& rng, const SimplicialComplex& X, int degree,
                              double density = 0.5) {
    Cochain out;
    out.degree = degree;
    std::bernoulli_distribution keep(density);
    for (const Simplex& s : X.simplices(degree))
        if (keep(rng)) out.support.insert(s);
    return out;
}

struct MapInstance {
    VertexMap f;
    SimplicialComplex target;
};

namespace detail {

inline MapInstance with_image_target(VertexMap f, const SimplicialComplex& X) {
    MapInstance out;
    out.f = std::move(f);
    std::vector<Simplex> image_facets;
    for (const Simplex& s : maximal_simplices(X)) {
        std::vector<VertexId> img;
        for (VertexId v : s.vertices()) img.push_back(out.f(v));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        image_facets.emplace_back(std::move(img));
    }
    out.target = SimplicialComplex::from_maximal_simplices(image_facets);
    return out;
}

}  // namespace detail

// A random vertex poset morphism on X (weakly monotone, so collapses are
// frequent but order never inverts). The target is the closure of the images
// of X's maximal simplices, so the map is simplicial by construction.
inline MapInstance random_simplicial_map(std::mt19937& rng, const SimplicialComplex& X) {
    const std::vector<VertexId> verts = complex_vertices(X);
    VertexMap f;
    VertexId next = std::uniform_int_distribution<VertexId>(0, 3)(rng);
    for (VertexId v : verts) {
        f.assignment[v] = next;
        // Step 0 collapses the next vertex onto this one.
        next += std::uniform_int_distribution<VertexId>(0, 2)(rng);
    }
    return detail::with_image_target(std::move(f), X);
}

// Arbitrary (possibly order-inverting) vertex map; still simplicial onto its
// image complex, used where only set-level behavior matters.
inline MapInstance random_vertex_map(std::mt19937& rng, const SimplicialComplex& X) {
    const std::vector<VertexId> verts = complex_vertices(X);
    VertexMap f;
    const int range = std::uniform_int_distribution<int>(2, 8)(rng);
    for (VertexId v : verts)
        f.assignment[v] = std::uniform_int_distribution<VertexId>(0, range)(rng);
    return detail::with_image_target(std::move(f), X);
}

}  // namespace testutil
