#include "steenq/steenrod.hpp"

#include <algorithm>
#include <stdexcept>

#include "steenq/error.hpp"

namespace steenq {

int position(const std::vector<VertexId>& S, VertexId v) {
    auto it = std::lower_bound(S.begin(), S.end(), v);
    if (it == S.end() || *it != v)
        throw std::invalid_argument("element not a member of the ordered set");
    return static_cast<int>(it - S.begin()) + 1;
}

namespace {

// Sorted union of two ascending vertex lists.
std::vector<VertexId> merge_union(const std::vector<VertexId>& a,
                                  const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<VertexId> set_difference(const std::vector<VertexId>& a,
                                     const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

SimplexSet sq_support(const SimplexSet& A, int n, int k, const SimplicialComplex& X) {
    if (k < 1 || k > n) throw std::invalid_argument("k must lie in {1, ..., n}");
    std::vector<Simplex> support(A.begin(), A.end());
    std::sort(support.begin(), support.end());
    for (const Simplex& a : support) {
        if (a.dim() != n) throw std::invalid_argument("support simplex of wrong dimension");
        if (!X.contains(a)) throw std::invalid_argument("support simplex not in X");
    }

    const std::size_t union_size = static_cast<std::size_t>(n + k + 1);
    SimplexSet accumulator;
    for (std::size_t i = 0; i + 1 < support.size(); ++i) {
        for (std::size_t j = i + 1; j < support.size(); ++j) {
            const auto& ai = support[i].vertices();
            const auto& aj = support[j].vertices();
            std::vector<VertexId> union_verts = merge_union(ai, aj);
            if (union_verts.size() != union_size) continue;
            Simplex candidate = unchecked_simplex(std::move(union_verts));
            if (!X.contains(candidate)) continue;

            const std::vector<VertexId> only_i = set_difference(ai, aj);
            const std::vector<VertexId> only_j = set_difference(aj, ai);
            const std::vector<VertexId> sym_diff = merge_union(only_i, only_j);

            // ind(v) = position in the union + position in the symmetric
            // difference, mod 2. Collect the image of each side as a 2-bit set.
            unsigned image_i = 0, image_j = 0;
            for (VertexId v : only_i)
                image_i |= 1u << ((position(candidate.vertices(), v) + position(sym_diff, v)) & 1);
            for (VertexId v : only_j)
                image_j |= 1u << ((position(candidate.vertices(), v) + position(sym_diff, v)) & 1);
            if ((image_i ^ image_j) != 3u) continue;  // demand ind images {0} vs {1}

            auto [it, inserted] = accumulator.insert(std::move(candidate));
            if (!inserted) accumulator.erase(it);
        }
    }
    return accumulator;
}

Cochain sq_cochain(const Cochain& a, int k, const SimplicialComplex& X) {
    validate_cochain(a);
    const int n = a.degree;
    Cochain out;
    out.degree = n + k;
    if (k < 0 || k > n) return out;
    if (k == 0) return a;
    out.support = sq_support(a.support, n, k, X);
    return out;
}

Cochain sq_direct_oracle(const Cochain& a, int k, const SimplicialComplex& X) {
    validate_cochain(a);
    const int n = a.degree;
    Cochain out;
    out.degree = n + k;
    if (k < 0 || k > n) return out;
    for (const Simplex& x : X.simplices(n + k))
        if (evaluate_pairing(a, a, delta_i_simplex(x, n - k))) out.support.insert(x);
    return out;
}

F2Vector sq_class(const SimplicialComplex& X, const CohomologySpace& source,
                  const CohomologySpace& target, std::size_t class_index) {
    if (class_index >= source.basis.size())
        throw std::invalid_argument("class index out of range");
    const int k = target.degree - source.degree;
    const Cochain image = sq_cochain(source.basis[class_index], k, X);
    if (!is_cocycle(X, image))
        throw internal_error("square of a cocycle is not a cocycle");
    return class_coordinates(target, image);
}

F2Matrix sq_matrix(const SimplicialComplex& X, int n, int k) {
    const CohomologySpace source = cohomology_basis(X, n);
    const CohomologySpace target =
        (n + k >= 0) ? cohomology_basis(X, n + k) : CohomologySpace{n + k, {}, {}, {}};
    F2Matrix m(target.dim(), source.dim());
    for (std::size_t j = 0; j < source.dim(); ++j) {
        const F2Vector col = sq_class(X, source, target, j);
        for (std::size_t i = 0; i < target.dim(); ++i)
            if (col.get(i)) m.set(i, j, true);
    }
    return m;
}

}  // namespace steenq
