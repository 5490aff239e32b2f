#pragma once

// Ordered simplicial complexes over integer vertices, face-map combinatorics,
// mod-2 chains/cochains and the constructions (suspension, wedge) used by the
// built-in test spaces.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace steenq {

/// Vertices are nonnegative integers; the natural order makes the vertex set
/// of every simplex totally ordered.
using VertexId = int;

/// A nonempty, strictly increasing list of vertices. dim() = size - 1.
class Simplex {
public:
    /// Validates: nonempty, strictly increasing, nonnegative entries.
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<VertexId> vertices);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t vertex_count() const { return verts_.size(); }
    const std::vector<VertexId>& vertices() const { return verts_; }
    VertexId vertex(std::size_t i) const { return verts_[i]; }
    bool has_vertex(VertexId v) const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    /// Lexicographic on the vertex sequence; fixes all basis orderings.
    friend auto operator<=>(const Simplex&, const Simplex&) = default;

private:
    struct unchecked_tag {};
    Simplex(unchecked_tag, std::vector<VertexId> vertices) : verts_(std::move(vertices)) {}

    std::vector<VertexId> verts_;

    friend Simplex unchecked_simplex(std::vector<VertexId>);
};

/// Internal fast path for callers that guarantee sortedness.
Simplex unchecked_simplex(std::vector<VertexId> vertices);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

/// Deletes the vertex at position i (0-based). Requires dim >= 1.
Simplex face(const Simplex& x, int i);

/// Deletes the vertices of x at the positions in `positions` (strictly
/// ascending, taken in x before any deletion). Equals the right-to-left
/// iterated application of single face maps; the equivalence is a theorem
/// of the simplicial relation, checked exhaustively by the test suite.
Simplex face_composite(const Simplex& x, const std::vector<int>& positions);

/// Mod-2 formal sum of simplices of one dimension; the support set is the sum.
struct Chain {
    int degree = 0;
    SimplexSet support;

    bool empty() const { return support.empty(); }
    /// Adds s mod 2 (insert if absent, erase if present).
    void toggle(const Simplex& s);
    /// Support in lexicographic order.
    std::vector<Simplex> sorted_support() const;

    friend bool operator==(const Chain&, const Chain&) = default;
};

/// Throws unless every support simplex has dimension == degree.
void validate_chain(const Chain& c);

/// Sum of all faces of all support simplices, mod 2. Degree drops by one;
/// the boundary of a degree-0 chain is the empty degree(-1) chain.
Chain boundary_chain(const Chain& c);

/// F2-valued function on simplices of one dimension, encoded by its support.
/// A negative degree is allowed only for the zero cochain.
struct Cochain {
    int degree = 0;
    SimplexSet support;

    bool empty() const { return support.empty(); }
    void toggle(const Simplex& s);
    bool evaluate(const Simplex& s) const { return support.contains(s); }
    std::vector<Simplex> sorted_support() const;

    friend bool operator==(const Cochain&, const Cochain&) = default;
};

Cochain operator+(const Cochain& a, const Cochain& b);

void validate_cochain(const Cochain& c);

/// Face-closed, dimension-graded family of simplices. Immutable after
/// construction; membership queries are hash lookups.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of the given simplices.
    static SimplicialComplex from_maximal_simplices(const std::vector<Simplex>& maximal);

    bool empty() const { return by_dim_.empty(); }
    /// -1 for the empty complex.
    int top_dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t size() const;
    std::size_t size(int dim) const;
    /// Simplices of one dimension in lexicographic order. Out-of-range
    /// dimensions yield an empty list.
    const std::vector<Simplex>& simplices(int dim) const;
    bool contains(const Simplex& s) const;
    /// Position of s within simplices(s.dim()), or -1 when absent.
    std::ptrdiff_t index_of(const Simplex& s) const;

    VertexId min_vertex() const;
    VertexId max_vertex() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&);

private:
    std::vector<SimplexSet> by_dim_;
    std::vector<std::vector<Simplex>> sorted_;

    void insert_closure(const Simplex& s);
    void insert(const Simplex& s);
    void freeze();

    friend SimplicialComplex suspension(const SimplicialComplex&);
    friend SimplicialComplex wedge(const SimplicialComplex&, const SimplicialComplex&,
                                   VertexId, VertexId);
};

/// Audits the face-closure invariant (used by tests; constructors maintain it).
bool is_face_closed(const SimplicialComplex& X);

/// Simplices that are not a proper face of any other simplex in X.
std::vector<Simplex> maximal_simplices(const SimplicialComplex& X);

/// A map of vertices, applied simplex-wise. The simplicial-map condition
/// (images of simplices are simplices of the target) is checked where used.
struct VertexMap {
    std::unordered_map<VertexId, VertexId> assignment;

    /// Throws std::invalid_argument when v has no image.
    VertexId operator()(VertexId v) const;
};

/// True when the image vertex set of every simplex of `source` is a simplex
/// of `target`.
bool is_simplicial(const VertexMap& f, const SimplicialComplex& source,
                   const SimplicialComplex& target);

/// Induced chain map: a simplex with a repeated image vertex contributes 0,
/// otherwise its sorted image simplex, accumulated mod 2. Throws when f is
/// not simplicial on some support simplex.
Chain push_forward(const VertexMap& f, const SimplicialComplex& source,
                   const SimplicialComplex& target, const Chain& c);

/// Double cone over X with two fresh apexes max(V)+1 and max(V)+2; apexes
/// sort last so every vertex list stays increasing.
SimplicialComplex suspension(const SimplicialComplex& X);

/// One-point union: Y is relabeled into the vertex block above max(V_X) and
/// py is identified with px.
SimplicialComplex wedge(const SimplicialComplex& X, const SimplicialComplex& Y,
                        VertexId px, VertexId py);

/// Wedge at the minimum vertex of each complex.
SimplicialComplex wedge(const SimplicialComplex& X, const SimplicialComplex& Y);

}  // namespace steenq
