#pragma once

// Dense bit-packed linear algebra over the two-element field: coboundary
// matrices, rank/solve by Gaussian elimination, and cohomology bases with
// class coordinates.

#include <cstdint>
#include <optional>
#include <vector>

#include "steenq/simplicial.hpp"

namespace steenq {

/// Bit vector over F2; addition is word-wise exclusive-or.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    F2Vector& operator^=(const F2Vector& o);
    bool any() const;
    std::size_t popcount() const;
    /// Index of the lowest set bit, or size() when zero.
    std::size_t first_set() const;
    /// Parity of the bitwise-AND overlap, the F2 inner product.
    bool dot(const F2Vector& o) const;

    friend bool operator==(const F2Vector&, const F2Vector&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

F2Vector operator^(F2Vector a, const F2Vector& b);

/// Row-major matrix over F2.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, F2Vector(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F2Vector& row(std::size_t i) const { return data_[i]; }
    F2Vector& row(std::size_t i) { return data_[i]; }
    bool get(std::size_t i, std::size_t j) const { return data_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { data_[i].set(j, v); }

    /// Column j as a vector of length rows().
    F2Vector column(std::size_t j) const;

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F2Vector> data_;
};

F2Vector multiply(const F2Matrix& m, const F2Vector& x);
F2Matrix multiply(const F2Matrix& a, const F2Matrix& b);

/// Row rank by elimination (pivot = first nonzero column).
std::size_t rank(F2Matrix m);

/// Any x with Mx = b, or nullopt when inconsistent. Free variables are set
/// to zero, so the answer is determined by the pivot order.
std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b);

/// Basis of { x : Mx = 0 }, one vector per pivot-free column, in column order.
std::vector<F2Vector> kernel_basis(const F2Matrix& m);

/// Incremental row-echelon span for independence tests.
class F2Span {
public:
    /// Reduces v against the stored pivots; keeps the residue when nonzero.
    /// Returns true exactly when v enlarged the span.
    bool insert(F2Vector v);
    bool contains(F2Vector v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<F2Vector> rows_;   // echelon rows
    std::vector<std::size_t> pivots_;
};

/// Matrix of the coboundary C^n -> C^{n+1} in the lexicographic simplex
/// bases: entry (y, x) = 1 iff x is a face of y. Out-of-range degrees give
/// the empty matrix of the correct shape.
F2Matrix coboundary_matrix(const SimplicialComplex& X, int n);

/// The coboundary of a cochain, evaluated directly on the complex.
Cochain coboundary(const SimplicialComplex& X, const Cochain& a);

bool is_cocycle(const SimplicialComplex& X, const Cochain& a);
bool is_coboundary(const SimplicialComplex& X, const Cochain& a);

/// Per-degree basis of cocycle representatives plus the data needed to
/// express any cocycle's class in that basis.
struct CohomologySpace {
    int degree = 0;
    /// Lexicographic ordering of the n-simplices; the coordinate convention
    /// for every vector below.
    std::vector<Simplex> simplex_order;
    /// Cocycle representatives of a basis of H^n.
    std::vector<Cochain> basis;
    /// Independent spanning set of the coboundary space.
    std::vector<Cochain> coboundary_basis;

    std::size_t dim() const { return basis.size(); }
};

/// Kernel basis of the degree-n coboundary, extended from an image basis of
/// the degree-(n-1) coboundary; the extension vectors represent H^n.
CohomologySpace cohomology_basis(const SimplicialComplex& X, int n);

/// Coordinates of [a] in the basis of H. Throws when a is not a cocycle
/// (equivalently, not in the span of basis and coboundary_basis).
F2Vector class_coordinates(const CohomologySpace& H, const Cochain& a);

/// dim H^n for n = 0 .. top_dimension, via rank-nullity.
std::vector<int> betti_numbers(const SimplicialComplex& X);

/// Coordinate vector of a cochain in the lexicographic order of X_n.
/// Throws when some support simplex is missing from X.
F2Vector cochain_to_vector(const SimplicialComplex& X, const Cochain& a);
F2Vector cochain_to_vector(const std::vector<Simplex>& order, const Cochain& a);
Cochain vector_to_cochain(const std::vector<Simplex>& order, int degree, const F2Vector& v);

}  // namespace steenq
