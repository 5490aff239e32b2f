#include "steenq/f2linear.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace steenq {

void F2Vector::set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

F2Vector& F2Vector::operator^=(const F2Vector& o) {
    if (n_ != o.n_) throw std::invalid_argument("F2Vector length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool F2Vector::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

std::size_t F2Vector::popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t F2Vector::first_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return n_;
}

bool F2Vector::dot(const F2Vector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("F2Vector length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
}

F2Vector operator^(F2Vector a, const F2Vector& b) {
    a ^= b;
    return a;
}

F2Vector F2Matrix::column(std::size_t j) const {
    F2Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (data_[i].get(j)) out.set(i, true);
    return out;
}

F2Vector multiply(const F2Matrix& m, const F2Vector& x) {
    if (m.cols() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    F2Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out.set(i, m.row(i).dot(x));
    return out;
}

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    F2Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        F2Vector acc(b.cols());
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k)) acc ^= b.row(k);
        out.row(i) = std::move(acc);
    }
    return out;
}

namespace {

struct Echelon {
    F2Matrix mat;
    std::vector<std::size_t> pivot_cols;  // one per pivot row, ascending
};

// Row echelon form with pivot = first nonzero column, lexicographic scan.
Echelon echelonize(F2Matrix m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m.get(i, col)) {
                pivot = i;
                break;
            }
        }
        if (pivot == m.rows()) continue;
        std::swap(m.row(r), m.row(pivot));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, col)) m.row(i) ^= m.row(r);
        pivot_cols.push_back(col);
        ++r;
    }
    return {std::move(m), std::move(pivot_cols)};
}

}  // namespace

std::size_t rank(F2Matrix m) { return echelonize(std::move(m)).pivot_cols.size(); }

std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    // Eliminate on the augmented matrix [m | b].
    F2Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        aug.row(i) = F2Vector(m.cols() + 1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) aug.row(i).set(j, true);
        if (b.get(i)) aug.row(i).set(m.cols(), true);
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (aug.get(i, col)) {
                pivot = i;
                break;
            }
        if (pivot == m.rows()) continue;
        std::swap(aug.row(r), aug.row(pivot));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && aug.get(i, col)) aug.row(i) ^= aug.row(r);
        pivot_cols.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < m.rows(); ++i)
        if (aug.get(i, m.cols())) return std::nullopt;  // 0 = 1 row
    F2Vector x(m.cols());
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        if (aug.get(i, m.cols())) x.set(pivot_cols[i], true);
    return x;
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
    Echelon e = echelonize(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<F2Vector> out;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        F2Vector x(m.cols());
        x.set(j, true);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            if (e.mat.get(r, j)) x.set(e.pivot_cols[r], true);
        out.push_back(std::move(x));
    }
    return out;
}

bool F2Span::insert(F2Vector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    const std::size_t p = v.first_set();
    if (p == v.size()) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool F2Span::contains(F2Vector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    return !v.any();
}

F2Matrix coboundary_matrix(const SimplicialComplex& X, int n) {
    const auto& domain = X.simplices(n);
    const auto& target = X.simplices(n + 1);
    F2Matrix m(target.size(), domain.size());
    if (domain.empty()) return m;
    for (std::size_t i = 0; i < target.size(); ++i) {
        const Simplex& y = target[i];
        for (int f = 0; f <= y.dim(); ++f) {
            const std::ptrdiff_t j = X.index_of(face(y, f));
            // Faces are always present (face closure); all dims match n.
            m.set(i, static_cast<std::size_t>(j), !m.get(i, static_cast<std::size_t>(j)));
        }
    }
    return m;
}

Cochain coboundary(const SimplicialComplex& X, const Cochain& a) {
    validate_cochain(a);
    Cochain out;
    out.degree = a.degree + 1;
    for (const Simplex& y : X.simplices(a.degree + 1)) {
        std::size_t hits = 0;
        for (int f = 0; f <= y.dim(); ++f)
            if (a.support.contains(face(y, f))) ++hits;
        if (hits & 1) out.support.insert(y);
    }
    return out;
}

bool is_cocycle(const SimplicialComplex& X, const Cochain& a) {
    return coboundary(X, a).empty();
}

bool is_coboundary(const SimplicialComplex& X, const Cochain& a) {
    validate_cochain(a);
    if (a.empty()) return true;
    if (a.degree == 0) return false;  // no (-1)-cochains
    const F2Matrix m = coboundary_matrix(X, a.degree - 1);
    return solve(m, cochain_to_vector(X, a)).has_value();
}

CohomologySpace cohomology_basis(const SimplicialComplex& X, int n) {
    if (n < 0) throw std::invalid_argument("cohomology degree must be nonnegative");
    CohomologySpace H;
    H.degree = n;
    H.simplex_order = X.simplices(n);
    if (H.simplex_order.empty()) return H;

    F2Span span;
    if (n >= 1) {
        const F2Matrix below = coboundary_matrix(X, n - 1);
        for (std::size_t j = 0; j < below.cols(); ++j) {
            F2Vector col = below.column(j);
            if (span.insert(col))
                H.coboundary_basis.push_back(vector_to_cochain(H.simplex_order, n, col));
        }
    }
    for (const F2Vector& v : kernel_basis(coboundary_matrix(X, n)))
        if (span.insert(v)) H.basis.push_back(vector_to_cochain(H.simplex_order, n, v));
    return H;
}

F2Vector class_coordinates(const CohomologySpace& H, const Cochain& a) {
    if (a.degree != H.degree && !a.empty())
        throw std::invalid_argument("cochain degree does not match the cohomology space");
    const std::size_t r = H.basis.size();
    const std::size_t s = H.coboundary_basis.size();
    const std::size_t dim = H.simplex_order.size();
    F2Vector target = cochain_to_vector(H.simplex_order, a);
    F2Matrix m(dim, r + s);
    for (std::size_t j = 0; j < r; ++j) {
        const F2Vector col = cochain_to_vector(H.simplex_order, H.basis[j]);
        for (std::size_t i = 0; i < dim; ++i)
            if (col.get(i)) m.set(i, j, true);
    }
    for (std::size_t j = 0; j < s; ++j) {
        const F2Vector col = cochain_to_vector(H.simplex_order, H.coboundary_basis[j]);
        for (std::size_t i = 0; i < dim; ++i)
            if (col.get(i)) m.set(i, r + j, true);
    }
    const auto sol = solve(m, target);
    if (!sol) throw std::invalid_argument("cochain is not a cocycle");
    F2Vector out(r);
    for (std::size_t j = 0; j < r; ++j) out.set(j, sol->get(j));
    return out;
}

std::vector<int> betti_numbers(const SimplicialComplex& X) {
    std::vector<int> out;
    std::size_t rank_below = 0;  // rank of the degree-(n-1) coboundary
    for (int n = 0; n <= X.top_dimension(); ++n) {
        const std::size_t rank_here = rank(coboundary_matrix(X, n));
        const std::size_t dim_kernel = X.size(n) - rank_here;
        out.push_back(static_cast<int>(dim_kernel - rank_below));
        rank_below = rank_here;
    }
    return out;
}

F2Vector cochain_to_vector(const SimplicialComplex& X, const Cochain& a) {
    return cochain_to_vector(X.simplices(a.degree), a);
}

F2Vector cochain_to_vector(const std::vector<Simplex>& order, const Cochain& a) {
    F2Vector out(order.size());
    for (const Simplex& s : a.support) {
        auto it = std::lower_bound(order.begin(), order.end(), s);
        if (it == order.end() || *it != s)
            throw std::invalid_argument("cochain support simplex missing from the basis order");
        out.flip(static_cast<std::size_t>(it - order.begin()));
    }
    return out;
}

Cochain vector_to_cochain(const std::vector<Simplex>& order, int degree, const F2Vector& v) {
    Cochain out;
    out.degree = degree;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) out.support.insert(order[i]);
    return out;
}

}  // namespace steenq
