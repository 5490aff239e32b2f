#include "steenq/cupi.hpp"

#include <algorithm>
#include <stdexcept>

namespace steenq {

std::size_t SimplexPairHash::operator()(const std::pair<Simplex, Simplex>& p) const noexcept {
    const SimplexHash h;
    const std::size_t a = h(p.first);
    const std::size_t b = h(p.second);
    return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

bool TensorSum::contains(const Simplex& a, const Simplex& b) const {
    return pairs_.contains({a, b});
}

void TensorSum::toggle(const Simplex& a, const Simplex& b) { toggle(Pair{a, b}); }

void TensorSum::toggle(Pair p) {
    auto [it, inserted] = pairs_.insert(std::move(p));
    if (!inserted) pairs_.erase(it);
}

void TensorSum::add(const TensorSum& other) {
    for (const Pair& p : other.pairs_) toggle(p);
}

std::vector<TensorSum::Pair> TensorSum::sorted_pairs() const {
    std::vector<Pair> out(pairs_.begin(), pairs_.end());
    std::sort(out.begin(), out.end());
    return out;
}

TensorSum TensorSum::transposed() const {
    TensorSum out;
    for (const Pair& p : pairs_) out.toggle(p.second, p.first);
    return out;
}

std::pair<std::vector<int>, std::vector<int>> subset_partition(const std::vector<int>& U) {
    for (std::size_t i = 1; i < U.size(); ++i)
        if (U[i - 1] >= U[i])
            throw std::invalid_argument("subset must be strictly ascending");
    std::vector<int> part0, part1;
    for (std::size_t j = 0; j < U.size(); ++j) {
        // u_j goes left iff it matches the parity of its 1-based position.
        if ((U[j] & 1) == static_cast<int>((j + 1) & 1))
            part0.push_back(U[j]);
        else
            part1.push_back(U[j]);
    }
    return {std::move(part0), std::move(part1)};
}

TensorSum delta_i_simplex(const Simplex& x, int i) {
    TensorSum out;
    const int n = x.dim();
    if (i < 0 || i > n) return out;
    const int q = n - i;  // |U|

    // Lexicographic enumeration of the q-subsets of {0..n}.
    std::vector<int> U(q);
    for (int j = 0; j < q; ++j) U[j] = j;
    std::vector<int> left, right;
    left.reserve(q);
    right.reserve(q);
    while (true) {
        left.clear();
        right.clear();
        for (int j = 0; j < q; ++j) {
            if ((U[j] & 1) == ((j + 1) & 1))
                left.push_back(U[j]);
            else
                right.push_back(U[j]);
        }
        out.toggle(face_composite(x, left), face_composite(x, right));

        int j = q - 1;
        while (j >= 0 && U[j] == n - (q - 1 - j)) --j;
        if (j < 0) break;
        ++U[j];
        for (int t = j + 1; t < q; ++t) U[t] = U[t - 1] + 1;
    }
    return out;
}

TensorSum delta_i_chain(const Chain& c, int i) {
    TensorSum out;
    for (const Simplex& x : c.support) out.add(delta_i_simplex(x, i));
    return out;
}

int evaluate_pairing(const Cochain& a, const Cochain& b, const TensorSum& t) {
    int parity = 0;
    for (const auto& [left, right] : t.pairs())
        if (a.support.contains(left) && b.support.contains(right)) parity ^= 1;
    return parity;
}

Cochain cup_i_product(const Cochain& a, const Cochain& b, int i, const SimplicialComplex& X) {
    validate_cochain(a);
    validate_cochain(b);
    for (const Simplex& s : a.support)
        if (!X.contains(s)) throw std::invalid_argument("left cochain not supported on X");
    for (const Simplex& s : b.support)
        if (!X.contains(s)) throw std::invalid_argument("right cochain not supported on X");

    Cochain out;
    out.degree = a.degree + b.degree - i;
    if (out.degree < 0) return out;
    for (const Simplex& x : X.simplices(out.degree))
        if (evaluate_pairing(a, b, delta_i_simplex(x, i))) out.support.insert(x);
    return out;
}

}  // namespace steenq
