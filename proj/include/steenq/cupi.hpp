#pragma once

// Cup-i coproducts on simplices and chains, the induced cup-i products on
// cochains, and the tensor pairing evaluator. cup_i_product deliberately
// walks every simplex of the target dimension; it doubles as the direct
// baseline that the support-based Steenrod routine is checked against.

#include <utility>
#include <vector>

#include "steenq/simplicial.hpp"

namespace steenq {

struct SimplexPairHash {
    std::size_t operator()(const std::pair<Simplex, Simplex>& p) const noexcept;
};

/// Mod-2 formal sum of ordered pairs of simplices.
class TensorSum {
public:
    using Pair = std::pair<Simplex, Simplex>;
    using PairSet = std::unordered_set<Pair, SimplexPairHash>;

    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }
    bool contains(const Simplex& a, const Simplex& b) const;
    const PairSet& pairs() const { return pairs_; }

    /// Adds a tensor pair mod 2.
    void toggle(const Simplex& a, const Simplex& b);
    void toggle(Pair p);
    /// Mod-2 sum with another tensor sum.
    void add(const TensorSum& other);
    /// Pairs in lexicographic order (first factor, then second).
    std::vector<Pair> sorted_pairs() const;
    /// The transposition of tensor factors applied to every pair.
    TensorSum transposed() const;

    friend bool operator==(const TensorSum&, const TensorSum&) = default;

private:
    PairSet pairs_;
};

/// Splits an ascending set U = {u_1 < ... < u_q} by the parity rule:
/// the first component keeps u_j with u_j = j mod 2 (positions 1-based),
/// the second the rest.
std::pair<std::vector<int>, std::vector<int>> subset_partition(const std::vector<int>& U);

/// Cup-i coproduct of a simplex: zero unless 0 <= i <= dim(x), otherwise the
/// sum over all subsets U of {0..dim(x)} with |U| = dim(x) - i of
/// d_{U0}(x) (x) d_{U1}(x), with U0/U1 the parity split of U.
TensorSum delta_i_simplex(const Simplex& x, int i);

/// Linear extension of delta_i_simplex over a chain's support.
TensorSum delta_i_chain(const Chain& c, int i);

/// Evaluates (a (x) b) on a tensor sum: the parity of the pairs whose first
/// factor lies in supp(a) and second in supp(b). Degree-mismatched factors
/// evaluate to zero.
int evaluate_pairing(const Cochain& a, const Cochain& b, const TensorSum& t);

/// Cup-i product: the degree-(|a|+|b|-i) cochain supported on the simplices
/// of X that pair to 1 against delta_i of the simplex. A negative result
/// degree yields the zero cochain.
Cochain cup_i_product(const Cochain& a, const Cochain& b, int i, const SimplicialComplex& X);

}  // namespace steenq
