#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "steenq/cupi.hpp"
#include "steenq/spaces.hpp"

using namespace steenq;

namespace {

Simplex standard(int n) {
    std::vector<VertexId> verts(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) verts[static_cast<std::size_t>(v)] = v;
    return Simplex(verts);
}

TensorSum pairs_of(std::vector<std::pair<Simplex, Simplex>> list) {
    TensorSum t;
    for (auto& p : list) t.toggle(std::move(p));
    return t;
}

// Closed-form Alexander-Whitney diagonal: front face tensor back face.
TensorSum alexander_whitney(const Simplex& x) {
    TensorSum out;
    const int n = x.dim();
    for (int j = 0; j <= n; ++j) {
        std::vector<VertexId> front(x.vertices().begin(), x.vertices().begin() + j + 1);
        std::vector<VertexId> back(x.vertices().begin() + j, x.vertices().end());
        out.toggle(Simplex(std::move(front)), Simplex(std::move(back)));
    }
    return out;
}

}  // namespace

TEST_CASE("subset_partition splits by position parity") {
    using IntVec = std::vector<int>;
    CHECK(subset_partition({1}) == std::pair<IntVec, IntVec>{{1}, {}});
    CHECK(subset_partition({0}) == std::pair<IntVec, IntVec>{{}, {0}});
    CHECK(subset_partition({0, 1}) == std::pair<IntVec, IntVec>{{}, {0, 1}});
    CHECK(subset_partition({1, 2}) == std::pair<IntVec, IntVec>{{1, 2}, {}});
    CHECK(subset_partition({}) == std::pair<IntVec, IntVec>{{}, {}});
    CHECK_THROWS_AS(subset_partition({2, 1}), std::invalid_argument);
}

TEST_CASE("subset_partition agrees with the index-function characterization") {
    // ind(u_j) = u_j + j mod 2 (1-based); the left part is its zero preimage.
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> U;
        for (int v = 0; v <= 10; ++v)
            if (std::bernoulli_distribution(0.4)(rng)) U.push_back(v);
        const auto [left, right] = subset_partition(U);
        std::vector<int> ind_zero, ind_one;
        for (std::size_t j = 0; j < U.size(); ++j)
            (((U[j] + static_cast<int>(j) + 1) % 2 == 0) ? ind_zero : ind_one).push_back(U[j]);
        CHECK(left == ind_zero);
        CHECK(right == ind_one);
    }
}

TEST_CASE("coproduct of an edge is the Alexander-Whitney diagonal") {
    CHECK(delta_i_simplex(Simplex{0, 1}, 0) ==
          pairs_of({{Simplex{0}, Simplex{0, 1}}, {Simplex{0, 1}, Simplex{1}}}));
}

TEST_CASE("top coproduct is the doubling map") {
    CHECK(delta_i_simplex(Simplex{0, 1, 2}, 2) ==
          pairs_of({{Simplex{0, 1, 2}, Simplex{0, 1, 2}}}));
    for (int n = 0; n <= 7; ++n)
        CHECK(delta_i_simplex(standard(n), n) == pairs_of({{standard(n), standard(n)}}));
}

TEST_CASE("out-of-range coproducts vanish") {
    CHECK(delta_i_simplex(Simplex{0, 1}, 3).empty());
    CHECK(delta_i_simplex(Simplex{0, 1}, -1).empty());
}

TEST_CASE("middle coproduct of the triangle") {
    // Hand enumeration over the singleton subsets {0}, {1}, {2}.
    const Simplex x{0, 1, 2};
    CHECK(delta_i_simplex(x, 1) == pairs_of({{x, Simplex{1, 2}},
                                             {Simplex{0, 2}, x},
                                             {x, Simplex{0, 1}}}));
}

TEST_CASE("bottom coproduct matches the Alexander-Whitney closed form") {
    for (int n = 0; n <= 7; ++n)
        CHECK(delta_i_simplex(standard(n), 0) == alexander_whitney(standard(n)));
}

TEST_CASE("summand shape") {
    for (int n = 0; n <= 6; ++n) {
        for (int i = 0; i <= n; ++i) {
            const TensorSum t = delta_i_simplex(standard(n), i);
            for (const auto& [a, b] : t.pairs()) {
                CHECK(a.dim() + b.dim() == n + i);
                // Deleted position sets partition a set of size n - i.
                CHECK((n - a.dim()) + (n - b.dim()) == n - i);
            }
        }
    }
}

TEST_CASE("coproduct of a chain is the sum over its support") {
    CHECK(delta_i_chain(Chain{1, {}}, 0).empty());
    const Simplex e{0, 1};
    CHECK(delta_i_chain(Chain{1, {e}}, 0) == delta_i_simplex(e, 0));

    const Simplex f{3, 4};
    TensorSum expected = delta_i_simplex(e, 0);
    expected.add(delta_i_simplex(f, 0));
    CHECK(delta_i_chain(Chain{1, {e, f}}, 0) == expected);
}

TEST_CASE("pairing evaluation") {
    const Cochain vertex{0, {Simplex{0}}};
    const Cochain edge{1, {Simplex{0, 1}}};
    CHECK(evaluate_pairing(vertex, edge, TensorSum{}) == 0);
    CHECK(evaluate_pairing(vertex, edge, delta_i_simplex(Simplex{0, 1}, 0)) == 1);

    const Cochain triangle{2, {Simplex{0, 1, 2}}};
    CHECK(evaluate_pairing(triangle, triangle, delta_i_simplex(Simplex{0, 1, 2}, 2)) == 1);
}

TEST_CASE("cup-0 is the cup product") {
    const auto X = standard_simplex(2);
    const Cochain left{1, {Simplex{0, 1}}};
    const Cochain right{1, {Simplex{1, 2}}};
    CHECK(cup_i_product(left, right, 0, X) == Cochain{2, {Simplex{0, 1, 2}}});
    // The reversed order picks no Alexander-Whitney term.
    CHECK(cup_i_product(right, left, 0, X).empty());
}

TEST_CASE("negative target degree gives the zero cochain") {
    const auto X = standard_simplex(2);
    const Cochain a{0, {Simplex{0}}};
    const Cochain out = cup_i_product(a, a, 1, X);
    CHECK(out.degree == -1);
    CHECK(out.empty());
}

TEST_CASE("the vertex sum is a two-sided cup unit") {
    const auto spaces = {standard_simplex(2), sphere(2), rp2().complex};
    for (const auto& X : spaces) {
        Cochain unit{0, {}};
        for (const Simplex& v : X.simplices(0)) unit.support.insert(v);
        for (int n = 0; n <= X.top_dimension(); ++n) {
            Cochain a{n, {}};
            std::mt19937 rng(static_cast<unsigned>(n + 13));
            a = testutil::random_cochain(rng, X, n);
            CHECK(cup_i_product(a, unit, 0, X) == a);
            CHECK(cup_i_product(unit, a, 0, X) == a);
        }
    }
}

TEST_CASE("unsupported cochains are rejected") {
    const auto X = standard_simplex(2);
    const Cochain stray{1, {Simplex{4, 5}}};
    CHECK_THROWS_AS(cup_i_product(stray, stray, 0, X), std::invalid_argument);
}

TEST_CASE("coboundary relation on the standard simplices") {
    // boundary(delta_i x) + delta_i(boundary x) = delta_{i-1} x + its swap,
    // here on moderate dimensions; the acceptance suite goes to dimension 7.
    for (int n = 0; n <= 5; ++n) {
        const Simplex x = standard(n);
        for (int i = -1; i <= n + 2; ++i) {
            TensorSum lhs = testutil::tensor_boundary(delta_i_simplex(x, i));
            lhs.add(delta_i_chain(boundary_chain(Chain{n, {x}}), i));
            TensorSum rhs = delta_i_simplex(x, i - 1);
            rhs.add(delta_i_simplex(x, i - 1).transposed());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("coboundary relation on random complexes") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const SimplicialComplex X = testutil::random_complex(rng);
        const int dim = std::uniform_int_distribution<int>(0, X.top_dimension())(rng);
        const auto& level = X.simplices(dim);
        const Simplex& x = level[std::uniform_int_distribution<std::size_t>(
            0, level.size() - 1)(rng)];
        for (int i = -1; i <= dim + 1; ++i) {
            TensorSum lhs = testutil::tensor_boundary(delta_i_simplex(x, i));
            lhs.add(delta_i_chain(boundary_chain(Chain{dim, {x}}), i));
            TensorSum rhs = delta_i_simplex(x, i - 1);
            rhs.add(delta_i_simplex(x, i - 1).transposed());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("naturality under simplicial maps") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        const SimplicialComplex X = testutil::random_complex(rng);
        const auto inst = testutil::random_simplicial_map(rng, X);
        const int dim = std::uniform_int_distribution<int>(0, X.top_dimension())(rng);
        const auto& level = X.simplices(dim);
        if (level.empty()) continue;
        const Simplex& x = level[std::uniform_int_distribution<std::size_t>(
            0, level.size() - 1)(rng)];
        for (int i = 0; i <= dim; ++i) {
            const Chain image = push_forward(inst.f, X, inst.target, Chain{dim, {x}});
            CHECK(delta_i_chain(image, i) ==
                  testutil::push_forward_tensor(inst.f, delta_i_simplex(x, i)));
        }
    }
}

TEST_CASE("boundary of a composite face expands over the missing positions") {
    for (int n = 1; n <= 6; ++n) {
        const Simplex x = standard(n);
        for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
            std::vector<int> positions;
            for (int p = 0; p <= n; ++p)
                if (mask & (1u << p)) positions.push_back(p);
            if (static_cast<int>(positions.size()) > n - 1) continue;
            const Chain lhs =
                boundary_chain(Chain{n - static_cast<int>(positions.size()),
                                     {face_composite(x, positions)}});
            Chain rhs{lhs.degree, {}};
            for (int extra = 0; extra <= n; ++extra) {
                if (std::binary_search(positions.begin(), positions.end(), extra)) continue;
                std::vector<int> enlarged = positions;
                enlarged.insert(std::lower_bound(enlarged.begin(), enlarged.end(), extra),
                                extra);
                rhs.toggle(face_composite(x, enlarged));
            }
            CHECK(lhs == rhs);
        }
    }
}
