#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace ncpoly;

namespace {
const AlgebraSpec& H = quaternions();
Element q1() { return basis_element(H, 0); }
Element qi() { return basis_element(H, 1); }
Element qj() { return basis_element(H, 2); }
Element qk() { return basis_element(H, 3); }

Element apply_matrix(const MapMatrix& m, const Element& x) {
    const AlgebraSpec& a = *m.alg;
    Element r(a);
    for (std::size_t row = 0; row < a.dim(); ++row)
        for (std::size_t col = 0; col < a.dim(); ++col)
            r[row] += m.entries[row][col] * x[col];
    return r;
}
} // namespace

TEST_CASE("apply_linear is the sandwich map") {
    // (a (x) b) o x = a x b
    TensorSum t = pure({qi(), qj()});
    Element x = q1() + qk();
    CHECK(apply_linear(t, x) == qi() * x * qj());
    CHECK(apply_linear(identity_tensor(H), x) == x);
}

TEST_CASE("matrix agrees with apply_linear on random input") {
    std::mt19937 rng(21);
    for (int rep = 0; rep < 200; ++rep) {
        TensorSum t = testutil::random_tensor(H, rng, 2);
        MapMatrix m = matrix_of(t);
        Element x = testutil::random_element(H, rng);
        CHECK(apply_matrix(m, x) == apply_linear(t, x));
    }
}

TEST_CASE("composition matches matrix product") {
    std::mt19937 rng(22);
    for (int rep = 0; rep < 100; ++rep) {
        TensorSum p = testutil::random_tensor(H, rng, 2);
        TensorSum q = testutil::random_tensor(H, rng, 2);
        TensorSum c = compose_rank2(p, q);
        CHECK(matrix_of(c).entries == mat_mul(matrix_of(p).entries, matrix_of(q).entries));
    }
}

TEST_CASE("composition requires associativity") {
    const AlgebraSpec& O = octonions();
    TensorSum p = pure({basis_element(O, 1), basis_element(O, 2)});
    CHECK_THROWS_AS(compose_rank2(p, p), AlgebraError);
}

TEST_CASE("matrix/tensor round trip on random matrices") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int rep = 0; rep < 100; ++rep) {
        MapMatrix m{&H, RatMat(4, RatVec(4))};
        for (auto& row : m.entries)
            for (auto& v : row) v = d(rng);
        TensorSum t = tensor_of(m);
        CHECK(matrix_of(t).entries == m.entries);
    }
}

TEST_CASE("polylinear application and permutation") {
    TensorSum t = pure({qi(), qj(), qk()});
    Element x = q1() + qi(), y = qj() - qk();
    CHECK(apply_polylinear(t, {x, y}) == qi() * x * qj() * y * qk());
    CHECK(apply_polylinear(t, {x, y}, {1, 0}) == qi() * y * qj() * x * qk());
    CHECK_THROWS_AS(apply_polylinear(t, {x}), AlgebraError);
}

TEST_CASE("star splices the middle factors") {
    TensorSum a = pure({qi(), qj()});
    TensorSum b = pure({qk(), q1()});
    TensorSum s = star(a, b);
    REQUIRE(s.rank() == 3);
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].factors[0] == qi());
    CHECK(s.terms()[0].factors[1] == qj() * qk());
    CHECK(s.terms()[0].factors[2] == q1());
}

TEST_CASE("determinant and inverse tensor") {
    TensorSum t = pure({qi(), qj()});
    CHECK(det(t) != 0);
    CHECK(is_nonsingular(t));
    TensorSum inv = inverse_tensor(t);
    TensorSum c = compose_rank2(t, inv);
    CHECK(matrix_of(c).entries == matrix_of(identity_tensor(H)).entries);

    TensorSum sing = pure({qi(), q1()}) - pure({q1(), qi()});
    CHECK(det(sing) == 0);
    CHECK_THROWS_AS(inverse_tensor(sing), AlgebraError);
}

TEST_CASE("solve: unique solution for a nonsingular map") {
    std::mt19937 rng(24);
    for (int rep = 0; rep < 50; ++rep) {
        TensorSum t = testutil::random_tensor(H, rng, 2);
        if (!is_nonsingular(t)) continue;
        Element b = testutil::random_element(H, rng);
        auto s = solve(t, b);
        REQUIRE(s.kind == SolutionSet::Kind::unique);
        CHECK(apply_linear(t, s.particular) == b);
    }
}

TEST_CASE("solve: the commutator-with-i map") {
    // a o x = ix - xi; matrix has rows (0,0,0,0),(0,0,0,0),(0,0,0,-2),(0,0,2,0)
    TensorSum t = pure({qi(), q1()}) - pure({q1(), qi()});
    RatMat expected = {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -2}, {0, 0, 2, 0}};
    CHECK(matrix_of(t).entries == expected);

    auto sk = solve(t, qk());
    REQUIRE(sk.kind == SolutionSet::Kind::affine);
    CHECK(sk.particular == Rational(1, 2) * qj());
    REQUIRE(sk.kernel_basis.size() == 2);
    CHECK(sk.kernel_basis[0] == q1());
    CHECK(sk.kernel_basis[1] == qi());
    for (const auto& kb : sk.kernel_basis) CHECK(apply_linear(t, kb).is_zero());

    auto s1 = solve(t, q1());
    CHECK(s1.kind == SolutionSet::Kind::none);
}

TEST_CASE("tensor sum bookkeeping") {
    TensorSum t(H, 2);
    CHECK(t.is_zero_rep());
    t.add_term({Element(H), qj()});
    CHECK(t.is_zero_rep()); // zero factors are dropped
    CHECK_THROWS_AS(t.add_term({qi()}), AlgebraError);
    CHECK_THROWS_AS(pure({qi(), qj()}) + pure({qi(), qj(), qk()}), AlgebraError);
}
