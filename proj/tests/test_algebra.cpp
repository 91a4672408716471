#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

#include <cmath>

using namespace ncpoly;

namespace {
const AlgebraSpec& H = quaternions();
const AlgebraSpec& O = octonions();
Element q1() { return basis_element(H, 0); }
Element qi() { return basis_element(H, 1); }
Element qj() { return basis_element(H, 2); }
Element qk() { return basis_element(H, 3); }
} // namespace

TEST_CASE("quaternion multiplication table") {
    CHECK(qi() * qj() == qk());
    CHECK(qj() * qk() == qi());
    CHECK(qk() * qi() == qj());
    CHECK(qj() * qi() == -qk());
    CHECK(qi() * qi() == -q1());
    CHECK(qj() * qj() == -q1());
    CHECK(qk() * qk() == -q1());
    CHECK(q1() * qi() == qi());
    CHECK(qi() * q1() == qi());
}

TEST_CASE("octonion multiplication table") {
    Element i = basis_element(O, 1), j = basis_element(O, 2), k = basis_element(O, 3);
    Element l = basis_element(O, 4), il = basis_element(O, 5), jl = basis_element(O, 6),
            kl = basis_element(O, 7);
    CHECK(i * jl == -kl);
    CHECK((i * j) * l == kl);
    CHECK(i * j == k);
    CHECK(l * l == -basis_element(O, 0));
    CHECK(i * l == il);
    // non-associativity witness
    CHECK((i * j) * l != i * (j * l));
}

TEST_CASE("associativity flags") {
    CHECK(H.is_associative());
    CHECK(!O.is_associative());
}

TEST_CASE("algebra lookup") {
    CHECK(&algebra_by_name("H") == &H);
    CHECK(&algebra_by_name("O") == &O);
    CHECK_THROWS_AS(algebra_by_name("C"), AlgebraError);
    CHECK(H.basis_index("k") == 3);
    CHECK(O.basis_index("kl") == 7);
    CHECK(H.basis_index("l") == -1);
}

TEST_CASE("conjugate, norm, inverse") {
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        Element a = testutil::random_nonzero(H, rng);
        CHECK(a * inverse(a) == q1());
        CHECK(inverse(a) * a == q1());
        CHECK(a * conj(a) == scalar_element(H, norm_sq(a)));
    }
    CHECK_THROWS_AS(inverse(Element(H)), AlgebraError);
}

TEST_CASE("octonions are alternative with multiplicative norm") {
    std::mt19937 rng(12);
    for (int t = 0; t < 50; ++t) {
        Element a = testutil::random_element(O, rng);
        Element b = testutil::random_element(O, rng);
        CHECK((a * a) * b == a * (a * b));
        CHECK((b * a) * a == b * (a * a));
        CHECK(norm_sq(a * b) == norm_sq(a) * norm_sq(b));
    }
}

TEST_CASE("mixed algebra arithmetic throws") {
    CHECK_THROWS_AS(qi() + basis_element(O, 1), AlgebraError);
    CHECK_THROWS_AS(qi() * basis_element(O, 1), AlgebraError);
}

TEST_CASE("element printing") {
    CHECK(to_string(qi() + qj()) == "i + j");
    CHECK(to_string(-qk()) == "-k");
    CHECK(to_string(Element(H)) == "0");
    Element e(H, {Rational(1, 2), Rational(0), Rational(-3), Rational(0)});
    CHECK(to_string(e) == "1/2 - 3 j");
}

TEST_CASE("sqrt of i is the +/- pair (1+i)/sqrt2") {
    // oracle: ((1+i)/sqrt2)^2 = (1+i)^2/2 = 2i/2 = i
    auto res = ncpoly::sqrt(qi());
    REQUIRE(res.kind == SqrtResult::Kind::pair);
    REQUIRE(res.roots.size() == 2);
    double s = 1.0 / std::sqrt(2.0);
    for (int sign : {0, 1}) {
        double f = sign == 0 ? 1.0 : -1.0;
        CHECK(std::abs(res.roots[sign].co[0] - f * s) < 1e-10);
        CHECK(std::abs(res.roots[sign].co[1] - f * s) < 1e-10);
        CHECK(std::abs(res.roots[sign].co[2]) < 1e-10);
        CHECK(std::abs(res.roots[sign].co[3]) < 1e-10);
    }
}

TEST_CASE("sqrt special cases") {
    auto z = ncpoly::sqrt(Element(H));
    CHECK(z.kind == SqrtResult::Kind::zero_double);

    auto s = ncpoly::sqrt(scalar_element(H, -1));
    REQUIRE(s.kind == SqrtResult::Kind::sphere);
    CHECK(std::abs(s.sphere_radius - 1.0) < 1e-12);

    auto s4 = ncpoly::sqrt(scalar_element(H, -4));
    REQUIRE(s4.kind == SqrtResult::Kind::sphere);
    CHECK(std::abs(s4.sphere_radius - 2.0) < 1e-12);

    CHECK_THROWS_AS(ncpoly::sqrt(basis_element(O, 1)), AlgebraError);
}

TEST_CASE("sqrt squares back to the input") {
    std::mt19937 rng(13);
    for (int t = 0; t < 100; ++t) {
        Element a = testutil::random_nonzero(H, rng, -5, 5);
        if (im(a).is_zero() && re(a) < 0) continue;
        auto res = ncpoly::sqrt(a);
        REQUIRE(res.kind == SqrtResult::Kind::pair);
        for (const auto& r : res.roots) {
            FloatElement sq = fmul(r, r);
            for (std::size_t c = 0; c < 4; ++c)
                CHECK(std::abs(sq.co[c] - static_cast<double>(a[c])) < 1e-10);
        }
    }
}
