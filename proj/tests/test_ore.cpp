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
} // namespace

TEST_CASE("left polynomial evaluation keeps coefficients on the left") {
    LeftPolynomial p(H, {qk(), qi() + qj(), q1()}); // k + (i+j)x + x^2
    Element x = qi() - qk();
    CHECK(left_eval(p, x) == qk() + (qi() + qj()) * x + x * x);
    CHECK(p.degree() == 2);
    LeftPolynomial z(H, {Element(H), Element(H)});
    CHECK(z.is_zero());
}

TEST_CASE("left product is the Cauchy product of coefficient lists") {
    LeftPolynomial p(H, {qi(), qj()});
    LeftPolynomial r(H, {qk(), q1()});
    LeftPolynomial pr = left_mul(p, r);
    REQUIRE(pr.degree() == 2);
    CHECK(pr.coeff(0) == qi() * qk());
    CHECK(pr.coeff(1) == qi() * q1() + qj() * qk());
    CHECK(pr.coeff(2) == qj() * q1());
}

TEST_CASE("left product evaluation is not multiplicative") {
    // (x - i)(x - j) as left polynomials: x^2 - (i+j)x + ij; at x = i the
    // product of values is 0 but the product polynomial is not
    LeftPolynomial L(H, {-qi(), q1()});
    LeftPolynomial R(H, {-qj(), q1()});
    LeftPolynomial P = left_mul(L, R);
    Element x = qi();
    CHECK(left_eval(L, x).is_zero());
    CHECK(!left_eval(P, x).is_zero());
}

TEST_CASE("conjugation step of the left-sided factorization fails") {
    auto rep = weierstrass_step_check();
    CHECK(rep.p_value == qk());
    CHECK(rep.p1_value == Rational(2) * q1() + qk());
    CHECK(rep.differs);
}

TEST_CASE("left linear equations") {
    auto u = solve_left_linear(qi() + qj(), qk());
    REQUIRE(u.kind == SolutionSet::Kind::unique);
    CHECK(u.particular * (qi() + qj()) + qk() == Element(H));

    auto n = solve_left_linear(Element(H), qk());
    CHECK(n.kind == SolutionSet::Kind::none);

    auto a = solve_left_linear(Element(H), Element(H));
    REQUIRE(a.kind == SolutionSet::Kind::affine);
    CHECK(a.kernel_basis.size() == 4);
}
