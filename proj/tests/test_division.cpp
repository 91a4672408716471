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
Polynomial X() { return Polynomial::variable(H); }
Polynomial C(const Element& e) { return Polynomial::constant(e); }

/// The chain's quotient as a map of (x, divisor value y).
Element chain_value(const QuotientChain& ch, const Element& x, const Element& y) {
    Element acc(*ch.alg);
    for (std::size_t i = 0; i < ch.parts.size(); ++i)
        for (const auto& pt : ch.parts[i].terms()) {
            Element v = pt.factors[0];
            for (std::size_t s = 1; s <= i; ++s) v = v * x * pt.factors[s];
            acc += v * y * pt.factors[i + 1];
        }
    return acc;
}

Element fc_value(const FactorChain& fc, const Element& x, const std::vector<Element>& slots) {
    Element acc(*fc.alg);
    for (const auto& term : fc.core) acc += eval_core_term_at(term, x, slots);
    return acc;
}
} // namespace

TEST_CASE("quadratic with right root: quotient is x - j") {
    Polynomial r = X() * X() - C(qj()) * X() - X() * C(qi()) - C(qk());
    // same polynomial as (x - j)(x - i)
    CHECK(equals_as_map(r, (X() - C(qj())) * (X() - C(qi()))));
    auto ch = divide_monic(r, qi());
    CHECK(ch.remainder.is_zero());
    std::mt19937 rng(41);
    for (int t = 0; t < 20; ++t) {
        Element x = testutil::random_element(H, rng);
        Element y = testutil::random_element(H, rng);
        CHECK(chain_value(ch, x, y) == (x - qj()) * y);
    }
}

TEST_CASE("quadratic divided by its left root") {
    // (x - i)(x - j) divided by x - i: quotient -i(x)1 - 1(x)j + 1(x)i + x(x)1
    Polynomial r = (X() - C(qi())) * (X() - C(qj()));
    auto ch = divide_monic(r, qi());
    CHECK(ch.remainder.is_zero());
    std::mt19937 rng(42);
    for (int t = 0; t < 20; ++t) {
        Element x = testutil::random_element(H, rng);
        Element y = testutil::random_element(H, rng);
        CHECK(chain_value(ch, x, y) == -qi() * y - y * qj() + y * qi() + x * y);
    }
}

TEST_CASE("two-sided quadratic: divisor x - i leaves remainder 0") {
    Polynomial r = X() * X() - C(qi()) * X() - C(qj()) * X() - C(qk());
    auto ch = divide_monic(r, qi());
    CHECK(ch.remainder.is_zero());
    // quotient 1(x)i + (x - i - j)(x)1
    std::mt19937 rng(43);
    for (int t = 0; t < 20; ++t) {
        Element x = testutil::random_element(H, rng);
        Element y = testutil::random_element(H, rng);
        CHECK(chain_value(ch, x, y) == y * qi() + (x - qi() - qj()) * y);
    }
}

TEST_CASE("two-sided quadratic: divisor x - j leaves remainder -2k") {
    Polynomial r = X() * X() - C(qi()) * X() - C(qj()) * X() - C(qk());
    auto ch = divide_monic(r, qj());
    CHECK(ch.remainder == Rational(-2) * qk());
    CHECK(r.evaluate(qj()) == Rational(-2) * qk());
    std::mt19937 rng(44);
    for (int t = 0; t < 20; ++t) {
        Element x = testutil::random_element(H, rng);
        Element y = testutil::random_element(H, rng);
        CHECK(chain_value(ch, x, y) == y * qj() + (x - qi() - qj()) * y);
    }
}

TEST_CASE("cubic divided by x - k") {
    Polynomial r = (X() - C(qj())) * (X() - C(qk())) * (X() - C(qj() + qk()));
    auto ch = divide_monic(r, qk());
    CHECK(ch.remainder.is_zero());
    // quotient j(x)j + i(x)1 - x(x)j - jx(x)1 - xk(x)1 + x^2(x)1
    std::mt19937 rng(45);
    for (int t = 0; t < 20; ++t) {
        Element x = testutil::random_element(H, rng);
        Element y = testutil::random_element(H, rng);
        Element want = qj() * y * qj() + qi() * y - x * y * qj() - (qj() * x) * y -
                       (x * qk()) * y + (x * x) * y;
        CHECK(chain_value(ch, x, y) == want);
    }
}

TEST_CASE("division identity and remainder law on random polynomials") {
    std::mt19937 rng(46);
    for (int rep = 0; rep < 100; ++rep) {
        Polynomial r = testutil::random_polynomial(H, rng, 4);
        Element a = testutil::random_element(H, rng);
        auto ch = divide_monic(r, a);
        CHECK(equals_as_map(chain_apply_monic(ch, a), r));
        CHECK(ch.remainder == r.evaluate(a));
    }
}

TEST_CASE("degree-0 input reconstructs trivially") {
    auto ch = divide_monic(C(qk()), qi());
    CHECK(ch.remainder == qk());
    CHECK(ch.parts.empty());
    CHECK(equals_as_map(chain_apply_monic(ch, qi()), C(qk())));
}

TEST_CASE("kernel condition matrix of the remainder-free quadratic") {
    Polynomial r = X() * X() - C(qi()) * X() - C(qj()) * X() - C(qk());
    auto ch = divide_monic(r, qi());
    // M(x) = 1 (x) i + (x - i - j) (x) 1
    auto [m2i, det2i] = kernel_condition_matrix(ch, Rational(2) * qi());
    RatMat expected = {{0, -2, 1, 0}, {2, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}};
    CHECK(m2i.entries == expected);
    CHECK(det2i == det(expected));

    auto [mi, deti] = kernel_condition_matrix(ch, qi());
    TensorSum want = pure({q1(), qi()}) + pure({-qj(), q1()});
    CHECK(mi.entries == matrix_of(want).entries);
    CHECK(deti == det(want));

    auto chx = divide_monic(X() - C(qi()), qi());
    auto [mid, detid] = kernel_condition_matrix(chx, qj());
    CHECK(detid == 1);

    auto bad = divide_monic(X(), qi()); // remainder i
    CHECK_THROWS_AS(kernel_condition_matrix(bad, qj()), AlgebraError);
}

TEST_CASE("general linear divisor reduces to the monic case") {
    std::mt19937 rng(47);
    Polynomial r = testutil::random_polynomial(H, rng, 3);
    Element a = testutil::random_element(H, rng);
    auto mono = divide_monic(r, a);
    auto gen = divide_linear(r, identity_tensor(H), -a);
    CHECK(gen.remainder == mono.remainder);
    for (int t = 0; t < 10; ++t) {
        Element x = testutil::random_element(H, rng);
        Element y = testutil::random_element(H, rng);
        CHECK(chain_value(gen, x, y) == chain_value(mono, x, y));
    }
}

TEST_CASE("general linear divisor: scaled divisor reconstructs") {
    Polynomial r = X() * X() + C(q1());
    TensorSum p1 = pure({Rational(2) * q1(), q1()});
    Element p0 = Rational(-2) * qi();
    auto ch = divide_linear(r, p1, p0);
    CHECK(equals_as_map(chain_apply(ch, p1, p0), r));
}

TEST_CASE("general linear divisor: random nonsingular divisors reconstruct") {
    std::mt19937 rng(48);
    int done = 0;
    while (done < 20) {
        TensorSum p1 = testutil::random_tensor(H, rng, 2);
        if (!is_nonsingular(p1)) continue;
        Element p0 = testutil::random_element(H, rng);
        Polynomial r = testutil::random_polynomial(H, rng, 3);
        auto ch = divide_linear(r, p1, p0);
        CHECK(equals_as_map(chain_apply(ch, p1, p0), r));
        ++done;
    }
}

TEST_CASE("singular linear divisor is rejected") {
    TensorSum p1 = pure({qi(), q1()}) - pure({q1(), qi()});
    Polynomial r = X() * X() + C(q1());
    CHECK_THROWS_WITH_AS(divide_linear(r, p1, Element(H)), "singular linear divisor",
                         AlgebraError);
}

TEST_CASE("factor chain of the cubic with roots j, k") {
    Polynomial r = (X() - C(qj())) * (X() - C(qk())) * (X() - C(qj() + qk()));
    auto fc = factor_chain(r, {qj(), qk()});
    CHECK(fc.clean);
    REQUIRE(fc.stage_remainders.size() == 2);
    CHECK(fc.stage_remainders[0].is_zero());
    CHECK(fc.stage_remainders[1].is_zero());

    std::mt19937 rng(49);
    for (int t = 0; t < 20; ++t) {
        Element x = testutil::random_element(H, rng);
        CHECK(evaluate(fc, x) == r.evaluate(x));
    }
    // core as a map of (x, v1, v2): -v1 v2 j - j v1 v2 - v1 k v2 + v1 j v2 + x v1 v2
    for (int t = 0; t < 20; ++t) {
        Element x = testutil::random_element(H, rng);
        Element v1 = testutil::random_element(H, rng);
        Element v2 = testutil::random_element(H, rng);
        Element want = -(v1 * v2 * qj()) - qj() * v1 * v2 - v1 * qk() * v2 +
                       v1 * qj() * v2 + x * v1 * v2;
        CHECK(fc_value(fc, x, {v1, v2}) == want);
    }
}

TEST_CASE("inner division of the factor chain's residual quadratic") {
    // i - jx - xk + x^2 divided by x - j: quotient -j(x)1 - 1(x)k + 1(x)j + x(x)1
    Polynomial r = C(qi()) - C(qj()) * X() - X() * C(qk()) + X() * X();
    auto ch = divide_monic(r, qj());
    CHECK(ch.remainder.is_zero());
    std::mt19937 rng(50);
    for (int t = 0; t < 20; ++t) {
        Element x = testutil::random_element(H, rng);
        Element y = testutil::random_element(H, rng);
        CHECK(chain_value(ch, x, y) == -qj() * y - y * qk() + y * qj() + x * y);
    }
}

TEST_CASE("factor chain trivial and single-root cases") {
    auto fc = factor_chain(X() - C(qi()), {qi()});
    CHECK(fc.clean);
    CHECK(fc.stage_remainders[0].is_zero());
    REQUIRE(fc.core.size() == 1);
    CHECK(fc.core[0].mono == std::vector<Element>{q1()});
    CHECK(fc.core[0].tails == std::vector<Element>{q1()});

    Polynomial r = X() * X() - C(qi()) * X() - C(qj()) * X() - C(qk());
    auto fc93 = factor_chain(r, {qj()});
    CHECK(fc93.stage_remainders[0] == Rational(-2) * qk());
    std::mt19937 rng(51);
    for (int t = 0; t < 20; ++t) {
        Element x = testutil::random_element(H, rng);
        CHECK(evaluate(fc93, x) == r.evaluate(x));
    }

    CHECK_THROWS_AS(factor_chain(r, {}), AlgebraError);
}

TEST_CASE("factor chain reports a stage that cannot be split") {
    Polynomial r = X() * X();
    auto fc = factor_chain(r, {qj(), qk()});
    CHECK(!fc.clean);
    CHECK(!fc.report.empty());
    std::mt19937 rng(52);
    for (int t = 0; t < 20; ++t) {
        Element x = testutil::random_element(H, rng);
        CHECK(evaluate(fc, x) == r.evaluate(x));
    }
}
