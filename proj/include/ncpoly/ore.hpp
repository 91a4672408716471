#ifndef NCPOLY_ORE_HPP
#define NCPOLY_ORE_HPP

#include "tensor.hpp"

#include <vector>

namespace ncpoly {

/// Left-sided polynomial p(x) = sum_i p_i x^i, identity twist only
/// (alpha = id, delta = 0). Trailing zero coefficients are trimmed.
class LeftPolynomial {
public:
    explicit LeftPolynomial(const AlgebraSpec& a) : alg_(&a) {}
    LeftPolynomial(const AlgebraSpec& a, std::vector<Element> coeffs)
        : alg_(&a), co_(std::move(coeffs)) {
        trim();
    }

    const AlgebraSpec& algebra() const { return *alg_; }
    const std::vector<Element>& coeffs() const { return co_; }
    bool is_zero() const { return co_.empty(); }
    std::size_t degree() const { return co_.empty() ? 0 : co_.size() - 1; }

    Element coeff(std::size_t i) const {
        return i < co_.size() ? co_[i] : Element(*alg_);
    }

    friend LeftPolynomial operator+(const LeftPolynomial& p, const LeftPolynomial& r) {
        std::size_t n = std::max(p.co_.size(), r.co_.size());
        std::vector<Element> out;
        for (std::size_t t = 0; t < n; ++t) out.push_back(p.coeff(t) + r.coeff(t));
        return LeftPolynomial(*p.alg_, std::move(out));
    }

    friend LeftPolynomial operator-(const LeftPolynomial& p) {
        std::vector<Element> out;
        for (const auto& c : p.co_) out.push_back(-c);
        return LeftPolynomial(*p.alg_, std::move(out));
    }

    friend LeftPolynomial operator-(const LeftPolynomial& p, const LeftPolynomial& r) {
        return p + (-r);
    }

private:
    void trim() {
        while (!co_.empty() && co_.back().is_zero()) co_.pop_back();
    }

    const AlgebraSpec* alg_;
    std::vector<Element> co_;
};

inline Element left_eval(const LeftPolynomial& p, const Element& x) {
    Element acc(p.algebra());
    Element pw = basis_element(p.algebra(), 0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        acc += p.coeffs()[i] * pw;
        pw = pw * x;
    }
    return acc;
}

/// Cauchy product of the coefficient lists: coefficient j of the result is
/// sum_{i<=j} p_i r_{j-i}. Evaluation is not multiplicative in general.
inline LeftPolynomial left_mul(const LeftPolynomial& p, const LeftPolynomial& r) {
    if (&p.algebra() != &r.algebra()) throw AlgebraError("algebra mismatch");
    if (p.is_zero() || r.is_zero()) return LeftPolynomial(p.algebra());
    std::vector<Element> out(p.degree() + r.degree() + 1, Element(p.algebra()));
    for (std::size_t i = 0; i <= p.degree(); ++i)
        for (std::size_t j = 0; j <= r.degree(); ++j)
            out[i + j] += p.coeffs()[i] * r.coeffs()[j];
    return LeftPolynomial(p.algebra(), std::move(out));
}

/// Root-of-product check for the conjugation step of left-sided
/// factorization: with L = x - i, R = x - j, P = L * R, h = R(i),
/// the claimed factorization P1(x) = L(h x h^{-1}) R(x) disagrees with P
/// at x = i + j.
struct WeierstrassStepReport {
    Element p_value;   // P(i + j)
    Element p1_value;  // L(h (i+j) h^{-1}) R(i+j)
    bool differs;
};

inline WeierstrassStepReport weierstrass_step_check() {
    const AlgebraSpec& h = quaternions();
    Element one = basis_element(h, 0), i = basis_element(h, 1), j = basis_element(h, 2);
    LeftPolynomial L(h, {-i, one});
    LeftPolynomial R(h, {-j, one});
    LeftPolynomial P = left_mul(L, R);

    Element x = i + j;
    Element conj_factor = left_eval(R, i); // i - j
    Element xt = conj_factor * x * inverse(conj_factor);
    Element p1 = left_eval(L, xt) * left_eval(R, x);
    Element p = left_eval(P, x);
    return {p, p1, p != p1};
}

/// Solution set of the left-sided linear polynomial x a_1 + a_0 mirrored to
/// coefficients on the left: a_1 != 0 gives the unique x = (-a_0) a_1^{-1};
/// a_1 = 0 gives none or all of A.
inline SolutionSet solve_left_linear(const Element& a1, const Element& a0) {
    const AlgebraSpec& alg = a1.algebra();
    SolutionSet s{SolutionSet::Kind::none, Element(alg), {}};
    if (!a1.is_zero()) {
        s.kind = SolutionSet::Kind::unique;
        s.particular = (-a0) * inverse(a1);
        return s;
    }
    if (!a0.is_zero()) return s; // none
    s.kind = SolutionSet::Kind::affine;
    s.particular = Element(alg);
    for (std::size_t t = 0; t < alg.dim(); ++t)
        s.kernel_basis.push_back(basis_element(alg, t));
    return s;
}

} // namespace ncpoly

#endif
