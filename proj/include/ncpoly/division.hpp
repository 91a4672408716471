#ifndef NCPOLY_DIVISION_HPP
#define NCPOLY_DIVISION_HPP

#include "polynomial.hpp"

#include <string>
#include <vector>

namespace ncpoly {

/// Division result for a linear divisor: remainder s_0 plus per-degree
/// quotient parts q_i. Part i is a rank-(i+2) tensor sum whose first i+1
/// factors form the x-dependent monomial and whose last factor multiplies
/// after the divisor value:
///   q_i(x) o y = sum_s (t_{s,0} x ... x t_{s,i}) y c_s.
struct QuotientChain {
    const AlgebraSpec* alg;
    Element remainder;
    std::vector<TensorSum> parts;
};

/// Standard division of r by the monic linear polynomial x - a.
/// Each step peels the top degree: the last factor of every pure tensor
/// becomes the divisor slot, the x branch cancels the top degree exactly,
/// and the a branch folds into the next degree down.
inline QuotientChain divide_monic(const Polynomial& r, const Element& a) {
    const AlgebraSpec& alg = r.algebra();
    Polynomial work = r;
    auto top = work.formal_degree();
    std::size_t k0 = top.value_or(0);
    QuotientChain chain{&alg, Element(alg), {}};
    for (std::size_t i = 0; i < k0; ++i) chain.parts.emplace_back(alg, i + 2);

    while (true) {
        auto d = work.formal_degree();
        if (!d || *d == 0) break;
        std::size_t k = *d;
        TensorSum comp = *work.component(k); // rank k+1
        work.drop_component(k);
        TensorSum folded(alg, k); // the a branch, degree k-1
        for (const auto& pt : comp.terms()) {
            chain.parts[k - 1].add_term(pt);
            std::vector<Element> f(pt.factors.begin(), pt.factors.end() - 2);
            f.push_back(pt.factors[k - 1] * a * pt.factors[k]);
            folded.add_term(std::move(f));
        }
        work.add_component(k - 1, folded);
    }
    chain.remainder = work.constant_term();
    return chain;
}

/// Reconstruct the polynomial s_0 + sum_i q_i(x) o p(x) for the linear
/// divisor p(x) = p1 o x + p0, expanded symbolically.
inline Polynomial chain_apply(const QuotientChain& chain, const TensorSum& p1,
                              const Element& p0) {
    const AlgebraSpec& alg = *chain.alg;
    Polynomial out = Polynomial::constant(chain.remainder);
    for (std::size_t i = 0; i < chain.parts.size(); ++i) {
        const TensorSum& q = chain.parts[i];
        TensorSum hi(alg, i + 2);  // x branch, degree i+1
        TensorSum lo(alg, i + 1);  // constant branch, degree i
        for (const auto& pt : q.terms()) {
            const Element& tail = pt.factors[i + 1];
            for (const auto& ut : p1.terms()) {
                std::vector<Element> f(pt.factors.begin(), pt.factors.end() - 2);
                f.push_back(pt.factors[i] * ut.factors[0]);
                f.push_back(ut.factors[1] * tail);
                hi.add_term(std::move(f));
            }
            if (!p0.is_zero()) {
                std::vector<Element> f(pt.factors.begin(), pt.factors.end() - 2);
                f.push_back(pt.factors[i] * p0 * tail);
                lo.add_term(std::move(f));
            }
        }
        out.add_component(i + 1, hi);
        out.add_component(i, lo);
    }
    return out;
}

/// Reconstruction against the monic divisor x - a.
inline Polynomial chain_apply_monic(const QuotientChain& chain, const Element& a) {
    return chain_apply(chain, identity_tensor(*chain.alg), -a);
}

/// Division by a general nonsingular linear divisor p(x) = p1 o x + p0,
/// via p(x) = p1 o (x + p1^{-1} o p0): run the monic division, then merge
/// p1^{-1} into each part at the slot boundary.
inline QuotientChain divide_linear(const Polynomial& r, const TensorSum& p1,
                                   const Element& p0) {
    if (!is_nonsingular(p1))
        throw AlgebraError("singular linear divisor");
    const AlgebraSpec& alg = r.algebra();
    TensorSum inv = inverse_tensor(p1);
    Element c = apply_linear(inv, p0);
    QuotientChain mono = divide_monic(r, -c);
    QuotientChain out{&alg, mono.remainder, {}};
    for (std::size_t i = 0; i < mono.parts.size(); ++i) {
        TensorSum q(alg, i + 2);
        for (const auto& pt : mono.parts[i].terms())
            for (const auto& ut : inv.terms()) {
                std::vector<Element> f(pt.factors.begin(), pt.factors.end() - 2);
                f.push_back(pt.factors[i] * ut.factors[0]);
                f.push_back(ut.factors[1] * pt.factors[i + 1]);
                q.add_term(std::move(f));
            }
        out.parts.push_back(std::move(q));
    }
    return out;
}

/// Collapse the chain's x dependence at a concrete x, giving the rank-2
/// tensor M(x) with r(x) = M(x) o (x - a). Returns its coordinate matrix
/// and exact determinant; a non-trivial kernel is the necessary condition
/// for further roots.
inline std::pair<MapMatrix, Rational> kernel_condition_matrix(const QuotientChain& chain,
                                                              const Element& x) {
    if (!chain.remainder.is_zero())
        throw AlgebraError("kernel condition requires a remainder-free chain");
    const AlgebraSpec& alg = *chain.alg;
    TensorSum m(alg, 2);
    for (std::size_t i = 0; i < chain.parts.size(); ++i)
        for (const auto& pt : chain.parts[i].terms()) {
            TensorSum mono(alg, i + 1);
            mono.add_term(std::vector<Element>(pt.factors.begin(), pt.factors.end() - 1));
            std::vector<Element> args(i, x);
            m.add_term({apply_polylinear(mono, args), pt.factors[i + 1]});
        }
    MapMatrix mm = matrix_of(m);
    Rational d = det(mm.entries);
    return {mm, d};
}

/// One term of a factor-chain core: mono(x) = m_0 x m_1 ... x m_p followed
/// by slot multipliers; a term with s tails consumes the last s divisor
/// values, value = mono(x) v_{m-s+1} tails_0 v_{m-s+2} tails_1 ... .
struct CoreTerm {
    std::vector<Element> mono;
    std::vector<Element> tails;
};

/// Iterated division by linear factors x - a_t, applied right to left.
struct FactorChain {
    const AlgebraSpec* alg;
    std::vector<Element> roots;
    std::vector<Element> stage_remainders; // one per stage, first division first
    std::vector<CoreTerm> core;
    bool clean = true;    // every stage residual had zero remainder
    std::string report;   // explanation when not clean
};

namespace detail {

/// Scale each tail so its first non-zero coordinate is 1, folding the scale
/// into the leading monomial factor. Terms whose tails agree up to scaling
/// then land in the same group.
inline void normalize_core(CoreTerm& term) {
    for (auto& tail : term.tails) {
        const auto& co = tail.coords();
        std::size_t p = 0;
        while (p < co.size() && co[p] == 0) ++p;
        if (p == co.size() || co[p] == 1) continue;
        Rational q = co[p];
        term.mono[0] = q * term.mono[0];
        tail = (Rational(1) / q) * tail;
    }
}

} // namespace detail

/// Core term applied at x with explicit slot values: a term with s tails
/// consumes the last s entries of slot_values.
inline Element eval_core_term_at(const CoreTerm& term, const Element& x,
                                 const std::vector<Element>& slot_values) {
    const std::size_t m = slot_values.size(), s = term.tails.size();
    Element v = term.mono[0];
    for (std::size_t t = 1; t < term.mono.size(); ++t) v = v * x * term.mono[t];
    for (std::size_t t = 0; t < s; ++t)
        v = v * slot_values[m - s + t] * term.tails[t];
    return v;
}

inline Element eval_core_term(const CoreTerm& term, const std::vector<Element>& roots,
                              const Element& x) {
    std::vector<Element> slots;
    for (const auto& a : roots) slots.push_back(x - a);
    return eval_core_term_at(term, x, slots);
}

inline Element evaluate(const FactorChain& chain, const Element& x) {
    Element acc = chain.stage_remainders.at(0);
    for (const auto& term : chain.core) acc += eval_core_term(term, chain.roots, x);
    return acc;
}

inline FactorChain factor_chain(const Polynomial& r, const std::vector<Element>& roots) {
    if (roots.empty()) throw AlgebraError("factor_chain needs at least one root");
    const AlgebraSpec& alg = r.algebra();
    const std::size_t m = roots.size();

    FactorChain fc{&alg, roots, {}, {}, true, ""};
    QuotientChain first = divide_monic(r, roots[m - 1]);
    fc.stage_remainders.push_back(first.remainder);
    for (std::size_t i = 0; i < first.parts.size(); ++i)
        for (const auto& pt : first.parts[i].terms()) {
            CoreTerm t{std::vector<Element>(pt.factors.begin(), pt.factors.end() - 1),
                       {pt.factors[i + 1]}};
            detail::normalize_core(t);
            fc.core.push_back(std::move(t));
        }

    for (std::size_t stage = 1; stage < m; ++stage) {
        const Element& root = roots[m - 1 - stage];
        std::vector<CoreTerm> next;
        // group full-depth terms by their tail vector; divide each group's
        // x polynomial by the stage's factor (Example 10.3's split)
        std::vector<std::pair<std::vector<Element>, Polynomial>> groups;
        Element residual_sum(alg);
        for (const auto& term : fc.core) {
            if (term.tails.size() != stage) {
                next.push_back(term); // residual from an earlier stage
                continue;
            }
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const auto& g) { return g.first == term.tails; });
            if (it == groups.end()) {
                groups.emplace_back(term.tails, Polynomial::monomial(term.mono));
            } else {
                it->second = it->second + Polynomial::monomial(term.mono);
            }
        }
        for (auto& [tails, poly] : groups) {
            QuotientChain sub = divide_monic(poly, root);
            if (!sub.remainder.is_zero()) {
                fc.clean = false;
                fc.report += "stage " + std::to_string(stage) +
                             ": residual polynomial not divisible by its factor "
                             "(remainder " + to_string(sub.remainder) + "); ";
                CoreTerm res{{sub.remainder}, tails};
                next.push_back(std::move(res));
                residual_sum += sub.remainder;
            }
            for (std::size_t i = 0; i < sub.parts.size(); ++i)
                for (const auto& pt : sub.parts[i].terms()) {
                    CoreTerm t{std::vector<Element>(pt.factors.begin(), pt.factors.end() - 1),
                               {pt.factors[i + 1]}};
                    t.tails.insert(t.tails.end(), tails.begin(), tails.end());
                    detail::normalize_core(t);
                    next.push_back(std::move(t));
                }
        }
        fc.stage_remainders.push_back(residual_sum);
        fc.core = std::move(next);
    }
    return fc;
}

} // namespace ncpoly

#endif
