#ifndef NCPOLY_TEST_HELPERS_HPP
#define NCPOLY_TEST_HELPERS_HPP

#include "ncpoly/ncpoly.hpp"

#include <random>

namespace testutil {

using ncpoly::AlgebraSpec;
using ncpoly::Element;
using ncpoly::Polynomial;
using ncpoly::Rational;
using ncpoly::TensorSum;

inline Element random_element(const AlgebraSpec& alg, std::mt19937& rng, int lo = -3,
                              int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Element e(alg);
    for (std::size_t t = 0; t < alg.dim(); ++t) e[t] = d(rng);
    return e;
}

inline Element random_nonzero(const AlgebraSpec& alg, std::mt19937& rng, int lo = -3,
                              int hi = 3) {
    for (;;) {
        Element e = random_element(alg, rng, lo, hi);
        if (!e.is_zero()) return e;
    }
}

inline TensorSum random_tensor(const AlgebraSpec& alg, std::mt19937& rng,
                               std::size_t rank, std::size_t max_terms = 3) {
    std::uniform_int_distribution<std::size_t> nd(1, max_terms);
    TensorSum t(alg, rank);
    std::size_t n = nd(rng);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<Element> f;
        for (std::size_t r = 0; r < rank; ++r) f.push_back(random_element(alg, rng));
        t.add_term(std::move(f));
    }
    return t;
}

/// Random polynomial: degree <= max_deg, <= 3 pure tensors per degree,
/// coordinates in [-3, 3].
inline Polynomial random_polynomial(const AlgebraSpec& alg, std::mt19937& rng,
                                    std::size_t max_deg = 4) {
    std::uniform_int_distribution<std::size_t> dd(0, max_deg);
    Polynomial p(alg);
    std::size_t top = dd(rng);
    for (std::size_t deg = 0; deg <= top; ++deg)
        p.add_component(deg, random_tensor(alg, rng, deg + 1));
    return p;
}

} // namespace testutil

#endif
