#ifndef NCPOLY_POLYNOMIAL_HPP
#define NCPOLY_POLYNOMIAL_HPP

#include "tensor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

namespace ncpoly {

/// Degree-graded polynomial: degree n stored as a rank-(n+1) tensor sum.
class Polynomial {
public:
    explicit Polynomial(const AlgebraSpec& a) : alg_(&a) {}

    static Polynomial constant(const Element& c) {
        Polynomial p(c.algebra());
        if (!c.is_zero()) {
            TensorSum t(c.algebra(), 1);
            t.add_term({c});
            p.comp_.emplace(0, std::move(t));
        }
        return p;
    }

    /// The identity polynomial x.
    static Polynomial variable(const AlgebraSpec& a) {
        Element one = basis_element(a, 0);
        return monomial({one, one});
    }

    /// a_0 x a_1 x ... x a_k as a single degree-k pure tensor.
    static Polynomial monomial(std::vector<Element> coeffs) {
        if (coeffs.empty()) throw AlgebraError("monomial needs at least one coefficient");
        const AlgebraSpec& a = coeffs[0].algebra();
        Polynomial p(a);
        std::size_t deg = coeffs.size() - 1;
        TensorSum t(a, deg + 1);
        t.add_term(std::move(coeffs));
        p.comp_.emplace(deg, std::move(t));
        return p;
    }

    const AlgebraSpec& algebra() const { return *alg_; }
    const std::map<std::size_t, TensorSum>& components() const { return comp_; }

    /// Formal degree of the stored representation (-1 as nullopt when no
    /// non-empty component remains).
    std::optional<std::size_t> formal_degree() const {
        for (auto it = comp_.rbegin(); it != comp_.rend(); ++it)
            if (!it->second.is_zero_rep()) return it->first;
        return std::nullopt;
    }

    const TensorSum* component(std::size_t deg) const {
        auto it = comp_.find(deg);
        if (it == comp_.end() || it->second.is_zero_rep()) return nullptr;
        return &it->second;
    }

    Element constant_term() const {
        const TensorSum* t = component(0);
        Element acc(*alg_);
        if (t)
            for (const auto& pt : t->terms()) acc += pt.factors[0];
        return acc;
    }

    void add_component(std::size_t deg, const TensorSum& t) {
        if (t.is_zero_rep()) return;
        auto it = comp_.find(deg);
        if (it == comp_.end())
            comp_.emplace(deg, t);
        else
            it->second = it->second + t;
    }

    void drop_component(std::size_t deg) { comp_.erase(deg); }

    Element evaluate(const Element& x) const {
        if (&x.algebra() != alg_) throw AlgebraError("algebra mismatch");
        Element acc(*alg_);
        for (const auto& [deg, t] : comp_) {
            std::vector<Element> args(deg, x);
            acc += apply_polylinear(t, args);
        }
        return acc;
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& r) {
        if (p.alg_ != r.alg_) throw AlgebraError("algebra mismatch");
        Polynomial s = p;
        for (const auto& [deg, t] : r.comp_) s.add_component(deg, t);
        return s;
    }

    friend Polynomial operator-(const Polynomial& p) {
        Polynomial s(*p.alg_);
        for (const auto& [deg, t] : p.comp_) s.add_component(deg, -t);
        return s;
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& r) { return p + (-r); }

    /// Polynomial product through the star splice of tensor components.
    /// Requires an associative algebra.
    friend Polynomial operator*(const Polynomial& p, const Polynomial& r) {
        if (p.alg_ != r.alg_) throw AlgebraError("algebra mismatch");
        if (!p.alg_->is_associative())
            throw AlgebraError("polynomial product requires an associative algebra");
        Polynomial s(*p.alg_);
        for (const auto& [n, pn] : p.comp_)
            for (const auto& [m, rm] : r.comp_)
                s.add_component(n + m, star(pn, rm));
        return s;
    }

private:
    const AlgebraSpec* alg_;
    std::map<std::size_t, TensorSum> comp_;
};

/// Post-compose a polynomial with a rank-2 tensor map:
/// evaluates to apply_linear(a, p(x)). Each pure tensor t_0 (x) ... (x) t_n
/// becomes (u t_0) (x) ... (x) (t_n v) per term u (x) v of a.
inline Polynomial map_compose(const TensorSum& a, const Polynomial& p) {
    if (a.rank() != 2) throw AlgebraError("map_compose requires a rank-2 tensor");
    Polynomial out(p.algebra());
    for (const auto& [deg, t] : p.components()) {
        TensorSum nt(p.algebra(), deg + 1);
        for (const auto& at : a.terms()) {
            const Element& u = at.factors[0];
            const Element& v = at.factors[1];
            for (const auto& pt : t.terms()) {
                std::vector<Element> f = pt.factors;
                if (f.size() == 1) {
                    f[0] = u * f[0] * v;
                } else {
                    f.front() = u * f.front();
                    f.back() = f.back() * v;
                }
                nt.add_term(std::move(f));
            }
        }
        out.add_component(deg, nt);
    }
    return out;
}

/// Symmetrized coefficient arrays, one per degree. Two polynomials are equal
/// as maps iff their canonical forms coincide (characteristic 0 polarization).
struct CanonicalForm {
    // per degree n: flat array of size dim^n * dim, index = tuple * dim + out
    std::map<std::size_t, std::vector<Rational>> arrays;

    friend bool operator==(const CanonicalForm& x, const CanonicalForm& y) {
        auto nonzero = [](const std::vector<Rational>& v) {
            return std::any_of(v.begin(), v.end(), [](const Rational& r) { return r != 0; });
        };
        for (const auto& [d, a] : x.arrays) {
            auto it = y.arrays.find(d);
            if (it == y.arrays.end()) {
                if (nonzero(a)) return false;
            } else if (a != it->second)
                return false;
        }
        for (const auto& [d, a] : y.arrays)
            if (!x.arrays.count(d) && nonzero(a)) return false;
        return true;
    }
};

inline constexpr std::size_t kDefaultDegreeCap = 6;

namespace detail {

/// Average an array indexed by (basis tuple of length n, trailing block)
/// over all position permutations of the tuple.
inline std::vector<Rational> symmetrize_array(std::vector<Rational> raw,
                                              std::size_t dim, std::size_t n,
                                              std::size_t block) {
    if (n < 2) return raw;
    std::size_t tuples = 1;
    for (std::size_t t = 0; t < n; ++t) tuples *= dim;
    std::vector<Rational> sym(raw.size(), Rational(0));
    std::vector<std::size_t> idx(n);
    Rational fact = 1;
    for (std::size_t t = 2; t <= n; ++t) fact *= Rational(t);
    Rational inv = Rational(1) / fact;
    for (std::size_t tup = 0; tup < tuples; ++tup) {
        std::size_t rem = tup;
        for (std::size_t t = n; t-- > 0;) {
            idx[t] = rem % dim;
            rem /= dim;
        }
        std::vector<Rational> acc(block, Rational(0));
        std::vector<std::size_t> pos(n);
        std::iota(pos.begin(), pos.end(), 0);
        do {
            std::size_t src = 0;
            for (std::size_t t = 0; t < n; ++t) src = src * dim + idx[pos[t]];
            for (std::size_t j = 0; j < block; ++j) acc[j] += raw[src * block + j];
        } while (std::next_permutation(pos.begin(), pos.end()));
        for (std::size_t j = 0; j < block; ++j) sym[tup * block + j] = acc[j] * inv;
    }
    return sym;
}

} // namespace detail

inline CanonicalForm canonical_form(const Polynomial& p,
                                    std::size_t degree_cap = kDefaultDegreeCap) {
    const AlgebraSpec& a = p.algebra();
    const std::size_t dim = a.dim();
    CanonicalForm cf;
    for (const auto& [n, t] : p.components()) {
        if (t.is_zero_rep()) continue;
        if (n > degree_cap) throw AlgebraError("canonical form degree cap exceeded");
        std::size_t tuples = 1;
        for (std::size_t s = 0; s < n; ++s) tuples *= dim;
        std::vector<Rational> raw(tuples * dim, Rational(0));
        std::vector<Element> args(n, Element(a));
        std::vector<std::size_t> idx(n, 0);
        for (std::size_t tup = 0; tup < tuples; ++tup) {
            std::size_t rem = tup;
            for (std::size_t s = n; s-- > 0;) {
                idx[s] = rem % dim;
                rem /= dim;
            }
            for (std::size_t s = 0; s < n; ++s) args[s] = basis_element(a, idx[s]);
            Element v = apply_polylinear(t, args);
            for (std::size_t j = 0; j < dim; ++j) raw[tup * dim + j] = v[j];
        }
        auto sym = detail::symmetrize_array(std::move(raw), dim, n, dim);
        auto it = cf.arrays.find(n);
        if (it == cf.arrays.end())
            cf.arrays.emplace(n, std::move(sym));
        else
            for (std::size_t s = 0; s < sym.size(); ++s) it->second[s] += sym[s];
    }
    return cf;
}

inline bool equals_as_map(const Polynomial& p, const Polynomial& r,
                          std::size_t degree_cap = kDefaultDegreeCap) {
    return canonical_form(p, degree_cap) == canonical_form(r, degree_cap);
}

inline bool is_zero_map(const Polynomial& p,
                        std::size_t degree_cap = kDefaultDegreeCap) {
    return equals_as_map(p, Polynomial(p.algebra()), degree_cap);
}

/// (x - x1)(x - x2) and (x - x2)(x - x1); they differ as maps whenever
/// x1 x2 != x2 x1, witnessed at x = x1 + x2.
inline std::pair<Polynomial, Polynomial> given_roots_pair(const Element& x1,
                                                          const Element& x2) {
    Polynomial x = Polynomial::variable(x1.algebra());
    Polynomial f1 = x - Polynomial::constant(x1);
    Polynomial f2 = x - Polynomial::constant(x2);
    return {f1 * f2, f2 * f1};
}

/// Find rank-2 tensors a_s with sum_s a_s o g_s(x) == f(x) as maps, by
/// solving the exact linear system in the dim^2 coefficients of each a_s.
/// Returns the tensors, or nullopt when the system is infeasible.
inline std::optional<std::vector<TensorSum>> solve_map_combination(
    const std::vector<Polynomial>& gs, const Polynomial& f,
    std::size_t degree_cap = kDefaultDegreeCap) {
    if (gs.empty()) throw AlgebraError("need at least one polynomial");
    const AlgebraSpec& a = f.algebra();
    const std::size_t dim = a.dim();

    // union of degrees appearing anywhere, with array sizes
    std::map<std::size_t, std::size_t> degs;
    auto note = [&](const CanonicalForm& cf) {
        for (const auto& [d, arr] : cf.arrays) degs[d] = arr.size();
    };
    CanonicalForm target = canonical_form(f, degree_cap);
    note(target);
    std::vector<CanonicalForm> basis_cols;
    for (const auto& g : gs)
        for (std::size_t p = 0; p < dim; ++p)
            for (std::size_t q = 0; q < dim; ++q) {
                TensorSum e(a, 2);
                e.add_term({basis_element(a, p), basis_element(a, q)});
                CanonicalForm cf = canonical_form(map_compose(e, g), degree_cap);
                note(cf);
                basis_cols.push_back(std::move(cf));
            }

    auto flatten = [&](const CanonicalForm& cf) {
        RatVec v;
        for (const auto& [d, size] : degs) {
            auto it = cf.arrays.find(d);
            if (it == cf.arrays.end())
                v.insert(v.end(), size, Rational(0));
            else
                v.insert(v.end(), it->second.begin(), it->second.end());
        }
        return v;
    };

    RatVec rhs = flatten(target);
    const std::size_t rows = rhs.size(), cols = basis_cols.size();
    RatMat sys(rows, RatVec(cols, Rational(0)));
    for (std::size_t c = 0; c < cols; ++c) {
        RatVec col = flatten(basis_cols[c]);
        for (std::size_t r = 0; r < rows; ++r) sys[r][c] = col[r];
    }
    auto sol = solve_linear_system(std::move(sys), rhs);
    if (sol.kind == LinearSolution::Kind::none) return std::nullopt;

    std::vector<TensorSum> out;
    std::size_t c = 0;
    for (std::size_t s = 0; s < gs.size(); ++s) {
        TensorSum t(a, 2);
        for (std::size_t p = 0; p < dim; ++p)
            for (std::size_t q = 0; q < dim; ++q, ++c) {
                const Rational& coeff = sol.particular[c];
                if (coeff == 0) continue;
                t.add_term({coeff * basis_element(a, p), basis_element(a, q)});
            }
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace ncpoly

#endif
