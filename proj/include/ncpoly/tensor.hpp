#ifndef NCPOLY_TENSOR_HPP
#define NCPOLY_TENSOR_HPP

#include "algebra.hpp"
#include "linalg.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace ncpoly {

/// A single tensor product a_0 (x) ... (x) a_{r-1}.
struct PureTensor {
    std::vector<Element> factors;

    std::size_t rank() const { return factors.size(); }
    const AlgebraSpec& algebra() const { return factors.at(0).algebra(); }
};

/// A sum of pure tensors of uniform rank. The empty term list is the zero
/// tensor. No canonical form: the representation is intentionally non-unique.
class TensorSum {
public:
    TensorSum(const AlgebraSpec& a, std::size_t rank) : alg_(&a), rank_(rank) {}

    static TensorSum from_terms(const AlgebraSpec& a, std::vector<PureTensor> terms) {
        if (terms.empty()) throw AlgebraError("rank unknown for empty term list");
        TensorSum t(a, terms[0].rank());
        for (auto& pt : terms) t.add_term(std::move(pt));
        return t;
    }

    const AlgebraSpec& algebra() const { return *alg_; }
    std::size_t rank() const { return rank_; }
    const std::vector<PureTensor>& terms() const { return terms_; }
    bool is_zero_rep() const { return terms_.empty(); }

    void add_term(PureTensor pt) {
        if (pt.rank() != rank_)
            throw AlgebraError("pure tensor rank mismatch");
        // drop terms with a zero factor
        for (const auto& f : pt.factors)
            if (f.is_zero()) return;
        terms_.push_back(std::move(pt));
    }

    void add_term(std::vector<Element> factors) { add_term(PureTensor{std::move(factors)}); }

    friend TensorSum operator+(const TensorSum& x, const TensorSum& y) {
        if (x.rank_ != y.rank_ || x.alg_ != y.alg_)
            throw AlgebraError("tensor sum mismatch");
        TensorSum r = x;
        for (const auto& t : y.terms_) r.add_term(t);
        return r;
    }

    friend TensorSum operator-(const TensorSum& x) {
        TensorSum r(*x.alg_, x.rank_);
        for (auto t : x.terms_) {
            t.factors[0] = -t.factors[0];
            r.add_term(std::move(t));
        }
        return r;
    }

    friend TensorSum operator-(const TensorSum& x, const TensorSum& y) { return x + (-y); }

private:
    const AlgebraSpec* alg_;
    std::size_t rank_;
    std::vector<PureTensor> terms_;
};

inline TensorSum pure(std::vector<Element> factors) {
    const AlgebraSpec& a = factors.at(0).algebra();
    TensorSum t(a, factors.size());
    t.add_term(std::move(factors));
    return t;
}

/// Identity map 1 (x) 1.
inline TensorSum identity_tensor(const AlgebraSpec& a) {
    Element one = basis_element(a, 0);
    return pure({one, one});
}

/// (a (x) b) o x = a x b, summed over terms.
inline Element apply_linear(const TensorSum& t, const Element& x) {
    if (t.rank() != 2) throw AlgebraError("apply_linear requires a rank-2 tensor");
    Element acc(t.algebra());
    for (const auto& pt : t.terms())
        acc += pt.factors[0] * x * pt.factors[1];
    return acc;
}

/// (a_0 (x) ... (x) a_n, sigma) o (f_1, ..., f_n)
///   = a_0 f_{sigma(1)} a_1 ... a_{n-1} f_{sigma(n)} a_n.
/// The product is evaluated strictly left to right.
inline Element apply_polylinear(const TensorSum& t, const std::vector<Element>& args,
                                const std::vector<std::size_t>& perm) {
    const std::size_t n = t.rank() - 1;
    if (args.size() != n) throw AlgebraError("argument count must equal rank - 1");
    if (perm.size() != n) throw AlgebraError("permutation size must equal rank - 1");
    Element acc(t.algebra());
    for (const auto& pt : t.terms()) {
        Element v = pt.factors[0];
        for (std::size_t s = 0; s < n; ++s)
            v = v * args[perm[s]] * pt.factors[s + 1];
        acc += v;
    }
    return acc;
}

inline Element apply_polylinear(const TensorSum& t, const std::vector<Element>& args) {
    std::vector<std::size_t> id(args.size());
    for (std::size_t s = 0; s < id.size(); ++s) id[s] = s;
    return apply_polylinear(t, args, id);
}

/// Composition of rank-2 tensors as linear maps:
/// (p0 (x) p1) o (q0 (x) q1) = (p0 q0) (x) (q1 p1). Associative algebras only.
inline TensorSum compose_rank2(const TensorSum& p, const TensorSum& q) {
    if (p.rank() != 2 || q.rank() != 2)
        throw AlgebraError("compose_rank2 requires rank-2 tensors");
    if (!p.algebra().is_associative())
        throw AlgebraError("rank-2 composition requires an associative algebra");
    TensorSum r(p.algebra(), 2);
    for (const auto& pt : p.terms())
        for (const auto& qt : q.terms())
            r.add_term({pt.factors[0] * qt.factors[0], qt.factors[1] * pt.factors[1]});
    return r;
}

/// Star product: splice the middle factors,
/// (a_1 (x) ... (x) a_n) * (b_1 (x) ... (x) b_m)
///   = a_1 (x) ... (x) a_{n-1} (x) a_n b_1 (x) b_2 (x) ... (x) b_m.
inline TensorSum star(const TensorSum& a, const TensorSum& b) {
    if (&a.algebra() != &b.algebra()) throw AlgebraError("algebra mismatch");
    TensorSum r(a.algebra(), a.rank() + b.rank() - 1);
    for (const auto& at : a.terms())
        for (const auto& bt : b.terms()) {
            std::vector<Element> f(at.factors.begin(), at.factors.end() - 1);
            f.push_back(at.factors.back() * bt.factors.front());
            f.insert(f.end(), bt.factors.begin() + 1, bt.factors.end());
            r.add_term(std::move(f));
        }
    return r;
}

/// The matrix a_i^j of a rank-2 tensor acting on coordinates:
/// column i is coords(a e_i b) summed over terms.
struct MapMatrix {
    const AlgebraSpec* alg;
    RatMat entries; // entries[j][i], row j = output coordinate
};

inline MapMatrix matrix_of(const TensorSum& t) {
    if (t.rank() != 2) throw AlgebraError("matrix_of requires a rank-2 tensor");
    const AlgebraSpec& a = t.algebra();
    const std::size_t n = a.dim();
    MapMatrix m{&a, RatMat(n, RatVec(n, Rational(0)))};
    for (std::size_t i = 0; i < n; ++i) {
        Element col = apply_linear(t, basis_element(a, i));
        for (std::size_t j = 0; j < n; ++j) m.entries[j][i] = col[j];
    }
    return m;
}

/// Recover a rank-2 tensor c^{pq} e_p (x) e_q acting as the given matrix.
/// Solves the dim^2 x dim^2 linear system in the coefficients c^{pq}.
inline TensorSum tensor_of(const MapMatrix& m) {
    const AlgebraSpec& a = *m.alg;
    const std::size_t n = a.dim();
    const std::size_t nn = n * n;
    RatMat sys(nn, RatVec(nn, Rational(0)));
    RatVec rhs(nn);
    // row (j, i): sum_{p,q} c^{pq} (e_p e_i e_q)^j = m[j][i]
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t i = 0; i < n; ++i) {
                Element v = basis_element(a, p) * basis_element(a, i) * basis_element(a, q);
                for (std::size_t j = 0; j < n; ++j)
                    sys[j * n + i][p * n + q] = v[j];
            }
        }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) rhs[j * n + i] = m.entries[j][i];
    auto sol = solve_linear_system(std::move(sys), rhs);
    if (sol.kind == LinearSolution::Kind::none)
        throw AlgebraError("map is not representable by a rank-2 tensor");
    TensorSum t(a, 2);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Rational& c = sol.particular[p * n + q];
            if (c == 0) continue;
            t.add_term({c * basis_element(a, p), basis_element(a, q)});
        }
    return t;
}

inline Rational det(const TensorSum& t) { return det(matrix_of(t).entries); }

inline bool is_nonsingular(const TensorSum& t) { return det(t) != 0; }

/// Tensor inverse: tensor_of(matrix_of(t)^{-1}).
inline TensorSum inverse_tensor(const TensorSum& t) {
    MapMatrix m = matrix_of(t);
    MapMatrix inv{m.alg, RatMat()};
    try {
        inv.entries = invert(m.entries);
    } catch (const AlgebraError&) {
        throw AlgebraError("singular tensor has no inverse");
    }
    return tensor_of(inv);
}

/// Classified solution set of a o x = b.
struct SolutionSet {
    enum class Kind { unique, none, affine };
    Kind kind;
    Element particular;          // valid unless kind == none
    std::vector<Element> kernel_basis;
};

inline SolutionSet solve(const TensorSum& t, const Element& b) {
    const AlgebraSpec& a = t.algebra();
    MapMatrix m = matrix_of(t);
    RatVec rhs(b.coords());
    auto lin = solve_linear_system(m.entries, rhs);
    SolutionSet s{SolutionSet::Kind::none, Element(a), {}};
    if (lin.kind == LinearSolution::Kind::none) return s;
    s.kind = lin.kind == LinearSolution::Kind::unique ? SolutionSet::Kind::unique
                                                      : SolutionSet::Kind::affine;
    s.particular = Element(a, lin.particular);
    for (auto& v : lin.kernel) s.kernel_basis.emplace_back(a, std::move(v));
    return s;
}

} // namespace ncpoly

#endif
