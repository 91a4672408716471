#ifndef NCPOLY_ALGEBRA_HPP
#define NCPOLY_ALGEBRA_HPP

#include "rational.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace ncpoly {

/// Finite dimensional algebra given by a basis and a structure constant
/// table: e_i e_j = C_{ij}^k e_k. The first basis vector is a two-sided unit.
class AlgebraSpec {
public:
    AlgebraSpec(std::string name, std::vector<std::string> basis_names,
                std::vector<Rational> table)
        : name_(std::move(name)),
          basis_names_(std::move(basis_names)),
          table_(std::move(table)),
          dim_(basis_names_.size()) {
        if (table_.size() != dim_ * dim_ * dim_)
            throw AlgebraError("structure constant table has wrong size");
        associative_ = check_associative();
    }

    std::size_t dim() const { return dim_; }
    bool is_associative() const { return associative_; }
    const std::string& name() const { return name_; }
    const std::string& basis_name(std::size_t i) const { return basis_names_[i]; }

    /// C_{ij}^k
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * dim_ + j) * dim_ + k];
    }

    int basis_index(const std::string& s) const {
        for (std::size_t t = 0; t < dim_; ++t)
            if (basis_names_[t] == s)
                return static_cast<int>(t);
        return -1;
    }

private:
    bool check_associative() const {
        // (e_i e_j) e_k vs e_i (e_j e_k) on all basis triples
        auto mul_basis = [&](const std::vector<Rational>& x, std::size_t j) {
            std::vector<Rational> out(dim_);
            for (std::size_t i = 0; i < dim_; ++i) {
                if (x[i] == 0) continue;
                for (std::size_t k = 0; k < dim_; ++k) out[k] += x[i] * c(i, j, k);
            }
            return out;
        };
        auto basis_mul = [&](std::size_t i, const std::vector<Rational>& y) {
            std::vector<Rational> out(dim_);
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                for (std::size_t k = 0; k < dim_; ++k) out[k] += y[j] * c(i, j, k);
            }
            return out;
        };
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                std::vector<Rational> ij(dim_);
                for (std::size_t k = 0; k < dim_; ++k) ij[k] = c(i, j, k);
                for (std::size_t k = 0; k < dim_; ++k) {
                    std::vector<Rational> jk(dim_);
                    for (std::size_t t = 0; t < dim_; ++t) jk[t] = c(j, k, t);
                    if (mul_basis(ij, k) != basis_mul(i, jk)) return false;
                }
            }
        return true;
    }

    std::string name_;
    std::vector<std::string> basis_names_;
    std::vector<Rational> table_; // dim^3, C_{ij}^k at ((i*dim)+j)*dim+k
    std::size_t dim_;
    bool associative_ = true;
};

/// An A-number: coordinate vector over the algebra's basis.
class Element {
public:
    Element() : alg_(nullptr) {}
    explicit Element(const AlgebraSpec& a) : alg_(&a), co_(a.dim()) {}
    Element(const AlgebraSpec& a, std::vector<Rational> co)
        : alg_(&a), co_(std::move(co)) {
        if (co_.size() != a.dim())
            throw AlgebraError("coordinate count does not match algebra dimension");
    }

    const AlgebraSpec& algebra() const {
        if (!alg_) throw AlgebraError("element has no algebra");
        return *alg_;
    }
    const std::vector<Rational>& coords() const { return co_; }
    const Rational& operator[](std::size_t i) const { return co_[i]; }
    Rational& operator[](std::size_t i) { return co_[i]; }

    bool is_zero() const {
        for (const auto& c : co_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const Element& x, const Element& y) {
        x.check_same(y);
        return x.co_ == y.co_;
    }
    friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

    friend Element operator+(const Element& x, const Element& y) {
        x.check_same(y);
        Element r(*x.alg_);
        for (std::size_t t = 0; t < x.co_.size(); ++t) r.co_[t] = x.co_[t] + y.co_[t];
        return r;
    }
    friend Element operator-(const Element& x, const Element& y) {
        x.check_same(y);
        Element r(*x.alg_);
        for (std::size_t t = 0; t < x.co_.size(); ++t) r.co_[t] = x.co_[t] - y.co_[t];
        return r;
    }
    friend Element operator-(const Element& x) {
        Element r(*x.alg_);
        for (std::size_t t = 0; t < x.co_.size(); ++t) r.co_[t] = -x.co_[t];
        return r;
    }
    friend Element operator*(const Rational& d, const Element& x) {
        Element r(*x.alg_);
        for (std::size_t t = 0; t < x.co_.size(); ++t) r.co_[t] = d * x.co_[t];
        return r;
    }
    /// (xy)^k = x^i y^j C_{ij}^k
    friend Element operator*(const Element& x, const Element& y) {
        x.check_same(y);
        const AlgebraSpec& a = *x.alg_;
        const std::size_t n = a.dim();
        Element r(a);
        for (std::size_t i = 0; i < n; ++i) {
            if (x.co_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y.co_[j] == 0) continue;
                Rational p = x.co_[i] * y.co_[j];
                for (std::size_t k = 0; k < n; ++k) {
                    const Rational& c = a.c(i, j, k);
                    if (c != 0) r.co_[k] += p * c;
                }
            }
        }
        return r;
    }

    Element& operator+=(const Element& y) { return *this = *this + y; }
    Element& operator-=(const Element& y) { return *this = *this - y; }

private:
    void check_same(const Element& y) const {
        if (alg_ != y.alg_)
            throw AlgebraError("elements belong to different algebras");
    }

    const AlgebraSpec* alg_;
    std::vector<Rational> co_;
};

inline Element basis_element(const AlgebraSpec& a, std::size_t t) {
    Element e(a);
    e[t] = 1;
    return e;
}

inline Element scalar_element(const AlgebraSpec& a, const Rational& d) {
    Element e(a);
    e[0] = d;
    return e;
}

inline Element conj(const Element& x) {
    Element r = -x;
    r[0] = x[0];
    return r;
}

inline Rational re(const Element& x) { return x[0]; }

inline Element im(const Element& x) {
    Element r = x;
    r[0] = 0;
    return r;
}

inline Rational norm_sq(const Element& x) {
    Rational s = 0;
    for (const auto& c : x.coords()) s += c * c;
    return s;
}

/// Inverse in a composition algebra: conj(x) / |x|^2.
inline Element inverse(const Element& x) {
    Rational n = norm_sq(x);
    if (n == 0) throw AlgebraError("inverse of zero element");
    return Rational(1) / n * conj(x);
}

namespace detail {

// Cayley-Dickson product on raw coordinate halves:
// (a,b)(c,d) = (ac - conj(d) b, da + b conj(c))
inline std::vector<Rational> cd_mul(std::size_t dim, const std::vector<Rational>& x,
                                    const std::vector<Rational>& y) {
    if (dim == 1) return {x[0] * y[0]};
    const std::size_t h = dim / 2;
    auto half = [&](const std::vector<Rational>& v, bool hi) {
        return std::vector<Rational>(v.begin() + (hi ? h : 0), v.begin() + (hi ? dim : h));
    };
    auto cj = [](std::vector<Rational> v) {
        for (std::size_t t = 1; t < v.size(); ++t) v[t] = -v[t];
        return v;
    };
    auto a = half(x, false), b = half(x, true);
    auto c = half(y, false), d = half(y, true);
    auto p = cd_mul(h, a, c), q = cd_mul(h, cj(d), b);
    auto r = cd_mul(h, d, a), s = cd_mul(h, b, cj(c));
    std::vector<Rational> out(dim);
    for (std::size_t t = 0; t < h; ++t) {
        out[t] = p[t] - q[t];
        out[h + t] = r[t] + s[t];
    }
    return out;
}

inline AlgebraSpec make_cd_algebra(std::string name, std::vector<std::string> names) {
    const std::size_t n = names.size();
    std::vector<Rational> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> ei(n), ej(n);
            ei[i] = 1;
            ej[j] = 1;
            auto prod = cd_mul(n, ei, ej);
            for (std::size_t k = 0; k < n; ++k)
                table[(i * n + j) * n + k] = prod[k];
        }
    return AlgebraSpec(std::move(name), std::move(names), std::move(table));
}

} // namespace detail

/// Quaternion algebra H: basis (1, i, j, k), i^2 = j^2 = k^2 = -1, ij = k.
inline const AlgebraSpec& quaternions() {
    static const AlgebraSpec h = detail::make_cd_algebra("H", {"1", "i", "j", "k"});
    return h;
}

/// Octonion algebra O via Cayley-Dickson doubling of H with l = (0, 1).
/// The resulting table satisfies i(jl) = -kl.
inline const AlgebraSpec& octonions() {
    static const AlgebraSpec o = detail::make_cd_algebra(
        "O", {"1", "i", "j", "k", "l", "il", "jl", "kl"});
    return o;
}

inline const AlgebraSpec& algebra_by_name(const std::string& s) {
    if (s == "H") return quaternions();
    if (s == "O") return octonions();
    throw AlgebraError("unknown algebra: " + s);
}

/// Inexact carrier for square roots, which are generally irrational.
struct FloatElement {
    const AlgebraSpec* alg = nullptr;
    std::vector<double> co;

    static constexpr double tolerance = 1e-10;
};

inline FloatElement to_float(const Element& x) {
    FloatElement f;
    f.alg = &x.algebra();
    for (const auto& c : x.coords())
        f.co.push_back(static_cast<double>(c));
    return f;
}

inline FloatElement fmul(const FloatElement& x, const FloatElement& y) {
    const AlgebraSpec& a = *x.alg;
    const std::size_t n = a.dim();
    FloatElement r;
    r.alg = x.alg;
    r.co.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double p = x.co[i] * y.co[j];
            if (p == 0.0) continue;
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = a.c(i, j, k);
                if (c != 0) r.co[k] += p * static_cast<double>(c);
            }
        }
    return r;
}

/// Result of the quaternion square root: either a +/- pair, a double root
/// at zero, or the sphere of imaginary roots of a negative real.
struct SqrtResult {
    enum class Kind { pair, zero_double, sphere };
    Kind kind;
    std::vector<FloatElement> roots; // kind == pair: the two roots x, -x
    double sphere_radius = 0.0;      // kind == sphere: |x| over Im H
};

/// Square roots in H. Case split: nonzero real part of the root gives a
/// +/- pair by the closed form x0 = sqrt((|a| + Re a)/2), w = Im a/(2 x0);
/// a = 0 gives the root 0 with multiplicity 2; a real negative gives the
/// sphere {x in Im H : |x| = sqrt(-a)}.
inline SqrtResult sqrt(const Element& a) {
    if (&a.algebra() != &quaternions())
        throw AlgebraError("sqrt is defined over the quaternions only");
    SqrtResult res;
    if (a.is_zero()) {
        res.kind = SqrtResult::Kind::zero_double;
        res.roots.push_back(to_float(a));
        return res;
    }
    if (im(a).is_zero() && re(a) < 0) {
        res.kind = SqrtResult::Kind::sphere;
        res.sphere_radius = std::sqrt(static_cast<double>(-re(a)));
        return res;
    }
    res.kind = SqrtResult::Kind::pair;
    double mod = std::sqrt(static_cast<double>(norm_sq(a)));
    double x0 = std::sqrt((mod + static_cast<double>(re(a))) / 2);
    FloatElement r;
    r.alg = &a.algebra();
    r.co = {x0, 0, 0, 0};
    for (std::size_t t = 1; t < 4; ++t)
        r.co[t] = static_cast<double>(a[t]) / (2 * x0);
    FloatElement m = r;
    for (auto& c : m.co) c = -c;
    res.roots = {r, m};
    return res;
}

inline std::string to_string(const Element& x) {
    const AlgebraSpec& a = x.algebra();
    std::string out;
    for (std::size_t t = 0; t < a.dim(); ++t) {
        const Rational& c = x[t];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool scalar_slot = (t == 0);
        if (mag != 1 || scalar_slot) {
            out += to_string(mag);
            if (!scalar_slot) out += ' ';
        }
        if (!scalar_slot) out += a.basis_name(t);
    }
    if (out.empty()) out = "0";
    return out;
}

} // namespace ncpoly

#endif
