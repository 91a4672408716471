#ifndef NCPOLY_NONASSOC_HPP
#define NCPOLY_NONASSOC_HPP

#include "algebra.hpp"
#include "polynomial.hpp" // detail::symmetrize_array

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ncpoly {

/// Multiplication-order tree. Leaves are the variable x, a constant, or a
/// divisor-value hole; internal nodes multiply their children in fixed
/// order. The tree shape is the evaluation order, never flattened.
struct BracketTree {
    enum class Kind { var, constant, slot, mul };
    Kind kind;
    Element value;                          // kind == constant
    std::size_t slot = 0;                   // kind == slot
    std::shared_ptr<const BracketTree> left, right; // kind == mul
};

using BTree = std::shared_ptr<const BracketTree>;

inline BTree bt_var() {
    auto n = std::make_shared<BracketTree>();
    n->kind = BracketTree::Kind::var;
    return n;
}
inline BTree bt_const(Element e) {
    auto n = std::make_shared<BracketTree>();
    n->kind = BracketTree::Kind::constant;
    n->value = std::move(e);
    return n;
}
inline BTree bt_slot(std::size_t idx) {
    auto n = std::make_shared<BracketTree>();
    n->kind = BracketTree::Kind::slot;
    n->slot = idx;
    return n;
}
inline BTree bt_mul(BTree l, BTree r) {
    auto n = std::make_shared<BracketTree>();
    n->kind = BracketTree::Kind::mul;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

inline std::size_t var_count(const BTree& t) {
    switch (t->kind) {
        case BracketTree::Kind::var: return 1;
        case BracketTree::Kind::mul: return var_count(t->left) + var_count(t->right);
        default: return 0;
    }
}

inline std::uint32_t slot_mask(const BTree& t) {
    switch (t->kind) {
        case BracketTree::Kind::slot: return 1u << t->slot;
        case BracketTree::Kind::mul: return slot_mask(t->left) | slot_mask(t->right);
        default: return 0;
    }
}

inline bool btree_equal(const BTree& a, const BTree& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case BracketTree::Kind::var: return true;
        case BracketTree::Kind::slot: return a->slot == b->slot;
        case BracketTree::Kind::constant: return a->value == b->value;
        case BracketTree::Kind::mul:
            return btree_equal(a->left, b->left) && btree_equal(a->right, b->right);
    }
    return false;
}

namespace detail {

inline Element btree_eval_seq(const BTree& t, const std::vector<Element>& vars,
                              std::size_t& var_pos,
                              const std::vector<Element>& slot_values,
                              const AlgebraSpec& a) {
    switch (t->kind) {
        case BracketTree::Kind::var:
            return vars.at(var_pos++);
        case BracketTree::Kind::constant:
            return t->value;
        case BracketTree::Kind::slot:
            if (t->slot >= slot_values.size())
                throw AlgebraError("missing slot value");
            return slot_values[t->slot];
        case BracketTree::Kind::mul: {
            Element l = btree_eval_seq(t->left, vars, var_pos, slot_values, a);
            Element r = btree_eval_seq(t->right, vars, var_pos, slot_values, a);
            return l * r;
        }
    }
    throw AlgebraError("bad tree node");
}

} // namespace detail

/// Evaluate respecting the tree shape exactly; every Var leaf takes x.
inline Element btree_eval(const BTree& t, const Element& x,
                          const std::vector<Element>& slot_values = {}) {
    std::vector<Element> vars(var_count(t), x);
    std::size_t pos = 0;
    return detail::btree_eval_seq(t, vars, pos, slot_values, x.algebra());
}

/// Evaluate with per-leaf variable assignments in left-to-right leaf order.
inline Element btree_eval_multi(const BTree& t, const std::vector<Element>& vars,
                                const std::vector<Element>& slot_values,
                                const AlgebraSpec& a) {
    std::size_t pos = 0;
    return detail::btree_eval_seq(t, vars, pos, slot_values, a);
}

namespace detail {

/// Scale every Const leaf so its first non-zero coordinate is 1, folding the
/// scale into `scale`. Terms differing only by constant scaling then merge
/// structurally (so e.g. (x)(-k) cancels against (x)(k)). A zero Const leaf
/// zeroes the scale.
inline BTree normalize_tree(const BTree& t, Rational& scale) {
    switch (t->kind) {
        case BracketTree::Kind::constant: {
            const auto& co = t->value.coords();
            std::size_t p = 0;
            while (p < co.size() && co[p] == 0) ++p;
            if (p == co.size()) {
                scale = 0;
                return t;
            }
            if (co[p] == 1) return t;
            scale *= co[p];
            return bt_const((Rational(1) / co[p]) * t->value);
        }
        case BracketTree::Kind::mul:
            return bt_mul(normalize_tree(t->left, scale), normalize_tree(t->right, scale));
        default:
            return t;
    }
}

} // namespace detail

/// One signed term of a bracketed polynomial or chain.
struct BracketTerm {
    Rational coeff;
    BTree tree;
};

/// Sum of bracketed terms with no Slot leaves.
class BracketPolynomial {
public:
    explicit BracketPolynomial(const AlgebraSpec& a) : alg_(&a) {}

    const AlgebraSpec& algebra() const { return *alg_; }
    const std::vector<BracketTerm>& terms() const { return terms_; }

    void add_term(Rational coeff, BTree tree) {
        if (coeff == 0) return;
        tree = detail::normalize_tree(tree, coeff);
        if (coeff == 0) return;
        for (auto& t : terms_) {
            if (btree_equal(t.tree, tree)) {
                t.coeff += coeff;
                if (t.coeff == 0)
                    terms_.erase(terms_.begin() + (&t - terms_.data()));
                return;
            }
        }
        terms_.push_back({std::move(coeff), std::move(tree)});
    }

    friend BracketPolynomial operator+(const BracketPolynomial& p, const BracketPolynomial& r) {
        BracketPolynomial s = p;
        for (const auto& t : r.terms_) s.add_term(t.coeff, t.tree);
        return s;
    }

    friend BracketPolynomial operator-(const BracketPolynomial& p) {
        BracketPolynomial s(*p.alg_);
        for (const auto& t : p.terms_) s.add_term(-t.coeff, t.tree);
        return s;
    }

    friend BracketPolynomial operator-(const BracketPolynomial& p, const BracketPolynomial& r) {
        return p + (-r);
    }

    Element evaluate(const Element& x) const {
        Element acc(*alg_);
        for (const auto& t : terms_) acc += t.coeff * btree_eval(t.tree, x);
        return acc;
    }

    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& t : terms_) d = std::max(d, var_count(t.tree));
        return d;
    }

private:
    const AlgebraSpec* alg_;
    std::vector<BracketTerm> terms_;
};

namespace detail {

inline bool is_identity_const(const BTree& t) {
    if (t->kind != BracketTree::Kind::constant) return false;
    const auto& co = t->value.coords();
    if (co.empty() || co[0] != 1) return false;
    for (std::size_t s = 1; s < co.size(); ++s)
        if (co[s] != 0) return false;
    return true;
}

} // namespace detail

/// Product of two bracket trees: constants fold together, the identity is
/// transparent, anything else becomes a mul node preserving order.
inline BTree bracket_product(const BTree& a, const BTree& b, const AlgebraSpec&) {
    if (a->kind == BracketTree::Kind::constant && b->kind == BracketTree::Kind::constant)
        return bt_const(a->value * b->value);
    if (detail::is_identity_const(a)) return b;
    if (detail::is_identity_const(b)) return a;
    return bt_mul(a, b);
}

/// Division chain in the bracketed setting: remainder plus terms carrying
/// exactly one Slot(0) leaf for the divisor value.
struct BracketChain {
    const AlgebraSpec* alg;
    Element remainder;
    std::vector<BracketTerm> parts;

    Element apply_at(const Element& x, const Element& slot_value) const {
        Element acc = remainder;
        for (const auto& t : parts)
            acc += t.coeff * btree_eval(t.tree, x, {slot_value});
        return acc;
    }
};

namespace detail {

/// Replace the rightmost Var leaf (left-to-right leaf order) by Slot(idx).
inline BTree replace_rightmost_var(const BTree& t, std::size_t slot_idx, bool& found) {
    switch (t->kind) {
        case BracketTree::Kind::var:
            found = true;
            return bt_slot(slot_idx);
        case BracketTree::Kind::mul: {
            bool f = false;
            BTree r = replace_rightmost_var(t->right, slot_idx, f);
            if (f) {
                found = true;
                return bt_mul(t->left, r);
            }
            BTree l = replace_rightmost_var(t->left, slot_idx, f);
            if (f) {
                found = true;
                return bt_mul(l, t->right);
            }
            return t;
        }
        default:
            return t;
    }
}

inline BTree substitute_slot(const BTree& t, std::size_t idx, const BTree& repl) {
    switch (t->kind) {
        case BracketTree::Kind::slot:
            return t->slot == idx ? repl : t;
        case BracketTree::Kind::mul:
            return bt_mul(substitute_slot(t->left, idx, repl),
                          substitute_slot(t->right, idx, repl));
        default:
            return t;
    }
}

} // namespace detail

/// Bracketed division by x - a: peel the rightmost Var leaf of every
/// top-degree term into the divisor slot; the x branch cancels that degree
/// exactly, the a branch folds the constant into the tree one degree down.
inline BracketChain bdivide_monic(const BracketPolynomial& r, const Element& a) {
    const AlgebraSpec& alg = r.algebra();
    BracketChain chain{&alg, Element(alg), {}};

    BracketPolynomial work = r;
    while (true) {
        std::size_t d = work.degree();
        if (d == 0) break;
        BracketPolynomial next(alg);
        for (const auto& term : work.terms()) {
            if (var_count(term.tree) != d) {
                next.add_term(term.coeff, term.tree);
                continue;
            }
            bool found = false;
            BTree q = detail::replace_rightmost_var(term.tree, 0, found);
            chain.parts.push_back({term.coeff, q});
            next.add_term(term.coeff, detail::substitute_slot(q, 0, bt_const(a)));
        }
        work = std::move(next);
    }
    for (const auto& term : work.terms())
        chain.remainder += term.coeff * btree_eval(term.tree, Element(alg));
    return chain;
}

/// Substitute slot 0 by (x - a) symbolically and add the remainder back.
inline BracketPolynomial bchain_apply(const BracketChain& chain, const Element& a) {
    const AlgebraSpec& alg = *chain.alg;
    BracketPolynomial out(alg);
    if (!chain.remainder.is_zero())
        out.add_term(1, bt_const(chain.remainder));
    for (const auto& part : chain.parts) {
        out.add_term(part.coeff, detail::substitute_slot(part.tree, 0, bt_var()));
        out.add_term(part.coeff, detail::substitute_slot(part.tree, 0, bt_const(-a)));
    }
    return out;
}

/// Canonical form of a family of bracketed terms viewed as a map of
/// (x, slot values): per (Var degree, used-slot mask) a coefficient array
/// over basis tuples for the Var leaves and each used slot, symmetrized
/// over the Var tuple. Functional equality iff the forms agree.
class BracketCanonical {
public:
    std::map<std::pair<std::size_t, std::uint32_t>, std::vector<Rational>> arrays;

    friend bool operator==(const BracketCanonical& x, const BracketCanonical& y) {
        auto nonzero = [](const std::vector<Rational>& v) {
            for (const auto& r : v)
                if (r != 0) return true;
            return false;
        };
        for (const auto& [k, a] : x.arrays) {
            auto it = y.arrays.find(k);
            if (it == y.arrays.end()) {
                if (nonzero(a)) return false;
            } else if (a != it->second)
                return false;
        }
        for (const auto& [k, a] : y.arrays)
            if (!x.arrays.count(k) && nonzero(a)) return false;
        return true;
    }
};

inline BracketCanonical bracket_canonical(const std::vector<BracketTerm>& terms,
                                          const AlgebraSpec& alg,
                                          std::size_t n_slots,
                                          std::size_t degree_cap = kDefaultDegreeCap) {
    const std::size_t dim = alg.dim();
    BracketCanonical cf;
    // group terms by (degree, slot mask)
    std::map<std::pair<std::size_t, std::uint32_t>, std::vector<const BracketTerm*>> groups;
    for (const auto& t : terms) {
        std::size_t d = var_count(t.tree);
        if (d > degree_cap) throw AlgebraError("canonical form degree cap exceeded");
        groups[{d, slot_mask(t.tree)}].push_back(&t);
    }
    for (const auto& [key, group] : groups) {
        auto [d, mask] = key;
        std::size_t used = 0;
        for (std::size_t s = 0; s < n_slots; ++s)
            if (mask & (1u << s)) ++used;
        std::size_t var_tuples = 1;
        for (std::size_t s = 0; s < d; ++s) var_tuples *= dim;
        std::size_t slot_tuples = 1;
        for (std::size_t s = 0; s < used; ++s) slot_tuples *= dim;

        std::vector<Rational> raw(var_tuples * slot_tuples * dim, Rational(0));
        std::vector<Element> vars(d, Element(alg));
        std::vector<Element> slot_vals(n_slots, Element(alg));
        for (std::size_t vt = 0; vt < var_tuples; ++vt) {
            std::size_t rem = vt;
            for (std::size_t s = d; s-- > 0;) {
                vars[s] = basis_element(alg, rem % dim);
                rem /= dim;
            }
            for (std::size_t st = 0; st < slot_tuples; ++st) {
                std::size_t srem = st, u = 0;
                std::vector<std::size_t> sidx(used);
                for (std::size_t s = used; s-- > 0;) {
                    sidx[s] = srem % dim;
                    srem /= dim;
                }
                for (std::size_t s = 0; s < n_slots; ++s)
                    if (mask & (1u << s)) slot_vals[s] = basis_element(alg, sidx[u++]);
                Element v(alg);
                for (const auto* t : group)
                    v += t->coeff * btree_eval_multi(t->tree, vars, slot_vals, alg);
                for (std::size_t j = 0; j < dim; ++j)
                    raw[(vt * slot_tuples + st) * dim + j] = v[j];
            }
        }
        // symmetrize over the Var tuple only; (slot tuple, out) is the
        // trailing block
        cf.arrays[key] =
            ncpoly::detail::symmetrize_array(std::move(raw), dim, d, slot_tuples * dim);
    }
    return cf;
}

/// Two-stage bracketed factor chain: remainder from dividing by x - a2,
/// then terms over Var, Slot(0) = x - a1 and Slot(1) = x - a2.
struct BracketFactorChain {
    const AlgebraSpec* alg;
    Element a1, a2;
    Element remainder;
    std::vector<BracketTerm> terms;
    bool clean = true;
    std::string report;

    Element evaluate(const Element& x) const {
        Element acc = remainder;
        for (const auto& t : terms)
            acc += t.coeff * btree_eval(t.tree, x, {x - a1, x - a2});
        return acc;
    }
};

namespace detail {

inline bool is_leaf(const BTree& t) {
    return t->kind == BracketTree::Kind::var || t->kind == BracketTree::Kind::constant;
}

} // namespace detail

/// Divide by x - a2, then push the division one level deeper through the
/// quotient terms. Terms of shape (P v2) c with P a leaf regroup per outer
/// constant c into a linear polynomial that must vanish at a1; terms of
/// shape L v2 with L slot-free collect into an inner polynomial divided by
/// x - a1. Shapes outside these, or non-vanishing inner remainders, leave
/// the chain partial with a report.
inline BracketFactorChain bfactor_chain(const BracketPolynomial& r, const Element& a1,
                                        const Element& a2) {
    const AlgebraSpec& alg = r.algebra();
    BracketChain first = bdivide_monic(r, a2);
    BracketFactorChain fc{&alg, a1, a2, first.remainder, {}, true, ""};

    // regroup quotient terms; the divisor value of the first stage is Slot(1)
    struct Group {
        Element outer;
        Rational var_coeff;
        Element const_part;
        std::vector<BracketTerm> raw;
    };
    std::vector<Group> groups;
    BracketPolynomial inner(alg);
    bool has_inner = false;

    for (const auto& part : first.parts) {
        BTree t = detail::substitute_slot(part.tree, 0, bt_slot(1));
        const bool is_mul = t->kind == BracketTree::Kind::mul;
        const BTree& l = is_mul ? t->left : t;
        const BTree& rr = is_mul ? t->right : t;
        if (is_mul && rr->kind == BracketTree::Kind::constant &&
            l->kind == BracketTree::Kind::mul &&
            l->right->kind == BracketTree::Kind::slot && detail::is_leaf(l->left)) {
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const Group& g) { return g.outer == rr->value; });
            if (it == groups.end()) {
                groups.push_back({rr->value, Rational(0), Element(alg), {}});
                it = groups.end() - 1;
            }
            if (l->left->kind == BracketTree::Kind::var)
                it->var_coeff += part.coeff;
            else
                it->const_part += part.coeff * l->left->value;
            it->raw.push_back({part.coeff, t});
        } else if (is_mul && rr->kind == BracketTree::Kind::slot && slot_mask(l) == 0) {
            inner.add_term(part.coeff, l);
            has_inner = true;
        } else {
            fc.clean = false;
            fc.report += "quotient term outside the recognized shapes; ";
            fc.terms.push_back({part.coeff, t});
        }
    }

    for (const auto& g : groups) {
        if (g.const_part == -(g.var_coeff * a1)) {
            if (g.var_coeff != 0)
                fc.terms.push_back(
                    {g.var_coeff, bt_mul(bt_mul(bt_slot(0), bt_slot(1)), bt_const(g.outer))});
        } else {
            fc.clean = false;
            fc.report += "grouped linear factor does not vanish at the inner root; ";
            for (const auto& t : g.raw) fc.terms.push_back(t);
        }
    }

    if (has_inner) {
        BracketChain sub = bdivide_monic(inner, a1);
        if (!sub.remainder.is_zero()) {
            fc.clean = false;
            fc.report += "inner polynomial leaves remainder " +
                         to_string(sub.remainder) + "; ";
            fc.terms.push_back({Rational(1), bt_mul(bt_const(sub.remainder), bt_slot(1))});
        }
        for (const auto& part : sub.parts)
            fc.terms.push_back({part.coeff, bt_mul(part.tree, bt_slot(1))});
    }
    return fc;
}

} // namespace ncpoly

#endif
