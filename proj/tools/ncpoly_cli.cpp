// Command line front end: expression evaluation, linear equations, division
// chains, and a driver re-running the worked examples with frozen expected
// results.
#include "ncpoly/ncpoly.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace ncpoly;
using json = nlohmann::ordered_json;

namespace {

// exit codes
constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kAlgebraic = 3;
constexpr int kMismatch = 4;

std::string wrap(const std::string& s) {
    if (s.find_first_of("+- ") != std::string::npos) return "(" + s + ")";
    return s;
}

std::string tensor_str(const TensorSum& t) {
    if (t.is_zero_rep()) return "0";
    std::string out;
    for (const auto& pt : t.terms()) {
        if (!out.empty()) out += " + ";
        std::string term;
        for (const auto& f : pt.factors) {
            if (!term.empty()) term += " @ ";
            term += wrap(to_string(f));
        }
        out += term;
    }
    return out;
}

std::string poly_str(const Polynomial& p) {
    std::string out;
    for (const auto& [deg, t] : p.components()) {
        if (t.is_zero_rep()) continue;
        if (!out.empty()) out += "\n";
        out += "degree " + std::to_string(deg) + ": " + tensor_str(t);
    }
    return out.empty() ? "0" : out;
}

std::string btree_str(const BTree& t) {
    switch (t->kind) {
        case BracketTree::Kind::var: return "x";
        case BracketTree::Kind::constant: return wrap(to_string(t->value));
        case BracketTree::Kind::slot: return "v" + std::to_string(t->slot + 1);
        case BracketTree::Kind::mul:
            return "(" + btree_str(t->left) + " " + btree_str(t->right) + ")";
    }
    return "?";
}

std::string bterms_str(const std::vector<BracketTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += " + ";
        if (t.coeff != 1) out += to_string(t.coeff) + " ";
        out += btree_str(t.tree);
    }
    return out;
}

std::string chain_str(const QuotientChain& ch) {
    std::string out = "remainder: " + to_string(ch.remainder);
    for (std::size_t i = 0; i < ch.parts.size(); ++i)
        out += "\nq" + std::to_string(i) + ": " + tensor_str(ch.parts[i]);
    return out;
}

std::string solution_str(const SolutionSet& s) {
    if (s.kind == SolutionSet::Kind::none) return "no solution";
    if (s.kind == SolutionSet::Kind::unique) return "x = " + to_string(s.particular);
    std::string out = "x = ";
    for (std::size_t t = 0; t < s.kernel_basis.size(); ++t) {
        std::string basis = to_string(s.kernel_basis[t]);
        out += "C" + std::to_string(t + 1);
        if (basis != "1") out += " " + basis;
        out += " + ";
    }
    out += to_string(s.particular);
    return out;
}

std::string sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string float_element_str(const FloatElement& f) {
    std::string out;
    for (std::size_t t = 0; t < f.co.size(); ++t) {
        if (f.co[t] == 0.0) continue;
        double mag = f.co[t] < 0 ? -f.co[t] : f.co[t];
        out += out.empty() ? (f.co[t] < 0 ? "-" : "") : (f.co[t] < 0 ? " - " : " + ");
        out += sig12(mag);
        if (t > 0) out += " " + f.alg->basis_name(t);
    }
    return out.empty() ? "0" : out;
}

struct Report {
    json j;
    bool use_json = false;

    Report(const std::string& command, bool enabled) : use_json(enabled) {
        j["command"] = command;
        j["inputs"] = json::array();
        j["result"] = json::object();
        j["checks"] = json::array();
        j["exit_code"] = 0;
    }
    void input(const std::string& s) {
        if (!s.empty()) j["inputs"].push_back(s);
    }
    void check(const std::string& name, bool ok) {
        j["checks"].push_back({{"name", name}, {"passed", ok}});
    }
    void emit(int code, const std::string& text) {
        j["exit_code"] = code;
        if (use_json)
            std::cout << j.dump(2) << "\n";
        else if (!text.empty())
            std::cout << text << "\n";
    }
};

std::string load_input(const std::string& arg, const std::string& file) {
    if (file.empty()) return arg;
    std::ifstream in(file);
    if (!in) throw AlgebraError("cannot read file: " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExprPtr parse_checked(const std::string& src, const AlgebraSpec& alg, bool warn_default) {
    ParseResult r = parse(src, alg);
    if (warn_default && r.defaulted_association && &alg == &octonions())
        std::cerr << "warning: unparenthesized product associated to the left\n";
    return r.expr;
}

/// Split "a1, a2" on top-level commas.
std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Element> parse_elements(const std::string& s, const AlgebraSpec& alg) {
    std::vector<Element> out;
    for (const auto& part : split_commas(s))
        out.push_back(ast_element(parse(part, alg).expr, alg));
    return out;
}

/// Extract (p1, p0) from a linear polynomial expression.
std::pair<TensorSum, Element> linear_parts(const Polynomial& p) {
    auto deg = p.formal_degree();
    if (!deg || *deg != 1) throw AlgebraError("divisor must have degree 1");
    const TensorSum* lin = p.component(1);
    TensorSum p1(p.algebra(), 2);
    if (lin) p1 = *lin;
    return {p1, p.constant_term()};
}

bool tensor_is_identity(const TensorSum& t) {
    return matrix_of(t).entries == matrix_of(identity_tensor(t.algebra())).entries;
}

// ---- worked example driver -------------------------------------------------

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

struct ExampleCheck {
    std::string name;
    bool passed;
};

std::vector<ExampleCheck> run_example(const std::string& id, std::string& summary) {
    const AlgebraSpec& H = quaternions();
    const AlgebraSpec& O = octonions();
    Element one = basis_element(H, 0), i = basis_element(H, 1), j = basis_element(H, 2),
            k = basis_element(H, 3);
    Polynomial X = Polynomial::variable(H);
    auto C = [](const Element& e) { return Polynomial::constant(e); };
    std::vector<ExampleCheck> checks;
    auto add = [&](const std::string& n, bool ok) { checks.push_back({n, ok}); };

    std::mt19937 rng(7);
    auto rnd = [&](const AlgebraSpec& alg) {
        std::uniform_int_distribution<int> d(-3, 3);
        Element e(alg);
        for (std::size_t t = 0; t < alg.dim(); ++t) e[t] = d(rng);
        return e;
    };
    auto quotient_is = [&](const QuotientChain& ch, auto want) {
        for (int t = 0; t < 20; ++t) {
            Element x = rnd(H), y = rnd(H);
            if (chain_value(ch, x, y) != want(x, y)) return false;
        }
        return true;
    };

    if (id == "4.5") {
        TensorSum t = pure({i, one}) - pure({one, i});
        auto sk = solve(t, k);
        add("affine solution", sk.kind == SolutionSet::Kind::affine);
        add("particular 1/2 j", sk.particular == Rational(1, 2) * j);
        add("kernel {1, i}", sk.kernel_basis.size() == 2 && sk.kernel_basis[0] == one &&
                                 sk.kernel_basis[1] == i);
        add("b = 1 has no root", solve(t, one).kind == SolutionSet::Kind::none);
        summary = solution_str(sk);
    } else if (id == "5.2") {
        auto rep = weierstrass_step_check();
        add("P(i+j) = k", rep.p_value == k);
        add("P1(i+j) = 2 + k", rep.p1_value == Rational(2) * one + k);
        add("values differ", rep.differs);
        summary = "P(i+j) = " + to_string(rep.p_value) +
                  ", P1(i+j) = " + to_string(rep.p1_value);
    } else if (id == "6.3") {
        auto res = ncpoly::sqrt(i);
        bool ok = res.kind == SqrtResult::Kind::pair;
        double s = 0.7071067811865476;
        if (ok)
            for (std::size_t c = 0; c < 4; ++c) {
                double want = c < 2 ? s : 0.0;
                ok = ok && std::abs(res.roots[0].co[c] - want) < 1e-10 &&
                     std::abs(res.roots[1].co[c] + want) < 1e-10;
            }
        add("sqrt(i) = +/-(1 + i)/sqrt(2)", ok);
        summary = ok ? "sqrt(i) = +/-(" + float_element_str(res.roots[0]) + ")" : "";
    } else if (id == "7.7") {
        auto [p12, p21] = given_roots_pair(i, j);
        add("x^2 + 1 infeasible",
            !solve_map_combination({p12, p21}, X * X + C(one)).has_value());
        add("p12 feasible", solve_map_combination({p12, p21}, p12).has_value());
        add("p12 + p21 feasible",
            solve_map_combination({p12, p21}, p12 + p21).has_value());
        summary = "no tensor combination of (x-i)(x-j), (x-j)(x-i) equals x^2 + 1";
    } else if (id == "9.1") {
        Polynomial r = X * X - C(j) * X - X * C(i) - C(k);
        auto ch = divide_monic(r, i);
        add("remainder 0", ch.remainder.is_zero());
        add("quotient (x - j) @ 1",
            quotient_is(ch, [&](const Element& x, const Element& y) { return (x - j) * y; }));
        summary = chain_str(ch);
    } else if (id == "9.2") {
        Polynomial r = (X - C(i)) * (X - C(j));
        auto ch = divide_monic(r, i);
        add("remainder 0", ch.remainder.is_zero());
        add("quotient -i@1 - 1@j + 1@i + x@1",
            quotient_is(ch, [&](const Element& x, const Element& y) {
                return -i * y - y * j + y * i + x * y;
            }));
        summary = chain_str(ch);
    } else if (id == "9.3") {
        Polynomial r = X * X - C(i) * X - C(j) * X - C(k);
        auto ch = divide_monic(r, i);
        add("remainder 0", ch.remainder.is_zero());
        add("quotient 1@i + (x - i - j)@1",
            quotient_is(ch, [&](const Element& x, const Element& y) {
                return y * i + (x - i - j) * y;
            }));
        auto [m, d] = kernel_condition_matrix(ch, Rational(2) * i);
        RatMat expected = {{0, -2, 1, 0}, {2, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}};
        add("matrix at x = 2i", m.entries == expected);
        summary = chain_str(ch);
    } else if (id == "9.5") {
        Polynomial r = X * X - C(i) * X - C(j) * X - C(k);
        auto ch = divide_monic(r, j);
        add("remainder -2k", ch.remainder == Rational(-2) * k);
        add("remainder equals r(j)", ch.remainder == r.evaluate(j));
        summary = chain_str(ch);
    } else if (id == "10.1") {
        Polynomial r = (X - C(j)) * (X - C(k)) * (X - C(j + k));
        auto ch = divide_monic(r, k);
        add("remainder 0", ch.remainder.is_zero());
        add("quotient j@j + i@1 - x@j - jx@1 - xk@1 + x^2@1",
            quotient_is(ch, [&](const Element& x, const Element& y) {
                return j * y * j + i * y - x * y * j - (j * x) * y - (x * k) * y +
                       (x * x) * y;
            }));
        summary = chain_str(ch);
    } else if (id == "10.3") {
        Polynomial inner = C(i) - C(j) * X - X * C(k) + X * X;
        auto ich = divide_monic(inner, j);
        add("inner remainder 0", ich.remainder.is_zero());
        add("inner quotient -j@1 - 1@k + 1@j + x@1",
            quotient_is(ich, [&](const Element& x, const Element& y) {
                return -j * y - y * k + y * j + x * y;
            }));
        summary = chain_str(ich);
    } else if (id == "10.4") {
        Polynomial r = (X - C(j)) * (X - C(k)) * (X - C(j + k));
        auto fc = factor_chain(r, {j, k});
        bool rem0 = fc.stage_remainders.size() == 2 && fc.stage_remainders[0].is_zero() &&
                    fc.stage_remainders[1].is_zero();
        add("clean chain, remainders (0, 0)", fc.clean && rem0);
        bool recon = true, core_ok = true;
        for (int t = 0; t < 20; ++t) {
            Element x = rnd(H);
            recon = recon && evaluate(fc, x) == r.evaluate(x);
            Element v1 = rnd(H), v2 = rnd(H);
            Element acc(H);
            for (const auto& term : fc.core) acc += eval_core_term_at(term, x, {v1, v2});
            Element want = -(v1 * v2 * j) - j * v1 * v2 - v1 * k * v2 + v1 * j * v2 +
                           x * v1 * v2;
            core_ok = core_ok && acc == want;
        }
        add("chain reconstructs r exactly", recon);
        add("two-factor core map", core_ok);
        summary = "factor chain with roots j, k: clean, remainders (0, 0)";
    } else if (id == "11.2") {
        Element oi = basis_element(O, 1), oj = basis_element(O, 2),
                ok = basis_element(O, 3), ojl = basis_element(O, 6);
        BracketPolynomial r = ast_bracket(parse("((x - j)(x - k))(x - jl)", O).expr, O);
        auto ch = bdivide_monic(r, ok);
        add("remainder 0", ch.remainder.is_zero());
        std::vector<BracketTerm> want = {
            {1, bt_mul(bt_mul(bt_var(), bt_slot(0)), bt_const(ok - ojl))},
            {-1, bt_mul(bt_mul(bt_const(oj), bt_slot(0)), bt_const(ok - ojl))},
            {1, bt_mul(bt_mul(bt_var(), bt_var()), bt_slot(0))},
            {-1, bt_mul(bt_mul(bt_const(oj), bt_var()), bt_slot(0))},
            {-1, bt_mul(bt_mul(bt_var(), bt_const(ok)), bt_slot(0))},
            {1, bt_mul(bt_const(oi), bt_slot(0))},
        };
        add("quotient ((x - j) v)(k - jl) + (x^2 - jx - xk + i) v",
            bracket_canonical(ch.parts, O, 1) == bracket_canonical(want, O, 1));
        summary = "remainder: " + to_string(ch.remainder) + "\nquotient: " +
                  bterms_str(ch.parts);
    } else if (id == "11.3") {
        Element oi = basis_element(O, 1), oj = basis_element(O, 2),
                ok = basis_element(O, 3), ojl = basis_element(O, 6);
        BracketPolynomial r = ast_bracket(parse("((x - j)(x - k))(x - jl)", O).expr, O);
        auto fc = bfactor_chain(r, oj, ok);
        add("clean two-slot chain", fc.clean && fc.remainder.is_zero());
        std::vector<BracketTerm> want = {
            {1, bt_mul(bt_mul(bt_slot(0), bt_slot(1)), bt_const(ok - ojl))},
            {1, bt_mul(bt_mul(bt_slot(0), bt_const(oj - ok)), bt_slot(1))},
            {1, bt_mul(bt_mul(bt_var(), bt_slot(0)), bt_slot(1))},
            {-1, bt_mul(bt_mul(bt_const(oj), bt_slot(0)), bt_slot(1))},
        };
        add("core ((v1) v2)(k - jl) + (v1 (j - k)) v2 + ((x - j) v1) v2",
            bracket_canonical(fc.terms, O, 2) == bracket_canonical(want, O, 2));
        bool recon = true;
        for (int t = 0; t < 20; ++t) {
            Element x = rnd(O);
            recon = recon && fc.evaluate(x) == r.evaluate(x);
        }
        add("reconstructs r exactly", recon);
        summary = "core: " + bterms_str(fc.terms);
    } else {
        throw AlgebraError("unknown example id: " + id);
    }
    return checks;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomials over quaternions and octonions, exact arithmetic"};
    app.require_subcommand(1);

    std::string algebra_name = "H";
    bool json_out = false;
    std::string file;
    app.add_option("--algebra", algebra_name, "algebra, H or O")
        ->check(CLI::IsMember({"H", "O"}));
    app.add_flag("--json", json_out, "machine readable report");
    app.add_option("--file", file, "read the first expression from a file");

    std::string arg1, arg2, at, by, roots_arg, gen_p1, gen_p0;

    auto* c_eval = app.add_subcommand("eval", "evaluate a polynomial at a point");
    c_eval->add_option("poly", arg1);
    c_eval->add_option("--at", at)->required();

    auto* c_mul = app.add_subcommand("mul", "multiply two polynomials");
    c_mul->add_option("p", arg1);
    c_mul->add_option("q", arg2)->required();

    auto* c_solve = app.add_subcommand("solve", "solve a o x = b");
    c_solve->add_option("tensor", arg1);
    c_solve->add_option("b", arg2)->required();

    auto* c_matrix = app.add_subcommand("matrix", "coordinate matrix of a tensor");
    c_matrix->add_option("tensor", arg1);

    auto* c_sqrt = app.add_subcommand("sqrt", "quaternion square roots");
    c_sqrt->add_option("quat", arg1);

    auto* c_divide = app.add_subcommand("divide", "divide by a linear polynomial");
    c_divide->add_option("poly", arg1);
    c_divide->add_option("--by", by);
    c_divide->add_option("--general", gen_p1, "rank-2 tensor p1 (with --general-const)");
    c_divide->add_option("--general-const", gen_p0, "constant p0 of p1 o x + p0");

    auto* c_fchain = app.add_subcommand("factor-chain", "iterated division by roots");
    c_fchain->add_option("poly", arg1);
    c_fchain->add_option("--roots", roots_arg)->required();

    auto* c_omul = app.add_subcommand("ore-mul", "left-sided coefficient product");
    c_omul->add_option("p", arg1, "comma separated coefficients, low degree first");
    c_omul->add_option("q", arg2)->required();

    auto* c_ocheck = app.add_subcommand("ore-check", "left-sided factorization step check");

    auto* c_odiv = app.add_subcommand("odivide", "octonion bracketed division by x - a");
    c_odiv->add_option("poly", arg1);
    c_odiv->add_option("--by", by)->required();

    std::string example_id;
    auto* c_ex = app.add_subcommand("paper-example", "re-run a worked example");
    c_ex->add_option("id", example_id)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    Report rep(sub->get_name(), json_out);

    try {
        const AlgebraSpec& alg = algebra_by_name(algebra_name);
        std::string in1 = load_input(arg1, file);
        rep.input(in1);

        if (sub == c_eval) {
            rep.input(at);
            Element x = ast_element(parse(at, alg).expr, alg);
            Element v = &alg == &octonions()
                            ? ast_bracket(parse_checked(in1, alg, true), alg).evaluate(x)
                            : ast_polynomial(parse(in1, alg).expr, alg).evaluate(x);
            rep.j["result"]["value"] = to_string(v);
            rep.emit(0, "value = " + to_string(v));
        } else if (sub == c_mul) {
            rep.input(arg2);
            std::string text;
            if (&alg == &octonions()) {
                BracketPolynomial p = ast_bracket(parse_checked(in1, alg, true), alg);
                BracketPolynomial q = ast_bracket(parse_checked(arg2, alg, true), alg);
                BracketPolynomial prod(alg);
                for (const auto& pt : p.terms())
                    for (const auto& qt : q.terms())
                        prod.add_term(pt.coeff * qt.coeff,
                                      bracket_product(pt.tree, qt.tree, alg));
                text = bterms_str(prod.terms());
            } else {
                Polynomial prod = ast_polynomial(parse(in1, alg).expr, alg) *
                                  ast_polynomial(parse(arg2, alg).expr, alg);
                text = poly_str(prod);
            }
            rep.j["result"]["product"] = text;
            rep.emit(0, text);
        } else if (sub == c_solve) {
            rep.input(arg2);
            TensorSum t = ast_tensor(parse(in1, alg).expr, alg);
            Element b = ast_element(parse(arg2, alg).expr, alg);
            auto s = solve(t, b);
            std::string text = solution_str(s);
            rep.j["result"]["solution"] = text;
            rep.emit(0, text);
        } else if (sub == c_matrix) {
            TensorSum t = ast_tensor(parse(in1, alg).expr, alg);
            MapMatrix m = matrix_of(t);
            std::string text;
            json rows = json::array();
            for (const auto& row : m.entries) {
                std::string line;
                json jrow = json::array();
                for (const auto& v : row) {
                    line += (line.empty() ? "" : " ") + to_string(v);
                    jrow.push_back(to_string(v));
                }
                rows.push_back(jrow);
                text += (text.empty() ? "" : "\n") + line;
            }
            rep.j["result"]["matrix"] = rows;
            rep.j["result"]["det"] = to_string(det(m.entries));
            rep.emit(0, text + "\ndet = " + to_string(det(m.entries)));
        } else if (sub == c_sqrt) {
            Element a = ast_element(parse(in1, alg).expr, alg);
            auto res = ncpoly::sqrt(a);
            std::string text;
            if (res.kind == SqrtResult::Kind::pair)
                text = "roots: " + float_element_str(res.roots[0]) + ", " +
                       float_element_str(res.roots[1]);
            else if (res.kind == SqrtResult::Kind::zero_double)
                text = "root 0 with multiplicity 2";
            else
                text = "sphere of roots: imaginary quaternions with |x| = " +
                       sig12(res.sphere_radius);
            rep.j["result"]["sqrt"] = text;
            rep.emit(0, text);
        } else if (sub == c_divide) {
            Polynomial r = ast_polynomial(parse(in1, alg).expr, alg);
            QuotientChain ch{&alg, Element(alg), {}};
            if (!gen_p1.empty()) {
                rep.input(gen_p1);
                rep.input(gen_p0);
                TensorSum p1 = ast_tensor(parse(gen_p1, alg).expr, alg);
                Element p0 = ast_element(parse(gen_p0, alg).expr, alg);
                ch = divide_linear(r, p1, p0);
            } else {
                if (by.empty()) throw AlgebraError("--by or --general is required");
                rep.input(by);
                auto [p1, p0] = linear_parts(ast_polynomial(parse(by, alg).expr, alg));
                ch = tensor_is_identity(p1) ? divide_monic(r, -p0)
                                            : divide_linear(r, p1, p0);
            }
            std::string text = chain_str(ch);
            rep.j["result"]["remainder"] = to_string(ch.remainder);
            rep.j["result"]["chain"] = text;
            rep.emit(0, text);
        } else if (sub == c_fchain) {
            rep.input(roots_arg);
            Polynomial r = ast_polynomial(parse(in1, alg).expr, alg);
            auto fc = factor_chain(r, parse_elements(roots_arg, alg));
            std::string text = "clean: " + std::string(fc.clean ? "yes" : "no");
            if (!fc.report.empty()) text += "\nreport: " + fc.report;
            for (std::size_t t = 0; t < fc.stage_remainders.size(); ++t)
                text += "\nstage " + std::to_string(t) +
                        " remainder: " + to_string(fc.stage_remainders[t]);
            for (const auto& term : fc.core) {
                std::string line = "core term:";
                for (const auto& m : term.mono) line += " [" + to_string(m) + "]";
                line += " | tails:";
                for (const auto& tl : term.tails) line += " [" + to_string(tl) + "]";
                text += "\n" + line;
            }
            rep.j["result"]["clean"] = fc.clean;
            rep.j["result"]["report"] = fc.report;
            rep.j["result"]["chain"] = text;
            rep.emit(0, text);
        } else if (sub == c_omul) {
            rep.input(arg2);
            LeftPolynomial p(alg, parse_elements(in1, alg));
            LeftPolynomial q(alg, parse_elements(arg2, alg));
            LeftPolynomial pr = left_mul(p, q);
            std::string text;
            for (std::size_t t = 0; t < pr.coeffs().size(); ++t)
                text += (text.empty() ? "" : ", ") + to_string(pr.coeffs()[t]);
            if (text.empty()) text = "0";
            rep.j["result"]["coefficients"] = text;
            rep.emit(0, text);
        } else if (sub == c_ocheck) {
            auto w = weierstrass_step_check();
            std::string text = "P(i+j) = " + to_string(w.p_value) +
                               "\nP1(i+j) = " + to_string(w.p1_value) +
                               "\nvalues differ: " + (w.differs ? "yes" : "no");
            rep.j["result"]["p"] = to_string(w.p_value);
            rep.j["result"]["p1"] = to_string(w.p1_value);
            rep.j["result"]["differs"] = w.differs;
            rep.emit(0, text);
        } else if (sub == c_odiv) {
            rep.input(by);
            const AlgebraSpec& o = octonions();
            BracketPolynomial r = ast_bracket(parse_checked(in1, o, true), o);
            Element a = ast_element(parse(by, o).expr, o);
            auto ch = bdivide_monic(r, a);
            std::string text = "remainder: " + to_string(ch.remainder) +
                               "\nquotient: " + bterms_str(ch.parts);
            rep.j["result"]["remainder"] = to_string(ch.remainder);
            rep.j["result"]["quotient"] = bterms_str(ch.parts);
            rep.emit(0, text);
        } else if (sub == c_ex) {
            rep.input(example_id);
            std::string summary;
            auto checks = run_example(example_id, summary);
            bool all = true;
            std::string text;
            for (const auto& c : checks) {
                rep.check(c.name, c.passed);
                text += (text.empty() ? "" : "\n") + c.name + ": " +
                        (c.passed ? "ok" : "MISMATCH");
                all = all && c.passed;
            }
            if (!summary.empty()) text += "\n" + summary;
            rep.emit(all ? 0 : kMismatch, text);
            return all ? 0 : kMismatch;
        }
        return 0;
    } catch (const ParseError& e) {
        rep.j["result"]["error"] = e.what();
        rep.emit(kParse, std::string("parse error: ") + e.what());
        return kParse;
    } catch (const AlgebraError& e) {
        rep.j["result"]["error"] = e.what();
        rep.emit(kAlgebraic, std::string("error: ") + e.what());
        return kAlgebraic;
    }
}
