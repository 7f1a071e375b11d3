/*
 * Copyright 2026 The homalt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <homalt/proof_replay.hpp>

#include "random_points.hpp"

#include <set>

namespace homalt {

// ------------------------------------------------------------ contexts

Element ExactContext::beta(const Element& x, std::size_t n) const {
    if (beta_ == nullptr) throw Error("identity needs a weak morphism");
    Element out = x;
    for (std::size_t k = 0; k < n; ++k) out = beta_->apply(out);
    return out;
}

Element ExactContext::twisted_assoc(const Element& x, const Element& y, const Element& z) const {
    if (twisted_ == nullptr) throw Error("identity needs the twisted algebra");
    return hom_associator(*twisted_, x, y, z);
}

DegreeContext::Elem DegreeContext::power(Elem x, std::size_t n) const {
    Elem p = x, s = x;
    for (std::size_t k = 2; k <= n; ++k) {
        if (k > 2) s = shift(s, 1);
        p = mul(p, s);
    }
    return p;
}

// ------------------------------------------------------------ registry

namespace {

template <class F>
IdentityInstance make(IdentityId id, std::vector<std::string> vars, unsigned hyp, bool multilinear,
                      std::string formula, F f) {
    IdentityInstance inst;
    inst.id = id;
    inst.variables = std::move(vars);
    inst.hypotheses = hyp;
    inst.multilinear = multilinear;
    inst.formula = std::move(formula);
    inst.exact = [f](const ExactContext& c, std::span<const Element> v) { return f(c, v); };
    inst.degree = [f](const DegreeContext& c, std::span<const DegreeContext::Elem> v) { return f(c, v); };
    return inst;
}

constexpr unsigned kMultRha = kMultiplicative | kRightHomAlternative;

// The operator words below are compositions read left to right, in the same
// order as the juxtaposed words they encode. Shifts a_n are c.shift(a, n).
std::vector<IdentityInstance> build_registry() {
    std::vector<IdentityInstance> r;

    r.push_back(make(IdentityId::xyy, {"x", "y"}, kNoHypothesis, false, "(xy)alpha(y) = alpha(x)(yy)",
                     [](const auto& c, auto v) {
                         const auto &x = v[0], &y = v[1];
                         return std::vector{
                             c.eq(c.mul(c.mul(x, y), c.shift(y)), c.mul(c.shift(x), c.mul(y, y)))};
                     }));

    r.push_back(make(IdentityId::linearized, {"x", "y", "z"}, kNoHypothesis, true, "(x,y,z) = -(x,z,y)",
                     [](const auto& c, auto v) {
                         const auto &x = v[0], &y = v[1], &z = v[2];
                         return std::vector{c.eq(c.assoc(x, y, z), c.neg(c.assoc(x, z, y)))};
                     }));

    r.push_back(make(
        IdentityId::teichmuller, {"w", "x", "y", "z"}, kMultiplicative, true,
        "(wx,y1,z1) - (w1,xy,z1) + (w1,x1,yz) - w2(x,y,z) - (w,x,y)z2 = 0", [](const auto& c, auto v) {
            const auto &w = v[0], &x = v[1], &y = v[2], &z = v[3];
            auto f = c.assoc(c.mul(w, x), c.shift(y), c.shift(z));
            f = c.minus(f, c.assoc(c.shift(w), c.mul(x, y), c.shift(z)));
            f = c.add(f, c.assoc(c.shift(w), c.shift(x), c.mul(y, z)));
            f = c.minus(f, c.mul(c.shift(w, 2), c.assoc(x, y, z)));
            f = c.minus(f, c.mul(c.assoc(w, x, y), c.shift(z, 2)));
            return std::vector{c.eq(f, c.zero())};
        }));

    r.push_back(make(IdentityId::xyyz, {"x", "y", "z"}, kMultRha, false, "(alpha(x),alpha(y),yz) = (x,y,z)alpha^2(y)",
                     [](const auto& c, auto v) {
                         const auto &x = v[0], &y = v[1], &z = v[2];
                         return std::vector{c.eq(c.assoc(c.shift(x), c.shift(y), c.mul(y, z)),
                                                 c.mul(c.assoc(x, y, z), c.shift(y, 2)))};
                     }));

    r.push_back(make(IdentityId::moufang, {"x", "y", "z"}, kMultRha, false,
                     "[(xy)alpha(z)]alpha^2(y) = alpha^2(x)[(yz)alpha(y)]", [](const auto& c, auto v) {
                         const auto &x = v[0], &y = v[1], &z = v[2];
                         return std::vector{c.eq(c.mul(c.mul(c.mul(x, y), c.shift(z)), c.shift(y, 2)),
                                                 c.mul(c.shift(x, 2), c.mul(c.mul(y, z), c.shift(y))))};
                     }));

    r.push_back(make(IdentityId::beta2, {"x", "y", "z"}, kWeakMorphism, true, "beta^2 (x,y,z)_A = (x,y,z)_{A_beta}",
                     [](const auto& c, auto v) {
                         const auto &x = v[0], &y = v[1], &z = v[2];
                         return std::vector{c.eq(c.beta(c.assoc(x, y, z), 2), c.twisted_assoc(x, y, z))};
                     }));

    r.push_back(make(IdentityId::eq1, {"a"}, kMultRha, false, "a'a_1' = alpha(a^2)'", [](const auto& c, auto v) {
        const auto& a = v[0];
        return std::vector{c.eq(c.compose(c.rmul(a), c.rmul(c.shift(a))), c.compose(c.alpha(1), c.rmul(c.power(a, 2))))};
    }));

    r.push_back(make(IdentityId::eq2, {"a", "b"}, kMultRha, false, "a'b_1'a_2' = alpha^2[(ab)a_1]'",
                     [](const auto& c, auto v) {
                         const auto &a = v[0], &b = v[1];
                         return std::vector{
                             c.eq(c.compose(c.rmul(a), c.rmul(c.shift(b)), c.rmul(c.shift(a, 2))),
                                  c.compose(c.alpha(2), c.rmul(c.mul(c.mul(a, b), c.shift(a)))))};
                     }));

    r.push_back(make(IdentityId::eq2p, {"a", "b", "c"}, kMultRha, false,
                     "a'b_1'c_2' + c'b_1'a_2' = alpha^2[(ab)c_1 + (cb)a_1]'", [](const auto& c, auto v) {
                         const auto &a = v[0], &b = v[1], &cc = v[2];
                         auto lhs = c.add(c.compose(c.rmul(a), c.rmul(c.shift(b)), c.rmul(c.shift(cc, 2))),
                                          c.compose(c.rmul(cc), c.rmul(c.shift(b)), c.rmul(c.shift(a, 2))));
                         auto inner = c.add(c.mul(c.mul(a, b), c.shift(cc)), c.mul(c.mul(cc, b), c.shift(a)));
                         return std::vector{c.eq(lhs, c.compose(c.alpha(2), c.rmul(inner)))};
                     }));

    r.push_back(make(IdentityId::eq3a, {"a"}, kMultRha, false, "a^a = 0", [](const auto& c, auto v) {
        return std::vector{c.eq(c.sup(v[0], v[0]), c.zero_op())};
    }));

    r.push_back(make(IdentityId::eq3b, {"a", "b"}, kMultRha, true, "a^b + b^a = 0", [](const auto& c, auto v) {
        return std::vector{c.eq(c.add(c.sup(v[0], v[1]), c.sup(v[1], v[0])), c.zero_op())};
    }));

    r.push_back(make(IdentityId::eq5, {"a", "b"}, kMultRha, false, "a^b ({a_2}_{b_2}) = 0", [](const auto& c, auto v) {
        const auto &a = v[0], &b = v[1];
        return std::vector{c.eq(c.compose(c.sup(a, b), c.sub(c.shift(a, 2), c.shift(b, 2))), c.zero_op())};
    }));

    r.push_back(make(IdentityId::eq5p, {"a", "b", "c"}, kMultRha, false, "a^b({a_2}_{c_2}) + a^c({a_2}_{b_2}) = 0",
                     [](const auto& c, auto v) {
                         const auto &a = v[0], &b = v[1], &cc = v[2];
                         auto a2 = c.shift(a, 2);
                         auto lhs = c.add(c.compose(c.sup(a, b), c.sub(a2, c.shift(cc, 2))),
                                          c.compose(c.sup(a, cc), c.sub(a2, c.shift(b, 2))));
                         return std::vector{c.eq(lhs, c.zero_op())};
                     }));

    r.push_back(make(IdentityId::eq6, {"a", "b"}, kMultRha, false, "a_b(a_2^{b_2}) = -alpha^3([a,b],a_1,b_1)'",
                     [](const auto& c, auto v) {
                         const auto &a = v[0], &b = v[1];
                         auto lhs = c.compose(c.sub(a, b), c.sup(c.shift(a, 2), c.shift(b, 2)));
                         auto rhs = c.neg(c.compose(c.alpha(3), c.rmul(c.assoc(c.comm(a, b), c.shift(a), c.shift(b)))));
                         return std::vector{c.eq(lhs, rhs)};
                     }));

    r.push_back(make(IdentityId::eq7, {"a", "b"}, kMultRha, false,
                     "a_b a_2' (a_3^{b_3}) = -alpha^4([a,b]a_1,a_2,b_2)'", [](const auto& c, auto v) {
                         const auto &a = v[0], &b = v[1];
                         auto lhs = c.compose(c.sub(a, b), c.rmul(c.shift(a, 2)), c.sup(c.shift(a, 3), c.shift(b, 3)));
                         auto inner = c.assoc(c.mul(c.comm(a, b), c.shift(a)), c.shift(a, 2), c.shift(b, 2));
                         return std::vector{c.eq(lhs, c.neg(c.compose(c.alpha(4), c.rmul(inner))))};
                     }));

    r.push_back(make(IdentityId::eq8, {"a", "b"}, kMultRha, false, "p_3([a_2,b_2],a_3,b_3) = 0",
                     [](const auto& c, auto v) {
                         const auto &a = v[0], &b = v[1];
                         auto p = c.assoc(a, a, b);
                         auto q = c.assoc(c.comm(c.shift(a, 2), c.shift(b, 2)), c.shift(a, 3), c.shift(b, 3));
                         return std::vector{c.eq(c.mul(c.shift(p, 3), q), c.zero())};
                     }));

    r.push_back(make(IdentityId::eq9, {"a", "b"}, kMultRha, false, "p_4([a_2,b_2]a_3,a_4,b_4) = 0",
                     [](const auto& c, auto v) {
                         const auto &a = v[0], &b = v[1];
                         auto p = c.assoc(a, a, b);
                         auto q = c.assoc(c.mul(c.comm(c.shift(a, 2), c.shift(b, 2)), c.shift(a, 3)), c.shift(a, 4),
                                          c.shift(b, 4));
                         return std::vector{c.eq(c.mul(c.shift(p, 4), q), c.zero())};
                     }));

    r.push_back(make(IdentityId::eq10, {"a", "b"}, kMultRha, false,
                     "alpha^2 p_k' = alpha a_{k+1}^{(ba)_k} - a_k' a_{k+1}^{b_{k+1}}, k = 0,1,2",
                     [](const auto& c, auto v) {
                         const auto &a = v[0], &b = v[1];
                         auto p = c.assoc(a, a, b);
                         auto ba = c.mul(b, a);
                         std::vector<decltype(c.eq(c.zero_op(), c.zero_op()))> out;
                         for (std::size_t k = 0; k <= 2; ++k) {
                             auto lhs = c.compose(c.alpha(2), c.rmul(c.shift(p, k)));
                             auto rhs = c.minus(c.compose(c.alpha(1), c.sup(c.shift(a, k + 1), c.shift(ba, k))),
                                                c.compose(c.rmul(c.shift(a, k)), c.sup(c.shift(a, k + 1), c.shift(b, k + 1))));
                             out.push_back(c.eq(lhs, rhs));
                         }
                         return out;
                     }));

    r.push_back(make(IdentityId::eq10p, {"a", "b"}, kMultRha, false,
                     "alpha^2 p_k' = alpha {a_{k+1}}_{(ba)_k} - {a_k}_{b_k} a_{k+2}', k = 0,1,2",
                     [](const auto& c, auto v) {
                         const auto &a = v[0], &b = v[1];
                         auto p = c.assoc(a, a, b);
                         auto ba = c.mul(b, a);
                         std::vector<decltype(c.eq(c.zero_op(), c.zero_op()))> out;
                         for (std::size_t k = 0; k <= 2; ++k) {
                             auto lhs = c.compose(c.alpha(2), c.rmul(c.shift(p, k)));
                             auto rhs = c.minus(c.compose(c.alpha(1), c.sub(c.shift(a, k + 1), c.shift(ba, k))),
                                                c.compose(c.sub(c.shift(a, k), c.shift(b, k)), c.rmul(c.shift(a, k + 2))));
                             out.push_back(c.eq(lhs, rhs));
                         }
                         return out;
                     }));

    // The two summands of the split of a^b p' p_1' p_2' alpha^6.
    const auto d_term = [](const auto& c, const auto& a, const auto& b) {
        auto ba = c.mul(b, a);
        return c.neg(c.compose(c.sup(a, b), c.alpha(1), c.sub(c.shift(a, 3), c.shift(ba, 2)), c.alpha(1),
                               c.sup(c.shift(a, 6), c.shift(ba, 5)), c.sub(c.shift(a, 8), c.shift(b, 8)),
                               c.rmul(c.shift(a, 10))));
    };
    const auto e_term = [](const auto& c, const auto& a, const auto& b) {
        auto ba = c.mul(b, a);
        return c.neg(c.compose(c.sup(a, b), c.alpha(1), c.sub(c.shift(a, 3), c.shift(ba, 2)), c.rmul(c.shift(a, 5)),
                               c.sup(c.shift(a, 6), c.shift(b, 6)), c.alpha(1), c.sub(c.shift(a, 9), c.shift(ba, 8))));
    };
    const auto prop_word = [](const auto& c, const auto& a, const auto& b) {
        auto p = c.assoc(a, a, b);
        return c.compose(c.sup(a, b), c.rmul(p), c.rmul(c.shift(p, 1)), c.rmul(c.shift(p, 2)), c.alpha(6));
    };

    r.push_back(make(IdentityId::dpe, {"a", "b"}, kMultRha, false,
                     "a^b p'p_1'p_2' alpha^6 = d + e", [=](const auto& c, auto v) {
                         const auto &a = v[0], &b = v[1];
                         return std::vector{c.eq(prop_word(c, a, b), c.add(d_term(c, a, b), e_term(c, a, b)))};
                     }));

    r.push_back(make(IdentityId::d0, {"a", "b"}, kMultRha, false,
                     "-a^b alpha({a_3}_{(ba)_2}) alpha(a_6^{(ba)_5}) ({a_8}_{b_8}) a_10' = 0",
                     [=](const auto& c, auto v) { return std::vector{c.eq(d_term(c, v[0], v[1]), c.zero_op())}; }));

    r.push_back(make(IdentityId::e0, {"a", "b"}, kMultRha, false,
                     "-a^b alpha({a_3}_{(ba)_2}) a_5' (a_6^{b_6}) alpha({a_9}_{(ba)_8}) = 0",
                     [=](const auto& c, auto v) { return std::vector{c.eq(e_term(c, v[0], v[1]), c.zero_op())}; }));

    r.push_back(make(IdentityId::prop, {"a", "b"}, kMultRha, false, "a^b p'p_1'p_2' alpha^6 = 0",
                     [=](const auto& c, auto v) { return std::vector{c.eq(prop_word(c, v[0], v[1]), c.zero_op())}; }));

    r.push_back(make(IdentityId::theorem, {"a", "b"}, kMultRha, false, "alpha^6((a,a,b)^4) = 0",
                     [](const auto& c, auto v) {
                         auto p = c.assoc(v[0], v[0], v[1]);
                         return std::vector{c.eq(c.shift(c.power(p, 4), 6), c.zero())};
                     }));

    r.push_back(make(IdentityId::mikheev_classical, {"a", "b"}, kMultRha, false, "(a,a,b)^4 = 0",
                     [](const auto& c, auto v) {
                         auto p = c.assoc(v[0], v[0], v[1]);
                         return std::vector{c.eq(c.power(p, 4), c.zero())};
                     }));

    return r;
}

}  // namespace

const std::vector<IdentityInstance>& registry() {
    static const std::vector<IdentityInstance> r = build_registry();
    return r;
}

const IdentityInstance& identity(IdentityId id) { return registry().at(static_cast<std::size_t>(id)); }

std::string_view tag(IdentityId id) {
    static constexpr std::string_view tags[] = {
        "xyy", "linearized", "teichmuller", "xyyz", "moufang", "beta2", "eq1", "eq2", "eq2p",
        "eq3a", "eq3b", "eq5", "eq5p", "eq6", "eq7", "eq8", "eq9", "eq10", "eq10p",
        "dpe", "d0", "e0", "prop", "theorem", "mikheev_classical",
    };
    return tags[static_cast<std::size_t>(id)];
}

std::optional<IdentityId> parse_identity(std::string_view t) {
    for (const auto& inst : registry())
        if (tag(inst.id) == t) return inst.id;
    return std::nullopt;
}

// ---------------------------------------------------------- evaluation

std::vector<Equation> evaluate(const IdentityInstance& inst, const HomAlgebra& A, std::span<const Element> inputs,
                               const Matrix* beta) {
    if (inputs.size() != inst.arity())
        throw Error(std::string(tag(inst.id)) + " takes " + std::to_string(inst.arity()) + " inputs");
    for (const auto& x : inputs) require_same_dim(A.dim(), x.dim(), "identity input");
    std::optional<HomAlgebra> twisted;
    const Matrix fallback = A.alpha();
    const Matrix* b = beta ? beta : &fallback;
    if (inst.id == IdentityId::beta2) twisted = yau_twist(A, *b);
    ExactContext ctx(A, b, twisted ? &*twisted : nullptr);
    return inst.exact(ctx, inputs);
}

int degree_bound(const IdentityInstance& inst, int mu_degree, int alpha_degree, int beta_degree) {
    DegreeContext ctx(mu_degree, alpha_degree, beta_degree);
    std::vector<DegreeContext::Elem> vars(inst.arity(), DegreeContext::Elem{1});
    int d = 0;
    for (const auto& eq : inst.degree(ctx, vars)) d = std::max({d, eq.lhs, eq.rhs});
    return d;
}

namespace {

struct Mismatch {
    std::size_t equation;
    std::optional<std::size_t> row;
    Element lhs, rhs;
};

std::optional<Mismatch> first_mismatch(const std::vector<Equation>& eqs) {
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        const auto& [l, r] = eqs[e];
        if (const auto* le = std::get_if<Element>(&l)) {
            const auto& re = std::get<Element>(r);
            if (*le != re) return Mismatch{e, std::nullopt, *le, re};
        } else {
            const auto& lo = std::get<RightOp>(l).matrix();
            const auto& ro = std::get<RightOp>(r).matrix();
            for (std::size_t i = 0; i < lo.dim(); ++i) {
                Element lr = lo.row(i), rr = ro.row(i);
                if (lr != rr) return Mismatch{e, i, std::move(lr), std::move(rr)};
            }
        }
    }
    return std::nullopt;
}

Witness to_witness(Mismatch m, std::vector<Element> inputs, Assignment point = {}) {
    Witness w;
    w.inputs = std::move(inputs);
    w.point = std::move(point);
    w.equation = m.equation;
    w.operator_row = m.row;
    w.lhs = std::move(m.lhs);
    w.rhs = std::move(m.rhs);
    return w;
}

// Prefix for generic coordinates of variable `var` that avoids the algebra's
// parameters and the other variables' prefixes.
std::string fresh_prefix(const HomAlgebra& A, const std::string& var) {
    std::string prefix = var;
    const auto clashes = [&](const std::string& p) {
        for (const auto& name : A.params())
            if (name.rfind(p + "_", 0) == 0) return true;
        return false;
    };
    while (clashes(prefix)) prefix += "_";
    return prefix;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

struct HypothesisCache {
    std::optional<CheckReport> multiplicative;
    std::optional<CheckReport> right_alt;
};

void check_hypotheses(const HomAlgebra& A, const IdentityInstance& inst, const Matrix& beta, HypothesisCache& cache) {
    if (inst.hypotheses & kMultiplicative) {
        if (!cache.multiplicative) cache.multiplicative = is_multiplicative(A);
        if (!cache.multiplicative->passed()) throw PreconditionError("algebra is not multiplicative");
    }
    if (inst.hypotheses & kRightHomAlternative) {
        if (!cache.right_alt) cache.right_alt = is_right_hom_alternative(A);
        if (!cache.right_alt->passed()) throw PreconditionError("algebra is not right Hom-alternative");
    }
    if (inst.hypotheses & kWeakMorphism) {
        if (!is_weak_morphism(A, A, beta).passed()) throw PreconditionError("beta is not a weak morphism of the algebra");
    }
}

std::set<std::string> matrix_variables(const Matrix& m) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            for (const auto& v : m(i, j).variables()) out.insert(v);
    return out;
}

CheckReport verify_impl(const HomAlgebra& A, const IdentityInstance& inst, const Strategy& strategy,
                        const VerifyOptions& options, HypothesisCache& cache) {
    const Matrix beta = options.beta ? *options.beta : A.alpha();
    require_same_dim(A.dim(), beta.dim(), "beta");
    if (options.enforce_hypotheses) check_hypotheses(A, inst, beta, cache);
    const bool needs_twist = inst.id == IdentityId::beta2;

    CheckReport report;
    report.id = std::string(tag(inst.id));
    report.strategy = strategy;
    const std::size_t n = A.dim();
    const std::size_t k = inst.arity();

    if (strategy.kind == StrategyKind::Basis || strategy.kind == StrategyKind::Generic ||
        strategy.kind == StrategyKind::Sweep) {
        std::optional<HomAlgebra> twisted;
        if (needs_twist) twisted = yau_twist(A, beta);
        ExactContext ctx(A, &beta, twisted ? &*twisted : nullptr);
        const auto run = [&](std::vector<Element> inputs) -> bool {
            ++report.evaluations;
            auto mismatch = first_mismatch(inst.exact(ctx, inputs));
            if (!mismatch) return true;
            report.status = Status::Fails;
            report.witness = to_witness(std::move(*mismatch), std::move(inputs));
            return false;
        };

        if (strategy.kind == StrategyKind::Generic) {
            std::vector<Element> inputs;
            std::vector<std::size_t> all(n);
            for (std::size_t i = 0; i < n; ++i) all[i] = i;
            for (const auto& var : inst.variables) inputs.push_back(generic_element_on(n, fresh_prefix(A, var), all));
            run(std::move(inputs));
            return report;
        }

        if (strategy.kind == StrategyKind::Basis) {
            if (!inst.multilinear)
                throw Error(report.id + " is not multilinear; the basis strategy does not decide it");
            std::vector<std::size_t> idx(k, 0);
            if (n == 0) return report;
            while (true) {
                std::vector<Element> inputs;
                for (auto i : idx) inputs.push_back(Element::basis(n, i));
                if (!run(std::move(inputs))) {
                    report.witness->basis = idx;
                    return report;
                }
                std::size_t pos = k;
                while (pos > 0 && idx[pos - 1] == n - 1) idx[--pos] = 0;
                if (pos == 0) break;
                ++idx[pos - 1];
            }
            return report;
        }

        // Sweep: all tuples of supports of size min(support, n). Smaller
        // supports are specializations of these, so they are covered too.
        const std::size_t s = std::min(strategy.support, n);
        report.strategy.support = s;
        const auto sets = subsets(n, s);
        double total = 1;
        for (std::size_t i = 0; i < k; ++i) total *= static_cast<double>(sets.size());
        if (total > static_cast<double>(options.max_sweep))
            throw Error("sweep over " + std::to_string(static_cast<long long>(total)) + " support tuples exceeds the limit");
        std::vector<std::string> prefixes;
        for (const auto& var : inst.variables) prefixes.push_back(fresh_prefix(A, var));
        std::vector<std::size_t> idx(k, 0);
        while (true) {
            std::vector<Element> inputs;
            for (std::size_t v = 0; v < k; ++v) inputs.push_back(generic_element_on(n, prefixes[v], sets[idx[v]]));
            if (!run(std::move(inputs))) {
                std::string supports;
                for (std::size_t v = 0; v < k; ++v) {
                    supports += (v ? " " : "") + inst.variables[v] + ":{";
                    for (std::size_t j = 0; j < sets[idx[v]].size(); ++j)
                        supports += (j ? "," : "") + std::to_string(sets[idx[v]][j]);
                    supports += "}";
                }
                report.note = "supports " + supports;
                return report;
            }
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == sets.size() - 1) idx[--pos] = 0;
            if (pos == 0) break;
            ++idx[pos - 1];
        }
        report.note = "complete for elements supported on at most " + std::to_string(s) + " basis vectors";
        return report;
    }

    // Random points: the algebra's parameters, beta's variables and every
    // input coordinate are drawn independently.
    std::set<std::string> params(A.params().begin(), A.params().end());
    if (needs_twist)
        for (const auto& v : matrix_variables(beta)) params.insert(v);
    report.strategy.degree_bound = degree_bound(inst, A.mu_degree(), A.alpha().max_degree(),
                                                needs_twist ? beta.max_degree() : 0);
    RandomPoints rng(strategy.seed);
    for (std::uint64_t point = 0; point < strategy.points; ++point) {
        Assignment assignment;
        for (const auto& p : params) assignment[p] = rng.next();
        const HomAlgebra At = assignment.empty() ? A : substitute(A, assignment);
        const Matrix bt = assignment.empty() ? beta : substitute(beta, assignment);
        std::optional<HomAlgebra> twisted;
        if (needs_twist) twisted = yau_twist(At, bt);
        std::vector<Element> inputs;
        for (std::size_t v = 0; v < k; ++v) {
            Element x(n);
            for (std::size_t i = 0; i < n; ++i) x[i] = Scalar(rng.next());
            inputs.push_back(std::move(x));
        }
        ExactContext ctx(At, &bt, twisted ? &*twisted : nullptr);
        ++report.evaluations;
        if (auto mismatch = first_mismatch(inst.exact(ctx, inputs))) {
            report.status = Status::Fails;
            report.witness = to_witness(std::move(*mismatch), std::move(inputs), std::move(assignment));
            return report;
        }
    }
    report.status = Status::RandomPass;
    return report;
}

}  // namespace

CheckReport verify(const HomAlgebra& A, IdentityId id, const Strategy& strategy, const VerifyOptions& options) {
    HypothesisCache cache;
    return verify_impl(A, identity(id), strategy, options, cache);
}

std::vector<CheckReport> verify_all(const HomAlgebra& A, const std::function<Strategy(const IdentityInstance&)>& choose,
                                    const VerifyOptions& options) {
    HypothesisCache cache;
    std::vector<CheckReport> out;
    for (const auto& inst : registry()) {
        const Strategy strategy = choose(inst);
        try {
            out.push_back(verify_impl(A, inst, strategy, options, cache));
        } catch (const Error& e) {
            CheckReport refused;
            refused.id = std::string(tag(inst.id));
            refused.status = Status::Refused;
            refused.strategy = strategy;
            refused.note = e.what();
            out.push_back(std::move(refused));
        }
    }
    return out;
}

std::vector<CheckReport> verify_all(const HomAlgebra& A, const Strategy& strategy, const VerifyOptions& options) {
    return verify_all(A, [&](const IdentityInstance&) { return strategy; }, options);
}

Element replay(const HomAlgebra& A, IdentityId id, const Witness& witness, const VerifyOptions& options) {
    const HomAlgebra At = witness.point.empty() ? A : substitute(A, witness.point);
    Matrix beta = options.beta ? *options.beta : A.alpha();
    if (!witness.point.empty()) beta = substitute(beta, witness.point);
    const auto eqs = evaluate(identity(id), At, witness.inputs, &beta);
    if (witness.equation >= eqs.size()) throw Error("witness names a missing equation");
    const auto& [l, r] = eqs[witness.equation];
    if (const auto* le = std::get_if<Element>(&l)) return *le - std::get<Element>(r);
    if (!witness.operator_row) throw Error("operator witness without a row");
    const std::size_t row = *witness.operator_row;
    return std::get<RightOp>(l).matrix().row(row) - std::get<RightOp>(r).matrix().row(row);
}

std::optional<std::size_t> smallest_alpha_exponent(const HomAlgebra& A, const Element& a, const Element& b,
                                                   std::size_t max_m) {
    Element q = hom_power(A, hom_associator(A, a, a, b), 4);
    for (std::size_t m = 0; m <= max_m; ++m) {
        if (q.is_zero()) return m;
        q = twist_apply(A, q);
    }
    return std::nullopt;
}

}  // namespace homalt
