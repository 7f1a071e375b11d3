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

#pragma once

#include <homalt/homalgebra.hpp>
#include <homalt/operators.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace homalt {

/// Identities of multiplicative right Hom-alternative algebras, from the
/// linearized right alternative law up to alpha^6((a,a,b)^4) = 0.
enum class IdentityId {
    xyy,
    linearized,
    teichmuller,
    xyyz,
    moufang,
    beta2,
    eq1,
    eq2,
    eq2p,
    eq3a,
    eq3b,
    eq5,
    eq5p,
    eq6,
    eq7,
    eq8,
    eq9,
    eq10,
    eq10p,
    dpe,
    d0,
    e0,
    prop,
    theorem,
    mikheev_classical,
};

std::string_view tag(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view tag);

/// Hypotheses an identity needs before a failure means anything.
enum Hypothesis : unsigned {
    kNoHypothesis = 0,
    kMultiplicative = 1u << 0,
    kRightHomAlternative = 1u << 1,
    kWeakMorphism = 1u << 2,  ///< the supplied beta is a weak morphism of A
};

/// Thrown by verify() when the algebra is outside the identity's hypotheses.
class PreconditionError : public Error {
public:
    using Error::Error;
};

using Value = std::variant<Element, RightOp>;

struct Equation {
    Value lhs;
    Value rhs;
};

/// Evaluation of identity sides over a concrete algebra.
///
/// `twisted` and `beta` are only consulted by the beta2 identity.
class ExactContext {
public:
    using Elem = Element;
    using Op = RightOp;
    using Eq = Equation;

    explicit ExactContext(const HomAlgebra& A, const Matrix* beta = nullptr, const HomAlgebra* twisted = nullptr)
        : A_(A), beta_(beta), twisted_(twisted) {}

    const HomAlgebra& algebra() const { return A_; }

    Elem mul(const Elem& x, const Elem& y) const { return homalt::mul(A_, x, y); }
    Elem shift(const Elem& x, std::size_t n = 1) const { return homalt::shift(A_, x, n); }
    Elem assoc(const Elem& x, const Elem& y, const Elem& z) const { return hom_associator(A_, x, y, z); }
    Elem power(const Elem& x, std::size_t n) const { return hom_power(A_, x, n); }
    Elem comm(const Elem& x, const Elem& y) const { return commutator(A_, x, y); }
    Elem add(const Elem& x, const Elem& y) const { return x + y; }
    Elem minus(const Elem& x, const Elem& y) const { return x - y; }
    Elem neg(const Elem& x) const { return -x; }
    Elem zero() const { return Element(A_.dim()); }
    Elem beta(const Elem& x, std::size_t n) const;
    Elem twisted_assoc(const Elem& x, const Elem& y, const Elem& z) const;

    Op rmul(const Elem& a) const { return right_mul_op(A_, a); }
    Op sup(const Elem& a, const Elem& b) const { return op_sup(A_, a, b); }
    Op sub(const Elem& a, const Elem& b) const { return op_sub(A_, a, b); }
    Op alpha(std::size_t n) const { return alpha_op(A_, n); }
    template <class... Rest>
    Op compose(const Op& first, const Rest&... rest) const {
        Op out = first;
        ((out = homalt::compose(out, rest)), ...);
        return out;
    }
    Op add(const Op& x, const Op& y) const { return op_add(x, y); }
    Op minus(const Op& x, const Op& y) const { return op_difference(x, y); }
    Op neg(const Op& x) const { return op_neg(x); }
    Op zero_op() const { return RightOp::zero(A_.dim()); }
    Elem apply(const Elem& x, const Op& op) const { return homalt::apply(x, op); }

    Eq eq(Elem l, Elem r) const { return {std::move(l), std::move(r)}; }
    Eq eq(Op l, Op r) const { return {std::move(l), std::move(r)}; }

private:
    const HomAlgebra& A_;
    const Matrix* beta_;
    const HomAlgebra* twisted_;
};

/// Total-degree bounds of identity sides, with (max, +) in place of (+, *).
/// Variables have degree 1; each product adds the degree of the structure
/// constants, each twist the degree of the twisting map.
class DegreeContext {
public:
    struct Elem { int d; };
    struct Op { int d; };
    struct Eq { int lhs, rhs; };
    static constexpr int kZero = -1'000'000;

    DegreeContext(int mu, int alpha, int beta) : mu_(std::max(mu, 0)), al_(std::max(alpha, 0)), be_(std::max(beta, 0)) {}

    Elem mul(Elem x, Elem y) const { return {x.d + y.d + mu_}; }
    Elem shift(Elem x, std::size_t n = 1) const { return {x.d + static_cast<int>(n) * al_}; }
    Elem assoc(Elem x, Elem y, Elem z) const { return {x.d + y.d + z.d + 2 * mu_ + al_}; }
    Elem power(Elem x, std::size_t n) const;
    Elem comm(Elem x, Elem y) const { return mul(x, y); }
    Elem add(Elem x, Elem y) const { return {std::max(x.d, y.d)}; }
    Elem minus(Elem x, Elem y) const { return add(x, y); }
    Elem neg(Elem x) const { return x; }
    Elem zero() const { return {kZero}; }
    Elem beta(Elem x, std::size_t n) const { return {x.d + static_cast<int>(n) * be_}; }
    Elem twisted_assoc(Elem x, Elem y, Elem z) const { return {x.d + y.d + z.d + 2 * (mu_ + be_) + al_ + be_}; }

    Op rmul(Elem a) const { return {a.d + mu_}; }
    Op sup(Elem a, Elem b) const { return {a.d + b.d + 2 * mu_ + al_}; }
    Op sub(Elem a, Elem b) const { return sup(a, b); }
    Op alpha(std::size_t n) const { return {static_cast<int>(n) * al_}; }
    template <class... Rest>
    Op compose(Op first, Rest... rest) const { return {(first.d + ... + rest.d)}; }
    Op add(Op x, Op y) const { return {std::max(x.d, y.d)}; }
    Op minus(Op x, Op y) const { return add(x, y); }
    Op neg(Op x) const { return x; }
    Op zero_op() const { return {kZero}; }
    Elem apply(Elem x, Op op) const { return {x.d + op.d}; }

    Eq eq(Elem l, Elem r) const { return {l.d, r.d}; }
    Eq eq(Op l, Op r) const { return {l.d, r.d}; }

private:
    int mu_, al_, be_;
};

/// One registry entry: an equation (or a short list of equations) between
/// elements or right operators in the free variables.
struct IdentityInstance {
    IdentityId id;
    std::vector<std::string> variables;
    unsigned hypotheses = kNoHypothesis;
    /// Linear in each variable separately, so basis tuples decide it.
    bool multilinear = false;
    std::string formula;

    std::function<std::vector<Equation>(const ExactContext&, std::span<const Element>)> exact;
    std::function<std::vector<DegreeContext::Eq>(const DegreeContext&, std::span<const DegreeContext::Elem>)> degree;

    std::size_t arity() const { return variables.size(); }
};

/// All 25 identities in a stable order.
const std::vector<IdentityInstance>& registry();
const IdentityInstance& identity(IdentityId id);

/// Evaluates both sides of every equation of `id` at `inputs`.
std::vector<Equation> evaluate(const IdentityInstance& id, const HomAlgebra& A, std::span<const Element> inputs,
                               const Matrix* beta = nullptr);

/// Total-degree bound of the equations' sides in all variables (the algebra's
/// parameters and the inputs' coordinates) for an algebra with these
/// structure-constant degrees.
int degree_bound(const IdentityInstance& id, int mu_degree, int alpha_degree, int beta_degree = 0);

struct VerifyOptions {
    /// Weak morphism for beta2. Defaults to the algebra's own twisting map.
    std::optional<Matrix> beta;
    /// Largest number of support tuples a sweep may visit.
    std::size_t max_sweep = 2'000'000;
    /// When false, identities are evaluated outside their hypothesis class,
    /// where failures are expected and carry ordinary witnesses.
    bool enforce_hypotheses = true;
};

/// Checks one identity. Throws PreconditionError when the algebra is outside
/// the identity's hypotheses, homalt::Error for an unusable strategy.
CheckReport verify(const HomAlgebra& A, IdentityId id, const Strategy& strategy, const VerifyOptions& options = {});

/// Runs the registry in order. Precondition violations and strategy errors are
/// recorded as Refused reports; the batch always completes.
std::vector<CheckReport> verify_all(const HomAlgebra& A, const Strategy& strategy, const VerifyOptions& options = {});
std::vector<CheckReport> verify_all(const HomAlgebra& A,
                                    const std::function<Strategy(const IdentityInstance&)>& choose,
                                    const VerifyOptions& options = {});

/// Re-evaluates a failing report of `id` and returns lhs - rhs at the witness.
Element replay(const HomAlgebra& A, IdentityId id, const Witness& witness, const VerifyOptions& options = {});

/// Least m <= max_m with alpha^m((a,a,b)^4) = 0.
std::optional<std::size_t> smallest_alpha_exponent(const HomAlgebra& A, const Element& a, const Element& b,
                                                   std::size_t max_m);

}  // namespace homalt
