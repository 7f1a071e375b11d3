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

#include <homalt/homalgebra.hpp>

#include <algorithm>
#include <set>

namespace homalt {

const char* to_string(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::RandomPass: return "random-pass";
        case Status::Refused: return "refused";
    }
    return "?";
}

const char* to_string(StrategyKind k) {
    switch (k) {
        case StrategyKind::Basis: return "basis";
        case StrategyKind::Generic: return "generic";
        case StrategyKind::Random: return "random";
        case StrategyKind::Sweep: return "sweep";
    }
    return "?";
}

// -------------------------------------------------------------- HomAlgebra

HomAlgebra::HomAlgebra(std::size_t dim, std::vector<std::string> params)
    : dim_(dim), table_(dim * dim), alpha_(Matrix::identity(dim)) {
    if (dim > kMaxDim)
        throw Error("dimension " + std::to_string(dim) + " exceeds the cap of " + std::to_string(kMaxDim));
    for (auto& p : params) add_param(p);
}

void HomAlgebra::add_param(const std::string& name) {
    if (!Variables::valid_name(name)) throw Error("invalid parameter name \"" + name + "\"");
    if (std::find(params_.begin(), params_.end(), name) != params_.end())
        throw Error("duplicate parameter \"" + name + "\"");
    params_.push_back(name);
}

Element HomAlgebra::basis_product(std::size_t i, std::size_t j) const {
    Element out(dim_);
    for (const auto& t : product(i, j)) out[t.index] = t.coeff;
    return out;
}

void HomAlgebra::set_product(std::size_t i, std::size_t j, const Element& value) {
    if (i >= dim_ || j >= dim_) throw Error("index out of range");
    require_same_dim(dim_, value.dim(), "set_product");
    auto& slot = table_[i * dim_ + j];
    slot.clear();
    for (std::size_t k = 0; k < dim_; ++k)
        if (!value[k].is_zero()) slot.push_back({k, value[k]});
}

std::size_t HomAlgebra::nonzero_products() const {
    return static_cast<std::size_t>(
        std::count_if(table_.begin(), table_.end(), [](const auto& slot) { return !slot.empty(); }));
}

void HomAlgebra::set_alpha(Matrix alpha) {
    require_same_dim(dim_, alpha.dim(), "set_alpha");
    alpha_ = std::move(alpha);
}

int HomAlgebra::mu_degree() const {
    int d = -1;
    for (const auto& slot : table_)
        for (const auto& t : slot) d = std::max(d, t.coeff.total_degree());
    return d;
}

HomAlgebra substitute(const HomAlgebra& A, const Assignment& assignment) {
    std::vector<std::string> params;
    for (const auto& p : A.params())
        if (!assignment.contains(p)) params.push_back(p);
    HomAlgebra out(A.dim(), params);
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            if (!A.product(i, j).empty()) out.set_product(i, j, substitute(A.basis_product(i, j), assignment));
    out.set_alpha(substitute(A.alpha(), assignment));
    return out;
}

HomAlgebra with_twist(const HomAlgebra& A, Matrix alpha) {
    HomAlgebra out = A;
    out.set_alpha(std::move(alpha));
    return out;
}

// -------------------------------------------------------------- operations

Element mul(const HomAlgebra& A, const Element& x, const Element& y) {
    require_same_dim(A.dim(), x.dim(), "mul");
    require_same_dim(A.dim(), y.dim(), "mul");
    const std::size_t n = A.dim();
    Element out(n);
    const auto ys = y.support();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j : ys) {
            const auto& terms = A.product(i, j);
            if (terms.empty()) continue;
            const Scalar xy = x[i] * y[j];
            for (const auto& t : terms) out[t.index] += xy * t.coeff;
        }
    }
    return out;
}

Element twist_apply(const HomAlgebra& A, const Element& x) { return A.alpha().apply(x); }

Element shift(const HomAlgebra& A, const Element& x, std::size_t n) {
    require_same_dim(A.dim(), x.dim(), "shift");
    Element out = x;
    for (std::size_t k = 0; k < n && !out.is_zero(); ++k) out = A.alpha().apply(out);
    return out;
}

Element hom_associator(const HomAlgebra& A, const Element& x, const Element& y, const Element& z) {
    return mul(A, mul(A, x, y), twist_apply(A, z)) - mul(A, twist_apply(A, x), mul(A, y, z));
}

Element hom_power(const HomAlgebra& A, const Element& x, std::size_t n) {
    if (n < 1) throw Error("Hom-power exponent must be at least 1");
    Element power = x;
    Element shifted = x;  // alpha^{k-2}(x) for the k-th step
    for (std::size_t k = 2; k <= n; ++k) {
        if (k > 2) shifted = twist_apply(A, shifted);
        power = mul(A, power, shifted);
    }
    return power;
}

Element commutator(const HomAlgebra& A, const Element& x, const Element& y) {
    return mul(A, x, y) - mul(A, y, x);
}

// ---------------------------------------------------------- basis checks

namespace {

CheckReport fail(std::string id, std::vector<std::size_t> basis, Element lhs, Element rhs, std::size_t evals) {
    CheckReport r;
    r.id = std::move(id);
    r.status = Status::Fails;
    r.evaluations = evals;
    Witness w;
    w.basis = std::move(basis);
    w.lhs = std::move(lhs);
    w.rhs = std::move(rhs);
    r.witness = std::move(w);
    return r;
}

CheckReport holds(std::string id, std::size_t evals) {
    CheckReport r;
    r.id = std::move(id);
    r.evaluations = evals;
    return r;
}

Element e(const HomAlgebra& A, std::size_t i) { return Element::basis(A.dim(), i); }

}  // namespace

CheckReport is_multiplicative(const HomAlgebra& A) {
    const std::size_t n = A.dim();
    std::vector<Element> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(A.alpha().row(i));
    std::size_t evals = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ++evals;
            Element lhs = twist_apply(A, A.basis_product(i, j));
            Element rhs = mul(A, images[i], images[j]);
            if (lhs != rhs) return fail("multiplicative", {i, j}, std::move(lhs), std::move(rhs), evals);
        }
    return holds("multiplicative", evals);
}

CheckReport is_right_hom_alternative(const HomAlgebra& A) {
    const std::size_t n = A.dim();
    std::size_t evals = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ++evals;
            // (xy)alpha(y) against alpha(x)(yy), kept apart so the witness shows both sides.
            Element lhs = mul(A, A.basis_product(i, j), twist_apply(A, e(A, j)));
            Element rhs = mul(A, twist_apply(A, e(A, i)), A.basis_product(j, j));
            if (lhs != rhs) return fail("right-alt", {i, j, j}, std::move(lhs), std::move(rhs), evals);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                ++evals;
                Element lhs = hom_associator(A, e(A, i), e(A, j), e(A, k));
                Element rhs = -hom_associator(A, e(A, i), e(A, k), e(A, j));
                if (lhs != rhs) return fail("right-alt", {i, j, k}, std::move(lhs), std::move(rhs), evals);
            }
    return holds("right-alt", evals);
}

CheckReport is_left_hom_alternative(const HomAlgebra& A) {
    const std::size_t n = A.dim();
    std::size_t evals = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ++evals;
            Element lhs = mul(A, A.basis_product(i, i), twist_apply(A, e(A, j)));
            Element rhs = mul(A, twist_apply(A, e(A, i)), A.basis_product(i, j));
            if (lhs != rhs) return fail("left-alt", {i, i, j}, std::move(lhs), std::move(rhs), evals);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                ++evals;
                Element lhs = hom_associator(A, e(A, i), e(A, j), e(A, k));
                Element rhs = -hom_associator(A, e(A, j), e(A, i), e(A, k));
                if (lhs != rhs) return fail("left-alt", {i, j, k}, std::move(lhs), std::move(rhs), evals);
            }
    return holds("left-alt", evals);
}

CheckReport is_weak_morphism(const HomAlgebra& A, const HomAlgebra& B, const Matrix& f) {
    require_same_dim(A.dim(), B.dim(), "is_weak_morphism");
    require_same_dim(A.dim(), f.dim(), "is_weak_morphism");
    const std::size_t n = A.dim();
    std::vector<Element> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(f.row(i));
    std::size_t evals = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ++evals;
            Element lhs = f.apply(A.basis_product(i, j));
            Element rhs = mul(B, images[i], images[j]);
            if (lhs != rhs) return fail("weak-morphism", {i, j}, std::move(lhs), std::move(rhs), evals);
        }
    return holds("weak-morphism", evals);
}

CheckReport is_morphism(const HomAlgebra& A, const HomAlgebra& B, const Matrix& f) {
    CheckReport weak = is_weak_morphism(A, B, f);
    if (!weak.passed()) {
        weak.id = "morphism";
        return weak;
    }
    std::size_t evals = weak.evaluations;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        ++evals;
        Element lhs = f.apply(A.alpha().row(i));
        Element rhs = B.alpha().apply(f.row(i));
        if (lhs != rhs) return fail("morphism", {i}, std::move(lhs), std::move(rhs), evals);
    }
    return holds("morphism", evals);
}

Element replay_structural(const CheckReport& report, const HomAlgebra& A, const HomAlgebra* B, const Matrix* f) {
    if (!report.witness) throw Error("report has no witness");
    const auto& idx = report.witness->basis;
    const auto need = [&](std::size_t k) {
        if (idx.size() != k) throw Error("witness has wrong arity for " + report.id);
    };
    if (report.id == "right-alt") {
        need(3);
        Element lhs = hom_associator(A, e(A, idx[0]), e(A, idx[1]), e(A, idx[2]));
        if (idx[1] == idx[2]) return lhs;
        return lhs + hom_associator(A, e(A, idx[0]), e(A, idx[2]), e(A, idx[1]));
    }
    if (report.id == "left-alt") {
        need(3);
        Element lhs = hom_associator(A, e(A, idx[0]), e(A, idx[1]), e(A, idx[2]));
        if (idx[0] == idx[1]) return lhs;
        return lhs + hom_associator(A, e(A, idx[1]), e(A, idx[0]), e(A, idx[2]));
    }
    if (report.id == "multiplicative") {
        need(2);
        return twist_apply(A, A.basis_product(idx[0], idx[1])) -
               mul(A, A.alpha().row(idx[0]), A.alpha().row(idx[1]));
    }
    if (report.id == "weak-morphism" || report.id == "morphism") {
        if (B == nullptr || f == nullptr) throw Error("morphism replay needs the target and the map");
        if (idx.size() == 2) return f->apply(A.basis_product(idx[0], idx[1])) - mul(*B, f->row(idx[0]), f->row(idx[1]));
        need(1);
        return f->apply(A.alpha().row(idx[0])) - B->alpha().apply(f->row(idx[0]));
    }
    throw Error("not a structural check: " + report.id);
}

// --------------------------------------------------------- constructions

std::pair<HomAlgebra, Element> generic_element(const HomAlgebra& A, std::string_view prefix) {
    HomAlgebra extended = A;
    Element x(A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i) {
        const std::string name = std::string(prefix) + "_" + std::to_string(i + 1);
        if (std::find(A.params().begin(), A.params().end(), name) != A.params().end())
            throw Error("name collision: \"" + name + "\" is already a parameter");
        extended.add_param(name);
        x[i] = Scalar::variable(name);
    }
    return {std::move(extended), std::move(x)};
}

Element generic_element_on(std::size_t dim, std::string_view prefix, const std::vector<std::size_t>& support) {
    Element x(dim);
    for (std::size_t i : support) {
        if (i >= dim) throw Error("support index out of range");
        x[i] = Scalar::variable(std::string(prefix) + "_" + std::to_string(i + 1));
    }
    return x;
}

HomAlgebra yau_twist(const HomAlgebra& A, const Matrix& beta) {
    require_same_dim(A.dim(), beta.dim(), "yau_twist");
    if (!is_weak_morphism(A, A, beta).passed()) throw Error("twisting map is not a weak morphism");
    HomAlgebra out(A.dim(), A.params());
    std::set<std::string> extra;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (const auto& v : beta(i, j).variables()) extra.insert(v);
    for (const auto& v : extra)
        if (std::find(out.params().begin(), out.params().end(), v) == out.params().end()) out.add_param(v);
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            if (!A.product(i, j).empty()) out.set_product(i, j, beta.apply(A.basis_product(i, j)));
    // beta after alpha, in the row-vector convention.
    out.set_alpha(A.alpha() * beta);
    return out;
}

std::optional<std::size_t> is_hom_nilpotent(const HomAlgebra& A, const Element& x, std::size_t nmax) {
    if (nmax < 2) throw Error("nmax must be at least 2");
    if (x.is_zero()) return std::nullopt;
    Element power = x, shifted = x;
    for (std::size_t n = 2; n <= nmax; ++n) {
        if (n > 2) shifted = twist_apply(A, shifted);
        power = mul(A, power, shifted);
        if (power.is_zero()) return n;
    }
    return std::nullopt;
}

std::vector<std::size_t> basis_left_zero_divisors(const HomAlgebra& A) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            if (A.product(i, j).empty()) {
                out.push_back(i);
                break;
            }
    return out;
}

}  // namespace homalt
