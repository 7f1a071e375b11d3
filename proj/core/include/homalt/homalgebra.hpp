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

#include <homalt/linear.hpp>
#include <homalt/report.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homalt {

/// One structure constant: e_i e_j contains `coeff` e_index.
struct ProductTerm {
    std::size_t index;
    Scalar coeff;
    friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

/// A finite-dimensional Hom-algebra (A, mu, alpha) given by structure
/// constants over Q or a polynomial extension of Q in `params()`.
///
/// The product table is sparse: each basis pair stores its non-zero result
/// coordinates sorted by index. Absent pairs multiply to zero.
class HomAlgebra {
public:
    static constexpr std::size_t kMaxDim = 64;

    HomAlgebra() = default;
    /// Zero multiplication, identity twist. Throws when dim > kMaxDim.
    explicit HomAlgebra(std::size_t dim, std::vector<std::string> params = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& params() const { return params_; }
    void add_param(const std::string& name);

    const std::vector<ProductTerm>& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    /// e_i e_j as an element.
    Element basis_product(std::size_t i, std::size_t j) const;
    /// Replaces e_i e_j.
    void set_product(std::size_t i, std::size_t j, const Element& value);
    /// Number of basis pairs with a non-zero product.
    std::size_t nonzero_products() const;

    const Matrix& alpha() const { return alpha_; }
    void set_alpha(Matrix alpha);

    /// Largest total degree of a structure constant; -1 when mu = 0.
    int mu_degree() const;

    friend bool operator==(const HomAlgebra&, const HomAlgebra&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> params_;
    std::vector<std::vector<ProductTerm>> table_;
    Matrix alpha_;
};

/// Specializes parameters; assigned names are dropped from params().
HomAlgebra substitute(const HomAlgebra& A, const Assignment& assignment);

/// Same multiplication with the twisting map replaced.
HomAlgebra with_twist(const HomAlgebra& A, Matrix alpha);

Element mul(const HomAlgebra& A, const Element& x, const Element& y);
/// alpha(x).
Element twist_apply(const HomAlgebra& A, const Element& x);
/// alpha^n(x); shift(x, 0) = x.
Element shift(const HomAlgebra& A, const Element& x, std::size_t n);
/// (xy) alpha(z) - alpha(x) (yz).
Element hom_associator(const HomAlgebra& A, const Element& x, const Element& y, const Element& z);
/// x^1 = x, x^n = x^{n-1} alpha^{n-2}(x). Throws for n < 1.
Element hom_power(const HomAlgebra& A, const Element& x, std::size_t n);
Element commutator(const HomAlgebra& A, const Element& x, const Element& y);

/// alpha(e_i e_j) = alpha(e_i) alpha(e_j) on all basis pairs.
CheckReport is_multiplicative(const HomAlgebra& A);

/// (x,y,y) = 0, checked on basis pairs (x,y,y) and then on the linearized
/// form (x,y,z) + (x,z,y) for y < z. Together these cover all dim^3 triples.
CheckReport is_right_hom_alternative(const HomAlgebra& A);
/// (x,x,y) = 0, mirrored: pairs (x,x,y) then (x,y,z) + (y,x,z) for x < y.
CheckReport is_left_hom_alternative(const HomAlgebra& A);

/// f mu_A = mu_B (f x f) on basis pairs.
CheckReport is_weak_morphism(const HomAlgebra& A, const HomAlgebra& B, const Matrix& f);
/// Weak morphism that also satisfies f alpha_A = alpha_B f.
CheckReport is_morphism(const HomAlgebra& A, const HomAlgebra& B, const Matrix& f);

/// Adjoins indeterminates prefix_1 .. prefix_dim and returns the element
/// with those coordinates. Throws when any of the names is already a parameter.
std::pair<HomAlgebra, Element> generic_element(const HomAlgebra& A, std::string_view prefix);
/// Generic on a subset of coordinates only; the others are zero. Does not
/// extend A.
Element generic_element_on(std::size_t dim, std::string_view prefix, const std::vector<std::size_t>& support);

/// Yau twist (A, beta mu, beta alpha). Throws when beta is not a weak morphism
/// of A. Variables of beta not yet declared become parameters (sorted).
HomAlgebra yau_twist(const HomAlgebra& A, const Matrix& beta);

/// Least n in [2, nmax] with x^n = 0 for non-zero x.
std::optional<std::size_t> is_hom_nilpotent(const HomAlgebra& A, const Element& x, std::size_t nmax);

/// Basis indices i with e_i e_j = 0 for some j. Sound, not complete.
std::vector<std::size_t> basis_left_zero_divisors(const HomAlgebra& A);

/// Re-evaluates a structural check witness (right-alt, left-alt,
/// multiplicative, weak-morphism, morphism) and returns lhs - rhs.
/// `B` and `f` are needed for the morphism checks.
Element replay_structural(const CheckReport& report, const HomAlgebra& A, const HomAlgebra* B = nullptr,
                          const Matrix* f = nullptr);

}  // namespace homalt
