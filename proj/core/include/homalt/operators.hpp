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

#include <cstddef>
#include <initializer_list>

namespace homalt {

/// Linear operator acting on elements from the right.
///
/// Composition is written left to right: compose(M, N) first applies M,
/// then N, so apply(x, compose(M, N)) == apply(apply(x, M), N). Juxtaposed
/// operator words such as a' b_1' alpha^2 translate to compose(a', b_1', alpha^2)
/// in the same order they are written.
class RightOp {
public:
    RightOp() = default;
    explicit RightOp(Matrix m) : matrix_(std::move(m)) {}

    static RightOp identity(std::size_t dim) { return RightOp(Matrix::identity(dim)); }
    static RightOp zero(std::size_t dim) { return RightOp(Matrix(dim)); }

    const Matrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.dim(); }
    bool is_zero() const { return matrix_.is_zero(); }

    friend bool operator==(const RightOp&, const RightOp&) = default;

private:
    Matrix matrix_;
};

Element apply(const Element& x, const RightOp& op);
RightOp compose(const RightOp& first, const RightOp& second);
RightOp compose(std::initializer_list<RightOp> ops);
RightOp op_add(const RightOp& a, const RightOp& b);
RightOp op_difference(const RightOp& a, const RightOp& b);
RightOp op_neg(const RightOp& a);

/// a': x -> xa.
RightOp right_mul_op(const HomAlgebra& A, const Element& a);
/// alpha^n as a right operator.
RightOp alpha_op(const HomAlgebra& A, std::size_t n);
/// a^b = alpha (ab)' - a' b_1', so x a^b = alpha(x)(ab) - (xa) alpha(b) = -(x,a,b).
RightOp op_sup(const HomAlgebra& A, const Element& a, const Element& b);
/// a_b = alpha (ab)' - b' a_1', so x a_b = alpha(x)(ab) - (xb) alpha(a).
RightOp op_sub(const HomAlgebra& A, const Element& a, const Element& b);

}  // namespace homalt
