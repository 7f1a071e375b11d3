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

#include <homalt/operators.hpp>

namespace homalt {

Element apply(const Element& x, const RightOp& op) { return op.matrix().apply(x); }

RightOp compose(const RightOp& first, const RightOp& second) { return RightOp(first.matrix() * second.matrix()); }

RightOp compose(std::initializer_list<RightOp> ops) {
    if (ops.size() == 0) throw Error("compose needs at least one operator");
    auto it = ops.begin();
    Matrix m = it->matrix();
    for (++it; it != ops.end(); ++it) m = m * it->matrix();
    return RightOp(std::move(m));
}

RightOp op_add(const RightOp& a, const RightOp& b) { return RightOp(a.matrix() + b.matrix()); }
RightOp op_difference(const RightOp& a, const RightOp& b) { return RightOp(a.matrix() - b.matrix()); }
RightOp op_neg(const RightOp& a) { return RightOp(-a.matrix()); }

RightOp right_mul_op(const HomAlgebra& A, const Element& a) {
    require_same_dim(A.dim(), a.dim(), "right_mul_op");
    const std::size_t n = A.dim();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a[j].is_zero()) continue;
            for (const auto& t : A.product(i, j)) m(i, t.index) += a[j] * t.coeff;
        }
    return RightOp(std::move(m));
}

RightOp alpha_op(const HomAlgebra& A, std::size_t n) { return RightOp(A.alpha().pow(n)); }

RightOp op_sup(const HomAlgebra& A, const Element& a, const Element& b) {
    return op_difference(compose(alpha_op(A, 1), right_mul_op(A, mul(A, a, b))),
                         compose(right_mul_op(A, a), right_mul_op(A, twist_apply(A, b))));
}

RightOp op_sub(const HomAlgebra& A, const Element& a, const Element& b) {
    return op_difference(compose(alpha_op(A, 1), right_mul_op(A, mul(A, a, b))),
                         compose(right_mul_op(A, b), right_mul_op(A, twist_apply(A, a))));
}

}  // namespace homalt
