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

#include <homalt/catalog.hpp>

#include <algorithm>
#include <set>

namespace homalt::catalog {

FamilyParams FamilyParams::rational(const Rational& lambda, const Rational& xi) {
    const bool ok = !lambda.is_zero() && !xi.is_zero() && lambda != xi;
    return {Scalar(lambda), Scalar(xi), ok ? Validity::Certified : Validity::Violated};
}

FamilyParams FamilyParams::symbolic() {
    return {Scalar::variable("lambda"), Scalar::variable("xi"), Validity::Assumed};
}

namespace {

struct BasisProduct {
    int left, right;                            // 1-based, as printed
    std::vector<std::pair<int, long>> result;   // (1-based index, coefficient)
};

// The non-zero products among e_1..e_13.
const std::vector<BasisProduct>& mikheev_table() {
    static const std::vector<BasisProduct> table = {
        {1, 1, {{3, 1}}},
        {1, 2, {{4, 1}}},
        {1, 3, {{5, 1}}},
        {1, 4, {{8, 1}}},
        {1, 6, {{9, 1}}},
        {1, 7, {{12, 1}}},
        {1, 9, {{12, 1}}},
        {1, 10, {{11, 1}}},
        {2, 1, {{6, 1}}},
        {2, 3, {{10, 1}}},
        {3, 1, {{5, 1}}},
        {3, 2, {{7, 1}}},
        {3, 6, {{11, 1}, {12, 1}}},
        {4, 1, {{7, -1}, {8, 1}, {9, 1}}},
        {5, 2, {{11, 1}, {12, 1}}},
        {6, 1, {{10, 1}}},
        {8, 7, {{13, 1}}},
        {8, 9, {{13, 1}}},
        {8, 10, {{13, -1}}},
        {9, 7, {{13, -1}}},
        {9, 9, {{13, -1}}},
        {9, 10, {{13, 1}}},
        {11, 4, {{13, 1}}},
        {11, 6, {{13, -1}}},
        {12, 4, {{13, -1}}},
        {12, 6, {{13, 1}}},
    };
    return table;
}

}  // namespace

HomAlgebra mikheev_algebra() {
    constexpr std::size_t n = 13;
    HomAlgebra A(n);
    for (const auto& p : mikheev_table()) {
        Element value(n);
        for (const auto& [k, c] : p.result) value[static_cast<std::size_t>(k - 1)] = Scalar(c);
        A.set_product(static_cast<std::size_t>(p.left - 1), static_cast<std::size_t>(p.right - 1), value);
    }
    return A;
}

Matrix mikheev_morphism(const FamilyParams& p) {
    const Scalar& l = p.lambda;
    const Scalar& x = p.xi;
    const Scalar l2 = l * l, l3 = l2 * l;
    return Matrix::diagonal({
        l, x, l2, l * x, l3, l * x,
        l2 * x, l2 * x, l2 * x, l2 * x,
        l3 * x, l3 * x,
        l2 * l2 * x * x,
    });
}

HomAlgebra mikheev_family(const FamilyParams& p) { return yau_twist(mikheev_algebra(), mikheev_morphism(p)); }

bool family_nonisomorphism_condition(const Rational& lambda, const Rational& xi, const Rational& lambda2,
                                     const Rational& xi2) {
    if (lambda.is_zero() || xi.is_zero() || lambda2.is_zero() || xi2.is_zero())
        throw Error("family parameters must be non-zero");
    const auto products = [](const Rational& l, const Rational& x) {
        std::set<Rational> out;
        for (long r = 0; r <= 4; ++r)
            for (long s = 0; s <= 2; ++s) out.insert(l.pow(r) * x.pow(s));
        return out;
    };
    const auto primed = products(lambda2, xi2);
    const auto unprimed = products(lambda, xi);
    return !primed.contains(lambda) || !primed.contains(xi) || !unprimed.contains(lambda2) ||
           !unprimed.contains(xi2);
}

bool spectrum_certificate(const HomAlgebra& A, const HomAlgebra& B) {
    const auto spectrum = [](const HomAlgebra& H) {
        if (!H.alpha().is_diagonal()) throw Error("spectrum certificate needs a diagonal twisting map");
        std::vector<Rational> out;
        for (std::size_t i = 0; i < H.dim(); ++i) {
            auto v = H.alpha()(i, i).constant_value();
            if (!v) throw Error("spectrum certificate needs rational twisting entries");
            out.push_back(*v);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return spectrum(A) != spectrum(B);
}

}  // namespace homalt::catalog
