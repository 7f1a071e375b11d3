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

#include "fixtures.hpp"

#include <stdexcept>

namespace fixtures {

namespace {

using CD = std::vector<mpq_class>;

CD conj(const CD& x) {
    CD r = x;
    for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
    return r;
}

CD cd_mul(const CD& x, const CD& y) {
    const std::size_t n = x.size();
    if (n == 1) return {x[0] * y[0]};
    const std::size_t h = n / 2;
    CD a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    CD c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
    CD ac = cd_mul(a, c), db = cd_mul(conj(d), b), da = cd_mul(d, a), bc = cd_mul(b, conj(c));
    CD r(n);
    for (std::size_t i = 0; i < h; ++i) {
        r[i] = ac[i] - db[i];
        r[h + i] = da[i] + bc[i];
    }
    return r;
}

}  // namespace

HomAlgebra octonions() {
    HomAlgebra A(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            CD x(8), y(8);
            x[i] = 1;
            y[j] = 1;
            const CD z = cd_mul(x, y);
            Element r(8);
            for (std::size_t k = 0; k < 8; ++k) r[k] = Scalar(Rational(mpq_class(z[k])));
            A.set_product(i, j, r);
        }
    return A;
}

Matrix octonion_flip() {
    std::vector<Scalar> d(8, Scalar(1));
    for (std::size_t i = 4; i < 8; ++i) d[i] = Scalar(-1);
    return Matrix::diagonal(d);
}

HomAlgebra truncated_polynomials(std::size_t n, const Scalar& c) {
    std::vector<std::string> params;
    for (const auto& v : c.variables()) params.push_back(v);
    HomAlgebra A(n, params);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) A.set_product(i, j, e(n, i + j));
    std::vector<Scalar> d;
    for (std::size_t k = 0; k < n; ++k) d.push_back(c.pow(static_cast<std::uint32_t>(k)));
    return homalt::yau_twist(A, Matrix::diagonal(d));
}

HomAlgebra zero_algebra(std::size_t n) {
    HomAlgebra A(n);
    A.set_alpha(Matrix(n));
    return A;
}

HomAlgebra plain_twisted_product(const homalt::catalog::FamilyParams& p) {
    const HomAlgebra F = homalt::catalog::mikheev_family(p);
    return homalt::with_twist(F, Matrix::identity(F.dim()));
}

HomAlgebra mikheev_altered_twist() {
    HomAlgebra A = homalt::catalog::mikheev_algebra();
    Matrix a = Matrix::identity(13);
    a(2, 2) = Scalar(2);
    A.set_alpha(a);
    return A;
}

HomAlgebra direct_sum(const HomAlgebra& A, const HomAlgebra& B) {
    std::vector<std::string> params = A.params();
    for (const auto& p : B.params())
        if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
    const std::size_t n = A.dim(), m = B.dim();
    HomAlgebra S(n + m, params);
    auto embed = [&](const Element& x, std::size_t off) {
        Element y(n + m);
        for (std::size_t k = 0; k < x.dim(); ++k) y[off + k] = x[k];
        return y;
    };
    Matrix alpha(n + m);
    for (std::size_t i = 0; i < n; ++i) {
        alpha.set_row(i, embed(A.alpha().row(i), 0));
        for (std::size_t j = 0; j < n; ++j) S.set_product(i, j, embed(A.basis_product(i, j), 0));
    }
    for (std::size_t i = 0; i < m; ++i) {
        alpha.set_row(n + i, embed(B.alpha().row(i), n));
        for (std::size_t j = 0; j < m; ++j) S.set_product(n + i, n + j, embed(B.basis_product(i, j), n));
    }
    S.set_alpha(alpha);
    return S;
}

std::vector<Named> right_alternative_fixtures() {
    using homalt::catalog::FamilyParams;
    std::vector<Named> out;
    out.push_back({"mikheev", homalt::catalog::mikheev_algebra()});
    out.push_back({"A(lambda,xi)", homalt::catalog::mikheev_family(FamilyParams::symbolic())});
    out.push_back({"A(2,3)", homalt::catalog::mikheev_family(FamilyParams::rational(2, 3))});
    out.push_back({"A(-1/2,5)", homalt::catalog::mikheev_family(FamilyParams::rational(Rational::parse("-1/2"), 5))});
    out.push_back({"A(0,3)", homalt::catalog::mikheev_family(FamilyParams::rational(0, 3))});
    out.push_back({"octonions", octonions()});
    out.push_back({"octonions twisted", homalt::yau_twist(octonions(), octonion_flip())});
    out.push_back({"Q[t]/t^5 twisted by c", truncated_polynomials(5, var("c"))});
    out.push_back({"zero", zero_algebra(4)});
    out.push_back({"dim 0", HomAlgebra(0)});
    return out;
}

Element random_element(std::size_t dim, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> val(-bound, bound);
    Element x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = Scalar(val(rng));
    return x;
}

Matrix random_matrix(std::size_t dim, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> val(-bound, bound);
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = Scalar(val(rng));
    return m;
}

HomAlgebra from_oracle(const oracle::Algebra<mpq_class>& A) {
    const std::size_t n = static_cast<std::size_t>(A.n);
    HomAlgebra out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element r(n);
            for (std::size_t k = 0; k < n; ++k) r[k] = Scalar(Rational(A.at(int(i), int(j), int(k))));
            out.set_product(i, j, r);
        }
    Matrix alpha(n);
    for (std::size_t i = 0; i < n; ++i) alpha.set_row(i, from_oracle(A.twist[i]));
    out.set_alpha(alpha);
    return out;
}

mpq_class rational_of(const Scalar& s) {
    auto r = s.constant_value();
    if (!r) throw std::logic_error("expected a rational scalar, got " + s.to_string());
    return r->value();
}

oracle::Algebra<mpq_class> to_oracle(const HomAlgebra& A) {
    const int n = static_cast<int>(A.dim());
    oracle::Algebra<mpq_class> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element r = A.basis_product(i, j);
            for (int k = 0; k < n; ++k) out.at(i, j, k) = rational_of(r[k]);
        }
    for (int i = 0; i < n; ++i) out.twist[i] = to_oracle(A.alpha().row(i));
    return out;
}

oracle::Vec<mpq_class> to_oracle(const Element& x) {
    oracle::Vec<mpq_class> v;
    for (const auto& c : x.coords()) v.push_back(rational_of(c));
    return v;
}

Element from_oracle(const oracle::Vec<mpq_class>& v) {
    Element x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) x[i] = Scalar(Rational(v[i]));
    return x;
}

std::vector<oracle::Vec<mpq_class>> rows_of(const Matrix& m) {
    std::vector<oracle::Vec<mpq_class>> out;
    for (std::size_t i = 0; i < m.dim(); ++i) out.push_back(to_oracle(m.row(i)));
    return out;
}

Scalar from_bipoly(const oracle::BiPoly& p) {
    Scalar s;
    for (const auto& [k, v] : p.t)
        s += Scalar(Rational(v)) * var("lambda").pow(k.first) * var("xi").pow(k.second);
    return s;
}

}  // namespace fixtures
