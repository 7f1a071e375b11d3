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

#include "oracle/oracle.hpp"

#include <homalt/catalog.hpp>
#include <homalt/homalgebra.hpp>
#include <homalt/proof_replay.hpp>

#include <random>
#include <string>
#include <vector>

namespace fixtures {

using homalt::Element;
using homalt::HomAlgebra;
using homalt::Matrix;
using homalt::Rational;
using homalt::Scalar;

inline Element e(std::size_t dim, std::size_t i) { return Element::basis(dim, i); }

inline Scalar q(long p, long r = 1) { return Scalar(Rational(p) / Rational(r)); }

inline Scalar var(const char* name) { return Scalar::variable(name); }

/// Octonions over Q by Cayley-Dickson doubling: (a,b)(c,d) = (ac - d*b, da + bc*).
HomAlgebra octonions();
/// The automorphism (a, b) -> (a, -b) of the octonions.
Matrix octonion_flip();
/// Q[t]/(t^n) with basis 1, t, ..., t^{n-1}, Yau-twisted by t^k -> c^k t^k.
HomAlgebra truncated_polynomials(std::size_t n, const Scalar& c = Scalar(1));
/// mu = 0, alpha = 0.
HomAlgebra zero_algebra(std::size_t n);
/// The plain algebra (A, alpha_{lambda,xi} mu) with identity twist.
HomAlgebra plain_twisted_product(const homalt::catalog::FamilyParams& p);
/// Mikheev's algebra with alpha(e3) = 2 e3 (not multiplicative).
HomAlgebra mikheev_altered_twist();
/// Block direct sum of two algebras.
HomAlgebra direct_sum(const HomAlgebra& A, const HomAlgebra& B);

/// Multiplicative right Hom-alternative algebras used for the registry tests.
struct Named {
    std::string name;
    HomAlgebra algebra;
};
std::vector<Named> right_alternative_fixtures();

/// Integer element with coordinates in [-bound, bound].
Element random_element(std::size_t dim, std::mt19937_64& rng, int bound = 9);
/// Integer matrix with entries in [-bound, bound].
Matrix random_matrix(std::size_t dim, std::mt19937_64& rng, int bound = 3);

// Conversions between the library and the oracle.
HomAlgebra from_oracle(const oracle::Algebra<mpq_class>& A);
oracle::Algebra<mpq_class> to_oracle(const HomAlgebra& A);
oracle::Vec<mpq_class> to_oracle(const Element& x);
Element from_oracle(const oracle::Vec<mpq_class>& v);
std::vector<oracle::Vec<mpq_class>> rows_of(const Matrix& m);
/// Rational part of a Scalar; fails the caller's check when not constant.
mpq_class rational_of(const Scalar& s);
/// Library scalar in lambda and xi from an oracle polynomial.
Scalar from_bipoly(const oracle::BiPoly& p);

}  // namespace fixtures
