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

namespace homalt::catalog {

/// Whether lambda*xi != 0 and lambda != xi are known to hold. The family is
/// built either way so that A(1,1) stays available as the untwisted case.
enum class Validity { Certified, Violated, Assumed };

struct FamilyParams {
    Scalar lambda;
    Scalar xi;
    Validity validity = Validity::Assumed;

    static FamilyParams rational(const Rational& lambda, const Rational& xi);
    /// The parameters kept as the indeterminates "lambda" and "xi".
    static FamilyParams symbolic();
};

/// Mikheev's 13-dimensional right alternative algebra with identity twist.
/// Basis index k holds e_{k+1}.
HomAlgebra mikheev_algebra();

/// The diagonal morphism alpha_{lambda,xi}: weights lambda, xi, lambda^2,
/// lambda*xi, lambda^3, lambda*xi, lambda^2*xi (x4), lambda^3*xi (x2), lambda^4*xi^2.
Matrix mikheev_morphism(const FamilyParams& p);

/// A(lambda, xi): the Yau twist of mikheev_algebra() by mikheev_morphism(p).
HomAlgebra mikheev_family(const FamilyParams& p);

/// True when one of lambda, xi is not of the form lambda'^r xi'^s, or one of
/// lambda', xi' is not of the form lambda^r xi^s, over r in 0..4, s in 0..2.
/// A true result certifies A(lambda,xi) and A(lambda',xi') are not isomorphic.
/// Throws on zero inputs.
bool family_nonisomorphism_condition(const Rational& lambda, const Rational& xi, const Rational& lambda2,
                                     const Rational& xi2);

/// Certified non-isomorphism from the twisting maps: an isomorphism conjugates
/// alpha_A into alpha_B, so differing diagonal multisets rule one out.
/// Throws when either twist is not diagonal with rational entries.
bool spectrum_certificate(const HomAlgebra& A, const HomAlgebra& B);

}  // namespace homalt::catalog
