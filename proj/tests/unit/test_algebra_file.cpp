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

#include "support/fixtures.hpp"

#include <homalt/algebra_file.hpp>

#include <doctest.h>

#include <string>

using namespace homalt;
using namespace fixtures;
using catalog::FamilyParams;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_algebra(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

const char* kSmall = R"({
  "dimension": 2,
  "basis": ["u", "v"],
  "parameters": ["lambda"],
  "products": [
    {"left": 0, "right": 0, "result": [{"index": 1, "coeff": "1/2"}]},
    {"left": 1, "right": 0, "result": [{"index": 1, "coeff": {"poly": [{"coeff": "3", "exps": {"lambda": 2}}]}}]}
  ]
})";

}  // namespace

TEST_CASE("round trips") {
    for (const HomAlgebra& A : {catalog::mikheev_algebra(), catalog::mikheev_family(FamilyParams::symbolic()),
                                catalog::mikheev_family(FamilyParams::rational(2, 3)), HomAlgebra(0), octonions(),
                                truncated_polynomials(4, var("c"))}) {
        const std::string text = serialize_algebra(A);
        const HomAlgebra back = parse_algebra(text);
        CHECK(back == A);
        CHECK(serialize_algebra(back) == text);
    }
    const Matrix f = catalog::mikheev_morphism(FamilyParams::symbolic());
    CHECK(parse_morphism(serialize_morphism(f)) == f);
}

TEST_CASE("substitution after parsing equals direct construction") {
    const HomAlgebra F = parse_algebra(serialize_algebra(catalog::mikheev_family(FamilyParams::symbolic())));
    CHECK(substitute(F, {{"lambda", 2}, {"xi", 3}}) == catalog::mikheev_family(FamilyParams::rational(2, 3)));
}

TEST_CASE("parsing a hand-written document") {
    const AlgebraFile f = parse_algebra_file(kSmall);
    CHECK(f.basis == std::vector<std::string>{"u", "v"});
    CHECK(f.algebra.alpha() == Matrix::identity(2));
    CHECK(f.algebra.basis_product(0, 0) == q(1, 2) * e(2, 1));
    CHECK(f.algebra.basis_product(1, 0) == q(3) * var("lambda").pow(2) * e(2, 1));
    CHECK(f.algebra.basis_product(0, 1).is_zero());
    CHECK(parse_element("2*u - lambda*v", f) == q(2) * e(2, 0) - var("lambda") * e(2, 1));
    CHECK(parse_element("1/2*lambda^2*v + u", f) == e(2, 0) + q(1, 2) * var("lambda").pow(2) * e(2, 1));
    CHECK(parse_element("0", f).is_zero());
    CHECK_THROWS_AS(parse_element("3", f), ParseError);
    CHECK_THROWS_AS(parse_element("w", f), ParseError);
    CHECK_THROWS_AS(parse_element("mu*u", f), ParseError);
    CHECK_THROWS_AS(parse_element("u*v", f), ParseError);
    CHECK_THROWS_AS(parse_element("2 +", f), ParseError);
}

TEST_CASE("alpha rows default to zero when alpha is present") {
    const AlgebraFile f = parse_algebra_file(R"({"dimension": 2, "products": [],
        "alpha": [{"from": 1, "to": [{"index": 0, "coeff": "-1"}]}]})");
    Matrix expect(2);
    expect(1, 0) = q(-1);
    CHECK(f.algebra.alpha() == expect);
    CHECK(f.basis == std::vector<std::string>{"e1", "e2"});
}

TEST_CASE("malformed documents") {
    const std::string oob = error_of(R"({"dimension": 13, "products": [
        {"left": 0, "right": 0, "result": [{"index": 1, "coeff": "1"}]},
        {"left": 0, "right": 1, "result": [{"index": 1, "coeff": "1"}]},
        {"left": 0, "right": 2, "result": [{"index": 1, "coeff": "1"}]},
        {"left": 0, "right": 3, "result": [{"index": 13, "coeff": "1"}]}]})");
    CHECK(oob == "$.products[3].result[0].index: index out of range (13 not in [0, 13))");

    CHECK(error_of(R"({"dimension": 2, "products": [{"left": 0, "right": 0,
        "result": [{"index": 1, "coeff": "1/0"}]}]})")
              .find("$.products[0].result[0].coeff: bad scalar encoding") == 0);
    CHECK(error_of(R"({"dimension": 2, "products": [{"left": 0, "right": 0,
        "result": [{"index": 1, "coeff": 0.5}]}]})")
              .find("bad scalar encoding") != std::string::npos);
    CHECK(error_of("{\"dimension\": 2,\n \"products\": [,]}") == "line 2, column 15: malformed JSON document");
    CHECK(error_of(R"({"products": []})").find("missing field \"dimension\"") != std::string::npos);
    CHECK(error_of(R"({"dimension": 65, "products": []})").find("$.dimension") == 0);
    CHECK(error_of(R"({"dimension": 2, "products": [{"left": 0, "right": 0,
        "result": [{"index": 1, "coeff": {"poly": [{"coeff": "1", "exps": {"mu": 1}}]}}]}]})")
              .find("undeclared parameter \"mu\"") != std::string::npos);
    CHECK(error_of(R"({"dimension": 2, "products": [
        {"left": 0, "right": 0, "result": []}, {"left": 0, "right": 0, "result": []}]})")
              .find("$.products[1]") == 0);
    CHECK(error_of(R"({"dimension": 2, "basis": ["a"], "products": []})").find("$.basis") == 0);
    CHECK_THROWS_AS(parse_morphism(R"({"dimension": 2, "map": [{"from": 2, "to": []}]})"), ParseError);
}

TEST_CASE("scalar encoding") {
    CHECK(encode_scalar(q(-3, 4)) == "\"-3/4\"");
    const Scalar p = q(2) * var("lambda") * var("xi").pow(3) - q(1, 2);
    CHECK(decode_scalar(encode_scalar(p)) == p);
    CHECK(decode_scalar("7") == q(7));
    CHECK_THROWS_AS(decode_scalar("\"x/y\""), ParseError);
}

TEST_CASE("report json") {
    const HomAlgebra P = plain_twisted_product(FamilyParams::rational(2, 3));
    const auto reports = std::vector<CheckReport>{is_right_hom_alternative(P),
                                                  verify(P, IdentityId::xyy, Strategy::random(5, 3))};
    const std::string a = reports_to_json(reports);
    CHECK(a == reports_to_json(reports));
    CHECK(a.find("\"status\": \"fails\"") != std::string::npos);
    CHECK(a.find("\"witness\"") != std::string::npos);
    CHECK(a.find("\"seed\": 3") != std::string::npos);
    const std::string holds = reports_to_json({verify(catalog::mikheev_algebra(), IdentityId::theorem, Strategy::generic())});
    CHECK(holds.find("\"witness\"") == std::string::npos);
}

// ------------------------------------------------------------ properties

TEST_CASE("property: random algebras round-trip") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 30; ++t) {
        const HomAlgebra A = from_oracle(oracle::random_algebra(1 + t % 6, rng));
        CHECK(parse_algebra(serialize_algebra(A)) == A);
        const Matrix f = random_matrix(A.dim(), rng);
        CHECK(parse_morphism(serialize_morphism(f)) == f);
    }
}
