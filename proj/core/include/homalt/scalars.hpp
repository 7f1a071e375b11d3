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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homalt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class value);

    /// Parses "p", "-p" or "p/q". Throws homalt::Error on malformed input or q = 0.
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Integer power, negative exponents allowed for non-zero bases.
    Rational pow(long exponent) const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Process-wide interning of variable names. Ids are stable for the lifetime
/// of the process; printing always goes through names, so output does not
/// depend on interning order.
class Variables {
public:
    static std::uint32_t id(std::string_view name);
    static std::string name(std::uint32_t id);
    /// Printable identifier: [A-Za-z_][A-Za-z0-9_]*
    static bool valid_name(std::string_view name);
};

/// Product of variables with positive exponents, kept sorted by variable id.
/// The empty monomial is the unit.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (variable id, exponent)

    Monomial() = default;
    static Monomial variable(std::string_view name, std::uint32_t exponent = 1);
    /// Builds from name -> exponent pairs. Zero exponents are dropped.
    static Monomial from_exponents(const std::map<std::string, std::uint32_t>& exps);
    /// Factors must be sorted by id with positive exponents.
    static Monomial from_sorted_factors(std::vector<Factor> factors);

    bool is_unit() const { return factors_.empty(); }
    std::uint32_t total_degree() const;
    std::uint32_t exponent_of(std::uint32_t var) const;
    const std::vector<Factor>& factors() const { return factors_; }
    std::map<std::string, std::uint32_t> exponents() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Assignment of rational values to variable names.
using Assignment = std::map<std::string, Rational>;

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted by monomial with no zero coefficients, so structural
/// equality is polynomial equality. A constant polynomial is how a Rational
/// lives inside this type; `Scalar` below names that use.
class Poly {
public:
    using Term = std::pair<Monomial, Rational>;

    Poly() = default;
    Poly(long value) : Poly(Rational(value)) {}  // NOLINT(google-explicit-constructor)
    Poly(const Rational& value);                  // NOLINT(google-explicit-constructor)
    Poly(Monomial m, Rational coeff);

    static Poly variable(std::string_view name);
    /// Builds from an arbitrary term list, merging duplicates and dropping zeros.
    static Poly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit()); }
    /// The value when constant, otherwise nothing.
    std::optional<Rational> constant_value() const;
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Total degree counting only the given variables; -1 for zero.
    int degree_in(const std::set<std::string>& vars) const;
    /// True when every term has the same total degree in `vars`.
    bool is_homogeneous_in(const std::set<std::string>& vars) const;
    std::set<std::string> variables() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& r);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly pow(std::uint32_t exponent) const;

    /// Terms in graded lexicographic order on variable names, highest first.
    std::vector<Term> printing_order() const;
    /// Human-readable form, e.g. "-lambda^12*xi^6" or "1/2*a_1 + 3".
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Coefficient ring element: a rational or a polynomial in declared
/// parameters and indeterminates.
using Scalar = Poly;

/// Homomorphic evaluation. Unassigned variables stay symbolic.
Scalar substitute(const Scalar& p, const Assignment& assignment);

inline bool is_zero(const Scalar& p) { return p.is_zero(); }

}  // namespace homalt
