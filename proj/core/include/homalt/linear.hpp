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

#include <homalt/scalars.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace homalt {

/// Coordinate vector with respect to a fixed basis e_0 .. e_{dim-1}.
class Element {
public:
    Element() = default;
    explicit Element(std::size_t dim) : coords_(dim) {}
    explicit Element(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

    static Element basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool is_zero() const;
    /// Indices of non-zero coordinates.
    std::vector<std::size_t> support() const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Scalar& s);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& s, Element x) { return x *= s; }
    friend bool operator==(const Element&, const Element&) = default;

    /// "e7 - e8", "-lambda^12*xi^6*e13", "0". Names default to e1..e_dim.
    std::string to_string(std::span<const std::string> names = {}) const;

private:
    std::vector<Scalar> coords_;
};

Element substitute(const Element& x, const Assignment& assignment);

/// Square matrix acting on row vectors from the right: (x M)_j = sum_i x_i M_ij.
/// Row i is the image of e_i, so composition M then N is the product M N.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::vector<Scalar> entries);

    std::size_t dim() const { return dim_; }
    const Scalar& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Scalar& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

    Element row(std::size_t i) const;
    void set_row(std::size_t i, const Element& image);

    bool is_zero() const;
    bool is_diagonal() const;

    /// x M.
    Element apply(const Element& x) const;
    /// Row vector x M without checks, used in hot loops.
    void apply_into(const Element& x, Element& out) const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    /// Composition: apply `a`, then `b`.
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix m);
    friend bool operator==(const Matrix&, const Matrix&) = default;

    Matrix pow(std::size_t n) const;

    /// Largest total degree among the entries; -1 for the zero matrix.
    int max_degree() const;

private:
    std::size_t dim_ = 0;
    std::vector<Scalar> entries_;
};

Matrix substitute(const Matrix& m, const Assignment& assignment);

/// Throws homalt::Error("dimension mismatch ...") when a != b.
void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace homalt
