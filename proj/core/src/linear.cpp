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

#include <homalt/linear.hpp>

#include <algorithm>

namespace homalt {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw Error(std::string("dimension mismatch in ") + what + ": " + std::to_string(a) + " vs " +
                    std::to_string(b));
}

// ----------------------------------------------------------------- Element

Element Element::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw Error("basis index out of range");
    Element e(dim);
    e.coords_[index] = Scalar(1);
    return e;
}

bool Element::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<std::size_t> Element::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) out.push_back(i);
    return out;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

Element& Element::operator+=(const Element& o) {
    require_same_dim(dim(), o.dim(), "element addition");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    require_same_dim(dim(), o.dim(), "element subtraction");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Element& Element::operator*=(const Scalar& s) {
    for (auto& c : coords_) c = s * c;
    return *this;
}

std::string Element::to_string(std::span<const std::string> names) const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Scalar& c = coords_[i];
        if (c.is_zero()) continue;
        const std::string name = i < names.size() ? names[i] : "e" + std::to_string(i + 1);
        std::string coeff;
        bool negative = false;
        if (auto r = c.constant_value()) {
            negative = r->sign() < 0;
            const Rational mag = negative ? -*r : *r;
            if (!mag.is_one()) coeff = mag.to_string() + "*";
        } else if (c.size() == 1) {
            negative = c.terms()[0].second.sign() < 0;
            coeff = (negative ? -c : c).to_string() + "*";
        } else {
            coeff = "(" + c.to_string() + ")*";
        }
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        out += coeff + name;
    }
    return out.empty() ? "0" : out;
}

Element substitute(const Element& x, const Assignment& assignment) {
    std::vector<Scalar> coords;
    coords.reserve(x.dim());
    for (const auto& c : x.coords()) coords.push_back(substitute(c, assignment));
    return Element(std::move(coords));
}

// ------------------------------------------------------------------ Matrix

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::diagonal(std::vector<Scalar> entries) {
    Matrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = std::move(entries[i]);
    return m;
}

Element Matrix::row(std::size_t i) const {
    std::vector<Scalar> coords(entries_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                               entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
    return Element(std::move(coords));
}

void Matrix::set_row(std::size_t i, const Element& image) {
    require_same_dim(dim_, image.dim(), "matrix row");
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) = image[j];
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_diagonal() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

void Matrix::apply_into(const Element& x, Element& out) const {
    out = Element(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            const Scalar& m = (*this)(i, j);
            if (!m.is_zero()) out[j] += x[i] * m;
        }
    }
}

Element Matrix::apply(const Element& x) const {
    require_same_dim(dim_, x.dim(), "matrix action");
    Element out;
    apply_into(x, out);
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_dim(dim_, o.dim_, "matrix addition");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_dim(dim_, o.dim_, "matrix subtraction");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a.dim_, b.dim_, "matrix composition");
    const std::size_t n = a.dim_;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
    for (auto& e : m.entries_) e = s * e;
    return m;
}

Matrix Matrix::pow(std::size_t n) const {
    Matrix result = identity(dim_), base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

int Matrix::max_degree() const {
    int d = -1;
    for (const auto& e : entries_) d = std::max(d, e.total_degree());
    return d;
}

Matrix substitute(const Matrix& m, const Assignment& assignment) {
    Matrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = substitute(m(i, j), assignment);
    return out;
}

}  // namespace homalt
