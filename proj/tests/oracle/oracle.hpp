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

// Reference implementation used only by the tests. It shares no code with
// the library: dense structure constants stored as c[i][j][k], coefficients
// either mpq_class or polynomials in lambda and xi only, and right
// operators as closures evaluated pointwise instead of matrices.

#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// Polynomial in lambda and xi: (i, j) -> coefficient of lambda^i xi^j.
struct BiPoly {
    std::map<std::pair<int, int>, mpq_class> t;

    BiPoly() = default;
    BiPoly(long c) { if (c != 0) t[{0, 0}] = c; }  // NOLINT
    BiPoly(mpq_class c) { if (c != 0) t[{0, 0}] = c; }  // NOLINT
    static BiPoly mono(mpq_class c, int i, int j) {
        BiPoly p;
        if (c != 0) p.t[{i, j}] = c;
        return p;
    }
    void clean() {
        for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
    }
    BiPoly& operator+=(const BiPoly& o) { for (auto& [k, v] : o.t) t[k] += v; clean(); return *this; }
    BiPoly& operator-=(const BiPoly& o) { for (auto& [k, v] : o.t) t[k] -= v; clean(); return *this; }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (auto& [ka, va] : a.t)
            for (auto& [kb, vb] : b.t) r.t[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
        r.clean();
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t == b.t; }
    bool zero() const { return t.empty(); }
    mpq_class at(const mpq_class& l, const mpq_class& x) const {
        mpq_class s = 0;
        for (auto& [k, v] : t) {
            mpq_class m = v;
            for (int i = 0; i < k.first; ++i) m *= l;
            for (int i = 0; i < k.second; ++i) m *= x;
            s += m;
        }
        return s;
    }
};

inline bool is_zero(const mpq_class& q) { return q == 0; }
inline bool is_zero(const BiPoly& p) { return p.zero(); }

template <class T>
using Vec = std::vector<T>;

template <class T>
bool vzero(const Vec<T>& v) {
    for (auto& c : v)
        if (!is_zero(c)) return false;
    return true;
}
template <class T>
Vec<T> vadd(Vec<T> a, const Vec<T>& b) { for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i]; return a; }
template <class T>
Vec<T> vsub(Vec<T> a, const Vec<T>& b) { for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] - b[i]; return a; }
template <class T>
Vec<T> vscale(const T& s, Vec<T> a) { for (auto& c : a) c = s * c; return a; }
template <class T>
Vec<T> unit(int n, int i) { Vec<T> v(n, T(0)); v[i] = T(1); return v; }

/// Dense Hom-algebra. twist[i] is the image alpha(e_i).
template <class T>
struct Algebra {
    int n = 0;
    std::vector<T> c;  // c[(i*n + j)*n + k]
    std::vector<Vec<T>> twist;

    explicit Algebra(int dim = 0) : n(dim), c(dim * dim * dim, T(0)) {
        for (int i = 0; i < n; ++i) twist.push_back(unit<T>(n, i));
    }
    T& at(int i, int j, int k) { return c[(i * n + j) * n + k]; }
    const T& at(int i, int j, int k) const { return c[(i * n + j) * n + k]; }

    Vec<T> mul(const Vec<T>& x, const Vec<T>& y) const {
        Vec<T> r(n, T(0));
        for (int i = 0; i < n; ++i) {
            if (is_zero(x[i])) continue;
            for (int j = 0; j < n; ++j) {
                if (is_zero(y[j])) continue;
                const T s = x[i] * y[j];
                for (int k = 0; k < n; ++k)
                    if (!is_zero(at(i, j, k))) r[k] = r[k] + s * at(i, j, k);
            }
        }
        return r;
    }
    Vec<T> alpha(const Vec<T>& x) const {
        Vec<T> r(n, T(0));
        for (int i = 0; i < n; ++i)
            if (!is_zero(x[i])) r = vadd(r, vscale(x[i], twist[i]));
        return r;
    }
    Vec<T> alpha_n(Vec<T> x, int k) const { while (k-- > 0) x = alpha(x); return x; }
    Vec<T> assoc(const Vec<T>& x, const Vec<T>& y, const Vec<T>& z) const {
        return vsub(mul(mul(x, y), alpha(z)), mul(alpha(x), mul(y, z)));
    }
    // x^1 = x, x^m = x^{m-1} alpha^{m-2}(x).
    Vec<T> power(const Vec<T>& x, int m) const {
        Vec<T> p = x;
        for (int k = 2; k <= m; ++k) p = mul(p, alpha_n(x, k - 2));
        return p;
    }
};

/// Mikheev's table, transcribed independently as text. Entries "i.j=k" or
/// "i.j=-k+m" with 1-based indices.
inline const char* kMikheevTable =
    "1.1=3 1.2=4 1.3=5 1.4=8 1.6=9 1.7=12 1.9=12 1.10=11 "
    "2.1=6 2.3=10 3.1=5 3.2=7 3.6=11+12 4.1=-7+8+9 5.2=11+12 6.1=10 "
    "8.7=13 8.9=13 8.10=-13 9.7=-13 9.9=-13 9.10=13 "
    "11.4=13 11.6=-13 12.4=-13 12.6=13";

template <class T>
Algebra<T> mikheev() {
    Algebra<T> A(13);
    std::istringstream in(kMikheevTable);
    std::string entry;
    while (in >> entry) {
        const auto dot = entry.find('.'), eq = entry.find('=');
        const int i = std::stoi(entry.substr(0, dot)) - 1;
        const int j = std::stoi(entry.substr(dot + 1, eq - dot - 1)) - 1;
        std::string rhs = entry.substr(eq + 1);
        std::size_t pos = 0;
        while (pos < rhs.size()) {
            int sign = 1;
            if (rhs[pos] == '+' || rhs[pos] == '-') sign = rhs[pos++] == '-' ? -1 : 1;
            std::size_t end = pos;
            while (end < rhs.size() && std::isdigit(static_cast<unsigned char>(rhs[end]))) ++end;
            A.at(i, j, std::stoi(rhs.substr(pos, end - pos)) - 1) = T(sign);
            pos = end;
        }
    }
    return A;
}

/// Weights (r, s) of the diagonal morphism: alpha(e_i) = lambda^r xi^s e_i.
inline std::vector<std::pair<int, int>> family_weights() {
    return {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {3, 0}, {1, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}, {3, 1}, {3, 1}, {4, 2}};
}

/// Yau twist (beta mu, beta alpha) for a map given by images of basis vectors.
template <class T>
Algebra<T> twisted(const Algebra<T>& A, const std::vector<Vec<T>>& beta) {
    Algebra<T> B(A.n);
    auto apply_beta = [&](const Vec<T>& x) {
        Vec<T> r(A.n, T(0));
        for (int i = 0; i < A.n; ++i)
            if (!is_zero(x[i])) r = vadd(r, vscale(x[i], beta[i]));
        return r;
    };
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            Vec<T> e = A.mul(unit<T>(A.n, i), unit<T>(A.n, j));
            Vec<T> be = apply_beta(e);
            for (int k = 0; k < A.n; ++k) B.at(i, j, k) = be[k];
        }
    for (int i = 0; i < A.n; ++i) B.twist[i] = apply_beta(A.twist[i]);
    return B;
}

inline std::vector<Vec<BiPoly>> family_map_symbolic() {
    std::vector<Vec<BiPoly>> out;
    auto w = family_weights();
    for (int i = 0; i < 13; ++i) {
        Vec<BiPoly> v(13, BiPoly(0));
        v[i] = BiPoly::mono(1, w[i].first, w[i].second);
        out.push_back(v);
    }
    return out;
}

inline std::vector<Vec<mpq_class>> family_map(const mpq_class& l, const mpq_class& x) {
    std::vector<Vec<mpq_class>> out;
    for (auto& row : family_map_symbolic()) {
        Vec<mpq_class> v;
        for (auto& c : row) v.push_back(c.at(l, x));
        out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------- operator closures

template <class T>
using Op = std::function<Vec<T>(const Vec<T>&)>;

template <class T>
struct Calculus {
    const Algebra<T>& A;
    const std::vector<Vec<T>>* beta = nullptr;

    Vec<T> m(const Vec<T>& x, const Vec<T>& y) const { return A.mul(x, y); }
    Vec<T> s(const Vec<T>& x, int k = 1) const { return A.alpha_n(x, k); }
    Vec<T> as(const Vec<T>& x, const Vec<T>& y, const Vec<T>& z) const { return A.assoc(x, y, z); }
    Vec<T> br(const Vec<T>& x, const Vec<T>& y) const { return vsub(m(x, y), m(y, x)); }

    Op<T> prime(Vec<T> a) const { return [this, a](const Vec<T>& x) { return m(x, a); }; }
    // x a^b = alpha(x)(ab) - (xa) alpha(b)
    Op<T> sup(Vec<T> a, Vec<T> b) const {
        return [this, a, b](const Vec<T>& x) { return vsub(m(s(x), m(a, b)), m(m(x, a), s(b))); };
    }
    // x a_b = alpha(x)(ab) - (xb) alpha(a)
    Op<T> sub(Vec<T> a, Vec<T> b) const {
        return [this, a, b](const Vec<T>& x) { return vsub(m(s(x), m(a, b)), m(m(x, b), s(a))); };
    }
    Op<T> al(int k) const { return [this, k](const Vec<T>& x) { return s(x, k); }; }
    static Op<T> then(std::vector<Op<T>> ops) {
        return [ops](const Vec<T>& x) {
            Vec<T> y = x;
            for (auto& f : ops) y = f(y);
            return y;
        };
    }
    static Op<T> plus(Op<T> f, Op<T> g) { return [f, g](const Vec<T>& x) { return vadd(f(x), g(x)); }; }
    static Op<T> minus(Op<T> f, Op<T> g) { return [f, g](const Vec<T>& x) { return vsub(f(x), g(x)); }; }
    static Op<T> negate(Op<T> f) { return [f](const Vec<T>& x) { return vsub(Vec<T>(x.size(), T(0)), f(x)); }; }
    Op<T> zero() const { return [this](const Vec<T>&) { return Vec<T>(A.n, T(0)); }; }
};

/// Both sides of one equation: elements, or operators tabulated on the basis.
template <class T>
struct Side {
    bool is_op = false;
    Vec<T> elem;
    std::vector<Vec<T>> rows;  // rows[i] = e_i * op
};

template <class T>
Side<T> elem_side(Vec<T> v) { return {false, std::move(v), {}}; }
template <class T>
Side<T> op_side(const Op<T>& f, int n) {
    Side<T> s{true, {}, {}};
    for (int i = 0; i < n; ++i) s.rows.push_back(f(unit<T>(n, i)));
    return s;
}

/// Oracle values of the registry equations, keyed by the same tags.
template <class T>
std::vector<std::pair<Side<T>, Side<T>>> sides(const std::string& tag, const Algebra<T>& A,
                                               const std::vector<Vec<T>>& v,
                                               const std::vector<Vec<T>>* beta = nullptr) {
    Calculus<T> c{A, beta};
    using C = Calculus<T>;
    const int n = A.n;
    std::vector<std::pair<Side<T>, Side<T>>> out;
    auto E = [&](Vec<T> l, Vec<T> r) { out.push_back({elem_side(std::move(l)), elem_side(std::move(r))}); };
    auto O = [&](const Op<T>& l, const Op<T>& r) { out.push_back({op_side(l, n), op_side(r, n)}); };
    const Vec<T> zero(n, T(0));

    if (tag == "xyy") {
        E(c.m(c.m(v[0], v[1]), c.s(v[1])), c.m(c.s(v[0]), c.m(v[1], v[1])));
    } else if (tag == "linearized") {
        E(c.as(v[0], v[1], v[2]), vsub(zero, c.as(v[0], v[2], v[1])));
    } else if (tag == "teichmuller") {
        const auto &w = v[0], &x = v[1], &y = v[2], &z = v[3];
        Vec<T> f = c.as(c.m(w, x), c.s(y), c.s(z));
        f = vsub(f, c.as(c.s(w), c.m(x, y), c.s(z)));
        f = vadd(f, c.as(c.s(w), c.s(x), c.m(y, z)));
        f = vsub(f, c.m(c.s(w, 2), c.as(x, y, z)));
        f = vsub(f, c.m(c.as(w, x, y), c.s(z, 2)));
        E(f, zero);
    } else if (tag == "xyyz") {
        E(c.as(c.s(v[0]), c.s(v[1]), c.m(v[1], v[2])), c.m(c.as(v[0], v[1], v[2]), c.s(v[1], 2)));
    } else if (tag == "moufang") {
        const auto &x = v[0], &y = v[1], &z = v[2];
        E(c.m(c.m(c.m(x, y), c.s(z)), c.s(y, 2)), c.m(c.s(x, 2), c.m(c.m(y, z), c.s(y))));
    } else if (tag == "beta2") {
        const Algebra<T> B = twisted(A, *beta);
        const Algebra<T> Bmap = twisted(Algebra<T>(n), *beta);  // only twist[] used: beta itself
        const Vec<T> a = c.as(v[0], v[1], v[2]);
        E(Bmap.alpha(Bmap.alpha(a)), B.assoc(v[0], v[1], v[2]));
    } else if (tag == "eq1") {
        O(C::then({c.prime(v[0]), c.prime(c.s(v[0]))}), C::then({c.al(1), c.prime(c.m(v[0], v[0]))}));
    } else if (tag == "eq2") {
        const auto &a = v[0], &b = v[1];
        O(C::then({c.prime(a), c.prime(c.s(b)), c.prime(c.s(a, 2))}),
          C::then({c.al(2), c.prime(c.m(c.m(a, b), c.s(a)))}));
    } else if (tag == "eq2p") {
        const auto &a = v[0], &b = v[1], &cc = v[2];
        O(C::plus(C::then({c.prime(a), c.prime(c.s(b)), c.prime(c.s(cc, 2))}),
                  C::then({c.prime(cc), c.prime(c.s(b)), c.prime(c.s(a, 2))})),
          C::then({c.al(2), c.prime(vadd(c.m(c.m(a, b), c.s(cc)), c.m(c.m(cc, b), c.s(a))))}));
    } else if (tag == "eq3a") {
        O(c.sup(v[0], v[0]), c.zero());
    } else if (tag == "eq3b") {
        O(C::plus(c.sup(v[0], v[1]), c.sup(v[1], v[0])), c.zero());
    } else if (tag == "eq5") {
        O(C::then({c.sup(v[0], v[1]), c.sub(c.s(v[0], 2), c.s(v[1], 2))}), c.zero());
    } else if (tag == "eq5p") {
        const auto &a = v[0], &b = v[1], &cc = v[2];
        O(C::plus(C::then({c.sup(a, b), c.sub(c.s(a, 2), c.s(cc, 2))}),
                  C::then({c.sup(a, cc), c.sub(c.s(a, 2), c.s(b, 2))})),
          c.zero());
    } else if (tag == "eq6") {
        const auto &a = v[0], &b = v[1];
        O(C::then({c.sub(a, b), c.sup(c.s(a, 2), c.s(b, 2))}),
          C::negate(C::then({c.al(3), c.prime(c.as(c.br(a, b), c.s(a), c.s(b)))})));
    } else if (tag == "eq7") {
        const auto &a = v[0], &b = v[1];
        O(C::then({c.sub(a, b), c.prime(c.s(a, 2)), c.sup(c.s(a, 3), c.s(b, 3))}),
          C::negate(C::then({c.al(4), c.prime(c.as(c.m(c.br(a, b), c.s(a)), c.s(a, 2), c.s(b, 2)))})));
    } else if (tag == "eq8") {
        const auto &a = v[0], &b = v[1];
        const Vec<T> p = c.as(a, a, b);
        E(c.m(c.s(p, 3), c.as(c.br(c.s(a, 2), c.s(b, 2)), c.s(a, 3), c.s(b, 3))), zero);
    } else if (tag == "eq9") {
        const auto &a = v[0], &b = v[1];
        const Vec<T> p = c.as(a, a, b);
        E(c.m(c.s(p, 4), c.as(c.m(c.br(c.s(a, 2), c.s(b, 2)), c.s(a, 3)), c.s(a, 4), c.s(b, 4))), zero);
    } else if (tag == "eq10" || tag == "eq10p") {
        const auto &a = v[0], &b = v[1];
        const Vec<T> p = c.as(a, a, b), ba = c.m(b, a);
        for (int k = 0; k <= 2; ++k) {
            Op<T> lhs = C::then({c.al(2), c.prime(c.s(p, k))});
            Op<T> rhs = tag == "eq10"
                            ? C::minus(C::then({c.al(1), c.sup(c.s(a, k + 1), c.s(ba, k))}),
                                       C::then({c.prime(c.s(a, k)), c.sup(c.s(a, k + 1), c.s(b, k + 1))}))
                            : C::minus(C::then({c.al(1), c.sub(c.s(a, k + 1), c.s(ba, k))}),
                                       C::then({c.sub(c.s(a, k), c.s(b, k)), c.prime(c.s(a, k + 2))}));
            O(lhs, rhs);
        }
    } else {
        const auto &a = v[0], &b = v[1];
        const Vec<T> p = c.as(a, a, b), ba = c.m(b, a);
        const Op<T> d = C::negate(C::then({c.sup(a, b), c.al(1), c.sub(c.s(a, 3), c.s(ba, 2)), c.al(1),
                                           c.sup(c.s(a, 6), c.s(ba, 5)), c.sub(c.s(a, 8), c.s(b, 8)),
                                           c.prime(c.s(a, 10))}));
        const Op<T> e = C::negate(C::then({c.sup(a, b), c.al(1), c.sub(c.s(a, 3), c.s(ba, 2)), c.prime(c.s(a, 5)),
                                           c.sup(c.s(a, 6), c.s(b, 6)), c.al(1), c.sub(c.s(a, 9), c.s(ba, 8))}));
        const Op<T> word = C::then({c.sup(a, b), c.prime(p), c.prime(c.s(p)), c.prime(c.s(p, 2)), c.al(6)});
        if (tag == "dpe") O(word, C::plus(d, e));
        else if (tag == "d0") O(d, c.zero());
        else if (tag == "e0") O(e, c.zero());
        else if (tag == "prop") O(word, c.zero());
        else if (tag == "theorem") E(c.s(A.power(p, 4), 6), zero);
        else if (tag == "mikheev_classical") E(A.power(p, 4), zero);
        else throw std::invalid_argument("oracle: unknown tag " + tag);
    }
    return out;
}

/// Random algebra with integer structure constants in [-2, 2] (sparse) and a
/// random integer twist. Generally neither multiplicative nor alternative.
inline Algebra<mpq_class> random_algebra(int n, std::mt19937_64& rng, int density_percent = 35) {
    Algebra<mpq_class> A(n);
    std::uniform_int_distribution<int> coin(0, 99), val(-2, 2);
    for (auto& c : A.c) c = coin(rng) < density_percent ? val(rng) : 0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) A.twist[i][k] = coin(rng) < 40 ? val(rng) : 0;
    return A;
}

inline Vec<mpq_class> random_vec(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> val(-5, 5);
    Vec<mpq_class> v(n);
    for (auto& c : v) c = val(rng);
    return v;
}

}  // namespace oracle
