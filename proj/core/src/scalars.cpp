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

#include <homalt/scalars.hpp>

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace homalt {

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    auto is_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false))
        throw Error("malformed rational \"" + std::string(text) + "\"");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    mpz_class nz(n, 10), dz(std::string(den), 10);
    if (dz == 0) throw Error("rational with zero denominator \"" + std::string(text) + "\"");
    return Rational(nz, dz);
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return Rational(1) / pow(-exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// --------------------------------------------------------------- Variables

namespace {

struct VariableTable {
    std::mutex mutex;
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> ids;
};

VariableTable& table() {
    static VariableTable t;
    return t;
}

}  // namespace

std::uint32_t Variables::id(std::string_view name) {
    auto& t = table();
    std::lock_guard lock(t.mutex);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(t.names.size());
    t.names.emplace_back(name);
    t.ids.emplace(std::string(name), id);
    return id;
}

std::string Variables::name(std::uint32_t id) {
    auto& t = table();
    std::lock_guard lock(t.mutex);
    if (id >= t.names.size()) throw Error("unknown variable id");
    return t.names[id];
}

bool Variables::valid_name(std::string_view name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::string_view name, std::uint32_t exponent) {
    if (!Variables::valid_name(name)) throw Error("invalid variable name \"" + std::string(name) + "\"");
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(Variables::id(name), exponent);
    return m;
}

Monomial Monomial::from_exponents(const std::map<std::string, std::uint32_t>& exps) {
    Monomial m;
    for (const auto& [name, e] : exps) m = m * variable(name, e);
    return m;
}

Monomial Monomial::from_sorted_factors(std::vector<Factor> factors) {
    Monomial m;
    m.factors_ = std::move(factors);
    return m;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

std::uint32_t Monomial::exponent_of(std::uint32_t var) const {
    for (const auto& [v, e] : factors_)
        if (v == var) return e;
    return 0;
}

std::map<std::string, std::uint32_t> Monomial::exponents() const {
    std::map<std::string, std::uint32_t> out;
    for (const auto& [v, e] : factors_) out[Variables::name(v)] = e;
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) out.factors_.push_back(*i++);
        else if (j->first < i->first) out.factors_.push_back(*j++);
        else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i, ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& value) {
    if (!value.is_zero()) terms_.emplace_back(Monomial(), value);
}

Poly::Poly(Monomial m, Rational coeff) {
    if (!coeff.is_zero()) terms_.emplace_back(std::move(m), std::move(coeff));
}

Poly Poly::variable(std::string_view name) { return Poly(Monomial::variable(name), Rational(1)); }

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    Poly out;
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().first == t.first) {
            out.terms_.back().second += t.second;
            if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

std::optional<Rational> Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].first.is_unit()) return terms_[0].second;
    return std::nullopt;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.total_degree()));
    return d;
}

int Poly::degree_in(const std::set<std::string>& vars) const {
    std::vector<std::uint32_t> ids;
    for (const auto& v : vars) ids.push_back(Variables::id(v));
    int d = -1;
    for (const auto& t : terms_) {
        int td = 0;
        for (auto id : ids) td += static_cast<int>(t.first.exponent_of(id));
        d = std::max(d, td);
    }
    return d;
}

bool Poly::is_homogeneous_in(const std::set<std::string>& vars) const {
    std::vector<std::uint32_t> ids;
    for (const auto& v : vars) ids.push_back(Variables::id(v));
    std::optional<std::uint32_t> deg;
    for (const auto& t : terms_) {
        std::uint32_t td = 0;
        for (auto id : ids) td += t.first.exponent_of(id);
        if (deg && *deg != td) return false;
        deg = td;
    }
    return true;
}

std::set<std::string> Poly::variables() const {
    std::set<std::string> out;
    for (const auto& t : terms_)
        for (const auto& f : t.first.factors()) out.insert(Variables::name(f.first));
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

namespace {

// Merge of two sorted term lists; `sign` is applied to the right operand.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool negate_b) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    auto push_b = [&](const Poly::Term& t) {
        out.push_back(t);
        if (negate_b) out.back().second = -out.back().second;
    };
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first) out.push_back(*i++);
        else if (j->first < i->first) push_b(*j++);
        else {
            Rational c = negate_b ? i->second - j->second : i->second + j->second;
            if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
            ++i, ++j;
        }
    }
    out.insert(out.end(), i, a.end());
    for (; j != b.end(); ++j) push_b(*j);
    return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Poly& Poly::operator*=(const Rational& r) {
    if (r.is_zero()) {
        terms_.clear();
    } else if (!r.is_one()) {
        for (auto& t : terms_) t.second *= r;
    }
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    out += b;
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly out = a;
    out -= b;
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.terms_.size() == 1 && a.terms_[0].first.is_unit()) {
        Poly out = b;
        out *= a.terms_[0].second;
        return out;
    }
    if (b.terms_.size() == 1 && b.terms_[0].first.is_unit()) {
        Poly out = a;
        out *= b.terms_[0].second;
        return out;
    }
    std::vector<Poly::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) prod.emplace_back(x.first * y.first, x.second * y.second);
    return Poly::from_terms(std::move(prod));
}

Poly Poly::pow(std::uint32_t exponent) const {
    Poly result(1), base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::vector<Poly::Term> Poly::printing_order() const {
    struct Keyed {
        std::uint32_t degree;
        std::map<std::string, std::uint32_t> exps;
        const Term* term;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(terms_.size());
    for (const auto& t : terms_) keyed.push_back({t.first.total_degree(), t.first.exponents(), &t});
    // Graded lex: higher degree first, then compare exponent vectors over the
    // alphabetically sorted union of names, larger exponent of the earliest name first.
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
        if (x.degree != y.degree) return x.degree > y.degree;
        auto i = x.exps.begin(), j = y.exps.begin();
        while (i != x.exps.end() && j != y.exps.end()) {
            if (i->first != j->first) return i->first < j->first;
            if (i->second != j->second) return i->second > j->second;
            ++i, ++j;
        }
        return i != x.exps.end() && j == y.exps.end();
    });
    std::vector<Term> out;
    out.reserve(keyed.size());
    for (const auto& k : keyed) out.push_back(*k.term);
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : printing_order()) {
        const bool negative = coeff.sign() < 0;
        const Rational mag = negative ? -coeff : coeff;
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        std::string factors;
        for (const auto& [name, e] : mono.exponents()) {
            if (!factors.empty()) factors += "*";
            factors += name;
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) os << mag.to_string();
        else if (mag.is_one()) os << factors;
        else os << mag.to_string() << "*" << factors;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Scalar substitute(const Scalar& p, const Assignment& assignment) {
    if (assignment.empty() || p.is_constant()) return p;
    std::unordered_map<std::uint32_t, const Rational*> values;
    for (const auto& [name, value] : assignment) values.emplace(Variables::id(name), &value);
    std::vector<Poly::Term> out;
    out.reserve(p.size());
    for (const auto& [mono, coeff] : p.terms()) {
        Rational c = coeff;
        std::vector<Monomial::Factor> rest;
        for (const auto& [var, e] : mono.factors()) {
            auto it = values.find(var);
            if (it == values.end()) rest.emplace_back(var, e);
            else c *= it->second->pow(e);
        }
        out.emplace_back(Monomial::from_sorted_factors(std::move(rest)), std::move(c));
    }
    return Poly::from_terms(std::move(out));
}

}  // namespace homalt
