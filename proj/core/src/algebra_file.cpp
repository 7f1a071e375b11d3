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

#include <homalt/algebra_file.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace homalt {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line and column.
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": malformed JSON document");
    }
}

const json& field(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t index_value(const json& v, std::size_t dim, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer index");
    const auto i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= dim)
        fail(path, "index out of range (" + std::to_string(i) + " not in [0, " + std::to_string(dim) + "))");
    return static_cast<std::size_t>(i);
}

Rational rational_value(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) fail(path, "bad scalar encoding (expected \"p/q\")");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
        fail(path, std::string("bad scalar encoding: ") + e.what());
    }
}

Scalar scalar_value(const json& v, const std::string& path, const std::set<std::string>* declared) {
    if (!v.is_object()) return Scalar(rational_value(v, path));
    const json& terms = field(v, "poly", path);
    if (!terms.is_array()) fail(path + ".poly", "bad scalar encoding (expected a term list)");
    std::vector<Poly::Term> out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tp = path + ".poly[" + std::to_string(t) + "]";
        const Rational c = rational_value(field(terms[t], "coeff", tp), tp + ".coeff");
        std::map<std::string, std::uint32_t> exps;
        if (auto it = terms[t].find("exps"); it != terms[t].end()) {
            if (!it->is_object()) fail(tp + ".exps", "expected an object");
            for (const auto& [name, e] : it->items()) {
                const std::string ep = tp + ".exps." + name;
                if (!Variables::valid_name(name)) fail(ep, "invalid variable name");
                if (declared && !declared->count(name)) fail(ep, "undeclared parameter \"" + name + "\"");
                if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 1'000'000)
                    fail(ep, "exponent must be a non-negative integer");
                exps[name] = static_cast<std::uint32_t>(e.get<long long>());
            }
        }
        out.emplace_back(Monomial::from_exponents(exps), c);
    }
    return Poly::from_terms(std::move(out));
}

ojson scalar_json(const Scalar& s) {
    if (auto r = s.constant_value()) return r->to_string();
    ojson terms = ojson::array();
    for (const auto& [m, c] : s.printing_order()) {
        ojson exps = ojson::object();
        for (const auto& [name, e] : m.exponents()) exps[name] = e;
        terms.push_back({{"coeff", c.to_string()}, {"exps", exps}});
    }
    return {{"poly", terms}};
}

ojson sparse_json(const Element& x) {
    ojson out = ojson::array();
    for (std::size_t k = 0; k < x.dim(); ++k)
        if (!x[k].is_zero()) out.push_back({{"index", k}, {"coeff", scalar_json(x[k])}});
    return out;
}

Element sparse_value(const json& v, std::size_t dim, const std::string& path, const std::set<std::string>& declared) {
    if (!v.is_array()) fail(path, "expected a list of {index, coeff}");
    Element x(dim);
    for (std::size_t t = 0; t < v.size(); ++t) {
        const std::string tp = path + "[" + std::to_string(t) + "]";
        const std::size_t k = index_value(field(v[t], "index", tp), dim, tp + ".index");
        x[k] += scalar_value(field(v[t], "coeff", tp), tp + ".coeff", &declared);
    }
    return x;
}

std::size_t dimension_value(const json& doc) {
    const json& d = field(doc, "dimension", "$");
    if (!d.is_number_integer() || d.get<long long>() < 0) fail("$.dimension", "expected a non-negative integer");
    const auto dim = d.get<long long>();
    if (static_cast<unsigned long long>(dim) > HomAlgebra::kMaxDim)
        fail("$.dimension", "dimension exceeds the limit of " + std::to_string(HomAlgebra::kMaxDim));
    return static_cast<std::size_t>(dim);
}

std::vector<std::string> parameter_list(const json& doc) {
    std::vector<std::string> params;
    auto it = doc.find("parameters");
    if (it == doc.end()) return params;
    if (!it->is_array()) fail("$.parameters", "expected a list of names");
    for (std::size_t i = 0; i < it->size(); ++i) {
        const std::string p = "$.parameters[" + std::to_string(i) + "]";
        if (!(*it)[i].is_string()) fail(p, "expected a name");
        const auto name = (*it)[i].get<std::string>();
        if (!Variables::valid_name(name)) fail(p, "invalid parameter name \"" + name + "\"");
        if (std::find(params.begin(), params.end(), name) != params.end())
            fail(p, "duplicate parameter \"" + name + "\"");
        params.push_back(name);
    }
    return params;
}

// Rows of a sparse matrix: [{<from_key>: i, <to_key>: [{index, coeff}]}].
Matrix matrix_value(const json& rows, std::size_t dim, const std::string& path, const char* from_key,
                    const char* to_key, const std::set<std::string>& declared) {
    if (!rows.is_array()) fail(path, "expected a list of rows");
    Matrix m(dim);
    std::set<std::size_t> seen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string rp = path + "[" + std::to_string(r) + "]";
        const std::size_t i = index_value(field(rows[r], from_key, rp), dim, rp + "." + from_key);
        if (!seen.insert(i).second) fail(rp, "row " + std::to_string(i) + " given twice");
        m.set_row(i, sparse_value(field(rows[r], to_key, rp), dim, rp + "." + to_key, declared));
    }
    return m;
}

}  // namespace

std::string encode_scalar(const Scalar& s) { return scalar_json(s).dump(); }

Scalar decode_scalar(std::string_view text) { return scalar_value(parse_json(text), "$", nullptr); }

AlgebraFile parse_algebra_file(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) fail("$", "expected an object");
    const std::size_t dim = dimension_value(doc);
    const auto params = parameter_list(doc);
    const std::set<std::string> declared(params.begin(), params.end());

    AlgebraFile out;
    if (auto it = doc.find("basis"); it != doc.end()) {
        if (!it->is_array() || it->size() != dim) fail("$.basis", "expected " + std::to_string(dim) + " names");
        std::set<std::string> names;
        for (std::size_t i = 0; i < dim; ++i) {
            const std::string p = "$.basis[" + std::to_string(i) + "]";
            if (!(*it)[i].is_string()) fail(p, "expected a name");
            auto name = (*it)[i].get<std::string>();
            if (!Variables::valid_name(name)) fail(p, "invalid basis name \"" + name + "\"");
            if (declared.count(name)) fail(p, "basis name \"" + name + "\" clashes with a parameter");
            if (!names.insert(name).second) fail(p, "duplicate basis name \"" + name + "\"");
            out.basis.push_back(std::move(name));
        }
    } else {
        for (std::size_t i = 0; i < dim; ++i) out.basis.push_back("e" + std::to_string(i + 1));
    }

    HomAlgebra A(dim, params);
    if (auto it = doc.find("products"); it != doc.end()) {
        if (!it->is_array()) fail("$.products", "expected a list");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t r = 0; r < it->size(); ++r) {
            const std::string rp = "$.products[" + std::to_string(r) + "]";
            const auto& entry = (*it)[r];
            const std::size_t i = index_value(field(entry, "left", rp), dim, rp + ".left");
            const std::size_t j = index_value(field(entry, "right", rp), dim, rp + ".right");
            if (!seen.insert({i, j}).second)
                fail(rp, "product (" + std::to_string(i) + ", " + std::to_string(j) + ") given twice");
            A.set_product(i, j, sparse_value(field(entry, "result", rp), dim, rp + ".result", declared));
        }
    }
    if (auto it = doc.find("alpha"); it != doc.end())
        A.set_alpha(matrix_value(*it, dim, "$.alpha", "from", "to", declared));
    out.algebra = std::move(A);
    return out;
}

HomAlgebra parse_algebra(std::string_view text) { return parse_algebra_file(text).algebra; }

std::string serialize_algebra(const HomAlgebra& A, const std::vector<std::string>& basis) {
    const std::size_t n = A.dim();
    ojson doc;
    doc["dimension"] = n;
    ojson names = ojson::array();
    for (std::size_t i = 0; i < n; ++i) names.push_back(i < basis.size() ? basis[i] : "e" + std::to_string(i + 1));
    doc["basis"] = names;
    doc["parameters"] = A.params();
    ojson products = ojson::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element e = A.basis_product(i, j);
            if (!e.is_zero()) products.push_back({{"left", i}, {"right", j}, {"result", sparse_json(e)}});
        }
    doc["products"] = products;
    ojson alpha = ojson::array();
    for (std::size_t i = 0; i < n; ++i) {
        Element row = A.alpha().row(i);
        if (!row.is_zero()) alpha.push_back({{"from", i}, {"to", sparse_json(row)}});
    }
    doc["alpha"] = alpha;
    return doc.dump(2) + "\n";
}

Matrix parse_morphism(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) fail("$", "expected an object");
    const std::size_t dim = dimension_value(doc);
    const auto params = parameter_list(doc);
    return matrix_value(field(doc, "map", "$"), dim, "$.map", "from", "to",
                        std::set<std::string>(params.begin(), params.end()));
}

std::string serialize_morphism(const Matrix& f) {
    std::set<std::string> vars;
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < f.dim(); ++i) {
        Element row = f.row(i);
        for (const auto& c : row.coords())
            for (const auto& v : c.variables()) vars.insert(v);
        if (!row.is_zero()) rows.push_back({{"from", i}, {"to", sparse_json(row)}});
    }
    ojson doc;
    doc["dimension"] = f.dim();
    doc["parameters"] = std::vector<std::string>(vars.begin(), vars.end());
    doc["map"] = rows;
    return doc.dump(2) + "\n";
}

// ------------------------------------------------------------- element

namespace {

class ElementParser {
public:
    ElementParser(std::string_view text, const AlgebraFile& file) : text_(text), file_(file) {}

    Element parse() {
        Element out(file_.algebra.dim());
        skip();
        bool first = true;
        while (true) {
            Rational sign(1);
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = Rational(-1);
                ++pos_;
                skip();
            } else if (!first) {
                if (pos_ >= text_.size()) break;
                error("expected '+' or '-'");
            }
            first = false;
            term(out, sign);
            skip();
            if (pos_ >= text_.size()) break;
        }
        return out;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        throw ParseError("element expression, column " + std::to_string(pos_ + 1) + ": " + what);
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void term(Element& out, const Rational& sign) {
        Scalar coeff(sign);
        std::optional<std::size_t> basis;
        while (true) {
            skip();
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
                try {
                    coeff *= Rational::parse(text_.substr(start, pos_ - start));
                } catch (const Error& e) {
                    error(e.what());
                }
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
                const std::string name(text_.substr(start, pos_ - start));
                const auto& names = file_.basis;
                if (auto it = std::find(names.begin(), names.end(), name); it != names.end()) {
                    if (basis) error("two basis vectors in one term");
                    basis = static_cast<std::size_t>(it - names.begin());
                } else {
                    const auto& params = file_.algebra.params();
                    if (std::find(params.begin(), params.end(), name) == params.end())
                        error("unknown name \"" + name + "\"");
                    std::uint32_t e = 1;
                    skip();
                    if (peek() == '^') {
                        ++pos_;
                        skip();
                        std::size_t s = pos_;
                        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                        if (s == pos_) error("expected an exponent");
                        e = static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(s, pos_ - s))));
                    }
                    coeff *= Scalar::variable(name).pow(e);
                }
            } else {
                error("expected a number or a name");
            }
            skip();
            if (peek() != '*') break;
            ++pos_;
        }
        if (!basis) {
            if (coeff.is_zero()) return;  // "0" prints the zero element
            error("term without a basis vector");
        }
        out[*basis] += coeff;
    }

    std::string_view text_;
    const AlgebraFile& file_;
    std::size_t pos_ = 0;
};

ojson witness_json(const Witness& w) {
    ojson out;
    if (!w.basis.empty()) out["basis"] = w.basis;
    if (!w.point.empty()) {
        ojson point = ojson::object();
        for (const auto& [name, value] : w.point) point[name] = value.to_string();
        out["point"] = point;
    }
    ojson inputs = ojson::array();
    for (const auto& x : w.inputs) inputs.push_back(sparse_json(x));
    out["inputs"] = inputs;
    out["equation"] = w.equation;
    if (w.operator_row) out["operator_row"] = *w.operator_row;
    out["lhs"] = sparse_json(w.lhs);
    out["rhs"] = sparse_json(w.rhs);
    out["difference"] = sparse_json(w.difference());
    return out;
}

}  // namespace

Element parse_element(std::string_view text, const AlgebraFile& file) { return ElementParser(text, file).parse(); }

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    ojson out = ojson::array();
    for (const auto& r : reports) {
        ojson rec;
        rec["id"] = r.id;
        rec["status"] = to_string(r.status);
        rec["strategy"] = to_string(r.strategy.kind);
        rec["points"] = r.strategy.points;
        rec["seed"] = r.strategy.seed;
        rec["degree_bound"] = r.strategy.degree_bound;
        if (r.strategy.kind == StrategyKind::Sweep) rec["support"] = r.strategy.support;
        rec["evaluations"] = r.evaluations;
        if (!r.note.empty()) rec["note"] = r.note;
        if (r.witness) rec["witness"] = witness_json(*r.witness);
        out.push_back(std::move(rec));
    }
    return out.dump(2) + "\n";
}

}  // namespace homalt
