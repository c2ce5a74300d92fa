// Copyright 2026 The isored Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isored/weightlang.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string_view>

namespace isored {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class TokKind { Number, Var, Plus, Minus, Star, Slash, LParen, RParen, End };

struct Token {
    TokKind kind = TokKind::End;
    std::size_t column = 0;       // 1-based code points
    GaussianRational number;      // Number
    std::size_t exponent = 1;     // Var
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_spaces();
            Token t = next();
            out.push_back(t);
            if (t.kind == TokKind::End) return out;
        }
    }

private:
    [[noreturn]] void fail(const std::string& what, std::size_t column) const {
        throw SyntaxError(what, 0, column);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    // One byte forward, keeping the code-point column in sync.
    void advance() {
        ++pos_;
        while (pos_ < text_.size() && (static_cast<unsigned char>(text_[pos_]) & 0xC0) == 0x80) ++pos_;
        ++col_;
    }

    void skip_spaces() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) advance();
    }

    bool try_consume_keyword(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        for (char c : word)
            if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++col_;
        return true;
    }

    Integer read_uint() {
        std::string digits;
        while (!at_end() && is_digit(peek())) {
            digits.push_back(peek());
            advance();
        }
        return Integer(digits);
    }

    Token next() {
        Token t;
        t.column = col_;
        if (at_end()) return t;

        char c = peek();
        if (is_digit(c)) {
            Integer whole = read_uint();
            Integer den = 1;
            if (peek() == '/' && is_digit(peek(1))) {
                advance();
                den = read_uint();
                if (den == 0) fail("zero in a rational coefficient", t.column);
            }
            Rational value(whole, den);
            t.kind = TokKind::Number;
            if (peek() == 'i') {
                advance();
                t.number = GaussianRational(Rational(0), value);
            } else {
                t.number = GaussianRational(value);
            }
            return t;
        }

        if (try_consume_keyword("λ") || try_consume_keyword("lambda") || try_consume_keyword("L")) {
            t.kind = TokKind::Var;
            if (peek() == '^') {
                advance();
                if (!is_digit(peek())) fail("expected an exponent after '^'", col_);
                t.exponent = read_uint().convert_to<std::size_t>();
            }
            return t;
        }

        switch (c) {
            case '+': t.kind = TokKind::Plus; break;
            case '-': t.kind = TokKind::Minus; break;
            case '*': t.kind = TokKind::Star; break;
            case '/': t.kind = TokKind::Slash; break;
            case '(': t.kind = TokKind::LParen; break;
            case ')': t.kind = TokKind::RParen; break;
            default: fail(std::string("unexpected character '") + c + "'", t.column);
        }
        advance();
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t col_ = 1;
};

// ---------------------------------------------------------------------------
// Parser

class WeightParser {
public:
    explicit WeightParser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    RatFunc parse() {
        Polynomial num = parse_sum();
        Polynomial den(1);
        if (peek().kind == TokKind::Slash) {
            take();
            den = parse_sum();
        }
        if (peek().kind != TokKind::End) fail("unexpected trailing input");
        return RatFunc(std::move(num), std::move(den));
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(what, 0, peek().column);
    }

    Polynomial parse_sum() {
        bool negative = false;
        if (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
            negative = take().kind == TokKind::Minus;
        }
        Polynomial acc = parse_term();
        if (negative) acc = -acc;
        while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
            bool minus = take().kind == TokKind::Minus;
            Polynomial t = parse_term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    Polynomial parse_term() {
        switch (peek().kind) {
            case TokKind::Number: {
                GaussianRational c = take().number;
                if (auto k = maybe_var_suffix()) return Polynomial::monomial(c, *k);
                return Polynomial(c);
            }
            case TokKind::LParen: {
                take();
                Polynomial inner = parse_sum();
                if (peek().kind != TokKind::RParen) fail("expected ')'");
                take();
                if (auto k = maybe_var_suffix()) return inner * Polynomial::monomial(GaussianRational(1), *k);
                return inner;
            }
            case TokKind::Var:
                return Polynomial::monomial(GaussianRational(1), take().exponent);
            default:
                fail("expected a term");
        }
    }

    // Optional "*"? var after a coefficient; a '*' makes the var mandatory.
    std::optional<std::size_t> maybe_var_suffix() {
        if (peek().kind == TokKind::Star) {
            take();
            if (peek().kind != TokKind::Var) fail("expected λ after '*'");
            return take().exponent;
        }
        if (peek().kind == TokKind::Var) return take().exponent;
        return std::nullopt;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

std::string rational_magnitude(const Rational& r) {
    Rational a = r < 0 ? Rational(-r) : r;
    std::string s = numerator(a).str();
    if (denominator(a) != 1) s += "/" + denominator(a).str();
    return s;
}

// One printed monomial: `coefficient` is a signed rational, `imaginary`
// marks a bi-coefficient, k is the power of λ.
std::string monomial_body(const Rational& coefficient, bool imaginary, std::size_t k) {
    std::string mag = rational_magnitude(coefficient);
    std::string s;
    if (k == 0) {
        s = mag + (imaginary ? "i" : "");
    } else {
        if (imaginary || mag != "1") s = mag + (imaginary ? "i" : "");
        s += "λ";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

struct PrintedPoly {
    std::string text;
    std::size_t terms = 0;
};

PrintedPoly print_poly(const Polynomial& p) {
    if (p.is_zero()) return {"0", 1};
    PrintedPoly out;
    for (std::size_t k = p.coefficients().size(); k-- > 0;) {
        const GaussianRational& c = p.coeff(k);
        for (bool imaginary : {false, true}) {
            const Rational& part = imaginary ? c.im() : c.re();
            if (part == 0) continue;
            bool negative = part < 0;
            if (out.terms == 0) {
                if (negative) out.text += "-";
            } else {
                out.text += negative ? "-" : "+";
            }
            out.text += monomial_body(part, imaginary, k);
            ++out.terms;
        }
    }
    return out;
}

std::string maybe_parenthesize(const PrintedPoly& p) {
    return p.terms > 1 ? "(" + p.text + ")" : p.text;
}

// ---------------------------------------------------------------------------
// Graph documents

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::size_t codepoints(std::string_view s) {
    std::size_t n = 0;
    for (char c : s)
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
    return n;
}

bool valid_label(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == '#' || c == ':' || c == '[' || c == ']' || c == '=' || std::isspace(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

RatFunc parse_weight(const std::string& text) {
    return WeightParser(Lexer(text).run()).parse();
}

std::string print_polynomial(const Polynomial& p) { return print_poly(p).text; }

std::string print_weight(const RatFunc& f) {
    PrintedPoly num = print_poly(f.num());
    if (f.den() == Polynomial(1)) return num.text;
    PrintedPoly den = print_poly(f.den());
    return maybe_parenthesize(num) + "/" + maybe_parenthesize(den);
}

GraphDocument parse_document(const std::string& text) {
    GraphDocument doc;
    enum class Section { None, Graph, Vertices, Edges } section = Section::None;
    bool saw_vertices_section = false;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line == "[graph]")
                section = Section::Graph;
            else if (line == "[vertices]") {
                section = Section::Vertices;
                saw_vertices_section = true;
            } else if (line == "[edges]")
                section = Section::Edges;
            else
                throw SyntaxError("unknown section " + std::string(line), line_no, 1);
            continue;
        }

        switch (section) {
            case Section::None:
                throw SyntaxError("content before any section header", line_no, 1);
            case Section::Graph: {
                auto eq = line.find('=');
                if (eq == std::string_view::npos)
                    throw SyntaxError("expected 'key = value'", line_no, 1);
                std::string key(trim(line.substr(0, eq)));
                std::string value(trim(line.substr(eq + 1)));
                if (key == "name")
                    doc.name = value;
                else if (key == "undirected") {
                    if (value == "true")
                        doc.undirected = true;
                    else if (value == "false")
                        doc.undirected = false;
                    else
                        throw SyntaxError("undirected must be true or false", line_no, 1);
                } else
                    throw SyntaxError("unknown key '" + key + "' in [graph]", line_no, 1);
                break;
            }
            case Section::Vertices: {
                if (!valid_label(line))
                    throw SyntaxError("invalid vertex label '" + std::string(line) + "'", line_no, 1);
                doc.vertices.emplace_back(line);
                break;
            }
            case Section::Edges: {
                const std::string_view arrow = doc.undirected ? "--" : "->";
                auto arrow_pos = line.find(arrow);
                if (arrow_pos == std::string_view::npos)
                    throw SyntaxError(std::string("expected '") + std::string(arrow) + "' in edge line",
                                      line_no, 1);
                auto colon = line.find(':', arrow_pos + 2);
                if (colon == std::string_view::npos)
                    throw SyntaxError("expected ': weight' in edge line", line_no, 1);

                GraphDocument::Edge e;
                e.from = std::string(trim(line.substr(0, arrow_pos)));
                e.to = std::string(trim(line.substr(arrow_pos + 2, colon - arrow_pos - 2)));
                if (!valid_label(e.from) || !valid_label(e.to))
                    throw SyntaxError("invalid edge endpoints", line_no, 1);

                std::string_view rest = line.substr(colon + 1);
                std::string_view weight = trim(rest);
                e.weight = std::string(weight);
                if (e.weight.empty()) throw SyntaxError("empty weight expression", line_no, 1);
                e.line = line_no;
                // Column where the weight expression starts, in code points
                // relative to the full raw line.
                std::size_t prefix_bytes = (line.data() - raw.data())  // leading trim
                                           + colon + 1 + (weight.data() - rest.data());
                e.column = codepoints(std::string_view(raw).substr(0, prefix_bytes)) + 1;
                doc.edges.push_back(std::move(e));
                break;
            }
        }
    }

    if (doc.vertices.empty()) {
        std::string what = saw_vertices_section ? "vertex list is empty"
                                                : "missing [vertices] section with at least one vertex";
        throw SyntaxError(what, line_no == 0 ? 1 : line_no, 1);
    }
    return doc;
}

Graph to_graph(const GraphDocument& doc) {
    Graph g(doc.vertices, doc.undirected);
    std::set<std::pair<Label, Label>> listed;
    for (const auto& e : doc.edges) {
        if (!g.has_vertex(e.from)) throw UnknownVertex(e.from);
        if (!g.has_vertex(e.to)) throw UnknownVertex(e.to);
        RatFunc w;
        try {
            w = parse_weight(e.weight);
        } catch (const SyntaxError& err) {
            throw SyntaxError(err.detail, e.line, e.column + err.column - 1);
        }
        auto mark = [&](const Label& a, const Label& b) {
            if (!listed.insert({a, b}).second) throw DuplicateEdge(a, b);
            g.set_weight(a, b, w);
        };
        mark(e.from, e.to);
        if (doc.undirected && e.from != e.to) mark(e.to, e.from);
    }
    return g;
}

std::string serialize_graph(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "[graph]\n";
    if (!name.empty()) out << "name = " << name << "\n";
    out << "undirected = " << (g.undirected() ? "true" : "false") << "\n\n";
    out << "[vertices]\n";
    for (const auto& l : g.labels()) out << l << "\n";
    out << "\n[edges]\n";
    if (g.undirected()) {
        for (const auto& [pair, w] : g.weights()) {
            const auto& [u, v] = pair;
            if (g.index_of(u) > g.index_of(v)) continue;  // one line per unordered pair
            if (g.weight(v, u) != w)
                throw Error("undirected graph has asymmetric weights; cannot serialize");
            out << u << " -- " << v << " : " << print_weight(w) << "\n";
        }
    } else {
        for (const auto& [pair, w] : g.weights())
            out << pair.first << " -> " << pair.second << " : " << print_weight(w) << "\n";
    }
    return out.str();
}

}  // namespace isored
