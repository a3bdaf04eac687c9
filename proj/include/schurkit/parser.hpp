/*
   Copyright 2026 The SchurKit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cctype>
#include <set>
#include <string>
#include <string_view>

#include "schurkit/functor.hpp"
#include "schurkit/mpoly.hpp"

namespace schurkit {

/// Syntax error with the byte offset of the offending token and the set of
/// tokens that would have been accepted there.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, std::size_t offset, std::set<std::string> expected)
        : std::runtime_error(render(message, offset, expected)),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::set<std::string>& expected() const { return expected_; }

  private:
    static std::string render(const std::string& message, std::size_t offset,
                              const std::set<std::string>& expected) {
        std::string s = message + " at byte " + std::to_string(offset);
        if (!expected.empty()) {
            s += "; expected ";
            bool first = true;
            for (const auto& e : expected) {
                if (!first) s += ", ";
                first = false;
                s += e;
            }
        }
        return s;
    }

    std::size_t offset_;
    std::set<std::string> expected_;
};

namespace detail {

/// Shared scanner for the functor grammar and the polynomial entry grammar.
/// Whitespace is insignificant.
class Scanner {
  public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::size_t pos() {
        skip_ws();
        return pos_;
    }

    bool peek_char(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept_char(char c) {
        if (!peek_char(c)) return false;
        ++pos_;
        return true;
    }

    void expect_char(char c, const char* what) {
        if (!accept_char(c))
            throw ParseError("syntax error", pos(), {std::string("'") + c + "' (" + what + ")"});
    }

    bool peek_ident() {
        skip_ws();
        return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw ParseError("syntax error", start, {"identifier"});
        return std::string(text_.substr(start, pos_ - start));
    }

    bool peek_number() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    long number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("syntax error", start, {"natural number"});
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("syntax error", start, {"natural number"});
        return std::string(text_.substr(start, pos_ - start));
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : sc_(text) {}

    FunctorExpr parse() {
        FunctorExpr e = expr();
        if (!sc_.eof())
            throw ParseError("trailing input", sc_.pos(), {"'+'", "'*'", "end of input"});
        return e;
    }

  private:
    FunctorExpr expr() {
        std::vector<FunctorExpr> terms{term()};
        while (sc_.accept_char('+')) terms.push_back(term());
        return terms.size() == 1 ? terms[0] : FunctorExpr::sum(std::move(terms));
    }

    FunctorExpr term() {
        std::vector<FunctorExpr> factors{factor()};
        while (sc_.accept_char('*')) factors.push_back(factor());
        return factors.size() == 1 ? factors[0] : FunctorExpr::tensor_prod(std::move(factors));
    }

    FunctorExpr factor() {
        FunctorExpr left = atom();
        // "o" binds two atoms; it is an identifier-like keyword.
        std::size_t save = sc_.pos();
        if (sc_.peek_ident()) {
            std::string word = sc_.ident();
            if (word == "o") return FunctorExpr::compose(left, atom());
            throw ParseError("unexpected identifier '" + word + "'", save,
                             {"'o'", "'+'", "'*'", "end of input"});
        }
        return left;
    }

    FunctorExpr atom() {
        if (sc_.accept_char('(')) {
            FunctorExpr e = expr();
            sc_.expect_char(')', "closing parenthesis");
            return e;
        }
        std::size_t start = sc_.pos();
        if (!sc_.peek_ident())
            throw ParseError("syntax error", start,
                             {"Id", "Const(", "Sym^", "Wedge^", "Tensor^", "Gamma^", "Schur[", "'('"});
        std::string word = sc_.ident();
        if (word == "Id") return FunctorExpr::id();
        if (word == "Const") {
            sc_.expect_char('(', "Const argument");
            long d = sc_.number();
            sc_.expect_char(')', "Const argument");
            return FunctorExpr::constant(d);
        }
        if (word == "Sym" || word == "Wedge" || word == "Tensor" || word == "Gamma") {
            sc_.expect_char('^', "power");
            long n = sc_.number();
            if (word == "Sym") return FunctorExpr::sym_pow(static_cast<int>(n));
            if (word == "Wedge") return FunctorExpr::wedge_pow(static_cast<int>(n));
            if (word == "Tensor") return FunctorExpr::tensor_pow(static_cast<int>(n));
            return FunctorExpr::gamma_pow(static_cast<int>(n));
        }
        if (word == "Schur") {
            sc_.expect_char('[', "partition");
            std::vector<int> parts;
            parts.push_back(static_cast<int>(sc_.number()));
            while (sc_.accept_char(',')) parts.push_back(static_cast<int>(sc_.number()));
            std::size_t close = sc_.pos();
            sc_.expect_char(']', "partition");
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
                    throw ParseError("not a partition (parts must be positive and weakly decreasing)",
                                     close, {});
            }
            return FunctorExpr::schur(Partition(std::move(parts)));
        }
        throw ParseError("unknown operation '" + word + "'", start,
                         {"Id", "Const", "Sym", "Wedge", "Tensor", "Gamma", "Schur"});
    }

    Scanner sc_;
};

/// Polynomial entry grammar for the matrix text format:
///   poly   := ['-'] pterm { ('+'|'-') pterm }
///   pterm  := pfactor { '*' pfactor }
///   pfactor:= base ['^' nat]
///   base   := nat ['/' nat] | identifier | '(' poly ')'
class PolyParser {
  public:
    PolyParser(std::string_view text, PolyVars vars) : sc_(text), vars_(std::move(vars)) {
        for (std::size_t i = 0; i < vars_->size(); ++i) index_[(*vars_)[i]] = i;
    }

    MPoly parse() {
        MPoly p = poly();
        if (!sc_.eof()) throw ParseError("trailing input", sc_.pos(), {"'+'", "'-'", "'*'"});
        return p;
    }

    /// Collects identifiers without building a polynomial.
    static void collect_vars(std::string_view text, std::set<std::string>& out) {
        Scanner sc(text);
        while (!sc.eof()) {
            if (sc.peek_ident()) {
                out.insert(sc.ident());
                continue;
            }
            if (sc.peek_number()) {
                sc.number();
                continue;
            }
            bool consumed = false;
            for (char c : {'+', '-', '*', '^', '/', '(', ')'})
                if (sc.accept_char(c)) { consumed = true; break; }
            if (!consumed) throw ParseError("unexpected character", sc.pos(), {});
        }
    }

  private:
    MPoly poly() {
        MPoly acc(vars_);
        bool negate = sc_.accept_char('-');
        MPoly first = pterm();
        acc = negate ? -first : first;
        while (true) {
            if (sc_.accept_char('+')) acc += pterm();
            else if (sc_.accept_char('-')) acc -= pterm();
            else break;
        }
        return acc;
    }

    MPoly pterm() {
        MPoly acc = pfactor();
        while (sc_.accept_char('*')) acc *= pfactor();
        return acc;
    }

    MPoly pfactor() {
        MPoly base_val = base();
        if (sc_.accept_char('^')) {
            long e = sc_.number();
            MPoly acc = MPoly::constant(Rat(1), vars_);
            for (long i = 0; i < e; ++i) acc *= base_val;
            return acc;
        }
        return base_val;
    }

    MPoly base() {
        if (sc_.accept_char('(')) {
            MPoly p = poly();
            sc_.expect_char(')', "closing parenthesis");
            return p;
        }
        if (sc_.peek_number()) {
            std::string num = sc_.digits();
            if (sc_.accept_char('/')) {
                std::string den = sc_.digits();
                return MPoly::constant(Rat::parse(num + "/" + den), vars_);
            }
            return MPoly::constant(Rat::parse(num), vars_);
        }
        if (sc_.peek_ident()) {
            std::size_t where = sc_.pos();
            std::string name = sc_.ident();
            auto it = index_.find(name);
            if (it == index_.end())
                throw ParseError("unknown variable '" + name + "'", where, {});
            return MPoly::variable(it->second, vars_);
        }
        throw ParseError("syntax error", sc_.pos(), {"number", "variable", "'('"});
    }

    Scanner sc_;
    PolyVars vars_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace detail

/// Parse the functor expression grammar:
///   expr   := term { "+" term }
///   term   := factor { "*" factor }
///   factor := atom [ "o" atom ]
///   atom   := "Id" | "Const(" nat ")" | "Sym^" nat | "Wedge^" nat
///           | "Tensor^" nat | "Gamma^" nat | "Schur[" nat {"," nat} "]"
///           | "(" expr ")"
inline FunctorExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Parse one polynomial entry over a fixed ring.
inline MPoly parse_poly(std::string_view text, const PolyVars& vars) {
    return detail::PolyParser(text, vars).parse();
}

inline void collect_poly_vars(std::string_view text, std::set<std::string>& out) {
    detail::PolyParser::collect_vars(text, out);
}

}  // namespace schurkit
