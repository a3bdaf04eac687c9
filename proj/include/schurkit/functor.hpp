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

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "schurkit/symrep.hpp"

namespace schurkit {

/// AST of an operation on module categories. Nodes are immutable and shared;
/// FunctorExpr itself has cheap value semantics.
class FunctorExpr {
  public:
    enum class Kind { Const, Id, TensorPow, SymPow, WedgePow, GammaPow, Schur, Sum, TensorProd, Compose };

    static FunctorExpr constant(long dim) {
        if (dim < 0) throw std::invalid_argument("Const: negative dimension");
        return make(Kind::Const, dim);
    }
    static FunctorExpr id() { return make(Kind::Id, 0); }
    static FunctorExpr tensor_pow(int n) { return pow_node(Kind::TensorPow, n); }
    static FunctorExpr sym_pow(int n) { return pow_node(Kind::SymPow, n); }
    static FunctorExpr wedge_pow(int n) { return pow_node(Kind::WedgePow, n); }
    static FunctorExpr gamma_pow(int n) { return pow_node(Kind::GammaPow, n); }

    /// Schur operation of a Specht module ("Schur[2,1]" in the grammar).
    static FunctorExpr schur(const Partition& lambda) {
        FunctorExpr e = make(Kind::Schur, lambda.size());
        e.node_->rep = specht_representation_cached(lambda);
        e.node_->schur_label = lambda;
        return e;
    }

    /// Schur operation of an arbitrary right representation.
    static FunctorExpr schur(SymRep rep) {
        FunctorExpr e = make(Kind::Schur, rep.n());
        e.node_->rep = std::move(rep);
        return e;
    }

    static FunctorExpr sum(std::vector<FunctorExpr> terms) {
        if (terms.empty()) throw std::invalid_argument("Sum: empty");
        if (terms.size() == 1) return terms[0];
        FunctorExpr e = make(Kind::Sum, 0);
        e.node_->children = std::move(terms);
        return e;
    }

    static FunctorExpr tensor_prod(std::vector<FunctorExpr> factors) {
        if (factors.empty()) throw std::invalid_argument("TensorProd: empty");
        if (factors.size() == 1) return factors[0];
        FunctorExpr e = make(Kind::TensorProd, 0);
        e.node_->children = std::move(factors);
        return e;
    }

    static FunctorExpr compose(FunctorExpr outer, FunctorExpr inner) {
        FunctorExpr e = make(Kind::Compose, 0);
        e.node_->children = {std::move(outer), std::move(inner)};
        return e;
    }

    Kind kind() const { return node_->kind; }
    long param() const { return node_->param; }
    const std::vector<FunctorExpr>& children() const { return node_->children; }
    const SymRep& schur_rep() const {
        if (kind() != Kind::Schur) throw std::logic_error("schur_rep on non-Schur node");
        return *node_->rep;
    }
    const std::optional<Partition>& schur_label() const { return node_->schur_label; }

    friend bool operator==(const FunctorExpr& a, const FunctorExpr& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind() || a.param() != b.param()) return false;
        if (a.kind() == Kind::Schur) {
            if (a.schur_label() && b.schur_label()) return *a.schur_label() == *b.schur_label();
            return a.node_->rep->key() == b.node_->rep->key();
        }
        if (a.children().size() != b.children().size()) return false;
        for (std::size_t i = 0; i < a.children().size(); ++i)
            if (!(a.children()[i] == b.children()[i])) return false;
        return true;
    }
    friend bool operator!=(const FunctorExpr& a, const FunctorExpr& b) { return !(a == b); }

    /// Canonical surface syntax; parses back to an equal AST.
    std::string str() const { return print(Prec::Sum); }

    friend std::ostream& operator<<(std::ostream& os, const FunctorExpr& e) { return os << e.str(); }

  private:
    // Grammar levels: expr(+) < term(*) < factor(o) < atom. A node prints
    // bare when its own level is at least the context's.
    enum class Prec { Sum = 0, Prod = 1, Factor = 2, Atom = 3 };

    struct Node {
        Kind kind;
        long param = 0;
        std::optional<SymRep> rep;
        std::optional<Partition> schur_label;
        std::vector<FunctorExpr> children;
    };

    static FunctorExpr make(Kind k, long param) {
        FunctorExpr e;
        e.node_ = std::make_shared<Node>();
        e.node_->kind = k;
        e.node_->param = param;
        return e;
    }

    static FunctorExpr pow_node(Kind k, int n) {
        if (n < 0) throw std::invalid_argument("power: negative exponent");
        return make(k, n);
    }

    std::string print(Prec context) const {
        std::ostringstream os;
        Prec mine = Prec::Atom;
        switch (kind()) {
            case Kind::Const: os << "Const(" << param() << ")"; break;
            case Kind::Id: os << "Id"; break;
            case Kind::TensorPow: os << "Tensor^" << param(); break;
            case Kind::SymPow: os << "Sym^" << param(); break;
            case Kind::WedgePow: os << "Wedge^" << param(); break;
            case Kind::GammaPow: os << "Gamma^" << param(); break;
            case Kind::Schur:
                if (schur_label()) {
                    os << "Schur[";
                    const auto& parts = schur_label()->parts();
                    for (std::size_t i = 0; i < parts.size(); ++i) {
                        if (i) os << ",";
                        os << parts[i];
                    }
                    os << "]";
                } else {
                    os << "Schur<n=" << param() << ",dim=" << node_->rep->dim() << ">";
                }
                break;
            case Kind::Sum:
                mine = Prec::Sum;
                for (std::size_t i = 0; i < children().size(); ++i) {
                    if (i) os << " + ";
                    os << children()[i].print(Prec::Prod);
                }
                break;
            case Kind::TensorProd:
                mine = Prec::Prod;
                for (std::size_t i = 0; i < children().size(); ++i) {
                    if (i) os << " * ";
                    os << children()[i].print(Prec::Factor);
                }
                break;
            case Kind::Compose:
                mine = Prec::Factor;
                os << children()[0].print(Prec::Atom) << " o " << children()[1].print(Prec::Atom);
                break;
        }
        std::string body = os.str();
        bool needs_parens = static_cast<int>(mine) < static_cast<int>(context);
        return needs_parens ? "(" + body + ")" : body;
    }

    std::shared_ptr<Node> node_;
};

/// Structural bound N with F(c I) annihilated by prod_{k<=N} (x - c^k):
/// every homogeneous component of F has degree at most N.
inline long degree_bound(const FunctorExpr& e) {
    using K = FunctorExpr::Kind;
    switch (e.kind()) {
        case K::Const: return 0;
        case K::Id: return 1;
        case K::TensorPow:
        case K::SymPow:
        case K::WedgePow:
        case K::GammaPow:
        case K::Schur: return e.param();
        case K::Sum: {
            long b = 0;
            for (const auto& c : e.children()) b = std::max(b, degree_bound(c));
            return b;
        }
        case K::TensorProd: {
            long b = 0;
            for (const auto& c : e.children()) b += degree_bound(c);
            return b;
        }
        case K::Compose: return degree_bound(e.children()[0]) * degree_bound(e.children()[1]);
    }
    return 0;
}

}  // namespace schurkit
