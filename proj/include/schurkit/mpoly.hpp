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

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "schurkit/rational.hpp"

namespace schurkit {

/// Ordered list of variable identifiers, shared between all polynomials of
/// the same ring. Arithmetic between polynomials over different rings throws.
using PolyVars = std::shared_ptr<const std::vector<std::string>>;

inline PolyVars make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

/// Graded lexicographic order on exponent vectors: lower total degree first,
/// ties broken lexicographically.
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Multivariate polynomial with exact rational coefficients. Terms are kept
/// in graded-lex order and zero coefficients are never stored, so equality
/// is plain term-map equality.
class MPoly {
  public:
    using TermMap = std::map<std::vector<int>, Rat, GrlexLess>;

    MPoly() : vars_(empty_vars()) {}
    explicit MPoly(PolyVars vars) : vars_(std::move(vars)) {}

    static MPoly constant(const Rat& c, PolyVars vars) {
        MPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_[std::vector<int>(p.nvars(), 0)] = c;
        return p;
    }

    static MPoly variable(std::size_t index, PolyVars vars) {
        MPoly p(std::move(vars));
        if (index >= p.nvars()) throw std::invalid_argument("MPoly: variable index out of range");
        std::vector<int> e(p.nvars(), 0);
        e[index] = 1;
        p.terms_[e] = Rat(1);
        return p;
    }

    static MPoly monomial(const Rat& c, std::vector<int> exps, PolyVars vars) {
        MPoly p(std::move(vars));
        if (exps.size() != p.nvars()) throw std::invalid_argument("MPoly: exponent vector length mismatch");
        if (!c.is_zero()) p.terms_[std::move(exps)] = c;
        return p;
    }

    const PolyVars& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && term_degree(terms_.begin()->first) == 0);
    }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::runtime_error("MPoly: not a constant polynomial");
        return terms_.begin()->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, term_degree(e));
        return d;
    }

    /// True when every term has total degree exactly n (the zero polynomial
    /// is homogeneous of every degree).
    bool is_homogeneous(int n) const {
        for (const auto& [e, c] : terms_)
            if (term_degree(e) != n) return false;
        return true;
    }

    MPoly operator-() const {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        require_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        require_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.require_same_ring(b);
        MPoly r(a.vars_);
        std::vector<int> e(a.nvars());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MPoly& operator*=(const Rat& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
    friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Renders terms highest grlex order first, e.g. "3/2*T1^2*T2 + T1 + -1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << (c.sign() < 0 ? " - " : " + ");
            else if (c.sign() < 0) os << "-";
            first = false;
            Rat ac = c.sign() < 0 ? -c : c;
            bool has_var = term_degree(e) > 0;
            bool coeff_shown = !has_var || ac != Rat(1);
            if (coeff_shown) os << ac.str();
            bool need_star = coeff_shown;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << "*";
                need_star = true;
                os << (*vars_)[i];
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

  private:
    static int term_degree(const std::vector<int>& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    }

    static const PolyVars& empty_vars() {
        static const PolyVars v = make_vars({});
        return v;
    }

    void require_same_ring(const MPoly& o) const {
        if (vars_ != o.vars_ && *vars_ != *o.vars_)
            throw std::invalid_argument("MPoly: mixed polynomial rings");
    }

    void add_term(const std::vector<int>& e, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PolyVars vars_;
    TermMap terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

/// Ring homomorphism MPoly -> Rat given a value for every variable.
/// The assignment must cover all variables of the ring.
inline Rat substitute(const MPoly& p, const std::map<std::string, Rat>& assignment) {
    std::vector<Rat> values;
    values.reserve(p.nvars());
    for (const auto& name : *p.vars()) {
        auto it = assignment.find(name);
        if (it == assignment.end()) {
            bool used = false;
            std::size_t idx = values.size();
            for (const auto& [e, c] : p.terms())
                if (e[idx] != 0) { used = true; break; }
            if (used) throw std::invalid_argument("substitute: missing variable " + name);
            values.emplace_back(0);
        } else {
            values.push_back(it->second);
        }
    }
    Rat acc(0);
    for (const auto& [e, c] : p.terms()) {
        Rat term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= pow(values[i], e[i]);
        acc += term;
    }
    return acc;
}

}  // namespace schurkit
