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

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace schurkit {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; no operation ever rounds.
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(long n) : q_(static_cast<signed long>(n)) {}
    Rat(long long n) : q_(static_cast<signed long>(n)) {}
    Rat(int n) : q_(static_cast<signed long>(n)) {}
    explicit Rat(const mpz_class& n) : q_(n) {}
    Rat(long num, long den) : q_(static_cast<signed long>(num), static_cast<signed long>(den)) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }
    Rat(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p" or "p/q" with optional sign.
    static Rat parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("Rat: cannot parse '" + text + "'");
        if (q.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + text + "'");
        q.canonicalize();
        return Rat(q);
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }

    /// Value as a machine integer; throws when it is not one or does not fit.
    long long as_int() const {
        if (!is_integer() || !q_.get_num().fits_slong_p())
            throw std::runtime_error("Rat: not representable as machine integer");
        return q_.get_num().get_si();
    }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.q_; }

  private:
    mpq_class q_;
};

inline bool is_zero(const Rat& r) { return r.is_zero(); }

inline Rat pow(const Rat& base, long exp) {
    if (exp < 0) throw std::invalid_argument("Rat: negative exponent");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exp));
    return Rat(num, den);
}

inline mpz_class factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return f;
}

inline long long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!b.fits_slong_p()) throw std::overflow_error("binomial: result too large");
    return b.get_si();
}

}  // namespace schurkit
