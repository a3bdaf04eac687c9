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

#include <sstream>
#include <string>
#include <vector>

#include "schurkit/rational.hpp"

namespace schurkit {

/// Integer partition: weakly decreasing positive parts. Indexes Specht
/// modules, Schur functors and conjugacy classes throughout.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    Partition conjugate() const {
        std::vector<int> c;
        if (!parts_.empty()) {
            c.resize(parts_[0], 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++c[j];
        }
        return Partition(std::move(c));
    }

    /// Literal form used by the CLI and all JSON schemas, e.g. "[3,1,1]".
    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ",";
            os << parts_[i];
        }
        os << "]";
        return os.str();
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

  private:
    void validate() const {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    std::vector<int> parts_;
};

/// All partitions of n in ascending lexicographic order of the parts vector:
/// (1,...,1) first, (n) last. This enumeration order is shared by every
/// partition-indexed export.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            std::vector<int> parts = cur;
            out.emplace_back(std::move(parts));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    rec(rec, n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return out;
}

/// Hook length of cell (i, j), 0-based.
inline int hook_length(const Partition& lambda, int i, int j) {
    Partition conj = lambda.conjugate();
    return lambda.part(i) - j + conj.part(j) - i - 1;
}

/// Number of standard Young tableaux of shape lambda, by the hook-length
/// formula n!/prod(hooks).
inline long long hook_dimension(const Partition& lambda) {
    int n = lambda.size();
    mpz_class num = factorial(n);
    mpz_class den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) den *= hook_length(lambda, i, j);
    mpz_class q = num / den;
    if (!q.fits_slong_p()) throw std::overflow_error("hook_dimension: too large");
    return q.get_si();
}

/// Number of semistandard Young tableaux of shape lambda with entries in
/// {1,...,d}: prod (d + j - i)/hook(i,j). Zero exactly when length > d.
inline long long ssyt_count(const Partition& lambda, int d) {
    if (d < 0) throw std::invalid_argument("ssyt_count: negative d");
    mpz_class num = 1, den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) {
            int f = d + j - i;
            if (f <= 0) return 0;
            num *= f;
            den *= hook_length(lambda, i, j);
        }
    mpz_class q = num / den;
    if (!q.fits_slong_p()) throw std::overflow_error("ssyt_count: too large");
    return q.get_si();
}

}  // namespace schurkit
