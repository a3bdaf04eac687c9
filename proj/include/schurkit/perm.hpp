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
#include <numeric>
#include <vector>

#include "schurkit/partition.hpp"

namespace schurkit {

/// Permutation of {0,...,n-1} in one-line notation. Composition follows
/// (sigma * tau)(i) = sigma(tau(i)); the convention is fixed here once and
/// tested exhaustively where representations depend on it.
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
                throw std::invalid_argument("Perm: not a permutation");
            seen[v] = true;
        }
    }

    static Perm identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        return Perm(std::move(im));
    }

    /// Adjacent transposition swapping i and i+1.
    static Perm transposition(int n, int i) {
        Perm p = identity(n);
        std::swap(p.images_[i], p.images_[i + 1]);
        return p;
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    friend Perm operator*(const Perm& sigma, const Perm& tau) {
        if (sigma.size() != tau.size()) throw std::invalid_argument("Perm: size mismatch");
        std::vector<int> im(sigma.size());
        for (int i = 0; i < sigma.size(); ++i) im[i] = sigma(tau(i));
        return Perm(std::move(im));
    }

    Perm inverse() const {
        std::vector<int> im(images_.size());
        for (int i = 0; i < size(); ++i) im[images_[i]] = i;
        return Perm(std::move(im));
    }

    Partition cycle_type() const {
        std::vector<bool> seen(images_.size(), false);
        std::vector<int> lens;
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = images_[j];
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.rbegin(), lens.rend());
        return Partition(std::move(lens));
    }

    int sign() const {
        int s = 1;
        for (int len : cycle_type().parts())
            if (len % 2 == 0) s = -s;
        return s;
    }

    /// Word in adjacent transpositions with
    /// *this = s_{word.back()} * ... * s_{word.front()}.
    /// Obtained by bubble-sorting the one-line notation; each recorded swap
    /// right-multiplies by the corresponding generator.
    std::vector<int> adjacent_word() const {
        std::vector<int> word;
        std::vector<int> im = images_;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i + 1 < static_cast<int>(im.size()); ++i) {
                if (im[i] > im[i + 1]) {
                    std::swap(im[i], im[i + 1]);
                    word.push_back(i);
                    moved = true;
                }
            }
        }
        return word;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

  private:
    std::vector<int> images_;
};

/// All n! permutations in lexicographic one-line order.
inline std::vector<Perm> all_perms(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<Perm> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

/// Canonical representative of the conjugacy class with the given cycle
/// type: consecutive cycles (0 1 ... ), ( ... ), ...
inline Perm class_representative(const Partition& type) {
    int n = type.size();
    std::vector<int> im(n);
    int start = 0;
    for (int len : type.parts()) {
        for (int k = 0; k < len; ++k) im[start + k] = start + (k + 1) % len;
        start += len;
    }
    return Perm(std::move(im));
}

}  // namespace schurkit
