#pragma once

#include <string>
#include <vector>

#include "yoknot/errors.hpp"

namespace yoknot {

// Permutation of {1..n} with a cached lexicographically smallest reduced
// word in s_1..s_{n-1}. Composition is (u*v)(j) = u(v(j)).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images_1based);

    static Permutation identity(int n);
    static Permutation transposition(int n, int i);  // s_i, 1 <= i <= n-1

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int j) const { return img_[static_cast<size_t>(j - 1)]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    int length() const { return static_cast<int>(word_.size()); }
    // Lexicographically smallest reduced word; w = s_{word[0]} ... s_{word!back}.
    const std::vector<int>& reduced_word() const { return word_; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& u, const Permutation& v);

    // true iff l(s_i * w) > l(w), i.e. left multiplication by s_i extends.
    bool left_mul_lengthens(int i) const;

    // Extends to {1..n_new} fixing the new points.
    Permutation extended(int n_new) const;

    std::vector<std::vector<int>> cycles() const;  // including fixed points

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    std::string str() const;

  private:
    void build_word();

    std::vector<int> img_;   // img_[j-1] = w(j)
    std::vector<int> word_;  // cached reduced word
};

}  // namespace yoknot
