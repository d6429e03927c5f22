#include "yoknot/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace yoknot {

Permutation::Permutation(std::vector<int> images_1based) : img_(std::move(images_1based)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > n() || seen[static_cast<size_t>(v - 1)])
            throw MathError("invalid permutation image list");
        seen[static_cast<size_t>(v - 1)] = true;
    }
    build_word();
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) img[static_cast<size_t>(j - 1)] = j;
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n) throw MathError("transposition index out of range");
    Permutation p = identity(n);
    std::swap(p.img_[static_cast<size_t>(i - 1)], p.img_[static_cast<size_t>(i)]);
    p.build_word();
    return p;
}

bool Permutation::is_identity() const {
    for (int j = 1; j <= n(); ++j)
        if ((*this)(j) != j) return false;
    return true;
}

void Permutation::build_word() {
    // Greedy smallest left descent: i is a left descent of w iff
    // w^{-1}(i) > w^{-1}(i+1); peeling it gives the lex smallest word.
    word_.clear();
    std::vector<int> img = img_;
    auto position_of = [&](int value) {
        for (int j = 0; j < static_cast<int>(img.size()); ++j)
            if (img[static_cast<size_t>(j)] == value) return j;
        return -1;
    };
    for (;;) {
        int best = -1;
        for (int i = 1; i < n(); ++i) {
            if (position_of(i) > position_of(i + 1)) {
                best = i;
                break;
            }
        }
        if (best < 0) break;
        word_.push_back(best);
        // w := s_best * w  (swap the values best, best+1 in the image list)
        for (auto& v : img) {
            if (v == best)
                v = best + 1;
            else if (v == best + 1)
                v = best;
        }
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (int j = 1; j <= n(); ++j) img[static_cast<size_t>((*this)(j)-1)] = j;
    return Permutation(std::move(img));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw MathError("permutation size mismatch");
    std::vector<int> img(u.img_.size());
    for (int j = 1; j <= u.n(); ++j) img[static_cast<size_t>(j - 1)] = u(v(j));
    return Permutation(std::move(img));
}

bool Permutation::left_mul_lengthens(int i) const {
    // l(s_i w) > l(w) iff w^{-1}(i) < w^{-1}(i+1)
    int pi = 0, pi1 = 0;
    for (int j = 1; j <= n(); ++j) {
        if ((*this)(j) == i) pi = j;
        if ((*this)(j) == i + 1) pi1 = j;
    }
    return pi < pi1;
}

Permutation Permutation::extended(int n_new) const {
    if (n_new < n()) throw MathError("cannot shrink a permutation");
    std::vector<int> img = img_;
    for (int j = n() + 1; j <= n_new; ++j) img.push_back(j);
    return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int j = 1; j <= n(); ++j) {
        if (seen[static_cast<size_t>(j - 1)]) continue;
        std::vector<int> cyc;
        int cur = j;
        while (!seen[static_cast<size_t>(cur - 1)]) {
            seen[static_cast<size_t>(cur - 1)] = true;
            cyc.push_back(cur);
            cur = (*this)(cur);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (int j = 1; j <= n(); ++j) {
        if (j > 1) os << " ";
        os << (*this)(j);
    }
    os << "]";
    return os.str();
}

}  // namespace yoknot
