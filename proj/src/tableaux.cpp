#include "yoknot/tableaux.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>

namespace yoknot {

namespace {

// Partitions of k, first part largest, in descending lex order.
void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

const std::vector<std::vector<int>>& partitions_of(int k) {
    static std::map<int, std::vector<std::vector<int>>> cache;
    auto it = cache.find(k);
    if (it == cache.end()) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        partitions_rec(k, k == 0 ? 1 : k, cur, out);
        it = cache.emplace(k, std::move(out)).first;
    }
    return it->second;
}

BigInt factorial(int k) {
    BigInt out = 1;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

BigInt hook_count(const std::vector<int>& partition) {
    int k = 0;
    for (int p : partition) k += p;
    if (k == 0) return 1;
    std::vector<int> conj(static_cast<size_t>(partition[0]), 0);
    for (int p : partition)
        for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    BigInt hooks = 1;
    for (size_t i = 0; i < partition.size(); ++i)
        for (int j = 1; j <= partition[i]; ++j)
            hooks *= partition[i] - j + conj[static_cast<size_t>(j - 1)] - static_cast<int>(i);
    BigInt out = factorial(k) / hooks;
    return out;
}

}  // namespace

DMPartition::DMPartition(int d, int m) : d_(d), m_(m), cells_(static_cast<size_t>(d) * static_cast<size_t>(m)) {
    if (d < 1 || m < 1) throw MathError("cyclotomic only: (d,m)-partitions need finite positive d, m");
}

int DMPartition::size() const {
    int total = 0;
    for (const auto& cell : cells_)
        for (int p : cell) total += p;
    return total;
}

const std::vector<int>& DMPartition::cell(int dpos, int mpos) const {
    return cells_[static_cast<size_t>((dpos - 1) * m_ + (mpos - 1))];
}

std::vector<int>& DMPartition::cell(int dpos, int mpos) {
    return cells_[static_cast<size_t>((dpos - 1) * m_ + (mpos - 1))];
}

std::vector<DMNode> DMPartition::removable_nodes() const {
    std::vector<DMNode> out;
    for (int k = 1; k <= d_; ++k)
        for (int l = 1; l <= m_; ++l) {
            const auto& part = cell(k, l);
            for (size_t r = 0; r < part.size(); ++r) {
                int len = part[r];
                if (r + 1 < part.size() && part[r + 1] == len) continue;
                out.push_back(DMNode{static_cast<int>(r + 1), len, k, l});
            }
        }
    return out;
}

std::vector<DMNode> DMPartition::addable_nodes() const {
    std::vector<DMNode> out;
    for (int k = 1; k <= d_; ++k)
        for (int l = 1; l <= m_; ++l) {
            const auto& part = cell(k, l);
            for (size_t r = 0; r <= part.size(); ++r) {
                int len = r < part.size() ? part[r] : 0;
                int above = r == 0 ? INT32_MAX : part[r - 1];
                if (len < above) out.push_back(DMNode{static_cast<int>(r + 1), len + 1, k, l});
            }
        }
    return out;
}

DMPartition DMPartition::removed(const DMNode& node) const {
    DMPartition out = *this;
    auto& part = out.cell(node.dpos, node.mpos);
    size_t r = static_cast<size_t>(node.row - 1);
    if (r >= part.size() || part[r] != node.col) throw MathError("node is not removable");
    if (r + 1 < part.size() && part[r + 1] == part[r]) throw MathError("node is not removable");
    if (--part[r] == 0) part.erase(part.begin() + static_cast<long>(r));
    return out;
}

DMPartition DMPartition::added(const DMNode& node) const {
    DMPartition out = *this;
    auto& part = out.cell(node.dpos, node.mpos);
    size_t r = static_cast<size_t>(node.row - 1);
    if (r == part.size())
        part.push_back(1);
    else if (r < part.size())
        ++part[r];
    else
        throw MathError("node is not addable");
    if (part[r] != node.col) throw MathError("node is not addable");
    for (size_t i = 1; i < part.size(); ++i)
        if (part[i] > part[i - 1]) throw MathError("node is not addable");
    return out;
}

std::string DMPartition::str() const {
    std::ostringstream os;
    os << "(";
    for (int k = 1; k <= d_; ++k) {
        if (k > 1) os << "|";
        for (int l = 1; l <= m_; ++l) {
            if (l > 1) os << ",";
            os << "[";
            const auto& part = cell(k, l);
            for (size_t i = 0; i < part.size(); ++i) os << (i ? "," : "") << part[i];
            os << "]";
        }
    }
    os << ")";
    return os.str();
}

DMPartition StandardDMTableau::prefix_shape(int i) const {
    DMPartition out(shape_.d(), shape_.m());
    for (int j = 1; j <= i; ++j) {
        const DMNode& node = entries_[static_cast<size_t>(j - 1)];
        auto& part = out.cell(node.dpos, node.mpos);
        if (static_cast<size_t>(node.row) > part.size()) part.resize(static_cast<size_t>(node.row), 0);
        ++part[static_cast<size_t>(node.row - 1)];
    }
    return out;
}

StandardDMTableau StandardDMTableau::swapped(int i) const {
    std::vector<DMNode> entries = entries_;
    std::swap(entries[static_cast<size_t>(i - 1)], entries[static_cast<size_t>(i)]);
    return StandardDMTableau(shape_, std::move(entries));
}

bool StandardDMTableau::is_standard() const {
    // entry numbers must increase along rows and down columns of every cell
    std::map<std::tuple<int, int, int, int>, int> grid;  // (dpos,mpos,row,col) -> entry
    for (int i = 1; i <= size(); ++i) {
        const DMNode& nd = entries_[static_cast<size_t>(i - 1)];
        grid[{nd.dpos, nd.mpos, nd.row, nd.col}] = i;
    }
    for (const auto& [key, entry] : grid) {
        auto [dpos, mpos, row, col] = key;
        auto left = grid.find({dpos, mpos, row, col - 1});
        if (col > 1 && (left == grid.end() || left->second > entry)) return false;
        auto up = grid.find({dpos, mpos, row - 1, col});
        if (row > 1 && (up == grid.end() || up->second > entry)) return false;
    }
    return true;
}

std::string StandardDMTableau::str() const {
    std::ostringstream os;
    os << shape_.str() << ":";
    for (int i = 1; i <= size(); ++i) {
        const DMNode& nd = entries_[static_cast<size_t>(i - 1)];
        os << " " << i << "@(" << nd.dpos << "," << nd.mpos << "," << nd.row << "," << nd.col << ")";
    }
    return os.str();
}

std::vector<DMPartition> enumerate_dm_partitions(int d, int m, int n) {
    if (!is_cyclotomic_m(m)) throw MathError("cyclotomic only");
    DMPartition base(d, m);
    const int cells = d * m;
    std::vector<DMPartition> out;
    // Distribute sizes over cells in order, largest size to the first cell
    // first, then the partitions of each cell in descending lex order.
    std::function<void(int, int, DMPartition&)> rec = [&](int cell_idx, int remaining, DMPartition& acc) {
        if (cell_idx == cells) {
            if (remaining == 0) out.push_back(acc);
            return;
        }
        int dpos = cell_idx / m + 1, mpos = cell_idx % m + 1;
        for (int sz = remaining; sz >= 0; --sz) {
            for (const auto& part : partitions_of(sz)) {
                acc.cell(dpos, mpos) = part;
                rec(cell_idx + 1, remaining - sz, acc);
            }
            acc.cell(dpos, mpos).clear();
        }
    };
    rec(0, n, base);
    return out;
}

std::vector<StandardDMTableau> standard_tableaux(const DMPartition& shape) {
    int n = shape.size();
    if (n == 0) return {StandardDMTableau(shape, {})};
    std::vector<StandardDMTableau> out;
    for (const DMNode& node : shape.removable_nodes()) {
        for (const StandardDMTableau& sub : standard_tableaux(shape.removed(node))) {
            std::vector<DMNode> entries = sub.entries();
            entries.push_back(node);
            out.emplace_back(shape, std::move(entries));
        }
    }
    return out;
}

BigInt count_standard_tableaux(const DMPartition& shape) {
    BigInt count = factorial(shape.size());
    for (int k = 1; k <= shape.d(); ++k)
        for (int l = 1; l <= shape.m(); ++l) {
            const auto& part = shape.cell(k, l);
            int sz = 0;
            for (int p : part) sz += p;
            count = count / factorial(sz) * hook_count(part);
        }
    return count;
}

std::pair<BigInt, BigInt> dimension_identity_sides(int d, int m, int n) {
    if (!is_cyclotomic_m(m)) throw MathError("cyclotomic only");
    // sum over shapes of dim^2 = (n!)^2 [x^n] (sum_k A(k)/(k!)^2 x^k)^{d m},
    // with A(k) = sum over partitions of k of (hook count)^2. The inner sums
    // are honest per-partition tableau counts; the power series only
    // distributes sizes over the d*m cells.
    std::vector<Rational> series(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        BigInt a = 0;
        for (const auto& part : partitions_of(k)) {
            BigInt f = hook_count(part);
            a += f * f;
        }
        BigInt kf = factorial(k);
        series[static_cast<size_t>(k)] = Rational(a) / Rational(kf * kf);
    }
    auto mul_trunc = [n](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) out[static_cast<size_t>(i + j)] += x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
        return out;
    };
    std::vector<Rational> acc(static_cast<size_t>(n) + 1, Rational(0));
    acc[0] = 1;
    std::vector<Rational> base = series;
    int e = d * m;
    while (e > 0) {
        if (e & 1) acc = mul_trunc(acc, base);
        e >>= 1;
        if (e > 0) base = mul_trunc(base, base);
    }
    BigInt nf = factorial(n);
    Rational total = acc[static_cast<size_t>(n)] * Rational(nf * nf);
    if (total.get_den() != 1) throw MathError("internal: non-integer tableau count");

    BigInt expected = factorial(n);
    BigInt dm_pow;
    mpz_ui_pow_ui(dm_pow.get_mpz_t(), static_cast<unsigned long>(d) * static_cast<unsigned long>(m),
                  static_cast<unsigned long>(n));
    expected *= dm_pow;
    return {BigInt(total.get_num()), expected};
}

bool dimension_identity(int d, int m, int n) {
    auto [total, expected] = dimension_identity_sides(d, m, n);
    return total == expected;
}

}  // namespace yoknot
