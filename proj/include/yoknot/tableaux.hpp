#pragma once

#include <string>
#include <vector>

#include "yoknot/numeric.hpp"

namespace yoknot {

// A node of a (d,m)-partition: cell position (dpos, mpos) plus row/column
// inside that cell's Young diagram. All coordinates are 1-based.
struct DMNode {
    int row, col;
    int dpos, mpos;

    friend bool operator==(const DMNode& x, const DMNode& y) {
        return x.row == y.row && x.col == y.col && x.dpos == y.dpos && x.mpos == y.mpos;
    }
    friend bool operator<(const DMNode& x, const DMNode& y) {
        if (x.dpos != y.dpos) return x.dpos < y.dpos;
        if (x.mpos != y.mpos) return x.mpos < y.mpos;
        if (x.row != y.row) return x.row < y.row;
        return x.col < y.col;
    }
};

// d x m grid of integer partitions, total size n.
class DMPartition {
  public:
    DMPartition() : DMPartition(1, 1) {}
    DMPartition(int d, int m);

    int d() const { return d_; }
    int m() const { return m_; }
    int size() const;

    const std::vector<int>& cell(int dpos, int mpos) const;
    std::vector<int>& cell(int dpos, int mpos);

    std::vector<DMNode> removable_nodes() const;
    std::vector<DMNode> addable_nodes() const;
    DMPartition removed(const DMNode& node) const;
    DMPartition added(const DMNode& node) const;

    friend bool operator==(const DMPartition& x, const DMPartition& y) {
        return x.d_ == y.d_ && x.m_ == y.m_ && x.cells_ == y.cells_;
    }
    friend bool operator<(const DMPartition& x, const DMPartition& y) { return x.cells_ < y.cells_; }

    std::string str() const;

  private:
    int d_, m_;
    std::vector<std::vector<int>> cells_;  // index (dpos-1)*m + (mpos-1)
};

// Standard filling: entries[i-1] is the node containing i, increasing along
// rows and down columns of every cell diagram.
class StandardDMTableau {
  public:
    StandardDMTableau(DMPartition shape, std::vector<DMNode> entries)
        : shape_(std::move(shape)), entries_(std::move(entries)) {}

    const DMPartition& shape() const { return shape_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const DMNode& node_of(int i) const { return entries_[static_cast<size_t>(i - 1)]; }
    const std::vector<DMNode>& entries() const { return entries_; }

    // Shape formed by the entries 1..i.
    DMPartition prefix_shape(int i) const;

    // Entry swap by the transposition (i, i+1); the result may be non-standard.
    StandardDMTableau swapped(int i) const;
    bool is_standard() const;

    friend bool operator==(const StandardDMTableau& x, const StandardDMTableau& y) {
        return x.shape_ == y.shape_ && x.entries_ == y.entries_;
    }

    std::string str() const;

  private:
    DMPartition shape_;
    std::vector<DMNode> entries_;
};

// Complete duplicate-free enumeration in a fixed deterministic order.
std::vector<DMPartition> enumerate_dm_partitions(int d, int m, int n);

std::vector<StandardDMTableau> standard_tableaux(const DMPartition& shape);

// Number of standard tableaux via the hook length formula times the
// multinomial over cells.
BigInt count_standard_tableaux(const DMPartition& shape);

// True iff sum over shapes of (dim)^2 equals (dm)^n n!. Uses a generating
// function over cell sizes, so large d*m with n = 1 stays cheap; the
// per-shape counts are cross-checked against explicit enumeration in tests.
bool dimension_identity(int d, int m, int n);

// The two sides of the dimension identity, for reporting.
std::pair<BigInt, BigInt> dimension_identity_sides(int d, int m, int n);

}  // namespace yoknot
