#pragma once

#include <map>
#include <utility>

#include "shifted/bigint.hpp"

namespace shifted {

/// Graded Betti numbers beta_{i,j}, keyed by (homological index i,
/// internal degree j). Only non-zero entries are stored. Rendered
/// tables index rows by the shift d = j - i, as usual.
class betti_table {
public:
    using key = std::pair<int, int>; // (i, j)

    void add(int i, int j, const bigint& value);
    bigint get(int i, int j) const;
    const std::map<key, bigint>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    int max_homological_index() const; // -1 when empty
    int min_row() const;               // min j - i; 0 when empty
    int max_row() const;               // max j - i (the regularity); 0 when empty
    bigint total(int i) const;         // sum of column i

    friend bool operator==(const betti_table& a, const betti_table& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const betti_table& a, const betti_table& b) {
        return !(a == b);
    }

private:
    std::map<key, bigint> entries_;
};

} // namespace shifted
