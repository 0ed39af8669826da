#include "shifted/betti_table.hpp"

#include <algorithm>

#include "shifted/errors.hpp"

namespace shifted {

void betti_table::add(int i, int j, const bigint& value) {
    if (value == 0)
        return;
    if (value < 0)
        throw validation_error("betti_table: negative count");
    entries_[{i, j}] += value;
}

bigint betti_table::get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? bigint(0) : it->second;
}

int betti_table::max_homological_index() const {
    int max_i = -1;
    for (const auto& [key, value] : entries_)
        max_i = std::max(max_i, key.first);
    return max_i;
}

int betti_table::min_row() const {
    bool seen = false;
    int row = 0;
    for (const auto& [key, value] : entries_) {
        const int d = key.second - key.first;
        if (!seen || d < row) {
            row = d;
            seen = true;
        }
    }
    return row;
}

int betti_table::max_row() const {
    bool seen = false;
    int row = 0;
    for (const auto& [key, value] : entries_) {
        const int d = key.second - key.first;
        if (!seen || d > row) {
            row = d;
            seen = true;
        }
    }
    return row;
}

bigint betti_table::total(int i) const {
    bigint sum = 0;
    for (const auto& [key, value] : entries_)
        if (key.first == i)
            sum += value;
    return sum;
}

} // namespace shifted
