#pragma once

#include <map>
#include <vector>

#include "opforge/linear.hpp"

namespace opforge {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

// Rank by fraction-free (Bareiss) elimination after clearing denominators row-wise.
std::size_t exact_rank(const Matrix& rows);

// Basis of {v : M v = 0} for an m x ncols matrix, from the reduced row echelon form.
Matrix exact_kernel(const Matrix& m, std::size_t ncols);

// Whether target lies in the row span.
bool in_row_span(const Matrix& rows, const Row& target);

// Dense coordinates for LinCombs over a fixed ordered key list.
template <class K>
class Coordinates {
public:
    explicit Coordinates(std::vector<K> keys) : keys_(std::move(keys)) {
        for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
    }
    std::size_t dim() const { return keys_.size(); }
    const std::vector<K>& keys() const { return keys_; }
    bool contains(const K& k) const { return index_.count(k) != 0; }

    Row vector(const LinComb<K>& x) const {
        Row r(keys_.size(), Scalar(0));
        for (const auto& [k, c] : x) {
            auto it = index_.find(k);
            if (it == index_.end()) throw IncompatibleSpaces("term outside the coordinate space");
            r[it->second] = c;
        }
        return r;
    }
    LinComb<K> element(const Row& r) const {
        LinComb<K> x;
        for (std::size_t i = 0; i < r.size(); ++i) x.add(keys_[i], r[i]);
        return x;
    }

private:
    std::vector<K> keys_;
    std::map<K, std::size_t> index_;
};

}  // namespace opforge
