#pragma once

#include <string>
#include <vector>

#include "opforge/species.hpp"

namespace opforge {

// Complete duplicate-free basis of A(n) on the labels 1..n, sorted by canonical encoding.
// Accepted names are the operad registry names.
std::vector<Element> enumerate_basis(const std::string& operad, int n);

std::vector<RootedTree> enumerate_trees(int n);
// Rooted hypertrees on the given distinct labels.
std::vector<Hypertree> enumerate_hypertrees(const std::vector<Label>& labels);
std::vector<Surjection> enumerate_surjections(int n);

// Ordered set partitions of {1..n} into k nonempty blocks, blocks kept sorted.
std::vector<std::vector<std::vector<Label>>> ordered_set_partitions(int n, int k);
// Compositions of n into exactly k positive parts.
std::vector<std::vector<int>> compositions(int n, int k);

void sort_by_encoding(std::vector<Element>& v);

}  // namespace opforge
