#pragma once

#include <string>
#include <vector>

#include "opforge/species.hpp"

namespace opforge {

// sigma[i-1] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
std::vector<Perm> all_perms(int n);
Perm inverse(const Perm& p);
// (a*b)(i) = a(b(i))
Perm compose(const Perm& a, const Perm& b);
std::string format_perm(const Perm& p);  // cycle notation, "id" for the identity

// Replace every label i by sigma(i); e must carry the labels 1..n exactly once.
Element relabel(const Element& e, const Perm& sigma);
Tensor relabel(const Tensor& t, const Perm& sigma);

// #{sigma : relabel(e, sigma) = e}, by running through S_n.
long stabilizer_order_brute(const Element& e);
// Tree automorphisms: product over nodes of multiplicity factorials of isomorphic siblings.
long tree_automorphisms(const RootedTree& t);
long stabilizer_order(const Element& e);

// S_n-orbit of e.
std::vector<Element> orbit(const Element& e);

long factorial(int n);

}  // namespace opforge
