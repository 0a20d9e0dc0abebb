#include "opforge/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace opforge {

Perm identity_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return p;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
    return q;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i] - 1)];
    return c;
}

std::string format_perm(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i) + 1) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(p[j] - 1);
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

namespace {

void require_operadic(const Element& e, const Perm& sigma) {
    std::vector<Label> s = slots(e);
    std::sort(s.begin(), s.end());
    if (s != identity_perm(static_cast<int>(sigma.size())))
        throw std::invalid_argument("relabel expects the labels 1..n once each");
}

}  // namespace

Element relabel(const Element& e, const Perm& sigma) {
    require_operadic(e, sigma);
    std::vector<Label> s = slots(e);
    for (auto& l : s) l = sigma[static_cast<std::size_t>(l - 1)];
    return fill_slots(e, s);
}

Tensor relabel(const Tensor& t, const Perm& sigma) {
    Tensor out;
    out.reserve(t.size());
    for (const auto& f : t) {
        std::vector<Label> s = slots(f);
        for (auto& l : s) l = sigma.at(static_cast<std::size_t>(l - 1));
        out.push_back(fill_slots(f, s));
    }
    return out;
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long stabilizer_order_brute(const Element& e) {
    int n = degree(e);
    long count = 0;
    for (const auto& p : all_perms(n))
        if (relabel(e, p) == e) ++count;
    return count;
}

namespace {

// Shape with labels erased, for comparing sibling subtrees up to isomorphism.
RootedTree shape(const RootedTree& t) {
    RootedTree s;
    for (const auto& c : t.children) s.children.push_back(shape(c));
    std::sort(s.children.begin(), s.children.end());
    return s;
}

}  // namespace

long tree_automorphisms(const RootedTree& t) {
    long aut = 1;
    std::vector<RootedTree> shapes;
    for (const auto& c : t.children) {
        aut *= tree_automorphisms(c);
        shapes.push_back(shape(c));
    }
    std::sort(shapes.begin(), shapes.end());
    for (std::size_t i = 0; i < shapes.size();) {
        std::size_t j = i;
        while (j < shapes.size() && shapes[j] == shapes[i]) ++j;
        aut *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return aut;
}

long stabilizer_order(const Element& e) {
    if (const auto* t = std::get_if<RootedTree>(&e)) return tree_automorphisms(*t);
    return stabilizer_order_brute(e);
}

std::vector<Element> orbit(const Element& e) {
    std::set<Element> seen;
    for (const auto& p : all_perms(degree(e))) seen.insert(relabel(e, p));
    return {seen.begin(), seen.end()};
}

}  // namespace opforge
