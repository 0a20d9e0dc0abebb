#pragma once

#include <string>
#include <vector>

#include "opforge/enumerate.hpp"
#include "opforge/operads.hpp"

namespace opforge::test {

inline Element tree(const std::string& s) { return parse_element(BasisKind::Tree, s); }
inline Element pointed(const std::string& s) { return parse_element(BasisKind::Pointed, s); }
inline Element set(const std::string& s) { return parse_element(BasisKind::Set, s); }
inline Element word(const std::string& s) { return parse_element(BasisKind::Word, s); }
inline Element planar(const std::string& s) { return parse_element(BasisKind::Planar, s); }
inline Element hyper(const std::string& s) { return parse_element(BasisKind::Hypertree, s); }
inline Element surj(const std::string& s) { return parse_element(BasisKind::Surjection, s); }

inline Vec vec(const Element& e) { return Vec(e); }

inline TVec tens(std::initializer_list<std::pair<std::vector<Element>, int>> terms) {
    TVec out;
    for (const auto& [t, c] : terms) out.add(Tensor(t), Scalar(c));
    return out;
}

// Basis of A(n) on the labels offset+1..offset+n.
inline std::vector<Element> shifted_basis(const std::string& operad, int n, int offset) {
    std::map<Label, Label> m;
    for (int i = 1; i <= n; ++i) m[i] = i + offset;
    std::vector<Element> out;
    for (const auto& e : enumerate_basis(operad, n)) out.push_back(relabel_map(e, m));
    return out;
}

// Calls f(x, y, z) for basis triples on consecutive label ranges with total degree <= bound.
template <class F>
void for_triples(const std::string& operad, int bound, F&& f) {
    for (int i = 1; i <= bound; ++i)
        for (int j = 1; i + j <= bound; ++j)
            for (int k = 1; i + j + k <= bound; ++k)
                for (const auto& x : shifted_basis(operad, i, 0))
                    for (const auto& y : shifted_basis(operad, j, i))
                        for (const auto& z : shifted_basis(operad, k, i + j)) f(Vec(x), Vec(y), Vec(z));
}

inline std::string show(const Vec& v) { return format(v); }
inline std::string show(const TVec& v) { return format(v); }

}  // namespace opforge::test
