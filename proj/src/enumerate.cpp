#include "opforge/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "opforge/symmetric.hpp"

namespace opforge {

void sort_by_encoding(std::vector<Element>& v) {
    std::vector<std::pair<std::string, Element>> tagged;
    tagged.reserve(v.size());
    for (auto& e : v) tagged.emplace_back(format(e), std::move(e));
    std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    v.clear();
    for (auto& [k, e] : tagged) v.push_back(std::move(e));
}

std::vector<std::vector<int>> compositions(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int parts) {
        if (parts == 0) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int p = 1; p <= left - (parts - 1); ++p) {
            cur.push_back(p);
            rec(left - p, parts - 1);
            cur.pop_back();
        }
    };
    rec(n, k);
    return out;
}

std::vector<std::vector<std::vector<Label>>> ordered_set_partitions(int n, int k) {
    std::vector<std::vector<std::vector<Label>>> out;
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::vector<std::vector<Label>> parts(static_cast<std::size_t>(k));
            for (int j = 0; j < n; ++j) parts[static_cast<std::size_t>(block[static_cast<std::size_t>(j)])].push_back(j + 1);
            for (const auto& p : parts)
                if (p.empty()) return;
            out.push_back(std::move(parts));
            return;
        }
        for (int b = 0; b < k; ++b) {
            block[static_cast<std::size_t>(i)] = b;
            rec(i + 1);
        }
    };
    if (k >= 1 && k <= n) rec(0);
    return out;
}

std::vector<RootedTree> enumerate_trees(int n) {
    std::vector<RootedTree> out;
    std::vector<int> parent(static_cast<std::size_t>(n + 1), 0);
    std::function<RootedTree(int)> build = [&](int v) {
        RootedTree t;
        t.label = v;
        for (int c = 1; c <= n; ++c)
            if (parent[static_cast<std::size_t>(c)] == v) t.children.push_back(build(c));
        return t;
    };
    auto acyclic = [&](int root) {
        for (int v = 1; v <= n; ++v) {
            int steps = 0, u = v;
            while (u != root) {
                u = parent[static_cast<std::size_t>(u)];
                if (++steps > n) return false;
            }
        }
        return true;
    };
    for (int root = 1; root <= n; ++root) {
        std::vector<int> others;
        for (int v = 1; v <= n; ++v)
            if (v != root) others.push_back(v);
        parent[static_cast<std::size_t>(root)] = 0;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == others.size()) {
                if (acyclic(root)) out.push_back(canonical_tree(build(root)));
                return;
            }
            int v = others[i];
            for (int p = 1; p <= n; ++p) {
                if (p == v) continue;
                parent[static_cast<std::size_t>(v)] = p;
                rec(i + 1);
            }
        };
        rec(0);
    }
    return out;
}

std::vector<Hypertree> enumerate_hypertrees(const std::vector<Label>& labels) {
    std::vector<Hypertree> out;
    const std::size_t n = labels.size();
    if (n == 0) return out;
    std::vector<std::vector<Label>> subsets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<Label> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(labels[i]);
        subsets.push_back(s);
    }
    std::vector<std::vector<Label>> chosen;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t budget) {
        if (budget == 0) {
            for (Label r : labels) {
                Hypertree h;
                h.root = r;
                h.vertices = labels;
                h.edges = chosen;
                try {
                    out.push_back(canonical_hypertree(h));
                } catch (const ValidationError&) {
                    break;  // disconnected or cyclic for every root alike
                }
            }
            return;
        }
        for (std::size_t i = from; i < subsets.size(); ++i) {
            if (subsets[i].size() - 1 > budget) continue;
            chosen.push_back(subsets[i]);
            rec(i + 1, budget - (subsets[i].size() - 1));
            chosen.pop_back();
        }
    };
    rec(0, n - 1);
    return out;
}

std::vector<Surjection> enumerate_surjections(int n) {
    std::vector<Surjection> out;
    std::vector<int> v(static_cast<std::size_t>(n), 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == v.size()) {
            Surjection s{v};
            try {
                out.push_back(std::get<Surjection>(canonicalize(s)));
            } catch (const ValidationError&) {
            }
            return;
        }
        for (int x = 1; x <= n; ++x) {
            v[i] = x;
            rec(i + 1);
        }
    };
    if (n >= 1) rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

PlanarTree leaf() { return PlanarTree{}; }

PlanarTree node(Node k, std::vector<PlanarTree> ch) {
    PlanarTree t;
    t.kind = k;
    t.children = std::move(ch);
    return t;
}

// All ways of choosing one item from each list.
void product_of(const std::vector<std::vector<PlanarTree>>& lists, Node kind, std::vector<PlanarTree>& out) {
    std::vector<PlanarTree> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == lists.size()) {
            out.push_back(node(kind, cur));
            return;
        }
        for (const auto& t : lists[i]) {
            cur.push_back(t);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

std::vector<PlanarTree> mag_shapes(int k) {
    if (k == 1) return {leaf()};
    std::vector<PlanarTree> out;
    for (int i = 1; i < k; ++i) product_of({mag_shapes(i), mag_shapes(k - i)}, Node::Mag, out);
    return out;
}

std::vector<PlanarTree> maginf_shapes(int k) {
    if (k == 1) return {leaf()};
    std::vector<PlanarTree> out;
    for (int parts = 2; parts <= k; ++parts)
        for (const auto& c : compositions(k, parts)) {
            std::vector<std::vector<PlanarTree>> lists;
            for (int p : c) lists.push_back(maginf_shapes(p));
            product_of(lists, Node::Mag, out);
        }
    return out;
}

// Alternating trees with top color c.
std::vector<PlanarTree> alt_shapes(int k, Node c) {
    std::vector<PlanarTree> out;
    if (k < 2) return out;
    Node other = c == Node::Star ? Node::Dot : Node::Star;
    for (int parts = 2; parts <= k; ++parts)
        for (const auto& comp : compositions(k, parts)) {
            std::vector<std::vector<PlanarTree>> lists;
            for (int p : comp) lists.push_back(p == 1 ? std::vector<PlanarTree>{leaf()} : alt_shapes(p, other));
            product_of(lists, c, out);
        }
    return out;
}

std::vector<PlanarTree> vee_shapes(int k) {
    if (k == 1) return {leaf()};
    std::vector<PlanarTree> out;
    for (int parts = 2; parts <= k; ++parts)
        for (const auto& comp : compositions(k, parts)) {
            std::vector<std::vector<PlanarTree>> lists;
            for (int p : comp) lists.push_back(vee_shapes(p));
            product_of(lists, Node::Vee, out);
        }
    return out;
}

std::vector<PlanarTree> dipt_shapes(int k) {
    std::vector<PlanarTree> out = vee_shapes(k);
    for (int parts = 2; parts <= k; ++parts)
        for (const auto& comp : compositions(k, parts)) {
            std::vector<std::vector<PlanarTree>> lists;
            for (int p : comp) lists.push_back(vee_shapes(p));
            product_of(lists, Node::Star, out);
        }
    return out;
}

std::vector<Element> label_shapes(const std::vector<PlanarTree>& shapes, int n) {
    std::vector<Element> out;
    auto perms = all_perms(n);
    for (const auto& s : shapes)
        for (const auto& p : perms) out.push_back(fill_slots(Element(s), p));
    return out;
}

}  // namespace

std::vector<Element> enumerate_basis(const std::string& operad, int n) {
    if (n < 1) throw std::invalid_argument("arity must be positive");
    std::vector<Element> out;
    if (operad == "prelie" || operad == "nap") {
        for (auto& t : enumerate_trees(n)) out.emplace_back(std::move(t));
    } else if (operad == "perm" || operad == "pan") {
        for (int p = 1; p <= n; ++p) {
            PointedSet s{p, {}};
            for (int v = 1; v <= n; ++v)
                if (v != p) s.others.push_back(v);
            out.emplace_back(s);
        }
    } else if (operad == "comm") {
        out.emplace_back(LabelSet{identity_perm(n)});
    } else if (operad == "as" || operad == "zinbiel" || operad == "leibniz" || operad == "poisson") {
        for (auto& p : all_perms(n)) out.emplace_back(Word{p});
    } else if (operad == "mag") {
        out = label_shapes(mag_shapes(n), n);
    } else if (operad == "maginf") {
        out = label_shapes(maginf_shapes(n), n);
    } else if (operad == "twoas") {
        std::vector<PlanarTree> shapes;
        if (n == 1) shapes.push_back(leaf());
        for (auto c : {Node::Star, Node::Dot})
            for (auto& s : alt_shapes(n, c)) shapes.push_back(s);
        out = label_shapes(shapes, n);
    } else if (operad == "dipt") {
        out = label_shapes(dipt_shapes(n), n);
    } else if (operad == "hypertree-prelie" || operad == "hypertree-nap") {
        for (auto& h : enumerate_hypertrees(identity_perm(n))) out.emplace_back(std::move(h));
    } else if (operad == "st") {
        for (auto& s : enumerate_surjections(n)) out.emplace_back(std::move(s));
    } else {
        throw std::invalid_argument("unsupported basis kind '" + operad + "'");
    }
    sort_by_encoding(out);
    return out;
}

}  // namespace opforge
