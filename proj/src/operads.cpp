#include "opforge/operads.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace opforge {

namespace {

void require_disjoint(const Element& a, const Element& b, bool strict) {
    std::vector<Label> x = slots(a), y = slots(b);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    std::vector<Label> both;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
    for (Label l : both)
        if (strict || !is_generator(l)) throw OverlapError("overlapping label " + format_label(l));
}

Tensor pair_tensor(Element a, Element b) {
    Tensor t;
    t.push_back(std::move(a));
    t.push_back(std::move(b));
    return t;
}

// ---- rooted trees ----

void graft_everywhere(const RootedTree& t, const RootedTree& s, std::vector<RootedTree>& out) {
    RootedTree here = t;
    here.children.push_back(s);
    out.push_back(std::move(here));
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        std::vector<RootedTree> sub;
        graft_everywhere(t.children[i], s, sub);
        for (auto& g : sub) {
            RootedTree copy = t;
            copy.children[i] = std::move(g);
            out.push_back(std::move(copy));
        }
    }
}

// (root side, cut subtree) for every edge.
void cut_everywhere(const RootedTree& t, std::vector<std::pair<RootedTree, RootedTree>>& out, bool root_only) {
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        RootedTree rest = t;
        rest.children.erase(rest.children.begin() + static_cast<long>(i));
        out.emplace_back(std::move(rest), t.children[i]);
    }
    if (root_only) return;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        std::vector<std::pair<RootedTree, RootedTree>> sub;
        cut_everywhere(t.children[i], sub, false);
        for (auto& [r, l] : sub) {
            RootedTree copy = t;
            copy.children[i] = std::move(r);
            out.emplace_back(std::move(copy), std::move(l));
        }
    }
}

// ---- words ----

std::vector<Label> subseq(const std::vector<Label>& w, unsigned mask, std::size_t offset) {
    std::vector<Label> out;
    for (std::size_t i = 0; i + offset < w.size(); ++i)
        if (mask & (1u << i)) out.push_back(w[i + offset]);
    return out;
}

Element word_el(std::vector<Label> v) { return Word{std::move(v)}; }

std::vector<Label> cat(std::vector<Label> a, const std::vector<Label>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// ---- planar trees ----

PlanarTree mk(Node k, std::vector<PlanarTree> ch) {
    PlanarTree t;
    t.kind = k;
    t.children = std::move(ch);
    return canonical_planar(std::move(t));
}

// Top-level factors at a given associative level.
std::vector<PlanarTree> factors(const PlanarTree& t, Node level) {
    if (t.kind == level) return t.children;
    return {t};
}

PlanarTree assemble(const std::vector<PlanarTree>& f, Node level) {
    if (f.size() == 1) return f.front();
    return mk(level, f);
}

TVec deconcat_level(const PlanarTree& w, Node level) {
    TVec out;
    if (w.kind != level) return out;
    const auto& c = w.children;
    for (std::size_t i = 1; i < c.size(); ++i) {
        std::vector<PlanarTree> l(c.begin(), c.begin() + static_cast<long>(i)), r(c.begin() + static_cast<long>(i), c.end());
        out.add(pair_tensor(assemble(l, level), assemble(r, level)), Scalar(1));
    }
    return out;
}

// s_1..s_k < t_1..t_n = (((s_1 v..v s_k v t_1) v t_2) ..) v t_n
PlanarTree prec(const PlanarTree& s, const PlanarTree& t) {
    std::vector<PlanarTree> ss = factors(s, Node::Star), ts = factors(t, Node::Star);
    std::vector<PlanarTree> first = ss;
    first.push_back(ts.front());
    PlanarTree acc = mk(Node::Vee, first);
    for (std::size_t i = 1; i < ts.size(); ++i) acc = mk(Node::Vee, {acc, ts[i]});
    return acc;
}

TVec coprec(const PlanarTree& t) {
    TVec out;
    if (t.kind != Node::Vee) return out;
    const auto& a = t.children;
    std::vector<PlanarTree> head(a.begin(), a.end() - 1);
    out.add(pair_tensor(assemble(head, Node::Star), a.back()), Scalar(1));
    if (a.size() == 2 && a.front().kind == Node::Vee) {
        for (const auto& [tens, c] : coprec(a.front())) {
            const auto& tail = std::get<PlanarTree>(tens[1]);
            PlanarTree right = mk(Node::Star, {tail, a.back()});
            out.add(pair_tensor(tens[0], right), c);
        }
    }
    return out;
}

// ---- hypertrees ----

std::vector<std::vector<Label>> components(const std::vector<Label>& vertices,
                                           const std::vector<std::vector<Label>>& edges) {
    std::map<Label, Label> parent;
    for (Label v : vertices) parent[v] = v;
    std::function<Label(Label)> find = [&](Label v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (const auto& e : edges)
        for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[0])] = find(e[i]);
    std::map<Label, std::vector<Label>> groups;
    for (Label v : vertices) groups[find(v)].push_back(v);
    std::vector<std::vector<Label>> out;
    for (auto& [k, g] : groups) out.push_back(g);
    return out;
}

Hypertree restrict_to(const Hypertree& h, const std::vector<Label>& comp, Label root,
                      const std::vector<std::vector<Label>>& edges) {
    Hypertree out;
    out.root = root;
    out.vertices = comp;
    std::set<Label> in(comp.begin(), comp.end());
    for (const auto& e : edges)
        if (in.count(e[0])) out.edges.push_back(e);
    (void)h;
    return canonical_hypertree(out);
}

}  // namespace

TVec tensor(const Vec& a, const Vec& b) {
    TVec out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out.add(pair_tensor(x, y), cx * cy);
    return out;
}

Tensor concat(const Tensor& a, const Tensor& b) {
    Tensor t = a;
    t.insert(t.end(), b.begin(), b.end());
    return t;
}

std::vector<std::vector<Label>> shuffles(const std::vector<Label>& a, const std::vector<Label>& b) {
    std::vector<std::vector<Label>> out;
    std::vector<Label> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == a.size() && j == b.size()) {
            out.push_back(cur);
            return;
        }
        if (i < a.size()) {
            cur.push_back(a[i]);
            rec(i + 1, j);
            cur.pop_back();
        }
        if (j < b.size()) {
            cur.push_back(b[j]);
            rec(i, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

Vec tree_product(const std::string& kind, const RootedTree& t, const RootedTree& s) {
    require_disjoint(t, s, false);
    Vec out;
    if (kind == "prelie") {
        std::vector<RootedTree> all;
        graft_everywhere(t, s, all);
        for (auto& g : all) out.add(Element(canonical_tree(std::move(g))), Scalar(1));
    } else if (kind == "nap") {
        RootedTree g = t;
        g.children.push_back(s);
        out.add(Element(canonical_tree(std::move(g))), Scalar(1));
    } else {
        throw std::invalid_argument("unknown tree product '" + kind + "'");
    }
    return out;
}

TVec tree_coproduct(const std::string& kind, const RootedTree& t) {
    if (kind != "prelie" && kind != "nap") throw std::invalid_argument("unknown tree coproduct '" + kind + "'");
    std::vector<std::pair<RootedTree, RootedTree>> cuts;
    cut_everywhere(t, cuts, kind == "nap");
    TVec out;
    for (auto& [r, l] : cuts) out.add(pair_tensor(canonical_tree(std::move(r)), std::move(l)), Scalar(1));
    return out;
}

Vec pointed_product(const std::string& kind, const PointedSet& u, const PointedSet& v) {
    require_disjoint(u, v, false);
    Vec out;
    if (kind == "pan" && !v.others.empty()) return out;
    if (kind != "perm" && kind != "pan") throw std::invalid_argument("unknown pointed product '" + kind + "'");
    PointedSet w = u;
    w.others.push_back(v.point);
    w.others.insert(w.others.end(), v.others.begin(), v.others.end());
    std::sort(w.others.begin(), w.others.end());
    out.add(Element(std::move(w)), Scalar(1));
    return out;
}

TVec pointed_coproduct(const std::string& kind, const PointedSet& u) {
    TVec out;
    const auto& o = u.others;
    const std::size_t k = o.size();
    if (kind == "pan") {
        for (std::size_t i = 0; i < k; ++i) {
            PointedSet rest{u.point, o};
            rest.others.erase(rest.others.begin() + static_cast<long>(i));
            out.add(pair_tensor(rest, PointedSet{o[i], {}}), Scalar(1));
        }
        return out;
    }
    if (kind != "perm") throw std::invalid_argument("unknown pointed coproduct '" + kind + "'");
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        PointedSet left{u.point, {}};
        std::vector<Label> right;
        for (std::size_t i = 0; i < k; ++i) (mask & (1u << i) ? right : left.others).push_back(o[i]);
        for (std::size_t p = 0; p < right.size(); ++p) {
            PointedSet r{right[p], right};
            r.others.erase(r.others.begin() + static_cast<long>(p));
            out.add(pair_tensor(left, r), Scalar(1));
        }
    }
    return out;
}

Vec word_product(const std::string& kind, const Word& u, const Word& v) {
    require_disjoint(u, v, false);
    const auto& x = u.letters;
    const auto& y = v.letters;
    Vec out;
    if (kind == "concat") {
        out.add(word_el(cat(x, y)), Scalar(1));
    } else if (kind == "shuffle") {
        for (auto& w : shuffles(x, y)) out.add(word_el(std::move(w)), Scalar(1));
    } else if (kind == "halfshuffle") {
        std::vector<Label> tail(x.begin() + 1, x.end());
        for (auto& w : shuffles(tail, y)) {
            w.insert(w.begin(), x.front());
            out.add(word_el(std::move(w)), Scalar(1));
        }
    } else if (kind == "leibniz") {
        // [x, y_1..y_q] = sum over I u J = {2..q} of (-1)^|J| x y_J(reversed) y_1 y_I
        const std::size_t q = y.size();
        for (unsigned mask = 0; mask < (1u << (q - 1)); ++mask) {
            std::vector<Label> J = subseq(y, mask, 1), I = subseq(y, ~mask & ((1u << (q - 1)) - 1), 1);
            std::reverse(J.begin(), J.end());
            std::vector<Label> w = cat(cat(x, J), {y.front()});
            w = cat(w, I);
            out.add(word_el(std::move(w)), Scalar(J.size() % 2 ? -1 : 1));
        }
    } else if (kind == "bracket") {
        out.add(word_el(cat(x, y)), Scalar(1));
        out.add(word_el(cat(y, x)), Scalar(-1));
    } else {
        throw std::invalid_argument("unknown word product '" + kind + "'");
    }
    return out;
}

TVec word_coproduct(const std::string& kind, const Word& word) {
    const auto& w = word.letters;
    const std::size_t p = w.size();
    TVec out;
    auto put = [&](std::vector<Label> a, std::vector<Label> b, int sign) {
        out.add(pair_tensor(word_el(std::move(a)), word_el(std::move(b))), Scalar(sign));
    };
    if (kind == "deconcat" || kind == "cobracket") {
        for (std::size_t i = 1; i < p; ++i) {
            std::vector<Label> a(w.begin(), w.begin() + static_cast<long>(i)), b(w.begin() + static_cast<long>(i), w.end());
            put(a, b, 1);
            if (kind == "cobracket") put(b, a, -1);
        }
    } else if (kind == "coshuffle") {
        for (unsigned mask = 1; mask + 1 < (1u << p); ++mask) put(subseq(w, mask, 0), subseq(w, ~mask & ((1u << p) - 1), 0), 1);
    } else if (kind == "cohalfshuffle") {
        if (p < 2) return out;
        const unsigned full = (1u << (p - 1)) - 1;
        for (unsigned mask = 0; mask < full; ++mask) {
            std::vector<Label> left = subseq(w, mask, 1);
            left.insert(left.begin(), w.front());
            put(left, subseq(w, ~mask & full, 1), 1);
        }
    } else if (kind == "coleibniz") {
        // sum_{i<j} (-1)^{j-(i+1)} x_1..x_i (x) x_j sh(x_{j+1}..x_p, x_{j-1}..x_{i+1}), 1-based
        for (std::size_t i = 1; i < p; ++i)
            for (std::size_t j = i + 1; j <= p; ++j) {
                std::vector<Label> left(w.begin(), w.begin() + static_cast<long>(i));
                std::vector<Label> after(w.begin() + static_cast<long>(j), w.end());
                std::vector<Label> between(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j) - 1);
                std::reverse(between.begin(), between.end());
                int sign = (j - (i + 1)) % 2 ? -1 : 1;
                for (auto& s : shuffles(after, between)) {
                    s.insert(s.begin(), w[j - 1]);
                    put(left, s, sign);
                }
            }
    } else {
        throw std::invalid_argument("unknown word coproduct '" + kind + "'");
    }
    return out;
}

Vec planar_product(const std::string& kind, const PlanarTree& u, const PlanarTree& v) {
    require_disjoint(u, v, false);
    Vec out;
    if (kind == "star") out.add(Element(mk(Node::Star, {u, v})), Scalar(1));
    else if (kind == "dot") out.add(Element(mk(Node::Dot, {u, v})), Scalar(1));
    else if (kind == "prec") out.add(Element(prec(u, v)), Scalar(1));
    else if (kind == "mag" || kind == "m2") out.add(Element(mk(Node::Mag, {u, v})), Scalar(1));
    else throw std::invalid_argument("unknown planar product '" + kind + "'");
    return out;
}

TVec planar_coproduct(const std::string& kind, const PlanarTree& w) {
    if (kind == "costar") return deconcat_level(w, Node::Star);
    if (kind == "codot") return deconcat_level(w, Node::Dot);
    if (kind == "coprec") return coprec(w);
    if (kind == "comag" || kind == "cm2") {
        TVec out;
        if (w.kind == Node::Mag && w.children.size() == 2) out.add(pair_tensor(w.children[0], w.children[1]), Scalar(1));
        return out;
    }
    throw std::invalid_argument("unknown planar coproduct '" + kind + "'");
}

Vec hypertree_product(const std::string& kind, const Hypertree& h, const Hypertree& g) {
    require_disjoint(h, g, true);
    std::vector<Label> targets;
    if (kind == "prelie") targets = h.vertices;
    else if (kind == "nap") targets = {h.root};
    else throw std::invalid_argument("unknown hypertree product '" + kind + "'");
    Vec out;
    for (Label v : targets) {
        Hypertree x;
        x.root = h.root;
        x.vertices = cat(h.vertices, g.vertices);
        x.edges = h.edges;
        x.edges.insert(x.edges.end(), g.edges.begin(), g.edges.end());
        x.edges.push_back({v, g.root});
        out.add(Element(canonical_hypertree(std::move(x))), Scalar(1));
    }
    return out;
}

TVec hypertree_coproduct(const std::string& kind, const Hypertree& h) {
    if (kind != "prelie" && kind != "nap") throw std::invalid_argument("unknown hypertree coproduct '" + kind + "'");
    TVec out;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        if (e.size() != 2) continue;
        if (kind == "nap" && e[0] != h.root && e[1] != h.root) continue;
        std::vector<std::vector<Label>> rest = h.edges;
        rest.erase(rest.begin() + static_cast<long>(i));
        auto comps = components(h.vertices, rest);
        const std::vector<Label>* rc = nullptr;
        const std::vector<Label>* lc = nullptr;
        for (const auto& c : comps) (std::binary_search(c.begin(), c.end(), h.root) ? rc : lc) = &c;
        Label lroot = std::binary_search(lc->begin(), lc->end(), e[0]) ? e[0] : e[1];
        out.add(pair_tensor(restrict_to(h, *rc, h.root, rest), restrict_to(h, *lc, lroot, rest)), Scalar(1));
    }
    return out;
}

namespace {

int mag_arity(const std::string& sym, const char* prefix) {
    std::size_t n = std::char_traits<char>::length(prefix);
    if (sym.size() <= n || sym.compare(0, n, prefix) != 0) return 0;
    for (std::size_t i = n; i < sym.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(sym[i]))) return 0;
    int k = std::stoi(sym.substr(n));
    return k >= 2 ? k : 0;
}

template <class T>
const T& as(const Element& e, const std::string& sym) {
    const T* p = std::get_if<T>(&e);
    if (!p) throw std::invalid_argument("symbol '" + sym + "' applied to a " + kind_name(kind_of(e)));
    return *p;
}

}  // namespace

int symbol_arity(const std::string& sym) {
    if (int k = mag_arity(sym, "m")) return k;
    if (int k = mag_arity(sym, "cm")) return k;
    return 2;
}

Vec product(const std::string& sym, const std::vector<Element>& args) {
    if (int k = mag_arity(sym, "m")) {
        if (static_cast<int>(args.size()) != k) throw std::invalid_argument("arity mismatch for " + sym);
        std::vector<PlanarTree> ch;
        for (std::size_t i = 0; i < args.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) require_disjoint(args[i], args[j], false);
            ch.push_back(as<PlanarTree>(args[i], sym));
        }
        return Vec(Element(mk(Node::Mag, ch)));
    }
    if (args.size() != 2) throw std::invalid_argument("arity mismatch for " + sym);
    const Element& a = args[0];
    const Element& b = args[1];
    if (sym == "prelie" || sym == "nap") return tree_product(sym, as<RootedTree>(a, sym), as<RootedTree>(b, sym));
    if (sym == "perm" || sym == "pan") return pointed_product(sym, as<PointedSet>(a, sym), as<PointedSet>(b, sym));
    if (sym == "comm") {
        require_disjoint(a, b, false);
        LabelSet s{cat(as<LabelSet>(a, sym).items, as<LabelSet>(b, sym).items)};
        std::sort(s.items.begin(), s.items.end());
        return Vec(Element(std::move(s)));
    }
    if (sym == "concat" || sym == "shuffle" || sym == "halfshuffle" || sym == "leibniz" || sym == "bracket")
        return word_product(sym, as<Word>(a, sym), as<Word>(b, sym));
    if (sym == "star" || sym == "dot" || sym == "prec" || sym == "mag")
        return planar_product(sym, as<PlanarTree>(a, sym), as<PlanarTree>(b, sym));
    if (sym == "ht_prelie" || sym == "ht_nap")
        return hypertree_product(sym.substr(3), as<Hypertree>(a, sym), as<Hypertree>(b, sym));
    throw std::invalid_argument("unknown operation '" + sym + "'");
}

TVec coproduct(const std::string& sym, const Element& x) {
    if (int k = mag_arity(sym, "cm")) {
        TVec out;
        const auto& t = as<PlanarTree>(x, sym);
        if (t.kind == Node::Mag && static_cast<int>(t.children.size()) == k) {
            Tensor tt(t.children.begin(), t.children.end());
            out.add(tt, Scalar(1));
        }
        return out;
    }
    if (sym == "co_prelie" || sym == "co_nap") return tree_coproduct(sym.substr(3), as<RootedTree>(x, sym));
    if (sym == "co_perm" || sym == "co_pan") return pointed_coproduct(sym.substr(3), as<PointedSet>(x, sym));
    if (sym == "co_comm") {
        const auto& s = as<LabelSet>(x, sym).items;
        TVec out;
        for (unsigned mask = 1; mask + 1 < (1u << s.size()); ++mask) {
            LabelSet l, r;
            for (std::size_t i = 0; i < s.size(); ++i) (mask & (1u << i) ? r : l).items.push_back(s[i]);
            out.add(pair_tensor(std::move(l), std::move(r)), Scalar(1));
        }
        return out;
    }
    if (sym == "deconcat" || sym == "coshuffle" || sym == "cohalfshuffle" || sym == "coleibniz" || sym == "cobracket")
        return word_coproduct(sym, as<Word>(x, sym));
    if (sym == "costar" || sym == "codot" || sym == "coprec" || sym == "comag")
        return planar_coproduct(sym, as<PlanarTree>(x, sym));
    if (sym == "co_ht_prelie" || sym == "co_ht_nap") return hypertree_coproduct(sym.substr(6), as<Hypertree>(x, sym));
    throw std::invalid_argument("unknown cooperation '" + sym + "'");
}

Vec product(const std::string& sym, const std::vector<Vec>& args) {
    Vec out;
    std::vector<Element> cur;
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t i, Scalar c) {
        if (i == args.size()) {
            out.axpy(c, product(sym, cur));
            return;
        }
        for (const auto& [e, ce] : args[i]) {
            cur.push_back(e);
            rec(i + 1, c * ce);
            cur.pop_back();
        }
    };
    rec(0, Scalar(1));
    return out;
}

Vec product(const std::string& sym, const Vec& a, const Vec& b) { return product(sym, std::vector<Vec>{a, b}); }

TVec coproduct(const std::string& sym, const Vec& x) {
    TVec out;
    for (const auto& [e, c] : x) out.axpy(c, coproduct(sym, e));
    return out;
}

namespace {

std::vector<OpSymbol> syms(std::initializer_list<const char*> names) {
    std::vector<OpSymbol> v;
    for (const char* n : names) v.push_back({n, 2});
    return v;
}

std::map<std::string, OperadSpec> build_registry() {
    std::map<std::string, OperadSpec> r;
    auto add = [&](OperadSpec s) { r[s.name] = std::move(s); };
    add({"prelie", true, BasisKind::Tree, syms({"prelie"}), syms({"co_prelie"}), true, true});
    add({"nap", true, BasisKind::Tree, syms({"nap"}), syms({"co_nap"}), true, true});
    add({"perm", true, BasisKind::Pointed, syms({"perm"}), syms({"co_perm"}), true, true});
    add({"pan", true, BasisKind::Pointed, syms({"pan"}), syms({"co_pan"}), true, true});
    add({"as", true, BasisKind::Word, syms({"concat"}), syms({"deconcat"}), true, true});
    add({"comm", true, BasisKind::Set, syms({"comm"}), syms({"co_comm"}), true, true});
    add({"mag", true, BasisKind::Planar, syms({"mag"}), syms({"comag"}), true, true});
    OperadSpec maginf{"maginf", true, BasisKind::Planar, {}, {}, true, true};
    for (int k = 2; k <= 8; ++k) {
        maginf.operations.push_back({"m" + std::to_string(k), k});
        maginf.cooperations.push_back({"cm" + std::to_string(k), k});
    }
    add(maginf);
    add({"zinbiel", true, BasisKind::Word, syms({"halfshuffle"}), syms({"cohalfshuffle"}), true, true});
    add({"leibniz", true, BasisKind::Word, syms({"leibniz"}), syms({"coleibniz"}), true, true});
    add({"poisson", true, BasisKind::Word, syms({"shuffle", "bracket"}), syms({"coshuffle", "cobracket"}), true, false});
    add({"twoas", true, BasisKind::Planar, syms({"star", "dot"}), syms({"costar", "codot"}), true, true});
    add({"dipt", true, BasisKind::Planar, syms({"star", "prec"}), syms({"costar", "coprec"}), true, true});
    add({"hypertree-prelie", true, BasisKind::Hypertree, syms({"ht_prelie"}), syms({"co_ht_prelie"}), false, false});
    add({"hypertree-nap", true, BasisKind::Hypertree, syms({"ht_nap"}), syms({"co_ht_nap"}), false, false});
    return r;
}

const std::map<std::string, OperadSpec>& registry() {
    static const std::map<std::string, OperadSpec> r = build_registry();
    return r;
}

}  // namespace

const OperadSpec& operad(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown operad '" + name + "'");
    return it->second;
}

const std::vector<std::string>& operad_names() {
    static const std::vector<std::string> names = {"prelie", "nap",     "perm",    "pan",   "as",
                                                   "comm",   "mag",     "maginf",  "zinbiel", "leibniz",
                                                   "poisson", "twoas",  "dipt",    "hypertree-prelie",
                                                   "hypertree-nap"};
    return names;
}

}  // namespace opforge
