#include "opforge/species.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

namespace opforge {

namespace {

int cmp_int(long long a, long long b) { return a < b ? -1 : (b < a ? 1 : 0); }

template <class T, class F>
int cmp_seq(const std::vector<T>& a, const std::vector<T>& b, F&& f) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = f(a[i], b[i])) return c;
    return cmp_int(static_cast<long long>(a.size()), static_cast<long long>(b.size()));
}

auto cmp_label = [](const auto& x, const auto& y) { return cmp_int(x, y); };

}  // namespace

std::string format_label(Label l) {
    if (is_generator(l)) {
        int off = l - kGeneratorBase;
        if (off < 26) return std::string(1, static_cast<char>('a' + off));
        return "g" + std::to_string(off);
    }
    return std::to_string(l);
}

BasisKind kind_of(const Element& e) { return static_cast<BasisKind>(e.index()); }

const char* kind_name(BasisKind k) {
    switch (k) {
        case BasisKind::Tree: return "tree";
        case BasisKind::Pointed: return "pointed";
        case BasisKind::Set: return "set";
        case BasisKind::Word: return "word";
        case BasisKind::Planar: return "planar";
        case BasisKind::Hypertree: return "hypertree";
        case BasisKind::Surjection: return "surjection";
    }
    return "?";
}

BasisKind parse_kind(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(BasisKind::Surjection); ++i)
        if (name == kind_name(static_cast<BasisKind>(i))) return static_cast<BasisKind>(i);
    throw std::invalid_argument("unknown basis kind '" + name + "'");
}

int compare(const RootedTree& a, const RootedTree& b) {
    if (int c = cmp_int(a.label, b.label)) return c;
    return cmp_seq(a.children, b.children, [](const RootedTree& x, const RootedTree& y) { return compare(x, y); });
}
int compare(const PointedSet& a, const PointedSet& b) {
    if (int c = cmp_int(static_cast<long long>(a.others.size()), static_cast<long long>(b.others.size()))) return c;
    if (int c = cmp_int(a.point, b.point)) return c;
    return cmp_seq(a.others, b.others, cmp_label);
}
int compare(const LabelSet& a, const LabelSet& b) { return cmp_seq(a.items, b.items, cmp_label); }
int compare(const Word& a, const Word& b) { return cmp_seq(a.letters, b.letters, cmp_label); }
int compare(const PlanarTree& a, const PlanarTree& b) {
    if (int c = cmp_int(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
    if (int c = cmp_int(a.label, b.label)) return c;
    return cmp_seq(a.children, b.children, [](const PlanarTree& x, const PlanarTree& y) { return compare(x, y); });
}
int compare(const Hypertree& a, const Hypertree& b) {
    if (int c = cmp_seq(a.vertices, b.vertices, cmp_label)) return c;
    if (int c = cmp_int(a.root, b.root)) return c;
    return cmp_seq(a.edges, b.edges, [](const std::vector<Label>& x, const std::vector<Label>& y) {
        return cmp_seq(x, y, cmp_label);
    });
}
int compare(const Surjection& a, const Surjection& b) { return cmp_seq(a.values, b.values, cmp_label); }

RootedTree canonical_tree(RootedTree t) {
    for (auto& c : t.children) c = canonical_tree(std::move(c));
    std::sort(t.children.begin(), t.children.end());
    return t;
}

PlanarTree canonical_planar(PlanarTree t) {
    if (t.kind == Node::Leaf) {
        if (!t.children.empty()) throw ValidationError("leaf with children");
        return t;
    }
    std::vector<PlanarTree> kids;
    for (auto& c : t.children) {
        PlanarTree cc = canonical_planar(std::move(c));
        // Star and Dot are associative: same-colored children are spliced in.
        if ((t.kind == Node::Star || t.kind == Node::Dot) && cc.kind == t.kind) {
            for (auto& g : cc.children) kids.push_back(std::move(g));
        } else {
            kids.push_back(std::move(cc));
        }
    }
    if (kids.size() < 2) throw ValidationError("internal node with fewer than two children");
    if (t.kind == Node::Vee)
        for (const auto& k : kids)
            if (k.kind == Node::Star) throw ValidationError("word nested under a grafting node");
    t.children = std::move(kids);
    t.label = 0;
    return t;
}

Hypertree canonical_hypertree(Hypertree h) {
    std::set<Label> verts(h.vertices.begin(), h.vertices.end());
    if (verts.size() != h.vertices.size()) throw ValidationError("repeated hypertree vertex");
    verts.insert(h.root);
    for (auto& e : h.edges) {
        std::sort(e.begin(), e.end());
        if (e.size() < 2) throw ValidationError("hyperedge with fewer than two vertices");
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ValidationError("repeated vertex in hyperedge");
        verts.insert(e.begin(), e.end());
    }
    std::sort(h.edges.begin(), h.edges.end(), [](const auto& x, const auto& y) {
        return cmp_seq(x, y, cmp_label) < 0;
    });
    h.vertices.assign(verts.begin(), verts.end());
    // Connected with sum(|e|-1) = |V|-1 is exactly a walk-acyclic hypergraph.
    std::size_t budget = 0;
    for (const auto& e : h.edges) budget += e.size() - 1;
    if (budget != h.vertices.size() - 1) throw ValidationError("hypergraph has a cycle or is disconnected");
    std::map<Label, Label> parent;
    for (Label v : h.vertices) parent[v] = v;
    std::function<Label(Label)> find = [&](Label v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    std::size_t merged = 0;
    for (const auto& e : h.edges)
        for (std::size_t i = 1; i < e.size(); ++i) {
            Label a = find(e[0]), b = find(e[i]);
            if (a == b) throw ValidationError("hypergraph has a cycle");
            parent[a] = b;
            ++merged;
        }
    if (merged + 1 != h.vertices.size()) throw ValidationError("hypergraph is disconnected");
    return h;
}

Element canonicalize(const Element& e) {
    return std::visit(
        [](const auto& x) -> Element {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RootedTree>) {
                return canonical_tree(x);
            } else if constexpr (std::is_same_v<T, PointedSet>) {
                PointedSet p = x;
                std::sort(p.others.begin(), p.others.end());
                return p;
            } else if constexpr (std::is_same_v<T, LabelSet>) {
                LabelSet s = x;
                if (s.items.empty()) throw ValidationError("empty set");
                std::sort(s.items.begin(), s.items.end());
                return s;
            } else if constexpr (std::is_same_v<T, Word>) {
                if (x.letters.empty()) throw ValidationError("empty word");
                return x;
            } else if constexpr (std::is_same_v<T, PlanarTree>) {
                return canonical_planar(x);
            } else if constexpr (std::is_same_v<T, Hypertree>) {
                return canonical_hypertree(x);
            } else {
                if (x.values.empty()) throw ValidationError("empty surjection");
                int r = *std::max_element(x.values.begin(), x.values.end());
                std::vector<bool> seen(static_cast<std::size_t>(std::max(r, 0)) + 1, false);
                for (int v : x.values) {
                    if (v < 1) throw ValidationError("surjection value below 1");
                    seen[static_cast<std::size_t>(v)] = true;
                }
                for (int v = 1; v <= r; ++v)
                    if (!seen[static_cast<std::size_t>(v)]) throw ValidationError("image is not an initial segment");
                return x;
            }
        },
        e);
}


namespace {

int tree_size(const RootedTree& t) {
    int n = 1;
    for (const auto& c : t.children) n += tree_size(c);
    return n;
}
int planar_leaves(const PlanarTree& t) {
    if (t.kind == Node::Leaf) return 1;
    int n = 0;
    for (const auto& c : t.children) n += planar_leaves(c);
    return n;
}

void tree_slots(const RootedTree& t, std::vector<Label>& out) {
    out.push_back(t.label);
    for (const auto& c : t.children) tree_slots(c, out);
}
void planar_slots(const PlanarTree& t, std::vector<Label>& out) {
    if (t.kind == Node::Leaf) out.push_back(t.label);
    for (const auto& c : t.children) planar_slots(c, out);
}
void tree_fill(RootedTree& t, const std::vector<Label>& v, std::size_t& i) {
    t.label = v.at(i++);
    for (auto& c : t.children) tree_fill(c, v, i);
}
void planar_fill(PlanarTree& t, const std::vector<Label>& v, std::size_t& i) {
    if (t.kind == Node::Leaf) t.label = v.at(i++);
    for (auto& c : t.children) planar_fill(c, v, i);
}

}  // namespace

int degree(const Element& e) {
    return std::visit(
        [](const auto& x) -> int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RootedTree>) return tree_size(x);
            else if constexpr (std::is_same_v<T, PointedSet>) return 1 + static_cast<int>(x.others.size());
            else if constexpr (std::is_same_v<T, LabelSet>) return static_cast<int>(x.items.size());
            else if constexpr (std::is_same_v<T, Word>) return static_cast<int>(x.letters.size());
            else if constexpr (std::is_same_v<T, PlanarTree>) return planar_leaves(x);
            else if constexpr (std::is_same_v<T, Hypertree>) return static_cast<int>(x.vertices.size());
            else return static_cast<int>(x.values.size());
        },
        e);
}

int degree(const Tensor& t) {
    int n = 0;
    for (const auto& f : t) n += degree(f);
    return n;
}

std::vector<Label> slots(const Element& e) {
    std::vector<Label> out;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RootedTree>) {
                tree_slots(x, out);
            } else if constexpr (std::is_same_v<T, PointedSet>) {
                out.push_back(x.point);
                out.insert(out.end(), x.others.begin(), x.others.end());
            } else if constexpr (std::is_same_v<T, LabelSet>) {
                out = x.items;
            } else if constexpr (std::is_same_v<T, Word>) {
                out = x.letters;
            } else if constexpr (std::is_same_v<T, PlanarTree>) {
                planar_slots(x, out);
            } else if constexpr (std::is_same_v<T, Hypertree>) {
                out = x.vertices;
            } else {
                throw std::logic_error("surjections carry values, not labels");
            }
        },
        e);
    return out;
}

Element fill_slots(const Element& e, const std::vector<Label>& values) {
    if (static_cast<int>(values.size()) != degree(e)) throw std::invalid_argument("slot count mismatch");
    Element out = std::visit(
        [&](const auto& x) -> Element {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RootedTree>) {
                RootedTree t = x;
                std::size_t i = 0;
                tree_fill(t, values, i);
                return t;
            } else if constexpr (std::is_same_v<T, PointedSet>) {
                return PointedSet{values[0], std::vector<Label>(values.begin() + 1, values.end())};
            } else if constexpr (std::is_same_v<T, LabelSet>) {
                return LabelSet{values};
            } else if constexpr (std::is_same_v<T, Word>) {
                return Word{values};
            } else if constexpr (std::is_same_v<T, PlanarTree>) {
                PlanarTree t = x;
                std::size_t i = 0;
                planar_fill(t, values, i);
                return t;
            } else if constexpr (std::is_same_v<T, Hypertree>) {
                std::map<Label, Label> m;
                for (std::size_t i = 0; i < values.size(); ++i) m[x.vertices[i]] = values[i];
                Hypertree h;
                h.root = m.at(x.root);
                h.vertices = values;
                for (const auto& ed : x.edges) {
                    std::vector<Label> ne;
                    for (Label v : ed) ne.push_back(m.at(v));
                    h.edges.push_back(ne);
                }
                return h;
            } else {
                throw std::logic_error("surjections carry values, not labels");
            }
        },
        e);
    return canonicalize(out);
}

Element relabel_map(const Element& e, const std::map<Label, Label>& m) {
    std::vector<Label> s = slots(e);
    for (auto& l : s) {
        auto it = m.find(l);
        if (it == m.end()) throw std::invalid_argument("label " + format_label(l) + " missing from relabelling");
        l = it->second;
    }
    return fill_slots(e, s);
}

std::pair<Element, std::vector<Label>> lift(const Element& e) {
    std::vector<Label> deco = slots(e);
    std::vector<Label> fresh(deco.size());
    std::iota(fresh.begin(), fresh.end(), 1);
    return {fill_slots(e, fresh), deco};
}

bool has_distinct_labels(const Element& e) {
    std::vector<Label> s = slots(e);
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

namespace {

std::string join_labels(const std::vector<Label>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += format_label(v[i]);
    }
    return s;
}

void format_tree(const RootedTree& t, std::string& out) {
    out += format_label(t.label);
    if (t.children.empty()) return;
    out += "(";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ",";
        format_tree(t.children[i], out);
    }
    out += ")";
}

void format_planar(const PlanarTree& t, std::string& out) {
    switch (t.kind) {
        case Node::Leaf: out += format_label(t.label); return;
        case Node::Star: out += "star("; break;
        case Node::Dot: out += "dot("; break;
        case Node::Vee: out += "vee("; break;
        case Node::Mag: out += "m("; break;
    }
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ",";
        format_planar(t.children[i], out);
    }
    out += ")";
}

}  // namespace

std::string format(const Element& e) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            std::string out;
            if constexpr (std::is_same_v<T, RootedTree>) {
                format_tree(x, out);
            } else if constexpr (std::is_same_v<T, PointedSet>) {
                std::vector<Label> all = x.others;
                all.push_back(x.point);
                std::sort(all.begin(), all.end());
                out = "{";
                bool starred = false;
                for (std::size_t i = 0; i < all.size(); ++i) {
                    if (i) out += ",";
                    if (!starred && all[i] == x.point) {
                        out += "*";
                        starred = true;
                    }
                    out += format_label(all[i]);
                }
                out += "}";
            } else if constexpr (std::is_same_v<T, LabelSet>) {
                out = "{" + join_labels(x.items) + "}";
            } else if constexpr (std::is_same_v<T, Word>) {
                out = "[" + join_labels(x.letters) + "]";
            } else if constexpr (std::is_same_v<T, PlanarTree>) {
                format_planar(x, out);
            } else if constexpr (std::is_same_v<T, Hypertree>) {
                out = "ht(root=" + format_label(x.root);
                for (const auto& ed : x.edges) out += "; {" + join_labels(ed) + "}";
                out += ")";
            } else {
                out = "(";
                for (std::size_t i = 0; i < x.values.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string(x.values[i]);
                }
                out += ")";
            }
            return out;
        },
        e);
}

std::string format(const Tensor& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += " ⊗ ";
        out += format(t[i]);
    }
    return out;
}

namespace {

template <class K>
std::string format_terms(const LinComb<K>& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : v) {
        bool neg = sgn(c) < 0;
        Scalar a = neg ? Scalar(-c) : c;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (a != 1) out += format_scalar(a) + " ";
        out += format(k);
    }
    return out;
}

}  // namespace

std::string format(const Vec& v) { return format_terms(v); }
std::string format(const TVec& v) { return format_terms(v); }

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Element parse(BasisKind kind) {
        Element e;
        switch (kind) {
            case BasisKind::Tree: e = tree(); break;
            case BasisKind::Pointed: e = pointed(); break;
            case BasisKind::Set: e = set(); break;
            case BasisKind::Word: e = word(); break;
            case BasisKind::Planar: e = planar(); break;
            case BasisKind::Hypertree: e = hypertree(); break;
            case BasisKind::Surjection: e = surjection(); break;
        }
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        try {
            return canonicalize(e);
        } catch (const ValidationError& err) {
            throw ValidationError(std::string("invalid element: ") + err.what());
        }
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(b, pos_ - b);
    }
    int number() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected a number");
        if (pos_ - b > 7) fail("number too large");
        return std::stoi(s_.substr(b, pos_ - b));
    }
    Label label() {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            int v = number();
            if (v < 1) fail("labels are positive");
            return v;
        }
        std::size_t b = pos_;
        std::string id = ident();
        if (id.size() != 1 || !std::islower(static_cast<unsigned char>(id[0]))) {
            pos_ = b;
            fail("expected a label");
        }
        return generator(id[0]);
    }

    RootedTree tree() {
        RootedTree t;
        t.label = label();
        if (accept('(')) {
            do t.children.push_back(tree());
            while (accept(','));
            expect(')');
        }
        return t;
    }
    PointedSet pointed() {
        expect('{');
        std::vector<Label> all;
        int stars = 0;
        Label point = 0;
        do {
            bool star = accept('*');
            Label l = label();
            if (star) {
                ++stars;
                point = l;
            } else {
                all.push_back(l);
            }
        } while (accept(','));
        expect('}');
        if (stars != 1) fail("a pointed set needs exactly one '*'");
        return PointedSet{point, all};
    }
    LabelSet set() {
        expect('{');
        LabelSet s;
        do s.items.push_back(label());
        while (accept(','));
        expect('}');
        return s;
    }
    Word word() {
        expect('[');
        Word w;
        do w.letters.push_back(label());
        while (accept(','));
        expect(']');
        return w;
    }
    Surjection surjection() {
        expect('(');
        Surjection x;
        do x.values.push_back(number());
        while (accept(','));
        expect(')');
        return x;
    }
    PlanarTree planar() {
        skip();
        std::size_t b = pos_;
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            std::string id = ident();
            if (peek('(')) {
                PlanarTree t;
                if (id == "star") t.kind = Node::Star;
                else if (id == "dot") t.kind = Node::Dot;
                else if (id == "vee") t.kind = Node::Vee;
                else if (id == "m") t.kind = Node::Mag;
                else {
                    pos_ = b;
                    fail("unknown node '" + id + "'");
                }
                expect('(');
                do t.children.push_back(planar());
                while (accept(','));
                expect(')');
                return t;
            }
            pos_ = b;
        }
        PlanarTree leaf;
        leaf.label = label();
        return leaf;
    }
    Hypertree hypertree() {
        if (ident() != "ht") fail("expected 'ht'");
        expect('(');
        if (ident() != "root") fail("expected 'root'");
        expect('=');
        Hypertree h;
        h.root = label();
        while (accept(';')) {
            expect('{');
            std::vector<Label> e;
            do e.push_back(label());
            while (accept(','));
            expect('}');
            h.edges.push_back(e);
        }
        expect(')');
        return h;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

void validate(const Element& e) {
    (void)canonicalize(e);
    if (std::holds_alternative<Surjection>(e)) return;
    std::vector<Label> seen;
    for (Label l : slots(e)) {
        if (l < 1) throw ValidationError("labels must be positive");
        if (!is_generator(l)) seen.push_back(l);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw ValidationError("integer label repeated in " + format(e));
}

Element parse_element(BasisKind kind, const std::string& text) {
    Element e = Parser(text).parse(kind);
    validate(e);
    return e;
}

Surjection standardize(const std::vector<int>& values) {
    if (values.empty()) throw std::invalid_argument("standardize needs a nonempty list");
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Surjection s;
    for (int v : values)
        s.values.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    return s;
}

}  // namespace opforge
