#include "opforge/laws.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "opforge/enumerate.hpp"

namespace opforge {

const char* scope_name(LawScope s) { return s == LawScope::PrimitiveArgs ? "primitive-args-only" : "all-args"; }

std::string LawContext::sym(const std::string& s) const {
    auto it = model_->rename.find(s);
    return it == model_->rename.end() ? s : it->second;
}

Vec LawContext::mul(const std::string& op, const Vec& a, const Vec& b) const { return product(sym(op), a, b); }

Vec LawContext::mul(const std::string& op, const std::vector<Vec>& args) const { return product(sym(op), args); }

TVec LawContext::co(const std::string& coop, const Vec& x) const { return coproduct(sym(coop), x); }

Vec LawContext::primitive_part(const Vec& x) const {
    const auto& coops = operad(model_->coalgebra).cooperations;
    Vec out;
    for (const auto& [e, c] : x) {
        bool prim = std::all_of(coops.begin(), coops.end(),
                                [&](const OpSymbol& s) { return coproduct(s.name, e).is_zero(); });
        if (prim) out.add(e, c);
    }
    return out;
}

namespace {

Vec term(const Element& e) { return Vec(e); }

// Calls f(x1, x2, c) for every term c * x1 (x) x2 of a two-fold coproduct.
template <class F>
void sweedler(const TVec& d, F&& f) {
    for (const auto& [t, c] : d) f(term(t[0]), term(t[1]), c);
}

// x weighted by 1/|x| termwise.
Vec bar(const Vec& x) {
    Vec out;
    for (const auto& [e, c] : x) out.add(e, c / degree(e));
    return out;
}

// Terms of x of degree at least 2.
Vec non_primitive(const LawContext& L, const Vec& x) { return x - L.primitive_part(x); }

// ---- Example laws on free models ----

TVec hopf_rhs(const LawContext& L, const std::string& op, const std::string& coop, const Vec& x, const Vec& y) {
    TVec out = tensor(x, y) + tensor(y, x);
    TVec dx = L.co(coop, x), dy = L.co(coop, y);
    sweedler(dx, [&](const Vec& x1, const Vec& x2, const Scalar& c) {
        out.axpy(c, tensor(L.mul(op, x1, y), x2));
        out.axpy(c, tensor(x1, L.mul(op, x2, y)));
    });
    sweedler(dy, [&](const Vec& y1, const Vec& y2, const Scalar& c) {
        out.axpy(c, tensor(L.mul(op, x, y1), y2));
        out.axpy(c, tensor(y1, L.mul(op, x, y2)));
    });
    sweedler(dx, [&](const Vec& x1, const Vec& x2, const Scalar& c) {
        sweedler(dy, [&](const Vec& y1, const Vec& y2, const Scalar& d) {
            out.axpy(c * d, tensor(L.mul(op, x1, y1), L.mul(op, x2, y2)));
        });
    });
    return out;
}

// Non-unital infinitesimal: Δ(xy) = x⊗y + x1⊗x2y + xy1⊗y2.
TVec nui_rhs(const LawContext& L, const std::string& op, const std::string& coop, const Vec& x, const Vec& y) {
    TVec out = tensor(x, y);
    sweedler(L.co(coop, x), [&](const Vec& x1, const Vec& x2, const Scalar& c) { out.axpy(c, tensor(x1, L.mul(op, x2, y))); });
    sweedler(L.co(coop, y), [&](const Vec& y1, const Vec& y2, const Scalar& c) { out.axpy(c, tensor(L.mul(op, x, y1), y2)); });
    return out;
}

// Δ≺(xy) = x⊗y + x y*1⊗y*2 + x1⊗x2 y + x1 y⊗x2 + x1 y*1⊗x2 y*2, with Δ≺x = x1⊗x2 and y* the coshuffle.
TVec semihopf_rhs(const LawContext& L, const Vec& x, const Vec& y) {
    TVec out = tensor(x, y);
    TVec dx = L.co("cohalfshuffle", x), dy = L.co("coshuffle", y);
    sweedler(dy, [&](const Vec& y1, const Vec& y2, const Scalar& c) { out.axpy(c, tensor(L.mul("concat", x, y1), y2)); });
    sweedler(dx, [&](const Vec& x1, const Vec& x2, const Scalar& c) {
        out.axpy(c, tensor(x1, L.mul("concat", x2, y)));
        out.axpy(c, tensor(L.mul("concat", x1, y), x2));
        sweedler(dy, [&](const Vec& y1, const Vec& y2, const Scalar& d) {
            out.axpy(c * d, tensor(L.mul("concat", x1, y1), L.mul("concat", x2, y2)));
        });
    });
    return out;
}

// Δ(x·y) = x⊗y + (x·y1)⊗y2 + (x1·y)⊗x2 with the PreLie edge deletion.
TVec livernet_rhs(const LawContext& L, const Vec& x, const Vec& y) {
    TVec out = tensor(x, y);
    sweedler(L.co("co_prelie", y), [&](const Vec& y1, const Vec& y2, const Scalar& c) { out.axpy(c, tensor(L.mul("nap", x, y1), y2)); });
    sweedler(L.co("co_prelie", x), [&](const Vec& x1, const Vec& x2, const Scalar& c) { out.axpy(c, tensor(L.mul("nap", x1, y), x2)); });
    return out;
}

// ---- Section laws ----

// Δ(T↶S) = n·T⊗S + (T↶S1)⊗S2 + (T1↶S)⊗T2 + T1⊗(T2↶S), n the degree of T.
TVec prelie_rhs(const LawContext& L, const Vec& x, const Vec& y) {
    TVec out;
    for (const auto& [e, c] : x) out.axpy(c * degree(e), tensor(term(e), y));
    sweedler(L.co("co_prelie", y), [&](const Vec& y1, const Vec& y2, const Scalar& c) { out.axpy(c, tensor(L.mul("prelie", x, y1), y2)); });
    sweedler(L.co("co_prelie", x), [&](const Vec& x1, const Vec& x2, const Scalar& c) {
        out.axpy(c, tensor(L.mul("prelie", x1, y), x2));
        out.axpy(c, tensor(x1, L.mul("prelie", x2, y)));
    });
    return out;
}

// Δ(T·S) = T⊗S + (T1·S)⊗T2.
TVec nap_rhs(const LawContext& L, const Vec& x, const Vec& y, bool faulty) {
    TVec out = faulty ? TVec() : tensor(x, y);
    sweedler(L.co("co_nap", x), [&](const Vec& x1, const Vec& x2, const Scalar& c) { out.axpy(c, tensor(L.mul("nap", x1, y), x2)); });
    return out;
}

// Δ(u⇀v) = δ_{v∈F1}(u⊗v + (u1⇀v)⊗u2).
TVec pan_rhs(const LawContext& L, const Vec& x, const Vec& y) {
    Vec v = L.primitive_part(y);
    TVec out = tensor(x, v);
    sweedler(L.co("co_pan", x), [&](const Vec& x1, const Vec& x2, const Scalar& c) { out.axpy(c, tensor(L.mul("pan", x1, v), x2)); });
    return out;
}

// Ṫ = T + δ_{T2∈F1} T2×T1 over the terms of Δ(T).
Vec perm_dot(const LawContext& L, const Vec& t) {
    Vec out = t;
    sweedler(L.co("co_perm", t), [&](const Vec& t1, const Vec& t2, const Scalar& c) {
        out.axpy(c, L.mul("perm", L.primitive_part(t2), t1));
    });
    return out;
}

// Printed last term: (T1×S̄2)⊗(T2×S1 + S1×T̄2). When the point of S goes right, the right
// factor may be pointed at any element of S1, so the corrected term reads Ṡ1×T̄2.
TVec perm_rhs(const LawContext& L, const Vec& t, const Vec& s, bool literal) {
    auto m = [&](const Vec& a, const Vec& b) { return L.mul("perm", a, b); };
    TVec dt = L.co("co_perm", t), ds = L.co("co_perm", s);
    Vec sdot = perm_dot(L, s);
    TVec out = tensor(t, sdot);
    sweedler(dt, [&](const Vec& t1, const Vec& t2, const Scalar& c) {
        out.axpy(c, tensor(t1, m(t2, s) + m(sdot, bar(t2))));
        out.axpy(c, tensor(m(t1, s), t2));
    });
    sweedler(ds, [&](const Vec& s1, const Vec& s2, const Scalar& c) {
        out.axpy(c, tensor(m(t, s1), s2));
        out.axpy(c, tensor(m(t, bar(s2)), perm_dot(L, s1)));
    });
    sweedler(dt, [&](const Vec& t1, const Vec& t2, const Scalar& c) {
        sweedler(ds, [&](const Vec& s1, const Vec& s2, const Scalar& d) {
            out.axpy(c * d, tensor(m(t1, s1), m(t2, bar(s2)) + m(s2, bar(t2))));
            out.axpy(c * d, tensor(m(t1, bar(s2)), m(t2, s1) + m(literal ? s1 : perm_dot(L, s1), bar(t2))));
        });
    });
    return out;
}

// Δ(u×v) = δ_{v∈F1} u⊗v + (u1×v)⊗u2 + (u×v1)⊗v2 + last term.
// Printed last term: δ_{v1∈F1} (u×v2)⊗v1. It only moves the point of v when |v| = 2.
// Corrected last term: for |v| = k+1 >= 2, (1/k!) Σ (u×a1×...×ak)⊗p over the k-fold
// iterated coproduct p⊗a1⊗...⊗ak of v.
TVec copan_perm_rhs(const LawContext& L, const Vec& u, const Vec& v, bool literal) {
    TVec out = tensor(u, L.primitive_part(v));
    sweedler(L.co("co_pan", u), [&](const Vec& u1, const Vec& u2, const Scalar& c) { out.axpy(c, tensor(L.mul("perm", u1, v), u2)); });
    TVec dv = L.co("co_pan", v);
    sweedler(dv, [&](const Vec& v1, const Vec& v2, const Scalar& c) {
        out.axpy(c, tensor(L.mul("perm", u, v1), v2));
        if (literal) out.axpy(c, tensor(L.mul("perm", u, v2), L.primitive_part(v1)));
    });
    if (literal) return out;
    for (const auto& [e, ce] : non_primitive(L, v)) {
        int k = degree(e) - 1;
        TVec it;
        it.add(Tensor{e}, Scalar(1));
        for (int i = 0; i < k; ++i) it = apply_at(it, 0, L.sym("co_pan"));
        for (const auto& [t, c] : it) {
            Vec acc = u;
            for (std::size_t i = 1; i < t.size(); ++i) acc = L.mul("perm", acc, term(t[i]));
            out.axpy(ce * c / factorial(k), tensor(acc, term(t[0])));
        }
    }
    return out;
}

// Δ([u,v]) = u⊗[ε,v] + u1⊗[u2,v] + (u·w1)⊗w2 with w = [ε,v] and deconcatenation.
TVec as_leibniz_rhs(const LawContext& L, const Vec& u, const Vec& v) {
    Vec w = bracket_unit(v);
    TVec out = tensor(u, w);
    sweedler(L.co("deconcat", u), [&](const Vec& u1, const Vec& u2, const Scalar& c) { out.axpy(c, tensor(u1, L.mul("leibniz", u2, v))); });
    sweedler(L.co("deconcat", w), [&](const Vec& w1, const Vec& w2, const Scalar& c) { out.axpy(c, tensor(L.mul("concat", u, w1), w2)); });
    return out;
}

// Δ≺([u,v]) = u⊗[ε,v] + u1⊗[u2,v] + [u1,v]⊗u2 with Δ≺u = u1⊗u2.
TVec zinbiel_leibniz_rhs(const LawContext& L, const Vec& u, const Vec& v) {
    TVec out = tensor(u, bracket_unit(v));
    sweedler(L.co("cohalfshuffle", u), [&](const Vec& u1, const Vec& u2, const Scalar& c) {
        out.axpy(c, tensor(u1, L.mul("leibniz", u2, v)));
        out.axpy(c, tensor(L.mul("leibniz", u1, v), u2));
    });
    return out;
}

// Δ({u,v}) = u⊗v - v⊗u + u1⊗u2·v + u·v1⊗v2 - v1⊗v2·u - v·u1⊗u2.
TVec poisson_bracket_rhs(const LawContext& L, const Vec& u, const Vec& v) {
    TVec out = tensor(u, v) - tensor(v, u);
    sweedler(L.co("deconcat", u), [&](const Vec& u1, const Vec& u2, const Scalar& c) {
        out.axpy(c, tensor(u1, L.mul("concat", u2, v)));
        out.axpy(-c, tensor(L.mul("concat", v, u1), u2));
    });
    sweedler(L.co("deconcat", v), [&](const Vec& v1, const Vec& v2, const Scalar& c) {
        out.axpy(c, tensor(L.mul("concat", u, v1), v2));
        out.axpy(-c, tensor(v1, L.mul("concat", v2, u)));
    });
    return out;
}

// Δ≺(u≺v) = u⊗v + (Δ≺u)1⊗((Δ≺u)2⋆v) + (u≺(Δ⋆v)1)⊗(Δ⋆v)2.
TVec dipt_prec_rhs(const LawContext& L, const Vec& u, const Vec& v) {
    TVec out = tensor(u, v);
    sweedler(L.co("coprec", u), [&](const Vec& u1, const Vec& u2, const Scalar& c) { out.axpy(c, tensor(u1, L.mul("star", u2, v))); });
    sweedler(L.co("costar", v), [&](const Vec& v1, const Vec& v2, const Scalar& c) { out.axpy(c, tensor(L.mul("prec", u, v1), v2)); });
    return out;
}

void require_binary(const std::vector<Vec>& args) {
    if (args.size() != 2) throw std::invalid_argument("law expects two arguments");
}

LawModel model(std::string basis, std::string coalgebra, int max_bound = 6, std::map<std::string, std::string> rename = {}) {
    return LawModel{std::move(basis), std::move(coalgebra), std::move(rename), max_bound};
}

std::vector<OpSymbol> binary(std::initializer_list<const char*> names) {
    std::vector<OpSymbol> v;
    for (const char* n : names) v.push_back({n, 2});
    return v;
}

std::vector<LawEntry> build_catalogue(bool variants) {
    std::vector<LawEntry> c;
    auto A = LawScope::AllArgs;
    auto P = LawScope::PrimitiveArgs;

    c.push_back({"hopf-comm", "comm", "comm", A, binary({"comm"}), binary({"co_comm"}), {model("comm", "comm")},
                 [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                     return hopf_rhs(L, "comm", "co_comm", a[0], a[1]);
                 },
                 "Hopf law"});
    c.push_back({"nui-as", "as", "as", A, binary({"concat"}), binary({"deconcat"}), {model("as", "as")},
                 [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                     return nui_rhs(L, "concat", "deconcat", a[0], a[1]);
                 },
                 "non-unital infinitesimal law"});
    c.push_back({"semihopf-as-zinbiel", "as", "zinbiel", A, binary({"concat"}), binary({"cohalfshuffle"}),
                 {model("as", "zinbiel")},
                 [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                     return semihopf_rhs(L, a[0], a[1]);
                 },
                 "semi-Hopf law"});
    c.push_back({"mag", "mag", "mag", A, binary({"mag"}), binary({"comag"}), {model("mag", "mag")},
                 [](const LawContext&, const std::string&, const std::string&, const std::vector<Vec>& a) {
                     return tensor(a[0], a[1]);
                 },
                 "magmatic law"});
    {
        LawEntry e{"maginf", "maginf", "maginf", A, {}, {}, {model("maginf", "maginf")},
                   [](const LawContext&, const std::string& coop, const std::string& op, const std::vector<Vec>& a) {
                       TVec out;
                       if (coop.substr(2) != op.substr(1)) return out;
                       out.add(Tensor{}, Scalar(1));
                       for (const auto& x : a) {
                           TVec next;
                           for (const auto& [t, c] : out)
                               for (const auto& [e, d] : x) next.add(concat(t, Tensor{e}), c * d);
                           out = std::move(next);
                       }
                       return out;
                   },
                   "Δ_j m_k = args when j = k, else 0"};
        for (int k = 2; k <= 8; ++k) {
            e.operations.push_back({"m" + std::to_string(k), k});
            e.cooperations.push_back({"cm" + std::to_string(k), k});
        }
        c.push_back(e);
    }
    c.push_back({"livernet-nap-coprelie", "nap", "prelie", A, binary({"nap"}), binary({"co_prelie"}),
                 {model("nap", "prelie")},
                 [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                     return livernet_rhs(L, a[0], a[1]);
                 },
                 "Livernet law"});
    std::map<std::string, std::string> ht_prelie{{"prelie", "ht_prelie"}, {"co_prelie", "co_ht_prelie"}};
    std::map<std::string, std::string> ht_nap{{"nap", "ht_nap"}, {"co_nap", "co_ht_nap"}};
    c.push_back({"prelie", "prelie", "prelie", P, binary({"prelie"}), binary({"co_prelie"}),
                 {model("prelie", "prelie"), model("hypertree-prelie", "hypertree-prelie", 5, ht_prelie)},
                 [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                     return prelie_rhs(L, a[0], a[1]);
                 },
                 "n = degree of T"});
    c.push_back({"nap", "nap", "nap", A, binary({"nap"}), binary({"co_nap"}),
                 {model("nap", "nap"), model("hypertree-nap", "hypertree-nap", 5, ht_nap)},
                 [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                     return nap_rhs(L, a[0], a[1], false);
                 },
                 ""});
    c.push_back({"pan", "pan", "pan", P, binary({"pan"}), binary({"co_pan"}), {model("pan", "pan")},
                 [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                     return pan_rhs(L, a[0], a[1]);
                 },
                 ""});
    c.push_back({"perm", "perm", "perm", P, binary({"perm"}), binary({"co_perm"}), {model("perm", "perm")},
                 [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                     return perm_rhs(L, a[0], a[1], false);
                 },
                 "T bar and T dot applied term by term; last term uses the dot of S1"});
    c.push_back({"copan-perm", "perm", "pan", P, binary({"perm"}), binary({"co_pan"}), {model("perm", "pan")},
                 [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                     return copan_perm_rhs(L, a[0], a[1], false);
                 },
                 "last term moves the point of v for every |v| >= 2"});
    c.push_back({"as-leibniz", "leibniz", "as", P, binary({"leibniz"}), binary({"deconcat"}), {model("leibniz", "as")},
                 [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                     return as_leibniz_rhs(L, a[0], a[1]);
                 },
                 "[ε,v] carries the signs of the Leibniz product"});
    c.push_back({"as-poisson", "poisson", "as", A, binary({"shuffle", "bracket"}), binary({"deconcat"}),
                 {model("poisson", "as")},
                 [](const LawContext& L, const std::string&, const std::string& op, const std::vector<Vec>& a) {
                     return op == "shuffle" ? hopf_rhs(L, "shuffle", "deconcat", a[0], a[1]) : poisson_bracket_rhs(L, a[0], a[1]);
                 },
                 ""});
    c.push_back({"zinbiel-leibniz", "leibniz", "zinbiel", P, binary({"leibniz"}), binary({"cohalfshuffle"}),
                 {model("leibniz", "zinbiel")},
                 [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                     return zinbiel_leibniz_rhs(L, a[0], a[1]);
                 },
                 ""});
    c.push_back({"twoas", "twoas", "twoas", A, binary({"star", "dot"}), binary({"costar", "codot"}),
                 {model("twoas", "twoas", 5)},
                 [](const LawContext& L, const std::string& coop, const std::string& op, const std::vector<Vec>& a) {
                     if (coop != "co" + op) return TVec();
                     return nui_rhs(L, op, coop, a[0], a[1]);
                 },
                 "n.u.i. on matching colours, 0 otherwise"});
    c.push_back({"dipt", "dipt", "dipt", A, binary({"star", "prec"}), binary({"costar", "coprec"}),
                 {model("dipt", "dipt", 5)},
                 [](const LawContext& L, const std::string& coop, const std::string& op, const std::vector<Vec>& a) {
                     if (coop != "co" + op) return TVec();
                     if (op == "star") return nui_rhs(L, "star", "costar", a[0], a[1]);
                     return dipt_prec_rhs(L, a[0], a[1]);
                 },
                 ""});
    if (variants) {
        c.push_back({"copan-perm-literal", "perm", "pan", P, binary({"perm"}), binary({"co_pan"}), {model("perm", "pan")},
                     [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                         return copan_perm_rhs(L, a[0], a[1], true);
                     },
                     "printed last term δ_{v1∈F1} (u×v2)⊗v1"});
        c.push_back({"perm-literal", "perm", "perm", P, binary({"perm"}), binary({"co_perm"}), {model("perm", "perm")},
                     [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                         return perm_rhs(L, a[0], a[1], true);
                     },
                     "printed last term with S1 in place of its dot"});
        c.push_back({"nap-faulty", "nap", "nap", A, binary({"nap"}), binary({"co_nap"}), {model("nap", "nap")},
                     [](const LawContext& L, const std::string&, const std::string&, const std::vector<Vec>& a) {
                         return nap_rhs(L, a[0], a[1], true);
                     },
                     "T (x) S dropped on purpose"});
    }
    return c;
}

const std::vector<LawEntry>& all_entries() {
    static const std::vector<LawEntry> all = build_catalogue(true);
    return all;
}

}  // namespace

const std::vector<LawEntry>& law_catalogue() {
    static const std::vector<LawEntry> entries = build_catalogue(false);
    return entries;
}

const LawEntry& find_law(const std::string& id) {
    for (const auto& e : all_entries())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown law '" + id + "'");
}

std::vector<std::string> law_ids(bool with_variants) {
    std::vector<std::string> out;
    for (const auto& e : with_variants ? all_entries() : law_catalogue()) out.push_back(e.id);
    return out;
}

namespace {

const OpSymbol& lookup(const std::vector<OpSymbol>& syms, const std::string& name, const char* what) {
    for (const auto& s : syms)
        if (s.name == name) return s;
    throw std::invalid_argument(std::string("not a ") + what + " of this law: " + name);
}

}  // namespace

TVec law_rhs(const LawEntry& entry, std::size_t model, const std::string& coop, const std::string& op,
             const std::vector<Vec>& args) {
    if (model >= entry.models.size()) throw std::invalid_argument("law " + entry.id + " has no model " + std::to_string(model));
    const OpSymbol& o = lookup(entry.operations, op, "operation");
    const OpSymbol& d = lookup(entry.cooperations, coop, "cooperation");
    if (static_cast<int>(args.size()) != o.arity) throw std::invalid_argument("operation " + op + " takes " + std::to_string(o.arity) + " arguments");
    (void)d;
    if (entry.scope == LawScope::PrimitiveArgs)
        for (const auto& a : args) {
            std::set<int> degrees;
            for (const auto& [e, c] : a) degrees.insert(degree(e));
            if (degrees.size() != 1)
                throw std::invalid_argument("law " + entry.id + " takes operations evaluated on primitives; argument " +
                                            format(a) + " is not of a single degree");
        }
    if (o.arity == 2) require_binary(args);
    return entry.rhs(LawContext(entry.models[model]), coop, op, args);
}

unsigned default_jobs() {
    if (const char* env = std::getenv("OPERAD_FORGE_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

namespace {

struct Case {
    std::size_t model;
    const OpSymbol* op;
    std::vector<Element> args;
};

std::vector<Element> shifted(const std::string& basis, int n, int offset) {
    std::map<Label, Label> m;
    for (int i = 1; i <= n; ++i) m[i] = i + offset;
    std::vector<Element> out;
    for (const auto& e : enumerate_basis(basis, n)) out.push_back(relabel_map(e, m));
    return out;
}

void push_tuples(std::vector<Case>& cases, std::size_t model, const OpSymbol* op,
                 const std::vector<const std::vector<Element>*>& lists) {
    std::vector<Element> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == lists.size()) {
            cases.push_back({model, op, cur});
            return;
        }
        for (const auto& e : *lists[i]) {
            cur.push_back(e);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

std::vector<Case> enumerate_cases(const LawEntry& entry, int bound, bool decorated) {
    std::vector<Case> cases;
    std::map<std::pair<int, int>, std::vector<Element>> cache;
    for (std::size_t m = 0; m < entry.models.size(); ++m) {
        const LawModel& model = entry.models[m];
        int top = std::min(bound, model.max_bound);
        cache.clear();
        for (const auto& op : entry.operations)
            for (int total = op.arity; total <= top; ++total)
                for (const auto& comp : compositions(total, op.arity)) {
                    std::vector<const std::vector<Element>*> lists;
                    int offset = 0;
                    for (int part : comp) {
                        auto key = std::make_pair(part, offset);
                        auto it = cache.find(key);
                        if (it == cache.end()) it = cache.emplace(key, shifted(model.basis, part, offset)).first;
                        lists.push_back(&it->second);
                        offset += part;
                    }
                    push_tuples(cases, m, &op, lists);
                }
        if (!decorated || !operad(model.basis).free_model) continue;
        FreeAlgebra alg(model.basis, {generator('a'), generator('b')}, std::min(top, 5));
        for (const auto& op : entry.operations)
            for (int total = op.arity; total <= alg.degree_bound(); ++total)
                for (const auto& comp : compositions(total, op.arity)) {
                    std::vector<const std::vector<Element>*> lists;
                    for (int part : comp) lists.push_back(&alg.graded_basis(part));
                    push_tuples(cases, m, &op, lists);
                }
    }
    return cases;
}

}  // namespace

LawReport check_law(const LawEntry& entry, int max_total_arity, const CheckOptions& options) {
    if (max_total_arity < 2) throw std::invalid_argument("check_law needs a bound of at least 2");
    LawReport report;
    report.id = entry.id;
    report.bound = max_total_arity;
    const std::vector<Case> cases = enumerate_cases(entry, max_total_arity, options.decorated);
    const std::size_t ncoops = entry.cooperations.size();
    const std::size_t total = cases.size() * ncoops;

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_bad{total};
    std::mutex bad_mutex;
    std::optional<LawCounterexample> found;

    auto worker = [&] {
        for (;;) {
            std::size_t ci = next.fetch_add(1);
            if (ci >= cases.size() || ci * ncoops >= first_bad.load()) return;
            const Case& cs = cases[ci];
            const LawModel& model = entry.models[cs.model];
            LawContext L(model);
            std::vector<Vec> args;
            for (const auto& e : cs.args) args.emplace_back(e);
            Vec value = L.mul(cs.op->name, args);
            for (std::size_t di = 0; di < ncoops; ++di) {
                const OpSymbol& coop = entry.cooperations[di];
                TVec lhs = free_coproduct(model.coalgebra, L.sym(coop.name), value);
                TVec rhs = entry.rhs(L, coop.name, cs.op->name, args);
                if (lhs == rhs) continue;
                std::size_t idx = ci * ncoops + di;
                std::lock_guard<std::mutex> lock(bad_mutex);
                if (idx < first_bad.load()) {
                    first_bad.store(idx);
                    LawCounterexample cx;
                    cx.model = model.basis;
                    cx.coop = coop.name;
                    cx.op = cs.op->name;
                    for (const auto& e : cs.args) cx.args.push_back(format(e));
                    cx.lhs = format(lhs);
                    cx.rhs = format(rhs);
                    cx.diff = format(lhs - rhs);
                    found = std::move(cx);
                }
                break;
            }
        }
    };

    unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    report.pass = !found.has_value();
    report.counterexample = found;
    report.checked = static_cast<long>(report.pass ? total : first_bad.load() + 1);
    return report;
}

Vec rv_operator(const Vec& x) {
    Vec out;
    for (const auto& [e, c] : x) {
        if (degree(e) == 1) {
            out.add(e, c);
            continue;
        }
        for (const auto& [t, d] : coproduct("deconcat", e)) {
            if (degree(t[0]) != 1) continue;
            out.axpy(c * d, product("leibniz", rv_operator(term(t[1])), term(t[0])));
        }
    }
    return out;
}

Vec bracket_unit(const Vec& x) {
    Vec out;
    for (const auto& [e, c] : x) {
        const auto* w = std::get_if<Word>(&e);
        if (!w) throw std::invalid_argument("bracket_unit acts on words");
        const auto& y = w->letters;
        std::size_t rest = y.size() - 1;
        for (unsigned mask = 0; mask < (1u << rest); ++mask) {
            Word in{{y[0]}}, jw;
            for (std::size_t i = 0; i < rest; ++i) ((mask >> i) & 1u ? jw : in).letters.push_back(y[i + 1]);
            Scalar sign = (jw.letters.size() % 2) ? -1 : 1;
            Vec left = jw.letters.empty() ? Vec() : rv_operator(term(jw));
            Vec value = jw.letters.empty() ? term(in) : product("concat", left, term(in));
            out.axpy(c * sign, value);
        }
    }
    return out;
}

BasisReport check_compatible_basis(const std::string& name, int max_arity) {
    const OperadSpec& spec = operad(name);
    BasisReport r;
    r.operad = name;
    r.max_arity = max_arity;
    if (!spec.symmetric) throw std::invalid_argument(name + " is not symmetric");
    auto fail = [&](const std::string& what) {
        if (r.pass) r.failure = what;
        r.pass = false;
    };
    for (int n = 1; n <= max_arity && r.pass; ++n) {
        auto basis = enumerate_basis(name, n);
        auto perms = all_perms(n);
        for (const auto& mu : basis)
            for (const auto& c : spec.cooperations)
                for (const auto& s : perms) {
                    ++r.checked;
                    TVec lhs = free_coproduct(name, c.name, Vec(relabel(mu, s)));
                    TVec rhs;
                    for (const auto& [t, k] : free_coproduct(name, c.name, Vec(mu))) rhs.add(relabel(t, s), k);
                    if (lhs != rhs) fail(c.name + " on " + format(mu) + " under " + format_perm(s));
                }
        for (int i = 1; i < n; ++i) {
            auto xs = shifted(name, i, 0), ys = shifted(name, n - i, i);
            for (const auto& op : spec.operations) {
                if (op.arity != 2) continue;
                for (const auto& x : xs)
                    for (const auto& y : ys)
                        for (const auto& s : perms) {
                            ++r.checked;
                            std::map<Label, Label> m;
                            for (int l = 1; l <= n; ++l) m[l] = s[static_cast<std::size_t>(l - 1)];
                            Vec lhs = product(op.name, std::vector<Element>{relabel_map(x, m), relabel_map(y, m)});
                            Vec rhs;
                            for (const auto& [e, k] : product(op.name, std::vector<Element>{x, y})) rhs.add(relabel(e, s), k);
                            if (lhs != rhs) fail(op.name + " on " + format(x) + ", " + format(y) + " under " + format_perm(s));
                        }
            }
        }
    }
    return r;
}

BasisReport check_hom_confluence(const LawEntry& entry) {
    BasisReport r;
    r.operad = entry.id;
    const LawModel& model = entry.models.front();
    if (!operad(model.basis).free_model) throw std::invalid_argument("hom-confluence needs a free model");
    LawContext L(model);
    const OperadSpec& co = operad(model.coalgebra);
    for (const auto& op : entry.operations)
        for (const auto& coop : entry.cooperations) {
            if (coop.arity != op.arity) continue;
            int k = op.arity;
            r.max_arity = std::max(r.max_arity, k);
            std::vector<Vec> prims;
            std::vector<Element> units;
            for (int i = 1; i <= k; ++i) {
                units.push_back(shifted(model.basis, 1, i - 1).front());
                prims.emplace_back(units.back());
            }
            // The operation of C(k) paired with this cooperation.
            std::string dual_op;
            for (std::size_t i = 0; i < co.cooperations.size(); ++i)
                if (co.cooperations[i].name == L.sym(coop.name)) dual_op = co.operations[i].name;
            Vec delta = product(dual_op, units);
            Vec mu = L.mul(op.name, prims);
            TVec expected;
            for (const auto& [m, cm] : mu) {
                std::map<Perm, Scalar> weight;
                for (const auto& [d, cd] : delta)
                    for (const auto& [s, v] : crochet_pairing(d, m)) weight[s] += cd * v;
                for (const auto& [s, w] : weight) {
                    if (w == 0) continue;
                    Tensor t;
                    for (int i = 0; i < k; ++i) t.push_back(units[static_cast<std::size_t>(s[static_cast<std::size_t>(i)] - 1)]);
                    expected.add(t, cm / w);
                }
            }
            ++r.checked;
            TVec got = entry.rhs(L, coop.name, op.name, prims);
            if (got != expected && r.pass) {
                r.pass = false;
                r.failure = coop.name + " after " + op.name + ": law gives " + format(got) + ", pairing gives " + format(expected);
            }
        }
    return r;
}

}  // namespace opforge
