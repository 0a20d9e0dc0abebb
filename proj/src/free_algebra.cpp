#include "opforge/free_algebra.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

#include "opforge/enumerate.hpp"

namespace opforge {

FreeAlgebra::FreeAlgebra(std::string operad_name, std::vector<Label> generators, int degree_bound)
    : spec_(&operad(operad_name)), generators_(std::move(generators)), bound_(degree_bound) {
    if (!spec_->free_model) throw std::invalid_argument(operad_name + " is not a free model");
    if (generators_.empty()) throw std::invalid_argument("a free algebra needs at least one generator");
    if (bound_ < 1) throw std::invalid_argument("degree bound must be positive");
    std::sort(generators_.begin(), generators_.end());
}

const std::vector<Element>& FreeAlgebra::graded_basis(int d) const {
    if (d < 1 || d > bound_) throw DegreeOverflow("degree " + std::to_string(d) + " outside 1.." + std::to_string(bound_));
    auto it = graded_.find(d);
    if (it != graded_.end()) return it->second;
    std::set<Element> seen;
    std::vector<Label> deco(static_cast<std::size_t>(d), 0);
    const auto ops = enumerate_basis(spec_->name, d);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == deco.size()) {
            std::map<Label, Label> m;
            for (std::size_t j = 0; j < deco.size(); ++j) m[static_cast<Label>(j) + 1] = deco[j];
            for (const auto& e : ops) seen.insert(relabel_map(e, m));
            return;
        }
        for (Label g : generators_) {
            deco[i] = g;
            rec(i + 1);
        }
    };
    rec(0);
    std::vector<Element> v(seen.begin(), seen.end());
    sort_by_encoding(v);
    return graded_.emplace(d, std::move(v)).first->second;
}

std::vector<Element> FreeAlgebra::basis_up_to(int d) const {
    std::vector<Element> out;
    for (int k = 1; k <= d; ++k) {
        const auto& b = graded_basis(k);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

Vec FreeAlgebra::gen(Label g) const {
    if (!std::binary_search(generators_.begin(), generators_.end(), g))
        throw std::invalid_argument("not a generator: " + format_label(g));
    return Vec(fill_slots(enumerate_basis(spec_->name, 1).front(), {g}));
}

void FreeAlgebra::check_degree(const Vec& x) const {
    for (const auto& [e, c] : x)
        if (degree(e) > bound_) throw DegreeOverflow("term " + format(e) + " exceeds degree bound " + std::to_string(bound_));
}

Vec FreeAlgebra::evaluate(const Element& mu, const std::vector<Vec>& args) const {
    Vec out = opforge::evaluate(spec_->name, mu, args);
    check_degree(out);
    return out;
}

TVec FreeAlgebra::coproduct(const std::string& coop, const Vec& x) const { return opforge::coproduct(coop, x); }

namespace {

class Evaluator {
public:
    Evaluator(const std::string& operad, const std::vector<Vec>& args, const std::map<std::string, std::string>& rename)
        : operad_(operad), args_(args), rename_(rename) {}

    Vec run(const Element& mu) {
        std::vector<Label> s = slots(mu);
        std::sort(s.begin(), s.end());
        if (s != identity_perm(static_cast<int>(args_.size())))
            throw std::invalid_argument("evaluate: operation arity does not match the argument count");
        return std::visit([this](const auto& x) { return eval(x); }, mu);
    }

private:
    Vec arg(Label l) const { return args_.at(static_cast<std::size_t>(l - 1)); }

    Vec prod(const std::string& sym, const Vec& a, const Vec& b) const {
        auto it = rename_.find(sym);
        return product(it == rename_.end() ? sym : it->second, a, b);
    }

    Vec fold_left(const std::string& sym, const std::vector<Vec>& xs) const {
        Vec acc = xs.front();
        for (std::size_t i = 1; i < xs.size(); ++i) acc = prod(sym, acc, xs[i]);
        return acc;
    }

    // Tree with root r and children B_1..B_m in any PreLie algebra:
    // T = T' <- B_m - sum over non-root v of T' of (T' with B_m grafted at v).
    Vec prelie_tree(const RootedTree& t) const {
        if (t.children.empty()) return arg(t.label);
        RootedTree rest = t;
        RootedTree last = rest.children.back();
        rest.children.pop_back();
        Vec out = prod("prelie", prelie_tree(rest), prelie_tree(last));
        std::function<void(RootedTree&)> graft_below = [&](RootedTree& node) {
            for (auto& c : node.children) {
                c.children.push_back(last);
                out -= prelie_tree(canonical_tree(rest));
                c.children.pop_back();
                graft_below(c);
            }
        };
        graft_below(rest);
        return out;
    }

    Vec nap_tree(const RootedTree& t) const {
        Vec acc = arg(t.label);
        for (const auto& c : t.children) acc = prod("nap", acc, nap_tree(c));
        return acc;
    }

    Vec eval(const RootedTree& t) const {
        if (operad_ == "prelie") return prelie_tree(t);
        if (operad_ == "nap") return nap_tree(t);
        throw std::invalid_argument("no tree evaluation for " + operad_);
    }
    Vec eval(const PointedSet& p) const {
        if (operad_ != "perm" && operad_ != "pan") throw std::invalid_argument("no pointed evaluation for " + operad_);
        std::vector<Vec> xs{arg(p.point)};
        for (Label l : p.others) xs.push_back(arg(l));
        return fold_left(operad_, xs);
    }
    Vec eval(const LabelSet& s) const {
        std::vector<Vec> xs;
        for (Label l : s.items) xs.push_back(arg(l));
        return fold_left("comm", xs);
    }
    Vec eval(const Word& w) const {
        std::vector<Vec> xs;
        for (Label l : w.letters) xs.push_back(arg(l));
        if (operad_ == "as") return fold_left("concat", xs);
        if (operad_ == "leibniz") return fold_left("leibniz", xs);
        if (operad_ == "zinbiel") {
            // right-nested: x_1 < (x_2 < (... < x_n))
            Vec acc = xs.back();
            for (std::size_t i = xs.size() - 1; i-- > 0;) acc = prod("halfshuffle", xs[i], acc);
            return acc;
        }
        throw std::invalid_argument("words of " + operad_ + " have no expression through the generating operations");
    }
    Vec eval(const PlanarTree& t) const {
        if (t.kind == Node::Leaf) return arg(t.label);
        std::vector<Vec> xs;
        for (const auto& c : t.children) xs.push_back(eval(c));
        switch (t.kind) {
            case Node::Star: return fold_left("star", xs);
            case Node::Dot: return fold_left("dot", xs);
            case Node::Vee: {
                Vec last = xs.back();
                xs.pop_back();
                return prod("prec", fold_left("star", xs), last);
            }
            case Node::Mag: {
                if (operad_ == "mag") return prod("mag", xs[0], xs[1]);
                std::string sym = "m" + std::to_string(xs.size());
                auto it = rename_.find(sym);
                return product(it == rename_.end() ? sym : it->second, xs);
            }
            default: break;
        }
        throw std::logic_error("bad planar node");
    }
    Vec eval(const Hypertree&) const { throw std::invalid_argument("hypertrees are not operations"); }
    Vec eval(const Surjection&) const { throw std::invalid_argument("surjections are not operations"); }

    const std::string& operad_;
    const std::vector<Vec>& args_;
    const std::map<std::string, std::string>& rename_;
};

using Table = std::map<Element, TVec>;

std::mutex cache_mutex;
std::map<std::string, Table> table_cache;
std::map<std::pair<std::string, std::vector<Label>>, std::vector<Element>> block_cache;

const std::vector<Element>& basis_on(const std::string& operad, const std::vector<Label>& labels) {
    auto key = std::make_pair(operad, labels);
    auto it = block_cache.find(key);
    if (it != block_cache.end()) return it->second;
    std::map<Label, Label> m;
    for (std::size_t i = 0; i < labels.size(); ++i) m[static_cast<Label>(i) + 1] = labels[i];
    std::vector<Element> v;
    for (const auto& e : enumerate_basis(operad, static_cast<int>(labels.size()))) v.push_back(relabel_map(e, m));
    return block_cache.emplace(key, std::move(v)).first->second;
}

// Caller holds cache_mutex.
const Table& dual_table(const std::string& operad, const std::string& opkey, int k, int d,
                        const std::function<Vec(const std::vector<Element>&)>& apply) {
    std::string key = operad + "|" + opkey + "|" + std::to_string(d);
    auto it = table_cache.find(key);
    if (it != table_cache.end()) return it->second;
    Table table;
    std::vector<Element> tuple;
    for (const auto& blocks : ordered_set_partitions(d, k)) {
        std::vector<const std::vector<Element>*> lists;
        for (const auto& b : blocks) lists.push_back(&basis_on(operad, b));
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == lists.size()) {
                for (const auto& [x, c] : apply(tuple)) {
                    if (c != 1 && c != -1)
                        throw std::logic_error("duality coefficient " + format_scalar(c) + " outside {1,-1} for " + format(x));
                    table[x].add(Tensor(tuple), 1 / c);
                }
                return;
            }
            for (const auto& e : *lists[i]) {
                tuple.push_back(e);
                rec(i + 1);
                tuple.pop_back();
            }
        };
        rec(0);
    }
    return table_cache.emplace(key, std::move(table)).first->second;
}

TVec dual_lookup(const std::string& operad, const std::string& opkey, int k, const Element& x,
                 const std::function<Vec(const std::vector<Element>&)>& apply) {
    TVec out;
    int d = degree(x);
    if (d < k) return out;
    auto [xm, deco] = lift(x);
    std::map<Label, Label> back;
    for (std::size_t i = 0; i < deco.size(); ++i) back[static_cast<Label>(i) + 1] = deco[i];
    std::lock_guard<std::mutex> lock(cache_mutex);
    const Table& table = dual_table(operad, opkey, k, d, apply);
    auto it = table.find(xm);
    if (it == table.end()) return out;
    for (const auto& [t, c] : it->second) out.add(substitute(t, back), c);
    return out;
}

}  // namespace

Vec evaluate(const std::string& operad_name, const Element& mu, const std::vector<Vec>& args,
             const std::map<std::string, std::string>& rename) {
    return Evaluator(operad_name, args, rename).run(mu);
}

Tensor substitute(const Tensor& t, const std::map<Label, Label>& m) {
    Tensor out;
    out.reserve(t.size());
    for (const auto& f : t) out.push_back(relabel_map(f, m));
    return out;
}

TVec dual_coproduct_symbol(const std::string& operad_name, const std::string& op_symbol, const Element& x) {
    int k = symbol_arity(op_symbol);
    return dual_lookup(operad_name, op_symbol, k, x,
                       [&](const std::vector<Element>& tuple) { return product(op_symbol, tuple); });
}

TVec dual_coproduct_basis(const std::string& operad_name, const Element& delta, const Element& x) {
    int k = degree(delta);
    return dual_lookup(operad_name, "basis:" + format(delta), k, x, [&](const std::vector<Element>& tuple) {
        std::vector<Vec> args;
        for (const auto& e : tuple) args.emplace_back(e);
        return evaluate(operad_name, delta, args);
    });
}

TVec dual_coproduct_basis(const std::string& operad_name, const Element& delta, const Vec& x) {
    TVec out;
    for (const auto& [e, c] : x) out.axpy(c, dual_coproduct_basis(operad_name, delta, e));
    return out;
}

TVec free_coproduct(const std::string& operad_name, const std::string& coop_symbol, const Vec& x) {
    const OperadSpec& spec = operad(operad_name);
    for (std::size_t i = 0; i < spec.cooperations.size(); ++i) {
        if (spec.cooperations[i].name != coop_symbol) continue;
        TVec out;
        for (const auto& [e, c] : x) out.axpy(c, dual_coproduct_symbol(operad_name, spec.operations[i].name, e));
        return out;
    }
    throw std::invalid_argument(coop_symbol + " is not a cooperation of " + operad_name);
}

std::vector<std::pair<Perm, Scalar>> crochet_pairing(const Element& delta, const Element& mu) {
    int n = degree(delta);
    if (n != degree(mu) || kind_of(delta) != kind_of(mu)) throw IncompatibleSpaces("crochet pairing across arities");
    std::vector<std::pair<Perm, Scalar>> out;
    // Distinct unlabelled shapes lie in distinct orbits. Hypertree vertices cannot repeat.
    bool may_meet = true;
    if (kind_of(mu) != BasisKind::Hypertree) {
        std::map<Label, Label> blank;
        for (int i = 1; i <= n; ++i) blank[i] = kGeneratorBase;
        may_meet = relabel_map(delta, blank) == relabel_map(mu, blank);
    }
    for (const auto& p : all_perms(n)) out.emplace_back(p, may_meet && relabel(delta, p) == mu ? Scalar(1) : Scalar(0));
    return out;
}

TVec apply_at(const TVec& t, std::size_t pos, const std::string& coop) {
    TVec out;
    for (const auto& [tens, c] : t) {
        for (const auto& [split, c2] : coproduct(coop, tens.at(pos))) {
            Tensor nt(tens.begin(), tens.begin() + static_cast<long>(pos));
            nt.insert(nt.end(), split.begin(), split.end());
            nt.insert(nt.end(), tens.begin() + static_cast<long>(pos) + 1, tens.end());
            out.add(nt, c * c2);
        }
    }
    return out;
}

int cofiltration_degree(const std::string& operad_name, const Vec& x) {
    if (x.is_zero()) throw std::invalid_argument("cofiltration degree of zero is undefined");
    const auto& coops = operad(operad_name).cooperations;
    std::function<int(const TVec&, std::size_t)> rec = [&](const TVec& t, std::size_t len) {
        int best = static_cast<int>(len);
        for (const auto& c : coops)
            for (std::size_t p = 0; p < len; ++p) {
                TVec u = apply_at(t, p, c.name);
                if (!u.is_zero()) best = std::max(best, rec(u, len + static_cast<std::size_t>(c.arity) - 1));
            }
        return best;
    };
    TVec start;
    for (const auto& [e, c] : x) start.add(Tensor{e}, c);
    return rec(start, 1);
}

}  // namespace opforge
