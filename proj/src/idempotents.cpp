#include "opforge/idempotents.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "opforge/enumerate.hpp"
#include "opforge/exact_linalg.hpp"

namespace opforge {

namespace {

int max_degree(const Vec& x) {
    int d = 0;
    for (const auto& [e, c] : x) d = std::max(d, degree(e));
    return d;
}

const OperadSpec& free_spec(const std::string& name) {
    const OperadSpec& spec = operad(name);
    if (!spec.free_model || !spec.has_evaluate) throw std::invalid_argument(name + " is not a free model with evaluation");
    return spec;
}

}  // namespace

IdempotentPlan::IdempotentPlan(std::string name, int degree_bound) : operad_(std::move(name)), bound_(degree_bound) {
    free_spec(operad_);
    if (bound_ < 1) throw std::invalid_argument("degree bound must be positive");
    for (int n = 1; n <= bound_; ++n) {
        std::set<Element> seen;
        auto& reps = reps_[n];
        for (const auto& b : enumerate_basis(operad_, n)) {
            if (seen.count(b)) continue;
            auto orb = orbit(b);
            seen.insert(orb.begin(), orb.end());
            const Element& least = *std::min_element(orb.begin(), orb.end());
            reps.push_back({least, stabilizer_order(least)});
        }
        std::sort(reps.begin(), reps.end(), [](const OrbitRep& a, const OrbitRep& b) { return a.rep < b.rep; });
    }
}

const std::vector<OrbitRep>& IdempotentPlan::orbit_reps(int n) const {
    auto it = reps_.find(n);
    if (it == reps_.end()) throw DegreeOverflow("arity " + std::to_string(n) + " outside the plan");
    return it->second;
}

Vec IdempotentPlan::stage_projection(int n, const Vec& x) const {
    Vec out;
    for (const auto& [b, c] : x) {
        if (degree(b) < n) continue;
        auto key = std::make_pair(n, b);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) {
                out.axpy(c, it->second);
                continue;
            }
        }
        Vec value;
        for (const auto& a : orbit_reps(n)) {
            for (const auto& [t, k] : dual_coproduct_basis(operad_, a.rep, b)) {
                std::vector<Vec> args;
                for (const auto& f : t) args.emplace_back(f);
                value.axpy(k / Scalar(a.aut), evaluate(operad_, a.rep, args));
            }
        }
        out.axpy(c, value);
        std::lock_guard<std::mutex> lock(mutex_);
        cache_.emplace(key, std::move(value));
    }
    return out;
}

Vec inductive_idempotent(const IdempotentPlan& plan, const Vec& x) {
    if (x.is_zero()) return x;
    int top = max_degree(x);
    if (top > plan.degree_bound() && cofiltration_degree(plan.operad(), x) > plan.degree_bound())
        throw DegreeOverflow("element beyond the idempotent's degree bound " + std::to_string(plan.degree_bound()));
    Vec y = x;
    for (int n = std::min(top, plan.degree_bound()); n >= 2; --n) y -= plan.stage_projection(n, y);
    return y;
}

Vec dn_operator(const std::string& name, int n, const Vec& x) {
    if (n < 1) throw std::invalid_argument("D_n needs n >= 1");
    if (n == 1) return x;
    const OperadSpec& spec = operad(name);
    const std::string& mu = spec.operations.front().name;
    const std::string& delta = spec.cooperations.front().name;
    Vec out;
    for (const auto& [t, c] : coproduct(delta, x)) out.axpy(c, product(mu, dn_operator(name, n - 1, Vec(t[0])), Vec(t[1])));
    return out;
}

Scalar series_coefficient(const std::string& kind, int n) {
    Scalar sign = n % 2 ? 1 : -1;
    if (kind == "perm") {
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n - 1));
        return sign * Scalar(power) / factorial(n);
    }
    if (kind == "nap" || kind == "pan") return sign * Scalar(n) / factorial(n);
    throw std::invalid_argument("no series idempotent for " + kind);
}

Vec series_partial_sum(const std::string& kind, int k, const Vec& x) {
    Vec out;
    for (int n = 1; n <= k; ++n) out.axpy(series_coefficient(kind, n), dn_operator(kind, n, x));
    return out;
}

Vec series_idempotent(const std::string& kind, const Vec& x) { return series_partial_sum(kind, max_degree(x), x); }

SeriesReport compare_series(const std::string& kind, int bound) {
    SeriesReport r;
    r.kind = kind;
    r.bound = bound;
    IdempotentPlan plan(kind, bound);
    for (int n = 1; n <= bound && r.agree; ++n)
        for (const auto& b : enumerate_basis(kind, n)) {
            ++r.checked;
            Vec s = series_idempotent(kind, Vec(b));
            Vec e = inductive_idempotent(plan, Vec(b));
            if (s != e) {
                r.agree = false;
                r.first_disagreement = SeriesDiscrepancy{format(b), format(s), format(e)};
                break;
            }
        }
    return r;
}

namespace {

Element pointed_range(int n) {
    PointedSet p;
    p.point = 1;
    for (int i = 2; i <= n; ++i) p.others.push_back(i);
    return p;
}

}  // namespace

Scalar perm_dk_scalar(int k, int n) {
    Element x = pointed_range(n);
    Vec d = dn_operator("perm", k, Vec(x));
    if (d.is_zero()) return 0;
    if (d.size() != 1 || d.begin()->first != x) throw std::logic_error("D_k is not a multiple of the input");
    return d.begin()->second;
}

Scalar perm_dk_printed(int k, int n) {
    Scalar out = 1;
    for (int i = 1; i <= k; ++i) out *= n - i;
    int e = n - k - 1;
    if (e >= 0) {
        for (int i = 0; i < e; ++i) out *= k + 1;
    } else {
        for (int i = 0; i < -e; ++i) out /= k + 1;
    }
    return out;
}

PartialSumReport check_nap_partial_sums(int bound, int slack) {
    PartialSumReport r;
    r.bound = bound;
    r.slack = slack;
    for (int k = 1; k <= bound && r.pass; ++k)
        for (int n = 2; n <= bound && r.pass; ++n)
            for (const auto& b : enumerate_basis("nap", n)) {
                int children = static_cast<int>(std::get<RootedTree>(b).children.size());
                if (children > k - slack) continue;
                ++r.checked;
                Vec v = series_partial_sum("nap", k, Vec(b));
                if (!v.is_zero()) {
                    r.pass = false;
                    r.first_failure = PartialSumFailure{k, format(b), children, format(v)};
                    break;
                }
            }
    return r;
}

GradedModel free_graded_model(const std::string& name, int generators, int bound) {
    const OperadSpec& spec = free_spec(name);
    if (generators < 1 || generators > 26) throw std::invalid_argument("between 1 and 26 generators");
    std::vector<Label> gens;
    for (int i = 0; i < generators; ++i) gens.push_back(generator(static_cast<char>('a' + i)));
    auto alg = std::make_shared<FreeAlgebra>(name, gens, bound);
    GradedModel m;
    m.operad = name;
    m.generators = gens;
    m.bound = bound;
    m.basis = [alg](int d) -> const std::vector<Element>& { return alg->graded_basis(d); };
    for (const auto& c : spec.cooperations) m.coproducts.push_back(c.name);
    for (const auto& o : spec.operations) m.products.push_back(o.name);
    return m;
}

GradedModel labelled_graded_model(const std::string& name, int bound) {
    const OperadSpec& spec = operad(name);
    if (bound < 1) throw std::invalid_argument("degree bound must be positive");
    auto cache = std::make_shared<std::map<int, std::vector<Element>>>();
    for (int d = 1; d <= bound; ++d) (*cache)[d] = enumerate_basis(name, d);
    GradedModel m;
    m.operad = name;
    m.bound = bound;
    m.basis = [cache, bound](int d) -> const std::vector<Element>& {
        if (d < 1 || d > bound) throw DegreeOverflow("degree " + std::to_string(d) + " outside 1.." + std::to_string(bound));
        return cache->at(d);
    };
    for (const auto& c : spec.cooperations) m.coproducts.push_back(c.name);
    for (const auto& o : spec.operations) m.products.push_back(o.name);
    return m;
}

namespace {

using ImageKey = std::pair<std::string, Tensor>;
using Images = LinComb<ImageKey>;

// All iterated reduced coproducts of b, keyed by the path of (position, cooperation) choices,
// grouped by tensor length.
std::map<std::size_t, Images> iterated_images(const std::vector<std::string>& coops, const Element& b) {
    std::map<std::size_t, Images> out;
    Images frontier;
    frontier.add(ImageKey{"", Tensor{b}}, Scalar(1));
    while (!frontier.is_zero()) {
        Images next;
        for (const auto& [key, c] : frontier) {
            const auto& [path, t] = key;
            for (std::size_t pos = 0; pos < t.size(); ++pos)
                for (std::size_t ci = 0; ci < coops.size(); ++ci)
                    for (const auto& [piece, d] : coproduct(coops[ci], t[pos])) {
                        Tensor nt(t.begin(), t.begin() + static_cast<long>(pos));
                        nt.insert(nt.end(), piece.begin(), piece.end());
                        nt.insert(nt.end(), t.begin() + static_cast<long>(pos) + 1, t.end());
                        std::string np = path + std::to_string(pos) + ":" + std::to_string(ci) + ";";
                        next.add(ImageKey{np, std::move(nt)}, c * d);
                    }
        }
        for (const auto& [key, c] : next) out[key.second.size()].add(key, c);
        frontier = std::move(next);
    }
    return out;
}

// Kernel dimension and basis of the map sending basis[j] to images[j].
template <class K>
Matrix kernel_of(const std::vector<LinComb<K>>& images) {
    std::set<K> keys;
    for (const auto& im : images)
        for (const auto& [k, c] : im) keys.insert(k);
    Coordinates<K> rows(std::vector<K>(keys.begin(), keys.end()));
    Matrix m(rows.dim(), Row(images.size(), Scalar(0)));
    for (std::size_t j = 0; j < images.size(); ++j) {
        Row col = rows.vector(images[j]);
        for (std::size_t i = 0; i < col.size(); ++i) m[i][j] = col[i];
    }
    return exact_kernel(m, images.size());
}

std::size_t rank_of(const std::vector<Vec>& vs) {
    std::set<Element> keys;
    for (const auto& v : vs)
        for (const auto& [e, c] : v) keys.insert(e);
    Coordinates<Element> coords(std::vector<Element>(keys.begin(), keys.end()));
    Matrix m;
    for (const auto& v : vs) m.push_back(coords.vector(v));
    return exact_rank(m);
}

// Independent subset of vs, kept in order.
std::vector<Vec> independent(const std::vector<Vec>& vs) {
    std::vector<Vec> kept;
    for (const auto& v : vs) {
        if (v.is_zero()) continue;
        kept.push_back(v);
        if (rank_of(kept) < kept.size()) kept.pop_back();
    }
    return kept;
}

// Calls f(args) for every tuple of seeds of total degree <= bound.
template <class F>
void for_seed_tuples(const std::vector<Vec>& seeds, int arity, int bound, F&& f) {
    std::vector<Vec> cur;
    std::function<void(int, int)> rec = [&](int left, int used) {
        if (left == 0) {
            f(cur);
            return;
        }
        for (const auto& s : seeds) {
            int d = max_degree(s);
            if (used + d > bound) continue;
            cur.push_back(s);
            rec(left - 1, used + d);
            cur.pop_back();
        }
    };
    rec(arity, 0);
}

}  // namespace

std::map<int, std::vector<Vec>> extract_primitives(const GradedModel& model) {
    std::map<int, std::vector<Vec>> out;
    for (int d = 1; d <= model.bound; ++d) {
        const auto& basis = model.basis(d);
        std::vector<LinComb<std::pair<std::size_t, Tensor>>> images;
        for (const auto& b : basis) {
            LinComb<std::pair<std::size_t, Tensor>> all;
            for (std::size_t ci = 0; ci < model.coproducts.size(); ++ci)
                for (const auto& [t, c] : coproduct(model.coproducts[ci], b)) all.add({ci, t}, c);
            images.push_back(std::move(all));
        }
        Coordinates<Element> coords(basis);
        auto& prims = out[d];
        for (const auto& k : kernel_of(images)) prims.push_back(coords.element(k));
    }
    return out;
}

std::vector<std::size_t> generated_ranks(const GradedModel& model, const std::vector<Vec>& seeds) {
    std::map<int, std::vector<Vec>> span;
    for (const auto& s : seeds) span[max_degree(s)].push_back(s);
    std::vector<std::size_t> ranks;
    for (int d = 1; d <= model.bound; ++d) {
        std::vector<Vec> gens = span[d];
        for (const auto& p : model.products) {
            int k = symbol_arity(p);
            std::vector<Vec> pool;
            for (int e = 1; e < d; ++e)
                for (const auto& v : span[e]) pool.push_back(v);
            for_seed_tuples(pool, k, d, [&](const std::vector<Vec>& args) {
                int total = 0;
                for (const auto& a : args) total += max_degree(a);
                if (total == d) gens.push_back(product(p, args));
            });
        }
        span[d] = independent(gens);
        ranks.push_back(span[d].size());
    }
    return ranks;
}

IdempotentCheck check_idempotent(const std::string& name, int generators, int bound) {
    IdempotentCheck r;
    r.operad = name;
    r.generators = generators;
    r.bound = bound;
    GradedModel model = free_graded_model(name, generators, bound);
    IdempotentPlan plan(name, bound);
    auto fail = [&](bool& flag, const std::string& what) {
        if (r.failure.empty()) r.failure = what;
        flag = false;
    };
    for (int d = 1; d <= bound; ++d)
        for (const auto& b : model.basis(d)) {
            ++r.checked;
            Vec x(b);
            Vec e = inductive_idempotent(plan, x);
            for (const auto& c : model.coproducts)
                if (!coproduct(c, e).is_zero()) fail(r.kills_coproducts, c + " of e(" + format(b) + ") is not zero");
            if (inductive_idempotent(plan, e) != e) fail(r.idempotent, "e(e(" + format(b) + ")) differs from e");
            if (d == 1 && e != x) fail(r.identity_on_generators, "e moves the generator " + format(b));
        }
    for (int n = 2; n <= bound; ++n) {
        std::vector<Vec> prims;
        for (const auto& b : model.basis(1)) prims.emplace_back(b);
        for (const auto& mu : enumerate_basis(name, n))
            for_seed_tuples(prims, n, bound, [&](const std::vector<Vec>& args) {
                ++r.checked;
                Vec v = inductive_idempotent(plan, evaluate(name, mu, args));
                if (!v.is_zero()) fail(r.vanishes_on_products, "e does not vanish on " + format(mu) + " applied to generators");
            });
    }
    return r;
}

RigidityReport rigidity_roundtrip(const std::string& name, int generators, int bound) {
    RigidityReport r;
    r.operad = name;
    r.generators = generators;
    r.bound = bound;
    GradedModel model = free_graded_model(name, generators, bound);
    auto note = [&](bool& flag, const std::string& what) {
        if (r.failure.empty()) r.failure = what;
        flag = false;
    };

    std::vector<Element> all;
    std::map<int, std::vector<std::map<std::size_t, Images>>> images;
    for (int d = 1; d <= bound; ++d) {
        const auto& basis = model.basis(d);
        r.component_dims.push_back(basis.size());
        all.insert(all.end(), basis.begin(), basis.end());
        for (const auto& b : basis) images[d].push_back(iterated_images(model.coproducts, b));
    }

    // F_n: kernel of every iterated coproduct with more than n factors, degree by degree.
    auto dim_f = [&](int n) {
        std::size_t dim = 0;
        for (int d = 1; d <= bound; ++d) {
            std::vector<Images> cols;
            for (const auto& per : images[d]) {
                Images im;
                for (const auto& [len, v] : per)
                    if (static_cast<int>(len) > n) im += v;
                cols.push_back(std::move(im));
            }
            dim += kernel_of(cols).size();
        }
        return dim;
    };

    auto prims_by_degree = extract_primitives(model);
    std::vector<Vec> prims;
    for (const auto& [d, vs] : prims_by_degree) prims.insert(prims.end(), vs.begin(), vs.end());
    r.primitive_dim = prims.size();
    {
        std::vector<Vec> gens;
        for (const auto& b : model.basis(1)) gens.emplace_back(b);
        std::vector<Vec> both = gens;
        both.insert(both.end(), prims.begin(), prims.end());
        if (prims.size() != gens.size() || rank_of(both) != gens.size())
            note(r.primitives_are_generators, "primitives differ from the generator span");
    }

    std::size_t prev = 0;
    for (int n = 1; n <= bound; ++n) {
        FiltrationRow row;
        row.n = n;
        row.dim_f = dim_f(n);
        row.dim_f_prev = prev;
        std::vector<Vec> m;
        for (const auto& mu : enumerate_basis(name, n))
            for_seed_tuples(prims, n, bound, [&](const std::vector<Vec>& args) { m.push_back(evaluate(name, mu, args)); });
        row.dim_m = m.empty() ? 0 : rank_of(m);
        if (!row.ok()) note(r.decomposition, "dim F_" + std::to_string(n) + " is not dim F_" + std::to_string(n - 1) + " + dim M_" + std::to_string(n));
        r.filtration.push_back(row);
        prev = row.dim_f;
    }

    IdempotentPlan plan(name, bound);
    std::vector<Vec> image;
    for (const auto& b : all) image.push_back(inductive_idempotent(plan, Vec(b)));
    std::vector<Vec> with_prims = prims;
    with_prims.insert(with_prims.end(), image.begin(), image.end());
    if (rank_of(image) != prims.size() || rank_of(with_prims) != prims.size())
        note(r.image_is_primitive, "image of e differs from the primitives");

    auto ranks = generated_ranks(model, prims);
    for (int d = 1; d <= bound; ++d)
        if (ranks[static_cast<std::size_t>(d - 1)] != r.component_dims[static_cast<std::size_t>(d - 1)])
            note(r.generated, "primitives do not generate degree " + std::to_string(d));

    r.idempotent = check_idempotent(name, generators, bound);
    if (r.failure.empty() && !r.idempotent.pass()) r.failure = r.idempotent.failure;
    return r;
}

}  // namespace opforge
