#include "opforge/solomon_tits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "opforge/enumerate.hpp"
#include "opforge/symmetric.hpp"

namespace opforge {

std::vector<std::vector<int>> quasi_shuffles(int r, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(static_cast<std::size_t>(r + s));
    // Merge positions i (left) and j (right), emitting one or two values per step.
    std::function<void(int, int, int)> rec = [&](int i, int j, int t) {
        if (i == r && j == s) {
            out.push_back(f);
            return;
        }
        if (i < r) {
            f[static_cast<std::size_t>(i)] = t + 1;
            rec(i + 1, j, t + 1);
        }
        if (j < s) {
            f[static_cast<std::size_t>(r + j)] = t + 1;
            rec(i, j + 1, t + 1);
        }
        if (i < r && j < s) {
            f[static_cast<std::size_t>(i)] = t + 1;
            f[static_cast<std::size_t>(r + j)] = t + 1;
            rec(i + 1, j + 1, t + 1);
        }
    };
    rec(0, 0, 0);
    return out;
}

int value_range(const Surjection& x) {
    return x.values.empty() ? 0 : *std::max_element(x.values.begin(), x.values.end());
}

STElement stuffle_product(const Surjection& x, const Surjection& y) {
    int r = value_range(x), s = value_range(y);
    STElement out;
    for (const auto& f : quasi_shuffles(r, s)) {
        Surjection z;
        for (int v : x.values) z.values.push_back(f[static_cast<std::size_t>(v - 1)]);
        for (int v : y.values) z.values.push_back(f[static_cast<std::size_t>(v + r - 1)]);
        out.add(z, Scalar(1));
    }
    return out;
}

STElement stuffle_product(const STElement& x, const STElement& y) {
    STElement out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.axpy(ca * cb, stuffle_product(a, b));
    return out;
}

Surjection corestriction(const Surjection& x, const std::vector<int>& values) {
    std::vector<int> kept;
    for (int v : x.values)
        if (std::find(values.begin(), values.end(), v) != values.end()) kept.push_back(v);
    if (kept.empty()) throw std::invalid_argument("empty co-restriction");
    return standardize(kept);
}

STTensor block_coproduct(const Surjection& x) {
    int r = value_range(x);
    STTensor out;
    for (int i = 1; i < r; ++i) {
        std::vector<int> low(static_cast<std::size_t>(i)), high(static_cast<std::size_t>(r - i));
        std::iota(low.begin(), low.end(), 1);
        std::iota(high.begin(), high.end(), i + 1);
        out.add({corestriction(x, low), corestriction(x, high)}, Scalar(1));
    }
    return out;
}

STTensor block_coproduct(const STElement& x) {
    STTensor out;
    for (const auto& [e, c] : x) out.axpy(c, block_coproduct(e));
    return out;
}

STTensor iterated_block_coproduct(const Surjection& x, int factors) {
    if (factors < 1) throw std::invalid_argument("at least one factor");
    STTensor cur;
    cur.add({x}, Scalar(1));
    for (int k = 2; k <= factors; ++k) {
        STTensor next;
        for (const auto& [t, c] : cur)
            for (const auto& [pair, d] : block_coproduct(t.front())) {
                std::vector<Surjection> nt{pair[0], pair[1]};
                nt.insert(nt.end(), t.begin() + 1, t.end());
                next.add(nt, c * d);
            }
        cur = std::move(next);
    }
    return cur;
}

int nilpotency_index(const Surjection& x) {
    int k = 1;
    while (!iterated_block_coproduct(x, k).is_zero()) ++k;
    return k;
}

namespace {

STTensor pair_tensor(const STElement& a, const STElement& b) {
    STTensor out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out.add({x, y}, cx * cy);
    return out;
}

STElement one(const Surjection& x) { return STElement(x); }

}  // namespace

STTensor hopf_rhs(const Surjection& x, const Surjection& y) {
    STTensor out = pair_tensor(one(x), one(y)) + pair_tensor(one(y), one(x));
    STTensor dx = block_coproduct(x), dy = block_coproduct(y);
    for (const auto& [t, c] : dx) {
        out.axpy(c, pair_tensor(stuffle_product(t[0], y), one(t[1])));
        out.axpy(c, pair_tensor(one(t[0]), stuffle_product(t[1], y)));
    }
    for (const auto& [t, c] : dy) {
        out.axpy(c, pair_tensor(stuffle_product(x, t[0]), one(t[1])));
        out.axpy(c, pair_tensor(one(t[0]), stuffle_product(x, t[1])));
    }
    for (const auto& [t, c] : dx)
        for (const auto& [u, d] : dy)
            out.axpy(c * d, pair_tensor(stuffle_product(t[0], u[0]), stuffle_product(t[1], u[1])));
    return out;
}

HopfReport check_st_hopf(int bound) {
    HopfReport r;
    r.bound = bound;
    for (int n = 1; n < bound && r.pass; ++n)
        for (int m = 1; n + m <= bound && r.pass; ++m)
            for (const auto& x : enumerate_surjections(n))
                for (const auto& y : enumerate_surjections(m)) {
                    ++r.checked;
                    if (block_coproduct(stuffle_product(x, y)) != hopf_rhs(x, y)) {
                        r.pass = false;
                        r.counterexample = format(Element(x)) + " * " + format(Element(y));
                        break;
                    }
                }
    return r;
}

namespace {

Coordinates<Surjection> st_coordinates(int n) { return Coordinates<Surjection>(enumerate_surjections(n)); }

std::vector<STElement> independent(const Coordinates<Surjection>& coords, const std::vector<STElement>& vs) {
    Matrix m;
    std::vector<STElement> kept;
    for (const auto& v : vs) {
        if (v.is_zero()) continue;
        m.push_back(coords.vector(v));
        if (exact_rank(m) < m.size()) {
            m.pop_back();
        } else {
            kept.push_back(v);
        }
    }
    return kept;
}

}  // namespace

NongenerationReport nongeneration_certificate(const Surjection& target, int bound) {
    const int deg = static_cast<int>(target.values.size());
    if (deg < 1 || deg > bound) throw std::invalid_argument("target degree outside 1..bound");
    if (standardize(target.values).values != target.values) throw std::invalid_argument("target is not a surjection");
    NongenerationReport r;
    r.target = target;
    r.bound = bound;
    std::vector<std::vector<STElement>> span(static_cast<std::size_t>(bound + 1));
    for (int n = 1; n <= bound; ++n) {
        auto basis = enumerate_surjections(n);
        Coordinates<Surjection> coords(basis);
        // Kernel of Delta_block on ST_n.
        std::vector<STTensor> images;
        std::set<std::vector<Surjection>> keys;
        for (const auto& b : basis) {
            images.push_back(block_coproduct(b));
            for (const auto& [t, c] : images.back()) keys.insert(t);
        }
        Coordinates<std::vector<Surjection>> rows(std::vector<std::vector<Surjection>>(keys.begin(), keys.end()));
        Matrix m(rows.dim(), Row(basis.size(), Scalar(0)));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Row col = rows.vector(images[j]);
            for (std::size_t i = 0; i < col.size(); ++i) m[i][j] = col[i];
        }
        std::vector<STElement> prims;
        for (const auto& k : exact_kernel(m, basis.size())) prims.push_back(coords.element(k));
        r.primitive_bases.push_back(prims);

        std::vector<STElement> gens = prims;
        for (int i = 1; i < n; ++i)
            for (const auto& a : span[static_cast<std::size_t>(i)])
                for (const auto& b : span[static_cast<std::size_t>(n - i)]) gens.push_back(stuffle_product(a, b));
        span[static_cast<std::size_t>(n)] = independent(coords, gens);
        r.degrees.push_back({n, basis.size(), prims.size(), span[static_cast<std::size_t>(n)].size()});
    }
    Coordinates<Surjection> coords = st_coordinates(deg);
    Matrix rows;
    for (const auto& v : span[static_cast<std::size_t>(deg)]) rows.push_back(coords.vector(v));
    r.span_rank = rows.empty() ? 0 : exact_rank(rows);
    Row t = coords.vector(STElement(target));
    r.generated = !rows.empty() && in_row_span(rows, t);
    rows.push_back(t);
    r.span_rank_with_target = exact_rank(rows);
    return r;
}

Matrix phi_matrix(int n) {
    auto perms = all_perms(n);
    std::vector<Word> words;
    for (const auto& p : perms) words.push_back(Word{std::vector<Label>(p.begin(), p.end())});
    Matrix m(words.size(), Row(words.size(), Scalar(0)));
    for (std::size_t i = 0; i < words.size(); ++i)
        for (const auto& s : perms) {
            Word w;
            for (int k : s) w.letters.push_back(words[i].letters[static_cast<std::size_t>(k - 1)]);
            auto it = std::find_if(words.begin(), words.end(), [&](const Word& v) { return v.letters == w.letters; });
            m[i][static_cast<std::size_t>(it - words.begin())] += 1;
        }
    return m;
}

}  // namespace opforge
