#include "tqft/weightspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqft {

SparseMat SparseOpL::specialize_at(int level) const {
    SparseMat s(rows, cols, CycField::get(level));
    for (int c = 0; c < cols; ++c)
        for (const auto& [r, v] : col[static_cast<size_t>(c)]) {
            CycNum x = specialize(v, level);
            if (!x.is_zero()) s.col[static_cast<size_t>(c)].emplace_back(r, std::move(x));
        }
    return s;
}

MatX<Laurent> SparseOpL::to_dense() const {
    MatX<Laurent> a = constant_matrix(rows, cols, Laurent());
    for (int c = 0; c < cols; ++c)
        for (const auto& [r, v] : col[static_cast<size_t>(c)]) a(r, c) = v;
    return a;
}

SparseOpL operator*(const SparseOpL& a, const SparseOpL& b) {
    if (a.cols != b.rows) throw std::invalid_argument("SparseOpL: size mismatch");
    SparseOpL out(a.rows, b.cols);
    std::vector<Laurent> acc(static_cast<size_t>(a.rows));
    std::vector<int> touched;
    for (int c = 0; c < b.cols; ++c) {
        touched.clear();
        for (const auto& [k, vb] : b.col[static_cast<size_t>(c)]) {
            for (const auto& [r, va] : a.col[static_cast<size_t>(k)]) {
                if (acc[static_cast<size_t>(r)].is_zero() &&
                    std::find(touched.begin(), touched.end(), r) == touched.end())
                    touched.push_back(r);
                acc[static_cast<size_t>(r)] += va * vb;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (int r : touched) {
            if (!acc[static_cast<size_t>(r)].is_zero()) out.col[static_cast<size_t>(c)].emplace_back(r, acc[static_cast<size_t>(r)]);
            acc[static_cast<size_t>(r)] = Laurent();
        }
    }
    return out;
}

SparseOpL SparseOpL::exact_div(const Laurent& d) const {
    SparseOpL out(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (const auto& [r, v] : col[static_cast<size_t>(c)]) out.col[static_cast<size_t>(c)].emplace_back(r, v.exact_div(d));
    return out;
}

std::vector<Laurent> SparseOpL::apply(const std::vector<Laurent>& x) const {
    std::vector<Laurent> y(static_cast<size_t>(rows));
    for (int c = 0; c < cols; ++c) {
        if (x[static_cast<size_t>(c)].is_zero()) continue;
        for (const auto& [r, v] : col[static_cast<size_t>(c)]) y[static_cast<size_t>(r)] += v * x[static_cast<size_t>(c)];
    }
    return y;
}

int WeightSpace::index_of(const std::vector<int>& t) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    if (it == tuples.end() || *it != t) return -1;
    return static_cast<int>(it - tuples.begin());
}

namespace {

void enumerate_tuples(const std::vector<int>& colors, Kind kind, int m, size_t slot,
                      std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (slot == colors.size()) {
        if (m == 0) out.push_back(cur);
        return;
    }
    int cap = m;
    if (kind == Kind::FiniteV) cap = std::min(cap, colors[slot]);
    for (int v = 0; v <= cap; ++v) {
        cur[slot] = v;
        enumerate_tuples(colors, kind, m - v, slot + 1, cur, out);
    }
    cur[slot] = 0;
}

}  // namespace

WeightSpace make_weight_space(int r, Kind kind, const std::vector<int>& colors, int outer) {
    WeightSpace w;
    w.r = r;
    w.kind = kind;
    w.colors = colors;
    w.outer = outer;
    int sum = 0;
    for (int a : colors) sum += a;
    if ((sum - outer) % 2 != 0 || sum < outer) return w;  // m = -1: empty
    w.m = (sum - outer) / 2;
    std::vector<int> cur(colors.size(), 0);
    enumerate_tuples(colors, kind, w.m, 0, cur, w.tuples);
    std::sort(w.tuples.begin(), w.tuples.end());
    return w;
}

TensorAlgebra::TensorAlgebra(int r, Kind kind, std::vector<int> colors)
    : r_(r), kind_(kind), colors_(std::move(colors)) {
    for (int a : colors_) color_sum_ += a;
}

const WeightSpace& TensorAlgebra::space(int b) const {
    auto it = spaces_.find(b);
    if (it == spaces_.end()) it = spaces_.emplace(b, make_weight_space(r_, kind_, colors_, b)).first;
    return it->second;
}

SparseOpL TensorAlgebra::op_e(int b, int lo, int hi) const {
    const WeightSpace& src = space(b);
    const WeightSpace& dst = space(b + 2);
    if (hi < 0) hi = static_cast<int>(colors_.size());
    SparseOpL op(dst.dim(), src.dim());
    if (src.m < 0 || dst.m < 0) return op;
    // Coproduct: E over slots [lo, hi) with K on slots to the right of the
    // acting slot (within the range).
    for (int c = 0; c < src.dim(); ++c) {
        const auto& t = src.tuples[static_cast<size_t>(c)];
        for (int i = lo; i < hi; ++i) {
            if (t[static_cast<size_t>(i)] == 0) continue;
            Laurent coeff = e_step(kind_, colors_[static_cast<size_t>(i)], t[static_cast<size_t>(i)]);
            if (coeff.is_zero()) continue;
            int kw = 0;
            for (int j = i + 1; j < hi; ++j) kw += colors_[static_cast<size_t>(j)] - 2 * t[static_cast<size_t>(j)];
            coeff *= Laurent::q_power(kw);
            std::vector<int> u = t;
            --u[static_cast<size_t>(i)];
            int idx = dst.index_of(u);
            if (idx >= 0) op.add(idx, c, coeff);
        }
    }
    return op;
}

namespace {

SparseOpL lowering_op(const TensorAlgebra& alg, int b, int lo, int hi, bool plain_f) {
    const WeightSpace& src = alg.space(b);
    const WeightSpace& dst = alg.space(b - 2);
    if (hi < 0) hi = static_cast<int>(alg.colors().size());
    SparseOpL op(dst.dim(), src.dim());
    if (src.m < 0 || dst.m < 0) return op;
    // Coproduct: Fbar (or F) on one slot, K^{-1} on slots to its left.
    for (int c = 0; c < src.dim(); ++c) {
        const auto& t = src.tuples[static_cast<size_t>(c)];
        for (int i = lo; i < hi; ++i) {
            const int a = alg.colors()[static_cast<size_t>(i)];
            if (alg.kind() == Kind::FiniteV && t[static_cast<size_t>(i)] >= a) continue;
            Laurent coeff = plain_f ? f_step(alg.kind(), a, t[static_cast<size_t>(i)])
                                    : fbar_step(alg.kind(), a, t[static_cast<size_t>(i)]);
            if (coeff.is_zero()) continue;
            int kw = 0;
            for (int j = lo; j < i; ++j) kw += alg.colors()[static_cast<size_t>(j)] - 2 * t[static_cast<size_t>(j)];
            coeff *= Laurent::q_power(-kw);
            std::vector<int> u = t;
            ++u[static_cast<size_t>(i)];
            int idx = dst.index_of(u);
            if (idx >= 0) op.add(idx, c, coeff);
        }
    }
    return op;
}

}  // namespace

SparseOpL TensorAlgebra::op_fbar(int b, int lo, int hi) const { return lowering_op(*this, b, lo, hi, false); }

SparseOpL TensorAlgebra::op_f(int b, int lo, int hi) const {
    if (kind_ != Kind::FiniteV) throw std::invalid_argument("plain F tensor operator needs the finite kind");
    return lowering_op(*this, b, lo, hi, true);
}

SparseOpL TensorAlgebra::op_e_div(int b, int l) const {
    if (l == 0) {
        SparseOpL id(space(b).dim(), space(b).dim());
        for (int i = 0; i < id.cols; ++i) id.add(i, i, Laurent(1));
        return id;
    }
    SparseOpL p = op_e(b);
    for (int k = 1; k < l; ++k) p = op_e(b + 2 * k) * p;
    return p.exact_div(qfact(l));
}

SparseOpL TensorAlgebra::op_fbar_div(int b, int l) const {
    if (l == 0) {
        SparseOpL id(space(b).dim(), space(b).dim());
        for (int i = 0; i < id.cols; ++i) id.add(i, i, Laurent(1));
        return id;
    }
    SparseOpL p = op_fbar(b);
    for (int k = 1; k < l; ++k) p = op_fbar(b - 2 * k) * p;
    return p.exact_div(qfact(l));
}

SparseOpL TensorAlgebra::op_f_div(int b, int l) const {
    if (l == 0) {
        SparseOpL id(space(b).dim(), space(b).dim());
        for (int i = 0; i < id.cols; ++i) id.add(i, i, Laurent(1));
        return id;
    }
    SparseOpL p = op_f(b);
    for (int k = 1; k < l; ++k) p = op_f(b - 2 * k) * p;
    return p.exact_div(qfact(l));
}

SparseOpL tensor_generator(const TensorAlgebra& alg, int b, Gen g, int l) {
    switch (g) {
        case Gen::K:
        case Gen::Kinv:
        case Gen::KbinomR: {
            const int d = alg.space(b).dim();
            SparseOpL op(d, d);
            Laurent v;
            if (g == Gen::K) v = Laurent::q_power(b);
            else if (g == Gen::Kinv) v = Laurent::q_power(-b);
            else v = qbinom(b, alg.level());
            for (int i = 0; i < d; ++i) op.add(i, i, v);
            return op;
        }
        case Gen::E:
            return alg.op_e(b);
        case Gen::Ediv:
            return alg.op_e_div(b, l);
        case Gen::F:
            return alg.op_f(b);
        case Gen::Fbar:
            return l == 1 ? alg.op_fbar(b) : alg.op_fbar_div(b, l);
    }
    throw std::logic_error("tensor_generator: unreachable");
}

}  // namespace tqft
