#include "tqft/braid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tqft {

BraidWord BraidWord::parse(const std::string& text, int strands) {
    BraidWord w;
    w.strands = strands;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // trim
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        tok = tok.substr(a, b - a + 1);
        BraidLetter l;
        size_t pos = 0;
        if (tok.rfind("tw", 0) == 0) {
            l.twist = true;
            pos = 2;
        } else if (tok.rfind("s", 0) == 0) {
            l.twist = false;
            pos = 1;
        } else {
            throw std::invalid_argument("bad braid token: " + tok);
        }
        size_t caret = tok.find('^');
        l.index = std::stoi(tok.substr(pos, caret == std::string::npos ? std::string::npos : caret - pos));
        l.power = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        if (l.index < 1 || (l.twist ? l.index > strands : l.index >= strands))
            throw std::invalid_argument("braid index out of range: " + tok);
        if (!l.twist && l.power != 1 && l.power != -1) {
            // expand s_i^k into repeated letters
            BraidLetter unit = l;
            unit.power = l.power > 0 ? 1 : -1;
            for (int k = 0; k < std::abs(l.power); ++k) w.letters.push_back(unit);
            continue;
        }
        if (l.power == 0) continue;
        w.letters.push_back(l);
    }
    return w;
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> p(static_cast<size_t>(strands));
    for (int i = 0; i < strands; ++i) p[static_cast<size_t>(i)] = i;
    for (const auto& l : letters)
        if (!l.twist) std::swap(p[static_cast<size_t>(l.index - 1)], p[static_cast<size_t>(l.index)]);
    return p;
}

bool BraidWord::is_pure() const {
    auto p = permutation();
    for (int i = 0; i < strands; ++i)
        if (p[static_cast<size_t>(i)] != i) return false;
    return true;
}

BraidWord BraidWord::inverse() const {
    BraidWord w;
    w.strands = strands;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        BraidLetter l = *it;
        l.power = -l.power;
        w.letters.push_back(l);
    }
    return w;
}

std::string BraidWord::str() const {
    std::string out;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ",";
        out += letters[i].twist ? "tw" : "s";
        out += std::to_string(letters[i].index);
        if (letters[i].power != 1) out += "^" + std::to_string(letters[i].power);
    }
    return out;
}

BraidWord pure_generator(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("pure_generator: need 1 <= i < j <= n");
    BraidWord w;
    w.strands = n;
    for (int k = j - 1; k > i; --k) w.letters.push_back({false, k, 1});
    w.letters.push_back({false, i, 1});
    w.letters.push_back({false, i, 1});
    for (int k = i + 1; k <= j - 1; ++k) w.letters.push_back({false, k, -1});
    return w;
}

BraidWord random_pure_word(int n, int length, std::mt19937_64& rng) {
    BraidWord w;
    w.strands = n;
    if (n < 2) return w;
    for (int t = 0; t < length; ++t) {
        int i = 1 + static_cast<int>(rng() % static_cast<uint64_t>(n - 1));
        int j = i + 1 + static_cast<int>(rng() % static_cast<uint64_t>(n - i));
        BraidWord g = pure_generator(i, j, n);
        if (rng() & 1) g = g.inverse();
        for (const auto& l : g.letters) w.letters.push_back(l);
    }
    return w;
}

namespace {

// Single-module ladder coefficients used inside the crossing sum.
// Raising chain: coefficient of applying the kind's divided E^{(t)} to e_k.
Laurent ediv_single(Kind kind, int alpha, int k, int t) {
    if (t == 0) return Laurent(1);
    if (k - t < 0) return Laurent();
    switch (kind) {
        case Kind::VermaFbar: {
            Laurent c = qbinom(k, t);
            for (int j = 1; j <= t; ++j) c *= Laurent::q_power(alpha + j - k) - Laurent::q_power(-alpha - j + k);
            return c;
        }
        case Kind::FiniteV: {
            // E^{(t)} e_k = qbinom over the product of single steps / [t]!
            Laurent c(1);
            for (int j = 0; j < t; ++j) c *= qint(alpha - (k - j) + 1);
            return c.exact_div(qfact(t));
        }
        case Kind::VermaE:
            throw std::invalid_argument("divided E powers unavailable on the raising Verma kind");
    }
    return Laurent();
}

// Plain n-th power of the degree-one raising generator on e_k.
Laurent e_pow_single(Kind kind, int alpha, int k, int t) {
    Laurent c(1);
    for (int j = 0; j < t; ++j) c *= e_step(kind, alpha, k - j);
    return c;
}

// Plain n-th power of Fbar^{(1)} on e_k (coefficient of e_{k+t}).
Laurent fbar_pow_single(Kind kind, int alpha, int k, int t) {
    Laurent c(1);
    for (int j = 0; j < t; ++j) c *= fbar_step(kind, alpha, k + j);
    return c;
}

// Divided Fbar^{(t)} on e_k, available on the kinds whose integral form has it.
Laurent fbardiv_single(Kind kind, int alpha, int k, int t) {
    if (t == 0) return Laurent(1);
    switch (kind) {
        case Kind::VermaE: {
            Laurent c = qbinom(k + t, t);
            for (int j = 0; j < t; ++j) c *= Laurent::q_power(alpha - j - k) - Laurent::q_power(-alpha + j + k);
            return c;
        }
        case Kind::FiniteV:
            return fbar_pow_single(kind, alpha, k, t).exact_div(qfact(t));
        case Kind::VermaFbar:
            throw std::invalid_argument("divided Fbar powers unavailable on the lowering Verma kind");
    }
    return Laurent();
}

}  // namespace

SparseOpL rmatrix_op(const TensorAlgebra& src, int b, int slot, int sign) {
    const auto& colors = src.colors();
    const int n = static_cast<int>(colors.size());
    if (slot < 0 || slot + 1 >= n) throw std::invalid_argument("rmatrix_op: slot out of range");
    const Kind kind = src.kind();
    const WeightSpace& w = src.space(b);
    SparseOpL op(w.dim(), w.dim());
    const int a1 = colors[static_cast<size_t>(slot)];
    const int a2 = colors[static_cast<size_t>(slot + 1)];
    for (int c = 0; c < w.dim(); ++c) {
        const auto& t = w.tuples[static_cast<size_t>(c)];
        const int k1 = t[static_cast<size_t>(slot)], k2 = t[static_cast<size_t>(slot + 1)];
        for (int s = 0;; ++s) {
            if (k1 - s < 0) break;
            if (kind == Kind::FiniteV && k2 + s > a2) break;
            // q^{s(s-1)/2} E^{(s)} ⊗ (Fbar^{(1)})^s on the two slots, then the
            // diagonal q^{lm/2} on the shifted weights. sign < 0 conjugates
            // the sum term to (-1)^s q^{-s(s-1)/2} and negates the diagonal.
            Laurent term;
            if (kind == Kind::VermaE) {
                // E², Fbar^{(s)} variant: same operator by the divided-power swap.
                term = e_pow_single(kind, a1, k1, s) * fbardiv_single(kind, a2, k2, s);
            } else {
                term = ediv_single(kind, a1, k1, s) * fbar_pow_single(kind, a2, k2, s);
            }
            if (!term.is_zero()) {
                // sign > 0: diagonal q^{H⊗H/2} after the sum (shifted weights);
                // sign < 0: inverse quasi-R after q^{-H⊗H/2} (original weights).
                int spow;
                if (sign > 0) {
                    int l1 = a1 - 2 * (k1 - s);
                    int l2 = a2 - 2 * (k2 + s);
                    spow = l1 * l2 + s * (s - 1);
                } else {
                    int l1 = a1 - 2 * k1;
                    int l2 = a2 - 2 * k2;
                    spow = -l1 * l2 - s * (s - 1);
                }
                Laurent coeff = term * Laurent::s_power(spow);
                if (sign < 0 && (s % 2) != 0) coeff = -coeff;
                std::vector<int> u = t;
                u[static_cast<size_t>(slot)] = k1 - s;
                u[static_cast<size_t>(slot + 1)] = k2 + s;
                int idx = w.index_of(u);
                if (idx >= 0) op.add(idx, c, coeff);
            }
            if (kind != Kind::FiniteV && s > w.m) break;
        }
    }
    return op;
}

SparseOpL pr_op(const TensorAlgebra& src, int b, int slot, int sign) {
    const auto& colors = src.colors();
    std::vector<int> swapped = colors;
    std::swap(swapped[static_cast<size_t>(slot)], swapped[static_cast<size_t>(slot + 1)]);
    TensorAlgebra dst(src.level(), src.kind(), swapped);
    const WeightSpace& ws = src.space(b);
    const WeightSpace& wd = dst.space(b);

    auto swap_index = [&](const std::vector<int>& t) {
        std::vector<int> u = t;
        std::swap(u[static_cast<size_t>(slot)], u[static_cast<size_t>(slot + 1)]);
        return wd.index_of(u);
    };

    SparseOpL out(wd.dim(), ws.dim());
    if (sign > 0) {
        // P ∘ R on the source colors.
        SparseOpL r = rmatrix_op(src, b, slot, +1);
        for (int c = 0; c < r.cols; ++c)
            for (const auto& [row, v] : r.col[static_cast<size_t>(c)]) {
                int idx = swap_index(ws.tuples[static_cast<size_t>(row)]);
                if (idx >= 0) out.add(idx, c, v);
            }
    } else {
        // (P ∘ R)^{-1} = R^{-1} ∘ P: swap first, then the inverse R-matrix on
        // the swapped colors.
        SparseOpL rinv = rmatrix_op(dst, b, slot, -1);
        for (int c = 0; c < ws.dim(); ++c) {
            int mid = swap_index(ws.tuples[static_cast<size_t>(c)]);
            if (mid < 0) continue;
            for (const auto& [row, v] : rinv.col[static_cast<size_t>(mid)]) out.add(row, c, v);
        }
    }
    // Deterministic row order within columns.
    for (auto& colv : out.col)
        std::sort(colv.begin(), colv.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

MatX<Laurent> twist_operator(const ModuleSpec& spec) {
    const int d = spec.dim();
    MatX<Laurent> acc = constant_matrix(d, d, Laurent());
    // sum_n q^{n(3n+1)/2} (q-q^{-1})^n F^{(n)} K^{-n-1} E^n, rewritten with
    // the divided powers each kind provides; zero beyond the dimension.
    for (int n = 0; n <= (spec.kind == Kind::FiniteV ? spec.weight : spec.truncation); ++n) {
        MatX<Laurent> term;
        if (spec.kind == Kind::VermaFbar) {
            // (Fbar^{(1)})^n K^{-n-1} E^{(n)}
            MatX<Laurent> f1 = generator_matrix(spec, Gen::Fbar, 1);
            MatX<Laurent> p = identity_matrix(d, Laurent(), Laurent(1));
            for (int k = 0; k < n; ++k) p = f1 * p;
            term = p;
        } else {
            // Fbar^{(n)} K^{-n-1} E^n with E^n = plain powers
            term = generator_matrix(spec, Gen::Fbar, n);
        }
        MatX<Laurent> kin = generator_matrix(spec, Gen::Kinv);
        MatX<Laurent> kpow = identity_matrix(d, Laurent(), Laurent(1));
        for (int k = 0; k < n + 1; ++k) kpow = kin * kpow;
        MatX<Laurent> epow;
        if (spec.kind == Kind::VermaFbar) {
            epow = generator_matrix(spec, Gen::Ediv, n);
        } else {
            MatX<Laurent> e1 = generator_matrix(spec, Gen::E);
            epow = identity_matrix(d, Laurent(), Laurent(1));
            for (int k = 0; k < n; ++k) epow = e1 * epow;
        }
        MatX<Laurent> prod = term * kpow * epow;
        Laurent c = Laurent::s_power(n * (3 * n + 1));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) acc(i, j) += c * prod(i, j);
    }
    // Left factor (-1)^{weight} q^{-H^2/2}.
    for (int i = 0; i < d; ++i) {
        int lam = spec.weight - 2 * i;
        Laurent pre = Laurent::s_power(-lam * lam);
        if (((lam % 2) + 2) % 2 == 1) pre = -pre;
        for (int j = 0; j < d; ++j) acc(i, j) = pre * acc(i, j);
    }
    return acc;
}

SparseMat twist_op(const TensorAlgebra& alg, int b, int slot, int power) {
    const CycField& f = CycField::get(alg.level());
    const WeightSpace& w = alg.space(b);
    SparseMat op(w.dim(), w.dim(), f);
    const int a = alg.colors()[static_cast<size_t>(slot)];
    // Diagonal entries of the single-module twist: value at index k.
    ModuleSpec spec{alg.kind(), a, std::max(0, w.m)};
    MatX<Laurent> v = twist_operator(spec);
    std::vector<CycNum> diag;
    diag.reserve(static_cast<size_t>(spec.dim()));
    for (int k = 0; k < spec.dim(); ++k) diag.push_back(specialize(v(k, k), alg.level()));
    for (int c = 0; c < w.dim(); ++c) {
        int k = w.tuples[static_cast<size_t>(c)][static_cast<size_t>(slot)];
        CycNum val = diag[static_cast<size_t>(k)];
        CycNum out = CycNum::one(f);
        for (int t = 0; t < std::abs(power); ++t) out *= val;
        if (power < 0) out = out.inverse();
        op.add(c, c, out);
    }
    return op;
}

const QuantumBlock& BraidContext::block(const std::vector<int>& colors) {
    auto it = blocks_.find(colors);
    if (it == blocks_.end()) it = blocks_.emplace(colors, quantum_block({r_, outer_, colors})).first;
    return it->second;
}

const MatX<CycNum>& BraidContext::form(const std::vector<int>& colors) {
    auto it = forms_.find(colors);
    if (it == forms_.end()) it = forms_.emplace(colors, induced_form(block(colors))).first;
    return it->second;
}

ColoredOperator BraidContext::word_tensor_op(const std::vector<int>& colors, const BraidWord& word) {
    const CycField& f = CycField::get(r_);
    std::vector<int> cur = colors;
    WeightSpace w0 = make_weight_space(r_, Kind::VermaFbar, colors, outer_);
    MatX<CycNum> acc = identity_matrix<CycNum>(w0.dim(), CycNum::zero(f), CycNum::one(f));
    for (const auto& l : word.letters) {
        TensorAlgebra alg(r_, Kind::VermaFbar, cur);
        if (l.twist) {
            SparseMat t = twist_op(alg, outer_, l.index - 1, l.power);
            acc = t.apply(acc);
        } else {
            SparseMat t = pr_op(alg, outer_, l.index - 1, l.power).specialize_at(r_);
            acc = t.apply(acc);
            std::swap(cur[static_cast<size_t>(l.index - 1)], cur[static_cast<size_t>(l.index)]);
        }
    }
    return {colors, cur, std::move(acc)};
}

MatX<CycNum> BraidContext::descended_letter(const std::vector<int>& colors, const BraidLetter& letter,
                                            std::vector<int>& colors_out) {
    LetterKey key{colors, letter.index, letter.power, letter.twist};
    colors_out = colors;
    if (!letter.twist)
        std::swap(colors_out[static_cast<size_t>(letter.index - 1)], colors_out[static_cast<size_t>(letter.index)]);
    auto it = letters_.find(key);
    if (it != letters_.end()) return it->second;

    const CycField& f = CycField::get(r_);
    const QuantumBlock& src = block(colors);
    const QuantumBlock& dst = block(colors_out);
    TensorAlgebra alg(r_, Kind::VermaFbar, colors);
    SparseMat op = letter.twist ? twist_op(alg, outer_, letter.index - 1, letter.power)
                                : pr_op(alg, outer_, letter.index - 1, letter.power).specialize_at(r_);

    MatX<CycNum> hw_sec = src.hw_basis * src.sections;  // D x dim
    MatX<CycNum> mapped = op.apply(hw_sec);

    // The tensor operator must preserve highest-weight vectors.
    TensorAlgebra alg_dst(r_, Kind::VermaFbar, colors_out);
    SparseMat e_dst = alg_dst.op_e(outer_).specialize_at(r_);
    MatX<CycNum> ekill = e_dst.apply(mapped);
    for (Eigen::Index i = 0; i < ekill.rows(); ++i)
        for (Eigen::Index j = 0; j < ekill.cols(); ++j)
            if (!ekill(i, j).is_zero()) throw std::logic_error("braid descent: image left the highest-weight space");

    // Project through red into the target block coordinates and re-express.
    std::vector<CycNum> red = red_diagonal({r_, outer_, colors_out});
    for (Eigen::Index i = 0; i < mapped.rows(); ++i)
        for (Eigen::Index j = 0; j < mapped.cols(); ++j)
            if (!mapped(i, j).is_zero()) mapped(i, j) = mapped(i, j) * red[static_cast<size_t>(i)];
    MatX<CycNum> proj = dst.coinv.project(mapped, f);
    MatX<CycNum> m = solve(dst.image_basis, proj, CycNum::zero(f));
    it = letters_.emplace(key, std::move(m)).first;
    return it->second;
}

ColoredOperator BraidContext::word_image_op(const std::vector<int>& colors, const BraidWord& word) {
    const CycField& f = CycField::get(r_);
    std::vector<int> cur = colors;
    const QuantumBlock& b0 = block(colors);
    MatX<CycNum> acc = identity_matrix<CycNum>(b0.dimension, CycNum::zero(f), CycNum::one(f));
    for (const auto& l : word.letters) {
        std::vector<int> next;
        MatX<CycNum> m = descended_letter(cur, l, next);
        acc = m * acc;
        cur = next;
    }
    if (cur != colors) throw std::invalid_argument("word_image_op: color list does not return to itself");
    return {colors, cur, std::move(acc)};
}

FormInvarianceReport check_form_invariance(BraidContext& ctx, const std::vector<int>& colors,
                                           const BraidWord& word) {
    FormInvarianceReport rep;
    if (!word.is_pure()) {
        rep.pass = false;
        rep.witness = "word is not pure";
        return rep;
    }
    const MatX<CycNum>& g = ctx.form(colors);
    ColoredOperator rho = ctx.word_image_op(colors, word);
    const Eigen::Index d = g.rows();
    if (d == 0) return rep;
    const CycField& f = g(0, 0).field();
    MatX<CycNum> gr = constant_matrix<CycNum>(d, d, CycNum::zero(f));
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index j = 0; j < d; ++j) {
            CycNum acc = CycNum::zero(f);
            for (Eigen::Index b = 0; b < d; ++b)
                if (!g(a, b).is_zero() && !rho.matrix(b, j).is_zero()) acc += g(a, b) * rho.matrix(b, j);
            gr(a, j) = acc;
        }
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            CycNum acc = CycNum::zero(f);
            for (Eigen::Index a = 0; a < d; ++a)
                if (!rho.matrix(a, i).is_zero() && !gr(a, j).is_zero()) acc += rho.matrix(a, i).conj() * gr(a, j);
            if (!(acc - g(i, j)).is_zero()) {
                rep.pass = false;
                std::ostringstream os;
                os << "entry (" << i << "," << j << ") changed under " << word.str();
                rep.witness = os.str();
                return rep;
            }
        }
    }
    return rep;
}

std::vector<CycNum> gluing_embed(const ColoredDisk& disk, int n1, int c,
                                 const std::vector<CycNum>& u, const std::vector<CycNum>& x) {
    const CycField& f = CycField::get(disk.r);
    const int n = static_cast<int>(disk.colors.size());
    if (n1 < 1 || n1 >= n) throw std::invalid_argument("gluing_embed: bad split");
    std::vector<int> left(disk.colors.begin(), disk.colors.begin() + n1);
    std::vector<int> right_full;
    right_full.push_back(c);
    right_full.insert(right_full.end(), disk.colors.begin() + n1, disk.colors.end());

    WeightSpace wl = make_weight_space(disk.r, Kind::VermaFbar, left, c);
    WeightSpace wr = make_weight_space(disk.r, Kind::VermaFbar, right_full, disk.outer);
    TensorAlgebra full(disk.r, Kind::VermaFbar, disk.colors);
    const WeightSpace& wf = full.space(disk.outer);
    if (static_cast<int>(u.size()) != wl.dim() || static_cast<int>(x.size()) != wr.dim())
        throw std::invalid_argument("gluing_embed: vector sizes do not match the factor spaces");

    std::vector<CycNum> out(static_cast<size_t>(wf.dim()), CycNum::zero(f));
    // Group x by the first-factor index k; for each k place u ⊗ v_k at weight
    // outer + 2k and lower with (Fbar^{(1)} over the left slots)^k.
    const int kmax = wr.m < 0 ? -1 : wr.m;
    for (int k = 0; k <= kmax; ++k) {
        // assemble u ⊗ v_k in W(outer + 2k) of the full algebra
        const WeightSpace& wk = full.space(disk.outer + 2 * k);
        if (wk.m < 0) continue;
        std::vector<CycNum> vec(static_cast<size_t>(wk.dim()), CycNum::zero(f));
        bool nonzero = false;
        for (int xi = 0; xi < wr.dim(); ++xi) {
            const auto& t = wr.tuples[static_cast<size_t>(xi)];
            if (t[0] != k || x[static_cast<size_t>(xi)].is_zero()) continue;
            for (int ui = 0; ui < wl.dim(); ++ui) {
                if (u[static_cast<size_t>(ui)].is_zero()) continue;
                std::vector<int> tup = wl.tuples[static_cast<size_t>(ui)];
                tup.insert(tup.end(), t.begin() + 1, t.end());
                int idx = wk.index_of(tup);
                if (idx < 0) throw std::logic_error("gluing_embed: weight bookkeeping mismatch");
                vec[static_cast<size_t>(idx)] += u[static_cast<size_t>(ui)] * x[static_cast<size_t>(xi)];
                nonzero = true;
            }
        }
        if (!nonzero) continue;
        for (int s = 0; s < k; ++s) {
            SparseMat low = full.op_fbar(disk.outer + 2 * (k - s), 0, n1).specialize_at(disk.r);
            MatX<CycNum> tmp = constant_matrix<CycNum>(static_cast<int>(vec.size()), 1, CycNum::zero(f));
            for (size_t i = 0; i < vec.size(); ++i) tmp(static_cast<int>(i), 0) = vec[i];
            MatX<CycNum> next = low.apply(tmp);
            vec.assign(static_cast<size_t>(next.rows()), CycNum::zero(f));
            for (Eigen::Index i = 0; i < next.rows(); ++i) vec[static_cast<size_t>(i)] = next(i, 0);
        }
        for (size_t i = 0; i < vec.size(); ++i) out[i] += vec[i];
    }

    // The assembled class must again be a highest-weight vector.
    MatX<CycNum> col = constant_matrix<CycNum>(wf.dim(), 1, CycNum::zero(f));
    for (int i = 0; i < wf.dim(); ++i) col(i, 0) = out[static_cast<size_t>(i)];
    SparseMat e1 = full.op_e(disk.outer).specialize_at(disk.r);
    SparseMat er = full.op_e_div(disk.outer, disk.r).specialize_at(disk.r);
    MatX<CycNum> k1 = e1.apply(col), kr = er.apply(col);
    for (Eigen::Index i = 0; i < k1.rows(); ++i)
        if (!k1(i, 0).is_zero()) throw std::logic_error("gluing_embed: output not killed by E");
    for (Eigen::Index i = 0; i < kr.rows(); ++i)
        if (!kr(i, 0).is_zero()) throw std::logic_error("gluing_embed: output not killed by E^{(r)}");
    return out;
}

}  // namespace tqft
