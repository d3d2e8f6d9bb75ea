#include "tqft/blocks.hpp"

#include "tqft/flatwords.hpp"

#include <stdexcept>

namespace tqft {

MatX<CycNum> highest_weight_space(const ColoredDisk& disk) {
    const CycField& f = CycField::get(disk.r);
    TensorAlgebra alg(disk.r, Kind::VermaFbar, disk.colors);
    const WeightSpace& w = alg.space(disk.outer);
    if (w.m < 0 || w.dim() == 0) return constant_matrix<CycNum>(w.dim(), 0, CycNum::zero(f));
    SparseMat e1 = alg.op_e(disk.outer).specialize_at(disk.r);
    SparseMat er = alg.op_e_div(disk.outer, disk.r).specialize_at(disk.r);
    return certified_kernel(SparseMat::vstack(e1, er));
}

MatX<CycNum> CoinvariantPresentation::project(const MatX<CycNum>& x, const CycField& f) const {
    const int c = quotient_dim();
    const int k = static_cast<int>(pivot_rows.size());
    MatX<CycNum> out = constant_matrix<CycNum>(c, x.cols(), CycNum::zero(f));
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        for (int ci = 0; ci < c; ++ci) {
            CycNum acc = x(coord_rows[static_cast<size_t>(ci)], j);
            for (int pi = 0; pi < k; ++pi) {
                const CycNum& e = image_basis(coord_rows[static_cast<size_t>(ci)], pi);
                const CycNum& xv = x(pivot_rows[static_cast<size_t>(pi)], j);
                if (!e.is_zero() && !xv.is_zero()) acc -= e * xv;
            }
            out(ci, j) = acc;
        }
    }
    return out;
}

MatX<CycNum> CoinvariantPresentation::matrix(const CycField& f) const {
    MatX<CycNum> id = identity_matrix<CycNum>(space_dim, CycNum::zero(f), CycNum::one(f));
    return project(id, f);
}

CoinvariantPresentation coinvariant_presentation(const ColoredDisk& disk) {
    const CycField& f = CycField::get(disk.r);
    TensorAlgebra alg(disk.r, Kind::VermaE, disk.colors);
    const WeightSpace& w = alg.space(disk.outer);
    CoinvariantPresentation p;
    p.space_dim = w.m < 0 ? 0 : w.dim();
    if (p.space_dim == 0) return p;

    // Relation columns: im Fbar^{(1)} from b+2 and im Fbar^{(r)} from b+2r.
    SparseMat f1 = alg.op_fbar(disk.outer + 2).specialize_at(disk.r);
    SparseMat fr = alg.op_fbar_div(disk.outer + 2 * disk.r, disk.r).specialize_at(disk.r);
    SparseMat rel(p.space_dim, f1.cols + fr.cols, f);
    for (int c = 0; c < f1.cols; ++c) rel.col[static_cast<size_t>(c)] = f1.col[static_cast<size_t>(c)];
    for (int c = 0; c < fr.cols; ++c) rel.col[static_cast<size_t>(f1.cols + c)] = fr.col[static_cast<size_t>(c)];

    CertifiedColumnSpace cs = certified_column_space(rel);
    p.image_basis = cs.basis;
    p.pivot_rows = cs.pivot_rows;
    std::vector<char> is_piv(static_cast<size_t>(p.space_dim), 0);
    for (int r : p.pivot_rows) is_piv[static_cast<size_t>(r)] = 1;
    for (int r = 0; r < p.space_dim; ++r)
        if (!is_piv[static_cast<size_t>(r)]) p.coord_rows.push_back(r);
    return p;
}

Laurent red_coefficient(int alpha, int k) {
    Laurent qd = Laurent::q_power(1) - Laurent::q_power(-1);
    Laurent c = qd.pow(static_cast<unsigned>(k)) * qfact(k);
    for (int j = 0; j < k; ++j) c *= qint(alpha - j);
    return c;
}

std::vector<CycNum> red_diagonal(const ColoredDisk& disk) {
    TensorAlgebra alg(disk.r, Kind::VermaFbar, disk.colors);
    const WeightSpace& w = alg.space(disk.outer);
    std::vector<CycNum> d;
    d.reserve(static_cast<size_t>(w.dim()));
    for (const auto& t : w.tuples) {
        Laurent c(1);
        for (size_t i = 0; i < t.size(); ++i) c *= red_coefficient(disk.colors[i], t[i]);
        d.push_back(specialize(c, disk.r));
    }
    return d;
}

const WeightSpace& QuantumBlock::weight_space(Kind kind) const {
    auto& slot = (kind == Kind::VermaFbar) ? wspace_f_ : wspace_e_;
    if (!slot) slot = make_weight_space(disk.r, kind, disk.colors, disk.outer);
    return *slot;
}

MatX<CycNum> QuantumBlock::composite() const {
    const CycField& f = CycField::get(disk.r);
    const int D = static_cast<int>(hw_basis.rows());
    MatX<CycNum> rk = constant_matrix<CycNum>(D, hw_basis.cols(), CycNum::zero(f));
    for (int i = 0; i < D; ++i)
        for (Eigen::Index j = 0; j < hw_basis.cols(); ++j)
            if (!hw_basis(i, j).is_zero() && !red_diag[static_cast<size_t>(i)].is_zero())
                rk(i, j) = red_diag[static_cast<size_t>(i)] * hw_basis(i, j);
    return coinv.project(rk, f);
}

QuantumBlock quantum_block(const ColoredDisk& disk) {
    if (disk.r < 3 || disk.r % 2 == 0) throw std::invalid_argument("quantum_block: level must be odd and >= 3");
    const CycField& f = CycField::get(disk.r);
    QuantumBlock b;
    b.disk = disk;
    if (disk.drop() < 0) {
        b.dimension = 0;
        b.hw_basis = constant_matrix<CycNum>(0, 0, CycNum::zero(f));
        b.image_basis = constant_matrix<CycNum>(0, 0, CycNum::zero(f));
        b.sections = constant_matrix<CycNum>(0, 0, CycNum::zero(f));
        return b;
    }
    b.hw_basis = highest_weight_space(disk);
    b.coinv = coinvariant_presentation(disk);
    b.red_diag = red_diagonal(disk);

    MatX<CycNum> cmp = b.composite();
    ColumnSpace<CycNum> cs = column_space(cmp);
    b.image_basis = cs.basis;
    b.image_pivot_rows = cs.pivot_rows;
    b.dimension = static_cast<int>(b.image_basis.cols());
    if (b.dimension > 0) {
        b.sections = solve(cmp, b.image_basis, CycNum::zero(f));
    } else {
        b.sections = constant_matrix<CycNum>(cmp.cols(), 0, CycNum::zero(f));
    }
    return b;
}

std::vector<CycNum> pairing_diagonal(const ColoredDisk& disk) {
    TensorAlgebra alg(disk.r, Kind::VermaFbar, disk.colors);
    const WeightSpace& w = alg.space(disk.outer);
    const int n = static_cast<int>(disk.colors.size());
    std::vector<CycNum> d;
    d.reserve(static_cast<size_t>(w.dim()));
    for (const auto& t : w.tuples) {
        // f(k) = sum_{i != j} a_i k_j - 2 sum_{i<j} k_i k_j
        long e = 0;
        for (int j = 0; j < n; ++j) {
            long asum = 0;
            for (int i = 0; i < n; ++i)
                if (i != j) asum += disk.colors[static_cast<size_t>(i)];
            e += asum * t[static_cast<size_t>(j)];
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e -= 2l * t[static_cast<size_t>(i)] * t[static_cast<size_t>(j)];
        d.push_back(specialize(Laurent::q_power(static_cast<int>(e)), disk.r));
    }
    return d;
}

JwMaps jw_maps(int n, int level) {
    if (n < 0 || n > level - 1) throw std::invalid_argument("jw_maps: weight out of range");
    JwMaps jm;
    jm.n = n;
    jm.level = level;
    TensorAlgebra ones(level, Kind::FiniteV, std::vector<int>(static_cast<size_t>(n), 1));
    // embed: e_j -> F^{(j)} e_0^{⊗n}
    std::vector<Laurent> top(static_cast<size_t>(ones.space(n).dim()));
    top[0] = Laurent(1);  // the single tuple (0,...,0)
    jm.embed_cols.push_back(top);
    std::vector<Laurent> cur = top;
    for (int j = 1; j <= n; ++j) {
        cur = ones.op_f(n - 2 * (j - 1)).apply(cur);
        std::vector<Laurent> col(cur.size());
        Laurent fact = qfact(j);
        for (size_t i = 0; i < cur.size(); ++i) col[i] = cur[i].exact_div(fact);
        jm.embed_cols.push_back(col);
    }
    // project: the unique intertwiner with top functional dual to e_0^{⊗n}:
    // on the drop-j space, row_j(x) = (coefficient of the top tuple in E^j x)
    // divided by [n][n-1]...[n-j+1].
    for (int j = 0; j <= n; ++j) {
        const WeightSpace& wj = ones.space(n - 2 * j);
        std::vector<CycNum> row(static_cast<size_t>(wj.dim()));
        Laurent denom(1);
        for (int s = 0; s < j; ++s) denom *= qint(n - s);
        CycNum dinv = specialize(denom, level).inverse();
        for (int c = 0; c < wj.dim(); ++c) {
            std::vector<Laurent> v(static_cast<size_t>(wj.dim()));
            v[static_cast<size_t>(c)] = Laurent(1);
            for (int s = 0; s < j; ++s) v = ones.op_e(n - 2 * (j - s)).apply(v);
            row[static_cast<size_t>(c)] = specialize(v[0], level) * dinv;
        }
        jm.project_rows.push_back(row);
    }
    return jm;
}

MatX<CycNum> jw_embed_matrix(int n, int level, int drop) {
    JwMaps jm = jw_maps(n, level);
    const CycField& f = CycField::get(level);
    if (drop < 0 || drop > n) throw std::invalid_argument("jw_embed_matrix: drop out of range");
    const auto& col = jm.embed_cols[static_cast<size_t>(drop)];
    MatX<CycNum> m = constant_matrix<CycNum>(static_cast<int>(col.size()), 1, CycNum::zero(f));
    for (size_t i = 0; i < col.size(); ++i) m(static_cast<int>(i), 0) = specialize(col[i], level);
    return m;
}

MatX<CycNum> jw_project_matrix(int n, int level, int drop) {
    JwMaps jm = jw_maps(n, level);
    const CycField& f = CycField::get(level);
    if (drop < 0 || drop > n) throw std::invalid_argument("jw_project_matrix: drop out of range");
    const auto& row = jm.project_rows[static_cast<size_t>(drop)];
    MatX<CycNum> m = constant_matrix<CycNum>(1, static_cast<int>(row.size()), CycNum::zero(f));
    for (size_t i = 0; i < row.size(); ++i) m(0, static_cast<int>(i)) = row[i];
    return m;
}

std::vector<CycNum> embed_into_ones(const ColoredDisk& disk, const std::vector<CycNum>& hw_vec) {
    const CycField& f = CycField::get(disk.r);
    const int n = static_cast<int>(disk.colors.size());
    const int bigN = disk.color_sum();
    const WeightSpace small = make_weight_space(disk.r, Kind::VermaFbar, disk.colors, disk.outer);
    const WeightSpace big = make_weight_space(disk.r, Kind::FiniteV, std::vector<int>(static_cast<size_t>(bigN), 1), disk.outer);

    // Per-color embedding data: for color a and index k, the coordinates of
    // (q-q^{-1})^k [k]! * jw_embed(e_k) in the drop-k space of V_1^{⊗a}.
    std::map<int, JwMaps> jw_cache;
    auto jw_for = [&](int a) -> const JwMaps& {
        auto it = jw_cache.find(a);
        if (it == jw_cache.end()) it = jw_cache.emplace(a, jw_maps(a, disk.r)).first;
        return it->second;
    };

    std::vector<CycNum> out(static_cast<size_t>(big.dim()), CycNum::zero(f));
    Laurent qd = Laurent::q_power(1) - Laurent::q_power(-1);

    for (int idx = 0; idx < small.dim(); ++idx) {
        if (hw_vec[static_cast<size_t>(idx)].is_zero()) continue;
        const auto& t = small.tuples[static_cast<size_t>(idx)];
        // Expand the product over slots of (pi then jw-embed)(e_{t_i}).
        // Each factor i contributes vectors over {0,1}^{a_i} tuples of drop t_i.
        std::vector<std::pair<std::vector<int>, CycNum>> acc;
        acc.emplace_back(std::vector<int>(), CycNum::one(f));
        for (int i = 0; i < n; ++i) {
            const int a = disk.colors[static_cast<size_t>(i)];
            const int k = t[static_cast<size_t>(i)];
            if (a == 0) continue;  // trivial factor, no strands
            const JwMaps& jm = jw_for(a);
            const WeightSpace wk = make_weight_space(disk.r, Kind::FiniteV,
                                                     std::vector<int>(static_cast<size_t>(a), 1), a - 2 * k);
            Laurent pi_scale = qd.pow(static_cast<unsigned>(k)) * qfact(k);
            std::vector<std::pair<std::vector<int>, CycNum>> next;
            for (const auto& [prefix, coeff] : acc) {
                for (int z = 0; z < wk.dim(); ++z) {
                    const Laurent& c = jm.embed_cols[static_cast<size_t>(k)][static_cast<size_t>(z)];
                    if (c.is_zero()) continue;
                    CycNum cc = coeff * specialize(pi_scale * c, disk.r);
                    if (cc.is_zero()) continue;
                    std::vector<int> tuple = prefix;
                    tuple.insert(tuple.end(), wk.tuples[static_cast<size_t>(z)].begin(), wk.tuples[static_cast<size_t>(z)].end());
                    next.emplace_back(std::move(tuple), std::move(cc));
                }
            }
            acc = std::move(next);
        }
        for (const auto& [tuple, coeff] : acc) {
            int bidx = big.index_of(tuple);
            if (bidx < 0) throw std::logic_error("embed_into_ones: tuple outside target space");
            out[static_cast<size_t>(bidx)] += hw_vec[static_cast<size_t>(idx)] * coeff;
        }
    }
    return out;
}

MatX<CycNum> induced_form(const QuantumBlock& block) {
    const ColoredDisk& disk = block.disk;
    const CycField& f = CycField::get(disk.r);
    const int dim = block.dimension;
    MatX<CycNum> g = constant_matrix<CycNum>(dim, dim, CycNum::zero(f));
    if (dim == 0) return g;
    const int m = disk.drop();
    const int bigN = disk.color_sum();

    // Section vectors pushed into the all-one picture.
    const WeightSpace big = make_weight_space(disk.r, Kind::FiniteV,
                                              std::vector<int>(static_cast<size_t>(bigN), 1), disk.outer);
    MatX<CycNum> hw_sections = block.hw_basis * block.sections;  // D x dim
    MatX<CycNum> psi = constant_matrix<CycNum>(big.dim(), dim, CycNum::zero(f));
    for (int u = 0; u < dim; ++u) {
        std::vector<CycNum> v(static_cast<size_t>(hw_sections.rows()));
        for (Eigen::Index i = 0; i < hw_sections.rows(); ++i) v[static_cast<size_t>(i)] = hw_sections(i, u);
        std::vector<CycNum> e = embed_into_ones(disk, v);
        for (int i = 0; i < big.dim(); ++i) psi(i, u) = e[static_cast<size_t>(i)];
    }

    // Flat-word spanning set of the all-one block and its intersection Gram.
    std::vector<FlatWord> words = flat_words(bigN, disk.outer);
    const int W = static_cast<int>(words.size());
    MatX<CycNum> xw = constant_matrix<CycNum>(big.dim(), W, CycNum::zero(f));
    for (int w = 0; w < W; ++w) {
        std::vector<Laurent> v = word_to_quantum(words[static_cast<size_t>(w)], big);
        for (int i = 0; i < big.dim(); ++i) xw(i, w) = specialize(v[static_cast<size_t>(i)], disk.r);
    }

    // Coordinates of the sections over the word vectors.
    MatX<CycNum> coords = certified_solve(SparseMat::from_dense(xw, f), psi);  // W x dim

    // s_D on words: (q - q^{-1})^m times the skein pairing.
    Laurent qd = Laurent::q_power(1) - Laurent::q_power(-1);
    CycNum scale = specialize(qd.pow(static_cast<unsigned>(m)), disk.r);
    MatX<CycNum> sw = constant_matrix<CycNum>(W, W, CycNum::zero(f));
    for (int i = 0; i < W; ++i)
        for (int j = 0; j < W; ++j) {
            Laurent h = skein_form(words[static_cast<size_t>(i)], words[static_cast<size_t>(j)]);
            if (!h.is_zero()) sw(i, j) = scale * specialize(h, disk.r);
        }

    // G = coords^dagger * (S * coords), conjugate-linear in the first slot.
    MatX<CycNum> t = constant_matrix<CycNum>(W, dim, CycNum::zero(f));
    for (int i = 0; i < W; ++i)
        for (int j = 0; j < W; ++j) {
            if (sw(i, j).is_zero()) continue;
            for (int v = 0; v < dim; ++v)
                if (!coords(j, v).is_zero()) t(i, v) += sw(i, j) * coords(j, v);
        }
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            CycNum acc = CycNum::zero(f);
            for (int i = 0; i < W; ++i)
                if (!coords(i, u).is_zero() && !t(i, v).is_zero()) acc += coords(i, u).conj() * t(i, v);
            g(u, v) = acc;
        }
    return g;
}

MatX<CycNum> hermitian_form(const QuantumBlock& block) {
    const int m = block.disk.drop();
    MatX<CycNum> g = induced_form(block);
    if (m <= 0) return g;
    Laurent qd = Laurent::q_power(1) - Laurent::q_power(-1);
    CycNum inv = specialize(qd.pow(static_cast<unsigned>(m)), block.disk.r).inverse();
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = g(i, j) * inv;
    return g;
}

}  // namespace tqft
