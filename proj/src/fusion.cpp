#include "tqft/fusion.hpp"

#include "tqft/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace tqft {

bool admissible(int r, int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0 || a > r - 2 || b > r - 2 || c > r - 2)
        throw std::invalid_argument("admissible: color out of range");
    if ((a + b + c) % 2 != 0) return false;
    if (std::abs(a - b) > c || c > a + b) return false;
    return a + b + c < 2 * r - 2;
}

FusionTable FusionTable::build(int r) {
    FusionTable t;
    t.r = r;
    const int k = r - 1;
    t.table.assign(static_cast<size_t>(k) * k * k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                t.table[static_cast<size_t>((a * k + b) * k + c)] = admissible(r, a, b, c) ? 1 : 0;
    return t;
}

std::string FusionTable::csv() const {
    std::ostringstream os;
    os << "a,b,c,admissible\n";
    const int k = r - 1;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c) os << a << "," << b << "," << c << "," << (at(a, b, c) ? 1 : 0) << "\n";
    return os.str();
}

long fusion_dim(const ColoredDisk& disk) {
    const int r = disk.r;
    const int n = static_cast<int>(disk.colors.size());
    for (int a : disk.colors)
        if (a < 0 || a > r - 2) return 0;
    if (disk.outer < 0 || disk.outer > r - 2) return 0;
    if (n == 0) return disk.outer == 0 ? 1 : 0;
    // Left comb: fold colors left to right, tracking the running color.
    std::vector<long> cur(static_cast<size_t>(r - 1), 0);
    cur[static_cast<size_t>(disk.colors[0])] = 1;
    for (int i = 1; i < n; ++i) {
        std::vector<long> next(static_cast<size_t>(r - 1), 0);
        for (int c = 0; c <= r - 2; ++c) {
            if (cur[static_cast<size_t>(c)] == 0) continue;
            for (int d = 0; d <= r - 2; ++d)
                if (admissible(r, c, disk.colors[static_cast<size_t>(i)], d))
                    next[static_cast<size_t>(d)] += cur[static_cast<size_t>(c)];
        }
        cur = std::move(next);
    }
    return cur[static_cast<size_t>(disk.outer)];
}

FusionTree random_tree(int n, std::mt19937_64& rng) {
    // Random full binary tree over leaves [0, n).
    struct Builder {
        std::mt19937_64& rng;
        FusionTree build(int lo, int hi) {
            FusionTree t;
            if (hi - lo == 1) {
                t.leaf = lo;
                return t;
            }
            int cut = lo + 1 + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo - 1));
            t.left = std::make_unique<FusionTree>(build(lo, cut));
            t.right = std::make_unique<FusionTree>(build(cut, hi));
            return t;
        }
    } b{rng};
    return b.build(0, n);
}

namespace {

// Count labelings: returns per color c the number of admissible labelings of
// the subtree with root color c.
std::vector<long> tree_counts(const ColoredDisk& disk, const FusionTree& t) {
    const int k = disk.r - 1;
    std::vector<long> out(static_cast<size_t>(k), 0);
    if (t.leaf >= 0) {
        out[static_cast<size_t>(disk.colors[static_cast<size_t>(t.leaf)])] = 1;
        return out;
    }
    std::vector<long> l = tree_counts(disk, *t.left), r = tree_counts(disk, *t.right);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (l[static_cast<size_t>(a)] == 0 || r[static_cast<size_t>(b)] == 0) continue;
            for (int c = 0; c < k; ++c)
                if (admissible(disk.r, a, b, c))
                    out[static_cast<size_t>(c)] += l[static_cast<size_t>(a)] * r[static_cast<size_t>(b)];
        }
    return out;
}

}  // namespace

long fusion_dim_tree(const ColoredDisk& disk, const FusionTree& tree) {
    return tree_counts(disk, tree)[static_cast<size_t>(disk.outer)];
}

GluingReport verify_gluing(const ColoredDisk& disk, int split) {
    GluingReport rep;
    const int n = static_cast<int>(disk.colors.size());
    if (split < 1 || split >= n) throw std::invalid_argument("verify_gluing: bad split");
    const CycField& f = CycField::get(disk.r);

    QuantumBlock full = quantum_block(disk);
    rep.dim_full = full.dimension;

    std::vector<int> left(disk.colors.begin(), disk.colors.begin() + split);
    std::vector<int> right(disk.colors.begin() + split, disk.colors.end());

    std::vector<std::vector<CycNum>> assembled;
    for (int c = 0; c <= disk.r - 2; ++c) {
        ColoredDisk dl{disk.r, c, left};
        std::vector<int> rc;
        rc.push_back(c);
        rc.insert(rc.end(), right.begin(), right.end());
        ColoredDisk dr{disk.r, disk.outer, rc};
        if (dl.drop() < 0 || dr.drop() < 0) continue;
        QuantumBlock bl = quantum_block(dl);
        QuantumBlock br = quantum_block(dr);
        rep.dim_sum += static_cast<long>(bl.dimension) * br.dimension;
        if (bl.dimension == 0 || br.dimension == 0) continue;
        MatX<CycNum> ul = bl.hw_basis * bl.sections;
        MatX<CycNum> ur = br.hw_basis * br.sections;
        for (Eigen::Index i = 0; i < ul.cols(); ++i) {
            std::vector<CycNum> u(static_cast<size_t>(ul.rows()), CycNum::zero(f));
            for (Eigen::Index k = 0; k < ul.rows(); ++k) u[static_cast<size_t>(k)] = ul(k, i);
            for (Eigen::Index j = 0; j < ur.cols(); ++j) {
                std::vector<CycNum> x(static_cast<size_t>(ur.rows()), CycNum::zero(f));
                for (Eigen::Index k = 0; k < ur.rows(); ++k) x[static_cast<size_t>(k)] = ur(k, j);
                assembled.push_back(gluing_embed(disk, split, c, u, x));
            }
        }
    }

    if (rep.dim_sum != rep.dim_full) {
        rep.pass = false;
        std::ostringstream os;
        os << "dimension mismatch: full " << rep.dim_full << " vs sum " << rep.dim_sum;
        rep.witness = os.str();
    }

    // Project the assembled classes into block coordinates and take the rank.
    if (!assembled.empty()) {
        MatX<CycNum> cols = constant_matrix<CycNum>(static_cast<int>(assembled[0].size()),
                                                    static_cast<int>(assembled.size()), CycNum::zero(f));
        for (size_t j = 0; j < assembled.size(); ++j)
            for (size_t i = 0; i < assembled[j].size(); ++i) cols(static_cast<int>(i), static_cast<int>(j)) = assembled[j][i];
        for (Eigen::Index i = 0; i < cols.rows(); ++i)
            for (Eigen::Index j = 0; j < cols.cols(); ++j)
                if (!cols(i, j).is_zero()) cols(i, j) = full.red_diag[static_cast<size_t>(i)] * cols(i, j);
        MatX<CycNum> proj = full.coinv.project(cols, f);
        rep.assembled_rank = rank(proj);
    }
    if (rep.assembled_rank != rep.dim_full) {
        rep.pass = false;
        std::ostringstream os;
        os << rep.witness << (rep.witness.empty() ? "" : "; ") << "assembled rank " << rep.assembled_rank
           << " != block dimension " << rep.dim_full;
        rep.witness = os.str();
    }
    return rep;
}

CycNum twist_scalar(int r, int a) { return specialize(Laurent::s_power(a * (a + 2)), r); }

CycNum abelian_twist(int r, int a) { return specialize(Laurent::s_power(-a * a), r); }

int abelian_dim(int r, int b, const std::vector<int>& colors) {
    int s = -b;
    for (int a : colors) s += a;
    int mod = ((s % (2 * r)) + 2 * r) % (2 * r);
    return mod == 0 ? 1 : 0;
}

AbelianMonodromy abelian_monodromy(int r, const std::vector<int>& colors) {
    AbelianMonodromy m;
    m.sigma = specialize(-Laurent::q_power(-2), r);
    for (int a : colors) m.taus.push_back(specialize(Laurent::q_power(2 * a), r));
    return m;
}

}  // namespace tqft
