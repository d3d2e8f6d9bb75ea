#pragma once

#include "tqft/blocks.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace tqft {

/// Admissibility of a color triple: even sum, triangle inequalities, and
/// a + b + c < 2r - 2.
bool admissible(int r, int a, int b, int c);

/// Symmetric lookup table over the color set 0..r-2.
struct FusionTable {
    int r = 0;
    std::vector<char> table;  // (a*(r-1)+b)*(r-1)+c

    static FusionTable build(int r);
    bool at(int a, int b, int c) const { return table[static_cast<size_t>((a * (r - 1) + b) * (r - 1) + c)] != 0; }
    std::string csv() const;  // rows "a,b,c,admissible"
};

/// Dimension by admissible labelings of the left-comb fusion tree.
long fusion_dim(const ColoredDisk& disk);

/// Dimension along an arbitrary binary tree shape (for shape-independence
/// spot checks); `shape` is a parenthesized leaf pattern built recursively.
struct FusionTree {
    int leaf = -1;  // >= 0: leaf index
    std::unique_ptr<FusionTree> left, right;
};
FusionTree random_tree(int n, std::mt19937_64& rng);
long fusion_dim_tree(const ColoredDisk& disk, const FusionTree& tree);

struct GluingReport {
    bool pass = true;
    long dim_full = 0;
    long dim_sum = 0;
    int assembled_rank = 0;
    std::string witness;
};

/// Checks dim(disk) = sum_c dim(c; left) * dim(outer; c, right) with both
/// sides from the linear algebra, and that the assembled comp classes have
/// full rank in the block.
GluingReport verify_gluing(const ColoredDisk& disk, int split);

/// Twist scalars: t_a = q^{a(a+2)/2} and the abelian t_a = q^{-a^2/2},
/// as exact cyclotomic numbers via s = -zeta_r.
CycNum twist_scalar(int r, int a);
CycNum abelian_twist(int r, int a);

/// Abelian functor: dimension rule sum(a_i) - b = 0 mod 2r.
int abelian_dim(int r, int b, const std::vector<int>& colors);

struct AbelianMonodromy {
    CycNum sigma;               // -q^{-2}
    std::vector<CycNum> taus;   // q^{2 a_k}
};
AbelianMonodromy abelian_monodromy(int r, const std::vector<int>& colors);

}  // namespace tqft
