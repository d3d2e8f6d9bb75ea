#pragma once

#include "tqft/blocks.hpp"
#include "tqft/weightspace.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace tqft {

/// One letter of a framed braid word: either a band generator s_i^{±1}
/// (1-based index, sign) or a framing twist tw_i^{power} on one strand.
struct BraidLetter {
    bool twist = false;
    int index = 1;
    int power = 1;  // sign for s_i, integer power for tw_i
};

struct BraidWord {
    int strands = 0;
    std::vector<BraidLetter> letters;

    /// Parse comma-separated tokens "s1", "s2^-1", "tw3^2".
    static BraidWord parse(const std::string& text, int strands);

    /// The permutation of strand positions induced by the word (twists act
    /// trivially); perm[i] = final position of the strand starting at i.
    std::vector<int> permutation() const;
    bool is_pure() const;

    BraidWord inverse() const;
    std::string str() const;
};

/// Pure-braid generator conjugating s_i^2 out to strand j:
/// (s_{j-1}...s_{i+1}) s_i^2 (s_{i+1}^{-1}...s_{j-1}^{-1}), 1 <= i < j <= n.
BraidWord pure_generator(int i, int j, int n);
BraidWord random_pure_word(int n, int length, std::mt19937_64& rng);

/// Braiding operator of one band generator on a weight space: swap composed
/// with the R-matrix on slots (slot, slot+1), mapping W(b; colors) to
/// W(b; swapped colors). sign = -1 gives the inverse crossing.
SparseOpL pr_op(const TensorAlgebra& src, int b, int slot, int sign);

/// Single-strand twist on a weight space; diagonal, specialized at the
/// level so that negative powers exist. power may be negative.
SparseMat twist_op(const TensorAlgebra& alg, int b, int slot, int power);

/// Twist operator on one module, over the Laurent ring:
/// (-1)^{weight} q^{-H^2/2} sum_n q^{n(3n+1)/2} Fbar^{(n)} K^{-n-1} E^{(n)}-type,
/// assembled with the divided powers the module kind provides.
MatX<Laurent> twist_operator(const ModuleSpec& spec);

/// R-matrix of one crossing on a two-factor weight space, before the swap.
SparseOpL rmatrix_op(const TensorAlgebra& src, int b, int slot, int sign);

/// A matrix between the blocks of two (possibly permuted) color lists.
struct ColoredOperator {
    std::vector<int> source_colors;
    std::vector<int> target_colors;
    MatX<CycNum> matrix;
};

/// Caches blocks and descended elementary letters per color tuple, so that
/// long words and word sweeps stay cheap.
class BraidContext {
  public:
    BraidContext(int r, int outer) : r_(r), outer_(outer) {}

    const QuantumBlock& block(const std::vector<int>& colors);

    /// Tensor-level operator of a whole word on the Verma lowering side.
    ColoredOperator word_tensor_op(const std::vector<int>& colors, const BraidWord& word);

    /// Descended block matrix of a whole word; requires the color list to
    /// come back to itself (pure word, or equal colors along the way).
    ColoredOperator word_image_op(const std::vector<int>& colors, const BraidWord& word);

    /// Gram matrix of the intersection form on the block (cached).
    const MatX<CycNum>& form(const std::vector<int>& colors);

  private:
    struct LetterKey {
        std::vector<int> colors;
        int index;
        int power;
        bool twist;
        bool operator<(const LetterKey& o) const {
            if (colors != o.colors) return colors < o.colors;
            if (index != o.index) return index < o.index;
            if (power != o.power) return power < o.power;
            return twist < o.twist;
        }
    };
    MatX<CycNum> descended_letter(const std::vector<int>& colors, const BraidLetter& letter,
                                  std::vector<int>& colors_out);

    int r_;
    int outer_;
    std::map<std::vector<int>, QuantumBlock> blocks_;
    std::map<std::vector<int>, MatX<CycNum>> forms_;
    std::map<LetterKey, MatX<CycNum>> letters_;
};

/// rho(word)^dagger G rho(word) = G, exactly. Returns false with a witness
/// description on failure.
struct FormInvarianceReport {
    bool pass = true;
    std::string witness;
};
FormInvarianceReport check_form_invariance(BraidContext& ctx, const std::vector<int>& colors,
                                           const BraidWord& word);

/// comp map of the gluing: u a hw vector for (c; colors[0..n1)), x a hw
/// vector for (outer; c, colors[n1..n)) expanded over the first factor;
/// returns sum_k (Fbar^{(1)}_{[0,n1)})^k u ⊗ v_k in the full weight space.
/// Throws if the result is not killed by E and E^{(r)}.
std::vector<CycNum> gluing_embed(const ColoredDisk& disk, int n1, int c,
                                 const std::vector<CycNum>& u, const std::vector<CycNum>& x);

}  // namespace tqft
