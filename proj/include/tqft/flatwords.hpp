#pragma once

#include "tqft/laurent.hpp"
#include "tqft/matrix.hpp"
#include "tqft/tl.hpp"
#include "tqft/weightspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace tqft {

/// A flat word: balanced sequence over ".()" of length n with b dots, none
/// of them inside a matching pair. Indexes the flat-tangle basis of the
/// skein module with all inner colors 1.
struct FlatWord {
    std::string w;

    int length() const { return static_cast<int>(w.size()); }
    int dots() const;
    int pair_count() const { return (length() - dots()) / 2; }
    /// Matching pairs (open, close), 0-indexed, in order of opening.
    std::vector<std::pair<int, int>> pairs() const;
    bool valid() const;

    bool operator<(const FlatWord& o) const { return w < o.w; }
    bool operator==(const FlatWord& o) const { return w == o.w; }
};

/// All flat words of length n with b dots, lexicographic in '(' < ')' < '.'
/// order of generation (sorted by string).
std::vector<FlatWord> flat_words(int n, int b);

/// The flat tangle of a word: n top points, b bottom points; pairs are cups,
/// dots run through. Represented like TLDiagram but rectangular.
struct FlatTangle {
    int top = 0;
    int bottom = 0;
    std::vector<int> match;  // points 0..top-1 on top, top..top+bottom-1 below
};
FlatTangle word_tangle(const FlatWord& w);

/// Skein pairing: reflect w2, stack over w1, evaluate with the projector
/// sandwich rule: delta^{#loops} if exactly b through strands survive, else 0.
Laurent skein_form(const FlatWord& w1, const FlatWord& w2);

/// Action of the cup-cap generator e_k (1 <= k <= n-1) on the flat-word
/// basis by diagram composition; projector kills turnbacks at the root.
MatX<Laurent> tl_rep_on_words(int n, int b, int k);

/// Sequences in {0,1}^n compatible with w: dots carry 0, each pair carries
/// a single 1 on one of its two ends.
std::vector<std::vector<int>> compatible_tuples(const FlatWord& w);

/// u = #pairs with the 1 on the opener, v = #pairs with the 1 on the closer.
int tuple_u(const FlatWord& w, const std::vector<int>& t);
int tuple_v(const FlatWord& w, const std::vector<int>& t);

/// Exponent bookkeeping of the class normalization:
/// f(w, t) = -m(2+n) + sum_i i*t_i (1-based) + (u - v)/2, returned as the
/// s-exponent 2*f so it stays integral.
int f_exponent_times2(const FlatWord& w, const std::vector<int>& t);

/// Cup-state expansion of a word in the weight-b tuple basis of the n-fold
/// tensor power of the two-dimensional module: each pair contributes
/// -q^{-1/2} e0⊗e1 + q^{1/2} e1⊗e0, each dot contributes e0.
std::vector<Laurent> word_to_quantum(const FlatWord& w, const WeightSpace& space);

struct CinftyExpansion {
    std::map<std::vector<int>, Laurent> coeffs;  // tuple -> q^{(u-v)/2} (-1)^v
    Laurent rescale;                             // (q - q^{-1})^m relating the two classes
};
CinftyExpansion cinfty_coefficients(const FlatWord& w);

}  // namespace tqft
