#include "tqft/flatwords.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqft {

int FlatWord::dots() const {
    int d = 0;
    for (char c : w)
        if (c == '.') ++d;
    return d;
}

std::vector<std::pair<int, int>> FlatWord::pairs() const {
    std::vector<std::pair<int, int>> out;
    std::vector<int> stack;
    for (int i = 0; i < length(); ++i) {
        if (w[static_cast<size_t>(i)] == '(') {
            out.emplace_back(i, -1);
            stack.push_back(static_cast<int>(out.size()) - 1);
        } else if (w[static_cast<size_t>(i)] == ')') {
            if (stack.empty()) throw std::invalid_argument("unbalanced word");
            out[static_cast<size_t>(stack.back())].second = i;
            stack.pop_back();
        }
    }
    if (!stack.empty()) throw std::invalid_argument("unbalanced word");
    std::sort(out.begin(), out.end());
    return out;
}

bool FlatWord::valid() const {
    int depth = 0;
    for (char c : w) {
        if (c == '(') ++depth;
        else if (c == ')') {
            if (--depth < 0) return false;
        } else if (c == '.') {
            if (depth != 0) return false;
        } else {
            return false;
        }
    }
    return depth == 0;
}

namespace {

void gen_words(int n, int b, int depth, std::string& cur, std::vector<FlatWord>& out) {
    if (static_cast<int>(cur.size()) == n) {
        if (depth == 0 && b == 0) out.push_back({cur});
        return;
    }
    const int remaining = n - static_cast<int>(cur.size());
    // '(' always possible if a closer can still fit.
    if (remaining >= depth + 2 + b) {
        cur.push_back('(');
        gen_words(n, b, depth + 1, cur, out);
        cur.pop_back();
    }
    if (depth > 0) {
        cur.push_back(')');
        gen_words(n, b, depth - 1, cur, out);
        cur.pop_back();
    }
    if (depth == 0 && b > 0) {
        cur.push_back('.');
        gen_words(n, b - 1, depth, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<FlatWord> flat_words(int n, int b) {
    std::vector<FlatWord> out;
    if (b < 0 || n < 0 || (n - b) % 2 != 0 || b > n) return out;
    std::string cur;
    gen_words(n, b, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

FlatTangle word_tangle(const FlatWord& w) {
    FlatTangle t;
    t.top = w.length();
    t.bottom = w.dots();
    t.match.assign(static_cast<size_t>(t.top + t.bottom), -1);
    int next_bottom = t.top;
    for (int i = 0; i < t.top; ++i) {
        if (w.w[static_cast<size_t>(i)] == '.') {
            t.match[static_cast<size_t>(i)] = next_bottom;
            t.match[static_cast<size_t>(next_bottom)] = i;
            ++next_bottom;
        }
    }
    for (const auto& [o, c] : w.pairs()) {
        t.match[static_cast<size_t>(o)] = c;
        t.match[static_cast<size_t>(c)] = o;
    }
    return t;
}

namespace {

// Stack the reflection of t2 on top of t1 along the n shared points.
// Returns {through strands between the two bottoms, closed loops}.
std::pair<int, int> stack_tangles(const FlatTangle& t1, const FlatTangle& t2) {
    const int n = t1.top;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int through = 0;
    for (int s = 0; s < t1.bottom; ++s) {
        int p = t1.match[static_cast<size_t>(n + s)];
        bool use_t2 = true;
        while (true) {
            seen[static_cast<size_t>(p)] = 1;
            int q = (use_t2 ? t2 : t1).match[static_cast<size_t>(p)];
            if (q >= n) {
                if (use_t2) ++through;
                break;
            }
            seen[static_cast<size_t>(q)] = 1;
            p = q;
            use_t2 = !use_t2;
        }
    }
    for (int s = 0; s < t2.bottom; ++s) {
        int p = t2.match[static_cast<size_t>(n + s)];
        if (p >= n || seen[static_cast<size_t>(p)]) continue;
        bool use_t1 = true;
        while (true) {
            seen[static_cast<size_t>(p)] = 1;
            int q = (use_t1 ? t1 : t2).match[static_cast<size_t>(p)];
            if (q >= n) break;
            seen[static_cast<size_t>(q)] = 1;
            p = q;
            use_t1 = !use_t1;
        }
    }
    int loops = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int p = i;
        bool use_t1 = true;
        do {
            seen[static_cast<size_t>(p)] = 1;
            p = (use_t1 ? t1 : t2).match[static_cast<size_t>(p)];
            use_t1 = !use_t1;
        } while (!(p == i && use_t1));
        ++loops;
    }
    return {through, loops};
}

}  // namespace

Laurent skein_form(const FlatWord& w1, const FlatWord& w2) {
    if (w1.length() != w2.length() || w1.dots() != w2.dots())
        throw std::invalid_argument("skein_form: mismatched words");
    FlatTangle t1 = word_tangle(w1), t2 = word_tangle(w2);
    auto [through, loops] = stack_tangles(t1, t2);
    if (through != w1.dots()) return Laurent();  // a turnback hits the projector
    Laurent delta = -(Laurent::q_power(1) + Laurent::q_power(-1));
    return delta.pow(static_cast<unsigned>(loops));
}

MatX<Laurent> tl_rep_on_words(int n, int b, int k) {
    if (k < 1 || k >= n) throw std::invalid_argument("tl_rep_on_words: index out of range");
    std::vector<FlatWord> words = flat_words(n, b);
    const int d = static_cast<int>(words.size());
    MatX<Laurent> m = constant_matrix(d, d, Laurent());
    Laurent delta = -(Laurent::q_power(1) + Laurent::q_power(-1));
    for (int j = 0; j < d; ++j) {
        // Compose e_k (as a 2->0->2 elementary tangle) above the word tangle:
        // cap points k-1,k of the word, then re-open a fresh cup there.
        FlatTangle t = word_tangle(words[static_cast<size_t>(j)]);
        const int a = k - 1, c = k;
        int pa = t.match[static_cast<size_t>(a)], pc = t.match[static_cast<size_t>(c)];
        Laurent coeff(1);
        FlatWord target;
        if (pa == c) {
            // cap meets the cup (a, c): a loop forms, diagram unchanged
            coeff = delta;
            target = words[static_cast<size_t>(j)];
        } else {
            bool a_through = pa >= n, c_through = pc >= n;
            if (a_through && c_through) {
                // two through strands get joined: the projector kills it
                continue;
            }
            // New matching: a--c capped, so pa--pc join; fresh cup at (a, c).
            std::vector<int> match = t.match;
            if (!a_through && !c_through) {
                match[static_cast<size_t>(pa)] = pc;
                match[static_cast<size_t>(pc)] = pa;
            } else {
                int thr = a_through ? pa : pc;   // bottom endpoint
                int oth = a_through ? pc : pa;   // top endpoint of the other arc
                match[static_cast<size_t>(oth)] = thr;
                match[static_cast<size_t>(thr)] = oth;
            }
            match[static_cast<size_t>(a)] = c;
            match[static_cast<size_t>(c)] = a;
            // Rebuild the word string from the new top matching.
            std::string out(static_cast<size_t>(n), '?');
            for (int i = 0; i < n; ++i) {
                int q = match[static_cast<size_t>(i)];
                if (q >= n) out[static_cast<size_t>(i)] = '.';
                else out[static_cast<size_t>(i)] = (q > i) ? '(' : ')';
            }
            target = FlatWord{out};
            if (!target.valid()) throw std::logic_error("tl_rep_on_words: non-planar rewrite");
        }
        auto it = std::lower_bound(words.begin(), words.end(), target);
        if (it == words.end() || !(*it == target)) throw std::logic_error("tl_rep_on_words: target word missing");
        m(static_cast<int>(it - words.begin()), j) = m(static_cast<int>(it - words.begin()), j) + coeff;
    }
    return m;
}

std::vector<std::vector<int>> compatible_tuples(const FlatWord& w) {
    auto ps = w.pairs();
    const int n = w.length();
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    const size_t m = ps.size();
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        for (size_t i = 0; i < m; ++i) {
            bool on_open = ((mask >> i) & 1) == 0;
            cur[static_cast<size_t>(ps[i].first)] = on_open ? 1 : 0;
            cur[static_cast<size_t>(ps[i].second)] = on_open ? 0 : 1;
        }
        out.push_back(cur);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int tuple_u(const FlatWord& w, const std::vector<int>& t) {
    int u = 0;
    for (const auto& pr : w.pairs())
        if (t[static_cast<size_t>(pr.first)] == 1) ++u;
    return u;
}

int tuple_v(const FlatWord& w, const std::vector<int>& t) {
    int v = 0;
    for (const auto& pr : w.pairs())
        if (t[static_cast<size_t>(pr.second)] == 1) ++v;
    return v;
}

int f_exponent_times2(const FlatWord& w, const std::vector<int>& t) {
    const int n = w.length();
    const int m = w.pair_count();
    int lin = 0;
    for (int i = 0; i < n; ++i) lin += (i + 1) * t[static_cast<size_t>(i)];
    return 2 * (-m * (2 + n) + lin) + tuple_u(w, t) - tuple_v(w, t);
}

std::vector<Laurent> word_to_quantum(const FlatWord& w, const WeightSpace& space) {
    if (space.kind != Kind::FiniteV) throw std::invalid_argument("word_to_quantum: need the finite kind");
    std::vector<Laurent> out(static_cast<size_t>(space.dim()));
    for (const auto& t : compatible_tuples(w)) {
        int u = tuple_u(w, t), v = tuple_v(w, t);
        Laurent c = Laurent::s_power(u - v);
        if (v % 2 != 0) c = -c;
        int idx = space.index_of(t);
        if (idx < 0) throw std::logic_error("word_to_quantum: tuple outside the weight space");
        out[static_cast<size_t>(idx)] += c;
    }
    return out;
}

CinftyExpansion cinfty_coefficients(const FlatWord& w) {
    CinftyExpansion e;
    for (const auto& t : compatible_tuples(w)) {
        int u = tuple_u(w, t), v = tuple_v(w, t);
        Laurent c = Laurent::s_power(u - v);
        if (v % 2 != 0) c = -c;
        e.coeffs[t] = c;
    }
    Laurent qd = Laurent::q_power(1) - Laurent::q_power(-1);
    e.rescale = qd.pow(static_cast<unsigned>(w.pair_count()));
    return e;
}

}  // namespace tqft
