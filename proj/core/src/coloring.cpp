#include "psyq/coloring.hpp"

#include <cmath>

namespace psyq {

namespace {

void require_mode(const Diagram& d, const Psyquandle& x) {
    if (d.mode() == DiagramMode::Pseudo && !x.pi_adequate())
        throw PreconditionError(
            "pseudo-mode diagrams require a pI-adequate psyquandle");
}

// Propagates a bottom seed upward; returns false on a closure mismatch.
bool propagate(const Diagram& d, const Psyquandle& x,
               const std::vector<int>& seed, std::vector<int>& colors) {
    colors.assign(d.semiarc_count(), -1);
    for (int pos = 0; pos < d.strands(); ++pos)
        colors[d.bottom()[pos]] = seed[pos];

    auto put = [&](int arc, int value) {
        if (colors[arc] >= 0) return colors[arc] == value;
        colors[arc] = value;
        return true;
    };

    for (const Crossing& c : d.crossings()) {
        int in_l = colors[c.in_left], in_r = colors[c.in_right];
        int out_l, out_r;
        switch (c.kind) {
            case LetterKind::Positive:
                out_l = x.ot(in_r, in_l);
                out_r = x.ut(in_l, in_r);
                break;
            case LetterKind::Negative: {
                auto [w, z] = x.s_inv(in_l, in_r);
                out_l = w;
                out_r = z;
                break;
            }
            case LetterKind::Singular:
                out_l = x.ob(in_r, in_l);
                out_r = x.ub(in_l, in_r);
                break;
        }
        if (!put(c.out_left, out_l) || !put(c.out_right, out_r)) return false;
    }
    return true;
}

}  // namespace

HomsetResult enumerate_colorings(const Diagram& d, const Psyquandle& x) {
    require_mode(d, x);
    int n = x.size(), k = d.strands();
    HomsetResult result;
    std::vector<int> seed(k, 0), colors;
    for (;;) {
        if (propagate(d, x, seed, colors))
            result.colorings.push_back(Coloring{colors});
        int i = k - 1;
        while (i >= 0 && seed[i] == n - 1) seed[i--] = 0;
        if (i < 0) break;
        ++seed[i];
    }
    return result;
}

long counting_invariant(const Diagram& d, const Psyquandle& x) {
    return enumerate_colorings(d, x).count();
}

HomsetResult brute_force_colorings(const Diagram& d, const Psyquandle& x) {
    require_mode(d, x);
    int n = x.size(), arcs = d.semiarc_count();
    if (std::pow(double(n), double(arcs)) > 1e7)
        throw PreconditionError("brute-force coloring space exceeds 10^7");

    HomsetResult result;
    std::vector<int> colors(arcs, 0);
    for (;;) {
        bool ok = true;
        for (const Crossing& c : d.crossings()) {
            int in_l = colors[c.in_left], in_r = colors[c.in_right];
            int out_l = colors[c.out_left], out_r = colors[c.out_right];
            switch (c.kind) {
                case LetterKind::Positive:
                    ok = out_l == x.ot(in_r, in_l) && out_r == x.ut(in_l, in_r);
                    break;
                case LetterKind::Negative:
                    ok = in_l == x.ot(out_r, out_l) && in_r == x.ut(out_l, out_r);
                    break;
                case LetterKind::Singular:
                    ok = out_l == x.ob(in_r, in_l) && out_r == x.ub(in_l, in_r);
                    break;
            }
            if (!ok) break;
        }
        if (ok) result.colorings.push_back(Coloring{colors});
        int i = arcs - 1;
        while (i >= 0 && colors[i] == n - 1) colors[i--] = 0;
        if (i < 0) break;
        ++colors[i];
    }
    return result;
}

}  // namespace psyq
