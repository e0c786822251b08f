#include "psyq/statesum.hpp"

#include <numeric>
#include <stdexcept>

namespace psyq {

long InvariantMultiset::cardinality() const {
    long total = 0;
    for (const auto& [value, mult] : mult_) total += mult;
    return total;
}

std::string InvariantMultiset::render() const {
    if (mult_.empty()) return "0";
    std::string s;
    for (const auto& [value, mult] : mult_) {
        if (!s.empty()) s += " + ";
        if (mult != 1) s += std::to_string(mult);
        s += "u^" + std::to_string(value);
    }
    return s;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Port numbering within crossing c: 4c+0 = in_left (SW), 4c+1 = in_right
// (SE), 4c+2 = out_left (NW), 4c+3 = out_right (NE).
int circles(const Diagram& d, const KauffmanState& state) {
    int c = int(d.crossings().size());
    if (c == 0) return d.free_circles();
    Dsu dsu(4 * c);

    // Join the two port endpoints of every semiarc.
    std::vector<int> first_port(d.semiarc_count(), -1);
    auto touch = [&](int arc, int port) {
        if (first_port[arc] < 0)
            first_port[arc] = port;
        else
            dsu.unite(first_port[arc], port);
    };
    for (int i = 0; i < c; ++i) {
        const Crossing& cr = d.crossings()[i];
        touch(cr.in_left, 4 * i);
        touch(cr.in_right, 4 * i + 1);
        touch(cr.out_left, 4 * i + 2);
        touch(cr.out_right, 4 * i + 3);
    }
    // Smoothing pairings.
    for (int i = 0; i < c; ++i) {
        if (state[i]) {
            dsu.unite(4 * i, 4 * i + 1);      // SW-SE
            dsu.unite(4 * i + 2, 4 * i + 3);  // NW-NE
        } else {
            dsu.unite(4 * i, 4 * i + 2);      // SW-NW
            dsu.unite(4 * i + 1, 4 * i + 3);  // SE-NE
        }
    }
    int comps = 0;
    for (int p = 0; p < 4 * c; ++p)
        if (dsu.find(p) == p) ++comps;
    return comps + d.free_circles();
}

// Per-crossing coefficient table indices: (in_left, out_left), i.e. the
// color entering on the left and the color leaving on the left. At a
// negative crossing the pair is mirrored to (out_left, in_left). This is
// the unique convention (up to the transpose (out_right, in_right) form)
// that satisfies the kink identities and reproduces the published values.
std::vector<std::pair<int, int>> coefficient_indices(const Diagram& d,
                                                     const Coloring& col) {
    std::vector<std::pair<int, int>> idx;
    idx.reserve(d.crossings().size());
    for (const Crossing& c : d.crossings()) {
        if (c.kind == LetterKind::Negative)
            idx.push_back({col.colors[c.out_left], col.colors[c.in_left]});
        else
            idx.push_back({col.colors[c.in_left], col.colors[c.out_left]});
    }
    return idx;
}

long smoothing_coefficient(const PsyBracket& br, LetterKind kind, int x, int y,
                           bool disoriented) {
    const Ring& r = br.ring();
    switch (kind) {
        case LetterKind::Positive:
            return disoriented ? br.b(x, y) : br.a(x, y);
        case LetterKind::Negative:
            return r.inverse(disoriented ? br.b(x, y) : br.a(x, y));
        case LetterKind::Singular:
            return disoriented ? br.s(x, y) : br.p(x, y);
    }
    throw std::logic_error("unreachable");
}

const char* choice_label(LetterKind kind, bool disoriented) {
    switch (kind) {
        case LetterKind::Positive:
            return disoriented ? "B" : "A";
        case LetterKind::Negative:
            return disoriented ? "B^-1" : "A^-1";
        case LetterKind::Singular:
            return disoriented ? "S" : "P";
    }
    return "?";
}

KauffmanState state_from_mask(unsigned long mask, int c) {
    // Crossing 0 is the most significant bit, so ascending masks vary
    // the topmost crossing fastest.
    KauffmanState st(c);
    for (int i = 0; i < c; ++i) st[i] = (mask >> (c - 1 - i)) & 1;
    return st;
}

long sum_states(const Diagram& d, const std::vector<LetterKind>& kinds,
                const std::vector<std::pair<int, int>>& idx,
                const PsyBracket& br, std::vector<StateDetail>* details) {
    const Ring& r = br.ring();
    int c = int(kinds.size());
    long total = r.zero_raw();
    for (unsigned long mask = 0; mask < (1ul << c); ++mask) {
        KauffmanState st = state_from_mask(mask, c);
        long coeff = r.one_raw();
        for (int i = 0; i < c; ++i)
            coeff = r.mul(coeff, smoothing_coefficient(br, kinds[i], idx[i].first,
                                                       idx[i].second, st[i]));
        int k = circles(d, st);
        long contribution = r.mul(coeff, r.pow(br.delta_raw(), k));
        total = r.add(total, contribution);
        if (details) {
            std::string choices;
            for (int i = 0; i < c; ++i) {
                if (i) choices += " ";
                choices += choice_label(kinds[i], st[i]);
            }
            details->push_back({std::move(choices), k, contribution});
        }
    }
    return total;
}

std::vector<LetterKind> crossing_kinds(const Diagram& d) {
    std::vector<LetterKind> kinds;
    kinds.reserve(d.crossings().size());
    for (const Crossing& c : d.crossings()) kinds.push_back(c.kind);
    return kinds;
}

long writhe_correction(const Ring& r, long w, int p, int n) {
    return r.pow(w, long(n) - long(p));
}

}  // namespace

int state_circles(const Diagram& d, const KauffmanState& state) {
    if (state.size() != d.crossings().size())
        throw std::domain_error("state length must match the crossing count");
    return circles(d, state);
}

long state_coefficient(const Diagram& d, const Coloring& coloring,
                       const PsyBracket& bracket, const KauffmanState& state) {
    if (state.size() != d.crossings().size())
        throw std::domain_error("state length must match the crossing count");
    const Ring& r = bracket.ring();
    auto idx = coefficient_indices(d, coloring);
    long coeff = r.one_raw();
    for (std::size_t i = 0; i < idx.size(); ++i)
        coeff = r.mul(coeff,
                      smoothing_coefficient(bracket, d.crossings()[i].kind,
                                            idx[i].first, idx[i].second, state[i]));
    return r.mul(coeff, r.pow(bracket.delta_raw(), circles(d, state)));
}

long bracket_value(const Diagram& d, const Coloring& coloring,
                   const PsyBracket& bracket) {
    long total = sum_states(d, crossing_kinds(d), coefficient_indices(d, coloring),
                            bracket, nullptr);
    return bracket.ring().mul(total, writhe_correction(bracket.ring(),
                                                       bracket.w_raw(),
                                                       d.pos_count(), d.neg_count()));
}

InvariantMultiset bracket_multiset(const Diagram& d, const Psyquandle& x,
                                   const PsyBracket& bracket) {
    if (d.mode() == DiagramMode::Pseudo &&
        (!x.pi_adequate() || !bracket.pi_adequate()))
        throw PreconditionError(
            "pseudo-mode diagrams require a pI-adequate psyquandle and bracket");
    InvariantMultiset m;
    for (const Coloring& col : enumerate_colorings(d, x).colorings)
        m.add(bracket_value(d, col, bracket));
    return m;
}

long bracket_value_precolored(const Diagram& shadow,
                              const std::vector<LetterKind>& kinds,
                              const std::vector<std::pair<int, int>>& indices,
                              const PsyBracket& bracket) {
    std::size_t c = shadow.crossings().size();
    if (kinds.size() != c || indices.size() != c)
        throw std::domain_error(
            "kinds and index pairs must match the shadow's crossing count");
    int n = bracket.base().size();
    std::vector<std::pair<int, int>> idx;
    idx.reserve(c);
    for (auto [x, y] : indices) {
        if (x < 1 || x > n || y < 1 || y > n)
            throw std::domain_error("coefficient index out of range 1.." +
                                    std::to_string(n));
        idx.push_back({x - 1, y - 1});
    }
    int p = 0, neg = 0;
    for (LetterKind k : kinds) {
        if (k == LetterKind::Positive) ++p;
        if (k == LetterKind::Negative) ++neg;
    }
    long total = sum_states(shadow, kinds, idx, bracket, nullptr);
    return bracket.ring().mul(
        total, writhe_correction(bracket.ring(), bracket.w_raw(), p, neg));
}

std::vector<StateDetail> state_details(const Diagram& d, const Coloring& coloring,
                                       const PsyBracket& bracket) {
    std::vector<StateDetail> details;
    sum_states(d, crossing_kinds(d), coefficient_indices(d, coloring), bracket,
               &details);
    return details;
}

}  // namespace psyq
