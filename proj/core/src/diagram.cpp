#include "psyq/diagram.hpp"

#include <cctype>
#include <numeric>

namespace psyq {

BraidWord parse_braid(std::string_view text, int strands, DiagramMode mode) {
    if (strands < 1)
        throw std::domain_error("strand count must be at least 1");
    BraidWord w;
    w.strands = strands;
    w.mode = mode;

    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::string_view tok = text.substr(start, i - start);
        int col = int(start) + 1;

        char head = tok[0];
        if (head != 's' && head != 't')
            throw ParseError("unknown token '" + std::string(tok) + "'", 1, col);
        bool negative = tok.size() > 1 && tok.back() == '-';
        if (negative && head == 't')
            throw ParseError("singular letters cannot carry a sign: '" +
                                 std::string(tok) + "'",
                             1, col);
        std::string_view digits = tok.substr(1, tok.size() - 1 - (negative ? 1 : 0));
        if (digits.empty())
            throw ParseError("missing generator index in '" + std::string(tok) + "'",
                             1, col);
        int idx = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad generator index in '" + std::string(tok) + "'",
                                 1, col);
            idx = idx * 10 + (c - '0');
        }
        if (idx < 1 || idx >= strands)
            throw ParseError("generator index " + std::to_string(idx) +
                                 " out of range 1.." + std::to_string(strands - 1),
                             1, col);
        LetterKind kind = head == 't'   ? LetterKind::Singular
                          : negative    ? LetterKind::Negative
                                        : LetterKind::Positive;
        w.letters.push_back({kind, idx - 1});
    }
    return w;
}

std::string letter_text(const Letter& l) {
    std::string s = (l.kind == LetterKind::Singular ? "t" : "s") +
                    std::to_string(l.index + 1);
    if (l.kind == LetterKind::Negative) s += "-";
    return s;
}

std::string word_text(const BraidWord& w) {
    std::string s;
    for (const Letter& l : w.letters) {
        if (!s.empty()) s += " ";
        s += letter_text(l);
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

}  // namespace

Diagram Diagram::close(const BraidWord& word) {
    Diagram d;
    d.word_ = word;
    d.mode_ = word.mode;
    d.strands_ = word.strands;

    int k = word.strands;
    int next = 0;
    std::vector<int> bottom(k), cur(k);
    for (int pos = 0; pos < k; ++pos) bottom[pos] = cur[pos] = next++;

    for (const Letter& l : word.letters) {
        Crossing c;
        c.kind = l.kind;
        c.in_left = cur[l.index];
        c.in_right = cur[l.index + 1];
        c.out_left = next++;
        c.out_right = next++;
        cur[l.index] = c.out_left;
        cur[l.index + 1] = c.out_right;
        d.crossings_.push_back(c);
        if (l.kind == LetterKind::Positive) ++d.pos_count_;
        if (l.kind == LetterKind::Negative) ++d.neg_count_;
    }

    // Trace closure: top of position j is the bottom of position j.
    Dsu dsu(next);
    for (int pos = 0; pos < k; ++pos) {
        if (cur[pos] == bottom[pos]) ++d.free_circles_;
        dsu.unite(cur[pos], bottom[pos]);
    }

    // Relabel classes by first appearance.
    std::vector<int> label(next, -1);
    int classes = 0;
    for (int id = 0; id < next; ++id) {
        int root = dsu.find(id);
        if (label[root] < 0) label[root] = classes++;
        label[id] = label[root];
    }
    d.semiarc_count_ = classes;
    d.bottom_.resize(k);
    for (int pos = 0; pos < k; ++pos) d.bottom_[pos] = label[bottom[pos]];
    for (Crossing& c : d.crossings_) {
        c.in_left = label[c.in_left];
        c.in_right = label[c.in_right];
        c.out_left = label[c.out_left];
        c.out_right = label[c.out_right];
    }

    // Components = cycles of the underlying strand permutation; every
    // letter kind transposes the two positions it touches.
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    for (const Letter& l : word.letters) std::swap(perm[l.index], perm[l.index + 1]);
    std::vector<bool> seen(k, false);
    for (int pos = 0; pos < k; ++pos) {
        if (seen[pos]) continue;
        ++d.components_;
        for (int q = pos; !seen[q]; q = perm[q]) seen[q] = true;
    }
    return d;
}

std::pair<int, int> writhe_counts(const Diagram& d) {
    return {d.pos_count(), d.neg_count()};
}

}  // namespace psyq
