#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "psyq/report.hpp"

namespace psyq {

enum class LetterKind { Positive, Negative, Singular };
enum class DiagramMode { Singular, Pseudo };

/// One braid-word letter acting on strand positions index, index+1 (0-based).
struct Letter {
    LetterKind kind;
    int index;

    bool operator==(const Letter&) const = default;
};

/// A singular/pseudo braid word. In pseudo mode the Singular letters are
/// precrossings; the combinatorics are identical.
struct BraidWord {
    int strands = 1;
    DiagramMode mode = DiagramMode::Singular;
    std::vector<Letter> letters;
};

/// Parses tokens `s<i>` (positive), `s<i>-` (negative), `t<i>` (singular or
/// precrossing), whitespace-separated, with 1 <= i < strands.
/// Throws ParseError with the offending column.
BraidWord parse_braid(std::string_view text, int strands, DiagramMode mode);

std::string letter_text(const Letter& l);
std::string word_text(const BraidWord& w);

/// A crossing of the closed diagram. Ports hold semiarc ids in the
/// both-strands-up normal form: in_left = SW, in_right = SE,
/// out_left = NW, out_right = NE. The strand entering in_left exits at
/// out_right and vice versa.
struct Crossing {
    LetterKind kind;
    int in_left, in_right, out_left, out_right;
};

/// Trace closure of a braid word: the semiarc graph, crossings with typed
/// ports, writhe counts and the component count.
class Diagram {
public:
    static Diagram close(const BraidWord& word);

    DiagramMode mode() const { return mode_; }
    int strands() const { return strands_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    int semiarc_count() const { return semiarc_count_; }
    /// Closure circles of strands that meet no crossing.
    int free_circles() const { return free_circles_; }
    int components() const { return components_; }
    int pos_count() const { return pos_count_; }
    int neg_count() const { return neg_count_; }
    /// Semiarc id at the bottom of each strand position.
    const std::vector<int>& bottom() const { return bottom_; }
    const BraidWord& word() const { return word_; }

private:
    BraidWord word_;
    DiagramMode mode_ = DiagramMode::Singular;
    int strands_ = 1;
    std::vector<Crossing> crossings_;
    std::vector<int> bottom_;
    int semiarc_count_ = 0;
    int free_circles_ = 0;
    int components_ = 0;
    int pos_count_ = 0;
    int neg_count_ = 0;
};

/// Positive and negative classical crossing counts (p, n); singular
/// crossings contribute neither.
std::pair<int, int> writhe_counts(const Diagram& d);

}  // namespace psyq
