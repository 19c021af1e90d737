#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lorenz/errors.hpp"

namespace lorenz {

enum class Letter : std::uint8_t { L, R };

char to_char(Letter l);

enum class Ordering { Less, Equal, Greater };

/// A point of the symbolic space: either a finite word over {L,R} with an
/// implicit terminal 0, or a purely periodic infinite word given by its
/// repeating pattern.
class Word {
  public:
    enum class Kind { Finite, Periodic };

    Word() : kind_(Kind::Finite) {} // the word "0"

    static Word finite(std::vector<Letter> letters);
    static Word periodic(std::vector<Letter> pattern); // pattern nonempty

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    const std::vector<Letter>& letters() const { return letters_; }

    /// Number of letters before the terminal 0 (finite words only).
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); } // the word "0"

    bool operator==(const Word& other) const;
    bool operator<(const Word& other) const;

  private:
    Word(Kind kind, std::vector<Letter> letters)
        : kind_(kind), letters_(std::move(letters)) {}

    Kind kind_;
    std::vector<Letter> letters_;
};

/// Grammar: `[LR]*0` for finite words, `(pattern)^` for periodic ones.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

/// Total lexicographic order induced by L < 0 < R; finite words compare with
/// the terminal 0 as a symbol, periodic words via their infinite expansion.
Ordering compare_words(const Word& a, const Word& b);

/// Drops the first k symbols of a finite word, rotates a periodic pattern.
Word shift(const Word& w, std::size_t k = 1);

struct WordStats {
    std::size_t n_l = 0;
    std::size_t n_r = 0;
};
WordStats word_stats(const Word& z);

/// Length of the longest common suffix of the two finite patterns
/// (terminal 0 excluded), capped at the shorter length.
std::size_t common_suffix_len(const Word& a, const Word& b);

/// Ordered pair (x, y) of finite words; `verified` records that the
/// admissibility conditions have been checked.
struct KneadingPair {
    Word x;
    Word y;
    bool verified = false;

    bool operator==(const KneadingPair& other) const {
        return x == other.x && y == other.y;
    }
};

/// Parses `X,Y` or `(X,Y)`, whitespace tolerated.
KneadingPair parse_pair(std::string_view text);
std::string format_pair(const KneadingPair& p);

/// Shift-comparison characterization of kneading invariants of Lorenz maps:
/// x starts with L, y with R, and every proper shift of either word lies
/// strictly below x (after an L) or strictly above y (after an R).
bool is_admissible_pair(const Word& x, const Word& y);
bool is_admissible_pair(const KneadingPair& p);

/// Admissibility check, precondition verified.
KneadingPair verified_pair(Word x, Word y);
KneadingPair verified_pair(std::string_view text);

/// Substitutes the pattern of p.x for each L of u and the pattern of p.y for
/// each R; finite input yields a finite word, periodic yields periodic.
Word star_word(const KneadingPair& p, const Word& u);

/// Componentwise star_word; the result is admissible iff q is.
KneadingPair star_pair(const KneadingPair& p, const KneadingPair& q);

/// Consistency check: the finite-pair admissibility test agrees with the
/// non-strict test on the periodic expansions of the two patterns.
bool finite_periodic_equivalence(const KneadingPair& p);

inline constexpr std::size_t kDefaultEnumBound = 6;

/// All verified-admissible pairs with |x| <= max_x, |y| <= max_y, by
/// exhaustive candidate generation; deterministic lexicographic order.
std::vector<KneadingPair> enumerate_admissible_pairs(
    std::size_t max_x, std::size_t max_y,
    std::size_t bound = kDefaultEnumBound);

} // namespace lorenz
