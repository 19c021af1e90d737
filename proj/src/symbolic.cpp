#include "lorenz/symbolic.hpp"

#include <algorithm>
#include <cstddef>

namespace lorenz {

char to_char(Letter l) { return l == Letter::L ? 'L' : 'R'; }

Word Word::finite(std::vector<Letter> letters) {
    return Word(Kind::Finite, std::move(letters));
}

Word Word::periodic(std::vector<Letter> pattern) {
    if (pattern.empty())
        throw MalformedWord("periodic pattern must be nonempty");
    return Word(Kind::Periodic, std::move(pattern));
}

bool Word::operator==(const Word& other) const {
    return compare_words(*this, other) == Ordering::Equal;
}

bool Word::operator<(const Word& other) const {
    return compare_words(*this, other) == Ordering::Less;
}

Word parse_word(std::string_view text) {
    if (text.empty())
        throw MalformedWord("empty word");
    std::vector<Letter> letters;
    if (text.front() == '(') {
        if (text.size() < 3 || text.substr(text.size() - 2) != ")^")
            throw MalformedWord("periodic word must end with \")^\": " +
                                std::string(text));
        for (char c : text.substr(1, text.size() - 3)) {
            if (c == 'L')
                letters.push_back(Letter::L);
            else if (c == 'R')
                letters.push_back(Letter::R);
            else
                throw MalformedWord(std::string("illegal character '") + c +
                                    "' in " + std::string(text));
        }
        return Word::periodic(std::move(letters));
    }
    if (text.back() != '0')
        throw MalformedWord("finite word must end with 0: " +
                            std::string(text));
    for (char c : text.substr(0, text.size() - 1)) {
        if (c == 'L')
            letters.push_back(Letter::L);
        else if (c == 'R')
            letters.push_back(Letter::R);
        else if (c == '0')
            throw MalformedWord("interior 0 in " + std::string(text));
        else
            throw MalformedWord(std::string("illegal character '") + c +
                                "' in " + std::string(text));
    }
    return Word::finite(std::move(letters));
}

std::string format_word(const Word& w) {
    std::string out;
    if (w.is_finite()) {
        for (Letter l : w.letters()) out.push_back(to_char(l));
        out.push_back('0');
    } else {
        out.push_back('(');
        for (Letter l : w.letters()) out.push_back(to_char(l));
        out += ")^";
    }
    return out;
}

namespace {

// Symbol rank in the order L < 0 < R; finite words expose the terminal 0.
// Returns -1 for L, 0 for 0, 1 for R.
int symbol_rank(const Word& w, std::size_t i) {
    if (w.is_finite()) {
        if (i < w.length()) return w.letters()[i] == Letter::L ? -1 : 1;
        return 0;
    }
    return w.letters()[i % w.length()] == Letter::L ? -1 : 1;
}

} // namespace

Ordering compare_words(const Word& a, const Word& b) {
    std::size_t limit;
    if (a.is_finite() && b.is_finite()) {
        limit = std::max(a.length(), b.length()) + 1;
    } else if (a.is_finite() || b.is_finite()) {
        // The finite word's terminal 0 forces a decision by that index.
        limit = (a.is_finite() ? a.length() : b.length()) + 1;
    } else {
        // Fine-Wilf: two periodic words agreeing on |p|+|q| symbols agree
        // everywhere.
        limit = a.length() + b.length();
    }
    for (std::size_t i = 0; i < limit; ++i) {
        int ra = symbol_rank(a, i);
        int rb = symbol_rank(b, i);
        if (ra != rb) return ra < rb ? Ordering::Less : Ordering::Greater;
        if (ra == 0) return Ordering::Equal; // both finite words ended
    }
    return Ordering::Equal;
}

Word shift(const Word& w, std::size_t k) {
    if (w.is_finite()) {
        if (w.empty() && k > 0)
            throw ShiftPastEnd("cannot shift the word 0");
        if (k > w.length())
            throw ShiftPastEnd("shift by " + std::to_string(k) +
                               " exceeds length " +
                               std::to_string(w.length()));
        return Word::finite(std::vector<Letter>(w.letters().begin() + k,
                                                w.letters().end()));
    }
    std::vector<Letter> rotated(w.letters());
    std::rotate(rotated.begin(), rotated.begin() + (k % rotated.size()),
                rotated.end());
    return Word::periodic(std::move(rotated));
}

WordStats word_stats(const Word& z) {
    WordStats s;
    for (Letter l : z.letters()) (l == Letter::L ? s.n_l : s.n_r)++;
    return s;
}

std::size_t common_suffix_len(const Word& a, const Word& b) {
    std::size_t cap = std::min(a.length(), b.length());
    std::size_t k = 0;
    while (k < cap &&
           a.letters()[a.length() - 1 - k] == b.letters()[b.length() - 1 - k])
        ++k;
    return k;
}

KneadingPair parse_pair(std::string_view text) {
    std::string stripped;
    for (char c : text)
        if (c != ' ' && c != '\t') stripped.push_back(c);
    std::string_view s(stripped);
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    auto comma = s.find(',');
    if (comma == std::string_view::npos)
        throw MalformedWord("pair must be \"X,Y\": " + std::string(text));
    Word x = parse_word(s.substr(0, comma));
    Word y = parse_word(s.substr(comma + 1));
    return KneadingPair{std::move(x), std::move(y), false};
}

std::string format_pair(const KneadingPair& p) {
    return "(" + format_word(p.x) + "," + format_word(p.y) + ")";
}

bool is_admissible_pair(const Word& x, const Word& y) {
    if (!x.is_finite() || !y.is_finite())
        throw MalformedWord("admissibility is defined for finite words");
    if (x.empty() || x.letters().front() != Letter::L) return false;
    if (y.empty() || y.letters().front() != Letter::R) return false;
    // Proper shifts only; the i = 0 self-comparisons hold by construction.
    for (const Word* zp : {&x, &y}) {
        const Word& z = *zp;
        for (std::size_t i = 1; i < z.length(); ++i) {
            Word s = shift(z, i);
            if (z.letters()[i] == Letter::L) {
                if (compare_words(s, x) != Ordering::Less) return false;
            } else {
                if (compare_words(s, y) != Ordering::Greater) return false;
            }
        }
    }
    return true;
}

bool is_admissible_pair(const KneadingPair& p) {
    return is_admissible_pair(p.x, p.y);
}

KneadingPair verified_pair(Word x, Word y) {
    if (!is_admissible_pair(x, y))
        throw MalformedWord("pair (" + format_word(x) + "," + format_word(y) +
                            ") is not admissible");
    return KneadingPair{std::move(x), std::move(y), true};
}

KneadingPair verified_pair(std::string_view text) {
    KneadingPair p = parse_pair(text);
    return verified_pair(std::move(p.x), std::move(p.y));
}

Word star_word(const KneadingPair& p, const Word& u) {
    std::vector<Letter> out;
    for (Letter l : u.letters()) {
        const auto& pat =
            (l == Letter::L ? p.x.letters() : p.y.letters());
        out.insert(out.end(), pat.begin(), pat.end());
    }
    return u.is_finite() ? Word::finite(std::move(out))
                         : Word::periodic(std::move(out));
}

KneadingPair star_pair(const KneadingPair& p, const KneadingPair& q) {
    KneadingPair r{star_word(p, q.x), star_word(p, q.y), false};
    r.verified = p.verified && is_admissible_pair(q);
    return r;
}

namespace {

// A pattern is primitive when no proper rotation reproduces the same
// infinite expansion; only then does the expansion determine the pattern.
bool is_primitive(const Word& zp) {
    for (std::size_t i = 1; i < zp.length(); ++i)
        if (compare_words(shift(zp, i), zp) == Ordering::Equal) return false;
    return true;
}

// The Proposition's conditions on the periodic expansions, non-strict.
// Primitivity is required so that the expansion faithfully represents the
// finite word it identifies with: a non-primitive pattern collapses to a
// shorter period, and the corresponding finite pair is never admissible.
bool is_admissible_periodic(const Word& xp, const Word& yp) {
    if (xp.letters().front() != Letter::L) return false;
    if (yp.letters().front() != Letter::R) return false;
    if (!is_primitive(xp) || !is_primitive(yp)) return false;
    for (const Word* zp : {&xp, &yp}) {
        const Word& z = *zp;
        for (std::size_t i = 0; i < z.length(); ++i) {
            Word s = shift(z, i);
            if (z.letters()[i] == Letter::L) {
                if (compare_words(s, xp) == Ordering::Greater) return false;
            } else {
                if (compare_words(s, yp) == Ordering::Less) return false;
            }
        }
    }
    return true;
}

} // namespace

bool finite_periodic_equivalence(const KneadingPair& p) {
    bool finite_ok = is_admissible_pair(p.x, p.y);
    bool periodic_ok =
        !p.x.empty() && !p.y.empty() &&
        is_admissible_periodic(Word::periodic(p.x.letters()),
                               Word::periodic(p.y.letters()));
    return finite_ok == periodic_ok;
}

namespace {

void candidate_words(std::size_t max_len, Letter first,
                     std::vector<Word>& out) {
    // All words of length 1..max_len starting with `first`, in length-major
    // lexicographic order (L before R).
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Letter> w(len, Letter::L);
        w[0] = first;
        while (true) {
            out.push_back(Word::finite(w));
            std::size_t i = len;
            while (i > 1 && w[i - 1] == Letter::R) w[--i] = Letter::L;
            if (i == 1) break;
            w[i - 1] = Letter::R;
        }
    }
}

} // namespace

std::vector<KneadingPair> enumerate_admissible_pairs(std::size_t max_x,
                                                     std::size_t max_y,
                                                     std::size_t bound) {
    if (max_x < 1 || max_y < 1 || max_x > bound || max_y > bound)
        throw BoundTooLarge("enumeration bounds must lie in [1, " +
                            std::to_string(bound) + "]");
    std::vector<Word> xs, ys;
    candidate_words(max_x, Letter::L, xs);
    candidate_words(max_y, Letter::R, ys);
    std::vector<KneadingPair> out;
    for (const Word& x : xs)
        for (const Word& y : ys)
            if (is_admissible_pair(x, y))
                out.push_back(KneadingPair{x, y, true});
    return out;
}

} // namespace lorenz
