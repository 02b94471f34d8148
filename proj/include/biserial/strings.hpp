#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biserial/presentation.hpp"

namespace biserial {

struct Letter {
    int arrow = 0;
    bool inv = false;

    Letter inverse() const { return {arrow, !inv}; }
    // arrows in constructor order, direct before inverse
    int key() const { return 2 * arrow + (inv ? 1 : 0); }
    bool operator==(const Letter& o) const { return arrow == o.arrow && inv == o.inv; }
    bool operator!=(const Letter& o) const { return !(*this == o); }
    bool operator<(const Letter& o) const { return key() < o.key(); }
};

// A word w_1 ... w_n in the usual left-to-right reading, s(w_i) = e(w_{i+1}).
// An empty word is the trivial string 1_u; its sign selects which pair of
// letters may be attached on each side (see side_letters).
struct StringWord {
    std::vector<Letter> letters;
    int vertex = -1;  // only meaningful when letters is empty
    int sign = 1;

    bool trivial() const { return letters.empty(); }
    int length() const { return int(letters.size()); }

    static StringWord trivial_at(int u, int sign = 1) { return {{}, u, sign}; }

    // the sign of a trivial word is bookkeeping and does not change the module
    bool operator==(const StringWord& o) const {
        return letters == o.letters && (!letters.empty() || vertex == o.vertex);
    }
    bool operator!=(const StringWord& o) const { return !(*this == o); }
};

// (length, letter keys) order; trivial words ordered by vertex
bool word_less(const StringWord& a, const StringWord& b);

int letter_source(const Presentation& p, Letter l);
int letter_target(const Presentation& p, Letter l);
int word_source(const Presentation& p, const StringWord& w);  // s(w) = s(w_n)
int word_target(const Presentation& p, const StringWord& w);  // e(w) = e(w_1)
// v(0..n): the vertex of each canonical basis vector
std::vector<int> vertex_sequence(const Presentation& p, const StringWord& w);

StringWord inverse(const StringWord& w);

// Grammar: whitespace separated tokens, an arrow name with an optional
// trailing '-' for the formal inverse, or 1_<vertex> alone.
StringWord parse_word(const Presentation& p, const std::string& text);
std::string format_word(const Presentation& p, const StringWord& w);

bool is_valid_string(const Presentation& p, const StringWord& w);
StringWord canonical_string(const Presentation& p, const StringWord& w);  // throws InvalidString
bool is_canonical(const Presentation& p, const StringWord& w);

// Canonical strings of length <= max_len sorted by (length, keys).
std::vector<StringWord> enumerate_strings(const Presentation& p, int max_len);
// Every valid word (both orientations) of exactly the given length.
std::vector<StringWord> all_words_of_length(const Presentation& p, int len);

struct Band {
    std::vector<Letter> letters;
    int length() const { return int(letters.size()); }
    bool operator==(const Band& o) const { return letters == o.letters; }
};

// Checks the cyclic conditions and primitivity; letters need not be canonical.
bool is_band(const Presentation& p, const std::vector<Letter>& letters);
Band canonical_band(const Presentation& p, const std::vector<Letter>& letters);  // throws NotABand
std::vector<Band> enumerate_bands(const Presentation& p, int max_len);
std::string format_band(const Presentation& p, const Band& b);
Band parse_band(const Presentation& p, const std::string& text);

// Letters that may be attached to the trivial string 1_u with the given sign.
struct SideLetters {
    std::vector<Letter> right;  // letters x with e(x) = u, giving 1_u x
    std::vector<Letter> left;   // letters x with s(x) = u, giving x 1_u
};
SideLetters side_letters(const Presentation& p, int u, int sign);

// w x and x w, if they are strings
bool can_append(const Presentation& p, const StringWord& w, Letter x);
bool can_prepend(const Presentation& p, Letter x, const StringWord& w);
StringWord append(const Presentation& p, const StringWord& w, Letter x);
StringWord prepend(const Presentation& p, Letter x, const StringWord& w);

enum class Side { Left, Right };
const char* side_name(Side s);

// "starts" refers to the right end of the word, "ends" to the left end.
bool starts_on_peak(const Presentation& p, const StringWord& s);
bool starts_in_deep(const Presentation& p, const StringWord& s);
bool ends_on_peak(const Presentation& p, const StringWord& s);
bool ends_in_deep(const Presentation& p, const StringWord& s);

// S_h = S b M^-1 (right) and _hS = M b^-1 S (left); throws PeakDeepViolation.
StringWord add_hook(const Presentation& p, const StringWord& s, Side side);
// S_c = S g^-1 N (right) and _cS = N^-1 g S (left); throws PeakDeepViolation.
StringWord add_cohook(const Presentation& p, const StringWord& s, Side side);
// Inverse operations: S = T b M^-1 gives T. Empty when S has no such piece.
std::optional<StringWord> remove_hook(const Presentation& p, const StringWord& s, Side side);
std::optional<StringWord> remove_cohook(const Presentation& p, const StringWord& s, Side side);

// Arrow involution tau with tau(a): t(a) -> s(a); throws TauUndefined naming
// the first failing condition.
std::vector<int> tau_involution(const Presentation& p);
StringWord tau_dual(const Presentation& p, const StringWord& s);

}  // namespace biserial
