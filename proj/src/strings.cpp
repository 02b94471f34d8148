#include "biserial/strings.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "biserial/errors.hpp"

namespace biserial {

namespace {

std::vector<int> keys_of(const std::vector<Letter>& ls) {
    std::vector<int> k(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i) k[i] = ls[i].key();
    return k;
}

std::vector<Letter> inverted(const std::vector<Letter>& ls) {
    std::vector<Letter> r(ls.rbegin(), ls.rend());
    for (auto& l : r) l = l.inverse();
    return r;
}

// Path (application order) carried by the run of equal direction letters
// ls[i..j]. A direct run reads right to left, an inverse run left to right.
Path run_path(const std::vector<Letter>& ls, std::size_t i, std::size_t j) {
    Path p;
    if (!ls[i].inv)
        for (std::size_t k = j + 1; k-- > i;) p.push_back(ls[k].arrow);
    else
        for (std::size_t k = i; k <= j; ++k) p.push_back(ls[k].arrow);
    return p;
}

bool runs_ok(const Presentation& p, const std::vector<Letter>& ls) {
    std::size_t i = 0;
    while (i < ls.size()) {
        std::size_t j = i;
        while (j + 1 < ls.size() && ls[j + 1].inv == ls[i].inv) ++j;
        if (p.contains_forbidden(run_path(ls, i, j))) return false;
        i = j + 1;
    }
    return true;
}

// the run of ls that contains its last letter
bool tail_run_ok(const Presentation& p, const std::vector<Letter>& ls) {
    std::size_t j = ls.size() - 1, i = j;
    while (i > 0 && ls[i - 1].inv == ls[j].inv) --i;
    return !p.contains_forbidden(run_path(ls, i, j));
}

bool head_run_ok(const Presentation& p, const std::vector<Letter>& ls) {
    std::size_t j = 0;
    while (j + 1 < ls.size() && ls[j + 1].inv == ls[0].inv) ++j;
    return !p.contains_forbidden(run_path(ls, 0, j));
}

bool contains(const std::vector<Letter>& v, Letter x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Letters attached to a trivial string keep it on the side they came from.
int trivial_sign_right(const Presentation& p, int v, Letter removed) {
    return contains(side_letters(p, v, 1).right, removed) ? 1 : -1;
}
int trivial_sign_left(const Presentation& p, int v, Letter removed) {
    return contains(side_letters(p, v, 1).left, removed) ? 1 : -1;
}

}  // namespace

bool word_less(const StringWord& a, const StringWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.trivial()) return a.vertex < b.vertex;
    return keys_of(a.letters) < keys_of(b.letters);
}

int letter_source(const Presentation& p, Letter l) {
    const Arrow& a = p.arrow(l.arrow);
    return l.inv ? a.target : a.source;
}

int letter_target(const Presentation& p, Letter l) {
    const Arrow& a = p.arrow(l.arrow);
    return l.inv ? a.source : a.target;
}

int word_source(const Presentation& p, const StringWord& w) {
    return w.trivial() ? w.vertex : letter_source(p, w.letters.back());
}

int word_target(const Presentation& p, const StringWord& w) {
    return w.trivial() ? w.vertex : letter_target(p, w.letters.front());
}

std::vector<int> vertex_sequence(const Presentation& p, const StringWord& w) {
    if (w.trivial()) return {w.vertex};
    std::vector<int> v;
    for (const Letter& l : w.letters) v.push_back(letter_target(p, l));
    v.push_back(letter_source(p, w.letters.back()));
    return v;
}

StringWord inverse(const StringWord& w) {
    if (w.trivial()) return StringWord::trivial_at(w.vertex, -w.sign);
    return {inverted(w.letters), -1, 1};
}

StringWord parse_word(const Presentation& p, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    if (toks.empty()) throw InvalidString("empty word");
    if (toks.size() == 1 && toks[0].rfind("1_", 0) == 0) {
        int u = -1;
        try {
            std::size_t pos = 0;
            u = std::stoi(toks[0].substr(2), &pos);
            if (pos != toks[0].size() - 2) u = -1;
        } catch (const std::exception&) {
            u = -1;
        }
        if (u < 0 || u >= p.num_vertices()) throw InvalidString("no vertex in '" + toks[0] + "'");
        return StringWord::trivial_at(u);
    }
    StringWord w;
    for (const std::string& tok : toks) {
        if (tok.rfind("1_", 0) == 0) throw InvalidString("trivial token '" + tok + "' inside a word");
        bool inv = !tok.empty() && tok.back() == '-';
        std::string name = inv ? tok.substr(0, tok.size() - 1) : tok;
        w.letters.push_back({p.arrow_index(name), inv});
    }
    return w;
}

std::string format_word(const Presentation& p, const StringWord& w) {
    if (w.trivial()) return "1_" + std::to_string(w.vertex);
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += ' ';
        s += p.arrow(w.letters[i].arrow).name;
        if (w.letters[i].inv) s += '-';
    }
    return s;
}

bool is_valid_string(const Presentation& p, const StringWord& w) {
    if (w.trivial()) return w.vertex >= 0 && w.vertex < p.num_vertices();
    for (const Letter& l : w.letters)
        if (l.arrow < 0 || l.arrow >= p.num_arrows()) throw UnknownArrow("arrow index " + std::to_string(l.arrow));
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
        if (letter_source(p, w.letters[i]) != letter_target(p, w.letters[i + 1])) return false;
        if (w.letters[i] == w.letters[i + 1].inverse()) return false;
    }
    return runs_ok(p, w.letters);
}

bool is_canonical(const Presentation& p, const StringWord& w) {
    (void)p;
    if (w.trivial()) return true;
    return keys_of(w.letters) <= keys_of(inverted(w.letters));
}

StringWord canonical_string(const Presentation& p, const StringWord& w) {
    if (!is_valid_string(p, w)) throw InvalidString("'" + format_word(p, w) + "' is not a string");
    if (w.trivial()) return StringWord::trivial_at(w.vertex);
    return is_canonical(p, w) ? StringWord{w.letters, -1, 1} : inverse(w);
}

SideLetters side_letters(const Presentation& p, int u, int sign) {
    std::vector<int> ins = p.arrows_into(u), outs = p.arrows_out_of(u);
    std::optional<int> right_in, left_in, right_out, left_out;
    if (!ins.empty()) {
        right_in = ins[0];
        if (ins.size() > 1) left_in = ins[1];
        left_out = p.continuation(*right_in);
        if (!left_out && left_in) right_out = p.continuation(*left_in);
    }
    for (int o : outs) {
        if (o == left_out || o == right_out) continue;
        if (!right_out) right_out = o;
        else if (!left_out) left_out = o;
    }
    SideLetters s;
    auto put = [](std::vector<Letter>& v, std::optional<int> a, bool inv) {
        if (a) v.push_back({*a, inv});
    };
    if (sign > 0) {
        put(s.right, right_in, false);
        put(s.right, right_out, true);
        put(s.left, left_out, false);
        put(s.left, left_in, true);
    } else {
        put(s.right, left_in, false);
        put(s.right, left_out, true);
        put(s.left, right_out, false);
        put(s.left, right_in, true);
    }
    return s;
}

bool can_append(const Presentation& p, const StringWord& w, Letter x) {
    if (w.trivial()) {
        if (letter_target(p, x) != w.vertex) return false;
        return contains(side_letters(p, w.vertex, w.sign).right, x);
    }
    const Letter& last = w.letters.back();
    if (letter_source(p, last) != letter_target(p, x) || x == last.inverse()) return false;
    std::vector<Letter> ls = w.letters;
    ls.push_back(x);
    return tail_run_ok(p, ls);
}

bool can_prepend(const Presentation& p, Letter x, const StringWord& w) {
    if (w.trivial()) {
        if (letter_source(p, x) != w.vertex) return false;
        return contains(side_letters(p, w.vertex, w.sign).left, x);
    }
    const Letter& first = w.letters.front();
    if (letter_source(p, x) != letter_target(p, first) || x == first.inverse()) return false;
    std::vector<Letter> ls;
    ls.reserve(w.letters.size() + 1);
    ls.push_back(x);
    ls.insert(ls.end(), w.letters.begin(), w.letters.end());
    return head_run_ok(p, ls);
}

StringWord append(const Presentation& p, const StringWord& w, Letter x) {
    if (!can_append(p, w, x)) throw InvalidString("cannot append to '" + format_word(p, w) + "'");
    StringWord r{w.letters, -1, 1};
    r.letters.push_back(x);
    return r;
}

StringWord prepend(const Presentation& p, Letter x, const StringWord& w) {
    if (!can_prepend(p, x, w)) throw InvalidString("cannot prepend to '" + format_word(p, w) + "'");
    StringWord r{{x}, -1, 1};
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    return r;
}

std::vector<StringWord> all_words_of_length(const Presentation& p, int len) {
    if (len < 0) return {};
    if (len == 0) {
        std::vector<StringWord> r;
        for (int u = 0; u < p.num_vertices(); ++u) r.push_back(StringWord::trivial_at(u));
        return r;
    }
    std::vector<StringWord> layer;
    for (int a = 0; a < p.num_arrows(); ++a) {
        layer.push_back({{{a, false}}, -1, 1});
        layer.push_back({{{a, true}}, -1, 1});
    }
    for (int n = 1; n < len; ++n) {
        std::vector<StringWord> next;
        for (const StringWord& w : layer)
            for (int a = 0; a < p.num_arrows(); ++a)
                for (bool inv : {false, true}) {
                    Letter x{a, inv};
                    if (!can_append(p, w, x)) continue;
                    StringWord r = w;
                    r.letters.push_back(x);
                    next.push_back(std::move(r));
                }
        layer = std::move(next);
    }
    return layer;
}

std::vector<StringWord> enumerate_strings(const Presentation& p, int max_len) {
    if (max_len < 0) throw InvalidParameter("max_len must be >= 0");
    std::vector<StringWord> out = all_words_of_length(p, 0);
    std::vector<StringWord> layer;
    for (int n = 1; n <= max_len; ++n) {
        if (n == 1) {
            layer = all_words_of_length(p, 1);
        } else {
            std::vector<StringWord> next;
            for (const StringWord& w : layer)
                for (int a = 0; a < p.num_arrows(); ++a)
                    for (bool inv : {false, true}) {
                        Letter x{a, inv};
                        if (!can_append(p, w, x)) continue;
                        StringWord r = w;
                        r.letters.push_back(x);
                        next.push_back(std::move(r));
                    }
            layer = std::move(next);
        }
        std::vector<StringWord> canon;
        for (const StringWord& w : layer)
            if (is_canonical(p, w)) canon.push_back(w);
        std::sort(canon.begin(), canon.end(), word_less);
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        out.insert(out.end(), canon.begin(), canon.end());
        if (layer.empty()) break;
    }
    return out;
}

bool is_band(const Presentation& p, const std::vector<Letter>& ls) {
    const std::size_t n = ls.size();
    if (n == 0) return false;
    bool has_direct = false, has_inverse = false;
    for (const Letter& l : ls) (l.inv ? has_inverse : has_direct) = true;
    if (!has_direct || !has_inverse) return false;
    if (letter_source(p, ls.back()) != letter_target(p, ls.front())) return false;
    if (ls.back() == ls.front().inverse()) return false;
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = ls[i] == ls[i - d];
        if (periodic) return false;
    }
    // Every run is shorter than n, so three copies contain each cyclic run whole.
    StringWord cube;
    for (int k = 0; k < 3; ++k) cube.letters.insert(cube.letters.end(), ls.begin(), ls.end());
    return is_valid_string(p, cube);
}

Band canonical_band(const Presentation& p, const std::vector<Letter>& ls) {
    if (!is_band(p, ls)) throw NotABand("'" + format_word(p, {ls, -1, 1}) + "' is not a band");
    std::vector<Letter> best = ls;
    auto consider = [&](const std::vector<Letter>& w) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::vector<Letter> r(w.begin() + i, w.end());
            r.insert(r.end(), w.begin(), w.begin() + i);
            if (keys_of(r) < keys_of(best)) best = r;
        }
    };
    consider(ls);
    consider(inverted(ls));
    return {best};
}

std::vector<Band> enumerate_bands(const Presentation& p, int max_len) {
    if (max_len < 1) throw InvalidParameter("max_len must be >= 1");
    std::vector<Band> out;
    for (int n = 1; n <= max_len; ++n) {
        std::vector<Band> found;
        for (const StringWord& w : all_words_of_length(p, n)) {
            if (!is_band(p, w.letters)) continue;
            Band b = canonical_band(p, w.letters);
            if (b.letters == w.letters) found.push_back(b);
        }
        std::sort(found.begin(), found.end(),
                  [](const Band& a, const Band& b) { return keys_of(a.letters) < keys_of(b.letters); });
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

std::string format_band(const Presentation& p, const Band& b) { return format_word(p, {b.letters, -1, 1}); }

Band parse_band(const Presentation& p, const std::string& text) {
    StringWord w = parse_word(p, text);
    if (w.trivial() || !is_band(p, w.letters)) throw NotABand("'" + text + "' is not a band");
    return {w.letters};
}

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

std::optional<Letter> find_append(const Presentation& p, const StringWord& s, bool inv) {
    for (int a = 0; a < p.num_arrows(); ++a)
        if (can_append(p, s, {a, inv})) return Letter{a, inv};
    return std::nullopt;
}

std::optional<Letter> find_prepend(const Presentation& p, const StringWord& s, bool inv) {
    for (int a = 0; a < p.num_arrows(); ++a)
        if (can_prepend(p, {a, inv}, s)) return Letter{a, inv};
    return std::nullopt;
}

// attach x on the given side, then as many letters of direction `inv` as possible
StringWord attach_greedy(const Presentation& p, StringWord s, Side side, Letter x, bool inv) {
    s = side == Side::Right ? append(p, s, x) : prepend(p, x, s);
    for (int guard = 0; guard < 100000; ++guard) {
        auto y = side == Side::Right ? find_append(p, s, inv) : find_prepend(p, s, inv);
        if (!y) return s;
        s = side == Side::Right ? append(p, s, *y) : prepend(p, *y, s);
    }
    throw InvalidParameter("unbounded directed string; the presentation is not finite dimensional");
}

}  // namespace

bool starts_on_peak(const Presentation& p, const StringWord& s) { return !find_append(p, s, false); }
bool starts_in_deep(const Presentation& p, const StringWord& s) { return !find_append(p, s, true); }
bool ends_on_peak(const Presentation& p, const StringWord& s) { return !find_prepend(p, s, true); }
bool ends_in_deep(const Presentation& p, const StringWord& s) { return !find_prepend(p, s, false); }

StringWord add_hook(const Presentation& p, const StringWord& s, Side side) {
    if (side == Side::Right) {
        auto b = find_append(p, s, false);
        if (!b) throw PeakDeepViolation("'" + format_word(p, s) + "' starts on a peak");
        return attach_greedy(p, s, side, *b, true);
    }
    auto b = find_prepend(p, s, true);
    if (!b) throw PeakDeepViolation("'" + format_word(p, s) + "' ends on a peak");
    return attach_greedy(p, s, side, *b, false);
}

StringWord add_cohook(const Presentation& p, const StringWord& s, Side side) {
    if (side == Side::Right) {
        auto g = find_append(p, s, true);
        if (!g) throw PeakDeepViolation("'" + format_word(p, s) + "' starts in a deep");
        return attach_greedy(p, s, side, *g, false);
    }
    auto g = find_prepend(p, s, false);
    if (!g) throw PeakDeepViolation("'" + format_word(p, s) + "' ends in a deep");
    return attach_greedy(p, s, side, *g, true);
}

namespace {

// Drop the last letter of direction `inv` and everything after it (right), or
// the first such letter and everything before it (left).
std::optional<StringWord> cut(const Presentation& p, const StringWord& s, Side side, bool inv) {
    const auto& ls = s.letters;
    if (side == Side::Right) {
        for (std::size_t j = ls.size(); j-- > 0;) {
            if (ls[j].inv != inv) continue;
            if (j == 0) {
                int v = letter_target(p, ls[0]);
                return StringWord::trivial_at(v, trivial_sign_right(p, v, ls[0]));
            }
            return StringWord{std::vector<Letter>(ls.begin(), ls.begin() + j), -1, 1};
        }
    } else {
        for (std::size_t j = 0; j < ls.size(); ++j) {
            if (ls[j].inv != inv) continue;
            if (j + 1 == ls.size()) {
                int v = letter_source(p, ls[j]);
                return StringWord::trivial_at(v, trivial_sign_left(p, v, ls[j]));
            }
            return StringWord{std::vector<Letter>(ls.begin() + j + 1, ls.end()), -1, 1};
        }
    }
    return std::nullopt;
}

}  // namespace

// S = T b M^-1 (right) or S = M b^-1 T (left)
std::optional<StringWord> remove_hook(const Presentation& p, const StringWord& s, Side side) {
    return cut(p, s, side, side == Side::Right ? false : true);
}

// S = T g^-1 N (right) or S = N^-1 g T (left)
std::optional<StringWord> remove_cohook(const Presentation& p, const StringWord& s, Side side) {
    return cut(p, s, side, side == Side::Right ? true : false);
}

std::vector<int> tau_involution(const Presentation& p) {
    const int na = p.num_arrows();
    for (int a = 0; a < na; ++a)
        for (int b = a + 1; b < na; ++b)
            if (p.arrow(a).source == p.arrow(b).source && p.arrow(a).target == p.arrow(b).target)
                throw TauUndefined('a', "arrows " + p.arrow(a).name + " and " + p.arrow(b).name + " are parallel");
    std::vector<int> tau(na, -1);
    for (int a = 0; a < na; ++a) {
        for (int b = 0; b < na; ++b)
            if (p.arrow(b).source == p.arrow(a).target && p.arrow(b).target == p.arrow(a).source) tau[a] = b;
        if (tau[a] < 0) throw TauUndefined('b', "no arrow reverses " + p.arrow(a).name);
    }
    auto reflect = [&](const Path& q) {
        Path r;
        for (auto it = q.rbegin(); it != q.rend(); ++it) r.push_back(tau[*it]);
        return r;
    };
    for (int u = 0; u < p.num_vertices(); ++u) {
        const ProjectiveShape& sh = p.projective_shape(u);
        if (sh.uniserial()) {
            if (reflect(sh.arms[0]) != sh.arms[0])
                throw TauUndefined('c', "uniserial projective at " + std::to_string(u) + " is not fixed");
        }
    }
    for (const auto& [a, b] : p.socle_pairs()) {
        Path ra = reflect(a), rb = reflect(b);
        bool ok = (ra == a && rb == b) || (ra == b && rb == a);
        if (!ok)
            throw TauUndefined('c', "socle relation [" + p.path_text(a) + "] = [" + p.path_text(b) +
                                        "] is not preserved");
    }
    return tau;
}

StringWord tau_dual(const Presentation& p, const StringWord& s) {
    std::vector<int> tau = tau_involution(p);
    if (s.trivial()) return s;
    StringWord r;
    for (const Letter& l : s.letters) r.letters.push_back({tau[l.arrow], !l.inv});
    return r;
}

}  // namespace biserial
