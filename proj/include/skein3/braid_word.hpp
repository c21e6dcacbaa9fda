#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "skein3/errors.hpp"

namespace skein3 {

/// One syllable sigma_i^e with i in [1, n-1] and e != 0.
struct Letter {
    int index = 1;
    int exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in the braid group B_n, stored flat as signed generator powers.
/// Zero-exponent letters are dropped on construction; adjacent equal-index
/// letters are not merged automatically (free_reduce does that).
class BraidWord {
public:
    BraidWord() : strands_(1) {}

    BraidWord(int strands, std::vector<Letter> letters) : strands_(strands) {
        if (strands < 1) throw ParameterOutOfRange("braid word: strands must be >= 1");
        for (const Letter& l : letters) {
            if (l.exponent == 0) continue;
            if (l.index < 1 || l.index >= strands)
                throw IndexOutOfRange("braid word: generator s" + std::to_string(l.index) +
                                      " not in B_" + std::to_string(strands));
            letters_.push_back(l);
        }
    }

    static BraidWord identity(int strands) { return BraidWord(strands, {}); }

    int strands() const { return strands_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    int writhe() const {
        long long w = 0;
        for (const Letter& l : letters_) w += l.exponent;
        return static_cast<int>(w);
    }

    int crossings() const {
        long long c = 0;
        for (const Letter& l : letters_) c += std::abs(static_cast<long long>(l.exponent));
        return static_cast<int>(c);
    }

    BraidWord& append(int index, int exponent) {
        if (exponent != 0) {
            if (index < 1 || index >= strands_)
                throw IndexOutOfRange("braid word: generator s" + std::to_string(index));
            letters_.push_back({index, exponent});
        }
        return *this;
    }

    BraidWord& append(const BraidWord& other) {
        if (other.strands_ != strands_)
            throw ParameterOutOfRange("braid word: appending across strand counts");
        letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
        return *this;
    }

    /// All exponents negated in place order: the mirror image of the closure.
    BraidWord mirrored() const {
        std::vector<Letter> ls = letters_;
        for (Letter& l : ls) l.exponent = -l.exponent;
        return BraidWord(strands_, std::move(ls));
    }

    /// Letters in reverse order (flips the diagram top to bottom).
    BraidWord word_reversed() const {
        std::vector<Letter> ls(letters_.rbegin(), letters_.rend());
        return BraidWord(strands_, std::move(ls));
    }

    std::string key() const {
        std::string k = "B" + std::to_string(strands_) + ":";
        for (const Letter& l : letters_)
            k += " s" + std::to_string(l.index) + "^" + std::to_string(l.exponent);
        return k;
    }

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.strands_ == b.strands_ && a.letters_ == b.letters_;
    }

private:
    int strands_;
    std::vector<Letter> letters_;
};

/// Writhe, closure permutation and component count of the standard closure.
struct ClosureShape {
    int writhe = 0;
    std::vector<int> permutation; // 0-based: strand entering at top p exits at permutation[p]
    int components = 1;
};

inline ClosureShape closure_shape(const BraidWord& b) {
    ClosureShape s;
    s.writhe = b.writhe();
    const int n = b.strands();
    s.permutation.resize(n);
    std::iota(s.permutation.begin(), s.permutation.end(), 0);
    // Walk top to bottom tracking which top strand sits at each position.
    std::vector<int> at(n);
    std::iota(at.begin(), at.end(), 0);
    for (const Letter& l : b.letters())
        if (l.exponent % 2 != 0) std::swap(at[l.index - 1], at[l.index]);
    for (int pos = 0; pos < n; ++pos) s.permutation[at[pos]] = pos;
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = s.permutation[j]) seen[j] = true;
    }
    s.components = cycles;
    return s;
}

/// sigma_i -> sigma_{n-i}; a braid word and its reflection are conjugate.
inline BraidWord reflect(const BraidWord& b) {
    std::vector<Letter> ls = b.letters();
    for (Letter& l : ls) l.index = b.strands() - l.index;
    return BraidWord(b.strands(), std::move(ls));
}

/// Merge adjacent equal-index letters and drop cancellations, to fixpoint.
inline BraidWord free_reduce(const BraidWord& b) {
    std::vector<Letter> out;
    for (const Letter& l : b.letters()) {
        if (l.exponent == 0) continue;
        if (!out.empty() && out.back().index == l.index) {
            out.back().exponent += l.exponent;
            if (out.back().exponent == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return BraidWord(b.strands(), std::move(out));
}

/// First k letters moved to the end (conjugation; the closure is unchanged).
inline BraidWord cyclic_rotate(const BraidWord& b, int k) {
    const auto& ls = b.letters();
    if (ls.empty()) return b;
    const int n = static_cast<int>(ls.size());
    int r = ((k % n) + n) % n;
    std::vector<Letter> out(ls.begin() + r, ls.end());
    out.insert(out.end(), ls.begin(), ls.begin() + r);
    return BraidWord(b.strands(), std::move(out));
}

namespace detail {

/// Syllable view of an alternating positive B_3 word
/// sigma_1^{e1} sigma_2^{e2} ... sigma_1^{e_{2r-1}} sigma_2^{e_{2r}}.
/// Throws ShapeMismatch unless the word has exactly that shape.
inline std::vector<int> alternating_exponents(const BraidWord& b, int min_rank = 1) {
    if (b.strands() != 3) throw ShapeMismatch("expected a 3-braid word");
    const auto& ls = b.letters();
    if (ls.size() % 2 != 0 || static_cast<int>(ls.size()) < 2 * min_rank)
        throw ShapeMismatch("expected alternating sigma_1/sigma_2 syllables");
    std::vector<int> es;
    es.reserve(ls.size());
    for (std::size_t j = 0; j < ls.size(); ++j) {
        const int want = (j % 2 == 0) ? 1 : 2;
        if (ls[j].index != want || ls[j].exponent < 1)
            throw ShapeMismatch("expected positive alternating sigma_1/sigma_2 syllables");
        es.push_back(ls[j].exponent);
    }
    return es;
}

inline BraidWord from_alternating_exponents(const std::vector<int>& es) {
    std::vector<Letter> ls;
    for (std::size_t j = 0; j < es.size(); ++j)
        ls.push_back({j % 2 == 0 ? 1 : 2, es[j]});
    return BraidWord(3, std::move(ls));
}

} // namespace detail

/// The exponent permutation that "reverses" an alternating positive B_3 word:
/// (e1, e2, ..., e_{2r}) -> (e1, e_{2r}, e_{2r-1}, ..., e2).  Defined for
/// rank >= 2; an involution on that shape.
inline BraidWord reverse(const BraidWord& b) {
    const std::vector<int> es = detail::alternating_exponents(b, 2);
    std::vector<int> out;
    out.push_back(es[0]);
    for (std::size_t j = es.size() - 1; j >= 1; --j) out.push_back(es[j]);
    return detail::from_alternating_exponents(out);
}

/// Interval block [a,b]: ascending means sigma_a ... sigma_{b-1}, descending
/// sigma_{a-1} ... sigma_b, and [a,a] is the empty word.
inline BraidWord interval_word(int strands, int a, int b) {
    BraidWord w = BraidWord::identity(strands);
    if (a < 1 || b < 1 || std::max(a, b) > strands)
        throw IndexOutOfRange("interval [" + std::to_string(a) + "," + std::to_string(b) + "] in B_" +
                              std::to_string(strands));
    if (a < b)
        for (int i = a; i < b; ++i) w.append(i, 1);
    else if (a > b)
        for (int i = a - 1; i >= b; --i) w.append(i, 1);
    return w;
}

/// gamma * [1,m+x]^rho in B_{m+x} has the same closure as
/// gamma * [rho,1]^x * [1,m]^rho in B_m (Markov destabilization of the tall
/// braid); this returns the reduced word.  x = 0 returns gamma * [1,m]^rho.
inline BraidWord destabilize_reduce(const BraidWord& gamma, int m_plus_x, int rho) {
    const int m = gamma.strands();
    const int x = m_plus_x - m;
    if (rho < 1 || rho > m || m_plus_x < 2 || x < 0)
        throw ParameterOutOfRange("destabilize_reduce: need 1 <= rho <= m, 2 <= m+x, x >= 0");
    BraidWord out = gamma;
    for (int j = 0; j < x; ++j) out.append(interval_word(m, rho, 1));
    for (int j = 0; j < rho; ++j) out.append(interval_word(m, 1, m));
    return free_reduce(out);
}

/// Parser for the braid grammar
///   braid := "B" INT ":" item*
///   item  := ("s" INT | "[" INT "," INT "]") ("^" SIGNEDINT)?
/// Whitespace separates items; an omitted exponent means 1.  A negative
/// exponent on an interval repeats its inverse.
inline BraidWord parse_braid(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&](const char* what) -> long long {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw SyntaxError(std::string("braid: expected ") + what + " at offset " + std::to_string(start));
        return std::stoll(text.substr(start, pos - start));
    };

    skip_ws();
    if (pos >= text.size() || text[pos] != 'B') throw SyntaxError("braid: expected leading 'B<n>:'");
    ++pos;
    const long long n = parse_int("strand count");
    if (n < 1) throw SyntaxError("braid: strand count must be >= 1");
    skip_ws();
    if (pos >= text.size() || text[pos] != ':') throw SyntaxError("braid: expected ':' after strand count");
    ++pos;

    BraidWord word = BraidWord::identity(static_cast<int>(n));
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == 's') {
            ++pos;
            const long long i = parse_int("generator index");
            long long e = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = parse_int("exponent");
            }
            if (i < 1 || i >= n)
                throw IndexOutOfRange("braid: generator s" + std::to_string(i) + " not in B_" + std::to_string(n));
            if (e != 0) word.append(static_cast<int>(i), static_cast<int>(e));
        } else if (text[pos] == '[') {
            ++pos;
            const long long a = parse_int("interval start");
            skip_ws();
            if (pos >= text.size() || text[pos] != ',') throw SyntaxError("braid: expected ',' in interval");
            ++pos;
            const long long b = parse_int("interval end");
            skip_ws();
            if (pos >= text.size() || text[pos] != ']') throw SyntaxError("braid: expected ']' in interval");
            ++pos;
            long long e = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = parse_int("exponent");
            }
            if (a < 1 || b < 1 || std::max(a, b) > n)
                throw IndexOutOfRange("braid: interval [" + std::to_string(a) + "," + std::to_string(b) +
                                      "] not in B_" + std::to_string(n));
            const BraidWord block = interval_word(static_cast<int>(n), static_cast<int>(a), static_cast<int>(b));
            if (e >= 0) {
                for (long long j = 0; j < e; ++j) word.append(block);
            } else {
                BraidWord inv = BraidWord::identity(static_cast<int>(n));
                for (auto it = block.letters().rbegin(); it != block.letters().rend(); ++it)
                    inv.append(it->index, -it->exponent);
                for (long long j = 0; j < -e; ++j) word.append(inv);
            }
        } else {
            throw SyntaxError(std::string("braid: unexpected character '") + text[pos] + "' at offset " +
                              std::to_string(pos));
        }
    }
    return word;
}

} // namespace skein3
