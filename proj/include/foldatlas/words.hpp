#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace foldatlas {

class InvalidWord : public std::runtime_error {
  public:
    explicit InvalidWord(const std::string& what) : std::runtime_error(what) {}
};

class InvalidGenus : public std::runtime_error {
  public:
    explicit InvalidGenus(const std::string& what) : std::runtime_error(what) {}
};

enum class Family : char { A = 'A', B = 'B', C = 'C' };

// Symbolic name of a canonical curve: family letter, index k, sign.
// For family B the conventional second index is fixed at 1.
struct CurveWord {
    Family family = Family::C;
    int k = 0;
    bool positive = true;

    friend bool operator==(const CurveWord& a, const CurveWord& b) = default;
    friend auto operator<=>(const CurveWord& a, const CurveWord& b) = default;
};

inline void validate_word(const CurveWord& w) {
    const int kmin = w.family == Family::C ? 0 : 1;
    if (w.k < kmin)
        throw InvalidWord("index " + std::to_string(w.k) + " out of range for family " +
                          std::string(1, static_cast<char>(w.family)));
}

inline CurveWord word_a(int k, bool positive) { return {Family::A, k, positive}; }
inline CurveWord word_b(int k, bool positive) { return {Family::B, k, positive}; }
inline CurveWord word_c(int k, bool positive) { return {Family::C, k, positive}; }

// Text syntax: "A-3", "B+7,1", "C+0".
inline std::string to_string(const CurveWord& w) {
    std::string s(1, static_cast<char>(w.family));
    s += w.positive ? '+' : '-';
    s += std::to_string(w.k);
    if (w.family == Family::B) s += ",1";
    return s;
}

inline CurveWord parse_word(const std::string& text) {
    if (text.size() < 3) throw InvalidWord("cannot parse curve word '" + text + "'");
    Family fam;
    switch (text[0]) {
        case 'A': fam = Family::A; break;
        case 'B': fam = Family::B; break;
        case 'C': fam = Family::C; break;
        default: throw InvalidWord("unknown family in '" + text + "'");
    }
    const bool positive = text[1] == '+';
    if (!positive && text[1] != '-') throw InvalidWord("missing sign in '" + text + "'");
    std::string digits = text.substr(2);
    if (fam == Family::B) {
        const auto comma = digits.find(',');
        if (comma == std::string::npos || digits.substr(comma) != ",1")
            throw InvalidWord("family B words carry a ',1' suffix: '" + text + "'");
        digits = digits.substr(0, comma);
    }
    int k = 0;
    try {
        std::size_t used = 0;
        k = std::stoi(digits, &used);
        if (used != digits.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw InvalidWord("bad index in '" + text + "'");
    }
    CurveWord w{fam, k, positive};
    validate_word(w);
    return w;
}

struct TableRow {
    int w;
    int i_plus;
    int i_minus;
    int n_minus;
    int n_plus;

    int crossings() const { return n_plus + n_minus; }
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

// The invariants of the key families of curves.
inline TableRow predicted_invariants(const CurveWord& word) {
    validate_word(word);
    const int k = word.k;
    switch (word.family) {
        case Family::A:
            return word.positive ? TableRow{1 - k, 0, 1, 1, k - 1} : TableRow{k - 1, 0, 1, k, 0};
        case Family::B:
            return word.positive ? TableRow{2 - k, 1, 0, 1, k} : TableRow{k - 2, 0, 1, k, 1};
        case Family::C:
            return word.positive ? TableRow{-k - 1, 0, 1, 0, k} : TableRow{k + 1, 1, 0, k, 0};
    }
    throw InvalidWord("unreachable");
}

// A multiset of curve words, kept sorted for canonical comparisons.
struct WordMultiset {
    std::vector<CurveWord> words;

    void add(const CurveWord& w) {
        words.push_back(w);
        std::sort(words.begin(), words.end());
    }

    friend bool operator==(const WordMultiset&, const WordMultiset&) = default;
};

inline WordMultiset make_multiset(std::vector<CurveWord> ws) {
    std::sort(ws.begin(), ws.end());
    return WordMultiset{std::move(ws)};
}

inline int crossing_total(const WordMultiset& ws) {
    int total = 0;
    for (const auto& w : ws.words) total += predicted_invariants(w).crossings();
    return total;
}

inline int winding_total(const WordMultiset& ws) {
    int total = 0;
    for (const auto& w : ws.words) total += predicted_invariants(w).w;
    return total;
}

// Canonical sharp boundary of a genus-g surface with k boundary components:
// one B+_{2g+1,1} carrying all 2g+2 self-intersections and k-1 embedded holes.
inline WordMultiset sharp_boundary(int genus, int boundary_count) {
    if (genus < 1) throw InvalidGenus("the estimate needs genus >= 1");
    if (boundary_count < 1) throw InvalidGenus("need at least one boundary component");
    WordMultiset out;
    out.words.push_back(word_b(2 * genus + 1, true));
    for (int i = 1; i < boundary_count; ++i) out.words.push_back(word_c(0, true));
    std::sort(out.words.begin(), out.words.end());
    return out;
}

}  // namespace foldatlas
