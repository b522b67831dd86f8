#include "splitgen/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitgen {

bool is_lyndon(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
    const size_t n = w.size();
    for (size_t k = 1; k < n; ++k) {
        // compare w against its rotation starting at k
        bool smaller = false;
        for (size_t i = 0; i < n; ++i) {
            int a = w[i];
            int b = w[(k + i) % n];
            if (a != b) {
                smaller = a < b;
                break;
            }
        }
        if (!smaller) return false;  // equal rotation (imprimitive) or larger
    }
    return true;
}

std::vector<Word> generate_lyndon(const GradedAlphabet& alphabet, int max_grade) {
    if (max_grade < 1) throw std::invalid_argument("generate_lyndon: max_grade < 1");
    const int s = alphabet.size();
    const int maxlen = max_grade;  // grades >= 1, so length <= total grade
    std::vector<Word> out;

    Word w{0};
    while (true) {
        if (alphabet.word_grade(w) <= max_grade) out.push_back(w);
        // Duval successor: repeat cyclically to maxlen, strip trailing
        // maximal symbols, increment the last.
        Word x;
        x.reserve(static_cast<size_t>(maxlen));
        for (int i = 0; i < maxlen; ++i) x.push_back(w[static_cast<size_t>(i) % w.size()]);
        while (!x.empty() && x.back() == s - 1) x.pop_back();
        if (x.empty()) break;
        ++x.back();
        w = std::move(x);
    }

    std::stable_sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
        int ga = alphabet.word_grade(a), gb = alphabet.word_grade(b);
        if (ga != gb) return ga < gb;
        return a < b;
    });
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& l) {
    if (l.size() < 2) throw std::invalid_argument("standard_factorization: need length >= 2");
    // The longest proper Lyndon suffix, scanning from the longest down.
    for (size_t start = 1; start < l.size(); ++start) {
        Word v(l.begin() + static_cast<long>(start), l.end());
        if (is_lyndon(v)) {
            Word u(l.begin(), l.begin() + static_cast<long>(start));
            return {std::move(u), std::move(v)};
        }
    }
    throw std::logic_error("standard_factorization: no Lyndon suffix (input not Lyndon?)");
}

BracketTree bracketing(const Word& lyndon) {
    if (lyndon.size() == 1) return BracketTree::leaf(lyndon[0]);
    auto [u, v] = standard_factorization(lyndon);
    return BracketTree::node(bracketing(u), bracketing(v));
}

WordPoly expand_bracket(const BracketTree& t) {
    if (t.is_leaf()) {
        WordPoly p;
        p.add(Word{t.symbol}, 1);
        return p;
    }
    WordPoly l = expand_bracket(*t.left);
    WordPoly r = expand_bracket(*t.right);
    WordPoly lr = concat_product(l, r);
    lr -= concat_product(r, l);
    return lr;
}

Word bracket_foliage(const BracketTree& t) {
    if (t.is_leaf()) return Word{t.symbol};
    Word w = bracket_foliage(*t.left);
    Word r = bracket_foliage(*t.right);
    w.insert(w.end(), r.begin(), r.end());
    return w;
}

std::string format_bracket(const BracketTree& t, const GradedAlphabet& alphabet) {
    if (t.is_leaf()) return alphabet.names[static_cast<size_t>(t.symbol)];
    return "[" + format_bracket(*t.left, alphabet) + "," + format_bracket(*t.right, alphabet) + "]";
}

std::vector<std::vector<int>> lyndon_index_sequences(const std::map<int, int>& content) {
    std::vector<int> sorted;
    for (const auto& [index, mult] : content) {
        if (index < 1 || mult < 0) throw std::invalid_argument("lyndon_index_sequences: bad content");
        for (int i = 0; i < mult; ++i) sorted.push_back(index);
    }
    if (sorted.empty()) throw std::invalid_argument("lyndon_index_sequences: empty content");

    std::vector<std::vector<int>> out;
    std::vector<int> perm = sorted;
    do {
        if (is_lyndon(perm)) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;  // next_permutation visits in lex order
}

}  // namespace splitgen
