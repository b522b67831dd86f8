#pragma once

#include "splitgen/word.hpp"

#include <map>
#include <memory>
#include <utility>

namespace splitgen {

/// True iff w is strictly smaller than every proper cyclic rotation of
/// itself (which implies primitivity).
bool is_lyndon(const Word& w);

/// All Lyndon words of total grade <= max_grade, sorted by (grade, lex).
/// Duval enumeration up to length max_grade, post-filtered by grade.
std::vector<Word> generate_lyndon(const GradedAlphabet& alphabet, int max_grade);

/// Standard factorization l = u*v with v the longest proper Lyndon suffix.
/// Requires |l| >= 2 and l Lyndon.
std::pair<Word, Word> standard_factorization(const Word& l);

/// Iterated-commutator tree; leaves spell the underlying Lyndon word.
struct BracketTree {
    int symbol = -1;  // valid iff leaf
    std::unique_ptr<BracketTree> left, right;

    bool is_leaf() const { return !left; }

    static BracketTree leaf(int symbol) {
        BracketTree t;
        t.symbol = symbol;
        return t;
    }
    static BracketTree node(BracketTree l, BracketTree r) {
        BracketTree t;
        t.left = std::make_unique<BracketTree>(std::move(l));
        t.right = std::make_unique<BracketTree>(std::move(r));
        return t;
    }
};

/// The lambda bijection: recursive standard-factorization bracketing.
BracketTree bracketing(const Word& lyndon);

/// Flatten nested commutators into the word basis, [u,v] -> uv - vu.
WordPoly expand_bracket(const BracketTree& t);

/// Leaves of t, left to right.
Word bracket_foliage(const BracketTree& t);

/// "[x,[[x,y],y]]" style rendering.
std::string format_bracket(const BracketTree& t, const GradedAlphabet& alphabet);

/// All Lyndon words over the index alphabet {R_i : i in content} whose
/// letter content matches the multiset, as 1-based index sequences
/// (i_1,...,i_n) in lexicographic order. content maps index -> multiplicity.
std::vector<std::vector<int>> lyndon_index_sequences(const std::map<int, int>& content);

}  // namespace splitgen
