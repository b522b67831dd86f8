#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace splitgen {

/// A word over an ordered alphabet; letters are 0-based symbol ids and the
/// total order on words is plain lexicographic order on the id sequence.
using Word = std::vector<int>;

/// Ordered symbols with positive integer grades. The order is by symbol
/// index, not by grade.
struct GradedAlphabet {
    std::vector<std::string> names;
    std::vector<int> grades;

    int size() const { return static_cast<int>(names.size()); }
    int grade_of(int symbol) const { return grades[static_cast<size_t>(symbol)]; }

    int word_grade(const Word& w) const {
        int g = 0;
        for (int s : w) g += grade_of(s);
        return g;
    }

    std::string format(const Word& w) const {
        std::string out;
        for (int s : w) out += names[static_cast<size_t>(s)];
        return out;
    }

    /// Single-character symbols of grade 1, e.g. letters("xyz").
    static GradedAlphabet letters(const std::string& syms) {
        GradedAlphabet a;
        for (char c : syms) {
            a.names.emplace_back(1, c);
            a.grades.push_back(1);
        }
        return a;
    }

    /// Symbols R_i for the given indices; the grade of R_i is i.
    static GradedAlphabet r_symbols(const std::vector<int>& indices) {
        GradedAlphabet a;
        for (int i : indices) {
            a.names.push_back("R" + std::to_string(i));
            a.grades.push_back(i);
        }
        return a;
    }
};

/// Homogeneous linear combination of words; no zero coefficients stored.
template <typename C>
struct WordPolyT {
    std::map<Word, C> terms;

    bool empty() const { return terms.empty(); }

    void add(const Word& w, const C& c) {
        auto it = terms.find(w);
        if (it == terms.end()) {
            if (!(c == C(0))) terms.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second == C(0)) terms.erase(it);
    }

    C coeff(const Word& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? C(0) : it->second;
    }

    WordPolyT& operator+=(const WordPolyT& o) {
        for (const auto& [w, c] : o.terms) add(w, c);
        return *this;
    }
    WordPolyT& operator-=(const WordPolyT& o) {
        for (const auto& [w, c] : o.terms) add(w, C(0) - c);
        return *this;
    }
    WordPolyT operator-(const WordPolyT& o) const {
        WordPolyT r = *this;
        r -= o;
        return r;
    }
    WordPolyT operator+(const WordPolyT& o) const {
        WordPolyT r = *this;
        r += o;
        return r;
    }
    WordPolyT& operator*=(const C& k) {
        if (k == C(0)) {
            terms.clear();
            return *this;
        }
        for (auto& [w, c] : terms) c *= k;
        return *this;
    }

    bool operator==(const WordPolyT& o) const { return terms == o.terms; }

    /// Concatenation product in the free associative algebra.
    friend WordPolyT concat_product(const WordPolyT& a, const WordPolyT& b) {
        WordPolyT r;
        for (const auto& [wa, ca] : a.terms)
            for (const auto& [wb, cb] : b.terms) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(w, ca * cb);
            }
        return r;
    }
};

using WordPoly = WordPolyT<long long>;

}  // namespace splitgen
