#include "splitgen/parampoly.hpp"

#include <numeric>
#include <stdexcept>

namespace splitgen {

namespace {
void check_stages(const ParamPoly& a, const ParamPoly& b) {
    if (a.stages != b.stages) throw std::invalid_argument("ParamPoly: stage count mismatch");
}
}  // namespace

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    check_stages(*this, o);
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    check_stages(*this, o);
    for (const auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& k) {
    if (k == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [e, c] : terms) c *= k;
    return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    r += o;
    return r;
}
ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    r -= o;
    return r;
}
ParamPoly ParamPoly::operator*(const Rational& k) const {
    ParamPoly r = *this;
    r *= k;
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    check_stages(*this, o);
    ParamPoly r(stages);
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            std::vector<int> e = ea;
            for (size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

ParamPoly ParamPoly::derivative(int var) const {
    ParamPoly r(stages);
    for (const auto& [e, c] : terms) {
        int k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        std::vector<int> d = e;
        --d[static_cast<size_t>(var)];
        r.add_term(std::move(d), c * k);
    }
    return r;
}

ParamPoly ParamPoly::mirror() const {
    ParamPoly r(stages);
    for (const auto& [e, c] : terms) {
        std::vector<int> m(e.rbegin(), e.rend());
        r.add_term(std::move(m), c);
    }
    return r;
}

Rational ParamPoly::eval_exact(std::span<const Rational> values) const {
    Rational acc = 0;
    for (const auto& [exps, coeff] : terms) {
        Rational term = coeff;
        for (size_t j = 0; j < exps.size(); ++j)
            for (int e = 0; e < exps[j]; ++e) term *= values[j];
        acc += term;
    }
    return acc;
}

bool ParamPoly::homogeneous_of_degree(int d) const {
    for (const auto& [e, c] : terms)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

std::string ParamPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms) {
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono;
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "p" + std::to_string(j + 1);
            if (e[j] > 1) mono += "^" + std::to_string(e[j]);
        }
        if (mono.empty())
            out += to_fraction_string(a);
        else if (a == 1)
            out += mono;
        else
            out += to_fraction_string(a) + "*" + mono;
    }
    return out;
}

}  // namespace splitgen
