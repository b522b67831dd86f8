#include "splitgen/scheme.hpp"

#include <stdexcept>

namespace splitgen {

std::string Scheme::name() const {
    switch (kind) {
        case SchemeKind::NonsymmetricComplex: return "nonsymmetric";
        case SchemeKind::NonsymmetricTilde: return "nonsymmetric-tilde";
        case SchemeKind::Symmetric: return "symmetric";
        case SchemeKind::Recursive: return "recursive";
        case SchemeKind::RecursiveSymmetric: return "recursive-symmetric";
        case SchemeKind::RecursiveTilde: return "recursive-tilde";
    }
    return "?";
}

Scheme Scheme::parse(const std::string& name, int l) {
    Scheme s;
    if (name == "nonsymmetric" || name == "nonsymmetric-complex")
        s.kind = SchemeKind::NonsymmetricComplex;
    else if (name == "nonsymmetric-tilde" || name == "tilde")
        s.kind = SchemeKind::NonsymmetricTilde;
    else if (name == "symmetric")
        s.kind = SchemeKind::Symmetric;
    else if (name == "recursive")
        s.kind = SchemeKind::Recursive;
    else if (name == "recursive-symmetric")
        s.kind = SchemeKind::RecursiveSymmetric;
    else if (name == "recursive-tilde")
        s.kind = SchemeKind::RecursiveTilde;
    else
        throw std::invalid_argument("unknown scheme: " + name);
    if (s.is_recursive()) {
        if (l < 1) throw std::invalid_argument("recursive scheme needs l >= 1");
        s.l = l;
    }
    return s;
}

}  // namespace splitgen
