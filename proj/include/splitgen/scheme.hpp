#pragma once

#include <string>

namespace splitgen {

enum class SchemeKind {
    NonsymmetricComplex,
    NonsymmetricTilde,
    Symmetric,
    Recursive,           // F_{m-l} base, parameter l
    RecursiveSymmetric,  // S_{2m-2l} base, parameter l
    RecursiveTilde,      // alternating F_{m-l} / reversed F_{m-l}, parameter l
};

/// Decomposition family. Fixes the stage-operator sign rule and the grade
/// alphabet / condition set used at a given order.
struct Scheme {
    SchemeKind kind = SchemeKind::NonsymmetricComplex;
    int l = 0;  // recursion depth, recursive kinds only

    bool is_recursive() const {
        return kind == SchemeKind::Recursive || kind == SchemeKind::RecursiveSymmetric ||
               kind == SchemeKind::RecursiveTilde;
    }
    bool symmetric_family() const {
        return kind == SchemeKind::Symmetric || kind == SchemeKind::RecursiveSymmetric;
    }
    bool tilde() const {
        return kind == SchemeKind::NonsymmetricTilde || kind == SchemeKind::RecursiveTilde;
    }
    /// Odd block sizes in the simplification recursion (tilde and symmetric).
    bool odd_blocks() const { return tilde() || kind == SchemeKind::Symmetric; }

    std::string name() const;
    static Scheme parse(const std::string& name, int l = 0);

    static Scheme nonsymmetric() { return {SchemeKind::NonsymmetricComplex, 0}; }
    static Scheme nonsymmetric_tilde() { return {SchemeKind::NonsymmetricTilde, 0}; }
    static Scheme symmetric() { return {SchemeKind::Symmetric, 0}; }
    static Scheme recursive(int l) { return {SchemeKind::Recursive, l}; }
    static Scheme recursive_symmetric(int l) { return {SchemeKind::RecursiveSymmetric, l}; }
    static Scheme recursive_tilde(int l) { return {SchemeKind::RecursiveTilde, l}; }
};

}  // namespace splitgen
