#include "splitgen/ladder.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace splitgen {

namespace {

void push_merged(Ladder& ladder, int op, const Rational& t) {
    if (!ladder.empty() && ladder.back().op == op) {
        ladder.back().t += t;
        if (ladder.back().t == 0) ladder.pop_back();
        return;
    }
    if (t != 0) ladder.push_back({op, t});
}

}  // namespace

Ladder ladder_from_scheme(const Scheme& scheme, std::span<const Rational> p) {
    constexpr int A = 0, B = 1;
    Ladder ladder;
    switch (scheme.kind) {
        case SchemeKind::NonsymmetricComplex:
            for (const Rational& v : p) {
                push_merged(ladder, A, v);
                push_merged(ladder, B, v);
            }
            break;
        case SchemeKind::Symmetric:
            for (const Rational& v : p) {
                push_merged(ladder, A, v / 2);
                push_merged(ladder, B, v);
                push_merged(ladder, A, v / 2);
            }
            break;
        case SchemeKind::NonsymmetricTilde:
            for (size_t j = 0; j < p.size(); ++j) {
                if (j % 2 == 0) {
                    push_merged(ladder, A, p[j]);
                    push_merged(ladder, B, p[j]);
                } else {
                    push_merged(ladder, B, p[j]);
                    push_merged(ladder, A, p[j]);
                }
            }
            break;
        default:
            throw std::invalid_argument("ladder_from_scheme: recursive kinds have no fixed base");
    }
    return ladder;
}

Ladder ladder_from_scheme(const Scheme& scheme, std::span<const double> stage_values) {
    std::vector<Rational> p;
    p.reserve(stage_values.size());
    for (double v : stage_values) p.push_back(rational_from_double(v));
    return ladder_from_scheme(scheme, std::span<const Rational>(p));
}

NumericLadder to_numeric(const Ladder& ladder) {
    NumericLadder out;
    out.reserve(ladder.size());
    for (const auto& f : ladder) out.emplace_back(f.op, std::complex<double>(to_double(f.t), 0.0));
    return out;
}

int ladder_operator_count(const Ladder& ladder) {
    int mx = -1;
    for (const auto& f : ladder) mx = std::max(mx, f.op);
    return mx + 1;
}

Ladder load_ladder_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    if (!j.is_array()) throw std::invalid_argument("ladder file: expected a JSON array");
    Ladder ladder;
    for (const auto& item : j) {
        std::string op = item.at("op").get<std::string>();
        if (op.size() != 1 || op[0] < 'A' || op[0] > 'Z')
            throw std::invalid_argument("ladder file: op must be a letter A..Z");
        const auto& t = item.at("t");
        Rational tv;
        if (t.is_string())
            tv = parse_rational(t.get<std::string>());
        else if (t.is_number_integer())
            tv = Rational(t.get<long long>());
        else if (t.is_number())
            tv = rational_from_double(t.get<double>());
        else
            throw std::invalid_argument("ladder file: t must be a string or number");
        ladder.push_back({op[0] - 'A', tv});
    }
    if (ladder.empty()) throw std::invalid_argument("ladder file: empty ladder");
    return ladder;
}

Ladder load_ladder_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ladder file: " + path);
    return load_ladder_json(in);
}

void save_ladder_json(const Ladder& ladder, std::ostream& out) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& f : ladder) {
        j.push_back({{"op", std::string(1, static_cast<char>('A' + f.op))},
                     {"t", to_fraction_string(f.t)}});
    }
    out << j.dump(2) << "\n";
}

}  // namespace splitgen
