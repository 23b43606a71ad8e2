#include "coxlimits/datum.hpp"

#include <cmath>
#include <sstream>

namespace coxlimits {

namespace {

constexpr double kSymTol = 1e-12;
constexpr double kDiagTol = 1e-12;
constexpr double kBondTol = 1e-9;
constexpr double kAffineTol = 1e-12;
constexpr int kMaxBondScan = 1000;

// Smallest m in [2, 1000] with |g + cos(pi/m)| <= 1e-9, or kInfinityBond
// for g <= -1 (the -1 boundary is given kAffineTol of slack), or -1.
int derive_bond(double g) {
    if (g <= -1.0 + kAffineTol) return kInfinityBond;
    for (int m = 2; m <= kMaxBondScan; ++m) {
        if (std::abs(g + std::cos(M_PI / m)) <= kBondTol) return m;
    }
    return -1;
}

// Tokenizer for the matrix files: '#' starts a comment through end of line.
std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) tokens.push_back(tok);
    }
    return tokens;
}

double parse_double(const std::string& tok) {
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("malformed number: '" + tok + "'");
    }
    if (used != tok.size() || !std::isfinite(v))
        throw ParseError("malformed number: '" + tok + "'");
    return v;
}

long parse_int(const std::string& tok) {
    size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("malformed integer: '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("malformed integer: '" + tok + "'");
    return v;
}

}  // namespace

CoxeterDatum CoxeterDatum::from_gram(int rank, Vec gram, std::vector<std::string> labels) {
    if (rank < 1) throw InvalidDatum("rank must be a positive integer");
    if (gram.size() != static_cast<size_t>(rank) * rank)
        throw InvalidDatum("gram matrix size does not match rank");

    CoxeterDatum d;
    d.rank_ = rank;
    d.gram_ = std::move(gram);
    d.bonds_.assign(static_cast<size_t>(rank) * rank, 1);

    for (int i = 0; i < rank; ++i) {
        const double diag = d.gram(i, i);
        if (std::abs(diag - 1.0) > kDiagTol)
            throw InvalidDatum("diagonal entry B(a,a) != 1 at index " + std::to_string(i + 1));
        for (int j = i + 1; j < rank; ++j) {
            if (std::abs(d.gram(i, j) - d.gram(j, i)) > kSymTol)
                throw InvalidDatum("gram matrix is not symmetric at (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            const int m = derive_bond(d.gram(i, j));
            if (m < 0)
                throw InvalidDatum("off-diagonal entry " + std::to_string(d.gram(i, j)) +
                                   " is neither -cos(pi/m) for an integer m in [2,1000] nor <= -1");
            d.bonds_[static_cast<size_t>(i) * rank + j] = m;
            d.bonds_[static_cast<size_t>(j) * rank + i] = m;
        }
    }

    if (labels.empty()) {
        for (int i = 0; i < rank; ++i) labels.push_back("s" + std::to_string(i + 1));
    }
    if (labels.size() != static_cast<size_t>(rank))
        throw InvalidDatum("label count does not match rank");
    d.labels_ = std::move(labels);
    return d;
}

double CoxeterDatum::bilinear(const Vec& u, const Vec& v) const {
    if (u.size() != static_cast<size_t>(rank_) || v.size() != static_cast<size_t>(rank_))
        throw DimensionMismatch("vector length does not match datum rank");
    double acc = 0.0;
    for (int i = 0; i < rank_; ++i) {
        double row = 0.0;
        for (int j = 0; j < rank_; ++j) row += gram(i, j) * v[static_cast<size_t>(j)];
        acc += u[static_cast<size_t>(i)] * row;
    }
    return acc;
}

Vec CoxeterDatum::reflect(int s, Vec v) const {
    reflect_in_place(s, v);
    return v;
}

void CoxeterDatum::reflect_in_place(int s, Vec& v) const {
    if (s < 0 || s >= rank_) throw IndexOutOfRange("generator index out of range");
    if (v.size() != static_cast<size_t>(rank_))
        throw DimensionMismatch("vector length does not match datum rank");
    double pairing = 0.0;  // B(v, a_s)
    for (int j = 0; j < rank_; ++j) pairing += gram(s, j) * v[static_cast<size_t>(j)];
    v[static_cast<size_t>(s)] -= 2.0 * pairing;
}

BondClass CoxeterDatum::classify_bond(int i, int j) const {
    if (i < 0 || i >= rank_ || j < 0 || j >= rank_ || i == j)
        throw IndexOutOfRange("classify_bond requires distinct in-range indices");
    const int m = bond(i, j);
    if (m != kInfinityBond) return {BondKind::Finite, m};
    if (std::abs(gram(i, j) + 1.0) <= kAffineTol) return {BondKind::Affine, kInfinityBond};
    return {BondKind::Hyperbolic, kInfinityBond};
}

Vec CoxeterDatum::simple_root(int s) const {
    if (s < 0 || s >= rank_) throw IndexOutOfRange("generator index out of range");
    Vec v(static_cast<size_t>(rank_), 0.0);
    v[static_cast<size_t>(s)] = 1.0;
    return v;
}

CoxeterDatum parse_gram_matrix(const std::string& text) {
    const auto tokens = tokenize(text);
    if (tokens.empty()) throw ParseError("empty gram document");
    const long n = parse_int(tokens[0]);
    if (n < 1) throw InvalidDatum("rank must be a positive integer");
    const size_t expected = 1 + static_cast<size_t>(n) * static_cast<size_t>(n);
    if (tokens.size() != expected)
        throw ParseError("expected " + std::to_string(expected - 1) + " matrix entries, got " +
                         std::to_string(tokens.size() - 1));
    Vec gram;
    gram.reserve(expected - 1);
    for (size_t k = 1; k < tokens.size(); ++k) gram.push_back(parse_double(tokens[k]));
    return CoxeterDatum::from_gram(static_cast<int>(n), std::move(gram));
}

CoxeterDatum parse_coxeter_matrix(const std::string& text, double infinity_bond,
                                  const std::vector<BondOverride>& overrides) {
    if (!(infinity_bond <= -1.0))
        throw InvalidDatum("infinity bond value must be <= -1");
    const auto tokens = tokenize(text);
    if (tokens.empty()) throw ParseError("empty coxeter document");
    const long n = parse_int(tokens[0]);
    if (n < 1) throw InvalidDatum("rank must be a positive integer");
    const size_t expected = 1 + static_cast<size_t>(n) * static_cast<size_t>(n);
    if (tokens.size() != expected)
        throw ParseError("expected " + std::to_string(expected - 1) + " matrix entries, got " +
                         std::to_string(tokens.size() - 1));

    std::vector<long> m(expected - 1);
    for (size_t k = 1; k < tokens.size(); ++k) m[k - 1] = parse_int(tokens[k]);

    auto at = [&](long i, long j) -> long& { return m[static_cast<size_t>(i * n + j)]; };
    for (long i = 0; i < n; ++i) {
        if (at(i, i) != 1) throw InvalidDatum("coxeter matrix diagonal must be 1");
        for (long j = i + 1; j < n; ++j) {
            if (at(i, j) != at(j, i)) throw InvalidDatum("coxeter matrix is not symmetric");
            if (at(i, j) != 0 && at(i, j) < 2)
                throw InvalidDatum("off-diagonal bond " + std::to_string(at(i, j)) +
                                   " is illegal (need m >= 2, or 0 for infinity)");
        }
    }

    Vec gram(expected - 1, 0.0);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            const long mij = at(i, j);
            gram[static_cast<size_t>(i * n + j)] =
                i == j ? 1.0 : (mij == 0 ? infinity_bond : -std::cos(M_PI / static_cast<double>(mij)));
        }
    }
    for (const auto& ov : overrides) {
        if (ov.i < 1 || ov.i > n || ov.j < 1 || ov.j > n || ov.i == ov.j)
            throw InvalidDatum("override indices out of range");
        if (at(ov.i - 1, ov.j - 1) != 0)
            throw InvalidDatum("override on a finite bond is illegal");
        if (!(ov.value <= -1.0))
            throw InvalidDatum("override value must be <= -1");
        gram[static_cast<size_t>((ov.i - 1) * n + (ov.j - 1))] = ov.value;
        gram[static_cast<size_t>((ov.j - 1) * n + (ov.i - 1))] = ov.value;
    }
    return CoxeterDatum::from_gram(static_cast<int>(n), std::move(gram));
}

std::vector<BondOverride> parse_overrides(const std::string& text) {
    const auto tokens = tokenize(text);
    if (tokens.size() % 3 != 0) throw ParseError("overrides file needs lines of 'i j value'");
    std::vector<BondOverride> out;
    for (size_t k = 0; k < tokens.size(); k += 3) {
        BondOverride ov;
        ov.i = static_cast<int>(parse_int(tokens[k]));
        ov.j = static_cast<int>(parse_int(tokens[k + 1]));
        ov.value = parse_double(tokens[k + 2]);
        out.push_back(ov);
    }
    return out;
}

double coord_sum(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

}  // namespace coxlimits
