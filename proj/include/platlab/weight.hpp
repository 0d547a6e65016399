#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace platlab {

struct TwistSpec;

// Variable m_i^j = |t_i^j|, encoded as 100*i + j.
inline int magnitude_var(int i, int j) { return 100 * i + j; }
std::string var_name(int var);

// Polynomial with integer coefficients in the magnitude variables.
class Weight {
public:
    using Monomial = std::vector<std::pair<int, int>>;  // (var, exponent), sorted by var

    Weight() = default;
    Weight(std::int64_t constant);  // NOLINT: implicit from integers is intended
    static Weight var(int i, int j);
    // s_i^j * m_i^j with the sign taken from the spec
    static Weight signed_var(const TwistSpec& spec, int i, int j);

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator*(const Weight& o) const;
    Weight& operator+=(const Weight& o);
    bool operator==(const Weight& o) const { return terms_ == o.terms_; }
    bool operator!=(const Weight& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::int64_t constant() const;
    std::vector<int> variables() const;
    const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

    std::int64_t evaluate(const std::map<int, std::int64_t>& values) const;
    std::int64_t evaluate(const TwistSpec& spec) const;

    // Canonical text: monomials in graded lexicographic order, e.g. "m2_3*m3_3 + 2".
    std::string str() const;

private:
    std::map<Monomial, std::int64_t> terms_;
    void add_term(const Monomial& m, std::int64_t c);
};

struct MagnitudeRange {
    std::int64_t lo = 2;
    std::int64_t hi = std::numeric_limits<std::int64_t>::max();  // max() means unbounded
    bool bounded() const { return hi != std::numeric_limits<std::int64_t>::max(); }
};

// Declared ranges per variable; missing variables use the fallback.
struct MagnitudeRanges {
    MagnitudeRange fallback;
    std::map<int, MagnitudeRange> per_var;
    const MagnitudeRange& of(int var) const;
};

enum class Order { less, equal, greater };

// Decides the sign of a - b over the box of declared ranges. Substitutes
// m = lo + x (x >= 0) and accepts a uniform coefficient sign; bounded boxes
// fall back to interval evaluation. Throws AmbiguousOrder otherwise.
Order compare(const Weight& a, const Weight& b, const MagnitudeRanges& ranges);

// Same test, returning false instead of throwing.
bool provably_positive(const Weight& w, const MagnitudeRanges& ranges);

}  // namespace platlab
