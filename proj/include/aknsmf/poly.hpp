#pragma once

#include "aknsmf/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace aknsmf {

/// Jet multi-index: number of time-derivative applications per time label,
/// stored sparsely as (time, count) pairs sorted by time, counts > 0.
using JetIndex = std::vector<std::pair<int, int>>;

JetIndex jet_raised(const JetIndex& jet, int time);
JetIndex jet_lowered(const JetIndex& jet, int time);  // count must be > 0 at `time`
int jet_total(const JetIndex& jet);
std::string jet_str(const JetIndex& jet);

enum class VarKind : std::uint8_t { E = 0, F = 1, Q = 2, R = 3, Spectral = 4 };

/// A generator of the jet ring: a phase coordinate e_j / f_j, a field q / r,
/// any of their time-derivative jets, or an inert spectral parameter
/// (lam, mu, nu) used to carry polynomial dependence on spectral points.
struct Variable {
    VarKind kind = VarKind::E;
    int index = 0;  // E/F: phase index >= 1; Spectral: parameter id >= 1; Q/R: 0
    JetIndex jet;

    static Variable e(int j, JetIndex jet = {});
    static Variable f(int j, JetIndex jet = {});
    static Variable q(JetIndex jet = {});
    static Variable r(JetIndex jet = {});
    static Variable spectral(int id);

    bool is_phase() const {
        return (kind == VarKind::E || kind == VarKind::F) && jet.empty();
    }
    bool is_spectral() const { return kind == VarKind::Spectral; }
    bool has_jet() const { return !jet.empty(); }

    Variable raised(int time) const;
    Variable base() const;  // same variable with empty jet

    /// Canonical order: kind, then index, then jet lexicographically over
    /// ascending time labels.
    int cmp(const Variable& o) const;
    bool operator<(const Variable& o) const { return cmp(o) < 0; }
    bool operator==(const Variable& o) const { return cmp(o) == 0; }
    bool operator!=(const Variable& o) const { return cmp(o) != 0; }

    /// "e3", "f1", "q", "q_1", "q_11", "e2_d{2:1}", "lam", ...
    std::string str() const;
};

/// Monomial: finitely supported exponent map, kept sorted by variable with
/// positive exponents only.
using Monomial = std::vector<std::pair<Variable, int>>;

int monomial_degree(const Monomial& m);

/// Canonical term order used for storage and rendering: ascending total
/// degree; within a degree, the term with the higher exponent on the first
/// differing variable (in canonical variable order) comes first.
struct TermLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over GaussianRational. Canonical form:
/// no zero coefficients, terms ordered by TermLess. Equality is structural.
class Poly {
public:
    using TermMap = std::map<Monomial, GaussianRational, TermLess>;

    Poly() = default;
    explicit Poly(const GaussianRational& c);
    Poly(long n) : Poly(GaussianRational(n)) {}

    static Poly var(const Variable& v);
    static Poly e(int j) { return var(Variable::e(j)); }
    static Poly f(int j) { return var(Variable::f(j)); }
    static Poly q() { return var(Variable::q()); }
    static Poly r() { return var(Variable::r()); }
    static Poly spectral(int id) { return var(Variable::spectral(id)); }
    static Poly monomial(GaussianRational c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussianRational constant_term() const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly scaled(const GaussianRational& c) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Formal partial derivative with respect to v.
    Poly partial(const Variable& v) const;

    /// Exact evaluation; every variable of the polynomial must be assigned.
    GaussianRational evaluate(const std::map<Variable, GaussianRational>& assignment) const;

    /// Replaces each mapped variable by the given polynomial; unmapped
    /// variables are left alone.
    Poly substitute(const std::map<Variable, Poly>& table) const;

    /// Generic derivation: sum over variables v of partial(v) * image(v).
    /// image returning nullptr means the variable is annihilated (constant).
    Poly derive(const std::function<const Poly*(const Variable&)>& image) const;

    /// Total-derivative jet raise in the given time: every non-spectral
    /// variable maps to itself with the jet raised.
    Poly jet_raise(int time) const;

    /// True iff every monomial has equal total E-degree and F-degree.
    /// Requires a polynomial in jet-free E/F variables only.
    bool monomial_balance() const;

    std::set<Variable> variables() const;
    /// Largest phase index among E/F variables (0 if none).
    int max_ef_index() const;
    bool has_jet_variable() const;
    bool only_kinds(std::initializer_list<VarKind> kinds) const;

    /// Canonical text form, e.g. "(-2i)*e2*f2 + (-1)*e1^2*f1^2"; "0" if zero.
    std::string str() const;

private:
    void insert(const Monomial& m, const GaussianRational& c);
    TermMap terms_;
};

inline Poly operator*(const GaussianRational& c, const Poly& p) { return p.scaled(c); }

}  // namespace aknsmf
