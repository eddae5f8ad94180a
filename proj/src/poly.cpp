#include "aknsmf/poly.hpp"

#include <algorithm>

namespace aknsmf {

JetIndex jet_raised(const JetIndex& jet, int time) {
    JetIndex out;
    out.reserve(jet.size() + 1);
    bool placed = false;
    for (const auto& [t, c] : jet) {
        if (t == time) {
            out.emplace_back(t, c + 1);
            placed = true;
        } else {
            if (!placed && t > time) {
                out.emplace_back(time, 1);
                placed = true;
            }
            out.emplace_back(t, c);
        }
    }
    if (!placed) out.emplace_back(time, 1);
    return out;
}

JetIndex jet_lowered(const JetIndex& jet, int time) {
    JetIndex out;
    out.reserve(jet.size());
    bool found = false;
    for (const auto& [t, c] : jet) {
        if (t == time) {
            found = true;
            if (c > 1) out.emplace_back(t, c - 1);
        } else {
            out.emplace_back(t, c);
        }
    }
    if (!found) throw Error("jet_lowered: no derivative in time " + std::to_string(time));
    return out;
}

int jet_total(const JetIndex& jet) {
    int n = 0;
    for (const auto& [t, c] : jet) n += c;
    return n;
}

std::string jet_str(const JetIndex& jet) {
    if (jet.empty()) return "";
    if (jet.size() == 1 && jet[0].first == 1) return "_" + std::string(jet[0].second, '1');
    std::string out = "_d{";
    bool first = true;
    for (const auto& [t, c] : jet) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(t) + ":" + std::to_string(c);
    }
    out += "}";
    return out;
}

Variable Variable::e(int j, JetIndex jet) {
    if (j < 1) throw Error("phase index must be >= 1");
    return Variable{VarKind::E, j, std::move(jet)};
}

Variable Variable::f(int j, JetIndex jet) {
    if (j < 1) throw Error("phase index must be >= 1");
    return Variable{VarKind::F, j, std::move(jet)};
}

Variable Variable::q(JetIndex jet) { return Variable{VarKind::Q, 0, std::move(jet)}; }
Variable Variable::r(JetIndex jet) { return Variable{VarKind::R, 0, std::move(jet)}; }

Variable Variable::spectral(int id) {
    if (id < 1) throw Error("spectral parameter id must be >= 1");
    return Variable{VarKind::Spectral, id, {}};
}

Variable Variable::raised(int time) const {
    if (kind == VarKind::Spectral) throw Error("spectral parameters carry no jets");
    return Variable{kind, index, jet_raised(jet, time)};
}

Variable Variable::base() const { return Variable{kind, index, {}}; }

int Variable::cmp(const Variable& o) const {
    if (kind != o.kind) return kind < o.kind ? -1 : 1;
    if (index != o.index) return index < o.index ? -1 : 1;
    // lexicographic over ascending time labels: first differing count decides
    size_t i = 0, j = 0;
    while (i < jet.size() || j < o.jet.size()) {
        int ta = i < jet.size() ? jet[i].first : INT32_MAX;
        int tb = j < o.jet.size() ? o.jet[j].first : INT32_MAX;
        if (ta < tb) return 1;   // this has a nonzero count at an earlier time
        if (tb < ta) return -1;
        if (jet[i].second != o.jet[j].second)
            return jet[i].second < o.jet[j].second ? -1 : 1;
        ++i;
        ++j;
    }
    return 0;
}

std::string Variable::str() const {
    std::string base;
    switch (kind) {
        case VarKind::E: base = "e" + std::to_string(index); break;
        case VarKind::F: base = "f" + std::to_string(index); break;
        case VarKind::Q: base = "q"; break;
        case VarKind::R: base = "r"; break;
        case VarKind::Spectral:
            if (index == 1) return "lam";
            if (index == 2) return "mu";
            if (index == 3) return "nu";
            return "s" + std::to_string(index);
    }
    return base + jet_str(jet);
}

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

bool TermLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = a[i].first.cmp(b[j].first);
        if (c < 0) return true;   // a has positive exponent where b has zero
        if (c > 0) return false;
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i;
        ++j;
    }
    // equal degrees force both to exhaust together; kept total anyway
    return i < a.size();
}

Poly::Poly(const GaussianRational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(const Variable& v) {
    Poly p;
    p.terms_.emplace(Monomial{{v, 1}}, GaussianRational(1));
    return p;
}

Poly Poly::monomial(GaussianRational c, Monomial m) {
    Poly p;
    if (!c.is_zero()) {
        std::sort(m.begin(), m.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        p.terms_.emplace(std::move(m), std::move(c));
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GaussianRational Poly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? GaussianRational() : it->second;
}

void Poly::insert(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) insert(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) insert(m, -c);
    return *this;
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = a[i].first.cmp(b[j].first);
        if (c < 0) {
            out.push_back(a[i++]);
        } else if (c > 0) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            GaussianRational c = ca * cb;
            if (!c.is_zero()) {
                Monomial m = mono_mul(ma, mb);
                auto it = p.terms_.find(m);
                if (it == p.terms_.end()) {
                    p.terms_.emplace(std::move(m), std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero()) p.terms_.erase(it);
                }
            }
        }
    }
    return p;
}

Poly Poly::scaled(const GaussianRational& c) const {
    Poly p;
    if (c.is_zero()) return p;
    for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
    return p;
}

Poly Poly::partial(const Variable& v) const {
    Poly p;
    for (const auto& [m, c] : terms_) {
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i].first == v) {
                Monomial reduced;
                reduced.reserve(m.size());
                for (size_t j = 0; j < m.size(); ++j) {
                    if (j == i) {
                        if (m[j].second > 1) reduced.emplace_back(m[j].first, m[j].second - 1);
                    } else {
                        reduced.push_back(m[j]);
                    }
                }
                p.insert(reduced, c * GaussianRational(m[i].second));
                break;
            }
        }
    }
    return p;
}

GaussianRational Poly::evaluate(const std::map<Variable, GaussianRational>& assignment) const {
    GaussianRational total;
    for (const auto& [m, c] : terms_) {
        GaussianRational term = c;
        for (const auto& [v, e] : m) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw Error("evaluate: missing assignment for variable " + v.str());
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

Poly Poly::substitute(const std::map<Variable, Poly>& table) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Poly term(c);
        Monomial untouched;
        for (const auto& [v, e] : m) {
            auto it = table.find(v);
            if (it == table.end()) {
                untouched.emplace_back(v, e);
            } else {
                for (int k = 0; k < e; ++k) term *= it->second;
            }
        }
        if (!untouched.empty()) term *= Poly::monomial(GaussianRational(1), untouched);
        out += term;
    }
    return out;
}

Poly Poly::derive(const std::function<const Poly*(const Variable&)>& image) const {
    Poly out;
    for (const Variable& v : variables()) {
        const Poly* img = image(v);
        if (img == nullptr || img->is_zero()) continue;
        out += partial(v) * *img;
    }
    return out;
}

Poly Poly::jet_raise(int time) const {
    Poly out;
    for (const Variable& v : variables()) {
        if (v.is_spectral()) continue;
        out += partial(v) * Poly::var(v.raised(time));
    }
    return out;
}

bool Poly::monomial_balance() const {
    for (const auto& [m, c] : terms_) {
        int e_deg = 0, f_deg = 0;
        for (const auto& [v, e] : m) {
            if (v.has_jet() || (v.kind != VarKind::E && v.kind != VarKind::F))
                throw Error("monomial_balance: non-phase variable " + v.str());
            (v.kind == VarKind::E ? e_deg : f_deg) += e;
        }
        if (e_deg != f_deg) return false;
    }
    return true;
}

std::set<Variable> Poly::variables() const {
    std::set<Variable> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vars.insert(v);
    return vars;
}

int Poly::max_ef_index() const {
    int mx = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (v.kind == VarKind::E || v.kind == VarKind::F) mx = std::max(mx, v.index);
    return mx;
}

bool Poly::has_jet_variable() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (v.has_jet()) return true;
    return false;
}

bool Poly::only_kinds(std::initializer_list<VarKind> kinds) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (std::find(kinds.begin(), kinds.end(), v.kind) == kinds.end()) return false;
    return true;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ")";
        for (const auto& [v, e] : m) {
            out += "*" + v.str();
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace aknsmf
