#include "aknsmf/bicomplex.hpp"

#include <algorithm>
#include <map>

namespace aknsmf {

namespace {

// Sorts legs in place, returns the permutation parity (+1/-1), or 0 if a
// repeated leg annihilates the term. Insertion sort keeps the swap count.
template <typename T, typename Less>
int sort_parity(std::vector<T>& legs, Less less) {
    int sign = 1;
    for (size_t i = 1; i < legs.size(); ++i) {
        size_t j = i;
        while (j > 0 && less(legs[j], legs[j - 1])) {
            std::swap(legs[j], legs[j - 1]);
            sign = -sign;
            --j;
        }
    }
    for (size_t i = 1; i < legs.size(); ++i)
        if (!less(legs[i - 1], legs[i]) && !less(legs[i], legs[i - 1])) return 0;
    return sign;
}

struct LegKey {
    std::vector<Variable> v;
    std::vector<int> h;
    bool operator<(const LegKey& o) const {
        if (v.size() != o.v.size()) return v.size() < o.v.size();
        if (h.size() != o.h.size()) return h.size() < o.h.size();
        for (size_t i = 0; i < v.size(); ++i) {
            int c = v[i].cmp(o.v[i]);
            if (c != 0) return c < 0;
        }
        return h < o.h;
    }
};

}  // namespace

VBForm canonicalized(std::vector<VBTerm> raw) {
    std::map<LegKey, Poly> acc;
    for (VBTerm& t : raw) {
        if (t.coeff.is_zero()) continue;
        int sv = sort_parity(t.vlegs, [](const Variable& a, const Variable& b) { return a < b; });
        if (sv == 0) continue;
        int sh = sort_parity(t.hlegs, [](int a, int b) { return a < b; });
        if (sh == 0) continue;
        Poly c = sv * sh == 1 ? std::move(t.coeff) : -t.coeff;
        LegKey key{std::move(t.vlegs), std::move(t.hlegs)};
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(std::move(key), std::move(c));
        else
            it->second += c;
    }
    VBForm w;
    for (auto& [key, c] : acc) {
        if (c.is_zero()) continue;
        w.terms_.push_back(VBTerm{std::move(c), key.v, key.h});
    }
    return w;
}

VBForm VBForm::from_poly(Poly p) {
    VBForm w;
    if (!p.is_zero()) w.terms_.push_back(VBTerm{std::move(p), {}, {}});
    return w;
}

VBForm VBForm::vertical(const Variable& v) {
    VBForm w;
    w.terms_.push_back(VBTerm{Poly(1), {v}, {}});
    return w;
}

VBForm VBForm::horizontal(int t) {
    VBForm w;
    w.terms_.push_back(VBTerm{Poly(1), {}, {t}});
    return w;
}

VBForm VBForm::term(Poly coeff, std::vector<Variable> vlegs, std::vector<int> hlegs) {
    return canonicalized({VBTerm{std::move(coeff), std::move(vlegs), std::move(hlegs)}});
}

VBForm VBForm::operator-() const {
    VBForm w(*this);
    for (VBTerm& t : w.terms_) t.coeff = -t.coeff;
    return w;
}

VBForm operator+(const VBForm& a, const VBForm& b) {
    std::vector<VBTerm> raw = a.terms_;
    raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
    return canonicalized(std::move(raw));
}

VBForm operator-(const VBForm& a, const VBForm& b) { return a + (-b); }

VBForm VBForm::scaled(const Poly& c) const {
    std::vector<VBTerm> raw = terms_;
    for (VBTerm& t : raw) t.coeff = t.coeff * c;
    return canonicalized(std::move(raw));
}

VBForm VBForm::scaled(const GaussianRational& c) const {
    std::vector<VBTerm> raw = terms_;
    for (VBTerm& t : raw) t.coeff = t.coeff.scaled(c);
    return canonicalized(std::move(raw));
}

VBForm wedge(const VBForm& a, const VBForm& b) {
    std::vector<VBTerm> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const VBTerm& ta : a.terms_) {
        for (const VBTerm& tb : b.terms_) {
            VBTerm t;
            t.coeff = ta.coeff * tb.coeff;
            // legs are stored verticals-first; moving tb's verticals past
            // ta's horizontals costs (-1)^{v(b) * h(a)}
            if ((tb.vdeg() * ta.hdeg()) % 2 != 0) t.coeff = -t.coeff;
            t.vlegs = ta.vlegs;
            t.vlegs.insert(t.vlegs.end(), tb.vlegs.begin(), tb.vlegs.end());
            t.hlegs = ta.hlegs;
            t.hlegs.insert(t.hlegs.end(), tb.hlegs.begin(), tb.hlegs.end());
            raw.push_back(std::move(t));
        }
    }
    return canonicalized(std::move(raw));
}

bool VBForm::operator==(const VBForm& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].coeff == o.terms_[i].coeff) || terms_[i].vlegs != o.terms_[i].vlegs ||
            terms_[i].hlegs != o.terms_[i].hlegs)
            return false;
    }
    return true;
}

Poly VBForm::coefficient_of(const std::vector<Variable>& vlegs, const std::vector<int>& hlegs) const {
    VBForm probe = VBForm::term(Poly(1), vlegs, hlegs);
    if (probe.terms_.empty()) throw Error("coefficient_of: degenerate leg combination");
    const VBTerm& p = probe.terms_[0];
    bool flip = !p.coeff.constant_term().is_one();
    for (const VBTerm& t : terms_) {
        if (t.vlegs == p.vlegs && t.hlegs == p.hlegs) return flip ? -t.coeff : t.coeff;
    }
    return Poly();
}

VBForm VBForm::horizontal_pair_component(int i, int j) const {
    if (i >= j) throw Error("horizontal_pair_component expects i < j");
    std::vector<VBTerm> raw;
    for (const VBTerm& t : terms_) {
        if (t.hlegs == std::vector<int>{i, j}) raw.push_back(VBTerm{t.coeff, t.vlegs, {}});
    }
    return canonicalized(std::move(raw));
}

std::string VBForm::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const VBTerm& t : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string c = t.coeff.str();
        out += t.coeff.term_count() == 1 ? c : "(" + c + ")";
        bool first_leg = true;
        for (const Variable& v : t.vlegs) {
            out += (first_leg ? " * " : " ∧ ") + ("δ[" + v.str() + "]");
            first_leg = false;
        }
        for (int h : t.hlegs) {
            out += (first_leg ? " * " : " ∧ ") + ("dx[" + std::to_string(h) + "]");
            first_leg = false;
        }
    }
    return out;
}

VBForm vertical_delta(const VBForm& w) {
    std::vector<VBTerm> raw;
    for (const VBTerm& t : w.terms()) {
        for (const Variable& v : t.coeff.variables()) {
            if (v.is_spectral()) continue;
            Poly dc = t.coeff.partial(v);
            if (dc.is_zero()) continue;
            VBTerm nt;
            nt.coeff = std::move(dc);
            nt.vlegs.reserve(t.vlegs.size() + 1);
            nt.vlegs.push_back(v);
            nt.vlegs.insert(nt.vlegs.end(), t.vlegs.begin(), t.vlegs.end());
            nt.hlegs = t.hlegs;
            raw.push_back(std::move(nt));
        }
    }
    return canonicalized(std::move(raw));
}

VBForm horizontal_d(const VBForm& w, const std::vector<int>& times) {
    std::vector<VBTerm> raw;
    for (const VBTerm& t : w.terms()) {
        for (int time : times) {
            // d of the coefficient: total derivative, dx^time leg in front
            Poly dc = t.coeff.jet_raise(time);
            if (!dc.is_zero()) {
                VBTerm nt;
                nt.coeff = std::move(dc);
                nt.vlegs = t.vlegs;
                nt.hlegs.reserve(t.hlegs.size() + 1);
                nt.hlegs.push_back(time);
                nt.hlegs.insert(nt.hlegs.end(), t.hlegs.begin(), t.hlegs.end());
                // the new dx leg starts in front of all legs; moving it past
                // the vertical block costs (-1)^{p}
                if (t.vdeg() % 2 != 0) nt.coeff = -nt.coeff;
                raw.push_back(std::move(nt));
            }
            // d acting on each vertical leg: d(delta v) = -delta(v+e_time) ^ dx^time
            for (size_t m = 0; m < t.vlegs.size(); ++m) {
                VBTerm nt;
                nt.coeff = (m % 2 == 0) ? -t.coeff : t.coeff;
                nt.vlegs = t.vlegs;
                nt.vlegs[m] = t.vlegs[m].raised(time);
                // the dx^time leg sits right after position m in the leg
                // sequence; move it past the remaining verticals
                size_t after = t.vlegs.size() - m - 1;
                if (after % 2 != 0) nt.coeff = -nt.coeff;
                nt.hlegs.reserve(t.hlegs.size() + 1);
                nt.hlegs.push_back(time);
                nt.hlegs.insert(nt.hlegs.end(), t.hlegs.begin(), t.hlegs.end());
                raw.push_back(std::move(nt));
            }
            // d(dx) = 0
        }
    }
    return canonicalized(std::move(raw));
}

VectorField VectorField::term(Poly coeff, std::vector<VFGenerator> factors) {
    VectorField x;
    if (!coeff.is_zero()) x.terms_.push_back(VFTerm{std::move(coeff), std::move(factors)});
    return x;
}

VectorField& VectorField::operator+=(const VectorField& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

bool VectorField::is_zero() const {
    for (const VFTerm& t : terms_)
        if (!t.coeff.is_zero()) return false;
    return true;
}

std::string VectorField::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const VFTerm& t : terms_) {
        if (t.coeff.is_zero()) continue;
        if (!first) out += " + ";
        first = false;
        std::string c = t.coeff.str();
        out += t.coeff.term_count() == 1 ? c : "(" + c + ")";
        for (const VFGenerator& g : t.factors) {
            out += g.vertical ? " ∧ ∂[" + g.var.str() + "]" : " ∧ ∂x[" + std::to_string(g.time) + "]";
        }
    }
    return out;
}

namespace {

// i(g) on a single canonical term: sum over legs with alternating signs.
// Verticals precede horizontals, so a horizontal leg at position m sees
// p vertical legs plus its horizontal predecessors in front of it.
std::vector<VBTerm> contract_generator(const VFGenerator& g, const VBTerm& t) {
    std::vector<VBTerm> out;
    if (g.vertical) {
        for (size_t m = 0; m < t.vlegs.size(); ++m) {
            if (t.vlegs[m] != g.var) continue;
            VBTerm nt;
            nt.coeff = (m % 2 == 0) ? t.coeff : -t.coeff;
            nt.vlegs = t.vlegs;
            nt.vlegs.erase(nt.vlegs.begin() + static_cast<long>(m));
            nt.hlegs = t.hlegs;
            out.push_back(std::move(nt));
            break;  // canonical legs are distinct
        }
    } else {
        for (size_t m = 0; m < t.hlegs.size(); ++m) {
            if (t.hlegs[m] != g.time) continue;
            size_t pos = t.vlegs.size() + m;
            VBTerm nt;
            nt.coeff = (pos % 2 == 0) ? t.coeff : -t.coeff;
            nt.vlegs = t.vlegs;
            nt.hlegs = t.hlegs;
            nt.hlegs.erase(nt.hlegs.begin() + static_cast<long>(m));
            out.push_back(std::move(nt));
            break;
        }
    }
    return out;
}

}  // namespace

VBForm interior(const VectorField& xi, const VBForm& w) {
    std::vector<VBTerm> raw;
    for (const VFTerm& x : xi.terms()) {
        // i(g1 ^ ... ^ gr) = i(g1) o ... o i(gr): apply the last factor first
        std::vector<VBTerm> cur(w.terms().begin(), w.terms().end());
        for (auto it = x.factors.rbegin(); it != x.factors.rend(); ++it) {
            std::vector<VBTerm> next;
            for (const VBTerm& t : cur) {
                auto got = contract_generator(*it, t);
                next.insert(next.end(), got.begin(), got.end());
            }
            cur = std::move(next);
        }
        for (VBTerm& t : cur) {
            t.coeff = t.coeff * x.coeff;
            raw.push_back(std::move(t));
        }
    }
    return canonicalized(std::move(raw));
}

VBForm vertical_lift_contract(int k, const VBForm& w) {
    std::vector<VBTerm> raw;
    for (const VBTerm& t : w.terms()) {
        for (size_t m = 0; m < t.vlegs.size(); ++m) {
            VBTerm nt;
            Poly raised = Poly::var(t.vlegs[m].raised(k));
            nt.coeff = t.coeff * raised;
            if (m % 2 != 0) nt.coeff = -nt.coeff;
            nt.vlegs = t.vlegs;
            nt.vlegs.erase(nt.vlegs.begin() + static_cast<long>(m));
            nt.hlegs = t.hlegs;
            raw.push_back(std::move(nt));
        }
    }
    return canonicalized(std::move(raw));
}

namespace {

class Reducer {
public:
    explicit Reducer(const FlowSet& flows) : flows_(&flows) {}

    const Poly& variable(const Variable& v) {
        auto it = cache_.find(v);
        if (it != cache_.end()) return it->second;
        Poly result;
        if (!v.has_jet()) {
            if (v.kind != VarKind::E && v.kind != VarKind::F)
                throw Error("onshell_reduce: unsupported variable " + v.str());
            result = Poly::var(v);
        } else {
            if (v.kind != VarKind::E && v.kind != VarKind::F)
                throw Error("onshell_reduce: jet on non-phase variable " + v.str());
            int time = v.jet.front().first;  // lowest time label, fixed order
            Variable lowered{v.kind, v.index, jet_lowered(v.jet, time)};
            Poly inner = variable(lowered);
            result = flows_->apply(time, inner);
        }
        return cache_.emplace(v, std::move(result)).first->second;
    }

    Poly poly(const Poly& p) {
        std::map<Variable, Poly> table;
        for (const Variable& v : p.variables()) {
            if (v.is_spectral()) continue;
            if (v.has_jet()) table.emplace(v, variable(v));
        }
        return table.empty() ? p : p.substitute(table);
    }

private:
    const FlowSet* flows_;
    std::map<Variable, Poly> cache_;
};

}  // namespace

Poly onshell_reduce(const Poly& p, const FlowSet& flows) {
    Reducer red(flows);
    return red.poly(p);
}

namespace {

// Shared by on-shell reduction and chart mapping: rewrites coefficients by
// `map_poly` and expands each vertical leg delta(v) through delta of
// map_var(v) (multilinear in the legs).
template <typename MapPoly, typename MapVar>
VBForm rewrite_form(const VBForm& w, MapPoly map_poly, MapVar map_var) {
    std::vector<VBTerm> raw;
    for (const VBTerm& t : w.terms()) {
        std::vector<VBTerm> partial{VBTerm{map_poly(t.coeff), {}, t.hlegs}};
        for (const Variable& leg : t.vlegs) {
            Poly image = map_var(leg);
            std::vector<VBTerm> next;
            for (const VBTerm& pt : partial) {
                for (const Variable& w2 : image.variables()) {
                    Poly dc = image.partial(w2);
                    if (dc.is_zero()) continue;
                    VBTerm nt = pt;
                    nt.coeff = nt.coeff * dc;
                    nt.vlegs.push_back(w2);  // keeps the original leg position
                    next.push_back(std::move(nt));
                }
            }
            partial = std::move(next);
        }
        raw.insert(raw.end(), partial.begin(), partial.end());
    }
    return canonicalized(std::move(raw));
}

}  // namespace

VBForm onshell_reduce(const VBForm& w, const FlowSet& flows) {
    Reducer red(flows);
    return rewrite_form(
        w, [&red](const Poly& p) { return red.poly(p); },
        [&red](const Variable& v) { return red.variable(v); });
}

VBForm ef_to_qr(const QrChart& chart, const VBForm& w) {
    return rewrite_form(
        w, [&chart](const Poly& p) { return chart.ef_to_qr(p); },
        [&chart](const Variable& v) { return chart.ef_to_qr(Poly::var(v)); });
}

}  // namespace aknsmf
