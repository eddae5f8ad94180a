#include "aknsmf/poisson.hpp"

#include "aknsmf/multiform.hpp"

#include <algorithm>

namespace aknsmf {

namespace {

const Poly& zero_poly() {
    static const Poly z;
    return z;
}

// "constant" for the Hamiltonian criterion: free of phase/field content
// (inert spectral parameters are allowed).
bool phase_constant(const Poly& p) {
    return p.only_kinds({VarKind::Spectral});
}

// Converts a polynomial part in lambda (stored powers z^{-d}..z^0) into a
// Poly in the given spectral variable.
Poly series_to_poly(const TruncSeries& s, int spectral_id) {
    if (s.is_zero()) return Poly();
    if (s.high() > 0) throw Error("series_to_poly: series has positive z powers");
    Poly lam = Poly::spectral(spectral_id);
    Poly out, lam_pow(1);
    for (int m = 0; m >= s.low(); --m) {
        out += s.coeff(m) * lam_pow;
        lam_pow = lam_pow * lam;
    }
    return out;
}

}  // namespace

PolyMat mat_sub(const PolyMat& a, const PolyMat& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
    PolyMat m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m[i * 2 + j] = a[i * 2 + 0] * b[0 * 2 + j] + a[i * 2 + 1] * b[1 * 2 + j];
    return m;
}

PolyMat mat_commutator(const PolyMat& a, const PolyMat& b) {
    return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

bool mat_is_zero(const PolyMat& m) {
    return m[0].is_zero() && m[1].is_zero() && m[2].is_zero() && m[3].is_zero();
}

const Poly& HamOneForm::comp(int k) const {
    auto it = comps.find(k);
    return it == comps.end() ? zero_poly() : it->second;
}

HamOneForm HamOneForm::conservation_form(const AknsFrame& frame, int max_time) {
    frame.require_order(max_time + 1, "conservation_form(max_time=" + std::to_string(max_time) + ")");
    HamOneForm a;
    a.max_time = max_time;
    for (int k = 0; k <= max_time; ++k) {
        Poly v = frame.a_coeff(k + 1);
        if (!v.is_zero()) a.comps[k] = std::move(v);
    }
    return a;
}

HamiltonianVerdict is_hamiltonian_oneform(const HamOneForm& F) {
    HamiltonianVerdict v;
    if (!phase_constant(F.comp(0))) {
        return {false, "component 0 is not constant: " + F.comp(0).str(), {}};
    }
    for (int k = 1; k <= F.max_time; ++k) {
        const Poly& fk = F.comp(k);
        if (fk.has_jet_variable() || !fk.only_kinds({VarKind::E, VarKind::F, VarKind::Spectral}))
            return {false, "component " + std::to_string(k) + " is not a phase polynomial", {}};
        if (fk.max_ef_index() > k)
            return {false,
                    "component " + std::to_string(k) + " depends on index " +
                        std::to_string(fk.max_ef_index()) + " beyond " + std::to_string(k),
                    {}};
    }
    for (int k = 1; k < F.max_time; ++k) {
        for (int j = 1; j <= k; ++j) {
            Poly de = F.comp(k).partial(Variable::e(j)) - F.comp(k + 1).partial(Variable::e(j + 1));
            Poly df = F.comp(k).partial(Variable::f(j)) - F.comp(k + 1).partial(Variable::f(j + 1));
            if (!de.is_zero() || !df.is_zero())
                return {false,
                        "shift condition fails between components " + std::to_string(k) + " and " +
                            std::to_string(k + 1) + " at index " + std::to_string(j),
                        {}};
        }
    }
    for (int k = 1; k <= F.max_time; ++k) {
        Poly a = -F.comp(k).partial(Variable::f(1));
        Poly b = F.comp(k).partial(Variable::e(1));
        if (!a.is_zero()) v.field += VectorField::term(a, {VFGenerator::partial(Variable::e(k))});
        if (!b.is_zero()) v.field += VectorField::term(b, {VFGenerator::partial(Variable::f(k))});
    }
    return v;
}

VectorField hamiltonian_vf_zeroform(const Poly& H) {
    if (H.has_jet_variable() || !H.only_kinds({VarKind::E, VarKind::F, VarKind::Spectral}))
        throw Error("hamiltonian_vf_zeroform: argument must be a phase polynomial");
    VectorField xi;
    int top = H.max_ef_index();
    for (int i = 1; i <= top; ++i) {
        Poly a = -H.partial(Variable::f(i));
        Poly b = H.partial(Variable::e(i));
        if (!a.is_zero())
            xi += VectorField::term(a, {VFGenerator::partial(Variable::e(1)), VFGenerator::partial_time(i)});
        if (!b.is_zero())
            xi += VectorField::term(b, {VFGenerator::partial(Variable::f(1)), VFGenerator::partial_time(i)});
    }
    return xi;
}

Poly single_time_pb(const Poly& F, const Poly& G, int k) {
    if (k < 0) throw Error("single_time_pb: time index must be >= 0");
    for (const Poly* p : {&F, &G}) {
        if (p->has_jet_variable() || !p->only_kinds({VarKind::E, VarKind::F, VarKind::Spectral}))
            throw Error("single_time_pb: arguments must be phase polynomials");
        if (p->max_ef_index() > k)
            throw Error("single_time_pb: phase index " + std::to_string(p->max_ef_index()) +
                        " exceeds time " + std::to_string(k));
    }
    Poly out;
    for (int j = 1; j <= k; ++j) {
        out += F.partial(Variable::f(j)) * G.partial(Variable::e(k - j + 1));
        out -= F.partial(Variable::e(j)) * G.partial(Variable::f(k - j + 1));
    }
    return out;
}

HamOneForm multi_time_pb(const HamOneForm& F, const HamOneForm& G) {
    HamiltonianVerdict vf = is_hamiltonian_oneform(F);
    if (!vf.ok) throw Error("multi_time_pb: first argument not Hamiltonian: " + vf.reason);
    HamiltonianVerdict vg = is_hamiltonian_oneform(G);
    if (!vg.ok) throw Error("multi_time_pb: second argument not Hamiltonian: " + vg.reason);
    HamOneForm out;
    out.max_time = std::min(F.max_time, G.max_time);
    for (int k = 1; k <= out.max_time; ++k) {
        Poly p = single_time_pb(F.comp(k), G.comp(k), k);
        if (!p.is_zero()) out.comps[k] = std::move(p);
    }
    return out;
}

HamOneForm multi_time_pb_interior(const HamOneForm& F, const HamOneForm& G) {
    HamiltonianVerdict vf = is_hamiltonian_oneform(F);
    if (!vf.ok) throw Error("multi_time_pb_interior: first argument not Hamiltonian: " + vf.reason);
    VBForm delta_g;
    for (const auto& [k, gk] : G.comps)
        delta_g = delta_g + wedge(vertical_delta(VBForm::from_poly(gk)), VBForm::horizontal(k));
    VBForm bracket = -interior(vf.field, delta_g);
    HamOneForm out;
    out.max_time = std::min(F.max_time, G.max_time);
    for (const VBTerm& t : bracket.terms()) {
        if (t.vdeg() != 0 || t.hdeg() != 1)
            throw Error("multi_time_pb_interior: unexpected term degree");
        if (t.hlegs[0] <= out.max_time) out.comps[t.hlegs[0]] = t.coeff;
    }
    return out;
}

Poly multi_time_pb(const Poly& H, const HamOneForm& G) {
    VectorField xi = hamiltonian_vf_zeroform(H);
    VBForm delta_g;
    for (const auto& [k, gk] : G.comps)
        delta_g = delta_g + wedge(vertical_delta(VBForm::from_poly(gk)), VBForm::horizontal(k));
    VBForm bracket = interior(xi, delta_g);
    if (bracket.is_zero()) return Poly();
    if (bracket.terms().size() != 1 || bracket.terms()[0].vdeg() != 0 || bracket.terms()[0].hdeg() != 0)
        throw Error("multi_time_pb: 0-form bracket has unexpected degree");
    return bracket.terms()[0].coeff;
}

Poly multi_time_pb(const HamOneForm& F, const Poly& H) {
    HamiltonianVerdict vf = is_hamiltonian_oneform(F);
    if (!vf.ok) throw Error("multi_time_pb: first argument not Hamiltonian: " + vf.reason);
    VBForm bracket = -interior(vf.field, vertical_delta(VBForm::from_poly(H)));
    if (bracket.is_zero()) return Poly();
    if (bracket.terms().size() != 1 || bracket.terms()[0].vdeg() != 0 || bracket.terms()[0].hdeg() != 0)
        throw Error("multi_time_pb: 0-form bracket has unexpected degree");
    return bracket.terms()[0].coeff;
}

PolyMat lax_poly(const AknsFrame& frame, int k, int spectral_id) {
    MatrixSeries qk = lax_matrix(frame, k);
    return {series_to_poly(qk.at(0, 0), spectral_id), series_to_poly(qk.at(0, 1), spectral_id),
            series_to_poly(qk.at(1, 0), spectral_id), series_to_poly(qk.at(1, 1), spectral_id)};
}

LaxForm lax_form(const AknsFrame& frame, int max_time, int spectral_id) {
    LaxForm w;
    w.spectral_id = spectral_id;
    w.max_time = max_time;
    for (int k = 0; k <= max_time; ++k) w.comps[k] = lax_poly(frame, k, spectral_id);
    return w;
}

HamOneForm lax_entry_form(const LaxForm& W, int entry) {
    int idx;
    switch (entry) {
        case 0: idx = 0; break;  // sigma_3 part: (1,1) entry = a
        case 1: idx = 1; break;  // sigma_+ part: (1,2) entry = b
        case 2: idx = 2; break;  // sigma_- part: (2,1) entry = c
        default: throw Error("lax_entry_form: entry must be 0 (a), 1 (b) or 2 (c)");
    }
    HamOneForm out;
    out.max_time = W.max_time;
    for (const auto& [k, mat] : W.comps)
        if (!mat[idx].is_zero()) out.comps[k] = mat[idx];
    return out;
}

PolyMat multi_time_pb_matrix(const Poly& H, const LaxForm& W) {
    PolyMat out{};
    for (int e = 0; e < 4; ++e) {
        HamOneForm column;
        column.max_time = W.max_time;
        for (const auto& [k, mat] : W.comps)
            if (!mat[e].is_zero()) column.comps[k] = mat[e];
        out[e] = multi_time_pb(H, column);
    }
    return out;
}

namespace {

using Mat4 = std::array<Poly, 16>;

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Poly acc;
            for (int l = 0; l < 4; ++l) acc += a[i * 4 + l] * b[l * 4 + j];
            m[i * 4 + j] = std::move(acc);
        }
    return m;
}

Mat4 mat4_sub(const Mat4& a, const Mat4& b) {
    Mat4 m{};
    for (int i = 0; i < 16; ++i) m[i] = a[i] - b[i];
    return m;
}

// Basis order (1x1, 1x2, 2x1, 2x2): row index (alpha, beta), column (gamma, delta).
int t_idx(int alpha, int beta) { return alpha * 2 + beta; }

}  // namespace

CheckResult rmatrix_check(const AknsFrame& frame, int k) {
    frame.require_order(std::max(k, 1), "rmatrix_check(k=" + std::to_string(k) + ")");
    PolyMat q_lam = lax_poly(frame, k, 1);
    PolyMat q_mu = lax_poly(frame, k, 2);
    Poly lam = Poly::spectral(1), mu = Poly::spectral(2);

    // M[(ab),(gd)] = { Q^{(k)}(lam)_{ag}, Q^{(k)}(mu)_{bd} }_k
    Mat4 m{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g)
                for (int d = 0; d < 2; ++d)
                    m[t_idx(a, b) * 4 + t_idx(g, d)] =
                        single_time_pb(q_lam[a * 2 + g], q_mu[b * 2 + d], k);

    // C = -[P12, Q(lam) x I + I x Q(mu)]
    Mat4 p12{}, big{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g)
                for (int d = 0; d < 2; ++d) {
                    if (a == d && b == g) p12[t_idx(a, b) * 4 + t_idx(g, d)] = Poly(1);
                    Poly entry;
                    if (b == d) entry += q_lam[a * 2 + g];
                    if (a == g) entry += q_mu[b * 2 + d];
                    big[t_idx(a, b) * 4 + t_idx(g, d)] = std::move(entry);
                }
    Mat4 c = mat4_sub(mat4_mul(big, p12), mat4_mul(p12, big));

    CheckResult res = CheckResult::ok();
    std::map<Variable, Poly> to_lam{{Variable::spectral(2), lam}};
    Poly lam_minus_mu = lam - mu;
    for (int i = 0; i < 16; ++i) {
        res.merge(CheckResult::of(lam_minus_mu * m[i] - c[i]));
        // divisibility witness: the right-hand side vanishes on lam = mu
        res.merge(CheckResult::of(c[i].substitute(to_lam)));
    }
    return res;
}

CheckResult pb_lemma_check(const AknsFrame& frame, int k) {
    frame.require_order(std::max(k, 1), "pb_lemma_check(k=" + std::to_string(k) + ")");
    CheckResult res = CheckResult::ok();
    GaussianRational two(2);
    for (int i = 0; i <= k; ++i) {
        for (int j = 0; j <= k; ++j) {
            Poly ai = frame.a_coeff(i), aj = frame.a_coeff(j);
            Poly bi = frame.b_coeff(i), bj = frame.b_coeff(j);
            Poly ci = frame.c_coeff(i), cj = frame.c_coeff(j);
            int t = i + j - k - 1;
            Poly bt = frame.b_coeff(t), ct = frame.c_coeff(t), at = frame.a_coeff(t);
            res.merge(CheckResult::of(single_time_pb(ai, aj, k)));
            res.merge(CheckResult::of(single_time_pb(bi, bj, k)));
            res.merge(CheckResult::of(single_time_pb(ci, cj, k)));
            res.merge(CheckResult::of(single_time_pb(ai, bj, k) - bt));
            res.merge(CheckResult::of(single_time_pb(ai, cj, k) + ct));
            res.merge(CheckResult::of(single_time_pb(bi, cj, k) - at.scaled(two)));
            res.merge(CheckResult::of(single_time_pb(bi, aj, k) + bt));
            res.merge(CheckResult::of(single_time_pb(ci, aj, k) - ct));
            res.merge(CheckResult::of(single_time_pb(ci, bj, k) + at.scaled(two)));
        }
    }
    return res;
}

CheckResult zc_hamiltonian_check(const AknsFrame& frame, const FlowSet& flows, int i, int j) {
    if (!(0 <= i && i < j)) throw Error("zc_hamiltonian_check: need 0 <= i < j");
    frame.require_order(i + j + 1, "zc_hamiltonian_check(" + std::to_string(i) + "," + std::to_string(j) + ")");
    Poly h = potential_coeff(frame, i, j);
    LaxForm w = lax_form(frame, j, 1);
    PolyMat lhs = multi_time_pb_matrix(h, w);
    PolyMat rhs = mat_commutator(lax_poly(frame, i, 1), lax_poly(frame, j, 1));
    PolyMat diff = mat_sub(lhs, rhs);
    CheckResult res = CheckResult::ok();
    for (int t = 0; t < 4; ++t) res.merge(CheckResult::of(diff[t]));

    // dW = W ^ W componentwise: D_i Q^{(j)} - D_j Q^{(i)} = [Q^{(i)}, Q^{(j)}]
    PolyMat qi = lax_poly(frame, i, 1), qj = lax_poly(frame, j, 1);
    for (int t = 0; t < 4; ++t) {
        Poly zc = flows.apply(i, qj[t]) - flows.apply(j, qi[t]) - rhs[t];
        res.merge(CheckResult::of(zc));
    }
    return res;
}

CheckResult zc_generating_check(const AknsFrame& frame, int m, int n) {
    if (m < 0 || n < 0) throw Error("zc_generating_check: indices must be >= 0");
    frame.require_order(m + n + 1, "zc_generating_check(" + std::to_string(m) + "," + std::to_string(n) + ")");
    Poly lam = Poly::spectral(1);

    auto q_mat = [&](int idx) -> PolyMat {
        std::array<Poly, 4> c = frame.Q.coeff(idx);
        return {c[0], c[1], c[2], c[3]};
    };
    auto t_mat = [&](int p, int q) -> PolyMat {
        PolyMat out{};
        if (p < 0 || q < 0) return out;
        Poly h = potential_coeff(frame, p, q);
        int top = std::max({1, p, q});
        for (int k = 1; k <= top; ++k) {
            PolyMat qk = lax_poly(frame, k, 1);
            Poly hf = h.partial(Variable::f(k));
            Poly he = h.partial(Variable::e(k));
            for (int t = 0; t < 4; ++t) {
                out[t] += qk[t].partial(Variable::e(1)) * hf;
                out[t] -= qk[t].partial(Variable::f(1)) * he;
            }
        }
        return out;
    };

    PolyMat lhs = mat_commutator(q_mat(m), q_mat(n));
    PolyMat tm = t_mat(m, n), tl = t_mat(m, n - 1), tr = t_mat(m - 1, n), td = t_mat(m - 1, n - 1);
    CheckResult res = CheckResult::ok();
    for (int t = 0; t < 4; ++t) {
        Poly rhs = tm[t] - lam * (tl[t] + tr[t]) + lam * lam * td[t];
        res.merge(CheckResult::of(lhs[t] - rhs));
    }
    return res;
}

CheckResult jacobi_check(const HamOneForm& F, const HamOneForm& G, const HamOneForm& K) {
    HamOneForm fg = multi_time_pb(F, G);
    HamOneForm kf = multi_time_pb(K, F);
    HamOneForm gk = multi_time_pb(G, K);
    CheckResult res = CheckResult::ok();
    // bracket closure: inner brackets are themselves Hamiltonian 1-forms
    for (const HamOneForm* b : {&fg, &kf, &gk}) {
        HamiltonianVerdict v = is_hamiltonian_oneform(*b);
        if (!v.ok) res.merge(CheckResult::failed("bracket not Hamiltonian: " + v.reason));
    }
    if (!res.pass) return res;
    HamOneForm t1 = multi_time_pb(fg, K);
    HamOneForm t2 = multi_time_pb(kf, G);
    HamOneForm t3 = multi_time_pb(gk, F);
    for (int k = 0; k <= std::min({t1.max_time, t2.max_time, t3.max_time}); ++k)
        res.merge(CheckResult::of(t1.comp(k) + t2.comp(k) + t3.comp(k)));
    return res;
}

CheckResult jacobi_check(const HamOneForm& F, const HamOneForm& G, const Poly& H) {
    HamOneForm fg = multi_time_pb(F, G);
    CheckResult res = CheckResult::ok();
    HamiltonianVerdict v = is_hamiltonian_oneform(fg);
    if (!v.ok) return CheckResult::failed("bracket {F,G} not Hamiltonian: " + v.reason);
    Poly t1 = multi_time_pb(fg, H);          // {|{F,G}|}{H}
    Poly hf = multi_time_pb(H, F);           // {|H|}{F}, a 0-form
    Poly t2 = multi_time_pb(hf, G);          // {|{H,F}|}{G}
    Poly gh = multi_time_pb(G, H);           // {|G|}{H}, a 0-form
    Poly t3 = multi_time_pb(gh, F);          // {|{G,H}|}{F}
    res.merge(CheckResult::of(t1 + t2 + t3));
    return res;
}

}  // namespace aknsmf
