#include "aknsmf/akns.hpp"

#include <algorithm>

namespace aknsmf {

void AknsFrame::require_order(int needed, const std::string& what) const {
    if (order < needed)
        throw Error(what + ": frame order " + std::to_string(order) +
                    " insufficient, need at least " + std::to_string(needed));
}

AknsFrame build_frame(int order) {
    if (order < 1) throw Error("build_frame: order must be >= 1");
    AknsFrame fr;
    fr.order = order;

    std::vector<Poly> ec, fc;
    ec.reserve(order);
    fc.reserve(order);
    for (int j = 1; j <= order; ++j) {
        ec.push_back(Poly::e(j));
        fc.push_back(Poly::f(j));
    }
    fr.phase.e = TruncSeries::from_coeffs(1, std::move(ec), order);
    fr.phase.f = TruncSeries::from_coeffs(1, std::move(fc), order);
    fr.phase.order = order;

    GaussianRational i = GaussianRational::imag_unit();
    TruncSeries ef = fr.phase.e * fr.phase.f;
    fr.a = ef - TruncSeries::constant(i, order);
    fr.g = (TruncSeries::constant(GaussianRational(0, 2), order) - ef)
               .sqrt(GaussianRational::sqrt_two_i());
    fr.b = fr.phase.e * fr.g;
    fr.c = fr.phase.f * fr.g;

    GaussianRational inv_sqrt2i = GaussianRational::sqrt_two_i().inverse();  // (1-i)/2
    fr.phi = MatrixSeries(fr.g, fr.phase.e, -fr.phase.f, fr.g).scaled(inv_sqrt2i);
    // det phi = (g^2 + e f) / 2i = 1 exactly, so the adjugate inverse is cheap
    fr.psi = MatrixSeries(fr.g, -fr.phase.e, fr.phase.f, fr.g).scaled(inv_sqrt2i);
    fr.Q = MatrixSeries(fr.a, fr.b, fr.c, -fr.a);
    return fr;
}

MatrixSeries lax_matrix(const AknsFrame& frame, int k) {
    if (k < 0) throw Error("lax_matrix: time index must be >= 0");
    frame.require_order(k, "lax_matrix(k=" + std::to_string(k) + ")");
    return frame.Q.plus_projection(k);
}

const Poly& FlowTable::de_at(int j) const {
    if (j < 1 || j > max_index)
        throw Error("flow table for time " + std::to_string(time) + " covers indices 1.." +
                    std::to_string(max_index) + ", requested e index " + std::to_string(j));
    return de[j - 1];
}

const Poly& FlowTable::df_at(int j) const {
    if (j < 1 || j > max_index)
        throw Error("flow table for time " + std::to_string(time) + " covers indices 1.." +
                    std::to_string(max_index) + ", requested f index " + std::to_string(j));
    return df[j - 1];
}

Poly FlowTable::apply(const Poly& p) const {
    return p.derive([this](const Variable& v) -> const Poly* {
        if (v.is_spectral()) return nullptr;
        if (v.has_jet() || (v.kind != VarKind::E && v.kind != VarKind::F))
            throw Error("flow derivation expects a jet-free phase polynomial, found " + v.str());
        return v.kind == VarKind::E ? &de_at(v.index) : &df_at(v.index);
    });
}

FlowTable derive_flow(const AknsFrame& frame, int k, int max_index) {
    if (k < 0) throw Error("derive_flow: time index must be >= 0");
    if (max_index < 1) throw Error("derive_flow: max_index must be >= 1");
    frame.require_order(max_index + k, "derive_flow(k=" + std::to_string(k) + ", J=" +
                                           std::to_string(max_index) + ")");

    MatrixSeries qk = lax_matrix(frame, k);
    MatrixSeries dq = commutator(qk, frame.Q);  // entries valid through order - k
    const TruncSeries& da = dq.at(0, 0);
    const TruncSeries& db = dq.at(0, 1);

    // e = b (i - a)^{-1/2} and i - a = g^2, so
    // D_k e = (D_k b) g^{-1} + (b/2) g^{-3} D_k a, and symmetrically for f.
    TruncSeries ginv = frame.g.inverse();
    TruncSeries ginv3 = ginv * ginv * ginv;
    TruncSeries half_g3a = ginv3.scaled(GaussianRational(mpq_class(1, 2), 0)) * da;
    TruncSeries de = db * ginv + frame.b * half_g3a;
    const TruncSeries& dc = dq.at(1, 0);
    TruncSeries df = dc * ginv + frame.c * half_g3a;

    FlowTable t;
    t.time = k;
    t.max_index = max_index;
    t.de.reserve(max_index);
    t.df.reserve(max_index);
    for (int j = 1; j <= max_index; ++j) {
        t.de.push_back(de.coeff(j));
        t.df.push_back(df.coeff(j));
    }
    return t;
}

std::shared_ptr<const FlowTable> FlowSet::table(int k, int max_index) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tables_.find(k);
    if (it != tables_.end() && it->second->max_index >= max_index) return it->second;
    // grow in chunks so repeated slightly-larger requests do not rebuild
    int existing = it != tables_.end() ? it->second->max_index : 0;
    int target = std::min(frame_->order - k, std::max({max_index, 2 * existing, 4}));
    if (target < max_index)
        throw Error("flow table for time " + std::to_string(k) + " up to index " +
                    std::to_string(max_index) + " needs frame order >= " +
                    std::to_string(max_index + k) + ", have " + std::to_string(frame_->order));
    auto t = std::make_shared<FlowTable>(derive_flow(*frame_, k, target));
    tables_[k] = t;
    return t;
}

std::shared_ptr<const FlowTable> FlowSet::table(int k) const {
    int widest = frame_->order - k;
    if (widest < 1)
        throw Error("flow table for time " + std::to_string(k) + " needs frame order >= " +
                    std::to_string(k + 1) + ", have " + std::to_string(frame_->order));
    return table(k, widest);
}

Poly FlowSet::apply(int k, const Poly& p) const {
    int need = std::max(1, p.max_ef_index());
    return table(k, need)->apply(p);
}

namespace {

// Builds a, b, c as series whose coefficients are polynomials in q, r and
// their x^1 jets, by solving the x^1-flow recursion
//   [Q_0, Q_{m+1}] = d_1 Q_m - [Q_1, Q_m]
// together with the normalization a^2 + b c = -1:
//   b_{m+1} = (i/2) d_1 b_m + i q a_m
//   c_{m+1} = -(i/2) d_1 c_m + i r a_m
//   a_{m+1} = ( sum_{k=1}^{m} a_k a_{m+1-k} + sum_{k=1}^{m} b_k c_{m+1-k} ) / (2i)
struct QrRecursion {
    std::vector<Poly> a, b, c;  // index 0..order

    explicit QrRecursion(int order) {
        GaussianRational im = GaussianRational::imag_unit();
        a.assign(order + 1, Poly());
        b.assign(order + 1, Poly());
        c.assign(order + 1, Poly());
        a[0] = Poly(-im);
        if (order >= 1) {
            b[1] = Poly::q();
            c[1] = Poly::r();
        }
        GaussianRational half_i = GaussianRational(mpq_class(0), mpq_class(1, 2));
        GaussianRational inv_2i = GaussianRational(mpq_class(0), mpq_class(2)).inverse();
        for (int m = 1; m < order; ++m) {
            b[m + 1] = b[m].jet_raise(1).scaled(half_i) + (im * Poly::q()) * a[m];
            c[m + 1] = c[m].jet_raise(1).scaled(-half_i) + (im * Poly::r()) * a[m];
            Poly acc;
            for (int k = 1; k <= m; ++k) acc += a[k] * a[m + 1 - k] + b[k] * c[m + 1 - k];
            a[m + 1] = acc.scaled(inv_2i);
        }
    }
};

}  // namespace

QrChart::QrChart(int order)
    : order_(order), flows_(std::make_shared<AknsFrame>(build_frame(std::max(order + 1, 2)))) {
    if (order < 1) throw Error("QrChart: order must be >= 1");
    QrRecursion rec(order);
    qr_a_ = TruncSeries::from_coeffs(0, rec.a, order);
    qr_b_ = TruncSeries::from_coeffs(0, rec.b, order);
    qr_c_ = TruncSeries::from_coeffs(0, rec.c, order);

    // e = b (i - a)^{-1/2} with (i - a)^{1/2} expanded around sqrt(2i) = 1+i
    GaussianRational i = GaussianRational::imag_unit();
    TruncSeries i_minus_a = TruncSeries::constant(i, order) - qr_a_;
    TruncSeries ginv = i_minus_a.sqrt(GaussianRational::sqrt_two_i()).inverse();
    TruncSeries e_series = qr_b_ * ginv;
    TruncSeries f_series = qr_c_ * ginv;
    e_rows_.reserve(order);
    f_rows_.reserve(order);
    for (int j = 1; j <= order; ++j) {
        e_rows_.push_back(e_series.coeff(j));
        f_rows_.push_back(f_series.coeff(j));
    }

    GaussianRational s2i = GaussianRational::sqrt_two_i();
    sqrt2i_e1_ = Poly::e(1).scaled(s2i);
    sqrt2i_f1_ = Poly::f(1).scaled(s2i);
}

const Poly& QrChart::e_of_qr(int j) const {
    if (j < 1 || j > order_)
        throw Error("q,r chart generated to order " + std::to_string(order_) +
                    ", requested e index " + std::to_string(j));
    return e_rows_[j - 1];
}

const Poly& QrChart::f_of_qr(int j) const {
    if (j < 1 || j > order_)
        throw Error("q,r chart generated to order " + std::to_string(order_) +
                    ", requested f index " + std::to_string(j));
    return f_rows_[j - 1];
}

Poly QrChart::b_of_qr(int j) const {
    if (j < 0 || j > order_)
        throw Error("q,r chart generated to order " + std::to_string(order_) +
                    ", requested b index " + std::to_string(j));
    return qr_b_.coeff(j);
}

Poly QrChart::c_of_qr(int j) const {
    if (j < 0 || j > order_)
        throw Error("q,r chart generated to order " + std::to_string(order_) +
                    ", requested c index " + std::to_string(j));
    return qr_c_.coeff(j);
}

Poly QrChart::a_of_qr(int j) const {
    if (j < 0 || j > order_)
        throw Error("q,r chart generated to order " + std::to_string(order_) +
                    ", requested a index " + std::to_string(j));
    return qr_a_.coeff(j);
}

Poly QrChart::chart_of_variable(const Variable& v) const {
    if (v.kind != VarKind::E && v.kind != VarKind::F)
        throw Error("ef_to_qr: expression contains non-phase variable " + v.str());
    Poly row = v.kind == VarKind::E ? e_of_qr(v.index) : f_of_qr(v.index);
    for (const auto& [t, count] : v.jet)
        for (int n = 0; n < count; ++n) row = row.jet_raise(t);
    return row;
}

Poly QrChart::ef_to_qr(const Poly& p) const {
    std::map<Variable, Poly> table;
    for (const Variable& v : p.variables()) {
        if (v.is_spectral()) continue;
        table.emplace(v, chart_of_variable(v));
    }
    return p.substitute(table);
}

Poly QrChart::ef_of_qr_jet(const Variable& v) const {
    Poly out = v.kind == VarKind::Q ? sqrt2i_e1_ : sqrt2i_f1_;
    // transport by the flow derivations; the order is irrelevant because the
    // flows commute, but keep it fixed for determinism
    for (const auto& [t, count] : v.jet) {
        for (int n = 0; n < count; ++n) {
            int need = std::max(1, out.max_ef_index());
            if (need + t > flows_.frame().order)
                throw Error("qr_to_ef: jet " + v.str() + " needs chart order > " +
                            std::to_string(order_));
            out = flows_.apply(t, out);
        }
    }
    return out;
}

Poly QrChart::qr_to_ef(const Poly& p) const {
    std::map<Variable, Poly> table;
    for (const Variable& v : p.variables()) {
        if (v.is_spectral()) continue;
        if (v.kind != VarKind::Q && v.kind != VarKind::R)
            throw Error("qr_to_ef: expression contains non-q/r variable " + v.str());
        table.emplace(v, ef_of_qr_jet(v));
    }
    return p.substitute(table);
}

}  // namespace aknsmf
