#pragma once

#include "aknsmf/series.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace aknsmf {

/// The pair of phase-coordinate generating series e(lambda), f(lambda);
/// both start at z^1 (e_0 = f_0 = 0).
struct PhaseSeries {
    TruncSeries e, f;
    int order = 0;
};

/// The AKNS phase-space frame at truncation order M: the series a, b, c with
/// a = e f - i and b = e g, c = f g for g = sqrt(2i - e f), the matrices
/// Q(lambda) = [[a, b], [c, -a]] and phi(lambda) with phi Q_0 phi^{-1} = Q,
/// det phi = 1, and a^2 + b c = -1 up to order M.
struct AknsFrame {
    int order = 0;
    PhaseSeries phase;
    TruncSeries a, b, c, g;  // g = sqrt(2i - e f), constant term 1+i
    MatrixSeries Q, phi, psi;  // psi = phi^{-1}

    Poly a_coeff(int k) const { return k < 0 ? Poly() : a.coeff(k); }
    Poly b_coeff(int k) const { return k < 0 ? Poly() : b.coeff(k); }
    Poly c_coeff(int k) const { return k < 0 ? Poly() : c.coeff(k); }

    void require_order(int needed, const std::string& what) const;
};

AknsFrame build_frame(int order);

/// P_+(lambda^k Q(lambda)): traceless, polynomial in lambda of degree k.
MatrixSeries lax_matrix(const AknsFrame& frame, int k);

/// The flow derivation D_k tabulated on e_1..e_J, f_1..f_J: D_k e_j and
/// D_k f_j as polynomials in the phase coordinates, read off from
/// the Lax equation for Q(lambda) through the series calculus for
/// e = b (i - a)^{-1/2}.
struct FlowTable {
    int time = 0;
    int max_index = 0;
    std::vector<Poly> de, df;  // entry j-1 holds D_time e_j / D_time f_j

    const Poly& de_at(int j) const;
    const Poly& df_at(int j) const;

    /// Applies D_time as a derivation to a jet-free polynomial in phase
    /// variables (spectral parameters ride along as constants).
    Poly apply(const Poly& p) const;
};

FlowTable derive_flow(const AknsFrame& frame, int k, int max_index);

/// A set of flow tables indexed by time, grown on demand from a shared
/// frame. Memoization never changes observable results; safe to share
/// between threads.
class FlowSet {
public:
    explicit FlowSet(std::shared_ptr<const AknsFrame> frame) : frame_(std::move(frame)) {}

    /// Table for time k covering indices up to max_index; derives (or
    /// extends) it on demand. Fails if the frame order is insufficient.
    std::shared_ptr<const FlowTable> table(int k, int max_index) const;
    /// Table for time k at the largest extent the frame order allows.
    std::shared_ptr<const FlowTable> table(int k) const;

    Poly apply(int k, const Poly& p) const;
    const AknsFrame& frame() const { return *frame_; }

private:
    std::shared_ptr<const AknsFrame> frame_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::shared_ptr<const FlowTable>> tables_;
};

/// The change of coordinates between the phase variables e_j, f_j and the
/// fields q, r with their jets. Both direction tables are generated from the
/// x^1-flow recursion, not hard-coded.
class QrChart {
public:
    explicit QrChart(int order);

    int order() const { return order_; }

    /// e_j as a polynomial in q, r and x^1-jets (table row), j <= order.
    const Poly& e_of_qr(int j) const;
    const Poly& f_of_qr(int j) const;
    /// b_j, c_j, a_j in the q, r chart.
    Poly b_of_qr(int j) const;
    Poly c_of_qr(int j) const;
    Poly a_of_qr(int j) const;

    /// Substitutes every e/f variable (including jets, which are transported
    /// by total derivatives of the table rows) by its q, r expression.
    Poly ef_to_qr(const Poly& p) const;

    /// Substitutes every q/r jet variable by its on-shell e/f polynomial
    /// (jets transported by the flow derivations).
    Poly qr_to_ef(const Poly& p) const;

private:
    Poly chart_of_variable(const Variable& v) const;
    Poly ef_of_qr_jet(const Variable& v) const;

    int order_;
    TruncSeries qr_a_, qr_b_, qr_c_;   // a, b, c with q/r-jet coefficients
    std::vector<Poly> e_rows_, f_rows_;  // e_j, f_j in the q, r chart
    FlowSet flows_;
    Poly sqrt2i_e1_, sqrt2i_f1_;  // q, r as e/f polynomials
};

}  // namespace aknsmf
