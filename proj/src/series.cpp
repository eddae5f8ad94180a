#include "aknsmf/series.hpp"

#include <algorithm>

namespace aknsmf {

namespace {

int clamp_order(long v) {
    return v >= kExactOrder ? kExactOrder : static_cast<int>(v);
}

const Poly& zero_poly() {
    static const Poly z;
    return z;
}

}  // namespace

TruncSeries TruncSeries::zero(int order) {
    TruncSeries s;
    s.order_ = order;
    return s;
}

TruncSeries TruncSeries::constant(Poly c, int order) {
    TruncSeries s;
    s.order_ = order;
    if (!c.is_zero()) {
        s.low_ = 0;
        s.coeffs_.push_back(std::move(c));
    }
    return s;
}

TruncSeries TruncSeries::constant(const GaussianRational& c, int order) {
    return constant(Poly(c), order);
}

TruncSeries TruncSeries::monomial(Poly c, int power, int order) {
    TruncSeries s;
    s.order_ = order;
    if (!c.is_zero() && power <= order) {
        s.low_ = power;
        s.coeffs_.push_back(std::move(c));
    }
    return s;
}

TruncSeries TruncSeries::from_coeffs(int low, std::vector<Poly> coeffs, int order) {
    TruncSeries s;
    s.low_ = low;
    s.coeffs_ = std::move(coeffs);
    s.order_ = order;
    s.trim();
    return s;
}

void TruncSeries::trim() {
    if (order_ < kExactOrder && low_ + static_cast<int>(coeffs_.size()) - 1 > order_) {
        coeffs_.resize(std::max(0, order_ - low_ + 1));
    }
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
        low_ += static_cast<int>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) low_ = 0;
}

const Poly& TruncSeries::coeff(int k) const {
    if (k > order_)
        throw Error("series coefficient z^" + std::to_string(k) +
                    " beyond validity order " + std::to_string(order_));
    int pos = k - low_;
    if (pos < 0 || pos >= static_cast<int>(coeffs_.size())) return zero_poly();
    return coeffs_[pos];
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries s(*this);
    for (Poly& p : s.coeffs_) p = -p;
    return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries s;
    s.order_ = std::min(a.order_, b.order_);
    if (a.coeffs_.empty() && b.coeffs_.empty()) return s;
    int low = std::min(a.coeffs_.empty() ? b.low_ : a.low_, b.coeffs_.empty() ? a.low_ : b.low_);
    int high = std::min(
        std::max(a.low_ + static_cast<int>(a.coeffs_.size()), b.low_ + static_cast<int>(b.coeffs_.size())) - 1,
        s.order_);
    s.low_ = low;
    for (int k = low; k <= high; ++k) {
        Poly c;
        if (k >= a.low_ && k < a.low_ + static_cast<int>(a.coeffs_.size())) c += a.coeffs_[k - a.low_];
        if (k >= b.low_ && k < b.low_ + static_cast<int>(b.coeffs_.size())) c += b.coeffs_[k - b.low_];
        s.coeffs_.push_back(std::move(c));
    }
    s.trim();
    return s;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries s;
    s.order_ = clamp_order(std::min(static_cast<long>(a.order_) + b.low_,
                                    static_cast<long>(b.order_) + a.low_));
    if (a.coeffs_.empty() || b.coeffs_.empty()) return s;
    int low = a.low_ + b.low_;
    int high = std::min(low + static_cast<int>(a.coeffs_.size() + b.coeffs_.size()) - 2,
                        s.order_ >= kExactOrder ? INT32_MAX / 4 : s.order_);
    if (high < low) return s;
    s.low_ = low;
    s.coeffs_.assign(high - low + 1, Poly());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            int k = a.low_ + static_cast<int>(i) + b.low_ + static_cast<int>(j);
            if (k > high) break;
            if (b.coeffs_[j].is_zero()) continue;
            s.coeffs_[k - low] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    s.trim();
    return s;
}

TruncSeries TruncSeries::scaled(const GaussianRational& c) const {
    TruncSeries s(*this);
    if (c.is_zero()) {
        s.coeffs_.clear();
        s.low_ = 0;
        return s;
    }
    for (Poly& p : s.coeffs_) p = p.scaled(c);
    return s;
}

TruncSeries TruncSeries::scaled(const Poly& c) const {
    TruncSeries s(*this);
    for (Poly& p : s.coeffs_) p = p * c;
    s.trim();
    return s;
}

TruncSeries TruncSeries::shifted(int n) const {
    TruncSeries s(*this);
    s.low_ += n;
    if (s.order_ < kExactOrder) s.order_ = clamp_order(static_cast<long>(s.order_) + n);
    return s;
}

TruncSeries TruncSeries::truncated(int order) const {
    TruncSeries s(*this);
    s.order_ = std::min(s.order_, order);
    s.trim();
    return s;
}

TruncSeries TruncSeries::inverse() const {
    if (low_ < 0) throw Error("series inverse: negative powers present");
    const Poly& c0 = coeff(0);
    if (!c0.is_constant() || c0.is_zero())
        throw Error("series inverse: z^0 coefficient must be a nonzero scalar");
    GaussianRational inv0 = c0.constant_term().inverse();
    int n_max = order_ >= kExactOrder
                    ? (coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1)
                    : order_;
    // if the input is an exact polynomial, its inverse is still an infinite
    // series; claim validity only through the stored range in that case
    int claimed = order_;
    if (order_ >= kExactOrder && static_cast<int>(coeffs_.size()) > 1)
        claimed = n_max;
    if (order_ >= kExactOrder && coeffs_.size() <= 1) {
        // inverse of a scalar: exact
        TruncSeries s;
        s.order_ = kExactOrder;
        s.low_ = 0;
        s.coeffs_.push_back(Poly(inv0));
        return s;
    }
    std::vector<Poly> r(static_cast<size_t>(n_max) + 1);
    r[0] = Poly(inv0);
    for (int n = 1; n <= n_max; ++n) {
        Poly acc;
        for (int m = 1; m <= n; ++m) acc += coeff(m) * r[n - m];
        r[n] = (-acc).scaled(inv0);
    }
    return from_coeffs(0, std::move(r), claimed);
}

TruncSeries TruncSeries::sqrt(const GaussianRational& root0) const {
    if (low_ < 0) throw Error("series sqrt: negative powers present");
    const Poly& c0 = coeff(0);
    if (!c0.is_constant()) throw Error("series sqrt: z^0 coefficient must be a scalar");
    if (!(Poly(root0 * root0) == c0))
        throw Error("series sqrt: root0^2 does not match the constant term");
    if (root0.is_zero()) throw Error("series sqrt: zero branch point not supported");
    int n_max = order_ >= kExactOrder
                    ? (coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1)
                    : order_;
    int claimed = order_;
    if (order_ >= kExactOrder && static_cast<int>(coeffs_.size()) > 1) claimed = n_max;
    GaussianRational inv2r0 = (GaussianRational(2) * root0).inverse();
    std::vector<Poly> r(static_cast<size_t>(n_max) + 1);
    r[0] = Poly(root0);
    for (int n = 1; n <= n_max; ++n) {
        Poly acc = coeff(n);
        for (int m = 1; m < n; ++m) acc -= r[m] * r[n - m];
        r[n] = acc.scaled(inv2r0);
    }
    return from_coeffs(0, std::move(r), claimed);
}

TruncSeries TruncSeries::plus_projection(int k) const {
    if (k < 0) throw Error("plus_projection: negative power");
    if (k > order_)
        throw Error("plus_projection: power " + std::to_string(k) +
                    " exceeds validity order " + std::to_string(order_));
    std::vector<Poly> out(static_cast<size_t>(k) + 1);
    for (int m = 0; m <= k; ++m) out[m] = coeff(m);
    return from_coeffs(-k, std::move(out), kExactOrder);
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    return low_ == o.low_ && order_ == o.order_ && coeffs_ == o.coeffs_;
}

std::string TruncSeries::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) out += " + ";
        first = false;
        std::string c = coeffs_[i].str();
        if (!coeffs_[i].is_constant()) c = "(" + c + ")";
        out += c + " * z^" + std::to_string(low_ + static_cast<int>(i));
    }
    return out.empty() ? "0" : out;
}

MatrixSeries::MatrixSeries() = default;

MatrixSeries::MatrixSeries(TruncSeries a11, TruncSeries a12, TruncSeries a21, TruncSeries a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {}

MatrixSeries MatrixSeries::identity(int order) {
    return MatrixSeries(TruncSeries::constant(GaussianRational(1), order), TruncSeries::zero(order),
                        TruncSeries::zero(order), TruncSeries::constant(GaussianRational(1), order));
}

MatrixSeries MatrixSeries::q0(int order) {
    GaussianRational mi = -GaussianRational::imag_unit();
    return MatrixSeries(TruncSeries::constant(mi, order), TruncSeries::zero(order),
                        TruncSeries::zero(order), TruncSeries::constant(-mi, order));
}

const TruncSeries& MatrixSeries::at(int row, int col) const { return e_[row * 2 + col]; }
TruncSeries& MatrixSeries::at(int row, int col) { return e_[row * 2 + col]; }

MatrixSeries MatrixSeries::operator-() const {
    return MatrixSeries(-e_[0], -e_[1], -e_[2], -e_[3]);
}

MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b) {
    return MatrixSeries(a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2], a.e_[3] + b.e_[3]);
}

MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b) {
    return MatrixSeries(a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2], a.e_[3] - b.e_[3]);
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
    MatrixSeries m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
    return m;
}

MatrixSeries MatrixSeries::scaled(const GaussianRational& c) const {
    return MatrixSeries(e_[0].scaled(c), e_[1].scaled(c), e_[2].scaled(c), e_[3].scaled(c));
}

MatrixSeries MatrixSeries::shifted(int n) const {
    return MatrixSeries(e_[0].shifted(n), e_[1].shifted(n), e_[2].shifted(n), e_[3].shifted(n));
}

TruncSeries MatrixSeries::trace() const { return e_[0] + e_[3]; }

TruncSeries MatrixSeries::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

MatrixSeries MatrixSeries::inverse() const {
    TruncSeries inv_det = det().inverse();
    return MatrixSeries(e_[3] * inv_det, (-e_[1]) * inv_det, (-e_[2]) * inv_det, e_[0] * inv_det);
}

MatrixSeries MatrixSeries::plus_projection(int k) const {
    return MatrixSeries(e_[0].plus_projection(k), e_[1].plus_projection(k),
                        e_[2].plus_projection(k), e_[3].plus_projection(k));
}

std::array<Poly, 4> MatrixSeries::coeff(int k) const {
    return {e_[0].coeff(k), e_[1].coeff(k), e_[2].coeff(k), e_[3].coeff(k)};
}

MatrixSeries commutator(const MatrixSeries& a, const MatrixSeries& b) { return a * b - b * a; }

void BiSeries::set(int i, int j, Poly p) {
    if (i < 0 || j < 0) throw Error("BiSeries index must be non-negative");
    if (p.is_zero())
        coeffs_.erase({i, j});
    else
        coeffs_[{i, j}] = std::move(p);
}

const Poly& BiSeries::coeff(int i, int j) const {
    if (i < 0 || j < 0) throw Error("BiSeries index must be non-negative");
    if (i > order1_ || j > order2_)
        throw Error("BiSeries coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                    ") beyond validity orders (" + std::to_string(order1_) + "," +
                    std::to_string(order2_) + ")");
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? zero_poly() : it->second;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries s(std::min(a.order1_, b.order1_), std::min(a.order2_, b.order2_));
    for (const auto& [ij, p] : a.coeffs_)
        if (ij.first <= s.order1_ && ij.second <= s.order2_) s.set(ij.first, ij.second, p);
    for (const auto& [ij, p] : b.coeffs_)
        if (ij.first <= s.order1_ && ij.second <= s.order2_)
            s.set(ij.first, ij.second, s.coeff(ij.first, ij.second) + p);
    return s;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    BiSeries s(std::min(a.order1_, b.order1_), std::min(a.order2_, b.order2_));
    for (const auto& [ij, p] : a.coeffs_)
        if (ij.first <= s.order1_ && ij.second <= s.order2_) s.set(ij.first, ij.second, p);
    for (const auto& [ij, p] : b.coeffs_)
        if (ij.first <= s.order1_ && ij.second <= s.order2_)
            s.set(ij.first, ij.second, s.coeff(ij.first, ij.second) - p);
    return s;
}

bool BiSeries::operator==(const BiSeries& o) const {
    return order1_ == o.order1_ && order2_ == o.order2_ && coeffs_ == o.coeffs_;
}

}  // namespace aknsmf
