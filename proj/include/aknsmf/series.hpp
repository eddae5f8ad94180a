#pragma once

#include "aknsmf/poly.hpp"

#include <array>
#include <limits>
#include <map>

namespace aknsmf {

/// Validity order for series beyond which no coefficient may be claimed.
/// kExactOrder marks series that are exact polynomials in z (all omitted
/// coefficients are genuinely zero), e.g. constants and plus-projections.
constexpr int kExactOrder = std::numeric_limits<int>::max() / 4;

/// Truncated formal series in z = lambda^{-1} with Poly coefficients.
/// Powers below zero are allowed (polynomial parts in lambda). Arithmetic
/// propagates the validity order pessimistically; reading a coefficient
/// beyond the order is an error, never a silent zero.
class TruncSeries {
public:
    TruncSeries() = default;

    static TruncSeries zero(int order = kExactOrder);
    static TruncSeries constant(Poly c, int order = kExactOrder);
    static TruncSeries constant(const GaussianRational& c, int order = kExactOrder);
    /// c * z^power
    static TruncSeries monomial(Poly c, int power, int order = kExactOrder);
    /// Builds from coefficients for powers low..low+n-1, valid through `order`.
    static TruncSeries from_coeffs(int low, std::vector<Poly> coeffs, int order);

    int order() const { return order_; }
    int low() const { return low_; }
    /// Highest stored power (low()-1 when empty).
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of z^k; k beyond the validity order is an error.
    const Poly& coeff(int k) const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const GaussianRational& c) const;
    TruncSeries scaled(const Poly& c) const;
    /// Multiplies by z^n (shifts all powers by n).
    TruncSeries shifted(int n) const;
    /// Restricts the validity order (never extends it).
    TruncSeries truncated(int order) const;

    /// Multiplicative inverse. Requires no negative powers and a nonzero
    /// scalar z^0 coefficient.
    TruncSeries inverse() const;

    /// Square root with chosen scalar branch: result r with r^2 = *this and
    /// r's constant term equal to root0. Requires root0^2 == constant term.
    TruncSeries sqrt(const GaussianRational& root0) const;

    /// P_+(lambda^k * this): the polynomial part in lambda after multiplying
    /// by lambda^k, i.e. powers z^{-k}..z^0 of the shifted series. Exact.
    TruncSeries plus_projection(int k) const;

    bool operator==(const TruncSeries& o) const;
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    void trim();
    int low_ = 0;
    std::vector<Poly> coeffs_;  // ascending powers of z starting at low_
    int order_ = kExactOrder;
};

/// 2x2 matrix of truncated series; houses Q(lambda), phi(lambda), the Lax
/// matrices Q^{(k)}(lambda) and the coefficients of the Lax form.
class MatrixSeries {
public:
    MatrixSeries();
    MatrixSeries(TruncSeries a11, TruncSeries a12, TruncSeries a21, TruncSeries a22);

    static MatrixSeries identity(int order = kExactOrder);
    /// -i sigma_3, the constant leading coefficient Q_0.
    static MatrixSeries q0(int order = kExactOrder);

    const TruncSeries& at(int row, int col) const;
    TruncSeries& at(int row, int col);

    MatrixSeries operator-() const;
    friend MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b);
    friend MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b);
    friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);
    MatrixSeries scaled(const GaussianRational& c) const;
    MatrixSeries shifted(int n) const;

    TruncSeries trace() const;
    TruncSeries det() const;
    /// Inverse via adjugate; the determinant must satisfy the inverse()
    /// precondition.
    MatrixSeries inverse() const;

    /// Entrywise plus projection.
    MatrixSeries plus_projection(int k) const;

    /// 2x2 matrix of z^k coefficients.
    std::array<Poly, 4> coeff(int k) const;

    bool operator==(const MatrixSeries& o) const { return e_ == o.e_; }
    bool operator!=(const MatrixSeries& o) const { return !(*this == o); }

private:
    std::array<TruncSeries, 4> e_;
};

MatrixSeries commutator(const MatrixSeries& a, const MatrixSeries& b);

/// Bivariate principal-part series: sum of coeff(i,j) / (lam^{i+1} mu^{j+1})
/// with i, j >= 0 and explicit validity orders per parameter. Houses the
/// generating functions L(lam, mu) and H(lam, mu).
class BiSeries {
public:
    BiSeries(int order1, int order2) : order1_(order1), order2_(order2) {}

    int order1() const { return order1_; }
    int order2() const { return order2_; }

    void set(int i, int j, Poly p);
    /// Coefficient at (i, j); indices beyond the validity orders error out.
    const Poly& coeff(int i, int j) const;

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);

    bool operator==(const BiSeries& o) const;

private:
    int order1_, order2_;
    std::map<std::pair<int, int>, Poly> coeffs_;
};

}  // namespace aknsmf
