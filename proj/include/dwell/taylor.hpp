#ifndef DWELL_TAYLOR_HPP
#define DWELL_TAYLOR_HPP

#include <vector>

#include "dwell/real.hpp"

namespace dwell {

/// Truncated power series sum_k c_k (x - r0)^k with arbitrary-precision
/// coefficients. Values are immutable after construction; all operations
/// return new series.
class TaylorSeries {
public:
    TaylorSeries(Real center, std::vector<Real> coeffs);

    static TaylorSeries constant(const Real& value, int order, const Real& center);
    static TaylorSeries zero(int order, const Real& center);

    /// Expansion of c/(x - p) around r0. Requires r0 != p.
    static TaylorSeries simple_pole(const Real& c, const Real& p, const Real& r0, int order);

    const Real& center() const { return center_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Real& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
    const std::vector<Real>& coeffs() const { return coeffs_; }

    /// Value at center + offset (Horner).
    Real evaluate(const Real& offset) const;
    /// Constant term, i.e. the value at the expansion point.
    const Real& value_at_center() const { return coeffs_[0]; }

    /// Copy truncated (or zero-padded) to the given order.
    TaylorSeries truncated(int order) const;

private:
    Real center_;
    std::vector<Real> coeffs_;
};

/// Sum/difference/product; operands must share the expansion point, the
/// shorter one is zero-padded and the result carries the common order.
TaylorSeries add(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries sub(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries mul(const TaylorSeries& a, const TaylorSeries& b);

/// Product truncated to `order` without computing the discarded tail.
TaylorSeries mul_to(const TaylorSeries& a, const TaylorSeries& b, int order);

/// Termwise derivative; order drops by one (a constant maps to the zero
/// series of order 0).
TaylorSeries differentiate(const TaylorSeries& s);

}  // namespace dwell

#endif
