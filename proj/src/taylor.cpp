#include "dwell/taylor.hpp"

#include <stdexcept>
#include <utility>

namespace dwell {

TaylorSeries::TaylorSeries(Real center, std::vector<Real> coeffs)
    : center_(std::move(center)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TaylorSeries: needs at least the constant term");
}

TaylorSeries TaylorSeries::constant(const Real& value, int order, const Real& center) {
    if (order < 0) throw std::invalid_argument("TaylorSeries: negative order");
    std::vector<Real> c(static_cast<size_t>(order) + 1, Real(0L, value.digits()));
    c[0] = value;
    return TaylorSeries(center, std::move(c));
}

TaylorSeries TaylorSeries::zero(int order, const Real& center) {
    return constant(Real(0L, center.digits()), order, center);
}

TaylorSeries TaylorSeries::simple_pole(const Real& c, const Real& p, const Real& r0, int order) {
    if (r0 == p) throw std::domain_error("TaylorSeries: expansion point coincides with the pole");
    // c/(x-p) = c/(d + (x-r0)) with d = r0-p: coeff[k] = c*(-1)^k / d^{k+1}
    Real d = r0 - p;
    std::vector<Real> out;
    out.reserve(static_cast<size_t>(order) + 1);
    Real term = c / d;
    for (int k = 0; k <= order; ++k) {
        out.push_back(term);
        term = -term / d;
    }
    return TaylorSeries(r0, std::move(out));
}

Real TaylorSeries::evaluate(const Real& offset) const {
    Real acc = coeffs_.back();
    for (size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * offset + coeffs_[i];
    return acc;
}

TaylorSeries TaylorSeries::truncated(int order) const {
    if (order < 0) throw std::invalid_argument("TaylorSeries: negative order");
    std::vector<Real> c;
    c.reserve(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k)
        c.push_back(k <= this->order() ? coeffs_[static_cast<size_t>(k)] : Real(0L, center_.digits()));
    return TaylorSeries(center_, std::move(c));
}

namespace {
void require_same_center(const TaylorSeries& a, const TaylorSeries& b) {
    if (!(a.center() == b.center()))
        throw std::invalid_argument("TaylorSeries: operands expanded at different points");
}
const Real& coeff_or_zero(const TaylorSeries& s, int k, const Real& zero) {
    return k <= s.order() ? s.coeff(k) : zero;
}
}  // namespace

TaylorSeries add(const TaylorSeries& a, const TaylorSeries& b) {
    require_same_center(a, b);
    int n = a.order() > b.order() ? a.order() : b.order();
    Real zero(0L, a.center().digits());
    std::vector<Real> out;
    out.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out.push_back(coeff_or_zero(a, k, zero) + coeff_or_zero(b, k, zero));
    return TaylorSeries(a.center(), std::move(out));
}

TaylorSeries sub(const TaylorSeries& a, const TaylorSeries& b) {
    require_same_center(a, b);
    int n = a.order() > b.order() ? a.order() : b.order();
    Real zero(0L, a.center().digits());
    std::vector<Real> out;
    out.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out.push_back(coeff_or_zero(a, k, zero) - coeff_or_zero(b, k, zero));
    return TaylorSeries(a.center(), std::move(out));
}

TaylorSeries mul_to(const TaylorSeries& a, const TaylorSeries& b, int order) {
    require_same_center(a, b);
    int digs = a.coeff(0).digits() > b.coeff(0).digits() ? a.coeff(0).digits() : b.coeff(0).digits();
    std::vector<Real> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        Real acc(0L, digs);
        int i_lo = k - b.order() > 0 ? k - b.order() : 0;
        int i_hi = k < a.order() ? k : a.order();
        for (int i = i_lo; i <= i_hi; ++i) acc.add_product(a.coeff(i), b.coeff(k - i));
        out.push_back(std::move(acc));
    }
    return TaylorSeries(a.center(), std::move(out));
}

TaylorSeries mul(const TaylorSeries& a, const TaylorSeries& b) {
    int n = a.order() > b.order() ? a.order() : b.order();
    return mul_to(a, b, n);
}

TaylorSeries differentiate(const TaylorSeries& s) {
    if (s.order() == 0) return TaylorSeries::zero(0, s.center());
    std::vector<Real> out;
    out.reserve(static_cast<size_t>(s.order()));
    for (int k = 1; k <= s.order(); ++k) out.push_back(s.coeff(k) * static_cast<long>(k));
    return TaylorSeries(s.center(), std::move(out));
}

}  // namespace dwell
