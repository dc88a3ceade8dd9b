// Closed-form uncertainty sums, Berta bounds, tightened bounds and classical
// correlations (after Chitambar) for the Werner and isotropic families under
// Fourier-conjugate measurements. These serve as exact oracles for the
// numerical pipeline. All logarithms are base 2; 0 log 0 terms are guarded
// explicitly so grid endpoints evaluate exactly.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace eub {

enum class Family { werner, isotropic };

struct FamilyPoint {
    Family family;
    int d;
    double lam;
};

namespace detail {

inline void check_point(const FamilyPoint& pt, Family expected) {
    if (pt.family != expected) throw std::invalid_argument("closed form: family mismatch");
    if (pt.d < 2) throw std::invalid_argument("closed form: d must be >= 2");
    if (pt.lam < 0.0 || pt.lam > 1.0)
        throw std::invalid_argument("closed form: lam outside [0, 1]");
}

// weight * log2(arg) with the 0 log 0 limit pinned to zero.
inline double wlog2(double weight, double arg) {
    if (weight <= 0.0) return 0.0;
    return weight * std::log2(arg);
}

}  // namespace detail

inline double werner_uncertainty_sum(const FamilyPoint& pt) {
    detail::check_point(pt, Family::werner);
    const double d = pt.d, lam = pt.lam;
    return -detail::wlog2(4.0 * (1.0 - lam) / (d + 1.0), 2.0 * (1.0 - lam) / (d + 1.0)) -
           detail::wlog2(2.0 * (d - 1.0 + 2.0 * lam) / (d + 1.0),
                         (d - 1.0 + 2.0 * lam) / (d * d - 1.0));
}

inline double werner_classical_correlation(const FamilyPoint& pt) {
    detail::check_point(pt, Family::werner);
    const double d = pt.d, lam = pt.lam;
    return std::log2(2.0 * d / (d + 1.0)) +
           detail::wlog2(2.0 * (1.0 - lam) / (d + 1.0), 1.0 - lam) +
           detail::wlog2((d - 1.0 + 2.0 * lam) / (d + 1.0),
                         (d - 1.0 + 2.0 * lam) / (2.0 * (d - 1.0)));
}

inline double werner_berta_bound(const FamilyPoint& pt) {
    detail::check_point(pt, Family::werner);
    const double d = pt.d, lam = pt.lam;
    return -detail::wlog2(lam, 2.0 * lam / (d * (d - 1.0))) -
           detail::wlog2(1.0 - lam, 2.0 * (1.0 - lam) / (d * (d + 1.0)));
}

inline double werner_new_bound(const FamilyPoint& pt) {
    // Coincides with the uncertainty sum identically.
    return werner_uncertainty_sum(pt);
}

inline double isotropic_uncertainty_sum(const FamilyPoint& pt) {
    detail::check_point(pt, Family::isotropic);
    const double d = pt.d, lam = pt.lam;
    return -detail::wlog2(2.0 * (d * lam + 1.0) / (d + 1.0), (d * lam + 1.0) / (d + 1.0)) -
           detail::wlog2(2.0 * d * (1.0 - lam) / (d + 1.0), d * (1.0 - lam) / (d * d - 1.0));
}

inline double isotropic_classical_correlation(const FamilyPoint& pt) {
    detail::check_point(pt, Family::isotropic);
    const double d = pt.d, lam = pt.lam;
    return 2.0 * std::log2(d) +
           detail::wlog2(d * (1.0 - lam) / (d + 1.0), (1.0 - lam) / (d * d - 1.0)) +
           detail::wlog2((d * lam + 1.0) / (d + 1.0), (d * lam + 1.0) / (d * (d + 1.0)));
}

inline double isotropic_berta_bound(const FamilyPoint& pt) {
    detail::check_point(pt, Family::isotropic);
    const double d = pt.d, lam = pt.lam;
    return -detail::wlog2(lam, lam) - detail::wlog2(1.0 - lam, (1.0 - lam) / (d * d - 1.0));
}

inline double isotropic_new_bound(const FamilyPoint& pt) {
    // Coincides with the uncertainty sum identically.
    return isotropic_uncertainty_sum(pt);
}

inline double family_uncertainty_sum(const FamilyPoint& pt) {
    return pt.family == Family::werner ? werner_uncertainty_sum(pt) : isotropic_uncertainty_sum(pt);
}

inline double family_classical_correlation(const FamilyPoint& pt) {
    return pt.family == Family::werner ? werner_classical_correlation(pt)
                                       : isotropic_classical_correlation(pt);
}

inline double family_berta_bound(const FamilyPoint& pt) {
    return pt.family == Family::werner ? werner_berta_bound(pt) : isotropic_berta_bound(pt);
}

inline double family_new_bound(const FamilyPoint& pt) {
    return pt.family == Family::werner ? werner_new_bound(pt) : isotropic_new_bound(pt);
}

}  // namespace eub
