// Copyright (c) 2026 The atlas developers.
// This file is part of atlas, released under the Apache License 2.0.

#pragma once

#include <Eigen/Core>
#include <cmath>

#include "atlas/error.hpp"

namespace atlas::math {

/// Pearson product-moment correlation of two equal-length vectors.
/// Accepts any Eigen vector expression. Throws on length < 2, length
/// mismatch, or zero variance in either argument.
template <typename DerivedX, typename DerivedY>
double pearson(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
    const Eigen::Index n = x.size();
    if (n != y.size()) throw Error("pearson: length mismatch");
    if (n < 2) throw Error("pearson: need at least 2 points");

    using Scalar = typename DerivedX::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> xc = x.derived();
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> yc = y.derived();
    xc.array() -= xc.mean();
    yc.array() -= yc.mean();
    const double sxx = xc.squaredNorm();
    const double syy = yc.squaredNorm();
    if (sxx == 0.0 || syy == 0.0) throw Error("pearson: zero variance (undefined correlation)");
    return xc.dot(yc) / std::sqrt(sxx * syy);
}

/// Cosine similarity x.y / (|x||y|). Throws on zero vectors.
template <typename DerivedX, typename DerivedY>
double cosine_similarity(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
    if (x.size() != y.size()) throw Error("cosine: length mismatch");
    const double nx = x.norm();
    const double ny = y.norm();
    if (nx == 0.0 || ny == 0.0) throw Error("cosine: zero vector (undefined similarity)");
    return x.derived().dot(y.derived()) / (nx * ny);
}

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares line y = intercept + slope*x, with the
/// coefficient of determination of that fit.
template <typename DerivedX, typename DerivedY>
LineFit fit_line(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
    const Eigen::Index n = x.size();
    if (n != y.size()) throw Error("fit_line: length mismatch");
    if (n < 2) throw Error("fit_line: need at least 2 points");

    const double xm = x.mean();
    const double ym = y.mean();
    Eigen::VectorXd xc = x.derived().template cast<double>();
    Eigen::VectorXd yc = y.derived().template cast<double>();
    xc.array() -= xm;
    yc.array() -= ym;
    const double sxx = xc.squaredNorm();
    if (sxx == 0.0) throw Error("fit_line: x values are constant");
    LineFit fit;
    fit.slope = xc.dot(yc) / sxx;
    fit.intercept = ym - fit.slope * xm;
    const double ss_tot = yc.squaredNorm();
    const double ss_res = (yc - fit.slope * xc).squaredNorm();
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

} // namespace atlas::math
