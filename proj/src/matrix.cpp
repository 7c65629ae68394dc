#include "pcm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pcm/error.hpp"

namespace pcm {

namespace {

std::string cell_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void Tolerances::check() const {
  for (double t : {rec, cons, cmp}) {
    if (!positive_finite(t)) {
      throw Error(ErrorCode::InvalidArgument, "tolerances must be finite and positive");
    }
  }
}

bool approx_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

PartialMatrix::PartialMatrix(std::size_t n) : n_(n), values_(n * n, 1.0), mask_(n * n, 0) {
  for (std::size_t i = 0; i < n; ++i) mask_[i * n + i] = 1;
}

PartialMatrix PartialMatrix::validate(const RawMatrix& raw, const Tolerances& tol) {
  tol.check();
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorCode::NonSquare, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(raw[i].size()) + " cells, expected " +
                                            std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (raw[i][j] && !positive_finite(*raw[i][j])) {
        throw Error(ErrorCode::NonPositiveEntry, "entry " + cell_name(i, j) + " is not a positive number",
                    {i, j});
      }
    }
  }

  PartialMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i][i] && !approx_equal(*raw[i][i], 1.0, tol.rec)) {
      throw Error(ErrorCode::DiagonalNotOne, "diagonal entry " + cell_name(i, i) + " is not 1", {i});
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& upper = raw[i][j];
      const auto& lower = raw[j][i];
      if (upper && lower) {
        const double product = *upper * *lower;
        if (!approx_equal(product, 1.0, tol.rec)) {
          throw Error(ErrorCode::ReciprocityViolation,
                      "entries " + cell_name(i, j) + " and " + cell_name(j, i) +
                          " are not reciprocal (product " + std::to_string(product) + ")",
                      {i, j});
        }
        m.set(i, j, *upper);
      } else if (upper) {
        m.set(i, j, *upper);
      } else if (lower) {
        m.set(j, i, *lower);
      }
    }
  }
  return m;
}

double PartialMatrix::at(std::size_t i, std::size_t j) const {
  if (!specified(i, j)) {
    throw Error(ErrorCode::InvalidArgument, "entry " + cell_name(i, j) + " is unspecified", {i, j});
  }
  return values_[i * n_ + j];
}

std::optional<double> PartialMatrix::get(std::size_t i, std::size_t j) const {
  if (!specified(i, j)) return std::nullopt;
  return values_[i * n_ + j];
}

void PartialMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= n_ || j >= n_ || i == j) {
    throw Error(ErrorCode::InvalidArgument, "cannot set entry " + cell_name(i, j));
  }
  if (!positive_finite(value)) {
    throw Error(ErrorCode::NonPositiveEntry, "entry " + cell_name(i, j) + " is not a positive number",
                {i, j});
  }
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  const double upper = i < j ? value : 1.0 / value;
  values_[lo * n_ + hi] = upper;
  values_[hi * n_ + lo] = 1.0 / upper;
  mask_[lo * n_ + hi] = 1;
  mask_[hi * n_ + lo] = 1;
}

void PartialMatrix::clear(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_ || i == j) {
    throw Error(ErrorCode::InvalidArgument, "cannot clear entry " + cell_name(i, j));
  }
  mask_[i * n_ + j] = 0;
  mask_[j * n_ + i] = 0;
  values_[i * n_ + j] = 1.0;
  values_[j * n_ + i] = 1.0;
}

PartialMatrix PartialMatrix::with_entry(std::size_t i, std::size_t j, double value) const {
  PartialMatrix copy = *this;
  copy.set(i, j, value);
  return copy;
}

PartialMatrix PartialMatrix::without_entry(std::size_t i, std::size_t j) const {
  PartialMatrix copy = *this;
  copy.clear(i, j);
  return copy;
}

bool PartialMatrix::is_complete() const {
  return std::all_of(mask_.begin(), mask_.end(), [](std::uint8_t b) { return b != 0; });
}

std::size_t PartialMatrix::unspecified_pairs() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!specified(i, j)) ++count;
    }
  }
  return count;
}

PartialMatrix PartialMatrix::principal(std::span<const std::size_t> vertices) const {
  PartialMatrix sub(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (auto v = get(vertices[a], vertices[b])) sub.set(a, b, *v);
    }
  }
  return sub;
}

RawMatrix PartialMatrix::raw() const {
  RawMatrix out(n_, std::vector<std::optional<double>>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = get(i, j);
  }
  return out;
}

ReciprocalMatrix::ReciprocalMatrix(PartialMatrix m) : m_(std::move(m)) {
  if (!m_.is_complete()) {
    throw Error(ErrorCode::Incomplete, std::to_string(m_.unspecified_pairs()) + " entry pair(s) unspecified");
  }
}

ReciprocalMatrix ReciprocalMatrix::from_weights(std::span<const double> w) {
  PartialMatrix m(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) m.set(i, j, w[i] / w[j]);
  }
  return ReciprocalMatrix(std::move(m));
}

ReciprocalMatrix ReciprocalMatrix::validate(const RawMatrix& raw, const Tolerances& tol) {
  return ReciprocalMatrix(PartialMatrix::validate(raw, tol));
}

ReciprocalMatrix ReciprocalMatrix::with_entry(std::size_t i, std::size_t j, double value) const {
  return ReciprocalMatrix(m_.with_entry(i, j, value));
}

bool is_consistent(const ReciprocalMatrix& m, const Tolerances& tol) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!approx_equal(m(i, j) * m(j, k), m(i, k), tol.cons)) return false;
      }
    }
  }
  return true;
}

std::vector<double> rank_one_vector(const ReciprocalMatrix& m, const Tolerances& tol) {
  if (!is_consistent(m, tol)) {
    throw Error(ErrorCode::NotConsistent, "matrix is not consistent; no rank-one factor");
  }
  std::vector<double> w(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) w[i] = m(i, 0);
  return w;
}

}  // namespace pcm
