#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pcm {

/// Relative tolerances. `rec` governs input validation (reciprocity and the
/// unit diagonal), `cons` governs consistency tests (triad or cycle products
/// equal to 1), `cmp` governs comparisons of MT values and interval endpoints.
struct Tolerances {
  double rec = 1e-9;
  double cons = 1e-9;
  double cmp = 1e-9;

  /// Throws InvalidArgument unless every field is finite and positive.
  void check() const;
};

/// |a - b| <= tol * max(|a|, |b|).
bool approx_equal(double a, double b, double tol);

/// Row-major cells; std::nullopt marks an unspecified entry.
using RawMatrix = std::vector<std::vector<std::optional<double>>>;

/// n-by-n positive matrix with a symmetric mask of specified entries.
///
/// The diagonal is always specified and equal to 1. For every specified
/// off-diagonal pair the upper-triangle value a is authoritative and the
/// lower entry is stored as exactly 1.0 / a.
class PartialMatrix {
 public:
  PartialMatrix() = default;

  /// Only the diagonal specified.
  explicit PartialMatrix(std::size_t n);

  /// Builds a validated matrix from raw cells. A pair given on one side only
  /// is completed with the reciprocal; a pair given on both sides must be
  /// mutually reciprocal within `tol.rec`. Unspecified diagonal cells are
  /// filled with 1.
  static PartialMatrix validate(const RawMatrix& raw, const Tolerances& tol = {});

  std::size_t size() const noexcept { return n_; }
  bool specified(std::size_t i, std::size_t j) const { return mask_[i * n_ + j] != 0; }

  /// Value at (i, j); the entry must be specified.
  double at(std::size_t i, std::size_t j) const;
  std::optional<double> get(std::size_t i, std::size_t j) const;

  /// Specifies (i, j) as `value` and (j, i) as its reciprocal.
  void set(std::size_t i, std::size_t j, double value);
  /// Marks the off-diagonal pair (i, j), (j, i) as unspecified.
  void clear(std::size_t i, std::size_t j);

  PartialMatrix with_entry(std::size_t i, std::size_t j, double value) const;
  PartialMatrix without_entry(std::size_t i, std::size_t j) const;

  bool is_complete() const;
  /// Number of unordered pairs {i, j}, i != j, that are unspecified.
  std::size_t unspecified_pairs() const;

  /// Principal submatrix on `vertices`, in the given order.
  PartialMatrix principal(std::span<const std::size_t> vertices) const;

  RawMatrix raw() const;

  friend bool operator==(const PartialMatrix&, const PartialMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
  std::vector<std::uint8_t> mask_;
};

/// A fully specified reciprocal matrix.
class ReciprocalMatrix {
 public:
  /// Throws Incomplete if any entry of `m` is unspecified.
  explicit ReciprocalMatrix(PartialMatrix m);

  /// The consistent matrix w * w^(-T), entries w_i / w_j.
  static ReciprocalMatrix from_weights(std::span<const double> w);

  static ReciprocalMatrix validate(const RawMatrix& raw, const Tolerances& tol = {});

  std::size_t size() const noexcept { return m_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  const PartialMatrix& partial() const noexcept { return m_; }

  ReciprocalMatrix with_entry(std::size_t i, std::size_t j, double value) const;

  friend bool operator==(const ReciprocalMatrix&, const ReciprocalMatrix&) = default;

 private:
  PartialMatrix m_;
};

/// True iff a_ij * a_jk = a_ik within `tol.cons` for every triple.
bool is_consistent(const ReciprocalMatrix& m, const Tolerances& tol = {});

/// The first column w of a consistent matrix (w_1 = 1), so that m = w * w^(-T).
/// Throws NotConsistent otherwise.
std::vector<double> rank_one_vector(const ReciprocalMatrix& m, const Tolerances& tol = {});

}  // namespace pcm
