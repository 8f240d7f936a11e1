#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "core.hpp"

// Circular shifting computed entirely in the transform domain.  With
// y(n) = x((n + s) mod 2^N) and s = 2^t * u (u odd), each output coefficient
// is either a relabeling of the stored block (k <= t) or a short window sum
// over the deviation table at level N - t - 1 (k > t).  Dyadic fractional
// shifts s / 2^h reuse the same machinery on a conceptually upsampled tree
// with N' = N + h levels, where the extra levels carry zero detail.

namespace haarshift {

// s = 2^t * u with u odd; undefined for s = 0
inline int two_adic_valuation(std::uint64_t s) {
  if (s == 0) throw std::invalid_argument("two-adic valuation undefined for zero");
  return std::countr_zero(s);
}

// Shift by numerator / 2^precision samples.  Canonical form keeps the
// numerator odd (or zero with precision zero).
struct DyadicShift {
  std::uint64_t numerator = 0;
  int precision = 0;

  static DyadicShift canonical(std::uint64_t numerator, int precision) {
    if (precision < 0 || precision > 32)
      throw std::invalid_argument("shift precision out of range");
    while (precision > 0 && numerator != 0 && (numerator & 1) == 0) {
      numerator >>= 1;
      --precision;
    }
    if (numerator == 0) precision = 0;
    return {numerator, precision};
  }

  bool integral() const { return precision == 0; }
  double value() const { return std::ldexp(static_cast<double>(numerator), -precision); }
};

// "s" or "s/D" with D a power of two
inline DyadicShift parse_shift_spec(const std::string& text) {
  const auto parse_u64 = [](const std::string& part) -> std::optional<std::uint64_t> {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    try {
      return std::stoull(part);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  const auto slash = text.find('/');
  const auto num = parse_u64(text.substr(0, slash));
  if (!num) throw std::invalid_argument("malformed shift '" + text + "'");
  if (slash == std::string::npos) return DyadicShift::canonical(*num, 0);
  const auto den = parse_u64(text.substr(slash + 1));
  if (!den || *den == 0 || !std::has_single_bit(*den))
    throw std::invalid_argument("shift denominator must be a power of two");
  return DyadicShift::canonical(*num, std::countr_zero(*den));
}

// Window endpoints for the closed-form coefficient update.  The midpoint i2
// lands on a half-integer exactly when k - t = 1; its detail term is then
// dropped (never rounded) and both D windows are empty by construction.
struct ShiftIndices {
  int valuation = 0;
  std::uint64_t odd_cofactor = 0;
  std::uint64_t i1 = 0;
  std::uint64_t i2_floor = 0;
  bool i2_half = false;
  std::uint64_t i3 = 0;
};

inline ShiftIndices shift_indices(int k, std::uint64_t i, std::uint64_t s) {
  const int t = two_adic_valuation(s);
  if (k <= t)
    throw std::invalid_argument("window indices exist only for k > valuation(s)");
  const int u = k - t;
  const std::uint64_t q = s >> (t + 1);
  ShiftIndices ix;
  ix.valuation = t;
  ix.odd_cofactor = s >> t;
  ix.i1 = (i << (u - 1)) + q;
  ix.i3 = ((i + 1) << (u - 1)) + q;
  if (u == 1) {
    ix.i2_half = true;
    ix.i2_floor = ix.i1;
  } else {
    ix.i2_floor = ((2 * i + 1) << (u - 2)) + q;
  }
  return ix;
}

// Stored-coefficient reads needed for one shifted coefficient: one relabeled
// read when k <= valuation(s), else the i3 - i1 + 3 window reads.
inline std::uint64_t count_terms(int n_levels, int k, std::uint64_t s) {
  if (n_levels < 1 || n_levels > 62)
    throw std::out_of_range("n_levels out of range");
  if (k < 1 || k > n_levels) throw std::out_of_range("level selector out of range");
  if (s >= (std::uint64_t{1} << n_levels)) throw std::out_of_range("shift out of range");
  if (s == 0) return 1;
  const int t = two_adic_valuation(s);
  if (k <= t) return 1;
  return (std::uint64_t{1} << (k - t - 1)) + 3;
}

// Evaluates shifted coefficients of one transform for one fixed shift,
// sharing the deviation table across all requested coefficients.
class ShiftEvaluator {
 public:
  ShiftEvaluator(const HaarTransform& t, int ext_levels, std::uint64_t s)
      : t_(&t), h_(ext_levels) {
    const int n = t.n_levels();
    if (h_ < 0 || n + h_ > 62) throw std::invalid_argument("precision out of range");
    if (h_ > 0 && !t.full())
      throw std::invalid_argument("fractional shifts require a full transform");
    np_ = n + h_;
    s_ = s & ((std::uint64_t{1} << np_) - 1);
    if (s_ == 0) throw std::invalid_argument("evaluator requires a nonzero shift");
    t_val_ = two_adic_valuation(s_);
    dc_ = t.dc();
    lambda_ = np_ - t_val_ - 1;
    if (lambda_ >= t.coarsest_level()) {
      table_level_ = std::min(lambda_, n);
      collapse_ = lambda_ - table_level_;
      mask_ = (std::uint64_t{1} << lambda_) - 1;
      const DTable tab = d_table(t, table_level_);
      dtab_.assign(tab.values().begin(), tab.values().end());
    }
  }

  int valuation() const { return t_val_; }

  // detail at output level np - k
  double detail(int k, std::uint64_t i) const {
    if (k <= t_val_) {
      const int level = np_ - k;
      const std::uint64_t m = (std::uint64_t{1} << level) - 1;
      return t_->detail(level, static_cast<std::size_t>((i + (s_ >> k)) & m));
    }
    const ShiftIndices ix = shift_indices(k, i, s_);
    double acc = dev(ix.i1) - dev(ix.i3) - det(ix.i1) - det(ix.i3);
    if (!ix.i2_half) {
      acc += 2.0 * det(ix.i2_floor);
      acc += 2.0 * (dev_sum(ix.i1 + 1, ix.i2_floor - 1) -
                    dev_sum(ix.i2_floor + 1, ix.i3 - 1));
    }
    return std::ldexp(acc, -(k - t_val_));
  }

  // blur block of a partial transform (integer shifts only)
  double blur(std::uint64_t i) const {
    const int k = t_->reduction();
    if (k <= t_val_) {
      const std::uint64_t m = (std::uint64_t{1} << (np_ - k)) - 1;
      return t_->blur(static_cast<std::size_t>((i + (s_ >> k)) & m));
    }
    const ShiftIndices ix = shift_indices(k, i, s_);
    const double acc = dev(ix.i1) + dev(ix.i3) - det(ix.i1) + det(ix.i3) +
                       2.0 * dev_sum(ix.i1 + 1, ix.i3 - 1);
    return dc_ + std::ldexp(acc, -(k - t_val_));
  }

 private:
  double dev(std::uint64_t m) const {
    return dtab_[static_cast<std::size_t>((m & mask_) >> collapse_)];
  }

  double dev_sum(std::uint64_t first, std::uint64_t last) const {
    double acc = 0.0;
    for (std::uint64_t m = first; m <= last; ++m) acc += dev(m);
    return acc;
  }

  // detail at the window level; zero above the stored tree
  double det(std::uint64_t m) const {
    if (lambda_ >= t_->n_levels()) return 0.0;
    return t_->detail(lambda_, static_cast<std::size_t>(m & mask_));
  }

  const HaarTransform* t_;
  int h_;
  int np_ = 0;
  std::uint64_t s_ = 0;
  int t_val_ = 0;
  int lambda_ = 0;
  int table_level_ = 0;
  int collapse_ = 0;
  std::uint64_t mask_ = 0;
  double dc_ = 0.0;
  std::vector<double> dtab_;
};

inline double shifted_detail(const HaarTransform& t, int k, std::uint64_t i,
                             std::uint64_t s) {
  if (k < 1 || k > t.reduction())
    throw std::out_of_range("level selector out of range");
  if (s >= t.size()) throw std::out_of_range("shift out of range");
  if (i >= (t.size() >> k)) throw std::out_of_range("coefficient index out of range");
  if (s == 0) return t.detail(t.n_levels() - k, static_cast<std::size_t>(i));
  return ShiftEvaluator(t, 0, s).detail(k, i);
}

inline double shifted_blur(const HaarTransform& t, std::uint64_t i, std::uint64_t s) {
  if (t.full())
    throw std::invalid_argument("shifted_blur requires a partially decimated transform");
  if (s >= t.size()) throw std::out_of_range("shift out of range");
  if (i >= t.blur_size()) throw std::out_of_range("blur index out of range");
  if (s == 0) return t.blur(static_cast<std::size_t>(i));
  return ShiftEvaluator(t, 0, s).blur(i);
}

inline double shifted_detail_fractional(const HaarTransform& t, int h, int k,
                                        std::uint64_t i, std::uint64_t s) {
  if (!t.full())
    throw std::invalid_argument("fractional shifts require a full transform");
  if (h < 0 || t.n_levels() + h > 62) throw std::out_of_range("precision out of range");
  const int np = t.n_levels() + h;
  if (k < h + 1 || k > np) throw std::out_of_range("level selector out of range");
  if (s >= (std::uint64_t{1} << np)) throw std::out_of_range("shift out of range");
  if (i >= (std::uint64_t{1} << (np - k)))
    throw std::out_of_range("coefficient index out of range");
  if (s == 0) return t.detail(np - k, static_cast<std::size_t>(i));
  return ShiftEvaluator(t, h, s).detail(k, i);
}

// whole-transform integer shift; the dc/blur block never changes value class
inline HaarTransform shift_transform(const HaarTransform& t, std::uint64_t s) {
  s &= t.size() - 1;
  if (s == 0) return t;
  const ShiftEvaluator ev(t, 0, s);
  std::vector<double> out(t.size());
  if (t.full()) {
    out[0] = t.coefficients()[0];
  } else {
    for (std::size_t i = 0; i < t.blur_size(); ++i) out[i] = ev.blur(i);
  }
  const int n = t.n_levels();
  for (int level = t.coarsest_level(); level < n; ++level) {
    const std::size_t base = std::size_t{1} << level;
    for (std::size_t i = 0; i < base; ++i) out[base + i] = ev.detail(n - level, i);
  }
  return HaarTransform(n, t.reduction(), std::move(out));
}

inline HaarTransform shift_transform_fractional(const HaarTransform& t, DyadicShift sh) {
  if (!t.full())
    throw std::invalid_argument("fractional shifts require a full transform");
  sh = DyadicShift::canonical(sh.numerator, sh.precision);
  if (sh.integral()) return shift_transform(t, sh.numerator);
  const int n = t.n_levels();
  const int h = sh.precision;
  if (n + h > 62) throw std::invalid_argument("precision out of range");
  const std::uint64_t s = sh.numerator & ((std::uint64_t{1} << (n + h)) - 1);
  if (s == 0) return t;
  const ShiftEvaluator ev(t, h, s);
  std::vector<double> out(t.size());
  out[0] = t.coefficients()[0];
  for (int level = 0; level < n; ++level) {
    const std::size_t base = std::size_t{1} << level;
    for (std::size_t i = 0; i < base; ++i) out[base + i] = ev.detail(n + h - level, i);
  }
  return HaarTransform(n, n, std::move(out));
}

inline HaarTransform shift_transform(const HaarTransform& t, DyadicShift sh) {
  if (sh.integral()) return shift_transform(t, sh.numerator);
  return shift_transform_fractional(t, sh);
}

}  // namespace haarshift
