#ifndef QBIF_PRECISION_HPP
#define QBIF_PRECISION_HPP

#include <atomic>

#include <boost/multiprecision/mpfr.hpp>

#include "qbif/errors.hpp"

namespace qbif {

/// Extended-precision real. Working precision is taken from the active
/// PrecisionContext at construction time.
using Real = boost::multiprecision::mpfr_float;

inline unsigned bits_to_digits10(unsigned bits) {
  // ceil(bits * log10(2)); boost maps digits10 back to >= bits mantissa bits.
  return static_cast<unsigned>(bits * 0.3010299956639812) + 1;
}

/// Scoped working precision for Real/Complex arithmetic.
///
/// Boost 1.74 stores the MPFR default precision in a process-wide static, so
/// one computation context governs every thread alive inside its scope.
/// Parallel sections must therefore run at a single uniform precision, and
/// precision changes (e.g. the doubled-precision certificate replay) happen
/// sequentially.
class PrecisionContext {
 public:
  explicit PrecisionContext(unsigned bits)
      : prev_digits_(Real::default_precision()), prev_bits_(active_bits()) {
    if (bits < 53) throw InvalidArgument("precision must be at least 53 bits");
    Real::default_precision(bits_to_digits10(bits));
    active_bits_ref().store(bits, std::memory_order_relaxed);
  }

  PrecisionContext(const PrecisionContext&) = delete;
  PrecisionContext& operator=(const PrecisionContext&) = delete;

  ~PrecisionContext() {
    Real::default_precision(prev_digits_);
    active_bits_ref().store(prev_bits_, std::memory_order_relaxed);
  }

  /// Bits requested by the innermost active context (53 when none is active).
  static unsigned active_bits() { return active_bits_ref().load(std::memory_order_relaxed); }

  static unsigned active_digits10() { return Real::default_precision(); }

 private:
  static std::atomic<unsigned>& active_bits_ref() {
    static std::atomic<unsigned> bits{53};
    return bits;
  }

  unsigned prev_digits_;
  unsigned prev_bits_;
};

/// Machine epsilon at the active precision: 2^(1-bits).
inline Real working_epsilon() {
  return ldexp(Real(1), 1 - static_cast<int>(PrecisionContext::active_bits()));
}

}  // namespace qbif

#endif  // QBIF_PRECISION_HPP
