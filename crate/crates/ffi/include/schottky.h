#ifndef SCHOTTKY_H
#define SCHOTTKY_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define SCHOTTKY_INVARIANT_S 0

#define SCHOTTKY_INVARIANT_T 1

#define SCHOTTKY_INVARIANT_DELTA 2

/**
 * Bits of `SchottkyModularValue::flags`.
 */
#define SCHOTTKY_FLAG_SINGULAR_ODD_THETA 1

#define SCHOTTKY_FLAG_CUBIC_DEGENERATE 2

/**
 * Number of odd characteristics in genus 4.
 */
#define SCHOTTKY_ODD_COUNT 120

/**
 * Result codes. Values are stable.
 */
typedef enum SchottkyStatus {
  SCHOTTKY_STATUS_OK = 0,
  SCHOTTKY_STATUS_NULL_POINTER = 1,
  SCHOTTKY_STATUS_INVALID_ARGUMENT = 2,
  SCHOTTKY_STATUS_NOT_SYMMETRIC = 3,
  SCHOTTKY_STATUS_NOT_POSITIVE = 4,
  SCHOTTKY_STATUS_ILL_CONDITIONED = 5,
  SCHOTTKY_STATUS_RADIUS_CAP_EXCEEDED = 6,
  SCHOTTKY_STATUS_DEGENERATE_SAMPLE = 7,
  SCHOTTKY_STATUS_EVEN_CHARACTERISTIC = 8,
  SCHOTTKY_STATUS_SINGULAR_ODD_THETA = 9,
  SCHOTTKY_STATUS_SINGULAR_BASIS = 10,
  SCHOTTKY_STATUS_WRONG_ARITY = 11,
  SCHOTTKY_STATUS_SINGULAR_CUBIC = 12,
  SCHOTTKY_STATUS_SINGULAR_MATRIX = 13,
  SCHOTTKY_STATUS_GENUS_UNSUPPORTED = 14,
  SCHOTTKY_STATUS_CHARACTERISTIC_MOVED = 15,
  SCHOTTKY_STATUS_QUADRATURE_DIVERGENCE = 16,
  SCHOTTKY_STATUS_NEAR_DEGENERATE_GAPS = 17,
  SCHOTTKY_STATUS_SYMPLECTIC_BASIS_NOT_FOUND = 18,
  SCHOTTKY_STATUS_DIMENSION_MISMATCH = 19,
  SCHOTTKY_STATUS_BUFFER_TOO_SMALL = 20,
  SCHOTTKY_STATUS_PANIC = 99,
} SchottkyStatus;

/**
 * Opaque cubic form.
 */
typedef struct SchottkyCubic SchottkyCubic;

/**
 * Opaque point of the Siegel upper half space.
 */
typedef struct SchottkyPeriodMatrix SchottkyPeriodMatrix;

typedef struct SchottkyModularValue {
  double raw_re;
  double raw_im;
  double scale_free;
  double weight;
  uint32_t flags;
} SchottkyModularValue;

typedef struct SchottkyInvariants {
  double s_re;
  double s_im;
  double t_re;
  double t_im;
  double delta_re;
  double delta_im;
  double j_re;
  double j_im;
  /**
   * 0 when the cubic is singular and `j` is undefined.
   */
  uint32_t j_defined;
} SchottkyInvariants;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null.
 */
const char *schottky_status_name(enum SchottkyStatus status);

/**
 * Copies the calling thread's last error message into `buf` (NUL
 * terminated, truncated to `len - 1` bytes) and returns the full message
 * length excluding the terminator.
 *
 * # Safety
 * `buf` must be null or valid for writes of `len` bytes.
 */
size_t schottky_last_error(char *buf, size_t len);

/**
 * Validates a `g x g` matrix given as row-major real and imaginary parts.
 *
 * # Safety
 * `re` and `im` must be valid for `g * g` reads; `out` for one write.
 */
enum SchottkyStatus schottky_period_matrix_new(size_t g,
                                               const double *re,
                                               const double *im,
                                               struct SchottkyPeriodMatrix **out);

/**
 * Seeded random point `X + i(Y Y^T + I)`.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum SchottkyStatus schottky_period_matrix_random(size_t g,
                                                  uint64_t seed,
                                                  double spread,
                                                  struct SchottkyPeriodMatrix **out);

/**
 * Period matrix of `y^2 = prod (x - e_i)` for sorted real branch points.
 *
 * # Safety
 * `branch_points` must be valid for `count` reads; `out` for one write.
 */
enum SchottkyStatus schottky_period_matrix_hyperelliptic(const double *branch_points,
                                                         size_t count,
                                                         struct SchottkyPeriodMatrix **out);

/**
 * Genus of the handle, or 0 for null.
 *
 * # Safety
 * `pm` must be null or a live handle.
 */
size_t schottky_period_matrix_genus(const struct SchottkyPeriodMatrix *pm);

/**
 * Copies the matrix into row-major `re` and `im` arrays of `g * g` entries.
 *
 * # Safety
 * `pm` must be a live handle; `re` and `im` valid for `g * g` writes.
 */
enum SchottkyStatus schottky_period_matrix_get(const struct SchottkyPeriodMatrix *pm,
                                               double *re,
                                               double *im);

/**
 * # Safety
 * `pm` must be null or a handle not yet freed.
 */
void schottky_period_matrix_free(struct SchottkyPeriodMatrix *pm);

/**
 * `theta[a; b](z, Omega)`. `a` and `b` hold `g` bits each; `z_re`, `z_im`
 * may both be null for `z = 0`. `eps <= 0` selects the default accuracy.
 *
 * # Safety
 * Array arguments must be valid for `g` reads, outputs for one write.
 */
enum SchottkyStatus schottky_theta(const struct SchottkyPeriodMatrix *pm,
                                   const uint8_t *a,
                                   const uint8_t *b,
                                   const double *z_re,
                                   const double *z_im,
                                   double eps,
                                   double *out_re,
                                   double *out_im);

/**
 * Writes the `a` and `b` bits of the odd genus-4 characteristic with the
 * given index (0..120) into 4-byte arrays.
 *
 * # Safety
 * `a` and `b` must be valid for 4 writes.
 */
enum SchottkyStatus schottky_odd_characteristic(size_t index, uint8_t *a, uint8_t *b);

/**
 * `h_xi(phi)(Omega)` at a genus-4 point for the odd characteristic with
 * index `xi_index`.
 *
 * # Safety
 * `pm` must be a live handle; `out` valid for one write.
 */
enum SchottkyStatus schottky_evaluate(const struct SchottkyPeriodMatrix *pm,
                                      size_t xi_index,
                                      uint32_t invariant,
                                      struct SchottkyModularValue *out);

/**
 * All 120 odd characteristics in index order. `parallelism = 0` uses all
 * cores.
 *
 * # Safety
 * `pm` must be a live handle; `out` valid for `len` writes.
 */
enum SchottkyStatus schottky_sweep(const struct SchottkyPeriodMatrix *pm,
                                   uint32_t invariant,
                                   size_t parallelism,
                                   struct SchottkyModularValue *out,
                                   size_t len);

/**
 * Cubic in `n` variables from coefficients in descending lexicographic
 * monomial order (`x0^3, x0^2 x1, ...`); `len` must equal the number of
 * monomials.
 *
 * # Safety
 * `re` and `im` must be valid for `len` reads; `out` for one write.
 */
enum SchottkyStatus schottky_cubic_new(size_t n,
                                       const double *re,
                                       const double *im,
                                       size_t len,
                                       struct SchottkyCubic **out);

/**
 * Member `x^3 + y^3 + z^3 + 6 m x y z` of the Hesse pencil.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum SchottkyStatus schottky_cubic_hesse(double m_re, double m_im, struct SchottkyCubic **out);

/**
 * S, T, the discriminant and `j` of a ternary cubic.
 *
 * # Safety
 * `cubic` must be a live handle; `out` valid for one write.
 */
enum SchottkyStatus schottky_cubic_invariants(const struct SchottkyCubic *cubic,
                                              struct SchottkyInvariants *out);

/**
 * # Safety
 * `cubic` must be null or a handle not yet freed.
 */
void schottky_cubic_free(struct SchottkyCubic *cubic);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHOTTKY_H */
