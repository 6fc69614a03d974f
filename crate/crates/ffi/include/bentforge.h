#ifndef BENTFORGE_H
#define BENTFORGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BfStatus {
  BF_STATUS_OK = 0,
  BF_STATUS_NULL_POINTER = 1,
  BF_STATUS_INVALID_UTF8 = 2,
  BF_STATUS_PARSE = 3,
  BF_STATUS_INVALID_ARGUMENT = 4,
  BF_STATUS_DIMENSION = 5,
  BF_STATUS_PRECONDITION_FAILED = 6,
  BF_STATUS_NOT_BENT_OR_PLATEAUED = 7,
  BF_STATUS_SYNTHESIS_FAILED = 8,
  BF_STATUS_PANIC = 9,
  BF_STATUS_OTHER = 10,
} BfStatus;

typedef enum BfClassKind {
  BF_CLASS_KIND_BENT = 0,
  BF_CLASS_KIND_PLATEAUED = 1,
  BF_CLASS_KIND_AFFINE = 2,
  BF_CLASS_KIND_OTHER = 3,
} BfClassKind;

typedef enum BfVerify {
  BF_VERIFY_AUTO = 0,
  BF_VERIFY_ALWAYS = 1,
  BF_VERIFY_NEVER = 2,
} BfVerify;

/**
 * Opaque Boolean function.
 */
typedef struct BfFunction BfFunction;

/**
 * Spectral class; `s` is the plateau parameter (0 for bent, `n` for
 * affine, -1 otherwise).
 */
typedef struct BfClass {
  enum BfClassKind kind;
  int32_t s;
} BfClass;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *bf_last_error(void);

/**
 * Parse ANF text such as `x1*x2 + x3`. `vars` of 0 infers the variable
 * count from the highest index.
 *
 * # Safety
 * `source` must be a nul-terminated string and `out` a valid pointer.
 */
enum BfStatus bf_function_parse(const char *source, uint32_t vars, struct BfFunction **out);

/**
 * Parse a hex truth table.
 *
 * # Safety
 * `hex` must be a nul-terminated string and `out` a valid pointer.
 */
enum BfStatus bf_function_from_hex(const char *hex, struct BfFunction **out);

/**
 * Build from a truth table of `len = 2^vars` bytes, each 0 or 1.
 *
 * # Safety
 * `bits` must point to `len` readable bytes and `out` be a valid pointer.
 */
enum BfStatus bf_function_from_bits(uint32_t vars,
                                    const uint8_t *bits,
                                    size_t len,
                                    struct BfFunction **out);

/**
 * # Safety
 * `f` must be null or a handle returned by this library, not yet freed.
 */
void bf_function_free(struct BfFunction *f);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void bf_string_free(char *s);

/**
 * # Safety
 * `f` must be a valid handle and `out` a valid pointer.
 */
enum BfStatus bf_function_num_vars(const struct BfFunction *f, uint32_t *out);

/**
 * # Safety
 * `f` must be a valid handle and `out` a valid pointer.
 */
enum BfStatus bf_function_eval(const struct BfFunction *f, size_t x, bool *out);

/**
 * Hex truth table; free the result with [`bf_string_free`].
 *
 * # Safety
 * `f` must be a valid handle and `out` a valid pointer.
 */
enum BfStatus bf_function_to_hex(const struct BfFunction *f, char **out);

/**
 * Canonical ANF text; free the result with [`bf_string_free`].
 *
 * # Safety
 * `f` must be a valid handle and `out` a valid pointer.
 */
enum BfStatus bf_function_anf(const struct BfFunction *f, char **out);

/**
 * Walsh spectrum into `out`, which must hold `len = 2^n` values.
 *
 * # Safety
 * `f` must be a valid handle and `out` point to `len` writable values.
 */
enum BfStatus bf_function_wht(const struct BfFunction *f, int32_t *out, size_t len);

/**
 * # Safety
 * `f` must be a valid handle and `out` a valid pointer.
 */
enum BfStatus bf_function_classify(const struct BfFunction *f, struct BfClass *out);

/**
 * # Safety
 * `f` must be a valid handle and `out` a valid pointer.
 */
enum BfStatus bf_function_is_bent(const struct BfFunction *f, bool *out);

/**
 * Dual of a bent function.
 *
 * # Safety
 * `f` must be a valid handle and `out` a valid pointer.
 */
enum BfStatus bf_function_dual(const struct BfFunction *f, struct BfFunction **out);

/**
 * Synthesize from `count` support rows of `width` bits, row `i` carrying
 * the sign of `dual` at point `i`.
 *
 * # Safety
 * `rows` must point to `count` values; `dual` must be a valid handle and
 * `out` a valid pointer.
 */
enum BfStatus bf_synthesize_rows(uint32_t width,
                                 const uint64_t *rows,
                                 size_t count,
                                 const struct BfFunction *dual,
                                 struct BfFunction **out);

/**
 * # Safety
 * All handles must be valid and `out` a valid pointer.
 */
enum BfStatus bf_rothaus(const struct BfFunction *a,
                         const struct BfFunction *b,
                         const struct BfFunction *cc,
                         uint32_t verify_mode,
                         struct BfFunction **out);

/**
 * # Safety
 * All handles must be valid and `out` a valid pointer.
 */
enum BfStatus bf_gen_rothaus_a(const struct BfFunction *a,
                               const struct BfFunction *b,
                               const struct BfFunction *cc,
                               uint32_t verify_mode,
                               struct BfFunction **out);

/**
 * # Safety
 * All handles must be valid and `out` a valid pointer.
 */
enum BfStatus bf_gen_rothaus_b(const struct BfFunction *a,
                               const struct BfFunction *b,
                               uint32_t verify_mode,
                               struct BfFunction **out);

/**
 * # Safety
 * All handles must be valid and `out` a valid pointer.
 */
enum BfStatus bf_bent_concatenation(const struct BfFunction *f1,
                                    const struct BfFunction *f2,
                                    const struct BfFunction *f3,
                                    uint32_t verify_mode,
                                    struct BfFunction **out);

/**
 * Indirect sum on disjoint variables; `out_dual` may be null.
 *
 * # Safety
 * All handles must be valid and `out` a valid pointer.
 */
enum BfStatus bf_indirect_sum(const struct BfFunction *f1,
                              const struct BfFunction *f2,
                              const struct BfFunction *g1,
                              const struct BfFunction *g2,
                              uint32_t verify_mode,
                              struct BfFunction **out,
                              struct BfFunction **out_dual);

/**
 * # Safety
 * All handles must be valid and `out` a valid pointer.
 */
enum BfStatus bf_gen_indirect_sum_b(const struct BfFunction *f1,
                                    const struct BfFunction *f2,
                                    const struct BfFunction *g1,
                                    const struct BfFunction *g2,
                                    uint32_t verify_mode,
                                    struct BfFunction **out);

/**
 * # Safety
 * All handles must be valid and `out` a valid pointer.
 */
enum BfStatus bf_gen_indirect_sum_c(const struct BfFunction *f1,
                                    const struct BfFunction *f2,
                                    const struct BfFunction *g1,
                                    const struct BfFunction *g2,
                                    uint32_t verify_mode,
                                    struct BfFunction **out);

/**
 * `g = f1 f2 + f1 f3 + f2 f3`; `out_dual` may be null.
 *
 * # Safety
 * All handles must be valid and `out` a valid pointer.
 */
enum BfStatus bf_mesnager_g(const struct BfFunction *f1,
                            const struct BfFunction *f2,
                            const struct BfFunction *f3,
                            uint32_t verify_mode,
                            struct BfFunction **out,
                            struct BfFunction **out_dual);

/**
 * `f1 + (m.x + 1)(f1 + f2 + 1)(f1 + f3 + 1)`.
 *
 * # Safety
 * All handles must be valid and `out` a valid pointer.
 */
enum BfStatus bf_generic_method_a(const struct BfFunction *f1,
                                  const struct BfFunction *f2,
                                  const struct BfFunction *f3,
                                  uint64_t m,
                                  uint32_t verify_mode,
                                  struct BfFunction **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BENTFORGE_H */
