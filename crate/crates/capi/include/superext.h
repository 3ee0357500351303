#ifndef SUPEREXT_H
#define SUPEREXT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * ABI version of this header/library pair.
 */
#define SX_ABI_VERSION 1

/**
 * Status code returned by every fallible call.
 */
typedef enum SxStatus {
  SxOk = 0,
  SxInvalidArgument = 1,
  SxTooLarge = 2,
  SxNotFound = 3,
  SxIoError = 4,
  SxCorruptData = 5,
  SxInternalError = 6,
} SxStatus;

/**
 * Opaque finite group handle.
 */
typedef struct SxGroup SxGroup;

/**
 * Opaque λ(G) handle: the semigroup plus cached analysis.
 */
typedef struct SxLambda SxLambda;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * ABI version of the loaded library.
 */
uint32_t sx_abi_version(void);

/**
 * λ(n): the number of maximal linked families on an n-element set (n ≤ 7).
 *
 * # Safety
 * `out_count` must be a valid pointer.
 */
enum SxStatus sx_count_lambda(uint8_t n, uint32_t workers, uint64_t *out_count);

/**
 * The cyclic group of order n.
 *
 * # Safety
 * `out` must be a valid pointer; the result must be freed with
 * [`sx_group_free`].
 */
enum SxStatus sx_group_cyclic(uint8_t n, struct SxGroup **out);

/**
 * The Klein four-group C₂×C₂.
 *
 * # Safety
 * As [`sx_group_cyclic`].
 */
enum SxStatus sx_group_klein4(struct SxGroup **out);

/**
 * The symmetric group on k points (k ≤ 5).
 *
 * # Safety
 * As [`sx_group_cyclic`].
 */
enum SxStatus sx_group_symmetric(uint8_t k, struct SxGroup **out);

/**
 * A group from a row-major Cayley table of `order`×`order` entries.
 *
 * # Safety
 * `table` must point to `order*order` readable entries; `out` must be valid.
 */
enum SxStatus sx_group_from_table(uint32_t order, const uint32_t *table, struct SxGroup **out);

/**
 * # Safety
 * `g` must be a live handle from this library (or null, a no-op).
 */
void sx_group_free(struct SxGroup *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
uint32_t sx_group_order(const struct SxGroup *g);

/**
 * Catalog name of the group ("C4", "C2xC2", "S4", … or "unknown").
 *
 * # Safety
 * `g` must be a live handle; `buf` must hold `buf_len` writable bytes.
 */
enum SxStatus sx_group_name(const struct SxGroup *g, char *buf, uintptr_t buf_len);

/**
 * Build λ(G) for a group of order ≤ 5.
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid; the result must be freed
 * with [`sx_lambda_free`].
 */
enum SxStatus sx_lambda_build(const struct SxGroup *g, struct SxLambda **out);

/**
 * # Safety
 * `l` must be a live handle from this library (or null, a no-op).
 */
void sx_lambda_free(struct SxLambda *l);

/**
 * Number of elements of λ(G).
 *
 * # Safety
 * `l` must be a live handle.
 */
uint32_t sx_lambda_size(const struct SxLambda *l);

/**
 * Product of elements i and j (λ indices).
 *
 * # Safety
 * `l` must be a live handle; `out` must be valid.
 */
enum SxStatus sx_lambda_product(const struct SxLambda *l, uint32_t i, uint32_t j, uint32_t *out);

/**
 * λ index of the principal ultrafilter at group element `g`.
 *
 * # Safety
 * `l` must be a live handle; `out` must be valid.
 */
enum SxStatus sx_lambda_principal_index(const struct SxLambda *l, uint32_t g, uint32_t *out);

/**
 * λ index of the zero element, if the semigroup has one
 * (`SX_NOT_FOUND` otherwise).
 *
 * # Safety
 * `l` must be a live handle; `out` must be valid.
 */
enum SxStatus sx_lambda_zero(const struct SxLambda *l, uint32_t *out);

/**
 * Number of idempotents of λ(G).
 *
 * # Safety
 * `l` must be a live handle.
 */
uint32_t sx_lambda_idempotent_count(const struct SxLambda *l);

/**
 * Number of orbits of the left G-action on λ(G).
 *
 * # Safety
 * `l` must be a live handle.
 */
uint32_t sx_lambda_orbit_count(const struct SxLambda *l);

/**
 * Size of the unique maximal proper ideal (`SX_NOT_FOUND` when none, e.g.
 * when λ(G) is a group).
 *
 * # Safety
 * `l` must be a live handle; `out` must be valid.
 */
enum SxStatus sx_lambda_maximal_ideal_size(const struct SxLambda *l, uint32_t *out);

/**
 * Display label of element `i` ("△", "2Θ+2", …).
 *
 * # Safety
 * `l` must be a live handle; `buf` must hold `buf_len` writable bytes.
 */
enum SxStatus sx_lambda_element_label(const struct SxLambda *l,
                                      uint32_t i,
                                      char *buf,
                                      uintptr_t buf_len);

/**
 * Order and catalog name of Aut(λ(G)), computed on first call and cached
 * on the handle.
 *
 * # Safety
 * `l` must be a live, uniquely held handle; `out_order` must be valid;
 * `name_buf` must hold `name_len` writable bytes (pass null/0 to skip the
 * name).
 */
enum SxStatus sx_lambda_aut(struct SxLambda *l,
                            uint64_t *out_order,
                            char *name_buf,
                            uintptr_t name_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPEREXT_H */
