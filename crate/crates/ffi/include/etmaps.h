/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef ETMAPS_H
#define ETMAPS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EtmapsStatus {
  ETMAPS_OK = 0,
  ETMAPS_NULL_POINTER = 1,
  ETMAPS_INVALID_ARGUMENT = 2,
  ETMAPS_NOT_PRIME_POWER = 3,
  ETMAPS_PARSE_ERROR = 4,
  /**
   * The operation needs a map without boundary.
   */
  ETMAPS_HAS_BOUNDARY = 5,
  ETMAPS_PANIC = 6,
} EtmapsStatus;

/**
 * Opaque map handle.
 */
typedef struct EtmapsMap EtmapsMap;

/**
 * Orbit counts of a map.
 */
typedef struct EtmapsCounts {
  uint64_t flags;
  uint64_t vertices;
  uint64_t edges;
  uint64_t faces;
  uint64_t petrie;
} EtmapsCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. Valid
 * until the next call into this library on the same thread.
 */
const char *etmaps_last_error(void);

/**
 * The Biggs map `M_n(c)`; `c` is a field element index.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum EtmapsStatus etmaps_biggs(uint64_t n, uint32_t c, struct EtmapsMap **out);

/**
 * The James map `M_n(c, j)`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum EtmapsStatus etmaps_james(uint64_t n, uint32_t c, int64_t j, struct EtmapsMap **out);

/**
 * The regular maps on `K6`: `which = 0` for `{3,5}_5`, `1` for `{5,5}_3`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum EtmapsStatus etmaps_k6(uint32_t which, struct EtmapsMap **out);

/**
 * Parses a map in `flagmap v1` text format.
 *
 * # Safety
 * `text` must be null or a nul-terminated string; `out` must be null or
 * valid for writes.
 */
enum EtmapsStatus etmaps_parse(const char *text, struct EtmapsMap **out);

/**
 * Releases a map. Null is ignored.
 *
 * # Safety
 * `m` must be null or a handle from this library not yet freed.
 */
void etmaps_map_free(struct EtmapsMap *m);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void etmaps_string_free(char *s);

/**
 * The map in `flagmap v1` text format, or null for a null handle.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
char *etmaps_to_text(const struct EtmapsMap *m);

/**
 * The dual map, a new handle.
 *
 * # Safety
 * `m` must be null or a live handle; `out` must be null or valid for writes.
 */
enum EtmapsStatus etmaps_dual(const struct EtmapsMap *m, struct EtmapsMap **out);

/**
 * The Petrie dual, a new handle.
 *
 * # Safety
 * `m` must be null or a live handle; `out` must be null or valid for writes.
 */
enum EtmapsStatus etmaps_petrie_dual(const struct EtmapsMap *m, struct EtmapsMap **out);

/**
 * # Safety
 * `m` must be null or a live handle; `out` must be null or valid for writes.
 */
enum EtmapsStatus etmaps_counts(const struct EtmapsMap *m, struct EtmapsCounts *out);

/**
 * Euler characteristic `V - E + F`.
 *
 * # Safety
 * `m` must be null or a live handle; `out` must be null or valid for writes.
 */
enum EtmapsStatus etmaps_chi(const struct EtmapsMap *m, int64_t *out);

/**
 * Genus of an orientable map, crosscap number of a non-orientable one;
 * `ETMAPS_HAS_BOUNDARY` for maps with boundary.
 *
 * # Safety
 * `m` must be null or a live handle; `out` must be null or valid for writes.
 */
enum EtmapsStatus etmaps_genus_or_crosscaps(const struct EtmapsMap *m, int64_t *out);

/**
 * # Safety
 * `m` must be null or a live handle; `out` must be null or valid for writes.
 */
enum EtmapsStatus etmaps_is_orientable(const struct EtmapsMap *m, bool *out);

/**
 * Order of the automorphism group.
 *
 * # Safety
 * `m` must be null or a live handle; `out` must be null or valid for writes.
 */
enum EtmapsStatus etmaps_aut_order(const struct EtmapsMap *m, uint64_t *out);

/**
 * Edge-transitivity class label such as `"2Pex"`, or null for a null
 * handle. The string is static and must not be freed.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
const char *etmaps_et_class(const struct EtmapsMap *m);

/**
 * The JSON report, including formula values for maps made by the
 * constructors. Caller frees with [`etmaps_string_free`].
 *
 * # Safety
 * `m` must be null or a live handle.
 */
char *etmaps_report_json(const struct EtmapsMap *m);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ETMAPS_H */
