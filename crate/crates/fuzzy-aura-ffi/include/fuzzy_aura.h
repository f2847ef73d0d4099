#ifndef FUZZY_AURA_H
#define FUZZY_AURA_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum FaStatus {
  /**
   * Success.
   */
  FA_STATUS_OK = 0,
  /**
   * A pointer argument was null or a string was not valid UTF-8.
   */
  FA_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Input failed to parse.
   */
  FA_STATUS_PARSE_ERROR = 2,
  /**
   * The operation violated a domain invariant.
   */
  FA_STATUS_DOMAIN_ERROR = 3,
} FaStatus;

/**
 * Opaque fuzzy set handle.
 */
typedef struct FaSet FaSet;

/**
 * Opaque space handle.
 */
typedef struct FaSpace FaSpace;

/**
 * Boolean openness flags for one fuzzy set.
 */
typedef struct FaOpennessProfile {
  bool open;
  bool a_open;
  bool semi;
  bool pre;
  bool alpha;
  bool beta;
  bool b;
} FaOpennessProfile;

/**
 * Boolean separation flags for one space.
 */
typedef struct FaSeparationProfile {
  bool t0;
  bool t1;
  bool t2;
  bool regular;
} FaSeparationProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *fa_last_error_message(void);

/**
 * Parses a space from a JSON document (same schema as the CLI accepts).
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FaStatus fa_space_from_json(const char *json, bool strict, struct FaSpace **out);

/**
 * Releases a space handle. Null is ignored.
 *
 * # Safety
 * `space` must come from `fa_space_from_json` and not be freed twice.
 */
void fa_space_free(struct FaSpace *space);

/**
 * Parses a fuzzy set from a JSON document with `universe` and `grades`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FaStatus fa_set_from_json(const char *json, struct FaSet **out);

/**
 * Releases a set handle. Null is ignored.
 *
 * # Safety
 * `set` must come from this library and not be freed twice.
 */
void fa_set_free(struct FaSet *set);

/**
 * Number of points in the set's universe.
 *
 * # Safety
 * `set` must be a live handle.
 */
uintptr_t fa_set_size(const struct FaSet *set);

/**
 * Copies the membership grades into `buffer` (capacity `len`).
 *
 * # Safety
 * `buffer` must point to at least `len` writable doubles.
 */
enum FaStatus fa_set_grades(const struct FaSet *set, double *buffer, uintptr_t len);

/**
 * Aura closure of `set` in `space`.
 *
 * # Safety
 * All handles must be live; `out` must be a valid pointer.
 */
enum FaStatus fa_closure(const struct FaSpace *space, const struct FaSet *set, struct FaSet **out);

/**
 * Aura interior of `set` in `space`.
 *
 * # Safety
 * All handles must be live; `out` must be a valid pointer.
 */
enum FaStatus fa_interior(const struct FaSpace *space, const struct FaSet *set, struct FaSet **out);

/**
 * Iterated closure; `steps < 0` runs to the fixpoint.
 *
 * # Safety
 * All handles must be live; `out` must be a valid pointer.
 */
enum FaStatus fa_iterated_closure(const struct FaSpace *space,
                                  const struct FaSet *set,
                                  int32_t steps,
                                  struct FaSet **out);

/**
 * Openness flags of `set` in `space`.
 *
 * # Safety
 * All handles must be live; `out` must be a valid pointer.
 */
enum FaStatus fa_openness_profile(const struct FaSpace *space,
                                  const struct FaSet *set,
                                  struct FaOpennessProfile *out);

/**
 * Separation flags of `space`.
 *
 * # Safety
 * `space` must be live; `out` must be a valid pointer.
 */
enum FaStatus fa_separation_profile(const struct FaSpace *space, struct FaSeparationProfile *out);

/**
 * Accuracy rho and roughness sigma of `set` under the rough model.
 *
 * # Safety
 * All handles must be live; `rho` and `sigma` must be valid pointers.
 */
enum FaStatus fa_accuracy(const struct FaSpace *space,
                          const struct FaSet *set,
                          double *rho,
                          double *sigma);

/**
 * Runs the decision pipeline on a JSON problem document and returns the
 * full result as a JSON string. Free it with `fa_string_free`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FaStatus fa_mcdm_run_json(const char *json, double alpha, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void fa_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* FUZZY_AURA_H */
