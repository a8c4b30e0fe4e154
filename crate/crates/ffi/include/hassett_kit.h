#ifndef HASSETT_KIT_H
#define HASSETT_KIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes. Zero is success.
typedef enum HkStatus {
  HK_STATUS_OK = 0,
  HK_STATUS_NULL_POINTER = 1,
  HK_STATUS_INVALID_UTF8 = 2,
  HK_STATUS_PARSE_ERROR = 3,
  // The input is well formed but refused, e.g. inadmissible weights.
  HK_STATUS_REJECTED = 4,
  HK_STATUS_RESOURCE_LIMIT = 5,
  HK_STATUS_INTERNAL = 6,
  HK_STATUS_PANIC = 7,
} HkStatus;

typedef enum HkMode {
  HK_MODE_STRICT = 0,
  HK_MODE_SUM_TWO = 1,
} HkMode;

// A polynomial with rational coefficients over named variables.
typedef struct HkPolynomial HkPolynomial;

// Validated weight data.
typedef struct HkWeightData HkWeightData;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. The pointer
// stays valid until the next call into this library on the same thread.
const char *hk_last_error_message(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void hk_string_free(char *s);

// Parses weight data from JSON: either an array of fraction strings (using
// `genus` and `mode`) or an object with "genus", "mode" and "weights".
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum HkStatus hk_weight_data_parse(const char *json,
                                   uint32_t genus,
                                   enum HkMode mode,
                                   struct HkWeightData **out);

// The Kapranov weights `A_{r,s}[n]`.
//
// # Safety
// `out` must be a valid pointer.
enum HkStatus hk_kapranov_weights(uintptr_t n, uintptr_t r, uintptr_t s, struct HkWeightData **out);

// # Safety
// `w` must be NULL or a handle from this library that has not been freed.
void hk_weight_data_free(struct HkWeightData *w);

// Number of markings, or 0 for a NULL handle.
//
// # Safety
// `w` must be NULL or a live handle.
uintptr_t hk_weight_data_len(const struct HkWeightData *w);

// JSON object with "genus", "mode" and "weights".
//
// # Safety
// `w` must be a live handle and `out` a valid pointer.
enum HkStatus hk_weight_data_to_json(const struct HkWeightData *w, char **out);

// `3g - 3 + n`.
//
// # Safety
// `w` must be a live handle and `out` a valid pointer.
enum HkStatus hk_moduli_dimension(const struct HkWeightData *w, int64_t *out);

// Whether the transposition of the 1-based labels `i` and `j` is admissible.
//
// # Safety
// `w` must be a live handle and `out` a valid pointer.
enum HkStatus hk_is_admissible_transposition(const struct HkWeightData *w,
                                             uintptr_t i,
                                             uintptr_t j,
                                             bool *out);

// Order of the group generated by admissible transpositions.
//
// # Safety
// `w` must be a live handle and `out` a valid pointer.
enum HkStatus hk_admissible_group_order(const struct HkWeightData *w, uint64_t *out);

// Automorphism group order of the coarse moduli space. Sets `*finite` to
// false (and `*order` to 0) when the group is infinite or not known in
// closed form.
//
// # Safety
// `w` must be a live handle; `order` and `finite` valid pointers.
enum HkStatus hk_aut_order(const struct HkWeightData *w, uint64_t *order, bool *finite);

// Parses `expr` over the comma-separated variable list `vars`.
//
// # Safety
// `vars` and `expr` must be NUL-terminated strings and `out` a valid pointer.
enum HkStatus hk_poly_parse(const char *vars, const char *expr, struct HkPolynomial **out);

// # Safety
// `p` must be NULL or a handle from this library that has not been freed.
void hk_poly_free(struct HkPolynomial *p);

// Canonical text form.
//
// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum HkStatus hk_poly_to_string(const struct HkPolynomial *p, char **out);

// Partial derivative with respect to the variable named `var`.
//
// # Safety
// `p` must be a live handle, `var` a NUL-terminated string and `out` a
// valid pointer.
enum HkStatus hk_poly_derivative(const struct HkPolynomial *p,
                                 const char *var,
                                 struct HkPolynomial **out);

// Evaluates at a point given as `len` fraction strings; the value is
// returned as a fraction string.
//
// # Safety
// `p` must be a live handle, `coords` an array of `len` NUL-terminated
// strings and `out` a valid pointer.
enum HkStatus hk_poly_evaluate(const struct HkPolynomial *p,
                               const char *const *coords,
                               uintptr_t len,
                               char **out);

// Local Tyurina number of `p` at the point given by `len` fraction strings.
//
// # Safety
// As for [`hk_poly_evaluate`].
enum HkStatus hk_tyurina_number(const struct HkPolynomial *p,
                                const char *const *coords,
                                uintptr_t len,
                                uint64_t *out);

// Dimension of the quotient by the ideal with generators `gens` (separated
// by ';'). `*finite` is false when the quotient is infinite dimensional.
//
// # Safety
// `vars` and `gens` must be NUL-terminated strings; `dim` and `finite`
// valid pointers.
enum HkStatus hk_quotient_dimension(const char *vars,
                                    const char *gens,
                                    uint64_t *dim,
                                    bool *finite);

// Total Tyurina number of the Segre cubic, summed over charts.
//
// # Safety
// `out` must be a valid pointer.
enum HkStatus hk_segre_audit(uint64_t *out);

// The deformation ledger of the Segre cubic as a JSON object.
//
// # Safety
// `out` must be a valid pointer.
enum HkStatus hk_segre_ledger_json(char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HASSETT_KIT_H */
