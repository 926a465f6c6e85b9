#ifndef COMMUTING_CI_H
#define COMMUTING_CI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CciStatus {
  CCI_STATUS_OK = 0,
  CCI_STATUS_NULL_POINTER = 1,
  CCI_STATUS_INVALID_ARGUMENT = 2,
  // A resource limit stopped the computation; no verdict was reached.
  CCI_STATUS_INCOMPLETE = 3,
  CCI_STATUS_INTERNAL = 4,
} CciStatus;

typedef enum CciVerdict {
  CCI_VERDICT_CI = 0,
  CCI_VERDICT_NOT_CI = 1,
  CCI_VERDICT_INCOMPLETE = 2,
  CCI_VERDICT_INCONCLUSIVE = 3,
} CciVerdict;

// Opaque complete-intersection report.
typedef struct CciReport CciReport;

// Opaque witness report.
typedef struct CciWitness CciWitness;

// Resource limits; a zero field selects the library default.
typedef struct CciLimits {
  uint32_t degree_cap;
  uint64_t timeout_seconds;
} CciLimits;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread, or NULL. The
// pointer stays valid until the next failing call on the same thread.
const char *cci_last_error(void);

// Library version as a static string.
const char *cci_version(void);

// Decides whether the genus-`genus` commuting variety of `group` (`"un"`
// or `"bn"`) is a complete intersection over `field` (`"q"` or `"gf:p"`).
// A run stopped by `limits` still returns `Ok` with verdict `Incomplete`.
//
// # Safety
// `group` and `field` must be NUL-terminated strings; `out` must be
// writable.
enum CciStatus cci_decide(const char *group,
                          uintptr_t n,
                          uintptr_t genus,
                          const char *field,
                          uint64_t order_seed,
                          struct CciLimits limits,
                          struct CciReport **out);

// # Safety
// `report` must come from [`cci_decide`] and `out` must be writable.
enum CciStatus cci_report_verdict(const struct CciReport *report, enum CciVerdict *out);

// Codimension of the generator ideal. Fails with `Incomplete` when the
// report carries none.
//
// # Safety
// `report` must come from [`cci_decide`] and `out` must be writable.
enum CciStatus cci_report_codim(const struct CciReport *report, uintptr_t *out);

// JSON rendering of the report; free with [`cci_string_free`].
//
// # Safety
// `report` must come from [`cci_decide`] and `out` must be writable.
enum CciStatus cci_report_json(const struct CciReport *report, char **out);

// # Safety
// `report` must come from [`cci_decide`] or be NULL, and not be used
// afterwards.
void cci_report_free(struct CciReport *report);

// Runs the membership witness for `U_n`, `n ≥ 6`.
//
// # Safety
// `field` must be a NUL-terminated string; `out` must be writable.
enum CciStatus cci_witness(const char *field,
                           uintptr_t n,
                           uint64_t order_seed,
                           struct CciLimits limits,
                           struct CciWitness **out);

// # Safety
// `witness` must come from [`cci_witness`] and `out` must be writable.
enum CciStatus cci_witness_verdict(const struct CciWitness *witness, enum CciVerdict *out);

// # Safety
// `witness` must come from [`cci_witness`] and `out` must be writable.
enum CciStatus cci_witness_json(const struct CciWitness *witness, char **out);

// # Safety
// `witness` must come from [`cci_witness`] or be NULL, and not be used
// afterwards.
void cci_witness_free(struct CciWitness *witness);

// JSON slice report `{i, w, chain_dims, h_dim, status}` for `H_i` at
// weight `w` of the Koszul complex of a unipotent commutator word.
//
// # Safety
// `group` and `field` must be NUL-terminated strings; `out` must be
// writable.
enum CciStatus cci_koszul_slice(const char *group,
                                uintptr_t n,
                                uintptr_t genus,
                                const char *field,
                                uintptr_t i,
                                uint32_t w,
                                uintptr_t slice_cap,
                                char **out);

// Generator listing, one `f[i][j]: poly` line each.
//
// # Safety
// `group` and `field` must be NUL-terminated strings; `out` must be
// writable.
enum CciStatus cci_dump_generators(const char *group,
                                   uintptr_t n,
                                   uintptr_t genus,
                                   const char *field,
                                   char **out);

// Releases a string returned by this library.
//
// # Safety
// `s` must come from this library or be NULL, and not be used afterwards.
void cci_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMMUTING_CI_H */
