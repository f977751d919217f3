#ifndef QF_H
#define QF_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Status codes. The values from 1 to 6 match the exit codes of `qf`.
 */
typedef enum QfStatus {
  QF_STATUS_OK = 0,
  /**
   * The input parsed but is not a valid quandle or group.
   */
  QF_STATUS_INVALID = 1,
  /**
   * Malformed JSON, Gauss code or table, or a string that is not UTF-8.
   */
  QF_STATUS_PARSE = 2,
  /**
   * An argument is out of range or a precondition does not hold.
   */
  QF_STATUS_PRECONDITION = 3,
  /**
   * A search budget or size cap was exceeded.
   */
  QF_STATUS_LIMIT = 4,
  /**
   * A cross-check found disagreeing counts.
   */
  QF_STATUS_MISMATCH = 5,
  /**
   * An enumeration order cap was exceeded.
   */
  QF_STATUS_ORDER_CAP = 6,
  QF_STATUS_NULL_POINTER = 7,
  /**
   * A Rust panic was caught at the boundary.
   */
  QF_STATUS_PANIC = 8,
} QfStatus;

typedef struct QfDiagram QfDiagram;

typedef struct QfGroup QfGroup;

typedef struct QfQuandle QfQuandle;

/**
 * Message for the last failed call on this thread, or null after a
 * successful one. The pointer stays valid until the next `qf_*` call on
 * the same thread.
 */
const char *qf_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void qf_string_free(char *s);

/**
 * Parses `{"order": n, "table": [[...]]}` and validates it.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum QfStatus qf_quandle_from_json(const char *json, struct QfQuandle **out);

/**
 * # Safety
 * `out` must be a writable pointer.
 */
enum QfStatus qf_quandle_trivial(uintptr_t n, struct QfQuandle **out);

/**
 * The dihedral quandle `a^b = 2b - a mod n`.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum QfStatus qf_quandle_dihedral(uintptr_t n, struct QfQuandle **out);

/**
 * Order of `q`, or 0 if `q` is null.
 *
 * # Safety
 * `q` must be null or a live handle.
 */
uintptr_t qf_quandle_order(const struct QfQuandle *q);

/**
 * Writes `a^b` to `out`.
 *
 * # Safety
 * `q` must be a live handle and `out` a writable pointer.
 */
enum QfStatus qf_quandle_op(const struct QfQuandle *q, uintptr_t a, uintptr_t b, uintptr_t *out);

/**
 * # Safety
 * `q` must be a live handle and `out` a writable pointer.
 */
enum QfStatus qf_quandle_to_json(const struct QfQuandle *q, char **out);

/**
 * # Safety
 * `q` must be null or a handle not yet freed.
 */
void qf_quandle_free(struct QfQuandle *q);

/**
 * Checks the quandle axioms on a JSON table and writes the validation
 * report as JSON. Returns [`QfStatus::Invalid`] when an axiom fails; the
 * report is written in that case too.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `report` a writable pointer.
 */
enum QfStatus qf_validate_json(const char *json, char **report);

/**
 * Parses a group from `{"order", "mult"}` or `{"degree", "perm_gens"}` JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum QfStatus qf_group_from_json(const char *json, struct QfGroup **out);

/**
 * The symmetric group on `n` points, for `1 <= n <= 5`.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum QfStatus qf_group_symmetric(uintptr_t n, struct QfGroup **out);

/**
 * Order of `g`, or 0 if `g` is null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uintptr_t qf_group_order(const struct QfGroup *g);

/**
 * # Safety
 * `g` must be null or a handle not yet freed.
 */
void qf_group_free(struct QfGroup *g);

/**
 * Coset quandle of the subgroup generated by `gens[0..gen_count]` with
 * meridian `meridian`. Fails with [`QfStatus::Precondition`] unless the
 * meridian lies in the center of the subgroup.
 *
 * # Safety
 * `g` must be a live handle, `gens` must point to `gen_count` elements
 * (or be null when `gen_count` is 0), and `out` must be writable.
 */
enum QfStatus qf_coset_quandle(const struct QfGroup *g,
                               const uintptr_t *gens,
                               uintptr_t gen_count,
                               uintptr_t meridian,
                               struct QfQuandle **out);

/**
 * Parses a Gauss code such as `"U1+ O2+ U3+ O1+ U2+ O3+"`.
 *
 * # Safety
 * `code` must be a NUL-terminated string and `out` a writable pointer.
 */
enum QfStatus qf_diagram_parse(const char *code, struct QfDiagram **out);

/**
 * Number of crossings of `d`, or 0 if `d` is null.
 *
 * # Safety
 * `d` must be null or a live handle.
 */
uintptr_t qf_diagram_crossings(const struct QfDiagram *d);

/**
 * # Safety
 * `d` must be null or a handle not yet freed.
 */
void qf_diagram_free(struct QfDiagram *d);

/**
 * Counts colorings of `d` by `q`. A `budget` of 0 selects the default.
 *
 * # Safety
 * `d` and `q` must be live handles and `out` a writable pointer.
 */
enum QfStatus qf_count_colorings(const struct QfDiagram *d,
                                 const struct QfQuandle *q,
                                 uint64_t budget,
                                 uint64_t *out);

/**
 * Compares colorings by the conjugacy class of `m` in `g` with
 * representations of the knot group sending the meridian into that
 * class. Writes the report as JSON and returns [`QfStatus::Mismatch`] if
 * the counts differ. A `budget` of 0 selects the default.
 *
 * # Safety
 * `d` and `g` must be live handles and `report` a writable pointer.
 */
enum QfStatus qf_crosscheck(const struct QfDiagram *d,
                            const struct QfGroup *g,
                            uintptr_t m,
                            uint64_t budget,
                            char **report);

/**
 * Abelianization of the associated group of `q` as
 * `{"rank": r, "torsion": [...]}`.
 *
 * # Safety
 * `q` must be a live handle and `out` a writable pointer.
 */
enum QfStatus qf_adconj_abelianization(const struct QfQuandle *q, char **out);

#endif  /* QF_H */
