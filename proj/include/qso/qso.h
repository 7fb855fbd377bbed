/* C interface of libqso: construction, normalization and verification of
 * Casimir elements of the nonstandard q-deformed orthogonal algebras
 * U'_q(so_n) and of their Gel'fand-Tsetlin representations.
 *
 * All functions return a qso_status; QSO_OK means success. On failure a
 * thread-local message is available from qso_last_error(). Strings returned
 * through char** are heap-allocated and must be released with
 * qso_string_free(); elements with qso_element_free().
 */
#ifndef QSO_H
#define QSO_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qso_status {
  QSO_OK = 0,
  QSO_ERROR_INVALID_ARGUMENT = 1,
  QSO_ERROR_PARSE = 2,
  QSO_ERROR_DIVISION_BY_ZERO = 3,
  QSO_ERROR_POLE = 4,
  QSO_ERROR_DOMAIN = 5,
  QSO_ERROR_INTERNAL = 6
} qso_status;

/* Rendering styles for element text. */
#define QSO_STYLE_PRETTY_Q 0
#define QSO_STYLE_EXACT_U 1

typedef struct qso_element qso_element; /* opaque algebra element */

const char* qso_version(void);
const char* qso_status_name(qso_status status);
const char* qso_last_error(void);
void qso_string_free(char* s);
void qso_element_free(qso_element* e);

/* Element text syntax: I+(k,l), I-(k,l) (I(k,l) for basic generators),
 * juxtaposition for products, +/-, ^ powers, coefficients in q, q^(1/2), u,
 * i and exact rationals. */
qso_status qso_element_parse(const char* text, qso_element** out);
qso_status qso_element_to_string(const qso_element* e, int style, char** out);
/* PBW normal form over ordered I+ monomials, for generator indices <= n. */
qso_status qso_element_normalize(const qso_element* e, int n, qso_element** out);
qso_status qso_element_mul(const qso_element* a, const qso_element* b, qso_element** out);
qso_status qso_element_equal(const qso_element* a, const qso_element* b, int* equal);

/* Casimir element C^(2r)_n, 1 <= r <= n/2 (unnormalized constructor form). */
qso_status qso_casimir_c2r(int n, int r, qso_element** out);
/* Top Casimir C^(n)+/- for even n; sign is '+' or '-'. */
qso_status qso_casimir_top(int n, char sign, qso_element** out);

/* JSON array of {"weights": "...", "dimension": d} for all dominant weights
 * with entries bounded by max_entry (an exact rational like "2" or "3/2"). */
qso_status qso_irreps_json(int n, const char* max_entry, char** out);

/* Verification battery. config_json fields:
 *   n               int (required)
 *   weights         array of weight strings ("1,0"); or
 *   max_entry       string bound generating all dominant weights
 *   q0              array of positive reals (default [1.2, 0.85, 2.0])
 *   symbolic        bool, run exact centrality checks (default false)
 *   symbolic_limit  int, skip exact checks above this n (default 4)
 *   identities      bool (default true)
 *   negative_controls bool (default true)
 *   jobs            int worker threads (default 1)
 *   precision       int digits in the text report (default 12)
 * report_json / report_text may each be NULL when not wanted; *passed is set
 * to 1 when every check passes and the negative controls misbehave nowhere.
 */
qso_status qso_verify_run(const char* config_json, char** report_json, char** report_text,
                          int* passed);

/* Casimir eigenvalue table. config_json fields: n, weights or max_entry, q0,
 * jobs, precision, format ("csv", "json" or "text"). */
qso_status qso_spectrum_run(const char* config_json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QSO_H */
