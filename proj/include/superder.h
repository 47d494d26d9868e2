/*
 * superder.h — C API of the superder shared library.
 *
 * All results are returned as heap-allocated UTF-8 strings (JSON or CSV);
 * release them with sd_string_free. Algebras are opaque handles released
 * with sd_algebra_free. Every call returns a status code; on failure,
 * sd_last_error() describes the problem (thread-local).
 *
 * Status codes double as CLI exit codes: 1 for domain errors (invalid family
 * spec, quotient by a non-ideal, bad delta, ...), 2 for I/O or parse errors.
 */

#ifndef SUPERDER_H
#define SUPERDER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sd_algebra sd_algebra;

typedef enum {
    SD_OK = 0,
    SD_ERR_DOMAIN = 1,
    SD_ERR_IO = 2
} sd_status;

const char* sd_version(void);

/* Thread-local message for the most recent failing call. */
const char* sd_last_error(void);

void sd_string_free(char* s);
void sd_algebra_free(sd_algebra* a);

/* Build a catalog member from a spec string: "A:1,0", "Aqq:1", "B:1,1",
 * "C:2", "D:2,1", "P:2", "Q:2", "D21:2/3", or the fixture "sl2". */
sd_status sd_construct(const char* spec, sd_algebra** out);

/* Load an algebra from its JSON form; sidecar_json (labels/cartan/family) is
 * optional and may be NULL. */
sd_status sd_algebra_from_json(const char* algebra_json, const char* sidecar_json,
                               sd_algebra** out);

int sd_algebra_dim(const sd_algebra* a);

sd_status sd_algebra_to_json(const sd_algebra* a, char** out);

/* Label map, Cartan indices and family spec, as JSON. */
sd_status sd_sidecar_to_json(const sd_algebra* a, char** out);

/* {"status":"ok"} or {"status":"violated","violations":[...]} */
sd_status sd_jacobi_report(const sd_algebra* a, char** out);

/* Root decomposition with respect to the algebra's Cartan data (requires a
 * constructed algebra or a sidecar carrying "cartan"). */
sd_status sd_root_report(const sd_algebra* a, char** out);

/* Derivation space at delta given as "n/d" (or an integer string). */
sd_status sd_derive(const sd_algebra* a, const char* delta, char** out);

/* Parametric critical-value scan; the seed drives the pointwise probes. */
sd_status sd_scan(const sd_algebra* a, unsigned long long seed, char** out);

/* Batch CSV over the catalog; jobs caps the parallel fan-out, max_dim <= 0
 * means no size cap. */
sd_status sd_report_csv(int jobs, int max_dim, unsigned long long seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SUPERDER_H */
