/* C interface to the quasipf library. All handles are opaque; every call
 * returns a status code and, on failure, leaves a message retrievable with
 * qpf_last_error() on the calling thread. */
#ifndef QUASIPF_QUASIPF_H
#define QUASIPF_QUASIPF_H

#include <stdint.h>

#if defined(_WIN32)
#define QPF_API __declspec(dllexport)
#else
#define QPF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpf_status {
  QPF_OK = 0,
  QPF_BAD_INPUT = 1,
  QPF_SINGULAR = 2,
  QPF_TAG_MISMATCH = 3,
  QPF_DIM_MISMATCH = 4,
  QPF_TOO_LARGE = 5,
  QPF_VERIFY_FAILED = 6, /* computation ran, some residual is nonzero */
  QPF_INTERNAL = 7
} qpf_status;

/* Rendered outcome of one call: a JSON document, a short text form and a
 * pass flag. */
typedef struct qpf_result qpf_result;

/* A validated skew linear system A x = b. */
typedef struct qpf_system qpf_system;

typedef struct qpf_config {
  const char *ring; /* "rational" | "quaternion" | "block" */
  int block_dim;
  int n;         /* largest level */
  int nodes;     /* 0 picks 2n + 4 */
  uint64_t seed;
  int instances; /* per size / level in the suites */
} qpf_config;

/* block(2), n = 2, nodes 0, seed 7, 3 instances. */
QPF_API void qpf_config_init(qpf_config *cfg);

QPF_API const char *qpf_status_string(qpf_status s);
QPF_API const char *qpf_last_error(void);

QPF_API qpf_status qpf_system_load(const char *json_text, qpf_system **out);
QPF_API int qpf_system_size(const qpf_system *sys);
/* method: "direct", "qpf" or "both". QPF_VERIFY_FAILED when the methods
 * disagree or A x - b is nonzero; *out is still set. */
QPF_API qpf_status qpf_system_solve(const qpf_system *sys, const char *method, qpf_result **out);
QPF_API void qpf_system_free(qpf_system *sys);

/* Classical Pfaffian of a rational skew matrix (matrix JSON format), or a
 * quasi-Pfaffian when the document has "body" and "boxed". */
QPF_API qpf_status qpf_pfaffian(const char *json_text, qpf_result **out);

/* Seeded suites. suite is a suite name or "all". */
QPF_API qpf_status qpf_verify(const qpf_config *cfg, const char *suite, qpf_result **out);
/* B-Toda state table for levels 1..n plus the btoda suite. */
QPF_API qpf_status qpf_btoda(const qpf_config *cfg, qpf_result **out);
/* Polynomial coefficient table P_0..P_{2n+1} plus the sop suite. */
QPF_API qpf_status qpf_sop(const qpf_config *cfg, qpf_result **out);

/* Number of suite names; qpf_suite_name(i) for 0 <= i < count. */
QPF_API int qpf_suite_count(void);
QPF_API const char *qpf_suite_name(int i);

QPF_API const char *qpf_result_json(const qpf_result *r);
QPF_API const char *qpf_result_text(const qpf_result *r);
QPF_API int qpf_result_passed(const qpf_result *r);
QPF_API void qpf_result_free(qpf_result *r);

#ifdef __cplusplus
}
#endif

#endif
