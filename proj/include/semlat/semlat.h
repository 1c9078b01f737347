/*
 * semlat C API: finite meet-semilattices, one-variable equation statistics,
 * isomorph-free catalogs and exhaustive verification sweeps.
 *
 * All objects are opaque handles released with the matching *_free call.
 * Every fallible call returns a semlat_status; on failure a message is
 * available from semlat_last_error() on the same thread. Strings returned
 * through char** out-parameters are owned by the caller and must be released
 * with semlat_string_free().
 */
#ifndef SEMLAT_H
#define SEMLAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef SEMLAT_BUILDING_LIBRARY
#    define SEMLAT_API __declspec(dllexport)
#  else
#    define SEMLAT_API __declspec(dllimport)
#  endif
#else
#  define SEMLAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum semlat_status {
  SEMLAT_OK = 0,
  SEMLAT_ERR_INVALID_ARGUMENT = 1,
  SEMLAT_ERR_VALIDATION = 2,
  SEMLAT_ERR_ORDER_RANGE = 3,
  SEMLAT_ERR_FORMAT = 4,
  SEMLAT_ERR_IO = 5,
  SEMLAT_ERR_UNKNOWN_METRIC = 6,
  SEMLAT_ERR_NOT_FOUND = 7,
  SEMLAT_ERR_INTERNAL = 8
} semlat_status;

typedef enum semlat_verdict {
  SEMLAT_VERIFIED = 0,
  SEMLAT_COUNTEREXAMPLE = 1,
  SEMLAT_SKIPPED = 2
} semlat_verdict;

typedef enum semlat_format {
  SEMLAT_FORMAT_JSON = 0,
  SEMLAT_FORMAT_CSV = 1,
  SEMLAT_FORMAT_TEXT = 2
} semlat_format;

typedef struct semlat_lattice semlat_lattice;
typedef struct semlat_catalog semlat_catalog;
typedef struct semlat_report semlat_report;

SEMLAT_API const char* semlat_version(void);
SEMLAT_API const char* semlat_last_error(void);
SEMLAT_API const char* semlat_status_name(semlat_status status);
SEMLAT_API void semlat_string_free(char* s);

/* Largest order accepted for catalogs without allow_large (10); with it, 12. */
SEMLAT_API int semlat_max_catalog_order(int allow_large);

/* ---- semilattices ---------------------------------------------------- */

/* table: n*n row-major meet table. */
SEMLAT_API semlat_status semlat_lattice_from_table(int n, const uint8_t* table,
                                                   semlat_lattice** out);
SEMLAT_API semlat_status semlat_lattice_chain(int n, semlat_lattice** out);
SEMLAT_API semlat_status semlat_lattice_fan(int n, semlat_lattice** out);
/* "L<n>" (chain), "F<n>" (fan) or "S5" (0 < b,c < d < 1). */
SEMLAT_API semlat_status semlat_lattice_builtin(const char* name, semlat_lattice** out);
/* Hex canonical key; SEMLAT_ERR_NOT_FOUND unless it is a canonical key. */
SEMLAT_API semlat_status semlat_lattice_from_key(const char* hex, semlat_lattice** out);
SEMLAT_API void semlat_lattice_free(semlat_lattice* l);

SEMLAT_API int semlat_lattice_order(const semlat_lattice* l);
SEMLAT_API semlat_status semlat_lattice_meet(const semlat_lattice* l, int s, int t,
                                             int* out);
SEMLAT_API semlat_status semlat_lattice_leq(const semlat_lattice* l, int s, int t, int* out);
/* Bit e set for element e. */
SEMLAT_API semlat_status semlat_lattice_atoms(const semlat_lattice* l, uint32_t* mask);
SEMLAT_API semlat_status semlat_lattice_coatoms(const semlat_lattice* l, uint32_t* mask);
SEMLAT_API semlat_status semlat_lattice_canonical_key(const semlat_lattice* l, char** hex);
SEMLAT_API semlat_status semlat_lattice_isomorphic(const semlat_lattice* a,
                                                   const semlat_lattice* b, int* out);
/* sizes must hold semlat_lattice_order(l) entries. */
SEMLAT_API semlat_status semlat_lattice_cov1_sizes(const semlat_lattice* l, int64_t* sizes,
                                                   size_t capacity);
SEMLAT_API semlat_status semlat_lattice_sigma(const semlat_lattice* l, int64_t* sigma,
                                              int64_t* sigma_cov1);
SEMLAT_API semlat_status semlat_lattice_inconsistent_count(const semlat_lattice* l, int m,
                                                           uint64_t* out);
/* Multi-line summary: covers, atoms, co-atoms, cov1 vector, sigma. */
SEMLAT_API semlat_status semlat_lattice_describe(const semlat_lattice* l, char** text);

/* ---- catalogs -------------------------------------------------------- */

SEMLAT_API semlat_status semlat_catalog_generate(int n, int jobs, int allow_large,
                                                 semlat_catalog** out);
SEMLAT_API semlat_status semlat_catalog_load(const char* path, semlat_catalog** out);
SEMLAT_API semlat_status semlat_catalog_save(const semlat_catalog* c, const char* path);
SEMLAT_API void semlat_catalog_free(semlat_catalog* c);

SEMLAT_API int semlat_catalog_order(const semlat_catalog* c);
SEMLAT_API size_t semlat_catalog_size(const semlat_catalog* c);
SEMLAT_API semlat_status semlat_catalog_get(const semlat_catalog* c, size_t index,
                                            semlat_lattice** out);
/* One statistics record per entry; max_m inconsistent counts (1..3). */
SEMLAT_API semlat_status semlat_catalog_profile(const semlat_catalog* c, int max_m,
                                                semlat_format format, int jobs, char** text);
/* metric: "sigma", "sigmaCov1" or "inconsistent(m)". */
SEMLAT_API semlat_status semlat_catalog_find_extremal(const semlat_catalog* c,
                                                      const char* metric, int maximize,
                                                      int jobs, char** text);

/* ---- verification ---------------------------------------------------- */

/*
 * claims: comma-separated subset of t1, t2, t2-bounds, t4, conjecture,
 * lemmas, or "all". Catalogs for n_lo..n_hi are generated internally.
 */
SEMLAT_API semlat_status semlat_verify(const char* claims, int n_lo, int n_hi, int m,
                                       int jobs, int allow_large, semlat_report** out);
SEMLAT_API semlat_verdict semlat_report_verdict(const semlat_report* r);
SEMLAT_API semlat_status semlat_report_text(const semlat_report* r, int timing, char** text);
SEMLAT_API void semlat_report_free(semlat_report* r);

/* Recomputes the cov1 figure values; *matched is 1 iff all agree. */
SEMLAT_API semlat_status semlat_reproduce_figures(int perturb, int* matched, char** text);

#ifdef __cplusplus
}
#endif

#endif /* SEMLAT_H */
