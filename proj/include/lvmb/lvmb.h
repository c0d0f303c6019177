#ifndef LVMB_H
#define LVMB_H

/* C interface to the LVMB good-system toolkit.
 *
 * Systems travel as opaque handles created from JSON documents; every
 * query returns a status code plus a JSON report string.  All returned
 * strings are heap-allocated and must be released with lvmb_string_free.
 * The optional err out-parameter receives a message when a call fails
 * with LVMB_INPUT_ERROR; pass NULL to ignore it.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define LVMB_OK 0           /* affirmative answer */
#define LVMB_NEGATIVE 1     /* verified negative answer */
#define LVMB_INPUT_ERROR 2  /* malformed input or violated precondition */
#define LVMB_INCONCLUSIVE 3 /* budget exhausted without a verdict */

typedef struct lvmb_system lvmb_system;

const char* lvmb_version(void);

/* Document handling. Load returns NULL and sets *err on failure. */
lvmb_system* lvmb_system_load_file(const char* path, char** err);
lvmb_system* lvmb_system_load_json(const char* text, char** err);
void lvmb_system_free(lvmb_system* sys);

/* Canonical JSON text of the loaded document. */
char* lvmb_system_json(const lvmb_system* sys);

/* Studyability, replacer uniqueness, imbrication, indispensables,
 * admissibility.  LVMB_OK iff the system is good. */
int lvmb_check(const lvmb_system* sys, char** report, char** err);

/* Classification of the quotient manifold, with the condition (K)
 * witness scale.  LVMB_NEGATIVE with an embedded check report when the
 * system is not good. */
int lvmb_classify(const lvmb_system* sys, char** report, char** err);

/* Condition (H) for an integer basis: pass m*m row-major entries with
 * their count, or NULL (count ignored) to use the basis stored in the
 * document.  strict_mode != 0 requires |det| = 1.  LVMB_OK iff some
 * generator contracts. */
int lvmb_cond_h(const lvmb_system* sys, const long* basis, size_t basis_len,
                int strict_mode, char** report, char** err);

/* LVM-type recognition.  necessary_only != 0 runs just the subfamily
 * intersection scan.  max_attempts < 0 keeps the default budget. */
int lvmb_lvm(const lvmb_system* sys, uint64_t seed, int max_attempts,
             int necessary_only, char** report, char** err);

/* Seeded search for a configuration making the document's fundamental
 * set good.  On LVMB_OK, *found receives the mined document.
 * max_trials = 0 keeps the default budget. */
int lvmb_mine_good_system(const lvmb_system* sys, uint64_t seed,
                          uint64_t max_trials, char** found, char** report,
                          char** err);

/* Seeded search for an integer basis satisfying condition (H). */
int lvmb_mine_basis(const lvmb_system* sys, uint64_t seed, uint64_t max_trials,
                    int strict_mode, char** report, char** err);

/* Straight-line homotopy scan between two documents sharing the same
 * fundamental set shape.  LVMB_OK iff every sample is good. */
int lvmb_homotopy(const lvmb_system* sys_a, const lvmb_system* sys_b,
                  long steps, char** report, char** err);

/* Bundled examples.  Names are static storage; documents are fresh
 * strings.  lvmb_fixture_run returns LVMB_OK iff the example reproduces
 * its pinned expectations. */
size_t lvmb_fixture_count(void);
const char* lvmb_fixture_name(size_t index);
char* lvmb_fixture_json(const char* name, char** err);
int lvmb_fixture_run(const char* name, char** report, char** err);

void lvmb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LVMB_H */
