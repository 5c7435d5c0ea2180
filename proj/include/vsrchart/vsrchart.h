/* vsrchart - chart parsing toolkit with visual self-refine orchestration.
 *
 * C API of the shared library. All functions return vsr_status; on failure
 * vsr_last_error() holds a thread-local message. Results are returned as
 * opaque report handles whose payload is a JSON document.
 */
#ifndef VSRCHART_H
#define VSRCHART_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vsr_status {
  VSR_OK = 0,
  VSR_ERR_USAGE = 1,      /* invalid arguments */
  VSR_ERR_CONFIG = 2,     /* malformed or inconsistent configuration */
  VSR_ERR_IO = 3,         /* filesystem failure */
  VSR_ERR_ENDPOINT = 4,   /* remote endpoint transport/protocol failure */
  VSR_ERR_GENERATION = 5, /* quality filter exhausted its attempts */
  VSR_ERR_INTERNAL = 6
} vsr_status;

const char* vsr_version(void);
const char* vsr_status_name(vsr_status status);

/* Message for the most recent failure on this thread ("" if none). */
const char* vsr_last_error(void);

/* ------------------------------------------------------------------ */
/* Reports                                                             */

typedef struct vsr_report vsr_report;

/* Borrowed pointer, valid until vsr_report_free. */
vsr_status vsr_report_json(const vsr_report* report, const char** out_json);
/* Atomic write of the report JSON to a file. */
vsr_status vsr_report_write(const vsr_report* report, const char* path);
void vsr_report_free(vsr_report* report);

/* ------------------------------------------------------------------ */
/* Operations (mirror the CLI subcommands)                             */

/* Generate a synthetic corpus under out_dir (<id>.png + <id>.json +
 * manifest.json). config_json may be NULL for defaults; it mirrors the
 * generator config file schema. jobs <= 0 selects the hardware default. */
vsr_status vsr_generate(const char* config_json, uint64_t n, const char* out_dir,
                        int with_training_samples, int jobs, vsr_report** out);

/* SCRM evaluation of a prediction directory against a ground-truth
 * directory. iou_thresholds_csv may be NULL for the default grid
 * {0.50,...,0.95}; preset is "strict", "slight", "high" or "all"/NULL. */
vsr_status vsr_evaluate(const char* pred_dir, const char* gt_dir,
                        const char* iou_thresholds_csv, const char* preset,
                        vsr_report** out);

/* Dataset quality metrics over an annotation corpus. top_k <= 0 selects the
 * default (100). */
vsr_status vsr_quality(const char* corpus_dir, int top_k, vsr_report** out);

/* Parse one image or a corpus directory with a model client.
 * client_config_json: {"type":"simulator", ...} or {"type":"remote", ...}.
 * mode: "vsr", "anchors-only" or "direct". */
vsr_status vsr_parse_run(const char* input_path, const char* client_config_json,
                         const char* mode, int n_max, int jobs, int save_rounds,
                         const char* out_dir, vsr_report** out);

/* Refine-loop simulation study over an annotated corpus: per-round error
 * analytics plus paired SCRM of vsr vs anchors-only runs.
 * simulator_config_json may be NULL for defaults. */
vsr_status vsr_simulate(const char* corpus_dir, const char* simulator_config_json,
                        int n_max, int trials, int jobs, uint64_t seed,
                        const char* out_dir, vsr_report** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* VSRCHART_H */
