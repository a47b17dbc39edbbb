/* C interface to the esnufft library. All functions return an esn_status;
   on failure esn_last_error() describes the problem (per thread). Complex
   arrays are interleaved (re, im) doubles. */
#ifndef ESNUFFT_H
#define ESNUFFT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ESN_API __declspec(dllexport)
#elif defined(ESN_BUILDING_LIBRARY)
#define ESN_API __attribute__((visibility("default")))
#else
#define ESN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum esn_status {
    ESN_OK = 0,
    ESN_ERR_INVALID_PARAMETER = 1,
    ESN_ERR_DOMAIN = 2,
    ESN_ERR_OVERFLOW = 3,
    ESN_ERR_UNSUPPORTED_SIZE = 4,
    ESN_ERR_INVALID_INPUT = 5,
    ESN_ERR_TRUNCATION = 6,
    ESN_ERR_FREQUENCY_TOO_LARGE = 7,
    ESN_ERR_NUMERICAL = 8,
    ESN_ERR_INTERNAL = 9,
    ESN_ERR_NULL_ARGUMENT = 10,
    ESN_ERR_OUT_OF_MEMORY = 11
} esn_status;

typedef enum esn_kernel { ESN_KERNEL_ES = 0, ESN_KERNEL_KB = 1 } esn_kernel;

typedef struct esn_plan esn_plan;
typedef struct esn_pswf esn_pswf;
typedef struct esn_table esn_table;

ESN_API const char* esn_version(void);
ESN_API const char* esn_last_error(void);
ESN_API const char* esn_status_string(int status);

/* ---- transforms ---- */

typedef struct esn_plan_options {
    int modes;      /* N, even */
    double sigma;   /* requested upsampling, default 2 */
    int width;      /* kernel width; 0 means derive from tol */
    double tol;     /* used when width == 0 */
    double gamma;   /* default 0.98 */
    int kernel;     /* esn_kernel */
    int threads;    /* spreading workers, default 1 */
} esn_plan_options;

typedef struct esn_plan_info {
    int modes;
    int fine_grid;
    int width;
    int kernel;
    int width_clamped;
    double sigma; /* effective n / N */
    double gamma;
    double beta;
    double alpha;
    double h;
} esn_plan_info;

ESN_API void esn_plan_options_default(esn_plan_options* opt);
ESN_API int esn_plan_create(const esn_plan_options* opt, esn_plan** out);
ESN_API void esn_plan_destroy(esn_plan* plan);
ESN_API int esn_plan_get_info(const esn_plan* plan, esn_plan_info* info);
/* N deconvolution factors for k = -N/2 .. N/2-1 */
ESN_API int esn_plan_deconv_factors(const esn_plan* plan, double* p);

/* f (N complex) from M points x and strengths c */
ESN_API int esn_type1(const esn_plan* plan, size_t M, const double* x, const double* c, double* f);
/* c (M complex) from N coefficients f */
ESN_API int esn_type2(const esn_plan* plan, size_t M, const double* x, const double* f, double* c);
ESN_API int esn_direct_type1(size_t M, const double* x, const double* c, int N, double* f);
ESN_API int esn_direct_type2(size_t M, const double* x, int N, const double* f, double* c);

typedef struct esn_aliasing_report {
    int w;
    double beta;
    double sigma;
    double gamma;
    double eps_inf_est;
    int tail_terms_used;
    double tail_remainder_bound;
    double theory_exponent;
} esn_aliasing_report;

ESN_API int esn_eps_inf_estimate(const esn_plan* plan, int k_samples, int x_samples, esn_aliasing_report* out);

/* ---- kernels and their transforms ---- */

ESN_API int esn_beta_from(double gamma, int w, double sigma, double* out);
ESN_API int esn_kernel_eval(int kernel, double beta, double z, double* out);
ESN_API int esn_kb_asymptotic_eval(double beta, double z, double* out);
ESN_API int esn_slepian_asymptotic_eval(double beta, double z, double* out);
ESN_API int esn_sleph_eval(double beta, double z, double* out);

ESN_API int esn_ft_quadrature(int kernel, double beta, double xi, double* re, double* im);
ESN_API int esn_kb_ft_analytic(double beta, double xi, double* out);
ESN_API int esn_es_ft_below_cutoff(double beta, double rho, double* out);
ESN_API int esn_es_ft_above_cutoff(double beta, double rho, double* out);
ESN_API int esn_es_ft_sinc_tail(double beta, double xi, double* out);
ESN_API int esn_es_ft_deviation(double beta, double xi, double* re, double* im);
ESN_API int esn_es_ft_tail_bound(double beta, double xi, double* out);

ESN_API int esn_es_rate(double sigma, double gamma, double* out);
ESN_API int esn_kb_error_bound(int w, double sigma, double* out);

/* ---- prolate spheroidal function psi0 ---- */

/* basis_size <= 0 selects the default */
ESN_API int esn_pswf_create(double beta, int basis_size, esn_pswf** out);
ESN_API void esn_pswf_destroy(esn_pswf* p);
/* normalize_center != 0 gives psi0(z)/psi0(0), otherwise unit L2 norm */
ESN_API int esn_pswf_eval(const esn_pswf* p, double z, int normalize_center, double* out);
ESN_API int esn_pswf_eigenvalues(const esn_pswf* p, double* chi0, double* lambda0, double* mu0);

/* ---- tables (sweeps and checks) ---- */

typedef struct esn_sweep_options {
    double sigma;
    double gamma;
    int w_min;
    int w_max;
    int modes;
    int points;
    int trials;
    uint64_t seed;
    int kernel;
    int threads;
} esn_sweep_options;

ESN_API void esn_sweep_options_default(esn_sweep_options* opt);
/* columns: w, beta, eps_inf_est, emp_max_err_t1, emp_max_err_t2, theory_rate_bound */
ESN_API int esn_error_sweep(const esn_sweep_options* opt, esn_table** out);
/* columns: suite, check, measured, lower, upper, pass; *all_passed set to 0 or 1 */
ESN_API int esn_run_checks(const char* suite, esn_table** out, int* all_passed);

ESN_API size_t esn_table_rows(const esn_table* t);
ESN_API size_t esn_table_cols(const esn_table* t);
ESN_API const char* esn_table_column_name(const esn_table* t, size_t col);
/* cell as text (numbers with 17 significant digits) */
ESN_API const char* esn_table_cell_text(const esn_table* t, size_t row, size_t col);
/* cell as a number, NaN for text cells */
ESN_API double esn_table_cell_value(const esn_table* t, size_t row, size_t col);
ESN_API void esn_table_destroy(esn_table* t);

#ifdef __cplusplus
}
#endif

#endif
