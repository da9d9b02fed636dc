#include "kings/minimize.h"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <memory>
#include <stdexcept>

namespace kings {

namespace {

using Objective = std::function<double(const std::vector<double> &)>;

struct Context {
    const Objective *f;
    std::vector<double> scratch;
};

double trampoline(const gsl_vector *v, void *params) {
    auto *ctx = static_cast<Context *>(params);
    for (std::size_t i = 0; i < ctx->scratch.size(); ++i) {
        ctx->scratch[i] = gsl_vector_get(v, i);
    }
    return (*ctx->f)(ctx->scratch);
}

struct VectorDeleter {
    void operator()(gsl_vector *v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
    void operator()(gsl_multimin_fminimizer *m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

SimplexResult minimize_simplex(const Objective &f, std::vector<double> x0,
                               const SimplexOptions &options) {
    const std::size_t n = x0.size();
    if (n == 0) {
        throw std::invalid_argument("minimize_simplex: empty starting point");
    }
    static const bool handler_off = [] {
        gsl_set_error_handler_off();
        return true;
    }();
    (void)handler_off;
    Context ctx{&f, std::vector<double>(n)};
    gsl_multimin_function fn{&trampoline, n, &ctx};

    std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(n));
    std::unique_ptr<gsl_vector, VectorDeleter> step(gsl_vector_alloc(n));
    for (std::size_t i = 0; i < n; ++i) {
        gsl_vector_set(x.get(), i, x0[i]);
    }
    gsl_vector_set_all(step.get(), options.initial_step);

    std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> m(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
    gsl_multimin_fminimizer_set(m.get(), &fn, x.get(), step.get());

    SimplexResult result;
    int status = GSL_CONTINUE;
    while (status == GSL_CONTINUE && result.iterations < options.max_iterations) {
        ++result.iterations;
        if (gsl_multimin_fminimizer_iterate(m.get()) != GSL_SUCCESS) {
            break;
        }
        status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(m.get()),
                                        options.size_tolerance);
    }
    result.converged = status == GSL_SUCCESS;
    result.value = gsl_multimin_fminimizer_minimum(m.get());
    result.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        result.x[i] = gsl_vector_get(m->x, i);
    }
    return result;
}

}  // namespace kings
