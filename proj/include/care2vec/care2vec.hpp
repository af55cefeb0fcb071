#ifndef CARE2VEC_CARE2VEC_HPP
#define CARE2VEC_CARE2VEC_HPP

// Umbrella header for the whole library.

#include "care2vec/autoencoder.hpp"
#include "care2vec/dataset.hpp"
#include "care2vec/errors.hpp"
#include "care2vec/eval.hpp"
#include "care2vec/matrix.hpp"
#include "care2vec/neural.hpp"
#include "care2vec/pipeline.hpp"
#include "care2vec/reference_results.hpp"
#include "care2vec/report_io.hpp"
#include "care2vec/rng.hpp"
#include "care2vec/tree.hpp"

#endif // CARE2VEC_CARE2VEC_HPP
