// core/include/songkit/model.hpp

// Copyright 2026  Songkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "songkit/annotation.hpp"
#include "songkit/features.hpp"

namespace songkit {

// Frame-level note model: a context-window MLP encoder feeding a sigmoid
// boundary head (one logit per frame) and a sigmoid pitch head (128 logits
// per pooled note feature).  Both heads train with mean binary cross
// entropy; probabilities are clamped to [kProbEpsilon, 1 - kProbEpsilon]
// inside the loss.

inline constexpr int kPitchClasses = 128;
inline constexpr double kProbEpsilon = 1e-7;

struct ModelConfig {
  int input_dim = 17;   // matches the default feature front end (1 + 16 bands)
  int context = 2;      // frames of context either side of the center frame
  int hidden = 32;
  int encoded_dim = 32;

  int ctx_dim() const { return (2 * context + 1) * input_dim; }
};

/// All weights in one flat array with named views, in a fixed order:
/// w1, b1, w2, b2, boundary_w, boundary_b, pitch_w, pitch_b.  Matrices are
/// row-major with shapes w1: hidden x ctx_dim, w2: encoded_dim x hidden,
/// pitch_w: 128 x encoded_dim.
struct NaModelParams {
  ModelConfig config;
  std::vector<double> flat;

  std::size_t count() const { return flat.size(); }

  std::span<double> w1();
  std::span<double> b1();
  std::span<double> w2();
  std::span<double> b2();
  std::span<double> boundary_w();
  double& boundary_b();
  std::span<double> pitch_w();
  std::span<double> pitch_b();

  std::span<const double> w1() const;
  std::span<const double> b1() const;
  std::span<const double> w2() const;
  std::span<const double> b2() const;
  std::span<const double> boundary_w() const;
  double boundary_b() const;
  std::span<const double> pitch_w() const;
  std::span<const double> pitch_b() const;
};

std::size_t param_count(const ModelConfig& config);

/// Uniform init of the weight matrices scaled by 1/sqrt(fan-in); biases
/// zero.  Uses raw mt19937_64 draws so the result is identical on every
/// platform for a given seed.
NaModelParams init_params(const ModelConfig& config, std::uint64_t seed);

/// Versioned text container: dimension header plus row-major weight arrays
/// printed with shortest-round-trip formatting, so load reproduces the
/// values bit for bit.  Layout documented in the README.
void save_params(const NaModelParams& params, const std::string& path);
NaModelParams load_params(const std::string& path);

// ---------------------------------------------------------------------------
// Forward passes.
// ---------------------------------------------------------------------------

/// Per-frame MLP over a +/-context window (edges zero-padded); returns an
/// encoded FrameSeries with the same frame count.  The hidden layer is tanh,
/// the output layer linear.
FrameSeries encoder_forward(const FrameSeries& frames, const NaModelParams& params);

/// sigmoid(boundary_w . v_i + boundary_b) per encoded frame.
std::vector<double> boundary_posteriors(const FrameSeries& encoded,
                                        const NaModelParams& params);

using BoundaryLabels = std::vector<std::uint8_t>;

/// Mean binary cross entropy between posteriors and {0,1} labels.
double boundary_loss(const std::vector<double>& posteriors, const BoundaryLabels& labels);

/// Arithmetic mean of the encoded frames in [start_frame, end_frame).
std::vector<double> pool_note_feature(const FrameSeries& encoded, int start_frame,
                                      int end_frame);

/// Elementwise sigmoid over the 128 pitch logits.  Independent per-class
/// probabilities, not a normalized distribution.
std::vector<double> pitch_posterior(const std::vector<double>& note_feature,
                                    const NaModelParams& params);

/// One-hot pitch target, stored as the hot index.
struct PitchTarget {
  int pitch_midi = 0;
};

/// Mean binary cross entropy over the 128 coordinates against the one-hot
/// target.
double pitch_loss(const std::vector<double>& posterior, const PitchTarget& target);

// ---------------------------------------------------------------------------
// Training.
// ---------------------------------------------------------------------------

/// Ground-truth note interval in frames, with its pitch label.
struct NoteSpan {
  int start_frame = 0;
  int end_frame = 0;
  int pitch_midi = 0;
};

struct TrainSample {
  FrameSeries frames;
  BoundaryLabels boundary_labels;  // one per frame; 1 marks a note onset
  std::vector<NoteSpan> notes;
};

/// Ground-truth construction: for every note onset after the first within a
/// word, the single frame whose start time is nearest the onset gets label
/// 1; note spans are the frame intervals covering each note.
TrainSample make_train_sample(const SegmentAnnotation& annotation, const FrameSeries& frames);

struct TrainConfig {
  double learning_rate = 2.0;
  int steps = 2000;
  std::uint64_t seed = 1;
  double lambda = 1.0;  // weight of the pitch loss in the joint objective
  int batch_segments = 8;
  ModelConfig model;
};

/// Key-value file, one `key value` pair per line ('=' also accepted).
/// Keys: lr, steps, seed, lambda, c, hidden, d_enc, input_dim,
/// batch_segments.
TrainConfig load_train_config(const std::string& path);
void save_train_config(const TrainConfig& config, const std::string& path);

struct TrainResult {
  NaModelParams params;
  std::vector<double> loss_per_step;
};

/// Minibatch plain gradient descent on boundary_loss + lambda * pitch_loss
/// with seeded deterministic initialization and batch order.  Identical
/// inputs give bit-identical parameters.  Throws on a non-finite loss,
/// naming the step.
TrainResult train(const std::vector<TrainSample>& dataset, const TrainConfig& config);

/// Joint loss over a batch; when grad is non-null it receives d(loss)/d(flat)
/// in the flat parameter order.  Losses pool over all frames (boundary) and
/// all note coordinates (pitch) in the batch.
double loss_and_gradient(const NaModelParams& params,
                         const std::vector<const TrainSample*>& batch, double lambda,
                         std::vector<double>* grad);

/// Central-difference gradient of the same loss, one parameter at a time.
std::vector<double> numeric_gradient(const NaModelParams& params, const TrainSample& sample,
                                     double lambda, double h);

double max_relative_error(const std::vector<double>& a, const std::vector<double>& b);

/// Max relative error between the analytic and central-difference gradients
/// on one sample.  The finite-difference side is the oracle.
double gradient_check(const NaModelParams& params, const TrainSample& sample, double lambda,
                      double h);

// ---------------------------------------------------------------------------
// Inference.
// ---------------------------------------------------------------------------

struct WordWindow {
  int start_frame = 0;
  int end_frame = 0;  // half-open
  int note_count = 1;
};

/// The note_count-1 frames with the highest posterior inside
/// [start_frame, end_frame), earliest frame winning ties, returned sorted
/// ascending.  When the window holds fewer than note_count-1 frames, all
/// window frames are returned and *clamped is set.
std::vector<int> select_boundaries(const std::vector<double>& posteriors, int start_frame,
                                   int end_frame, int note_count, bool* clamped = nullptr);

/// Pitch posterior for an encoded frame interval [start, end).
using PitchPosteriorFn = std::function<std::vector<double>(int, int)>;

/// Splits each word window at its selected boundaries and emits one note per
/// interval: duration = frame count * hop_cs, pitch = argmax of the pitch
/// posterior over the interval.  Per-word durations sum to the window length
/// exactly.  A zero-length interval (boundary at the window start) yields a
/// duration-0 rest.  Clamped words are reported through `warnings`.
std::vector<std::vector<NoteEvent>> decode_notes(const std::vector<double>& boundary_post,
                                                 const std::vector<WordWindow>& words,
                                                 const PitchPosteriorFn& pitch_fn, int hop_cs,
                                                 std::vector<std::string>* warnings = nullptr);

/// Model-backed variant pooling the encoded frames for the pitch head.
std::vector<std::vector<NoteEvent>> decode_notes(const FrameSeries& encoded,
                                                 const std::vector<double>& boundary_post,
                                                 const std::vector<WordWindow>& words,
                                                 const NaModelParams& params,
                                                 std::vector<std::string>* warnings = nullptr);

}  // namespace songkit
