// Copyright 2026 The qcs-classify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP paths of the hot kernels. Arg 0 = serial,
// 1 = parallel. Inputs are synthetic so the benchmarks need no dataset.

#include <numeric>
#include <random>

#include <benchmark/benchmark.h>

#include "qcs/cs_analysis.hpp"
#include "qcs/d2nn.hpp"
#include "qcs/dataset.hpp"
#include "qcs/decision.hpp"
#include "qcs/probe.hpp"
#include "qcs/train.hpp"

namespace {

using namespace qcs;

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

Dataset blobs(std::size_t n, std::size_t size) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pos(4, static_cast<int>(size) - 5);
  Dataset d;
  for (std::size_t k = 0; k < n; ++k) {
    Image img(size, size);
    const int cx = pos(rng), cy = pos(rng);
    for (int y = cy - 3; y <= cy + 3; ++y)
      for (int x = cx - 3; x <= cx + 3; ++x) img.at(x, y) = 1.0;
    d.images.push_back(std::move(img));
    d.labels.push_back(static_cast<int>(k % 8));
  }
  return d;
}

TrainedModel model128(std::size_t layers) {
  Geometry g;
  return init_model(g, default_layout(g.grid), layers, 3);
}

void BM_PropagateBatch(benchmark::State& state) {
  const GridSpec grid{128, 128, 8e-6};
  const auto kernel = make_kernel(grid, 633e-9, 0.05);
  std::vector<ComplexField> fields(32, uniform_probe(grid));
  for (auto _ : state) benchmark::DoNotOptimize(propagate_batch(fields, kernel, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fields.size()));
}
BENCHMARK(BM_PropagateBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BatchGradient(benchmark::State& state) {
  const auto model = model128(1);
  const auto kernels = make_kernels(model);
  const auto data = blobs(32, 32);
  std::vector<std::size_t> idx(data.size());
  std::iota(idx.begin(), idx.end(), 0);
  const auto probe = uniform_probe(model.grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(batch_gradient(data, idx, model, kernels, probe, LossConfig{}, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(idx.size()));
}
BENCHMARK(BM_BatchGradient)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EvaluateProbs(benchmark::State& state) {
  std::vector<ClassProbs> probs(64);
  std::vector<int> labels(64);
  for (std::size_t k = 0; k < probs.size(); ++k) {
    probs[k].per_class.assign(8, 0.01);
    probs[k].per_class[k % 8] = 0.05;
    probs[k].background = 1.0 - 0.12;
    labels[k] = static_cast<int>(k % 8);
  }
  EvalSettings es{100, 1000, 1, mode(state)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_probs(probs, labels, SystemParams{}, MultiPhoton{4, Window::blocks}, es));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(probs.size() * es.trials_per_image));
}
BENCHMARK(BM_EvaluateProbs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RipConstant(benchmark::State& state) {
  const std::vector<double> p(64, 1.0 / 64.0);
  const auto a = sample_matrix(p, 128, 11);
  for (auto _ : state) benchmark::DoNotOptimize(rip_constant(a, 3, mode(state)));
}
BENCHMARK(BM_RipConstant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
