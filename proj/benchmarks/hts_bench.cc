// Copyright 2026 The HTS Geometry Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "hts/bezier.h"
#include "hts/document.h"
#include "hts/eval.h"
#include "hts/fixture.h"
#include "hts/hierarchy.h"
#include "hts/rectify.h"

namespace hts {
namespace {

double U(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

BezierCurve RandomCubic(std::mt19937_64& rng) {
  std::vector<Point2> pts(4);
  for (Point2& p : pts) p = {U(rng, 0, 1), U(rng, 0, 1)};
  return BezierCurve(pts);
}

void BM_EvalBezier(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const BezierCurve c = RandomCubic(rng);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(EvalBezier(c, t));
    t = t + 1e-3 <= 1.0 ? t + 1e-3 : 0.0;
  }
}
BENCHMARK(BM_EvalBezier);

void BM_CurveTightBbox(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const BezierCurve c = RandomCubic(rng);
  for (auto _ : state) benchmark::DoNotOptimize(CurveTightBbox(c));
}
BENCHMARK(BM_CurveTightBbox);

void BM_FitBezier(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const std::vector<Point2> polyline = SampleCurve(RandomCubic(rng), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(FitBezier(polyline, 3));
}
BENCHMARK(BM_FitBezier)->Arg(8)->Arg(32)->Arg(128);

void BM_PolygonIou(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const int k = static_cast<int>(state.range(0));
  auto ring = [&](double cx) {
    std::vector<Point2> pts;
    for (int i = 0; i < k; ++i) {
      const double a = 2 * 3.141592653589793 * i / k;
      const double r = U(rng, 0.5, 1.0);
      pts.push_back({cx + r * std::cos(a), r * std::sin(a)});
    }
    return pts;
  };
  const std::vector<Point2> a = ring(0.0);
  const std::vector<Point2> b = ring(0.4);
  for (auto _ : state) benchmark::DoNotOptimize(PolygonIou(a, b));
}
BENCHMARK(BM_PolygonIou)->Arg(8)->Arg(32)->Arg(128);

Fixture BenchFixture() {
  FixtureSpec spec;
  spec.seed = 5;
  spec.box_jitter_px = 1.0;
  return GenerateFixture(spec);
}

void BM_CropRectify(benchmark::State& state) {
  const Fixture f = BenchFixture();
  const BezierLinePolygon& line = f.perfect.lines.front();
  for (auto _ : state) benchmark::DoNotOptimize(CropRectify(f.image, line));
}
BENCHMARK(BM_CropRectify);

void BM_AssembleDocument(benchmark::State& state) {
  const Fixture f = BenchFixture();
  const AssemblyInput input = ToAssemblyInput(f.noisy);
  for (auto _ : state) benchmark::DoNotOptimize(AssembleDocument(input));
}
BENCHMARK(BM_AssembleDocument);

void BM_HiertextEval(benchmark::State& state) {
  const Fixture f = BenchFixture();
  const HierDocument pred = AssembleDocument(ToAssemblyInput(f.noisy));
  const HierLevel level = static_cast<HierLevel>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(HiertextEval(pred, f.ground_truth, level, true));
}
BENCHMARK(BM_HiertextEval)->DenseRange(0, 2);

}  // namespace
}  // namespace hts

// The packaged benchmark_main archive is LTO bytecode from another compiler.
BENCHMARK_MAIN();
