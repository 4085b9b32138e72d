/*
 * Copyright 2026 The sdprob Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <unsupported/Eigen/FFT>

#include "sdprob/errors.hpp"
#include "sdprob/monte_carlo.hpp"

namespace sdprob {

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

const char* to_string(SamplerKind kind) noexcept {
  switch (kind) {
    case SamplerKind::CholeskyGeneral: return "cholesky_general";
    case SamplerKind::Ar1Exact: return "ar1_exact";
    case SamplerKind::CirculantEmbedding: return "circulant_embedding";
    case SamplerKind::TrigPolynomial: return "trig_polynomial";
  }
  return "unknown";
}

SamplerKind SamplerSpec::kind() const {
  return static_cast<SamplerKind>(params.index());
}

GaussianSampler::GaussianSampler(const SamplerSpec& spec) : kind_(spec.kind()), spec_(spec) {
  switch (kind_) {
    case SamplerKind::CholeskyGeneral: {
      const auto& p = std::get<CholeskyParams>(spec.params);
      require(p.covariance.size() >= 1, "cholesky sampler: empty covariance");
      require(p.covariance.is_symmetric(1e-12), "cholesky sampler: covariance is not symmetric");
      factor_ = cholesky(p.covariance);
      dim_ = p.covariance.size();
      break;
    }
    case SamplerKind::Ar1Exact: {
      const auto& p = std::get<Ar1Params>(spec.params);
      require(p.r > -1.0 && p.r < 1.0, "ar1 sampler: r must lie in (-1, 1)");
      require(p.length >= 1, "ar1 sampler: length must be positive");
      dim_ = p.length;
      break;
    }
    case SamplerKind::CirculantEmbedding: {
      const auto& p = std::get<CirculantParams>(spec.params);
      const std::size_t n = p.coefficients.size();
      require(n >= 1, "circulant sampler: no coefficients");
      const std::size_t m = n == 1 ? 1 : 2 * (n - 1);
      std::vector<std::complex<double>> row(m), eig;
      for (std::size_t k = 0; k < m; ++k) row[k] = p.coefficients[k < n ? k : m - k];
      Eigen::FFT<double> fft;
      fft.fwd(eig, row);
      double scale = 0.0;
      for (const auto& e : eig) scale = std::max(scale, std::abs(e.real()));
      sqrt_eig_.resize(m);
      for (std::size_t k = 0; k < m; ++k) {
        double lambda = eig[k].real();
        if (lambda < 0.0) {
          if (lambda < -1e-10 * scale) {
            if (!p.allow_clipping) {
              fail(ErrorCode::Domain,
                   "circulant sampler: embedding spectrum has a negative eigenvalue " +
                       std::to_string(lambda) + "; enable clipping to sample approximately");
            }
            max_clip_ = std::max(max_clip_, -lambda);
          }
          lambda = 0.0;
        }
        sqrt_eig_[k] = std::sqrt(lambda / static_cast<double>(m));
      }
      dim_ = n;
      break;
    }
    case SamplerKind::TrigPolynomial: {
      const auto& p = std::get<TrigParams>(spec.params);
      const std::size_t K = p.amplitudes.size();
      require(K >= 1 && p.frequencies.size() == K,
              "trig sampler: need one frequency per amplitude");
      require(p.grid >= 1 && p.t_hi > p.t_lo, "trig sampler: invalid grid or interval");
      dim_ = p.grid + 1;
      cos_table_.resize(dim_ * K);
      sin_table_.resize(dim_ * K);
      const double h = (p.t_hi - p.t_lo) / static_cast<double>(p.grid);
      for (std::size_t i = 0; i < dim_; ++i) {
        const double t = p.t_lo + static_cast<double>(i) * h;
        for (std::size_t k = 0; k < K; ++k) {
          const double phase =
              2.0 * std::numbers::pi * std::fmod(static_cast<double>(p.frequencies[k]) * t, 1.0);
          cos_table_[i * K + k] = p.amplitudes[k] * std::cos(phase);
          sin_table_[i * K + k] = p.amplitudes[k] * std::sin(phase);
        }
      }
      break;
    }
  }
}

void GaussianSampler::draw(std::mt19937_64& rng, std::span<double> out) const {
  require(out.size() == dim_, "draw: output has the wrong size");
  std::normal_distribution<double> normal;
  switch (kind_) {
    case SamplerKind::CholeskyGeneral: {
      thread_local std::vector<double> g;
      g.resize(dim_);
      for (auto& v : g) v = normal(rng);
      for (std::size_t i = 0; i < dim_; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k <= i; ++k) s += factor_(i, k) * g[k];
        out[i] = s;
      }
      break;
    }
    case SamplerKind::Ar1Exact: {
      const auto& p = std::get<Ar1Params>(spec_.params);
      const double innov = std::sqrt((1.0 - p.r) * (1.0 + p.r));
      double x = normal(rng);
      for (std::size_t j = 0; j < dim_; ++j) {
        const double next = p.r * x + innov * normal(rng);
        if (p.increments) {
          out[j] = next - x;
          x = next;
        } else {
          out[j] = x;
          if (j + 1 < dim_) x = next;
        }
      }
      break;
    }
    case SamplerKind::CirculantEmbedding: {
      const std::size_t m = sqrt_eig_.size();
      thread_local Eigen::FFT<double> fft;
      thread_local std::vector<std::complex<double>> z, y;
      z.resize(m);
      for (std::size_t k = 0; k < m; ++k) {
        const double re = normal(rng);
        const double im = normal(rng);
        z[k] = sqrt_eig_[k] * std::complex<double>(re, im);
      }
      fft.fwd(y, z);
      for (std::size_t j = 0; j < dim_; ++j) out[j] = y[j].real();
      break;
    }
    case SamplerKind::TrigPolynomial: {
      const std::size_t K = std::get<TrigParams>(spec_.params).amplitudes.size();
      thread_local std::vector<double> g1, g2;
      g1.resize(K);
      g2.resize(K);
      for (std::size_t k = 0; k < K; ++k) {
        g1[k] = normal(rng);
        g2[k] = normal(rng);
      }
      for (std::size_t i = 0; i < dim_; ++i) {
        const double* c = &cos_table_[i * K];
        const double* s = &sin_table_[i * K];
        double v = 0.0;
        for (std::size_t k = 0; k < K; ++k) v += c[k] * g1[k] + s[k] * g2[k];
        out[i] = v;
      }
      break;
    }
  }
}

std::vector<double> sample_gaussian_vector(const SamplerSpec& spec) {
  const GaussianSampler sampler(spec);
  auto rng = make_stream(spec.seed, 0);
  std::vector<double> out(sampler.dimension());
  sampler.draw(rng, out);
  return out;
}

}  // namespace sdprob
