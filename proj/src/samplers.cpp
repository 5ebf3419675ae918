#include "gosperwalk/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "gosperwalk/errors.hpp"

namespace gosperwalk {

std::vector<Count> sample_multinomial(std::size_t m, Count n, Stream& stream) {
  if (m == 0) throw InvalidInput("m must be at least 1");
  std::vector<Count> counts(m, 0);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (Count i = 0; i < n; ++i) ++counts[pick(stream)];
  return counts;
}

// Selection sampling over the n+m-1 slots: each slot is a bar with
// probability (bars left)/(slots left), so the bar set is a uniform
// (m-1)-subset. Stars between bars give the parts.
std::vector<Count> sample_composition(std::size_t m, Count n, Stream& stream) {
  if (m == 0) throw InvalidInput("m must be at least 1");
  std::vector<Count> parts(m, 0);
  std::size_t bars_left = m - 1;
  std::size_t slots_left = static_cast<std::size_t>(n) + m - 1;
  std::size_t part = 0;
  while (slots_left > 0) {
    if (bars_left == 0) {
      parts[part] += static_cast<Count>(slots_left);
      break;
    }
    const double u = std::generate_canonical<double, 64>(stream);
    if (u * static_cast<double>(slots_left) < static_cast<double>(bars_left)) {
      --bars_left;
      ++part;
    } else {
      ++parts[part];
    }
    --slots_left;
  }
  return parts;
}

RootConfig sample_uniform_r(std::size_t m, Count n, Stream& stream) {
  auto a = sample_multinomial(m, n, stream);
  auto b = sample_multinomial(m, n, stream);
  return {std::move(a), std::move(b)};
}

RootConfig sample_multiset_r(std::size_t m, Count n, Stream& stream) {
  auto a = sample_composition(m, n, stream);
  auto b = sample_composition(m, n, stream);
  return {std::move(a), std::move(b)};
}

namespace {

template <class Dist>
void fill_iid(std::vector<Count>& out, Dist dist, Stream& stream) {
  for (auto& x : out) x = dist(stream);
}

}  // namespace

RootConfig sample_iid(const Distribution& F, std::size_t m, Stream& stream) {
  if (m == 0) throw InvalidInput("m must be at least 1");
  RootConfig config{std::vector<Count>(m), std::vector<Count>(m)};
  switch (F.kind()) {
    case Distribution::Kind::Poisson: {
      std::poisson_distribution<Count> d(F.mean());
      fill_iid(config.red, d, stream);
      fill_iid(config.blue, d, stream);
      break;
    }
    case Distribution::Kind::Geometric: {
      std::geometric_distribution<Count> d(1.0 / (1.0 + F.mean()));
      fill_iid(config.red, d, stream);
      fill_iid(config.blue, d, stream);
      break;
    }
    case Distribution::Kind::Custom:
      for (auto& x : config.red) x = F.draw(stream);
      for (auto& x : config.blue) x = F.draw(stream);
      break;
  }
  return config;
}

ConditionedTable::ConditionedTable(const Distribution& F, std::size_t m, Count n)
    : m_(m), n_(n) {
  if (m == 0) throw InvalidInput("m must be at least 1");
  if (n < 0) throw InvalidInput("n must be nonnegative");
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  if ((m + 1) > kMaxEntries / width) {
    throw InvalidInput(fmt::format(
        "conditioned table of {} x {} entries exceeds the limit of {}", m + 1, width,
        kMaxEntries));
  }

  // Any single coordinate is at most n, so F restricted to 0..n is exact.
  Count top = n;
  if (F.max_support() >= 0) top = std::min(top, F.max_support());
  weights_.resize(static_cast<std::size_t>(top) + 1);
  for (Count x = 0; x <= top; ++x) weights_[static_cast<std::size_t>(x)] = F.pmf(x);

  table_.assign((m + 1) * width, 0.0);
  table_[0] = 1.0;  // zero draws sum to 0
  for (std::size_t k = 1; k <= m; ++k) {
    double* cur = &table_[k * width];
    const double* prev = &table_[(k - 1) * width];
    double peak = 0;
    for (std::size_t s = 0; s < width; ++s) {
      double acc = 0;
      const std::size_t upto = std::min(s, weights_.size() - 1);
      for (std::size_t x = 0; x <= upto; ++x) acc += weights_[x] * prev[s - x];
      cur[s] = acc;
      peak = std::max(peak, acc);
    }
    if (peak > 0)
      for (std::size_t s = 0; s < width; ++s) cur[s] /= peak;
  }
  if (!(row(m, n) > 0)) {
    throw InvalidInput(
        fmt::format("sum n = {} is unattainable for {} draws from {}", n, m, F.name()));
  }
}

std::vector<Count> ConditionedTable::sample_vector(Stream& stream) const {
  std::vector<Count> out(m_, 0);
  Count remaining = n_;
  std::vector<double> w;
  for (std::size_t j = 1; j <= m_; ++j) {
    const std::size_t rest = m_ - j;
    const Count upto = std::min<Count>(remaining, static_cast<Count>(weights_.size()) - 1);
    w.assign(static_cast<std::size_t>(upto) + 1, 0.0);
    double total = 0;
    for (Count x = 0; x <= upto; ++x) {
      const double p = weights_[static_cast<std::size_t>(x)] * row(rest, remaining - x);
      w[static_cast<std::size_t>(x)] = p;
      total += p;
    }
    double u = std::generate_canonical<double, 64>(stream) * total;
    Count chosen = -1;
    for (Count x = 0; x <= upto; ++x) {
      const double p = w[static_cast<std::size_t>(x)];
      if (p <= 0) continue;
      chosen = x;
      if (u < p) break;
      u -= p;
    }
    // chosen is the last positive-weight value if round-off exhausted u.
    out[j - 1] = chosen;
    remaining -= chosen;
  }
  return out;
}

RootConfig sample_conditioned(const Distribution& F, std::size_t m, Count n, Stream& stream,
                              ConditionedMethod method) {
  if (method == ConditionedMethod::Auto) {
    if (F.kind() == Distribution::Kind::Poisson) return sample_uniform_r(m, n, stream);
    if (F.kind() == Distribution::Kind::Geometric) return sample_multiset_r(m, n, stream);
  }
  const ConditionedTable table(F, m, n);
  auto a = table.sample_vector(stream);
  auto b = table.sample_vector(stream);
  return {std::move(a), std::move(b)};
}

Count ModelSpec::resolved_n() const {
  if (n) return *n;
  return static_cast<Count>(std::llround(lambda * static_cast<double>(m)));
}

void ModelSpec::validate() const {
  if (m == 0) throw InvalidInput("model needs m >= 1");
  switch (model) {
    case Model::UniformR:
    case Model::MultisetR:
      if (!n && !(lambda > 0)) throw InvalidInput("urn model needs n or a positive lambda");
      if (resolved_n() < 0) throw InvalidInput("n must be nonnegative");
      break;
    case Model::Iid:
      if (!F) throw InvalidInput("iid model needs a distribution F");
      break;
    case Model::Conditioned:
      if (!F) throw InvalidInput("conditioned model needs a distribution F");
      if (!n && !(lambda > 0)) throw InvalidInput("conditioned model needs n or lambda");
      if (resolved_n() < 0) throw InvalidInput("n must be nonnegative");
      break;
  }
}

std::string ModelSpec::label() const {
  auto family = [&]() -> std::string {
    if (!F) return "none";
    switch (F->kind()) {
      case Distribution::Kind::Poisson:
        return "poisson";
      case Distribution::Kind::Geometric:
        return "geometric";
      case Distribution::Kind::Custom:
        return "custom";
    }
    return "none";
  };
  switch (model) {
    case Model::UniformR:
      return "uniform-r";
    case Model::MultisetR:
      return "multiset-r";
    case Model::Iid:
      return "iid-" + family();
    case Model::Conditioned:
      return family() == "custom" ? std::string("custom") : "cond-" + family();
  }
  return "unknown";
}

ModelSampler::ModelSampler(ModelSpec spec, ConditionedMethod method)
    : spec_(std::move(spec)), method_(method) {
  spec_.validate();
  if (spec_.model == Model::Conditioned) {
    const bool closed_form = method_ == ConditionedMethod::Auto &&
                             spec_.F->kind() != Distribution::Kind::Custom;
    if (!closed_form)
      table_ = std::make_shared<const ConditionedTable>(*spec_.F, spec_.m, spec_.resolved_n());
  }
}

RootConfig ModelSampler::sample(Stream& stream) const {
  switch (spec_.model) {
    case Model::UniformR:
      return sample_uniform_r(spec_.m, spec_.resolved_n(), stream);
    case Model::MultisetR:
      return sample_multiset_r(spec_.m, spec_.resolved_n(), stream);
    case Model::Iid:
      return sample_iid(*spec_.F, spec_.m, stream);
    case Model::Conditioned:
      if (table_) {
        auto a = table_->sample_vector(stream);
        auto b = table_->sample_vector(stream);
        return {std::move(a), std::move(b)};
      }
      return sample_conditioned(*spec_.F, spec_.m, spec_.resolved_n(), stream, method_);
  }
  return {};
}

}  // namespace gosperwalk
