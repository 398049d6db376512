#include "kahler/monomial_basis.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace kahler {

void check_cap(const BidegreeCap& cap) {
  if (cap.holo_degree < 0 || cap.anti_degree < 0 || cap.holo_degree > kMaxJetDegree ||
      cap.anti_degree > kMaxJetDegree) {
    throw std::invalid_argument("jet cap (" + std::to_string(cap.holo_degree) + "," +
                                std::to_string(cap.anti_degree) + ") outside [0," +
                                std::to_string(kMaxJetDegree) + "]");
  }
}

namespace {

// Appends every exponent vector of exactly `remaining` total degree, in
// lexicographically decreasing order of the leading exponents.
void enumerate_degree(int var, int remaining, std::vector<std::uint8_t>& current,
                      std::vector<std::uint8_t>& out) {
  const int n = static_cast<int>(current.size());
  if (var == n - 1) {
    current[var] = static_cast<std::uint8_t>(remaining);
    out.insert(out.end(), current.begin(), current.end());
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = static_cast<std::uint8_t>(e);
    enumerate_degree(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::uint64_t MonomialBasis::pack(std::span<const std::uint8_t> exps) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) key |= static_cast<std::uint64_t>(exps[i]) << (4 * i);
  return key;
}

MonomialBasis::MonomialBasis(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
  if (num_vars < 1 || num_vars > kMaxJetVariables) {
    throw std::invalid_argument("jet variable count " + std::to_string(num_vars) + " outside [1," +
                                std::to_string(kMaxJetVariables) + "]");
  }
  if (degree < 0 || degree > kMaxJetDegree) {
    throw std::invalid_argument("monomial degree outside [0," + std::to_string(kMaxJetDegree) + "]");
  }
  std::vector<std::uint8_t> current(static_cast<std::size_t>(num_vars), 0);
  for (int d = 0; d <= degree; ++d) {
    const std::size_t before = exponents_.size();
    enumerate_degree(0, d, current, exponents_);
    const std::size_t added = (exponents_.size() - before) / static_cast<std::size_t>(num_vars);
    degrees_.insert(degrees_.end(), added, d);
  }

  const std::size_t count = degrees_.size();
  weights_.resize(count);
  lookup_.reserve(count * 2);
  for (std::size_t i = 0; i < count; ++i) {
    double w = 1.0;
    for (auto e : exponents(i)) w *= factorial(e);
    weights_[i] = w;
    lookup_.emplace(pack(exponents(i)), static_cast<std::uint32_t>(i));
  }

  std::vector<std::uint8_t> sum(static_cast<std::size_t>(num_vars));
  product_offsets_.reserve(count + 1);
  product_offsets_.push_back(0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count && degrees_[i] + degrees_[j] <= degree; ++j) {
      auto a = exponents(i);
      auto b = exponents(j);
      for (int v = 0; v < num_vars; ++v) sum[v] = static_cast<std::uint8_t>(a[v] + b[v]);
      products_.push_back({static_cast<std::uint32_t>(j), lookup_.at(pack(sum))});
    }
    product_offsets_.push_back(products_.size());
  }

  lowering_.resize(count * static_cast<std::size_t>(num_vars));
  std::vector<std::uint8_t> lowered(static_cast<std::size_t>(num_vars));
  for (std::size_t i = 0; i < count; ++i) {
    auto e = exponents(i);
    for (int v = 0; v < num_vars; ++v) {
      Lowering& entry = lowering_[i * static_cast<std::size_t>(num_vars) + static_cast<std::size_t>(v)];
      if (e[v] == 0) {
        entry = {-1, 0};
        continue;
      }
      std::copy(e.begin(), e.end(), lowered.begin());
      lowered[v] -= 1;
      entry = {static_cast<std::int32_t>(lookup_.at(pack(lowered))), e[v]};
    }
  }
}

std::int64_t MonomialBasis::find(std::span<const int> exps) const {
  if (static_cast<int>(exps.size()) != num_vars_) return -1;
  std::vector<std::uint8_t> packed(exps.size());
  int total = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > degree_) return -1;
    total += exps[i];
    packed[i] = static_cast<std::uint8_t>(exps[i]);
  }
  if (total > degree_) return -1;
  auto it = lookup_.find(pack(packed));
  return it == lookup_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::shared_ptr<const JetSpace> jet_space(int num_vars, BidegreeCap cap) {
  check_cap(cap);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> bases;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const JetSpace>> spaces;

  std::lock_guard lock(mutex);
  const auto key = std::make_tuple(num_vars, cap.holo_degree, cap.anti_degree);
  if (auto it = spaces.find(key); it != spaces.end()) return it->second;

  auto basis = [&](int degree) {
    auto& slot = bases[{num_vars, degree}];
    if (!slot) slot = std::make_shared<const MonomialBasis>(num_vars, degree);
    return slot;
  };
  auto space = std::make_shared<const JetSpace>(
      JetSpace{num_vars, cap, basis(cap.holo_degree), basis(cap.anti_degree)});
  spaces.emplace(key, space);
  return space;
}

}  // namespace kahler
