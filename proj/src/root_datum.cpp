#include "qtop/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <set>

#include "qtop/error.hpp"

namespace qtop {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

RootDatum::RootDatum(GroupKind kind, int rank)
    : kind_(kind), rank_(rank), rho_(static_cast<std::size_t>(rank)) {
  if (kind_ == GroupKind::Torus) return;
  const auto n = static_cast<std::size_t>(rank);
  for (std::size_t i = 0; i < n; ++i) {
    Weight a(n);
    a[i] = 2;
    if (i > 0) a[i - 1] = -1;
    if (i + 1 < n) a[i + 1] = -1;
    simple_.push_back(a);
    rho_[i] = 1;
  }
  // alpha_i + ... + alpha_j
  for (std::size_t i = 0; i < n; ++i) {
    Weight acc(n);
    for (std::size_t j = i; j < n; ++j) {
      acc += simple_[j];
      positive_.push_back(acc);
    }
  }
}

RootDatum RootDatum::build(GroupKind kind, int rank) {
  if (rank < 1) throw Error(Errc::InvalidInput, "rank must be at least 1");
  return RootDatum(kind, rank);
}

RootDatum RootDatum::build(std::string_view kind, int rank) {
  const auto k = lower(kind);
  if (k == "torus" || k == "t") return build(GroupKind::Torus, rank);
  if (k == "a") return build(GroupKind::TypeA, rank);
  throw Error(Errc::UnsupportedKind, "unsupported group series '" + std::string(kind) + "'");
}

RootDatum RootDatum::parse_label(std::string_view label) {
  if (label.empty()) throw Error(Errc::InvalidInput, "empty group label");
  std::size_t split = 0;
  while (split < label.size() && std::isalpha(static_cast<unsigned char>(label[split]))) ++split;
  int rank = 0;
  auto rest = label.substr(split);
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), rank);
  if (split == 0 || ec != std::errc{} || ptr != rest.data() + rest.size())
    throw Error(Errc::InvalidInput, "malformed group label '" + std::string(label) + "'");
  return build(label.substr(0, split), rank);
}

std::string RootDatum::label() const {
  return (is_torus() ? "T" : "A") + std::to_string(rank_);
}

std::int64_t RootDatum::weyl_order() const {
  if (is_torus()) return 1;
  std::int64_t f = 1;
  for (int i = 2; i <= rank_ + 1; ++i) f *= i;
  return f;
}

std::int64_t RootDatum::coroot_pairing(std::size_t i, const Weight& w) const { return w[i]; }

Weight RootDatum::reflect(std::size_t i, const Weight& w) const {
  return w - coroot_pairing(i, w) * simple_[i];
}

bool RootDatum::is_dominant(const Weight& w) const {
  for (std::size_t i = 0; i < simple_.size(); ++i)
    if (coroot_pairing(i, w) < 0) return false;
  return true;
}

bool RootDatum::is_regular_dominant(const Weight& w) const {
  for (std::size_t i = 0; i < simple_.size(); ++i)
    if (coroot_pairing(i, w) <= 0) return false;
  return true;
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& w) const {
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      Weight next = reflect(i, cur);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::pair<Weight, int>> RootDatum::signed_orbit(const Weight& w) const {
  std::map<Weight, int> seen{{w, 1}};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    const int sign = seen.at(cur);
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      Weight next = reflect(i, cur);
      if (seen.emplace(next, -sign).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

Weight RootDatum::dominant_conjugate(const Weight& w) const {
  Weight cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      if (coroot_pairing(i, cur) < 0) {
        cur = reflect(i, cur);
        changed = true;
      }
    }
  }
  return cur;
}

std::int64_t RootDatum::scaled_height(const Weight& w) const {
  if (is_torus()) return 0;
  // row sums of the A_n inverse Cartan matrix are i(n+1-i)/2
  std::int64_t h = 0;
  for (int i = 1; i <= rank_; ++i) h += w[static_cast<std::size_t>(i - 1)] * i * (rank_ + 1 - i);
  return h;
}

Rational RootDatum::inner_product(const Weight& a, const Weight& b) const {
  if (is_torus()) return Rational(pair(a, b));
  Rational s = 0;
  const int n1 = rank_ + 1;
  for (int i = 1; i <= rank_; ++i)
    for (int j = 1; j <= rank_; ++j) {
      const std::int64_t cij = std::min(i, j) * (n1 - std::max(i, j));
      s += Rational(a[static_cast<std::size_t>(i - 1)] * b[static_cast<std::size_t>(j - 1)] * cij, n1);
    }
  return s;
}

}  // namespace qtop
