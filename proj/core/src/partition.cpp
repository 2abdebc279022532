#include "charlab/partition.hpp"

#include <charconv>
#include <stdexcept>

namespace charlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("partition must look like [4,2,1]: '" + std::string(text) + "'");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto field = trim(text.substr(0, comma));
    int v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw std::invalid_argument("bad partition part '" + std::string(field) + "'");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> cols(parts_.empty() ? 0 : parts_.front(), 0);
  for (int len : parts_) {
    for (int c = 0; c < len; ++c) ++cols[c];
  }
  return Partition(std::move(cols));
}

Partition Partition::with_box(BoxRef b) const {
  std::vector<int> parts = parts_;
  if (b.row == length() + 1 && b.col == 1) {
    parts.push_back(1);
  } else if (b.row >= 1 && b.row <= length() && b.col == parts[b.row - 1] + 1) {
    ++parts[b.row - 1];
  } else {
    throw std::invalid_argument("box is not at the end of a row");
  }
  return Partition(std::move(parts));  // validates the corner condition
}

Partition Partition::without_box(BoxRef b) const {
  if (b.row < 1 || b.row > length() || b.col != parts_[b.row - 1]) {
    throw std::invalid_argument("box is not at the end of a row");
  }
  std::vector<int> parts = parts_;
  if (--parts[b.row - 1] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : p.parts()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rational alpha_content(BoxRef b, const AlphaParam& alpha) {
  return alpha.value() * (b.col - 1) - (b.row - 1);
}

std::vector<BoxStats> box_stats(const Partition& lambda, const AlphaParam& alpha) {
  const Partition conj = lambda.conjugate();
  std::vector<BoxStats> out;
  out.reserve(lambda.size());
  for (int r = 1; r <= lambda.length(); ++r) {
    for (int c = 1; c <= lambda.row(r); ++c) {
      BoxStats s;
      s.box = {r, c};
      s.arm = lambda.row(r) - c;
      s.leg = conj.row(c) - r;
      s.hook = s.arm + s.leg + 1;
      s.content = c - r;
      s.alpha_content = alpha_content(s.box, alpha);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Corners corners(const Partition& lambda) {
  Corners out;
  const int len = lambda.length();
  for (int r = 1; r <= len + 1; ++r) {
    const int here = lambda.row(r);
    if (r == 1 || lambda.row(r - 1) > here) out.addable.push_back({r, here + 1});
    if (here > 0 && lambda.row(r + 1) < here) out.removable.push_back({r, here});
  }
  return out;
}

std::vector<BoxRef> addable_corners(const Partition& lambda) { return corners(lambda).addable; }

BigInt dimension(const Partition& lambda) {
  BigInt hooks = 1;
  for (const auto& s : box_stats(lambda)) hooks *= s.hook;
  const BigInt num = factorial(static_cast<unsigned>(lambda.size()));
  if (!mpz_divisible_p(num.get_mpz_t(), hooks.get_mpz_t())) {
    throw std::logic_error("hook product does not divide n! for " + lambda.to_string());
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
  return out;
}

HookProducts hook_products(const Partition& lambda, const AlphaParam& alpha) {
  HookProducts out{Rational(1), Rational(1)};
  const Rational& a = alpha.value();
  for (const auto& s : box_stats(lambda, alpha)) {
    const Rational base = a * s.arm + s.leg;
    out.c *= base + 1;
    out.c_prime *= base + a;
  }
  return out;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw std::invalid_argument("partition size must be non-negative");
  if (n == 0) {
    visit(Partition());
    return;
  }
  // Classic decreasing-lexicographic successor: strip trailing 1s, decrement
  // the last part > 1, and refill greedily with copies of the new value.
  std::vector<int> a{n};
  while (true) {
    visit(Partition(a));
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    const int v = --a.back();
    int rest = ones + 1;
    while (rest > v) {
      a.push_back(v);
      rest -= v;
    }
    if (rest > 0) a.push_back(rest);
  }
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace charlab
