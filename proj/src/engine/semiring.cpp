#include <algorithm>
#include <charconv>

#include "hgemb/engine.hpp"
#include "hgemb/errors.hpp"

namespace hgemb::engine {

Value Semiring::parse(std::string_view token) const {
  Value v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || token.empty()) {
    throw InputError("bad " + std::string(name()) + " value '" + std::string(token) + "'");
  }
  if (!contains(v)) throw InputError("value " + std::string(token) + " is outside the " + std::string(name()) + " semiring");
  return v;
}

std::string Semiring::format(Value v) const { return std::to_string(v); }

namespace {

Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceError("semiring sum overflows 64 bits");
  return out;
}

Value checked_mul(Value a, Value b) {
  Value out;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("semiring product overflows 64 bits");
  return out;
}

class BooleanSemiring final : public Semiring {
 public:
  std::string_view name() const override { return "boolean"; }
  Value zero() const override { return 0; }
  Value one() const override { return 1; }
  Value plus(Value a, Value b) const override { return a | b; }
  Value times(Value a, Value b) const override { return a & b; }
  bool contains(Value v) const override { return v == 0 || v == 1; }
  bool absorbs(Value v) const override { return v == 1; }
};

class CountingSemiring final : public Semiring {
 public:
  std::string_view name() const override { return "counting"; }
  Value zero() const override { return 0; }
  Value one() const override { return 1; }
  Value plus(Value a, Value b) const override { return checked_add(a, b); }
  Value times(Value a, Value b) const override { return checked_mul(a, b); }
  bool contains(Value v) const override { return v >= 0; }
};

class TropicalSemiring final : public Semiring {
 public:
  std::string_view name() const override { return "tropical"; }
  Value zero() const override { return kTropicalInfinity; }
  Value one() const override { return 0; }
  Value plus(Value a, Value b) const override { return std::min(a, b); }
  Value times(Value a, Value b) const override {
    if (a == kTropicalInfinity || b == kTropicalInfinity) return kTropicalInfinity;
    const Value out = checked_add(a, b);
    if (out == kTropicalInfinity) throw ResourceError("tropical product reaches the infinity sentinel");
    return out;
  }
  bool contains(Value) const override { return true; }
  Value parse(std::string_view token) const override {
    if (token == "inf") return kTropicalInfinity;
    return Semiring::parse(token);
  }
  std::string format(Value v) const override { return v == kTropicalInfinity ? "inf" : std::to_string(v); }
};

class MaxTimesSemiring final : public Semiring {
 public:
  std::string_view name() const override { return "max_times"; }
  Value zero() const override { return 0; }
  Value one() const override { return 1; }
  Value plus(Value a, Value b) const override { return std::max(a, b); }
  Value times(Value a, Value b) const override { return checked_mul(a, b); }
  bool contains(Value v) const override { return v >= 0; }
};

}  // namespace

const Semiring& boolean() {
  static const BooleanSemiring s;
  return s;
}

const Semiring& counting() {
  static const CountingSemiring s;
  return s;
}

const Semiring& tropical() {
  static const TropicalSemiring s;
  return s;
}

const Semiring& max_times() {
  static const MaxTimesSemiring s;
  return s;
}

const Semiring& semiring_by_name(std::string_view name) {
  for (const Semiring* s : {&boolean(), &counting(), &tropical(), &max_times()}) {
    if (s->name() == name) return *s;
  }
  throw InputError("unknown semiring '" + std::string(name) + "'");
}

}  // namespace hgemb::engine
