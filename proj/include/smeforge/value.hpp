#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace smeforge {

// Scalar kinds carried on buses and in process variables. Arrays exist only
// as process-local variables and are described by ValueType::array_len.
enum class Kind : uint8_t { Bool, Unsigned, Signed };

struct ValueType {
  Kind kind = Kind::Unsigned;
  uint32_t width = 1;  // bit count, 1..64; bool is always width 1
  std::optional<uint32_t> array_len;  // set only for internal variable arrays

  static ValueType boolean() { return {Kind::Bool, 1, std::nullopt}; }
  static ValueType unsigned_(uint32_t w) { return {Kind::Unsigned, w, std::nullopt}; }
  static ValueType signed_(uint32_t w) { return {Kind::Signed, w, std::nullopt}; }

  ValueType array_of(uint32_t len) const {
    ValueType t = *this;
    t.array_len = len;
    return t;
  }
  ValueType element() const {
    ValueType t = *this;
    t.array_len.reset();
    return t;
  }

  bool is_array() const { return array_len.has_value(); }
  bool valid() const {
    if (width < 1 || width > 64) return false;
    if (kind == Kind::Bool && width != 1) return false;
    if (array_len && *array_len < 1) return false;
    return true;
  }
  bool same_scalar(const ValueType& o) const {
    return kind == o.kind && width == o.width;
  }
  friend bool operator==(const ValueType& a, const ValueType& b) {
    return a.kind == b.kind && a.width == b.width && a.array_len == b.array_len;
  }

  std::string to_string() const {
    std::string s;
    switch (kind) {
      case Kind::Bool: s = "bool"; break;
      case Kind::Unsigned: s = "u" + std::to_string(width); break;
      case Kind::Signed: s = "i" + std::to_string(width); break;
    }
    if (array_len) s += "[" + std::to_string(*array_len) + "]";
    return s;
  }
};

inline uint64_t width_mask(uint32_t width) {
  return width >= 64 ? ~uint64_t{0} : ((uint64_t{1} << width) - 1);
}

// A scalar runtime value. `bits` holds the raw pattern masked to the type
// width; signed values are two's complement within that width. `defined`
// is false only for fields that were never written and have no initial.
struct Value {
  ValueType type;
  uint64_t bits = 0;
  bool defined = false;

  static Value undefined(ValueType t) { return {t.element(), 0, false}; }
  static Value zero(ValueType t) { return {t.element(), 0, true}; }
  static Value boolean(bool b) { return {ValueType::boolean(), b ? 1u : 0u, true}; }
  static Value of(ValueType t, uint64_t raw) {
    return {t.element(), raw & width_mask(t.width), true};
  }
  static Value of_signed(ValueType t, int64_t v) {
    return {t.element(), static_cast<uint64_t>(v) & width_mask(t.width), true};
  }

  bool as_bool() const { return bits != 0; }
  uint64_t as_unsigned() const { return bits; }
  int64_t as_signed() const {
    if (type.width >= 64) return static_cast<int64_t>(bits);
    uint64_t sign = uint64_t{1} << (type.width - 1);
    return static_cast<int64_t>((bits ^ sign)) - static_cast<int64_t>(sign);
  }

  friend bool operator==(const Value& a, const Value& b) {
    return a.type == b.type && a.bits == b.bits && a.defined == b.defined;
  }
};

// Width-changing (and kind-changing) conversion. The value is first resized
// in its source kind (sign- or zero-extension, truncation), then the bits
// are reinterpreted in the target kind at the target width.
inline Value cast_value(const Value& v, ValueType target) {
  uint64_t raw;
  if (v.type.kind == Kind::Signed) {
    raw = static_cast<uint64_t>(v.as_signed());
  } else {
    raw = v.bits;
  }
  Value out;
  out.type = target.element();
  out.bits = raw & width_mask(target.width);
  out.defined = v.defined;
  return out;
}

}  // namespace smeforge
