#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sob/level.hpp"

namespace sob {

// Identity of a run-time object: class name plus per-class instance counter.
// Rendered "Proxy#1".
struct ObjectId {
    std::string cls;
    std::uint32_t n = 0;

    std::string text() const { return cls + "#" + std::to_string(n); }
    auto operator<=>(const ObjectId&) const = default;
};

// Identity of a future: creating object plus its invocation counter.
// Rendered "Service#1!1".
struct FutureId {
    ObjectId owner;
    std::uint32_t n = 0;

    std::string text() const { return owner.text() + "!" + std::to_string(n); }
    auto operator<=>(const FutureId&) const = default;
};

struct NullV {
    auto operator<=>(const NullV&) const = default;
};
struct VoidV {
    auto operator<=>(const VoidV&) const = default;
};
// The distinguished error value produced when a wrapper denies access.
struct ErrorV {
    auto operator<=>(const ErrorV&) const = default;
};

struct ListV;

using Value = std::variant<NullV, VoidV, ErrorV, std::int64_t, bool, std::string,
                           ObjectId, FutureId, std::shared_ptr<const ListV>>;

// Lists carry untagged elements; the enclosing TaggedValue's level is the
// join over the elements computed at construction.
struct ListV {
    std::vector<Value> elems;
};

bool value_equal(const Value& a, const Value& b);
std::string value_text(const Value& v);

// A runtime value paired with its security level.
struct TaggedValue {
    Value value;
    Level level = Level::L;

    std::string text() const { return value_text(value) + "_" + to_string(level); }
    bool operator==(const TaggedValue& o) const {
        return level == o.level && value_equal(value, o.value);
    }
};

inline TaggedValue tagged(Value v, Level l) { return TaggedValue{std::move(v), l}; }

} // namespace sob
