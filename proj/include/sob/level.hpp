#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace sob {

// Two-point security lattice. L is public, H is secret.
enum class Level : std::uint8_t { L = 0, H = 1 };

constexpr Level join(Level a, Level b) {
    return (a == Level::H || b == Level::H) ? Level::H : Level::L;
}

// a ⊑ b in the lattice order.
constexpr bool leq(Level a, Level b) {
    return a == Level::L || b == Level::H;
}

inline const char* to_string(Level l) { return l == Level::L ? "L" : "H"; }

// Stack of context security levels inside an object. Only H entries are
// ever pushed; an empty stack means the context is low.
class PcStack {
public:
    Level level() const { return depth_ == 0 ? Level::L : Level::H; }
    bool empty() const { return depth_ == 0; }
    std::size_t depth() const { return depth_; }

    void push_high() { ++depth_; }

    void pop() {
        assert(depth_ > 0 && "pc stack underflow");
        --depth_;
    }

    bool operator==(const PcStack&) const = default;

private:
    std::size_t depth_ = 0;
};

inline Level pc_level(const PcStack& s) { return s.level(); }

} // namespace sob
