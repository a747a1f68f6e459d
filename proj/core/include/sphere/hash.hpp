#pragma once

#include <cstdint>
#include <cstring>
#include <string_view>
#include <type_traits>

namespace sphere {

/// 64-bit FNV-1a. Used for content and config hashes in output metadata.
class Fnv1a {
  public:
    void add(const void* data, std::size_t size) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < size; ++i) {
            state_ ^= bytes[i];
            state_ *= 0x100000001b3ULL;
        }
    }

    void add(std::string_view s) { add(s.data(), s.size()); }

    template <typename T>
        requires std::is_trivially_copyable_v<T>
    void add_value(const T& value) {
        unsigned char buf[sizeof(T)];
        std::memcpy(buf, &value, sizeof(T));
        add(buf, sizeof(T));
    }

    std::uint64_t digest() const noexcept { return state_; }

  private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

inline std::uint64_t fnv1a(std::string_view s) {
    Fnv1a h;
    h.add(s);
    return h.digest();
}

}  // namespace sphere
