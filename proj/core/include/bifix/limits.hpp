#pragma once

#include <cstddef>
#include <cstdint>

namespace bifix {

/// Resource caps shared by the powerset and semigroup-closure engines.
///
/// `max_mem_bytes` == 0 means unlimited; it can be preseeded through the
/// BIFIXLAB_MAX_MEM_MB environment variable (see `from_env`).
struct Limits {
    std::size_t max_states = std::size_t{1} << 20;
    std::size_t max_elements = 5'000'000;
    std::uint64_t max_mem_bytes = 0;

    /// Defaults, with the memory cap taken from BIFIXLAB_MAX_MEM_MB if set.
    static Limits from_env();

    void check_states(std::size_t states, std::size_t bytes_per_state) const;
    void check_elements(std::size_t elements, std::size_t bytes_per_element) const;
};

} // namespace bifix
