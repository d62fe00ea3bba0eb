#include "bifix/limits.hpp"

#include <cstdlib>
#include <string>

#include "bifix/errors.hpp"

namespace bifix {

Limits Limits::from_env() {
    Limits lim;
    if (const char* env = std::getenv("BIFIXLAB_MAX_MEM_MB")) {
        try {
            unsigned long long mb = std::stoull(env);
            lim.max_mem_bytes = mb * 1024ull * 1024ull;
        } catch (const std::exception&) {
            throw input_error("BIFIXLAB_MAX_MEM_MB is not a valid number: " +
                              std::string(env));
        }
    }
    return lim;
}

void Limits::check_states(std::size_t states, std::size_t bytes_per_state) const {
    if (states > max_states) {
        throw resource_error("state cap exceeded: " + std::to_string(states) +
                             " > " + std::to_string(max_states));
    }
    if (max_mem_bytes != 0 &&
        static_cast<std::uint64_t>(states) * bytes_per_state > max_mem_bytes) {
        throw resource_error("memory cap exceeded while expanding states");
    }
}

void Limits::check_elements(std::size_t elements, std::size_t bytes_per_element) const {
    if (elements > max_elements) {
        throw resource_error("element cap exceeded: " + std::to_string(elements) +
                             " > " + std::to_string(max_elements));
    }
    if (max_mem_bytes != 0 &&
        static_cast<std::uint64_t>(elements) * bytes_per_element > max_mem_bytes) {
        throw resource_error("memory cap exceeded while enumerating semigroup elements");
    }
}

} // namespace bifix
